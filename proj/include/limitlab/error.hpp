#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace limitlab {

/** Error with a stable machine-readable code ("size-violation", "budget-exceeded", ...). */
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

inline void require(bool ok, const char* code, const std::string& message) {
  if (!ok) throw Error(code, message);
}

// Largest graph any blow-up / materialization op will build unless overridden.
inline constexpr std::uint64_t kDefaultVertexBudget = 1'000'000;

// Search-node budget for witness searches (half-graphs, trees).
inline constexpr std::uint64_t kDefaultSearchBudget = 50'000'000;

}  // namespace limitlab
