#include "limitlab/limits.hpp"

#include <cmath>
#include <mutex>

#include "limitlab/error.hpp"

namespace limitlab {

namespace {

/** Shared memoized recursion; halved = true divides the prefactor by 2. */
const Rational& phi_memo(int n, bool halved) {
  static std::mutex mu;
  static std::vector<Rational> clique = {Rational(1), Rational(1)};
  static std::vector<Rational> anticlique = {Rational(1), Rational(1)};
  std::scoped_lock lock(mu);
  std::vector<Rational>& memo = halved ? anticlique : clique;
  while (static_cast<int>(memo.size()) <= n) {
    const int k = static_cast<int>(memo.size());
    Rational sum(0);
    for (int t = 1; t <= k - 1; ++t)
      sum += Rational(binomial(k, t)) * memo[t] * memo[k - t];
    BigInt denominator = (BigInt(1) << (2 * (k - 1))) - 1;  // 4^(k-1) - 1
    if (halved) denominator *= 2;
    memo.push_back(sum / Rational(denominator));
  }
  return memo[n];
}

}  // namespace

Rational phi_c4_clique(int n) {
  require(n >= 0, "bad-request", "clique size must be nonnegative");
  return phi_memo(n, false);
}

Rational phi_c4_anticlique(int n) {
  require(n >= 0, "bad-request", "anticlique size must be nonnegative");
  return phi_memo(n, true);
}

Rational permuton_agreement_density(int n) {
  require(n >= 0, "bad-request", "size must be nonnegative");
  return Rational(BigInt(1), factorial(n));
}

std::vector<double> root_decay(const std::vector<Rational>& values) {
  std::vector<double> out;
  out.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    require(values[i].sign() > 0, "bad-request",
            "root decay needs positive values");
    out.push_back(std::exp2(values[i].log2() / static_cast<double>(i + 1)));
  }
  return out;
}

}  // namespace limitlab
