#include "limitlab/graphon.hpp"

#include <string>

namespace limitlab {

void StepGraphon::validate() const {
  const int m = part_count();
  require(m > 0, "bad-request", "graphon needs at least one part");
  Rational total(0);
  for (const Rational& p : parts) {
    require(p.sign() > 0, "bad-request", "part weights must be positive");
    total += p;
  }
  require(total == Rational(1), "bad-request", "part weights must sum to 1");
  require(static_cast<int>(values.size()) == m, "bad-request",
          "value matrix must be square in the part count");
  for (const auto& row : values)
    require(static_cast<int>(row.size()) == m, "bad-request",
            "value matrix must be square in the part count");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      require(values[i][j] == values[j][i], "bad-request",
              "value matrix must be symmetric");
      require(values[i][j].sign() >= 0 && values[i][j] <= Rational(1),
              "bad-request", "values must lie in [0,1]");
    }
}

StepGraphon constant_graphon(const Rational& p) {
  require(p.sign() >= 0 && p <= Rational(1), "bad-request",
          "edge probability must lie in [0,1]");
  StepGraphon w;
  w.parts = {Rational(1)};
  w.values = {{p}};
  return w;
}

namespace {

/** DFS over part assignments with running products; zero products prune. */
void tind_descend(const Graph& g, const StepGraphon& w, int vertex,
                  std::vector<int>& part_of, const Rational& product,
                  Rational& total) {
  if (vertex == g.n()) {
    total += product;
    return;
  }
  const int m = w.part_count();
  for (int p = 0; p < m; ++p) {
    Rational branch = product * w.parts[p];
    for (int u = 0; u < vertex && !branch.is_zero(); ++u) {
      const Rational& block = w.values[part_of[u]][p];
      branch *= g.adjacent(u, vertex) ? block : Rational(1) - block;
    }
    if (branch.is_zero()) continue;
    part_of[vertex] = p;
    tind_descend(g, w, vertex + 1, part_of, branch, total);
  }
}

}  // namespace

Rational tind_graphon(const Graph& pattern, const StepGraphon& w) {
  w.validate();
  if (pattern.n() == 0) return Rational(1);
  std::vector<int> part_of(pattern.n(), -1);
  Rational total(0);
  tind_descend(pattern, w, 0, part_of, Rational(1), total);
  return total;
}

StepGraphon rescale_subgraphon(const StepGraphon& w, const WeightFunction& f) {
  w.validate();
  require(f.weights.size() == w.parts.size(), "bad-request",
          "weight function must assign one weight per part");
  Rational c(0);
  for (std::size_t i = 0; i < w.parts.size(); ++i) {
    require(f.weights[i].sign() >= 0 && f.weights[i] <= Rational(1),
            "bad-request", "weights must lie in [0,1]");
    c += w.parts[i] * f.weights[i];
  }
  require(!c.is_zero(), "bad-request",
          "weight function must give positive total mass");
  StepGraphon out;
  std::vector<int> kept;
  for (std::size_t i = 0; i < w.parts.size(); ++i) {
    Rational mass = w.parts[i] * f.weights[i];
    if (mass.is_zero()) continue;
    kept.push_back(static_cast<int>(i));
    out.parts.push_back(mass / c);
  }
  out.values.assign(kept.size(), std::vector<Rational>(kept.size()));
  for (std::size_t a = 0; a < kept.size(); ++a)
    for (std::size_t b = 0; b < kept.size(); ++b)
      out.values[a][b] = w.values[kept[a]][kept[b]];
  return out;
}

StepGraphon c4_step_approx(int level, std::uint64_t part_budget) {
  require(level >= 1, "bad-request", "approximation level must be at least 1");
  std::uint64_t m = 1;
  for (int i = 0; i < level; ++i) {
    m *= 4;
    require(m <= part_budget, "budget-exceeded",
            "part count 4^level exceeds the budget");
  }
  const int parts = static_cast<int>(m);
  StepGraphon w;
  w.parts.assign(parts, Rational(BigInt(1), BigInt(parts)));
  w.values.assign(parts, std::vector<Rational>(parts));
  const Rational half(BigInt(1), BigInt(2));
  for (int u = 0; u < parts; ++u) {
    w.values[u][u] = half;
    for (int v = u + 1; v < parts; ++v) {
      int a = 0, b = 0;
      for (int i = level - 1; i >= 0; --i) {
        a = (u >> (2 * i)) & 3;
        b = (v >> (2 * i)) & 3;
        if (a != b) break;
      }
      const int delta = (a - b + 4) & 3;
      const Rational val(delta == 1 || delta == 3 ? 1 : 0);
      w.values[u][v] = val;
      w.values[v][u] = val;
    }
  }
  return w;
}

StepGraphon half_graphon_step(int k) {
  require(k >= 1, "bad-request", "half-graphon step count must be at least 1");
  const int m = 2 * k;
  StepGraphon w;
  w.parts.assign(m, Rational(BigInt(1), BigInt(m)));
  w.values.assign(m, std::vector<Rational>(m, Rational(0)));
  for (int i = 1; i <= k; ++i)
    for (int j = i; j <= k; ++j) {
      w.values[i - 1][k + j - 1] = Rational(1);
      w.values[k + j - 1][i - 1] = Rational(1);
    }
  return w;
}

StepGraphon refine_halves(const StepGraphon& w) {
  w.validate();
  const int m = w.part_count();
  StepGraphon out;
  out.parts.resize(2 * m);
  out.values.assign(2 * m, std::vector<Rational>(2 * m));
  const Rational half(BigInt(1), BigInt(2));
  for (int i = 0; i < m; ++i) {
    out.parts[2 * i] = w.parts[i] * half;
    out.parts[2 * i + 1] = w.parts[i] * half;
  }
  for (int i = 0; i < 2 * m; ++i)
    for (int j = 0; j < 2 * m; ++j) out.values[i][j] = w.values[i / 2][j / 2];
  return out;
}

}  // namespace limitlab
