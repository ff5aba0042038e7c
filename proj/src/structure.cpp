#include "limitlab/structure.hpp"

#include <algorithm>
#include <map>

namespace limitlab {

namespace {

/** Connected components of g restricted to `subset`, each sorted, ordered by
 *  least vertex. `flip` computes components of the complement instead. */
std::vector<std::vector<int>> components_within(const Graph& g,
                                                const std::vector<int>& subset,
                                                bool flip) {
  std::map<int, int> comp;  // vertex -> component id, iteration sorted
  for (int v : subset) comp[v] = -1;
  int next_id = 0;
  std::vector<std::vector<int>> out;
  for (int start : subset) {
    if (comp[start] != -1) continue;
    out.emplace_back();
    std::vector<int> stack = {start};
    comp[start] = next_id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[next_id].push_back(v);
      for (int u : subset) {
        if (comp[u] != -1) continue;
        if (g.adjacent(v, u) != flip) {
          comp[u] = next_id;
          stack.push_back(u);
        }
      }
    }
    std::sort(out[next_id].begin(), out[next_id].end());
    ++next_id;
  }
  return out;
}

/**
 * Smallest module of g[subset] containing both v and u: grow from {v,u} by
 * repeatedly absorbing every outside vertex that distinguishes two members
 * (is adjacent to one but not the other), until no splitter remains.
 */
std::vector<int> module_closure(const Graph& g, const std::vector<int>& subset,
                                int v, int u) {
  std::vector<char> in(g.n(), 0);
  std::vector<int> members = {v, u};
  in[v] = in[u] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int w : subset) {
      if (in[w]) continue;
      bool saw_edge = false, saw_nonedge = false;
      for (int m : members) {
        (g.adjacent(w, m) ? saw_edge : saw_nonedge) = true;
        if (saw_edge && saw_nonedge) break;
      }
      if (saw_edge && saw_nonedge) {
        in[w] = 1;
        members.push_back(w);
        grew = true;
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

CographTree decompose(const Graph& g, const std::vector<int>& subset) {
  CographTree node;
  if (subset.empty()) {
    node.kind = CographTree::Kind::parallel;
    return node;
  }
  if (subset.size() == 1) {
    node.kind = CographTree::Kind::leaf;
    node.vertex = subset[0];
    return node;
  }
  std::vector<std::vector<int>> parts = components_within(g, subset, false);
  if (parts.size() > 1) {
    node.kind = CographTree::Kind::parallel;
  } else {
    parts = components_within(g, subset, true);
    if (parts.size() > 1) {
      node.kind = CographTree::Kind::series;
    } else {
      // Both g[subset] and its complement are connected: the maximal proper
      // strong modules partition the subset; each is the union of the proper
      // pairwise closures through its vertex (empty union = singleton).
      node.kind = CographTree::Kind::prime;
      parts.clear();
      std::vector<char> assigned(g.n(), 0);
      for (int v : subset) {
        if (assigned[v]) continue;
        std::vector<char> in_class(g.n(), 0);
        in_class[v] = 1;
        for (int u : subset) {
          if (u == v || in_class[u]) continue;
          std::vector<int> closure = module_closure(g, subset, v, u);
          if (closure.size() < subset.size())
            for (int w : closure) in_class[w] = 1;
        }
        std::vector<int> cls;
        for (int w : subset)
          if (in_class[w]) {
            cls.push_back(w);
            assigned[w] = 1;
          }
        parts.push_back(std::move(cls));
      }
      Graph q(static_cast<int>(parts.size()));
      for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
          if (g.adjacent(parts[i][0], parts[j][0]))
            q.add_edge(static_cast<int>(i), static_cast<int>(j));
      node.quotient = q;
    }
  }
  for (const std::vector<int>& part : parts) {
    node.children.push_back(decompose(g, part));
    node.modules.push_back(part);
  }
  return node;
}

void collect_leaves(const CographTree& t, std::vector<int>& out) {
  if (t.kind == CographTree::Kind::leaf) {
    out.push_back(t.vertex);
    return;
  }
  for (const CographTree& c : t.children) collect_leaves(c, out);
}

void add_tree_edges(const CographTree& t, Graph& g) {
  if (t.kind == CographTree::Kind::leaf) return;
  std::vector<std::vector<int>> parts;
  for (const CographTree& c : t.children) {
    add_tree_edges(c, g);
    parts.emplace_back();
    collect_leaves(c, parts.back());
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      const bool cross =
          t.kind == CographTree::Kind::series ||
          (t.kind == CographTree::Kind::prime &&
           t.quotient.adjacent(static_cast<int>(i), static_cast<int>(j)));
      if (!cross) continue;
      for (int u : parts[i])
        for (int v : parts[j]) g.add_edge(u, v);
    }
  }
}

}  // namespace

CographTree modular_decomposition(const Graph& g) {
  std::vector<int> all(g.n());
  for (int v = 0; v < g.n(); ++v) all[v] = v;
  return decompose(g, all);
}

Graph evaluate_cograph_tree(const CographTree& t, int n) {
  Graph g(n);
  add_tree_edges(t, g);
  return g;
}

bool has_prime_node(const CographTree& t) {
  if (t.kind == CographTree::Kind::prime) return true;
  for (const CographTree& c : t.children)
    if (has_prime_node(c)) return true;
  return false;
}

CcMembership is_in_cc(const Graph& g) {
  CcMembership out;
  out.certificate = modular_decomposition(g);
  out.member = !has_prime_node(out.certificate);
  return out;
}

Graph substitute(const Graph& g, int v, const Graph& f) {
  require(v >= 0 && v < g.n(), "invalid-vertex",
          "substitution target out of range");
  const int n = g.n(), m = f.n();
  // Old vertex u maps to u (u < v) or u + m - 1 (u > v); the module is v..v+m-1.
  auto map_old = [&](int u) { return u < v ? u : u + m - 1; };
  Graph out(n + m - 1);
  for (auto [a, b] : g.edges()) {
    if (a == v || b == v) continue;
    out.add_edge(map_old(a), map_old(b));
  }
  for (auto [a, b] : f.edges()) out.add_edge(v + a, v + b);
  for (int u = 0; u < n; ++u) {
    if (u == v || !g.adjacent(u, v)) continue;
    for (int w = 0; w < m; ++w) out.add_edge(map_old(u), v + w);
  }
  return out;
}

std::vector<std::string> blowup_labels(int base, int level) {
  std::vector<std::string> out;
  if (level == 0) {
    out.emplace_back();
    return out;
  }
  if (base == 0) return out;
  std::string cur(level, '1');
  std::vector<int> digits(level, 0);
  while (true) {
    for (int i = 0; i < level; ++i) cur[i] = static_cast<char>('1' + digits[i]);
    out.push_back(cur);
    int pos = level - 1;
    while (pos >= 0 && ++digits[pos] == base) digits[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

Graph recursive_blowup(const Graph& g, int level, std::uint64_t vertex_budget) {
  require(level >= 0, "bad-request", "blow-up level must be nonnegative");
  const int k = g.n();
  std::uint64_t count = 1;
  for (int i = 0; i < level; ++i) {
    count *= static_cast<std::uint64_t>(k);
    require(count <= vertex_budget, "budget-exceeded",
            "blow-up exceeds the vertex budget");
    if (count == 0) break;
  }
  const long long n = static_cast<long long>(count);
  Graph out(static_cast<int>(n));
  if (level == 0 || k == 0) return out;
  // Digits of vertex index (base k, most significant first) are its string.
  std::vector<long long> pow(level + 1, 1);
  for (int i = 1; i <= level; ++i) pow[i] = pow[i - 1] * k;
  for (long long u = 0; u < n; ++u) {
    for (long long v = u + 1; v < n; ++v) {
      int a = -1, b = -1;
      for (int i = level - 1; i >= 0; --i) {
        a = static_cast<int>((u / pow[i]) % k);
        b = static_cast<int>((v / pow[i]) % k);
        if (a != b) break;
      }
      if (g.adjacent(a, b))
        out.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
  }
  return out;
}

Graph clique_empty_halfgraph(int n) {
  require(n >= 1, "bad-request", "half-graph order must be at least 1");
  Graph g(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) g.add_edge(i - 1, n + j - 1);
  return g;
}

namespace {

struct PartialEmbedding {
  int len = 0;
  std::vector<std::pair<int, std::string>> labels;  // (vertex, label)
};

void place_block(PartialEmbedding& out, const PartialEmbedding& block,
                 char digit, int total_len) {
  for (const auto& [v, lab] : block.labels) {
    std::string s(1, digit);
    s += lab;
    s.append(static_cast<std::size_t>(total_len - 1) - lab.size(), '1');
    out.labels.emplace_back(v, s);
  }
}

PartialEmbedding fold(const CographTree& node);

/** Balanced binary fold of children [lo, hi); `series` picks the digit pair. */
PartialEmbedding fold_range(const CographTree& node, std::size_t lo,
                            std::size_t hi, bool series) {
  if (hi - lo == 1) return fold(node.children[lo]);
  const std::size_t mid = lo + (hi - lo) / 2;
  PartialEmbedding a = fold_range(node, lo, mid, series);
  PartialEmbedding b = fold_range(node, mid, hi, series);
  PartialEmbedding out;
  out.len = 1 + std::max(a.len, b.len);
  place_block(out, a, '1', out.len);
  place_block(out, b, series ? '2' : '3', out.len);
  return out;
}

PartialEmbedding fold(const CographTree& node) {
  PartialEmbedding out;
  if (node.kind == CographTree::Kind::leaf) {
    out.labels.emplace_back(node.vertex, std::string());
    return out;
  }
  const bool series = node.kind == CographTree::Kind::series;
  // A series of two 2-child parallel nodes is a 4-cycle of blocks: place the
  // four grandchildren directly on coordinates 1,3 (first side) and 2,4.
  if (series && node.children.size() == 2 &&
      node.children[0].kind == CographTree::Kind::parallel &&
      node.children[1].kind == CographTree::Kind::parallel &&
      node.children[0].children.size() == 2 &&
      node.children[1].children.size() == 2) {
    PartialEmbedding blocks[4] = {
        fold(node.children[0].children[0]), fold(node.children[0].children[1]),
        fold(node.children[1].children[0]), fold(node.children[1].children[1])};
    const char digits[4] = {'1', '3', '2', '4'};
    out.len = 1 + std::max(std::max(blocks[0].len, blocks[1].len),
                           std::max(blocks[2].len, blocks[3].len));
    for (int i = 0; i < 4; ++i) place_block(out, blocks[i], digits[i], out.len);
    return out;
  }
  return fold_range(node, 0, node.children.size(), series);
}

}  // namespace

C4Embedding embed_into_c4(const Graph& g) {
  CcMembership m = is_in_cc(g);
  require(m.member, "not-a-member",
          "graph has a prime module and embeds into no recursive 4-cycle blow-up");
  C4Embedding e;
  if (g.n() == 0) return e;
  PartialEmbedding folded = fold(m.certificate);
  e.height = folded.len;
  e.labels.assign(g.n(), std::string());
  for (const auto& [v, lab] : folded.labels) e.labels[v] = lab;
  return e;
}

bool verify_embedding(const Graph& g, const C4Embedding& e) {
  if (static_cast<int>(e.labels.size()) != g.n()) return false;
  if (e.height < 0) return false;
  for (const std::string& s : e.labels) {
    if (static_cast<int>(s.size()) != e.height) return false;
    for (char c : s)
      if (c < '1' || c > '4') return false;
  }
  for (int u = 0; u < g.n(); ++u) {
    for (int v = u + 1; v < g.n(); ++v) {
      const std::string& a = e.labels[u];
      const std::string& b = e.labels[v];
      int diff = -1;
      for (int i = 0; i < e.height; ++i)
        if (a[i] != b[i]) {
          diff = i;
          break;
        }
      if (diff < 0) return false;  // labels must be pairwise distinct
      const int delta = ((a[diff] - b[diff]) % 4 + 4) % 4;
      const bool rule_adjacent = delta == 1 || delta == 3;
      if (rule_adjacent != g.adjacent(u, v)) return false;
    }
  }
  return true;
}

}  // namespace limitlab
