#include "u35/hsgraph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "u35/errors.hpp"

namespace u35 {

int Graph::edge_count() const {
  int s = 0;
  for (int i = 0; i < n; ++i) s += degree(i);
  return s / 2;
}

Graph build_hs_graph() {
  Graph g;
  g.n = 50;
  auto P = [](int h, int i) { return 5 * h + i; };
  auto Q = [](int h, int j) { return 25 + 5 * h + j; };
  for (int h = 0; h < 5; ++h)
    for (int i = 0; i < 5; ++i) {
      g.add_edge(P(h, i), P(h, (i + 1) % 5));
      g.add_edge(Q(h, i), Q(h, (i + 2) % 5));
    }
  for (int h = 0; h < 5; ++h)
    for (int i = 0; i < 5; ++i)
      for (int k = 0; k < 5; ++k) g.add_edge(P(h, i), Q(k, (h * k + i) % 5));
  return g;
}

Graph petersen_graph() {
  // Vertices = 2-subsets of {0..4}, adjacent iff disjoint.
  std::vector<std::pair<int, int>> subsets;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) subsets.push_back({a, b});
  Graph g;
  g.n = 10;
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) {
      auto [a, b] = subsets[i];
      auto [c, d] = subsets[j];
      if (a != c && a != d && b != c && b != d) g.add_edge(i, j);
    }
  return g;
}

SrgCertificate verify_srg(const Graph& g, int v, int k, int lambda, int mu) {
  SrgCertificate c{v, k, lambda, mu};
  c.order_ok = (g.n == v);
  c.regular_ok = true;
  c.lambda_ok = true;
  c.mu_ok = true;
  if (!c.order_ok) {
    c.witness = {g.n, v};
    return c;
  }
  for (int i = 0; i < g.n && c.regular_ok; ++i)
    if (g.degree(i) != k) {
      c.regular_ok = false;
      c.witness = {i, i};
    }
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j) {
      int common = std::popcount(g.adj[i] & g.adj[j]);
      if (g.adjacent(i, j) ? common != lambda : common != mu) {
        (g.adjacent(i, j) ? c.lambda_ok : c.mu_ok) = false;
        if (!c.witness) c.witness = {i, j};
      }
    }
  return c;
}

namespace {

// Backtracking over vertex images with incremental candidate masks: cand[w]
// holds the possible images of w given the current partial map. Mapping v->y
// intersects every other candidate set with N(y) or its complement.
struct AutoSearch {
  const Graph& g;
  uint64_t all;
  std::vector<Permutation> found;

  explicit AutoSearch(const Graph& graph) : g(graph) {
    all = (graph.n == 64) ? ~uint64_t(0) : ((uint64_t(1) << graph.n) - 1);
  }

  void run() {
    std::array<uint64_t, kPoints> cand;
    for (int i = 0; i < g.n; ++i) {
      cand[i] = 0;
      for (int w = 0; w < g.n; ++w)
        if (g.degree(w) == g.degree(i)) cand[i] |= uint64_t(1) << w;
    }
    std::array<int8_t, kPoints> image;
    image.fill(-1);
    descend(cand, image, 0, all);
  }

  void descend(std::array<uint64_t, kPoints>& cand, std::array<int8_t, kPoints>& image,
               int mapped, uint64_t unused) {
    // Forced-assignment propagation, then branch on the tightest vertex.
    int best = -1, bestc = 1 << 20;
    for (int w = 0; w < g.n; ++w) {
      if (image[w] >= 0) continue;
      int c = std::popcount(cand[w] & unused);
      if (c == 0) return;
      if (c < bestc) {
        bestc = c;
        best = w;
      }
    }
    if (best < 0) {
      Permutation p = Permutation::identity();
      for (int w = 0; w < g.n; ++w) p.im[w] = static_cast<uint8_t>(image[w]);
      found.push_back(p);
      return;
    }
    uint64_t options = cand[best] & unused;
    while (options) {
      int y = std::countr_zero(options);
      options &= options - 1;
      auto saved = cand;
      image[best] = static_cast<int8_t>(y);
      for (int w = 0; w < g.n; ++w) {
        if (image[w] >= 0 || w == best) continue;
        cand[w] &= g.adjacent(best, w) ? g.adj[y] : ~g.adj[y];
      }
      descend(cand, image, mapped + 1, unused & ~(uint64_t(1) << y));
      image[best] = -1;
      cand = saved;
    }
  }
};

}  // namespace

std::vector<Permutation> all_automorphisms(const Graph& g) {
  AutoSearch s(g);
  s.run();
  std::sort(s.found.begin(), s.found.end());
  return s.found;
}

std::vector<Permutation> automorphism_group(const Graph& g) {
  std::vector<Permutation> autos = all_automorphisms(g);
  std::vector<Permutation> gens;
  EnumeratedGroup cur = enumerate_group({}, 1);
  for (const Permutation& a : autos) {
    if (cur.size() == autos.size()) break;
    if (a.is_identity() || cur.contains(a)) continue;
    gens.push_back(a);
    cur = enumerate_group(gens, autos.size());
  }
  if (gens.empty()) gens.push_back(Permutation::identity());
  return gens;
}

EnumeratedGroup derived_subgroup(const EnumeratedGroup& G) {
  std::vector<Permutation> seed;
  auto add_new = [&](const Permutation& p) {
    if (p.is_identity()) return;
    for (const Permutation& q : seed)
      if (q == p) return;
    seed.push_back(p);
  };
  for (const Permutation& a : G.generators())
    for (const Permutation& b : G.generators())
      add_new(compose(compose(inverse(a), inverse(b)), compose(a, b)));
  // Grow to the normal closure: commutator subgroup is normal, so keep
  // adjoining generator conjugates until the closure is conjugation-stable.
  while (true) {
    EnumeratedGroup D = enumerate_group(seed, G.size());
    bool stable = true;
    for (const Permutation& s : std::vector<Permutation>(seed))
      for (const Permutation& k : G.generators()) {
        Permutation c = conjugate(s, k);
        if (!D.contains(c)) {
          add_new(c);
          stable = false;
        }
      }
    if (stable) return D;
  }
}

Graph fixed_subgraph(const Permutation& t, const Graph& g) {
  std::vector<int> fixed;
  for (int i = 0; i < g.n; ++i)
    if (t.im[i] == i) fixed.push_back(i);
  Graph sub;
  sub.n = static_cast<int>(fixed.size());
  sub.labels = fixed;
  for (int a = 0; a < sub.n; ++a)
    for (int b = a + 1; b < sub.n; ++b)
      if (g.adjacent(fixed[a], fixed[b])) sub.add_edge(a, b);
  return sub;
}

std::string graph_json(const Graph& g) {
  std::ostringstream out;
  out << "{\"n\":" << g.n << ",\"adjacency\":[";
  for (int i = 0; i < g.n; ++i) {
    out << (i ? ",[" : "[");
    bool first = true;
    for (int j = 0; j < g.n; ++j)
      if (g.adjacent(i, j)) {
        out << (first ? "" : ",") << j;
        first = false;
      }
    out << "]";
  }
  out << "]}";
  return out.str();
}

}  // namespace u35
