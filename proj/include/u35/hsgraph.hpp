#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "u35/group.hpp"
#include "u35/permutation.hpp"

namespace u35 {

// Undirected graph on at most 50 vertices, one adjacency bitmask per row.
struct Graph {
  int n = 0;
  std::array<uint64_t, kPoints> adj{};
  // Original vertex labels when this graph was induced from a larger one.
  std::vector<int> labels;

  bool adjacent(int i, int j) const { return (adj[i] >> j) & 1; }
  void add_edge(int i, int j) {
    adj[i] |= uint64_t(1) << j;
    adj[j] |= uint64_t(1) << i;
  }
  int degree(int i) const { return std::popcount(adj[i]); }
  int edge_count() const;
};

struct SrgCertificate {
  int v, k, lambda, mu;
  bool order_ok = false;
  bool regular_ok = false;
  bool lambda_ok = false;
  bool mu_ok = false;
  // First offending vertex pair, when a condition fails.
  std::optional<std::pair<int, int>> witness;

  bool pass() const { return order_ok && regular_ok && lambda_ok && mu_ok; }
};

// Pentagon-pentagram model: vertices P(h,i) = 5h+i and Q(h,j) = 25+5h+j for
// h,i,j in Z5, with P(h,i)~P(h,i+-1), Q(h,j)~Q(h,j+-2), and P(h,i)~Q(k,j)
// iff j = h*k+i (mod 5). The contract is the SRG certificate, not the recipe.
Graph build_hs_graph();

// Kneser graph on the 2-subsets of {0..4}; classical SRG(10,3,0,1) fixture.
Graph petersen_graph();

// Exhaustive check of strong regularity over all vertex pairs.
SrgCertificate verify_srg(const Graph& g, int v, int k, int lambda, int mu);

// Every automorphism of g, sorted lexicographically by image array (the
// identity comes first). Vertices >= g.n are fixed.
std::vector<Permutation> all_automorphisms(const Graph& g);

// A reduced generator list: automorphisms from all_automorphisms added
// greedily while they enlarge the closure.
std::vector<Permutation> automorphism_group(const Graph& g);

// Closure of the commutators of the generators (normal closure); for a group
// G with G/[G,G] small this is cheap and exact.
EnumeratedGroup derived_subgroup(const EnumeratedGroup& G);

// Induced subgraph on the fixed vertices of t; labels record the original
// vertex numbers.
Graph fixed_subgraph(const Permutation& t, const Graph& g);

// Sorted adjacency lists, as a JSON text.
std::string graph_json(const Graph& g);

}  // namespace u35
