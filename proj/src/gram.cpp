#include "u35/gram.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <thread>

#include "u35/errors.hpp"

namespace u35 {

namespace {

void parallel_rows(int begin, int end, int threads, const std::function<void(int)>& fn) {
  if (threads <= 1 || end - begin < 48) {
    for (int i = begin; i < end; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (int i = begin + t; i < end; i += threads) fn(i);
    });
  for (auto& th : pool) th.join();
}

uint64_t mod_pow(uint64_t b, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

bool normalizes_subgroup(const Permutation& h, const Permutation& gen3) {
  Permutation c = conjugate(gen3, h);
  return c == gen3 || c == compose(gen3, gen3);
}

bool inverts(const Permutation& h, const Permutation& gen3) {
  return conjugate(gen3, h) == compose(gen3, gen3);
}

}  // namespace

GramMatrix assemble_gram(const EnumeratedGroup& G, const AxisTables& axes,
                         const Classification& cls, const std::array<Rat, 7>& mm_inner,
                         bool include_3a) {
  GramMatrix M;
  M.n_major = axes.involutions();
  M.with_3a = include_3a;
  M.n = include_3a ? M.n_major + axes.subgroups3() : M.n_major;

  auto add_class = [&](const std::string& label, const Rat& v, bool x) {
    GramMatrix::EntryClass c;
    c.label = label;
    c.value = v;
    c.scaled = x ? 0 : rat_scaled(v, GramMatrix::kScale);
    c.x = x;
    M.classes.push_back(c);
    return static_cast<uint8_t>(M.classes.size() - 1);
  };

  const uint8_t diag_code = add_class("majorana-diagonal", Rat(1), false);
  std::array<uint8_t, 7> mm_code{};
  for (int d = 2; d <= 6; ++d)
    mm_code[d] = add_class("order" + std::to_string(d), mm_inner[d], false);
  std::array<uint8_t, kT5Rows> t5_code{};
  for (int r = 0; r < kT5Rows; ++r)
    t5_code[r] = add_class(t5_label(static_cast<T5Row>(r)), t5_value(static_cast<T5Row>(r)),
                           false);
  std::array<uint8_t, kT6Rows> t6_code{};
  for (int r = 0; r < kT6Rows; ++r) {
    T6Row row = static_cast<T6Row>(r);
    t6_code[r] = add_class(t6_label(row), t6_value(row), t6_is_unknown(row));
  }

  M.code.assign(size_t(M.n) * M.n, 0);
  auto put = [&](int i, int j, uint8_t c) {
    M.code[size_t(i) * M.n + j] = c;
    M.code[size_t(j) * M.n + i] = c;
  };

  const int nm = M.n_major;
  for (int i = 0; i < nm; ++i) {
    put(i, i, diag_code);
    const Permutation& ti = axes.inv_perm(i);
    for (int j = i + 1; j < nm; ++j) {
      int d = perm_order(compose(ti, axes.inv_perm(j)));
      if (d < 2 || d > 6) throw ClassificationError("involution product of order " + std::to_string(d));
      put(i, j, mm_code[d]);
    }
  }
  if (!include_3a) return M;

  for (int s = 0; s < axes.subgroups3(); ++s) {
    const Permutation& g = cls.tr.for_sub[s];
    const int col = M.key_of_sub(s);
    put(col, col, t6_code[static_cast<int>(T6Row::C3)]);
    for (int i = 0; i < nm; ++i)
      put(i, col, t5_code[cls.t_row[axes.transport_inv(i, g)]]);
    for (int s2 = s + 1; s2 < axes.subgroups3(); ++s2)
      put(col, M.key_of_sub(s2), t6_code[cls.s_row[axes.transport_sub(s2, g)]]);
  }
  return M;
}

int modular_rank(int nrows, int ncols, uint64_t p,
                 const std::function<int64_t(int, int)>& entry) {
  if (p >= (uint64_t(1) << 21) || p < 7)
    throw std::invalid_argument("prime must lie in [7, 2^21) for delayed reduction");
  if (nrows > 4096 || ncols > 4096)
    throw std::invalid_argument("matrix too large for the delayed-reduction bound");
  std::vector<uint64_t> data(size_t(nrows) * ncols);
  std::vector<uint64_t*> row(nrows);
  for (int i = 0; i < nrows; ++i) {
    row[i] = data.data() + size_t(i) * ncols;
    for (int j = 0; j < ncols; ++j) {
      int64_t v = entry(i, j) % static_cast<int64_t>(p);
      row[i][j] = static_cast<uint64_t>(v < 0 ? v + static_cast<int64_t>(p) : v);
    }
  }
  int rank = 0;
  for (int col = 0; col < ncols && rank < nrows; ++col) {
    int pr = -1;
    for (int r = rank; r < nrows; ++r)
      if (row[r][col] % p != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(row[rank], row[pr]);
    uint64_t* prow = row[rank];
    uint64_t inv = mod_pow(prow[col] % p, p - 2, p);
    for (int j = col; j < ncols; ++j) prow[j] = (prow[j] % p) * inv % p;
    for (int r = rank + 1; r < nrows; ++r) {
      uint64_t f = row[r][col] % p;
      if (!f) continue;
      uint64_t fc = p - f;
      uint64_t* R = row[r];
      for (int j = col + 1; j < ncols; ++j) R[j] += fc * prow[j];
    }
    ++rank;
  }
  return rank;
}

int rank_mod_p(const GramMatrix& M, const Rat& x, uint64_t p) {
  std::vector<int> keys(M.n);
  for (int i = 0; i < M.n; ++i) keys[i] = i;
  return rank_mod_p_subset(M, x, p, keys);
}

int rank_mod_p_subset(const GramMatrix& M, const Rat& x, uint64_t p,
                      const std::vector<int>& keys) {
  const int64_t xs = rat_scaled(x, GramMatrix::kScale);
  const int n = static_cast<int>(keys.size());
  return modular_rank(n, n, p, [&](int i, int j) { return M.scaled_at(keys[i], keys[j], xs); });
}

int bareiss_rank(int nrows, int ncols, const std::function<Int(int, int)>& entry,
                 int threads) {
  std::vector<std::vector<Int>> m(nrows, std::vector<Int>(ncols));
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) m[i][j] = entry(i, j);
  Int prev = 1;
  int rank = 0;
  for (int col = 0; col < ncols && rank < nrows; ++col) {
    int pr = -1;
    for (int r = rank; r < nrows; ++r)
      if (m[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[rank], m[pr]);
    const std::vector<Int>& prow = m[rank];
    const Int piv = prow[col];
    parallel_rows(rank + 1, nrows, threads, [&](int r) {
      std::vector<Int>& R = m[r];
      const Int f = R[col];
      for (int j = col + 1; j < ncols; ++j) R[j] = (R[j] * piv - f * prow[j]) / prev;
      R[col] = 0;
    });
    prev = piv;
    ++rank;
    m[rank - 1] = std::vector<Int>();  // pivot row is dead after this step
  }
  return rank;
}

PdResult bareiss_positive_definite(int n, const std::function<Int(int, int)>& entry,
                                   int threads) {
  // upper triangle only; a symmetric matrix stays symmetric under the
  // pivot-free fraction-free step
  std::vector<std::vector<Int>> m(n);
  for (int i = 0; i < n; ++i) {
    m[i].resize(n - i);
    for (int j = i; j < n; ++j) m[i][j - i] = entry(i, j);
  }
  PdResult result;
  Int prev = 1;
  for (int k = 0; k < n; ++k) {
    const Int piv = m[k][0];
    if (piv <= 0) return result;  // k-th leading minor not positive
    const std::vector<Int>& prow = m[k];
    parallel_rows(k + 1, n, threads, [&](int i) {
      std::vector<Int>& R = m[i];
      const Int f = prow[i - k];
      for (int j = i; j < n; ++j) R[j - i] = (R[j - i] * piv - f * prow[j - k]) / prev;
    });
    prev = piv;
    result.pivots_done = k + 1;
    m[k] = std::vector<Int>();
  }
  result.pd = true;
  return result;
}

int rank_exact_subset(const GramMatrix& M, const Rat& x, const std::vector<int>& keys,
                      int threads) {
  const int64_t xs = rat_scaled(x, GramMatrix::kScale);
  const int n = static_cast<int>(keys.size());
  return bareiss_rank(n, n,
                      [&](int i, int j) { return Int(M.scaled_at(keys[i], keys[j], xs)); },
                      threads);
}

std::vector<SylowInfo> sylow3_subgroups(const EnumeratedGroup& G, const AxisTables& axes,
                                        const Classification& cls) {
  const int ns = axes.subgroups3();
  std::map<std::array<int, 4>, int> seen;
  std::vector<SylowInfo> sylows;
  std::vector<int> partner_count(ns, 0);
  for (int s1 = 0; s1 < ns; ++s1)
    for (int s2 = s1 + 1; s2 < ns; ++s2) {
      if (cls.row_rho_sigma(s1, s2) != T6Row::C3xC3) continue;
      ++partner_count[s1];
      ++partner_count[s2];
      SubgroupHandle H = subgroup_closure({axes.sub_gen(s1), axes.sub_gen(s2)}, 10, G);
      if (H.order() != 9) throw ClassificationError("3x3 pair closure of order != 9");
      std::array<int, 4> subs;
      int found = 0;
      for (const Permutation& e : H.elems) {
        if (perm_order(e) != 3) continue;
        int id = axes.sub_id[G.index_of(e)];
        bool dup = false;
        for (int k = 0; k < found; ++k) dup |= (subs[k] == id);
        if (!dup) {
          if (found == 4) throw ClassificationError("more than four order-3 subgroups in a 3x3");
          subs[found++] = id;
        }
      }
      if (found != 4) throw ClassificationError("expected four order-3 subgroups in a 3x3");
      std::sort(subs.begin(), subs.end());
      if (!seen.count(subs)) {
        seen[subs] = static_cast<int>(sylows.size());
        SylowInfo info;
        info.subs = subs;
        sylows.push_back(info);
      }
    }
  for (int s = 0; s < ns; ++s)
    if (partner_count[s] != 12)
      throw ClassificationError("subgroup has " + std::to_string(partner_count[s]) +
                                " elementary-abelian partners, expected 12");

  // involutions inverting the whole 3^2: inverting both generators suffices
  for (SylowInfo& sy : sylows) {
    const Permutation a = axes.sub_gen(sy.subs[0]);
    const Permutation b = axes.sub_gen(sy.subs[1]);
    for (int inv = 0; inv < axes.involutions(); ++inv) {
      const Permutation& t = axes.inv_perm(inv);
      if (inverts(t, a) && inverts(t, b)) sy.inverting.push_back(inv);
    }
    if (!sy.inverting.empty() && sy.inverting.size() != 9)
      throw ClassificationError("3^2 subgroup with " + std::to_string(sy.inverting.size()) +
                                " inverting involutions");
    for (int inv : sy.inverting)
      for (int k = 0; k < 4; ++k)
        if (!inverts(axes.inv_perm(inv), axes.sub_gen(sy.subs[k])))
          throw ClassificationError("inverting involution fails on a subgroup generator");
  }
  return sylows;
}

std::vector<RelationVector> pasechnik_vectors(const EnumeratedGroup& G, const AxisTables& axes,
                                              const Classification& cls) {
  std::vector<RelationVector> rels;
  for (const SylowInfo& sy : sylow3_subgroups(G, axes, cls)) {
    if (sy.inverting.empty()) continue;
    RelationVector r;
    r.subs = sy.subs;
    for (int k = 0; k < 9; ++k) r.invs[k] = sy.inverting[k];
    rels.push_back(r);
  }
  return rels;
}

Rat solve_x(const GramMatrix& M, const std::vector<RelationVector>& rels) {
  if (!M.with_3a) throw std::invalid_argument("solve_x needs the 3A block");
  if (rels.empty()) throw std::invalid_argument("solve_x needs at least one relation");
  bool constrained = false;
  Rat x;
  for (const RelationVector& r : rels)
    for (int c = 0; c < M.n; ++c) {
      int64_t a = 0, b = 0;
      r.for_each_term(M, [&](int key, int64_t coef) {
        const GramMatrix::EntryClass& e = M.classes[M.code_at(key, c)];
        if (e.x)
          b += coef;
        else
          a += coef * e.scaled;
      });
      if (b != 0) {
        Rat root(-Int(a), Int(b) * GramMatrix::kScale);
        if (!constrained) {
          x = root;
          constrained = true;
        } else if (root != x) {
          throw DataError("inconsistent system: relation columns disagree on x");
        }
      } else if (a != 0) {
        throw DataError("inconsistent system: x-free pairing does not vanish");
      }
    }
  if (!constrained) throw DataError("x unconstrained: no relation meets a generating pair");
  return x;
}

int64_t relation_norm_scaled(const GramMatrix& M, int64_t x_scaled, const RelationVector& r) {
  int64_t norm = 0;
  r.for_each_term(M, [&](int k1, int64_t c1) {
    r.for_each_term(M, [&](int k2, int64_t c2) {
      norm += c1 * c2 * M.scaled_at(k1, k2, x_scaled);
    });
  });
  return norm;
}

bool relations_vanish(const GramMatrix& M, const Rat& x,
                      const std::vector<RelationVector>& rels) {
  const int64_t xs = rat_scaled(x, GramMatrix::kScale);
  for (const RelationVector& r : rels) {
    if (relation_norm_scaled(M, xs, r) != 0) return false;
    for (int c = 0; c < M.n; ++c) {
      int64_t sum = 0;
      r.for_each_term(M, [&](int key, int64_t coef) { sum += coef * M.scaled_at(key, c, xs); });
      if (sum != 0) return false;
    }
  }
  return true;
}

std::vector<int> OrbitDecomposition::members() const {
  std::vector<int> all;
  for (const auto& o : orbits) all.insert(all.end(), o.begin(), o.end());
  std::sort(all.begin(), all.end());
  return all;
}

OrbitDecomposition gamma_minus_orbits(const EnumeratedGroup& G, const AxisTables& axes,
                                      const Classification& cls, int base_sub) {
  OrbitDecomposition out;
  out.base_sub = base_sub;
  std::vector<int> gamma;
  for (int s = 0; s < axes.subgroups3(); ++s)
    if (cls.row_rho_sigma(base_sub, s) == T6Row::U35) gamma.push_back(s);
  if (gamma.size() != 432)
    throw ClassificationError("Gamma-(rho) has size " + std::to_string(gamma.size()));

  SubgroupHandle rho = subgroup_closure({axes.sub_gen(base_sub)}, 5, G);
  SubgroupHandle N = normalizer(rho, G);
  out.normalizer_order = static_cast<int>(N.order());
  if (out.normalizer_order != 72)
    throw ClassificationError("normalizer of <rho> has order " +
                              std::to_string(out.normalizer_order));

  std::map<int, int> orbit_of;
  std::vector<std::vector<int>> orbits;
  for (int start : gamma) {
    if (orbit_of.count(start)) continue;
    std::vector<int> orbit{start};
    orbit_of[start] = static_cast<int>(orbits.size());
    for (size_t head = 0; head < orbit.size(); ++head)
      for (const Permutation& n : N.elems) {
        int o = axes.transport_sub(orbit[head], n);
        if (!orbit_of.count(o)) {
          orbit_of[o] = static_cast<int>(orbits.size());
          orbit.push_back(o);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  if (orbits.size() != 6) throw ClassificationError("Gamma-(rho) splits into " +
                                                    std::to_string(orbits.size()) + " orbits");
  std::sort(orbits.begin(), orbits.end());
  for (int i = 0; i < 6; ++i) {
    if (orbits[i].size() != 72)
      throw ClassificationError("non-regular normalizer orbit of size " +
                                std::to_string(orbits[i].size()));
    out.orbits[i] = std::move(orbits[i]);
  }
  return out;
}

CommonInvolutionReport no_common_normalizing_involution(const EnumeratedGroup& G,
                                                        const AxisTables& axes,
                                                        const OrbitDecomposition& orb) {
  CommonInvolutionReport rep;
  SubgroupHandle rho = subgroup_closure({axes.sub_gen(orb.base_sub)}, 5, G);
  SubgroupHandle N = normalizer(rho, G);
  std::vector<Permutation> invs;
  for (const Permutation& h : N.elems)
    if (perm_order(h) == 2) invs.push_back(h);
  rep.involutions_in_normalizer = static_cast<int>(invs.size());
  rep.none_found = true;
  for (const auto& orbit : orb.orbits)
    for (int s : orbit) {
      ++rep.pairs_checked;
      const Permutation& gen = axes.sub_gen(s);
      for (const Permutation& h : invs)
        if (normalizes_subgroup(h, gen)) rep.none_found = false;
    }
  return rep;
}

namespace {

std::array<std::array<std::array<int, 2>, 3>, 15> all_pairings() {
  // partition {0..5} into three unordered pairs: 5 partners for 0, then 3
  // ways to pair the remaining four
  std::array<std::array<std::array<int, 2>, 3>, 15> out{};
  int idx = 0;
  for (int b = 1; b < 6; ++b) {
    std::vector<int> rest;
    for (int v = 1; v < 6; ++v)
      if (v != b) rest.push_back(v);
    for (int k = 1; k < 4; ++k) {
      std::vector<int> others;
      for (int m = 1; m < 4; ++m)
        if (m != k) others.push_back(rest[m]);
      out[idx++] = {{{{0, b}}, {{rest[0], rest[k]}}, {{others[0], others[1]}}}};
    }
  }
  return out;
}

}  // namespace

VDecomposition v_decomposition(const EnumeratedGroup& G, const AxisTables& axes,
                               const GramMatrix& M, const Rat& x,
                               const OrbitDecomposition& orb,
                               const std::array<int, 3>& full_ranks, int threads) {
  VDecomposition out;
  const int64_t xs = rat_scaled(x, GramMatrix::kScale);
  std::vector<int> gamma = orb.members();
  std::vector<char> in_gamma(axes.subgroups3(), 0);
  for (int s : gamma) in_gamma[s] = 1;

  std::vector<int> vplus;
  for (int i = 0; i < M.n_major; ++i) vplus.push_back(i);
  for (int s = 0; s < axes.subgroups3(); ++s)
    if (!in_gamma[s]) vplus.push_back(M.key_of_sub(s));
  out.vplus_dim = static_cast<int>(vplus.size());

  {
    std::vector<std::thread> pool;
    for (int k = 0; k < 3; ++k)
      pool.emplace_back([&, k] {
        out.vplus_ranks[k] = rank_mod_p_subset(M, x, kDefaultPrimes[k], vplus);
      });
    for (auto& th : pool) th.join();
  }
  for (int k = 0; k < 3; ++k) out.complement_dims[k] = full_ranks[k] - out.vplus_ranks[k];

  // product row M*F_combination, restricted later to V+ columns
  auto combo_row = [&](const std::array<int, 2>& plus, const std::array<int, 2>& minus) {
    std::vector<int64_t> row(M.n, 0);
    for (int c = 0; c < M.n; ++c) {
      int64_t v = 0;
      for (int oi : {plus[0], plus[1]})
        for (int s : orb.orbits[oi]) v += M.scaled_at(M.key_of_sub(s), c, xs);
      for (int oi : {minus[0], minus[1]})
        for (int s : orb.orbits[oi]) v -= M.scaled_at(M.key_of_sub(s), c, xs);
      row[c] = v;
    }
    return row;
  };

  for (const auto& pairing : all_pairings()) {
    const auto &p1 = pairing[0], &p2 = pairing[1], &p3 = pairing[2];
    std::array<std::vector<int64_t>, 3> rows = {
        combo_row({p1[0], p1[1]}, {p2[0], p2[1]}),   // F_a+F_b-F_c-F_d
        combo_row({p3[0], p3[1]}, {p1[0], p1[1]}),   // -F_a-F_b+F_e+F_f
        combo_row({p2[0], p2[1]}, {p3[0], p3[1]})};  // F_c+F_d-F_e-F_f
    bool ok = true;
    for (const auto& row : rows)
      for (int c : vplus)
        if (row[c] != 0) {
          ok = false;
          break;
        }
    if (!ok) continue;
    ++out.valid_pairings;
    if (out.pairing_found) continue;
    out.pairing_found = true;
    out.pairing = pairing;
    out.f_sum_zero = true;
    for (int c = 0; c < M.n; ++c)
      if (rows[0][c] + rows[1][c] + rows[2][c] != 0) out.f_sum_zero = false;
    out.f_rank = bareiss_rank(3, M.n, [&](int i, int j) { return Int(rows[i][j]); }, threads);
  }

  // exact structure of the complement over the suborbit-indicator space: the
  // centralizer of rho splits every orbit into two suborbits of 36; solve for
  // all suborbit-constant vectors orthogonal to V+ and test them against the
  // whole Gram. Finding only kernel vectors proves no indicator combination
  // can span the complement, whatever the pairing.
  {
    const Permutation rho = axes.sub_gen(orb.base_sub);
    std::vector<Permutation> cent;
    for (const Permutation& e : G.elements())
      if (compose(e, rho) == compose(rho, e)) cent.push_back(e);
    std::map<int, int> pos;
    for (size_t c = 0; c < gamma.size(); ++c) pos[gamma[c]] = static_cast<int>(c);
    std::vector<int> suborbit(gamma.size(), -1);
    int nsub = 0;
    for (size_t c0 = 0; c0 < gamma.size(); ++c0) {
      if (suborbit[c0] >= 0) continue;
      std::vector<int> stack{static_cast<int>(c0)};
      suborbit[c0] = nsub;
      while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        for (const Permutation& h : cent) {
          int o = pos.at(axes.transport_sub(gamma[cur], h));
          if (suborbit[o] < 0) {
            suborbit[o] = nsub;
            stack.push_back(o);
          }
        }
      }
      ++nsub;
    }
    // exact rational kernel of the aggregated (|V+| x nsub) system
    std::vector<std::vector<Rat>> m;
    for (int c : vplus) {
      std::vector<Rat> row(nsub, Rat(0));
      for (size_t k = 0; k < gamma.size(); ++k)
        row[suborbit[k]] += M.scaled_at(M.key_of_sub(gamma[k]), c, xs);
      m.push_back(std::move(row));
    }
    int rank = 0;
    std::vector<int> pivcol;
    for (int col = 0; col < nsub; ++col) {
      int pr = -1;
      for (size_t r = rank; r < m.size(); ++r)
        if (m[r][col] != 0) {
          pr = static_cast<int>(r);
          break;
        }
      if (pr < 0) continue;
      std::swap(m[rank], m[pr]);
      Rat inv = Rat(1) / m[rank][col];
      for (int cc = 0; cc < nsub; ++cc) m[rank][cc] *= inv;
      for (size_t r = 0; r < m.size(); ++r) {
        if (static_cast<int>(r) == rank || m[r][col] == 0) continue;
        Rat f = m[r][col];
        for (int cc = 0; cc < nsub; ++cc) m[r][cc] -= f * m[rank][cc];
      }
      pivcol.push_back(col);
      ++rank;
    }
    out.orbit_constant_perp_dim = nsub - rank;
    std::vector<bool> isp(nsub, false);
    for (int c : pivcol) isp[c] = true;
    out.orbit_constant_perp_in_kernel = true;
    for (int fr = 0; fr < nsub; ++fr) {
      if (isp[fr]) continue;
      std::vector<Rat> eps(nsub, Rat(0));
      eps[fr] = 1;
      for (int r = 0; r < static_cast<int>(pivcol.size()); ++r) eps[pivcol[r]] = -m[r][fr];
      for (int c = 0; c < M.n && out.orbit_constant_perp_in_kernel; ++c) {
        Rat s(0);
        for (size_t k = 0; k < gamma.size(); ++k)
          s += eps[suborbit[k]] * M.scaled_at(M.key_of_sub(gamma[k]), c, xs);
        if (s != 0) out.orbit_constant_perp_in_kernel = false;
      }
    }
  }
  return out;
}

S3S4Result find_s3_s4_involution(const EnumeratedGroup& G, const AxisTables& axes,
                                 int base_sub, int sigma_sub) {
  S3S4Result res;
  const Permutation rho = axes.sub_gen(base_sub);
  const Permutation sigma = axes.sub_gen(sigma_sub);
  for (int inv = 0; inv < axes.involutions(); ++inv) {
    const Permutation& t = axes.inv_perm(inv);
    if (!inverts(t, rho)) continue;
    SubgroupHandle H = subgroup_closure({sigma, t}, 30, G);
    if (!H.whole_group && H.order() == 24) {
      if (res.inv < 0) res.inv = inv;
      ++res.count;
    }
  }
  if (res.inv < 0) throw ClassificationError("no linking involution found");
  return res;
}

ResurrectionResult resurrection_inner_check(const EnumeratedGroup& G, const AxisTables& axes,
                                            const GramMatrix& M, int base_sub, int sigma_sub,
                                            int inv_t) {
  ResurrectionResult out;
  out.inv_t = inv_t;
  const Permutation rho = axes.sub_gen(base_sub);
  const Permutation sigma = axes.sub_gen(sigma_sub);
  const Permutation t = axes.inv_perm(inv_t);
  if (!inverts(t, rho)) throw ClassificationError("t does not invert the base subgroup");

  SubgroupHandle H = subgroup_closure({sigma, t}, 30, G);
  if (H.whole_group || H.order() != 24)
    throw ClassificationError("<sigma,t> is not the order-24 group");

  // the four order-3 subgroups of H; t swaps two and normalizes two
  std::vector<int> sylows;
  for (const Permutation& e : H.elems) {
    if (perm_order(e) != 3) continue;
    int id = axes.sub_id[G.index_of(e)];
    if (std::find(sylows.begin(), sylows.end(), id) == sylows.end()) sylows.push_back(id);
  }
  if (sylows.size() != 4) throw ClassificationError("S4 labelling ambiguous: Sylow count");

  const int u_i = sigma_sub;
  const int u_j = axes.transport_sub(sigma_sub, t);
  if (u_j == u_i) throw ClassificationError("t normalizes sigma, not an S4 configuration");
  std::vector<int> fixed;
  for (int s : sylows) {
    if (s == u_i || s == u_j) continue;
    if (axes.transport_sub(s, t) != s)
      throw ClassificationError("S4 labelling ambiguous: unswapped Sylow moves");
    fixed.push_back(s);
  }
  if (fixed.size() != 2) throw ClassificationError("S4 labelling ambiguous: fixed Sylows");
  const int u_k = fixed[0], u_l = fixed[1];  // alpha_1 is symmetric in k,l

  auto other_involutions = [&](int sub) {
    SubgroupHandle s3 = subgroup_closure({t, axes.sub_gen(sub)}, 10, G);
    if (s3.order() != 6) throw ClassificationError("<t,u> is not S3");
    std::vector<int> got;
    for (const Permutation& e : s3.elems)
      if (perm_order(e) == 2 && !(e == t)) got.push_back(axes.inv_id[G.index_of(e)]);
    if (got.size() != 2) throw ClassificationError("S3 involution count");
    return got;
  };
  std::vector<int> il_jl = other_involutions(u_k);  // transpositions (il),(jl)
  std::vector<int> ik_jk = other_involutions(u_l);  // transpositions (ik),(jk)

  // centralizer orders in H tell transpositions (4) from double ones (8)
  auto cent_order = [&](const Permutation& e) {
    int c = 0;
    for (const Permutation& h : H.elems)
      if (compose(h, e) == compose(e, h)) ++c;
    return c;
  };
  if (cent_order(t) != 4) throw ClassificationError("t is not transposition-type in H");

  // a_(kl): the involution commuting with t (besides t) that normalizes both
  // swapped Sylows; its product with t is the double transposition
  std::vector<Permutation> comm;
  for (const Permutation& e : H.elems)
    if (perm_order(e) == 2 && !(e == t) && compose(e, t) == compose(t, e)) comm.push_back(e);
  if (comm.size() != 2) throw ClassificationError("S4 labelling ambiguous: centralizer of t");
  int w_idx = -1;
  for (size_t c = 0; c < comm.size(); ++c)
    if (normalizes_subgroup(comm[c], axes.sub_gen(u_i))) {
      if (w_idx >= 0) throw ClassificationError("S4 labelling ambiguous: two candidates for (kl)");
      w_idx = static_cast<int>(c);
    }
  if (w_idx < 0) throw ClassificationError("S4 labelling ambiguous: no candidate for (kl)");
  const Permutation w = comm[w_idx];
  if (!normalizes_subgroup(w, axes.sub_gen(u_j)))
    throw ClassificationError("(kl) candidate fails to normalize the swapped Sylow");
  if (cent_order(w) != 4) throw ClassificationError("(kl) is not transposition-type");
  const Permutation dt = compose(t, w);
  if (perm_order(dt) != 2 || cent_order(dt) != 8)
    throw ClassificationError("(ij)(kl) is not double-transposition-type");
  const int a_kl = axes.inv_id[G.index_of(w)];
  const int a_ijkl = axes.inv_id[G.index_of(dt)];

  // beta_2 lives in the S3 = <rho,t>
  std::vector<int> rho_other;
  {
    SubgroupHandle s3 = subgroup_closure({t, rho}, 10, G);
    if (s3.order() != 6) throw ClassificationError("<rho,t> is not S3");
    for (const Permutation& e : s3.elems)
      if (perm_order(e) == 2 && !(e == t)) rho_other.push_back(axes.inv_id[G.index_of(e)]);
    if (rho_other.size() != 2) throw ClassificationError("S3 involution count for beta_2");
  }

  FormalVector alpha;
  alpha.add(M.key_of_sub(u_i), Rat(1));
  alpha.add(M.key_of_sub(u_j), Rat(1));
  alpha.add(M.key_of_sub(u_k), Rat(-1, 8));
  alpha.add(M.key_of_sub(u_l), Rat(-1, 8));
  alpha.add(inv_t, Rat(1, 45) + Rat(1, 45) - Rat(1, 18));
  for (int v : il_jl) alpha.add(v, Rat(4, 45));
  for (int v : ik_jk) alpha.add(v, Rat(4, 45));
  alpha.add(a_kl, Rat(-8, 45));
  alpha.add(a_ijkl, Rat(8, 45));

  FormalVector beta;
  beta.add(M.key_of_sub(base_sub), Rat(1));
  beta.add(inv_t, Rat(-8, 45));
  for (int v : rho_other) beta.add(v, Rat(-32, 45));

  Rat a(0), b(0);
  for (const auto& [k1, c1] : alpha.entries())
    for (const auto& [k2, c2] : beta.entries()) {
      const GramMatrix::EntryClass& e = M.classes[M.code_at(k1, k2)];
      if (e.x)
        b += c1 * c2;
      else
        a += c1 * c2 * e.value;
    }
  out.x_coefficient = b;
  if (b == 0) throw DataError("degenerate: coefficient of x vanishes");
  out.root = -a / b;
  out.zero_at_root = (a + b * out.root == 0);
  return out;
}

A7Restriction a7_restriction(const EnumeratedGroup& G, const AxisTables& axes,
                             const GramMatrix& M, const Rat& x,
                             const std::vector<RelationVector>& rels, int threads) {
  A7Restriction out;
  // the point stabilizer of vertex 0 in the graph action
  std::vector<Permutation> H;
  for (const Permutation& e : G.elements())
    if (e.im[0] == 0) H.push_back(e);
  out.stabilizer_order = static_cast<int>(H.size());

  std::vector<int> inv_keys, type32, type3;
  for (int inv = 0; inv < axes.involutions(); ++inv)
    if (axes.inv_perm(inv).im[0] == 0) inv_keys.push_back(inv);
  for (int s = 0; s < axes.subgroups3(); ++s) {
    const Permutation& gen = axes.sub_gen(s);
    if (gen.im[0] != 0) continue;
    int c = 0;
    for (const Permutation& h : H)
      if (compose(h, gen) == compose(gen, h)) ++c;
    if (c == 9)
      type32.push_back(s);
    else if (c == 36)
      type3.push_back(s);
    else
      throw ClassificationError("order-3 subgroup with stabilizer-centralizer " +
                                std::to_string(c));
  }
  out.majorana_count = static_cast<int>(inv_keys.size());
  out.type32_count = static_cast<int>(type32.size());
  out.type3_count = static_cast<int>(type3.size());

  std::vector<int> keys245 = inv_keys;
  for (int s : type32) keys245.push_back(M.key_of_sub(s));
  std::vector<int> keys280 = keys245;
  for (int s : type3) keys280.push_back(M.key_of_sub(s));

  out.x_free = true;
  for (int a : keys280)
    for (int b : keys280)
      if (M.indicator(a, b)) out.x_free = false;

  for (int k = 0; k < 3; ++k)
    out.rank245_modp[k] = rank_mod_p_subset(M, x, kDefaultPrimes[k], keys245);
  out.rank245_exact = rank_exact_subset(M, x, keys245, threads);
  out.kernel245 = static_cast<int>(keys245.size()) - out.rank245_exact;
  for (int k = 0; k < 3; ++k)
    out.rank105_modp[k] = rank_mod_p_subset(M, x, kDefaultPrimes[k], inv_keys);

  // Pasechnik vectors fully supported on the stabilizer's axes
  std::vector<char> in_inv(axes.involutions(), 0), in_sub(axes.subgroups3(), 0);
  for (int i : inv_keys) in_inv[i] = 1;
  for (int s : type32) in_sub[s] = 1;
  for (int s : type3) in_sub[s] = 1;
  std::vector<const RelationVector*> internal;
  for (const RelationVector& r : rels) {
    bool inside = true;
    for (int s : r.subs) inside &= bool(in_sub[s]);
    for (int i : r.invs) inside &= bool(in_inv[i]);
    if (inside) internal.push_back(&r);
  }
  out.relation_count = static_cast<int>(internal.size());

  const int64_t xs = rat_scaled(x, GramMatrix::kScale);
  out.relations_in_kernel = true;
  for (const RelationVector* r : internal)
    for (int c : keys280) {
      int64_t sum = 0;
      r->for_each_term(M, [&](int key, int64_t coef) { sum += coef * M.scaled_at(key, c, xs); });
      if (sum != 0) out.relations_in_kernel = false;
    }

  // relation family over the 280 restricted coordinates, type-3 columns
  // first: combinations whose type-3 coordinates vanish are supported on the
  // 245 keys, and they form the Pasechnik part of that restriction's kernel
  std::vector<int> reordered;
  for (int s : type3) reordered.push_back(M.key_of_sub(s));
  for (int k : keys245) reordered.push_back(k);
  std::map<int, int> pos;
  for (size_t i = 0; i < reordered.size(); ++i) pos[reordered[i]] = static_cast<int>(i);
  std::vector<std::vector<int64_t>> rows(internal.size(),
                                         std::vector<int64_t>(reordered.size(), 0));
  for (size_t i = 0; i < internal.size(); ++i)
    internal[i]->for_each_term(M, [&](int key, int64_t coef) { rows[i][pos.at(key)] = coef; });
  out.relation_rank =
      bareiss_rank(static_cast<int>(internal.size()), static_cast<int>(reordered.size()),
                   [&](int i, int j) { return Int(rows[i][j]); }, threads);
  int type3_block_rank =
      bareiss_rank(static_cast<int>(internal.size()), static_cast<int>(type3.size()),
                   [&](int i, int j) { return Int(rows[i][j]); }, threads);
  out.pasechnik_kernel_dim = out.relation_rank - type3_block_rank;

  out.rank280_exact = rank_exact_subset(M, x, keys280, threads);
  return out;
}

void export_gram(const GramMatrix& M, const Rat& x, const std::string& matrix_path,
                 const std::string& manifest_path) {
  const int64_t xs = rat_scaled(x, GramMatrix::kScale);
  std::ofstream f(matrix_path, std::ios::trunc);
  if (!f) throw CacheError("cannot open " + matrix_path);
  for (int i = 0; i < M.n; ++i)
    for (int j = i; j < M.n; ++j) f << i << ' ' << j << ' ' << M.scaled_at(i, j, xs) << '\n';
  if (!f) throw CacheError("write failure on " + matrix_path);
  std::ofstream m(manifest_path, std::ios::trunc);
  if (!m) throw CacheError("cannot open " + manifest_path);
  m << "{\n  \"dimension\": " << M.n << ",\n  \"majorana\": " << M.n_major
    << ",\n  \"scale\": " << GramMatrix::kScale << ",\n  \"x_status\": \"substituted\",\n"
    << "  \"x\": \"" << rat_str(x) << "\",\n  \"format\": \"i j value (upper triangle)\"\n}\n";
}

}  // namespace u35
