#include "u35/cli.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "u35/errors.hpp"

namespace u35 {

namespace {

Json json_config(const Session& s) {
  const auto& o = s.options();
  Json j;
  j["cache"] = o.cache_dir;
  j["data"] = o.data_dir;
  j["primes"] = {o.primes[0], o.primes[1], o.primes[2]};
  j["seed"] = o.seed;
  j["exact"] = o.exact;
  return j;
}

Json rat_json(const Rat& r) { return rat_str(r); }

}  // namespace

void append_group_checks(Session& s, RunManifest& m) {
  const Graph& hs = s.graph();
  SrgCertificate cert = verify_srg(hs, 50, 7, 0, 1);
  m.add("hs_srg", cert.pass() && hs.edge_count() == 175,
        {{"v", 50}, {"k", 7}, {"lambda", 0}, {"mu", 1}, {"edges", hs.edge_count()}});

  m.add("aut_order", s.aut().size() == 252000, {{"order", s.aut().size()}});

  const EnumeratedGroup& g = s.group();
  const AxisTables& ax = s.axes();
  bool single_class =
      static_cast<int>(conjugacy_class(ax.inv_perm(0), g).size()) == ax.involutions();
  m.add("u35_order",
        g.size() == 126000 && ax.involutions() == 525 && single_class &&
            ax.subgroups3() == 1750,
        {{"order", g.size()},
         {"involutions", ax.involutions()},
         {"single_class", single_class},
         {"order3_subgroups", ax.subgroups3()}});

  // every involution fixes a Petersen subgraph; the centralizer has order 240
  // with 21 involutions
  bool petersen_all = true;
  int first_bad = -1;
  for (int inv = 0; inv < ax.involutions(); ++inv) {
    Graph fixed = fixed_subgraph(ax.inv_perm(inv), hs);
    if (!verify_srg(fixed, 10, 3, 0, 1).pass()) {
      petersen_all = false;
      if (first_bad < 0) first_bad = inv;
    }
  }
  SubgroupHandle cent = centralizer(ax.inv_perm(0), g);
  int cent_invs = 0;
  for (const Permutation& h : cent.elems)
    if (perm_order(h) == 2) ++cent_invs;
  m.add("petersen_fixed_subgraphs", petersen_all && cent.order() == 240 && cent_invs == 21,
        {{"all_pass", petersen_all},
         {"first_failure", first_bad},
         {"centralizer_order", cent.order()},
         {"centralizer_involutions", cent_invs}});

  int stab = 0;
  for (const Permutation& e : g.elements())
    if (e.im[0] == 0) ++stab;
  m.add("vertex_stabilizer", stab == 2520, {{"order", stab}});
}

void append_suborbit_checks(Session& s, RunManifest& m) {
  const SuborbitTable& sub = s.suborbits();
  std::vector<std::pair<int, int>> expected = {{1, 1},  {20, 2},  {48, 5},  {48, 5},
                                               {48, 5}, {120, 3}, {120, 4}, {120, 6}};
  std::sort(expected.begin(), expected.end());
  bool ok = sub.pairs() == expected;
  Json rows = Json::array();
  for (const Suborbit& r : sub.rows)
    rows.push_back({{"size", r.size}, {"order", r.product_order}, {"min", r.min_member}});
  m.add("suborbits_p6", ok, {{"rows", rows}});

  int order3 = sub.size_with_order(3);
  int d6 = 525 * order3 / 6;
  m.add("d6_count", order3 == 120 && d6 == 10500,
        {{"order3_suborbit", order3}, {"dihedral6", d6}});
}

void append_norton_sakuma_checks(Session& s, RunManifest& m) {
  const FusionTable fusion = FusionTable::standard();
  std::mt19937_64 rng(s.options().seed);
  for (const AlgebraSpec& alg : s.algebras()) {
    bool assoc = associativity_holds(alg);
    bool pd = gram_positive_definite(alg);
    bool m3 = true, m45 = true, fus = true, ts = true;
    Json dims = Json::array();
    for (int axis : alg.majorana_axes()) {
      if (!(alg.table[axis][axis] == FormalVector::unit(axis)) || alg.gram[axis][axis] != 1)
        m3 = false;
      try {
        Eigenspaces eig = ad_eigenspaces(alg, axis);
        dims.push_back({eig.vecs[0].size(), eig.vecs[1].size(), eig.vecs[2].size(),
                        eig.vecs[3].size()});
      } catch (const SpectrumError&) {
        m45 = false;
        continue;
      }
      if (!verify_fusion(alg, axis, fusion).pass) fus = false;
      if (!verify_tau_sigma(alg, axis).pass()) ts = false;
    }
    bool t4 = true;
    for (const auto& [slot, v] : table4_vectors(alg)) {
      Eigenspaces eig = ad_eigenspaces(alg, alg.index_of("a0"));
      if (!eig.contains(slot, v)) t4 = false;
    }
    bool norton = true;
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 200; ++trial) {
      FormalVector u, v;
      for (int i = 0; i < alg.dim; ++i) {
        u.add(i, coeff(rng));
        v.add(i, coeff(rng));
      }
      if (!norton_inequality_check(alg, u, v)) norton = false;
    }
    m.add(std::string("ns_") + algebra_tag(alg.type),
          assoc && pd && m3 && m45 && fus && ts && t4 && norton,
          {{"associative", assoc},
           {"positive_definite", pd},
           {"axes_idempotent", m3},
           {"spectrum", m45},
           {"fusion", fus},
           {"tau_sigma", ts},
           {"eigenvector_table", t4},
           {"norton_sampled", norton},
           {"eigen_dims", dims}});
  }
  // the auxiliary axes: u, v idempotent; w squares to the printed combination
  const auto& algs = s.algebras();
  auto find = [&](AlgebraType t) -> const AlgebraSpec& {
    for (const auto& a : algs)
      if (a.type == t) return a;
    throw DataError("algebra missing");
  };
  bool aux = true;
  {
    const AlgebraSpec& a3 = find(AlgebraType::T3A);
    int u = a3.index_of("u");
    aux &= a3.table[u][u] == FormalVector::unit(u);
    const AlgebraSpec& a4 = find(AlgebraType::T4A);
    int v = a4.index_of("v");
    aux &= a4.table[v][v] == FormalVector::unit(v);
    const AlgebraSpec& a6 = find(AlgebraType::T6A);
    int u2 = a6.index_of("u2");
    aux &= a6.table[u2][u2] == FormalVector::unit(u2);
    const AlgebraSpec& a5 = find(AlgebraType::T5A);
    int w = a5.index_of("w");
    FormalVector expect;
    for (const char* l : {"a-2", "a-1", "a0", "a1", "a2"})
      expect.add(a5.index_of(l), Rat(175, 524288));
    aux &= a5.table[w][w] == expect;
  }
  m.add("ns_aux_identities", aux, Json::object());
}

void append_shape_checks(Session& s, RunManifest& m) {
  const ShapeMap& shape = s.shape();
  std::map<int, std::string> expected = {{2, "2A"}, {3, "3A"}, {4, "4B"}, {5, "5A"}, {6, "6A"}};
  m.add("shape_unique", shape.unique && shape.assignment == expected,
        {{"unique", shape.unique},
         {"assignment", shape.assignment},
         {"issue", shape.issue},
         {"d4_in_d12", s.gfacts().d4_in_d12},
         {"d6_in_d12", s.gfacts().d6_in_d12}});

  std::array<Rat, 7> mm = s.mm_inner();
  std::array<Rat, 7> want = {Rat(0),      Rat(1),      Rat(1, 8),  Rat(13, 256),
                             Rat(1, 64),  Rat(3, 128), Rat(5, 256)};
  bool vals = true;
  Json mmj = Json::array();
  for (int d = 1; d <= 6; ++d) {
    vals &= (mm[d] == want[d]);
    mmj.push_back(rat_json(mm[d]));
  }
  m.add("majorana_inner_products", vals, {{"values", mmj}});

  // censuses against five seeded random bases plus the canonical one
  const std::array<int, kT5Rows> t5_expected = {3, 18, 36, 108, 36, 108, 216};
  const std::array<int, kT6Rows> t6_expected = {1,  12,  36,  144, 18,  72,  54,
                                                9,  108, 216, 216, 216, 216, 432};
  std::mt19937_64 rng(s.options().seed);
  std::uniform_int_distribution<int> pick(0, s.axes().subgroups3() - 1);
  std::vector<int> bases = {0};
  for (int k = 0; k < 5; ++k) bases.push_back(pick(rng));
  bool c5_ok = true, c6_ok = true;
  Json basesj = Json::array();
  for (int b : bases) {
    auto c5 = table5_census(s.group(), s.axes(), b);
    auto c6 = table6_census(s.group(), s.axes(), b);
    c5_ok &= (c5 == t5_expected);
    c6_ok &= (c6 == t6_expected);
    basesj.push_back(b);
  }
  m.add("census_table5", c5_ok, {{"bases", basesj}});
  m.add("census_table6", c6_ok, {{"bases", basesj}});
}

void append_gram525_checks(Session& s, RunManifest& m) {
  const GramMatrix& M = s.gram_majorana();
  std::array<int, 3> ranks{};
  for (int k = 0; k < 3; ++k) ranks[k] = rank_mod_p(M, Rat(0), s.options().primes[k]);
  bool modp = ranks[0] == 525 && ranks[1] == 525 && ranks[2] == 525;
  m.add("rank525_modp", modp, {{"ranks", {ranks[0], ranks[1], ranks[2]}}});

  PdResult pd = bareiss_positive_definite(
      M.n, [&](int i, int j) { return Int(M.scaled_at(i, j, 0)); }, s.options().threads);
  m.add("rank525_exact_pd", pd.pd && pd.pivots_done == 525,
        {{"positive_definite", pd.pd}, {"leading_minors_positive", pd.pivots_done}});
}

void append_gram_full_checks(Session& s, RunManifest& m) {
  const GramMatrix& M = s.gram_full();
  const auto& rels = s.relations();
  m.add("pasechnik_count", !rels.empty(), {{"count", rels.size()}});

  Rat x;
  bool solved = true;
  std::string issue;
  try {
    x = s.x_solved();
  } catch (const DataError& e) {
    solved = false;
    issue = e.what();
  }
  m.add("x_value", solved && x == Rat(4, 81),
        {{"x", solved ? rat_str(x) : issue}});
  if (!solved) return;

  m.add("pasechnik_vanish", relations_vanish(M, x, rels), {{"relations", rels.size()}});

  const std::array<int, 3>& ranks = s.full_ranks();
  bool ok = true;
  Json kj = Json::array();
  for (int k = 0; k < 3; ++k) {
    ok &= (ranks[k] == 798);
    kj.push_back(M.n - ranks[k]);
  }
  m.add("rank_full_798", ok,
        {{"ranks", {ranks[0], ranks[1], ranks[2]}}, {"kernel_dims", kj}});
  if (s.options().exact) {
    std::vector<int> all(M.n);
    for (int i = 0; i < M.n; ++i) all[i] = i;
    int exact = rank_exact_subset(M, x, all, s.options().threads);
    m.add("rank_full_exact", exact == 798, {{"rank", exact}});
  }
}

void append_a7_checks(Session& s, RunManifest& m) {
  A7Restriction a7 = a7_restriction(s.group(), s.axes(), s.gram_full(), s.x_solved(),
                                    s.relations(), s.options().threads);
  m.add("a7_counts",
        a7.stabilizer_order == 2520 && a7.majorana_count == 105 && a7.type32_count == 140 &&
            a7.type3_count == 35 && a7.x_free,
        {{"stabilizer", a7.stabilizer_order},
         {"majorana", a7.majorana_count},
         {"type32", a7.type32_count},
         {"type3", a7.type3_count},
         {"x_free", a7.x_free}});
  bool modp = a7.rank245_modp[0] == 196 && a7.rank245_modp[1] == 196 && a7.rank245_modp[2] == 196;
  m.add("a7_rank196", modp && a7.rank245_exact == 196 && a7.kernel245 == 49,
        {{"modp", {a7.rank245_modp[0], a7.rank245_modp[1], a7.rank245_modp[2]}},
         {"exact", a7.rank245_exact},
         {"kernel", a7.kernel245}});
  m.add("a7_majorana_rank105",
        a7.rank105_modp[0] == 105 && a7.rank105_modp[1] == 105 && a7.rank105_modp[2] == 105,
        {{"modp", {a7.rank105_modp[0], a7.rank105_modp[1], a7.rank105_modp[2]}}});
  m.add("a7_pasechnik_kernel", a7.relations_in_kernel && a7.pasechnik_kernel_dim == 35,
        {{"vectors", a7.relation_count},
         {"vector_rank", a7.relation_rank},
         {"kernel_subspace_dim", a7.pasechnik_kernel_dim},
         {"orthogonal_to_restriction", a7.relations_in_kernel},
         {"rank280", a7.rank280_exact}});
}

void append_lemma15_checks(Session& s, RunManifest& m) {
  bool structure = true;
  std::string issue;
  try {
    s.gamma_orbits();
  } catch (const ClassificationError& e) {
    structure = false;
    issue = e.what();
  }
  if (!structure) {
    m.add("gamma_minus_orbits", false, {{"issue", issue}});
    return;
  }
  const OrbitDecomposition& orb = s.gamma_orbits();
  Json sizes = Json::array();
  for (const auto& o : orb.orbits) sizes.push_back(o.size());
  m.add("gamma_minus_orbits", orb.normalizer_order == 72,
        {{"normalizer_order", orb.normalizer_order}, {"orbit_sizes", sizes}});

  CommonInvolutionReport rep = no_common_normalizing_involution(s.group(), s.axes(), orb);
  m.add("no_common_normalizing_involution", rep.none_found && rep.pairs_checked == 432,
        {{"involutions_in_normalizer", rep.involutions_in_normalizer},
         {"pairs_checked", rep.pairs_checked}});
}

void append_lemma16_checks(Session& s, RunManifest& m) {
  const OrbitDecomposition& orb = s.gamma_orbits();
  bool all_found = true;
  Json found = Json::array();
  for (int i = 0; i < 6; ++i) {
    int rep = orb.orbits[i][0];
    try {
      S3S4Result r = find_s3_s4_involution(s.group(), s.axes(), orb.base_sub, rep);
      const Permutation t = s.axes().inv_perm(r.inv);
      const Permutation rho = s.axes().sub_gen(orb.base_sub);
      bool sane = perm_order(t) == 2 && conjugate(rho, t) == compose(rho, rho);
      all_found &= sane;
      found.push_back({{"orbit", i}, {"sigma", rep}, {"t", r.inv}, {"choices", r.count},
                       {"sane", sane}});
    } catch (const ClassificationError& e) {
      all_found = false;
      found.push_back({{"orbit", i}, {"sigma", rep}, {"error", e.what()}});
    }
  }
  m.add("linking_involution", all_found, {{"witnesses", found}});
}

void append_lemma17_checks(Session& s, RunManifest& m) {
  VDecomposition vd = v_decomposition(s.group(), s.axes(), s.gram_full(), s.x_solved(),
                                      s.gamma_orbits(), s.full_ranks(), s.options().threads);
  bool v796 = vd.vplus_ranks[0] == 796 && vd.vplus_ranks[1] == 796 && vd.vplus_ranks[2] == 796;
  m.add("vplus_rank_796", v796 && vd.vplus_dim == 1843,
        {{"dim", vd.vplus_dim},
         {"ranks", {vd.vplus_ranks[0], vd.vplus_ranks[1], vd.vplus_ranks[2]}},
         {"complement_dims", {vd.complement_dims[0], vd.complement_dims[1],
                              vd.complement_dims[2]}}});
  Json witness = {{"valid_pairings", vd.valid_pairings},
                  {"suborbit_constant_perp_dim", vd.orbit_constant_perp_dim},
                  {"suborbit_constant_perp_in_kernel", vd.orbit_constant_perp_in_kernel}};
  if (vd.pairing_found) {
    witness["pairing"] = {{vd.pairing[0][0], vd.pairing[0][1]},
                          {vd.pairing[1][0], vd.pairing[1][1]},
                          {vd.pairing[2][0], vd.pairing[2][1]}};
    witness["f_rank"] = vd.f_rank;
    witness["f_sum_zero"] = vd.f_sum_zero;
  }
  m.add("orbit_pairing_complement", vd.pairing_found && vd.f_rank == 2 && vd.f_sum_zero,
        witness);
}

void append_resurrection_checks(Session& s, RunManifest& m) {
  const OrbitDecomposition& orb = s.gamma_orbits();
  bool all = true;
  Json roots = Json::array();
  for (int i = 0; i < 6; ++i) {
    int rep = orb.orbits[i][0];
    S3S4Result link = find_s3_s4_involution(s.group(), s.axes(), orb.base_sub, rep);
    ResurrectionResult rr = resurrection_inner_check(s.group(), s.axes(), s.gram_full(),
                                                     orb.base_sub, rep, link.inv);
    bool ok = rr.root == Rat(4, 81) && rr.zero_at_root;
    all &= ok;
    roots.push_back({{"orbit", i},
                     {"sigma", rep},
                     {"t", rr.inv_t},
                     {"root", rat_str(rr.root)},
                     {"x_coefficient", rat_str(rr.x_coefficient)}});
  }
  m.add("resurrection_root", all, {{"runs", roots}});
}

RunManifest cmd_build(Session& s) {
  RunManifest m;
  m.command = "build";
  m.config = json_config(s);
  append_group_checks(s, m);
  append_suborbit_checks(s, m);
  s.write_caches();
  for (const auto& [k, v] : s.timings()) m.timing[k] = v;
  m.finalize();
  return m;
}

RunManifest cmd_verify(Session& s, const std::string& target) {
  RunManifest m;
  m.command = "verify " + target;
  m.config = json_config(s);
  if (target == "norton-sakuma") {
    append_norton_sakuma_checks(s, m);
  } else if (target == "shape") {
    append_suborbit_checks(s, m);
    append_shape_checks(s, m);
  } else if (target == "gram525") {
    append_gram525_checks(s, m);
  } else if (target == "gram-full") {
    append_gram_full_checks(s, m);
  } else if (target == "a7") {
    append_a7_checks(s, m);
  } else if (target == "lemma15") {
    append_lemma15_checks(s, m);
  } else if (target == "lemma16") {
    append_lemma16_checks(s, m);
  } else if (target == "lemma17") {
    append_gram_full_checks(s, m);
    append_lemma17_checks(s, m);
  } else if (target == "resurrection") {
    append_resurrection_checks(s, m);
  } else if (target == "all") {
    append_group_checks(s, m);
    append_suborbit_checks(s, m);
    append_norton_sakuma_checks(s, m);
    append_shape_checks(s, m);
    append_gram525_checks(s, m);
    append_gram_full_checks(s, m);
    append_a7_checks(s, m);
    append_lemma15_checks(s, m);
    append_lemma16_checks(s, m);
    append_lemma17_checks(s, m);
    append_resurrection_checks(s, m);
  } else {
    throw std::invalid_argument("unknown verify target: " + target);
  }
  for (const auto& [k, v] : s.timings()) m.timing[k] = v;
  m.finalize();
  return m;
}

}  // namespace u35
