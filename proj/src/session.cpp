#include "u35/session.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <thread>

#include "u35/errors.hpp"

namespace u35 {

namespace fs = std::filesystem;

Session::Session(Options opt) : opt_(std::move(opt)) {
  if (opt_.data_dir.empty()) opt_.data_dir = default_data_dir();
  if (opt_.threads < 1) opt_.threads = 1;
}

template <typename T, typename F>
const T& Session::stage(const char* name, std::optional<T>& slot, F&& build) {
  if (!slot) {
    auto t0 = std::chrono::steady_clock::now();
    slot = build();
    times_[name] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
  return *slot;
}

const Graph& Session::graph() {
  return stage("graph", graph_, [] { return build_hs_graph(); });
}

const EnumeratedGroup& Session::aut() {
  return stage("aut", aut_, [this]() -> EnumeratedGroup {
    if (!opt_.cache_dir.empty()) {
      fs::path p = fs::path(opt_.cache_dir) / "aut_hs.grp";
      if (fs::exists(p)) {
        EnumeratedGroup g = load_group(p.string());
        warm_ = true;
        return g;
      }
    }
    return enumerate_group(automorphism_group(graph()), 300000);
  });
}

const EnumeratedGroup& Session::group() {
  return stage("group", group_, [this]() -> EnumeratedGroup {
    if (!opt_.cache_dir.empty()) {
      fs::path p = fs::path(opt_.cache_dir) / "u35.grp";
      if (fs::exists(p)) {
        EnumeratedGroup g = load_group(p.string());
        warm_ = true;
        return g;
      }
    }
    return derived_subgroup(aut());
  });
}

const AxisTables& Session::axes() {
  return stage("axes", axes_, [this] { return build_axis_tables(group()); });
}

const Classification& Session::classification() {
  return stage("classification", cls_, [this] { return classify_all(group(), axes()); });
}

const std::vector<AlgebraSpec>& Session::algebras() {
  return stage("algebras", algebras_, [this] { return build_all_algebras(opt_.data_dir); });
}

const ContainmentFacts& Session::facts() {
  return stage("facts", facts_, [this] { return containment_facts(algebras()); });
}

const SuborbitTable& Session::suborbits() {
  return stage("suborbits", suborbits_, [this] { return suborbit_table(group(), axes()); });
}

const GroupFacts& Session::gfacts() {
  return stage("group_facts", gfacts_, [this] { return group_facts(group(), axes(), suborbits()); });
}

const ShapeMap& Session::shape() {
  return stage("shape", shape_, [this] { return solve_shape(suborbits(), facts(), gfacts()); });
}

std::array<Rat, 7> Session::mm_inner() {
  std::array<Rat, 7> mm{};
  for (int d = 1; d <= 6; ++d) mm[d] = majorana_inner_product(shape(), facts(), d);
  return mm;
}

const GramMatrix& Session::gram_majorana() {
  return stage("gram_majorana", gram525_, [this] {
    return assemble_gram(group(), axes(), classification(), mm_inner(), false);
  });
}

const GramMatrix& Session::gram_full() {
  return stage("gram_full", gram_, [this] {
    return assemble_gram(group(), axes(), classification(), mm_inner(), true);
  });
}

const std::vector<RelationVector>& Session::relations() {
  return stage("relations", rels_, [this] {
    return pasechnik_vectors(group(), axes(), classification());
  });
}

const Rat& Session::x_solved() {
  return stage("solve_x", x_, [this] { return solve_x(gram_full(), relations()); });
}

const std::array<int, 3>& Session::full_ranks() {
  return stage("full_ranks", full_ranks_, [this] {
    std::array<int, 3> ranks{};
    const GramMatrix& M = gram_full();
    const Rat x = x_solved();
    std::vector<std::thread> pool;
    for (int k = 0; k < 3; ++k)
      pool.emplace_back([&, k] { ranks[k] = rank_mod_p(M, x, opt_.primes[k]); });
    for (auto& th : pool) th.join();
    return ranks;
  });
}

const OrbitDecomposition& Session::gamma_orbits() {
  return stage("gamma_orbits", gamma_, [this] {
    return gamma_minus_orbits(group(), axes(), classification(), 0);
  });
}

void Session::write_caches() {
  if (opt_.cache_dir.empty()) throw CacheError("no cache directory configured");
  fs::create_directories(opt_.cache_dir);
  save_group(aut(), (fs::path(opt_.cache_dir) / "aut_hs.grp").string());
  save_group(group(), (fs::path(opt_.cache_dir) / "u35.grp").string());
  std::ofstream gf(fs::path(opt_.cache_dir) / "hs_graph.json", std::ios::trunc);
  gf << graph_json(graph()) << "\n";
  if (!gf) throw CacheError("write failure on graph export");
}

}  // namespace u35
