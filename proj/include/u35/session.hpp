#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "u35/axes.hpp"
#include "u35/gram.hpp"
#include "u35/group.hpp"
#include "u35/hsgraph.hpp"
#include "u35/nortsak.hpp"
#include "u35/shapes.hpp"

namespace u35 {

// Lazily built pipeline state shared by the CLI and the test suites. Each
// accessor computes its stage once (loading the group caches when present)
// and records the wall-clock spent per stage.
class Session {
 public:
  struct Options {
    std::string cache_dir;  // empty: never touch the filesystem
    std::string data_dir;   // algebra seed tables; empty: default_data_dir()
    std::array<uint64_t, 3> primes = kDefaultPrimes;
    uint64_t seed = 20250810;
    int threads = 2;
    bool exact = false;  // run the exact elimination audit paths as well
  };

  explicit Session(Options opt);

  const Options& options() const { return opt_; }
  bool cache_was_warm() const { return warm_; }
  const std::map<std::string, double>& timings() const { return times_; }

  const Graph& graph();
  const EnumeratedGroup& aut();
  const EnumeratedGroup& group();
  const AxisTables& axes();
  const Classification& classification();

  const std::vector<AlgebraSpec>& algebras();
  const ContainmentFacts& facts();
  const SuborbitTable& suborbits();
  const GroupFacts& gfacts();
  const ShapeMap& shape();
  std::array<Rat, 7> mm_inner();

  const GramMatrix& gram_majorana();
  const GramMatrix& gram_full();
  const std::vector<RelationVector>& relations();
  const Rat& x_solved();
  const std::array<int, 3>& full_ranks();  // mod the configured primes, at x
  const OrbitDecomposition& gamma_orbits();

  // Writes the group caches and the graph export into cache_dir.
  void write_caches();

 private:
  template <typename T, typename F>
  const T& stage(const char* name, std::optional<T>& slot, F&& build);

  Options opt_;
  bool warm_ = false;
  std::map<std::string, double> times_;

  std::optional<Graph> graph_;
  std::optional<EnumeratedGroup> aut_;
  std::optional<EnumeratedGroup> group_;
  std::optional<AxisTables> axes_;
  std::optional<Classification> cls_;
  std::optional<std::vector<AlgebraSpec>> algebras_;
  std::optional<ContainmentFacts> facts_;
  std::optional<SuborbitTable> suborbits_;
  std::optional<GroupFacts> gfacts_;
  std::optional<ShapeMap> shape_;
  std::optional<GramMatrix> gram525_;
  std::optional<GramMatrix> gram_;
  std::optional<std::vector<RelationVector>> rels_;
  std::optional<Rat> x_;
  std::optional<std::array<int, 3>> full_ranks_;
  std::optional<OrbitDecomposition> gamma_;
};

}  // namespace u35
