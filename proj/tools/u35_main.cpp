#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <thread>

#include "u35/cli.hpp"
#include "u35/errors.hpp"

namespace {

bool small_prime(uint64_t p) {
  if (p < 2) return false;
  for (uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::array<uint64_t, 3> parse_primes(const std::string& arg) {
  std::array<uint64_t, 3> out{};
  size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    size_t comma = arg.find(',', pos);
    std::string tok = arg.substr(pos, comma == std::string::npos ? std::string::npos
                                                                 : comma - pos);
    out[i] = std::stoull(tok);
    if (comma == std::string::npos && i != 2)
      throw CLI::ValidationError("--primes needs three comma-separated primes");
    pos = comma + 1;
  }
  for (uint64_t p : out) {
    if (p < (1ull << 20) || p >= (1ull << 21))
      throw CLI::ValidationError("primes must lie in [2^20, 2^21)");
    if (!small_prime(p) || p == 2 || p == 3 || p == 5)
      throw CLI::ValidationError("primes must be prime and avoid 2, 3, 5");
  }
  return out;
}

int print_and_exit_code(const u35::RunManifest& m, const std::string& json_path) {
  for (const auto& c : m.checks)
    std::printf("%s %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str());
  std::printf("%s: %zu checks, manifest %s\n", m.all_pass() ? "OK" : "FAILED",
              m.checks.size(), m.manifest_hash.c_str());
  if (!json_path.empty()) m.write(json_path);
  return m.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification toolkit for the Majorana representation of U3(5)"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string cache_dir, data_dir, json_path, primes_arg;
  uint64_t seed = 20250810;
  int threads = static_cast<int>(std::thread::hardware_concurrency());
  bool exact = false;

  app.add_option("--cache", cache_dir, "cache directory for the enumerated groups");
  app.add_option("--data", data_dir, "algebra seed-table directory");
  app.add_option("--primes", primes_arg, "three comma-separated primes in [2^20,2^21)");
  app.add_option("--json", json_path, "write the run manifest to this path");
  app.add_option("--seed", seed, "seed for the sampled property checks");
  app.add_option("--threads", threads, "worker threads for eliminations");
  app.add_flag("--exact", exact, "also run the exact elimination audit paths");

  CLI::App* build = app.add_subcommand("build", "build, certify and cache the groups");
  std::string target;
  CLI::App* verify = app.add_subcommand("verify", "run one verification suite");
  verify->add_option("target", target,
                     "norton-sakuma|shape|gram525|gram-full|a7|lemma15|lemma16|"
                     "lemma17|resurrection|all")
      ->required();
  std::string out_matrix = "gram.txt", out_manifest = "gram.json";
  bool export_full = false;
  CLI::App* exp = app.add_subcommand("export-gram", "write the integral Gram matrix");
  exp->add_option("--out", out_matrix, "matrix path (line format: i j value)");
  exp->add_option("--manifest", out_manifest, "manifest path");
  exp->add_flag("--full", export_full, "export the 2275 matrix instead of the 525 block");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    u35::Session::Options opt;
    opt.cache_dir = cache_dir;
    opt.data_dir = data_dir;
    opt.seed = seed;
    opt.threads = threads > 0 ? threads : 2;
    opt.exact = exact;
    if (!primes_arg.empty()) opt.primes = parse_primes(primes_arg);
    u35::Session session(opt);

    if (*build) {
      if (cache_dir.empty()) throw u35::CacheError("build needs --cache DIR");
      u35::RunManifest m = u35::cmd_build(session);
      return print_and_exit_code(m, json_path);
    }
    if (*verify) {
      if (target != "norton-sakuma" && !cache_dir.empty() &&
          !std::filesystem::exists(std::filesystem::path(cache_dir) / "u35.grp"))
        throw u35::CacheError("missing cache in " + cache_dir + " (run build first)");
      u35::RunManifest m = u35::cmd_verify(session, target);
      return print_and_exit_code(m, json_path);
    }
    if (*exp) {
      const u35::GramMatrix& M = export_full ? session.gram_full() : session.gram_majorana();
      u35::Rat x = export_full ? session.x_solved() : u35::Rat(0);
      u35::export_gram(M, x, out_matrix, out_manifest);
      std::printf("wrote %s (%d x %d) and %s\n", out_matrix.c_str(), M.n, M.n,
                  out_manifest.c_str());
      return 0;
    }
  } catch (const u35::CacheError& e) {
    std::fprintf(stderr, "cache error: %s\n", e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
