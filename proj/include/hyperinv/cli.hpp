#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hyperinv {

/// Parsed command line. `subcommand` is one of symroots, cluster, graph,
/// genus2, invariants, global, verify; `action` holds the second word for
/// graph (eval) and invariants (chi, d, yamaki, arch, theorem-b).
struct RunConfig {
  std::string subcommand;
  std::string action;
  std::string curve_path;
  std::string graph_path;
  std::string places_path;
  std::string output_path;
  std::optional<long> prime;
  std::string triple;
  std::string cross_ratio;
  bool all_triples = false;
  bool discriminants = false;
  bool graph_check = false;
  bool with_chi = false;
  std::string genus2_type;
  std::string params;
  std::string subtypes;
  std::string suite;
  std::uint64_t seed = 0;
  // invariants
  int genus = 2;
  std::string d, eps, delta, xi0, xi, deltas;
  std::string log_norm_delta = "0", delta_faltings = "0", log2 = "0", pairing_sums;
};

/// Exit codes: 0 success, 1 validation error, 2 internal failure.
enum ExitCode : int { kOk = 0, kValidation = 1, kInternal = 2 };

/// Runs one command and writes its JSON document (or a diagnostic
/// {error, path, detail}) to `out`, or to --out when given.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace hyperinv
