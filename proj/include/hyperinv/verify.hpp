#pragma once

// Seeded verification suites over the cross-module identities, plus the
// random generators they use.

#include "hyperinv/clustertree.hpp"
#include "hyperinv/invariants.hpp"
#include "hyperinv/json_io.hpp"
#include "hyperinv/symroots.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace hyperinv {

using Rng = std::mt19937_64;

/// 2g+2 distinct rationals with small numerators and denominators; with
/// probability ~1/4 one of them is replaced by infinity.
RootConfig random_config(Rng& rng, int genus, bool allow_infinity = true);

/// Distinct integers drawn from [-10p^2, 10p^2]; usually not in Kausz form.
RootConfig random_integer_config(Rng& rng, int genus, long p);

/// Kausz normal form by construction: each root is a balanced base-p^2
/// expansion b0 + p^2 b1 + p^4 b2 + ..., so nu(a_r - a_s) is twice the index
/// of the first differing digit. The first three roots occupy distinct classes mod p.
RootConfig random_kausz_config(Rng& rng, int genus, long p);

/// Fractional-linear map with small rational coefficients and ad - bc != 0.
Mobius random_mobius(Rng& rng);

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  long passed = 0;
  long failed = 0;
  long skipped = 0;
  std::vector<std::string> failures;
  std::vector<std::string> skips;

  void check(bool ok, const std::string& what);
  void skip(const std::string& why);
  [[nodiscard]] Json to_json() const;
};

const std::vector<std::string>& suite_names();

/// Throws ValidationError for an unknown suite name.
SuiteReport verify_suite(const std::string& name, std::uint64_t seed);

SuiteReport verify_identities(std::uint64_t seed, int configs_per_genus = 100);
SuiteReport verify_cluster_vs_symroots(std::uint64_t seed, int configs = 200);
SuiteReport verify_genus2_table();
SuiteReport verify_phi_equals_chi();
SuiteReport verify_subdivision();

/// Parameter tuples in {1,2,3}^arity for types II..VII.
std::vector<std::pair<Genus2Type, std::vector<Rat>>> genus2_sweep();

}  // namespace hyperinv
