#pragma once

// Leveled tree of p-adic residue classes of the branch points, and the
// component multiplicities it determines for a curve y^2 = prod (x - a_r) in
// Kausz normal form (odd residue characteristic).

#include "hyperinv/errors.hpp"
#include "hyperinv/rat.hpp"
#include "hyperinv/symroots.hpp"
#include "hyperinv/valuation.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hyperinv {

struct KauszReport {
  std::vector<std::string> violations;

  [[nodiscard]] bool ok() const { return violations.empty(); }
};

/// Checks: p odd, roots finite and integral, pairwise valuations even,
/// at least 3 residue classes mod p.
KauszReport check_kausz_form(const RootConfig& cfg, const Valuation& v);

class KauszFormError : public ValidationError {
public:
  explicit KauszFormError(KauszReport report);
  [[nodiscard]] const KauszReport& report() const { return report_; }

private:
  KauszReport report_;
};

struct ClusterNode {
  long level = 0;
  std::size_t representative = 0;  // root index whose value serves as a_C
  std::vector<std::size_t> members;
  std::optional<std::size_t> parent;
  std::vector<std::size_t> children;
};

class ClusterTree {
public:
  [[nodiscard]] const std::vector<ClusterNode>& nodes() const { return nodes_; }
  [[nodiscard]] const ClusterNode& node(std::size_t id) const { return nodes_.at(id); }
  [[nodiscard]] int genus() const { return genus_; }
  [[nodiscard]] std::size_t root_count() const { return values_.size(); }
  [[nodiscard]] const Rat& root_value(std::size_t r) const { return values_.at(r); }
  [[nodiscard]] const Valuation& valuation() const { return valuation_; }

  /// Deepest node containing root r (the component C_r).
  [[nodiscard]] std::size_t component_of(std::size_t r) const { return lambda_.at(r); }
  /// n_r = max_{s != r} nu(a_r - a_s).
  [[nodiscard]] long root_level(std::size_t r) const { return root_level_.at(r); }
  /// nu(a_r - a_s) for r != s.
  [[nodiscard]] long pair_order(std::size_t r, std::size_t s) const;

  /// Copy of the tree with node `id` represented by `member` instead.
  [[nodiscard]] ClusterTree with_representative(std::size_t id, std::size_t member) const;

  friend ClusterTree build_tree(const RootConfig& cfg, const Valuation& v);

private:
  ClusterTree(int genus, std::vector<Rat> values, Valuation v);

  int genus_;
  std::vector<Rat> values_;
  Valuation valuation_;
  std::vector<std::vector<long>> pair_order_;
  std::vector<ClusterNode> nodes_;
  std::vector<std::size_t> lambda_;
  std::vector<long> root_level_;
};

/// Throws KauszFormError if the config is not in Kausz normal form.
ClusterTree build_tree(const RootConfig& cfg, const Valuation& v);

/// nu_C(x - a_r) = min{n_C, nu(a_C - a_r)}.
long mult_x(const ClusterTree& tree, std::size_t node, std::size_t r);
/// nu_C(y) = (1/2) sum_r nu_C(x - a_r).
Rat mult_y(const ClusterTree& tree, std::size_t node);
/// Multiplicity of component C in the vertical divisor V_k.
Rat v_mult(const ClusterTree& tree, std::size_t k, std::size_t node);

/// (2g-1)(W_i - W_j, V_k) + (V_i - V_j, W_k), read off the multiplicities of
/// V_i, V_j, V_k along the root-carrying components C_i, C_j, C_k.
Rat pairing_combination(const ClusterTree& tree, const Triple& t);
Rat pairing_combination(const RootConfig& cfg, const Valuation& v, const Triple& t);

}  // namespace hyperinv
