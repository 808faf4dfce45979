#pragma once

// Symmetric roots, symmetric discriminants and the admissible-pairing values
// they determine at a non-archimedean place.
//
// The symmetric root l_ijk is only defined up to a 2g-th root of unity, so the
// exact datum carried everywhere is l_ijk^{2g}, a rational number, together
// with nu(l_ijk) = nu(l_ijk^{2g}) / 2g.

#include "hyperinv/rat.hpp"
#include "hyperinv/valuation.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace hyperinv {

/// Genus g >= 2 together with the 2g+2 branch points on the projective line.
class RootConfig {
public:
  /// Validates: g >= 2, exactly 2g+2 roots, pairwise distinct, at most one at infinity.
  RootConfig(int genus, std::vector<ProjRat> roots, std::string note = {});

  [[nodiscard]] int genus() const { return genus_; }
  [[nodiscard]] std::size_t size() const { return roots_.size(); }
  [[nodiscard]] const std::vector<ProjRat>& roots() const { return roots_; }
  [[nodiscard]] const ProjRat& root(std::size_t i) const { return roots_.at(i); }
  /// Finite value of root i; throws if it is infinity.
  [[nodiscard]] const Rat& at(std::size_t i) const { return roots_.at(i).value(); }
  [[nodiscard]] bool all_finite() const;
  /// Provenance of any coordinate change applied to produce this config.
  [[nodiscard]] const std::string& note() const { return note_; }

  friend bool operator==(const RootConfig& a, const RootConfig& b) {
    return a.genus_ == b.genus_ && a.roots_ == b.roots_;
  }

private:
  int genus_;
  std::vector<ProjRat> roots_;
  std::string note_;
};

struct Triple {
  std::size_t i;
  std::size_t j;
  std::size_t k;

  /// Throws unless the three indices are pairwise distinct and < n.
  void validate(std::size_t n) const;
  [[nodiscard]] std::string str() const;
};

/// Fractional-linear map x -> (a x + b) / (c x + d), ad - bc != 0.
struct Mobius {
  Rat a, b, c, d;

  [[nodiscard]] ProjRat operator()(const ProjRat& x) const;
};

/// Moves the point at infinity (if any) to a finite value with
/// x -> 1/(x - c), c the smallest non-negative integer that is not a root.
RootConfig normalize_finite(const RootConfig& cfg);

/// Applies m to every root; the result keeps the genus.
RootConfig transform(const RootConfig& cfg, const Mobius& m);

/// l_ijk^{2g} = ((a_i-a_k)/(a_j-a_k))^{2g} * prod_{r != i,j} (a_j-a_r)/(a_i-a_r).
Rat symroot_pow(const RootConfig& cfg, const Triple& t);

/// nu(l_ijk) = nu(l_ijk^{2g}) / 2g. Requires p odd.
Rat symroot_val(const RootConfig& cfg, const Valuation& v, const Triple& t);

/// Cross-ratio (a_i-a_k)/(a_j-a_k) * (a_j-a_r)/(a_i-a_r).
Rat cross_ratio(const RootConfig& cfg, std::size_t i, std::size_t j, std::size_t k, std::size_t r);

/// Symmetric discriminant d_ij = prod over ordered pairs r != s (both != i,j)
/// of (l_ijr - l_ijs). Evaluated without choosing a 2g-th root by writing
/// l_ijr = m_r * t with m_r = (a_i-a_r)/(a_j-a_r) and t^{2g} known exactly.
Rat sym_discriminant(const RootConfig& cfg, std::size_t i, std::size_t j);

/// (w_i - w_j, w_k)_a in nu units: nu(l_ijk) / 2.
Rat pairing_diff_thmC(const RootConfig& cfg, const Valuation& v, const Triple& t);

/// (w_i - w_j, w_k - w_r)_a in nu units: nu(mu_ijkr) / 2.
Rat pairing_crossratio(const RootConfig& cfg, const Valuation& v, std::size_t i, std::size_t j,
                       std::size_t k, std::size_t r);

/// All ordered triples of distinct indices, lexicographic.
std::vector<Triple> all_triples(std::size_t n);

}  // namespace hyperinv
