#include "hyperinv/symroots.hpp"

#include "hyperinv/errors.hpp"

#include <algorithm>

namespace hyperinv {

namespace {

void require_finite(const RootConfig& cfg) {
  if (!cfg.all_finite()) {
    throw ValidationError("configuration has a root at infinity; apply normalize_finite first");
  }
}

Rat diff(const RootConfig& cfg, std::size_t a, std::size_t b) {
  Rat d = cfg.at(a) - cfg.at(b);
  if (d.is_zero()) throw ValidationError("degenerate configuration");
  return d;
}

// t^{2g} = prod_{r != i,j} (a_j - a_r)/(a_i - a_r)
Rat scale_pow(const RootConfig& cfg, std::size_t i, std::size_t j) {
  Rat out(1);
  for (std::size_t r = 0; r < cfg.size(); ++r) {
    if (r == i || r == j) continue;
    out *= diff(cfg, j, r) / diff(cfg, i, r);
  }
  return out;
}

}  // namespace

RootConfig::RootConfig(int genus, std::vector<ProjRat> roots, std::string note)
    : genus_(genus), roots_(std::move(roots)), note_(std::move(note)) {
  if (genus_ < 2) throw ValidationError("genus must be at least 2");
  if (roots_.size() != static_cast<std::size_t>(2 * genus_ + 2)) {
    throw ValidationError("expected " + std::to_string(2 * genus_ + 2) + " roots for genus " +
                          std::to_string(genus_) + ", got " + std::to_string(roots_.size()));
  }
  const auto infinities = std::count_if(roots_.begin(), roots_.end(),
                                        [](const ProjRat& x) { return x.is_infinite(); });
  if (infinities > 1) throw ValidationError("at most one root may be at infinity");
  for (std::size_t a = 0; a < roots_.size(); ++a) {
    for (std::size_t b = a + 1; b < roots_.size(); ++b) {
      if (roots_[a] == roots_[b]) {
        throw ValidationError("degenerate configuration: roots " + std::to_string(a) + " and " +
                              std::to_string(b) + " coincide");
      }
    }
  }
}

bool RootConfig::all_finite() const {
  return std::none_of(roots_.begin(), roots_.end(), [](const ProjRat& x) { return x.is_infinite(); });
}

void Triple::validate(std::size_t n) const {
  if (i >= n || j >= n || k >= n) throw ValidationError("triple index out of range");
  if (i == j || j == k || i == k) throw ValidationError("triple indices must be distinct");
}

std::string Triple::str() const {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

ProjRat Mobius::operator()(const ProjRat& x) const {
  if ((a * d - b * c).is_zero()) throw ValidationError("singular fractional-linear map");
  if (x.is_infinite()) {
    if (c.is_zero()) return ProjRat::infinity();
    return ProjRat(a / c);
  }
  const Rat den = c * x.value() + d;
  if (den.is_zero()) return ProjRat::infinity();
  return ProjRat((a * x.value() + b) / den);
}

RootConfig normalize_finite(const RootConfig& cfg) {
  if (cfg.all_finite()) return cfg;
  long c = 0;
  auto is_root = [&](long v) {
    return std::any_of(cfg.roots().begin(), cfg.roots().end(),
                       [&](const ProjRat& x) { return !x.is_infinite() && x.value() == Rat(v); });
  };
  while (is_root(c)) ++c;
  const Mobius m{Rat(0), Rat(1), Rat(1), Rat(-c)};
  std::vector<ProjRat> moved;
  moved.reserve(cfg.size());
  for (const auto& x : cfg.roots()) moved.push_back(m(x));
  return RootConfig(cfg.genus(), std::move(moved), "x -> 1/(x - " + std::to_string(c) + ")");
}

RootConfig transform(const RootConfig& cfg, const Mobius& m) {
  std::vector<ProjRat> moved;
  moved.reserve(cfg.size());
  for (const auto& x : cfg.roots()) moved.push_back(m(x));
  return RootConfig(cfg.genus(), std::move(moved), cfg.note());
}

Rat symroot_pow(const RootConfig& cfg, const Triple& t) {
  require_finite(cfg);
  t.validate(cfg.size());
  const Rat ratio = diff(cfg, t.i, t.k) / diff(cfg, t.j, t.k);
  return pow(ratio, 2L * cfg.genus()) * scale_pow(cfg, t.i, t.j);
}

Rat symroot_val(const RootConfig& cfg, const Valuation& v, const Triple& t) {
  v.require_odd();
  const Rat power = symroot_pow(cfg, t);
  return Rat(v.finite_order(power), 2L * cfg.genus());
}

Rat cross_ratio(const RootConfig& cfg, std::size_t i, std::size_t j, std::size_t k, std::size_t r) {
  require_finite(cfg);
  const std::size_t idx[] = {i, j, k, r};
  for (std::size_t a = 0; a < 4; ++a) {
    if (idx[a] >= cfg.size()) throw ValidationError("cross-ratio index out of range");
    for (std::size_t b = a + 1; b < 4; ++b) {
      if (idx[a] == idx[b]) throw ValidationError("cross-ratio indices must be distinct");
    }
  }
  return diff(cfg, i, k) / diff(cfg, j, k) * (diff(cfg, j, r) / diff(cfg, i, r));
}

Rat sym_discriminant(const RootConfig& cfg, std::size_t i, std::size_t j) {
  require_finite(cfg);
  if (i >= cfg.size() || j >= cfg.size()) throw ValidationError("index out of range");
  if (i == j) throw ValidationError("discriminant indices must be distinct");
  std::vector<Rat> m;
  for (std::size_t r = 0; r < cfg.size(); ++r) {
    if (r == i || r == j) continue;
    m.push_back(diff(cfg, i, r) / diff(cfg, j, r));
  }
  Rat prod(1);
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t s = 0; s < m.size(); ++s) {
      if (r != s) prod *= m[r] - m[s];
    }
  }
  if (prod.is_zero()) throw ValidationError("degenerate configuration");
  // 2g(2g-1) ordered pairs, each contributing one factor of t.
  return pow(scale_pow(cfg, i, j), 2L * cfg.genus() - 1) * prod;
}

Rat pairing_diff_thmC(const RootConfig& cfg, const Valuation& v, const Triple& t) {
  return symroot_val(cfg, v, t) / Rat(2);
}

Rat pairing_crossratio(const RootConfig& cfg, const Valuation& v, std::size_t i, std::size_t j,
                       std::size_t k, std::size_t r) {
  v.require_odd();
  return Rat(v.finite_order(cross_ratio(cfg, i, j, k, r)), 2);
}

std::vector<Triple> all_triples(std::size_t n) {
  std::vector<Triple> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (i != j && j != k && i != k) out.push_back({i, j, k});
      }
    }
  }
  return out;
}

}  // namespace hyperinv
