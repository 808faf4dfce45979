#pragma once

#include "hyperinv/rat.hpp"

#include <compare>
#include <string>

namespace hyperinv {

/// p-adic order: an integer or +infinity (the order of zero).
class Order {
public:
  constexpr Order(long v) : value_(v), infinite_(false) {}  // NOLINT(google-explicit-constructor)
  static constexpr Order infinity() { return Order(); }

  [[nodiscard]] constexpr bool is_infinite() const { return infinite_; }
  /// Finite value; throws on infinity.
  [[nodiscard]] long value() const;
  [[nodiscard]] std::string str() const;

  friend constexpr bool operator==(const Order&, const Order&) = default;
  friend constexpr std::strong_ordering operator<=>(const Order& a, const Order& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  friend Order operator+(const Order& a, const Order& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Order(a.value_ + b.value_);
  }

private:
  constexpr Order() : value_(0), infinite_(true) {}
  long value_;
  bool infinite_;
};

/// The p-adic valuation on the rationals, |x| = exp(-nu(x)) up to the
/// log Nv scaling applied by callers.
class Valuation {
public:
  /// Throws ValidationError("not a prime") unless p is prime.
  explicit Valuation(long p);
  explicit Valuation(const mpz_class& p);

  [[nodiscard]] const mpz_class& prime() const { return p_; }
  [[nodiscard]] bool is_odd() const { return p_ != 2; }

  [[nodiscard]] Order order(const Rat& q) const;
  /// Like order() but throws on zero; for quantities known to be nonzero.
  [[nodiscard]] long finite_order(const Rat& q) const;
  /// -nu(q), in nu units; throws ValidationError("log of zero") for q = 0.
  [[nodiscard]] Rat log_abs(const Rat& q) const;

  /// Throws ValidationError("characteristic 2 excluded") for p = 2.
  void require_odd() const;

private:
  mpz_class p_;
};

/// p-adic order of q; throws ValidationError("not a prime") for composite p.
Order val(const Rat& q, long p);
/// -nu(q) in nu units.
Rat log_abs(const Rat& q, long p);

}  // namespace hyperinv
