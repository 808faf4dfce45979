#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace hyperinv {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq_class.
class Rat {
public:
  Rat() = default;
  Rat(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(long num, long den);
  explicit Rat(const mpz_class& v) : q_(v) {}
  Rat(const mpz_class& num, const mpz_class& den);
  explicit Rat(mpq_class q);

  /// Parses "n/d" or "n" (optional sign on the numerator only).
  static Rat parse(std::string_view text);
  /// "n/d", or "n" when the denominator is 1.
  [[nodiscard]] std::string str() const;

  [[nodiscard]] mpz_class num() const { return q_.get_num(); }
  [[nodiscard]] mpz_class den() const { return q_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return q_; }

  [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
  [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(q_); }
  [[nodiscard]] double to_double() const { return q_.get_d(); }

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.q_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
  mpq_class q_;
};

Rat pow(const Rat& base, long exponent);
Rat abs(const Rat& x);

/// A point of the projective line over the rationals: finite value or infinity.
class ProjRat {
public:
  ProjRat(Rat v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  ProjRat(long v) : value_(Rat(v)) {}       // NOLINT(google-explicit-constructor)
  static ProjRat infinity() { return ProjRat(); }

  /// Accepts anything Rat::parse accepts, plus "inf".
  static ProjRat parse(std::string_view text);
  [[nodiscard]] std::string str() const;

  [[nodiscard]] bool is_infinite() const { return !value_.has_value(); }
  [[nodiscard]] const Rat& value() const;

  friend bool operator==(const ProjRat&, const ProjRat&) = default;

private:
  ProjRat() = default;
  std::optional<Rat> value_;
};

}  // namespace hyperinv
