#include "hyperinv/valuation.hpp"

#include "hyperinv/errors.hpp"

namespace hyperinv {

namespace {

long remove_factor(mpz_class n, const mpz_class& p) {
  if (n < 0) n = -n;
  long count = 0;
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0) {
    mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    ++count;
  }
  return count;
}

}  // namespace

long Order::value() const {
  if (infinite_) throw ValidationError("order is infinite");
  return value_;
}

std::string Order::str() const { return infinite_ ? "inf" : std::to_string(value_); }

Valuation::Valuation(long p) : Valuation(mpz_class(p)) {}

Valuation::Valuation(const mpz_class& p) : p_(p) {
  if (p_ < 2 || mpz_probab_prime_p(p_.get_mpz_t(), 30) == 0) throw ValidationError("not a prime");
}

Order Valuation::order(const Rat& q) const {
  if (q.is_zero()) return Order::infinity();
  return Order(remove_factor(q.num(), p_) - remove_factor(q.den(), p_));
}

long Valuation::finite_order(const Rat& q) const {
  if (q.is_zero()) throw ValidationError("degenerate configuration");
  return order(q).value();
}

Rat Valuation::log_abs(const Rat& q) const {
  if (q.is_zero()) throw ValidationError("log of zero");
  return Rat(-order(q).value());
}

void Valuation::require_odd() const {
  if (!is_odd()) throw ValidationError("characteristic 2 excluded");
}

Order val(const Rat& q, long p) { return Valuation(p).order(q); }

Rat log_abs(const Rat& q, long p) { return Valuation(p).log_abs(q); }

}  // namespace hyperinv
