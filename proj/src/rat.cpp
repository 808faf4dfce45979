#include "hyperinv/rat.hpp"

#include "hyperinv/errors.hpp"

#include <cctype>
#include <ostream>

namespace hyperinv {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c)) == 0) return false;
  }
  return true;
}

}  // namespace

Rat::Rat(long num, long den) : Rat(mpz_class(num), mpz_class(den)) {}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw ValidationError("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat::Rat(mpq_class q) : q_(std::move(q)) {
  if (q_.get_den() == 0) throw ValidationError("zero denominator");
  q_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num_part = text.substr(0, slash);
  std::string_view den_part = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  std::string_view digits = num_part;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits) || !all_digits(den_part)) {
    throw ValidationError("malformed rational \"" + std::string(text) + "\"");
  }
  mpz_class num(std::string(digits), 10);
  if (num_part.front() == '-') num = -num;
  mpz_class den(std::string(den_part), 10);
  return Rat(num, den);
}

std::string Rat::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw ValidationError("division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat pow(const Rat& base, long exponent) {
  if (exponent < 0) return pow(Rat(1) / base, -exponent);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rat(num, den);
}

Rat abs(const Rat& x) { return x.sign() < 0 ? -x : x; }

ProjRat ProjRat::parse(std::string_view text) {
  if (text == "inf") return infinity();
  return ProjRat(Rat::parse(text));
}

std::string ProjRat::str() const { return is_infinite() ? "inf" : value_->str(); }

const Rat& ProjRat::value() const {
  if (!value_) throw ValidationError("point at infinity has no finite value");
  return *value_;
}

}  // namespace hyperinv
