#include "ibound/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace ibound {

namespace {

mpq_class canonical(mpz_class num, mpz_class den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  mpq_class q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

}  // namespace

Rational::Rational(long num, long den) : v_(canonical(num, den)) {}

Rational::Rational(mpz_class num, mpz_class den)
    : v_(canonical(std::move(num), std::move(den))) {}

Rational Rational::from_string(std::string_view text) {
  const auto bad = [&] {
    return std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
  };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  const auto parse_int = [&](std::string_view part) {
    if (part.empty()) throw bad();
    const bool negative = part[0] == '-';
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw bad();
    for (std::size_t i = start; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw bad();
    mpz_class magnitude(std::string(part.substr(start)), 10);
    return negative ? mpz_class(-magnitude) : magnitude;
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  mpz_class num = parse_int(text.substr(0, slash));
  mpz_class den = parse_int(text.substr(slash + 1));
  return Rational(std::move(num), std::move(den));
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

std::optional<std::int64_t> Rational::as_int64() const {
  if (!is_integer()) return std::nullopt;
  const mpz_class& num = v_.get_num();
  if (!num.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(num.get_si());
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace ibound
