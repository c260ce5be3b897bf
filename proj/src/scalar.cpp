#include "lieclass/scalar.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

namespace lieclass {

ScalarMode ScalarMode::approx(double eps) {
  if (!(eps >= 0.0) || !std::isfinite(eps)) {
    throw std::invalid_argument("tolerance must be a finite non-negative number");
  }
  return ScalarMode(true, eps);
}

std::string ScalarMode::describe() const {
  if (is_exact()) return "exact";
  std::ostringstream os;
  os << "approx(eps=" << eps_ << ")";
  return os.str();
}

Scalar Scalar::from_int(long n, ScalarMode mode) {
  if (mode.is_exact()) return Scalar(mpq_class(n));
  return Scalar(static_cast<double>(n), mode);
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::rational(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  return Scalar(std::move(c));
}

Scalar Scalar::approx(double v, double eps) { return Scalar(v, ScalarMode::approx(eps)); }

Scalar Scalar::from_rational(const mpq_class& q, ScalarMode mode) {
  if (mode.is_exact()) return rational(q);
  return Scalar(q.get_d(), mode);
}

const mpq_class& Scalar::as_rational() const {
  if (!is_exact()) throw ModeMismatch("rational value requested from an approximate scalar");
  return std::get<mpq_class>(value_);
}

double Scalar::to_double() const {
  if (is_exact()) return std::get<mpq_class>(value_).get_d();
  return std::get<double>(value_);
}

void Scalar::check_mode(const Scalar& o) const {
  if (!(mode_ == o.mode_)) {
    throw ModeMismatch("scalar mode mismatch: " + mode_.describe() + " vs " + o.mode_.describe());
  }
}

bool Scalar::is_zero() const {
  if (is_exact()) return sgn(std::get<mpq_class>(value_)) == 0;
  return std::fabs(std::get<double>(value_)) <= mode_.tolerance();
}

bool Scalar::is_literal_zero() const {
  if (is_exact()) return sgn(std::get<mpq_class>(value_)) == 0;
  return std::get<double>(value_) == 0.0;
}

int Scalar::sign() const {
  if (is_exact()) return sgn(std::get<mpq_class>(value_));
  if (is_zero()) return 0;
  return std::get<double>(value_) < 0 ? -1 : 1;
}

Scalar Scalar::abs() const {
  if (is_exact()) return Scalar(mpq_class(::abs(std::get<mpq_class>(value_))));
  return Scalar(std::fabs(std::get<double>(value_)), mode_);
}

std::optional<Scalar> Scalar::sqrt() const {
  if (!is_exact()) {
    double v = std::get<double>(value_);
    if (v < 0) {
      if (v >= -mode_.tolerance()) return Scalar(0.0, mode_);
      return std::nullopt;
    }
    return Scalar(std::sqrt(v), mode_);
  }
  const mpq_class& q = std::get<mpq_class>(value_);
  if (sgn(q) < 0) return std::nullopt;
  mpz_class n = q.get_num();
  mpz_class d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn = ::sqrt(n);
  mpz_class rd = ::sqrt(d);
  return rational(mpq_class(rn, rd));
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(mpq_class(-std::get<mpq_class>(value_)));
  return Scalar(-std::get<double>(value_), mode_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_mode(o);
  if (is_exact()) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  } else {
    std::get<double>(value_) += std::get<double>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_mode(o);
  if (is_exact()) {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  } else {
    std::get<double>(value_) -= std::get<double>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_mode(o);
  if (is_exact()) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  } else {
    std::get<double>(value_) *= std::get<double>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_mode(o);
  if (is_exact()) {
    if (sgn(std::get<mpq_class>(o.value_)) == 0) throw std::domain_error("division by zero");
    std::get<mpq_class>(value_) /= std::get<mpq_class>(o.value_);
  } else {
    if (std::get<double>(o.value_) == 0.0) throw std::domain_error("division by zero");
    std::get<double>(value_) /= std::get<double>(o.value_);
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_mode(b);
  if (a.is_exact()) return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
  return std::fabs(std::get<double>(a.value_) - std::get<double>(b.value_)) <= a.mode_.tolerance();
}

bool operator<(const Scalar& a, const Scalar& b) {
  a.check_mode(b);
  if (a.is_exact()) return std::get<mpq_class>(a.value_) < std::get<mpq_class>(b.value_);
  return std::get<double>(a.value_) < std::get<double>(b.value_) - a.mode_.tolerance();
}

bool Scalar::identical(const Scalar& o) const {
  if (!(mode_ == o.mode_)) return false;
  if (is_exact()) return std::get<mpq_class>(value_) == std::get<mpq_class>(o.value_);
  double x = std::get<double>(value_);
  double y = std::get<double>(o.value_);
  return x == y || (std::isnan(x) && std::isnan(y));
}

std::string Scalar::to_string() const {
  if (is_exact()) return std::get<mpq_class>(value_).get_str();
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, std::get<double>(value_));
  std::string s(buf, res.ptr);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

namespace {

std::string_view trim(std::string_view t) {
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (!t.empty() && is_space(t.front())) t.remove_prefix(1);
  while (!t.empty() && is_space(t.back())) t.remove_suffix(1);
  return t;
}

bool is_integer_literal(std::string_view t) {
  if (!t.empty() && (t.front() == '+' || t.front() == '-')) t.remove_prefix(1);
  if (t.empty()) return false;
  for (char c : t) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view t) {
  if (!t.empty() && t.front() == '+') t.remove_prefix(1);
  return mpz_class(std::string(t), 10);
}

}  // namespace

Scalar parse_scalar(std::string_view text, ScalarMode mode) {
  std::string_view t = trim(text);
  auto fail = [&](const std::string& why) {
    return ScalarParseError("invalid scalar literal \"" + std::string(text) + "\": " + why);
  };
  if (t.empty()) throw fail("empty");

  std::optional<mpq_class> exact_value;
  if (auto slash = t.find('/'); slash != std::string_view::npos) {
    std::string_view num = trim(t.substr(0, slash));
    std::string_view den = trim(t.substr(slash + 1));
    if (!is_integer_literal(num) || !is_integer_literal(den)) throw fail("expected p/q with integers");
    mpz_class d = parse_integer(den);
    if (d == 0) throw fail("zero denominator");
    mpq_class q(parse_integer(num), d);
    q.canonicalize();
    exact_value = std::move(q);
  } else if (is_integer_literal(t)) {
    exact_value = mpq_class(parse_integer(t));
  }

  if (exact_value) return Scalar::from_rational(*exact_value, mode);
  if (mode.is_exact()) throw fail("decimal literals need float scalars; use p/q");

  std::string_view body = t;
  if (!body.empty() && body.front() == '+') body.remove_prefix(1);
  double v = 0.0;
  auto res = std::from_chars(body.data(), body.data() + body.size(), v);
  if (res.ec != std::errc() || res.ptr != body.data() + body.size() || !std::isfinite(v)) {
    throw fail("malformed number");
  }
  return Scalar::approx(v, mode.tolerance());
}

}  // namespace lieclass
