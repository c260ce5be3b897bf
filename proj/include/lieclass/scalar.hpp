#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace lieclass {

/// Arithmetic mode of a Scalar. Approx values carry the tolerance used by
/// their equality and zero tests.
class ScalarMode {
 public:
  static constexpr double kDefaultTolerance = 1e-9;

  static ScalarMode exact() { return ScalarMode(false, 0.0); }
  static ScalarMode approx(double eps = kDefaultTolerance);

  bool is_exact() const { return !approx_; }
  double tolerance() const { return eps_; }

  bool operator==(const ScalarMode&) const = default;
  std::string describe() const;

 private:
  ScalarMode(bool approx, double eps) : approx_(approx), eps_(eps) {}
  bool approx_;
  double eps_;
};

class ModeMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ScalarParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact rational (lowest terms, positive denominator) or binary64 value.
class Scalar {
 public:
  /// Exact zero.
  Scalar() : value_(mpq_class(0)), mode_(ScalarMode::exact()) {}

  static Scalar zero(ScalarMode mode) { return from_int(0, mode); }
  static Scalar one(ScalarMode mode) { return from_int(1, mode); }
  static Scalar from_int(long n, ScalarMode mode);
  static Scalar rational(long num, long den = 1);
  static Scalar rational(const mpq_class& q);
  static Scalar approx(double v, double eps = ScalarMode::kDefaultTolerance);
  /// Converts a rational value into `mode` (rounding when approximate).
  static Scalar from_rational(const mpq_class& q, ScalarMode mode);

  ScalarMode mode() const { return mode_; }
  bool is_exact() const { return mode_.is_exact(); }

  /// Requires exact mode.
  const mpq_class& as_rational() const;
  double to_double() const;

  /// Exact: value == 0. Approx: |value| <= eps.
  bool is_zero() const;
  /// Stored value is exactly 0 in either mode. Used to skip work, never to decide.
  bool is_literal_zero() const;
  /// Negative, zero or positive; approx values within eps count as zero.
  int sign() const;
  Scalar abs() const;
  /// Square root when it stays in the mode: exact values need a rational root.
  std::optional<Scalar> sqrt() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws std::domain_error on division by zero.
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend Scalar operator+(Scalar a, long b) { return a += from_int(b, a.mode_); }
  friend Scalar operator-(Scalar a, long b) { return a -= from_int(b, a.mode_); }
  friend Scalar operator*(Scalar a, long b) { return a *= from_int(b, a.mode_); }
  friend Scalar operator/(Scalar a, long b) { return a /= from_int(b, a.mode_); }
  friend Scalar operator*(long a, Scalar b) { return b *= from_int(a, b.mode_); }

  /// Mode-dependent equality: exact comparison, or |a-b| <= eps.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, long b) { return a == from_int(b, a.mode_); }
  /// Strict ordering; approx values within eps are not ordered.
  friend bool operator<(const Scalar& a, const Scalar& b);
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }

  /// Bitwise identity of the stored value, including the mode.
  bool identical(const Scalar& o) const;

  /// "p/q", "p" or a round-trippable decimal ("0.5", "1e-20", "3.0").
  std::string to_string() const;

 private:
  explicit Scalar(mpq_class q) : value_(std::move(q)), mode_(ScalarMode::exact()) {}
  Scalar(double d, ScalarMode m) : value_(d), mode_(m) {}
  void check_mode(const Scalar& o) const;

  std::variant<mpq_class, double> value_;
  ScalarMode mode_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Parses a literal in `mode`. Exact mode accepts "p/q" and integers; approx
/// mode additionally accepts decimal and scientific literals.
Scalar parse_scalar(std::string_view text, ScalarMode mode);

}  // namespace lieclass
