#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace asymkit {

/// Exact rational number in canonical form (positive denominator, reduced).
///
/// Thin value wrapper over GMP's mpq_class. Every arithmetic result is
/// canonicalized, so equality is structural.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : q_(static_cast<long>(value)) {}  // NOLINT
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p/q", "-p/q" or an integer string. Throws ParseError otherwise.
  static Rational parse(std::string_view text);

  /// Exact value of a finite double.
  static Rational from_double_exact(double value);

  /// Best rational approximation with denominator <= max_denominator
  /// (continued-fraction convergents and semiconvergents).
  static Rational from_double(double value, long max_denominator);

  std::string to_string() const { return q_.get_str(); }
  double to_double() const { return q_.get_d(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  std::string numerator() const { return q_.get_num().get_str(); }
  std::string denominator() const { return q_.get_den().get_str(); }

  const mpq_class& raw() const { return q_; }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class q_{0};
};

Rational abs(const Rational& r);

/// Value in [0, +inf]. Used for suprema that may diverge (flat norms,
/// conjugate indices, semi-Lipschitz constants).
class Extended {
 public:
  Extended(Rational value) : value_(std::move(value)) {}  // NOLINT
  static Extended infinity() { Extended e{Rational{0}}; e.infinite_ = true; return e; }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  /// Precondition: is_finite().
  const Rational& value() const;

  std::string to_string() const { return infinite_ ? "inf" : value_.to_string(); }

  friend bool operator==(const Extended& a, const Extended& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

 private:
  Rational value_;
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const Extended& e);

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

Rational dot(const Vector& a, const Vector& b);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Rational& s, const Vector& v);
bool is_zero(const Vector& v);
Vector zeros(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t k);

/// Scales a nonzero vector to the primitive integer vector on the same ray.
Vector primitive_direction(const Vector& v);

std::string to_string(const Vector& v);

}  // namespace asymkit
