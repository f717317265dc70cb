#include "asymkit/rational.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "asymkit/error.hpp"

namespace asymkit {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw MalformedInput("rational with zero denominator");
  q_ = mpq_class(mpz_class(numerator), mpz_class(denominator));
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                               : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("not a rational: \"" + std::string(text) + "\"");
  }
  const std::string num_str(num[0] == '+' ? num.substr(1) : num);
  mpz_class n(num_str, 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator: \"" + std::string(text) + "\"");
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::from_double_exact(double value) {
  if (!std::isfinite(value)) throw ParseError("non-finite number");
  return Rational(mpq_class(value));
}

Rational Rational::from_double(double value, long max_denominator) {
  if (!std::isfinite(value)) throw ParseError("non-finite number");
  if (max_denominator < 1) throw MalformedInput("max_denominator must be >= 1");
  const mpq_class x(value);
  const mpz_class cap(max_denominator);
  mpq_class rest = x;
  // Convergent recurrence seeds: p_{-1}=1, p_{-2}=0, q_{-1}=0, q_{-2}=1.
  mpz_class p2 = 0, p1 = 1, q2 = 1, q1 = 0;
  while (true) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
    const mpz_class p = a * p1 + p2;
    const mpz_class q = a * q1 + q2;
    if (q > cap) {
      // Best semiconvergent with denominator <= cap.
      const mpz_class t = (cap - q2) / q1;
      const mpq_class semi(mpz_class(t * p1 + p2), mpz_class(t * q1 + q2));
      const mpq_class conv(p1, q1);
      mpq_class ds = abs(semi - x), dc = abs(conv - x);
      mpq_class best = ds < dc ? semi : conv;
      best.canonicalize();
      return Rational(best);
    }
    p2 = p1; p1 = p; q2 = q1; q1 = q;
    const mpq_class frac = rest - mpq_class(a);
    if (frac == 0) break;
    rest = 1 / frac;
  }
  mpq_class out(p1, q1);
  out.canonicalize();
  return Rational(out);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw MalformedInput("division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

const Rational& Extended::value() const {
  if (infinite_) throw MalformedInput("value() on infinite Extended");
  return value_;
}

std::ostream& operator<<(std::ostream& os, const Extended& e) { return os << e.to_string(); }

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw MalformedInput("dot: dimension mismatch");
  mpq_class acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i].raw() * b[i].raw();
  return Rational(std::move(acc));
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw MalformedInput("vector add: dimension mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw MalformedInput("vector sub: dimension mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vector operator-(const Vector& a) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vector zeros(std::size_t n) { return Vector(n, Rational{0}); }

Vector unit_vector(std::size_t n, std::size_t k) {
  Vector v = zeros(n);
  v.at(k) = 1;
  return v;
}

Vector primitive_direction(const Vector& v) {
  mpz_class lcm_den = 1;
  for (const auto& x : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.raw().get_den_mpz_t());
  std::vector<mpz_class> ints;
  ints.reserve(v.size());
  mpz_class g = 0;
  for (const auto& x : v) {
    mpz_class n = x.raw().get_num() * (lcm_den / x.raw().get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    ints.push_back(std::move(n));
  }
  if (g == 0) throw MalformedInput("primitive_direction of zero vector");
  Vector out;
  out.reserve(v.size());
  for (auto& n : ints) out.emplace_back(mpq_class(mpz_class(n / g)));
  return out;
}

std::string to_string(const Vector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ')';
  return os.str();
}

}  // namespace asymkit
