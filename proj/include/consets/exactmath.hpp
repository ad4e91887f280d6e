#pragma once

// Exact scalars, dense integer matrices, characteristic polynomials and
// Z[sqrt 2] arithmetic. Nothing in here ever touches floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace consets {

// Expression templates off: arithmetic results are plain values, so `auto`
// and lambdas never capture dangling expression nodes.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

// Thrown when an operand combination is outside an operation's domain
// (mismatched orders, zero layer size, index out of range, ...).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Thrown when an internal exactness invariant is violated (e.g. a division
// that must be exact leaves a remainder).
class invariant_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline std::string to_string(const BigInt& x) { return x.str(); }

// Divides and insists that the division is exact.
inline BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
  if (den == 0) throw invariant_error(std::string(what) + ": division by zero");
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw invariant_error(std::string(what) + ": inexact division");
  return q;
}

// ---------------------------------------------------------------------------
// BigRational
// ---------------------------------------------------------------------------

// Reduced fraction with positive denominator.
class BigRational {
 public:
  BigRational() : num_(0), den_(1) {}
  BigRational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT implicit
  BigRational(long long n) : num_(n), den_(1) {}          // NOLINT implicit
  BigRational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw domain_error("BigRational: zero denominator");
    normalize();
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  friend BigRational operator+(const BigRational& a, const BigRational& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend BigRational operator-(const BigRational& a, const BigRational& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend BigRational operator*(const BigRational& a, const BigRational& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend BigRational operator/(const BigRational& a, const BigRational& b) {
    if (b.num_ == 0) throw domain_error("BigRational: division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  BigRational operator-() const {
    BigRational r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // "p/q", or "p" when the value is an integer.
  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  // Parses "p/q" or "p".
  static BigRational parse(const std::string& text) {
    try {
      auto slash = text.find('/');
      if (slash == std::string::npos) return BigRational(BigInt(text));
      return {BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1))};
    } catch (const std::runtime_error&) {
      throw domain_error("BigRational: cannot parse '" + text + "'");
    }
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

// Renders a rational in fixed notation with exactly `significant` significant
// digits, rounding half to even.
inline std::string to_decimal(const BigRational& value, int significant = 12) {
  if (significant < 1) throw domain_error("to_decimal: precision must be >= 1");
  if (value.num() == 0) {
    return significant == 1 ? "0" : "0." + std::string(significant - 1, '0');
  }
  const bool negative = value.num() < 0;
  const BigInt num = boost::multiprecision::abs(value.num());
  const BigInt& den = value.den();

  // exponent e with 10^e <= num/den < 10^(e+1)
  int e = static_cast<int>(num.str().size()) - static_cast<int>(den.str().size());
  auto pow10 = [](int k) { return boost::multiprecision::pow(BigInt(10), k); };
  auto at_least_pow10 = [&](int k) {  // num/den >= 10^k
    return k >= 0 ? num >= den * pow10(k) : num * pow10(-k) >= den;
  };
  while (!at_least_pow10(e)) --e;
  while (at_least_pow10(e + 1)) ++e;

  // scaled = num/den * 10^(significant-1-e), rounded half-even
  int shift = significant - 1 - e;
  BigInt sn = num, sd = den;
  if (shift >= 0) {
    sn *= pow10(shift);
  } else {
    sd *= pow10(-shift);
  }
  BigInt q, r;
  boost::multiprecision::divide_qr(sn, sd, q, r);
  BigInt twice = 2 * r;
  if (twice > sd || (twice == sd && (q & 1) == 1)) ++q;
  if (q == pow10(significant)) {  // rounded up to the next power of ten
    q /= 10;
    --shift;
  }

  std::string digits = q.str();
  std::string out;
  // value = digits * 10^(-shift)
  if (shift <= 0) {
    out = digits + std::string(-shift, '0');
  } else if (static_cast<std::size_t>(shift) < digits.size()) {
    out = digits.substr(0, digits.size() - shift) + "." + digits.substr(digits.size() - shift);
  } else {
    out = "0." + std::string(shift - digits.size(), '0') + digits;
  }
  return negative ? "-" + out : out;
}

// ---------------------------------------------------------------------------
// IntMatrix
// ---------------------------------------------------------------------------

class IntMatrix {
 public:
  explicit IntMatrix(std::size_t order) : order_(order), entries_(order * order) {
    if (order == 0) throw domain_error("IntMatrix: order must be positive");
  }

  static IntMatrix identity(std::size_t order) {
    IntMatrix m(order);
    for (std::size_t i = 0; i < order; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix diagonal(std::span<const BigInt> diag) {
    IntMatrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
    IntMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw domain_error("IntMatrix: rows must be square");
      for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t order() const { return order_; }

  // Zero-based access.
  BigInt& operator()(std::size_t i, std::size_t j) { return entries_[i * order_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }

  BigInt& at(std::size_t i, std::size_t j) {
    check(i, j);
    return (*this)(i, j);
  }
  const BigInt& at(std::size_t i, std::size_t j) const {
    check(i, j);
    return (*this)(i, j);
  }

  BigInt trace() const {
    BigInt t = 0;
    for (std::size_t i = 0; i < order_; ++i) t += (*this)(i, i);
    return t;
  }

  IntMatrix transpose() const {
    IntMatrix t(order_);
    for (std::size_t i = 0; i < order_; ++i)
      for (std::size_t j = 0; j < order_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < order_; ++i)
      for (std::size_t j = i + 1; j < order_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (e != 0) return false;
    return true;
  }

  std::vector<BigInt> row_sums() const {
    std::vector<BigInt> sums(order_);
    for (std::size_t i = 0; i < order_; ++i)
      for (std::size_t j = 0; j < order_; ++j) sums[i] += (*this)(i, j);
    return sums;
  }

  std::vector<BigInt> column(std::size_t j) const {
    std::vector<BigInt> col(order_);
    for (std::size_t i = 0; i < order_; ++i) col[i] = at(i, j);
    return col;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  IntMatrix& operator+=(const IntMatrix& rhs) {
    require_same_order(rhs);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
    return *this;
  }
  friend IntMatrix operator+(IntMatrix lhs, const IntMatrix& rhs) { return lhs += rhs; }

  IntMatrix& operator*=(const BigInt& s) {
    for (auto& e : entries_) e *= s;
    return *this;
  }

 private:
  void check(std::size_t i, std::size_t j) const {
    if (i >= order_ || j >= order_) throw domain_error("IntMatrix: index out of range");
  }
  void require_same_order(const IntMatrix& other) const {
    if (other.order_ != order_) throw domain_error("IntMatrix: order mismatch");
  }

  std::size_t order_;
  std::vector<BigInt> entries_;
};

inline IntMatrix mat_mul(const IntMatrix& lhs, const IntMatrix& rhs) {
  if (lhs.order() != rhs.order()) throw domain_error("mat_mul: order mismatch");
  const std::size_t n = lhs.order();
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (lhs(i, k) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += lhs(i, k) * rhs(k, j);
    }
  return out;
}

inline IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs) { return mat_mul(lhs, rhs); }

inline std::vector<BigInt> mat_vec(const IntMatrix& m, std::span<const BigInt> v) {
  if (v.size() != m.order()) throw domain_error("mat_vec: length mismatch");
  std::vector<BigInt> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (m(i, j) != 0) out[i] += m(i, j) * v[j];
  return out;
}

inline BigInt dot(std::span<const BigInt> a, std::span<const BigInt> b) {
  if (a.size() != b.size()) throw domain_error("dot: length mismatch");
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Small powers only; long horizons iterate vectors instead.
inline IntMatrix mat_pow(const IntMatrix& m, unsigned e) {
  IntMatrix result = IntMatrix::identity(m.order());
  IntMatrix base = m;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

// Fraction-free (Bareiss) determinant. Independent of char_poly.
inline BigInt determinant(IntMatrix m) {
  const std::size_t n = m.order();
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev, "determinant");
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// IntPolynomial
// ---------------------------------------------------------------------------

// Monic integer polynomial; coefficient(k) multiplies x^k.
class IntPolynomial {
 public:
  explicit IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty() || coeffs_.back() != 1)
      throw domain_error("IntPolynomial: polynomial must be monic");
  }

  std::size_t degree() const { return coeffs_.size() - 1; }
  const BigInt& coefficient(std::size_t k) const { return coeffs_.at(k); }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  // Horner evaluation with a matrix argument.
  IntMatrix evaluate(const IntMatrix& m) const {
    IntMatrix acc = IntMatrix::identity(m.order());
    for (std::size_t k = degree(); k-- > 0;) {
      acc = acc * m;
      for (std::size_t i = 0; i < m.order(); ++i) acc(i, i) += coeffs_[k];
    }
    return acc;
  }

  BigInt evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
    return acc;
  }

  // e.g. "λ^3 - 5λ^2 - 3λ + 1"
  std::string str(const std::string& var = "λ") const {
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      const BigInt& c = coeffs_[k];
      if (c == 0) continue;
      const BigInt mag = boost::multiprecision::abs(c);
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (mag != 1 || k == 0) out += mag.str();
      if (k >= 1) out += var;
      if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

// Characteristic polynomial det(x*I - M) by Faddeev-LeVerrier. Each step
// divides a trace by k; the division is checked to be exact.
inline IntPolynomial char_poly(const IntMatrix& m) {
  const std::size_t n = m.order();
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  IntMatrix aux(n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = M * M_{k-1} + c_{n-k+1} I
    aux = m * aux;
    for (std::size_t i = 0; i < n; ++i) aux(i, i) += c[n - k + 1];
    c[n - k] = -exact_div((m * aux).trace(), BigInt(k), "char_poly");
  }
  return IntPolynomial(std::move(c));
}

// ---------------------------------------------------------------------------
// QuadInt: a + b*sqrt(2)
// ---------------------------------------------------------------------------

struct QuadInt {
  BigInt a;
  BigInt b;

  QuadInt conjugate() const { return {a, -b}; }
  BigInt norm() const { return a * a - 2 * b * b; }

  friend QuadInt operator+(const QuadInt& x, const QuadInt& y) { return {x.a + y.a, x.b + y.b}; }
  friend QuadInt operator-(const QuadInt& x, const QuadInt& y) { return {x.a - y.a, x.b - y.b}; }
  friend QuadInt operator*(const QuadInt& x, const QuadInt& y) {
    return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend bool operator==(const QuadInt&, const QuadInt&) = default;
};

inline QuadInt quad_pow(QuadInt base, unsigned long long e) {
  QuadInt result{1, 0};
  while (e != 0) {
    if (e & 1ULL) result = result * base;
    e >>= 1ULL;
    if (e != 0) base = base * base;
  }
  return result;
}

}  // namespace consets
