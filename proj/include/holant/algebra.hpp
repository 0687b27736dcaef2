#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace holant {

// Exact rational number; always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(long n, long d);
  explicit Rational(const mpz_class& n) : v_(n) {}
  explicit Rational(mpq_class v);

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  std::string str() const { return v_.get_str(); }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);
std::optional<Rational> sqrt_exact(const Rational& q);

// Element of Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int n) : re_(n) {}
  GaussianRational(long n) : re_(n) {}
  GaussianRational(Rational re) : re_(std::move(re)) {}
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {0, 1}; }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

 private:
  Rational re_;
  Rational im_;
};

// Integer powers; negative exponents require a nonzero base.
GaussianRational pow(GaussianRational base, long k);
std::optional<GaussianRational> sqrt_exact(const GaussianRational& z);
// Index r in {0,1,2,3} with z == i^r, if any.
std::optional<int> power_of_i(const GaussianRational& z);
GaussianRational i_pow(long r);

std::string to_string(const GaussianRational& z);
std::ostream& operator<<(std::ostream& os, const GaussianRational& z);
GaussianRational parse_scalar(std::string_view text);

using Scalar = GaussianRational;
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

Matrix mat(std::initializer_list<std::initializer_list<Scalar>> rows);
Vector vec(std::initializer_list<Scalar> entries);

// "[a,b;c,d]" with rows separated by ';'.
Matrix parse_matrix(std::string_view text);
std::string to_string(const Matrix& m);

}  // namespace holant

namespace Eigen {

template <>
struct NumTraits<holant::Rational> : GenericNumTraits<holant::Rational> {
  typedef holant::Rational Real;
  typedef holant::Rational NonInteger;
  typedef holant::Rational Literal;
  typedef holant::Rational Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 40,
    MulCost = 80
  };
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<holant::GaussianRational> : GenericNumTraits<holant::GaussianRational> {
  typedef holant::GaussianRational Real;
  typedef holant::GaussianRational NonInteger;
  typedef holant::GaussianRational Literal;
  typedef holant::GaussianRational Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 80,
    MulCost = 240
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
