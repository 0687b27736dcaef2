#include "holant/algebra.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "holant/errors.hpp"

namespace holant {

Rational::Rational(long n, long d) : v_(n, d) {
  if (d == 0) throw DomainError("division by zero");
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
  if (sgn(v_.get_den()) == 0) throw DomainError("division by zero");
  v_.canonicalize();
}

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
  if (o.is_zero()) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

namespace {

std::optional<mpz_class> sqrt_integer(const mpz_class& n) {
  if (sgn(n) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

}  // namespace

std::optional<Rational> sqrt_exact(const Rational& q) {
  auto n = sqrt_integer(q.numerator());
  auto d = sqrt_integer(q.denominator());
  if (!n || !d) return std::nullopt;
  return Rational(mpq_class(*n, *d));
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  const Rational n = o.norm();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

GaussianRational pow(GaussianRational base, long k) {
  if (k < 0) {
    if (base.is_zero()) throw DomainError("division by zero");
    base = GaussianRational(1) / base;
    k = -k;
  }
  GaussianRational result(1);
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

GaussianRational i_pow(long r) {
  switch (((r % 4) + 4) % 4) {
    case 0: return 1;
    case 1: return {0, 1};
    case 2: return -1;
    default: return {0, -1};
  }
}

std::optional<int> power_of_i(const GaussianRational& z) {
  for (int r = 0; r < 4; ++r)
    if (z == i_pow(r)) return r;
  return std::nullopt;
}

// w = u + iv with w^2 = x + iy: |w|^2 = m = sqrt(x^2+y^2), u^2 = (m+x)/2, v^2 = (m-x)/2.
std::optional<GaussianRational> sqrt_exact(const GaussianRational& z) {
  if (z.is_zero()) return GaussianRational(0);
  auto m = sqrt_exact(z.norm());
  if (!m) return std::nullopt;
  auto u = sqrt_exact((*m + z.real()) / Rational(2));
  auto v = sqrt_exact((*m - z.real()) / Rational(2));
  if (!u || !v) return std::nullopt;
  Rational vi = z.imag().sign() < 0 ? -*v : *v;
  GaussianRational w(*u, vi);
  if (w * w != z) return std::nullopt;
  return w;
}

std::string to_string(const GaussianRational& z) {
  const Rational& re = z.real();
  const Rational& im = z.imag();
  if (im.is_zero()) return re.str();
  std::string imag;
  if (im == Rational(1))
    imag = "i";
  else if (im == Rational(-1))
    imag = "-i";
  else
    imag = im.str() + "i";
  if (re.is_zero()) return imag;
  return re.str() + (im.sign() > 0 ? "+" : "") + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << to_string(z); }

namespace {

struct LiteralReader {
  std::string_view s;
  std::size_t pos = 0;

  bool at_end() const { return pos >= s.size(); }
  char peek() const { return at_end() ? '\0' : s[pos]; }

  std::string digits() {
    std::size_t start = pos;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return std::string(s.substr(start, pos - start));
  }

  // Unsigned rational magnitude; empty optional if no digits are present.
  std::optional<Rational> magnitude() {
    std::string num = digits();
    if (num.empty()) return std::nullopt;
    if (peek() != '/') return Rational(mpq_class(mpz_class(num)));
    ++pos;
    std::string den = digits();
    if (den.empty()) throw ParseError("missing denominator in '" + std::string(s) + "'");
    mpz_class d(den);
    if (sgn(d) == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    return Rational(mpq_class(mpz_class(num), d));
  }
};

std::string_view trim(std::string_view t) {
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
  return t;
}

}  // namespace

GaussianRational parse_scalar(std::string_view text) {
  const std::string_view t = trim(text);
  if (t.empty()) throw ParseError("empty scalar literal");
  LiteralReader in{t};
  auto fail = [&]() { return ParseError("bad scalar literal '" + std::string(t) + "'"); };

  // A term is [sign] [magnitude] [i]; at least one of magnitude or i is present.
  auto term = [&](bool sign_required, Rational& value, bool& imaginary) {
    int sign = 1;
    if (in.peek() == '+' || in.peek() == '-') {
      sign = in.peek() == '-' ? -1 : 1;
      ++in.pos;
    } else if (sign_required) {
      throw fail();
    }
    auto mag = in.magnitude();
    imaginary = false;
    if (in.peek() == 'i') {
      imaginary = true;
      ++in.pos;
    }
    if (!mag && !imaginary) throw fail();
    value = mag ? *mag : Rational(1);
    if (sign < 0) value = -value;
  };

  Rational first;
  bool first_imag = false;
  term(false, first, first_imag);
  if (in.at_end()) return first_imag ? GaussianRational(0, first) : GaussianRational(first);
  if (first_imag) throw fail();
  Rational second;
  bool second_imag = false;
  term(true, second, second_imag);
  if (!second_imag || !in.at_end()) throw fail();
  return {first, second};
}

Matrix mat(std::initializer_list<std::initializer_list<Scalar>> rows) {
  const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index c = r == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
  Matrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != c) throw DomainError("ragged matrix literal");
    Eigen::Index j = 0;
    for (const auto& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

Vector vec(std::initializer_list<Scalar> entries) {
  Vector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const auto& x : entries) v(i++) = x;
  return v;
}

Matrix parse_matrix(std::string_view text) {
  std::string_view t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw ParseError("matrix literal must look like [a,b;c,d]");
  t = t.substr(1, t.size() - 2);
  std::vector<std::vector<Scalar>> rows;
  std::size_t start = 0;
  while (true) {
    std::size_t semi = t.find(';', start);
    std::string_view row = t.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
    std::vector<Scalar> entries;
    std::size_t s = 0;
    while (true) {
      std::size_t comma = row.find(',', s);
      entries.push_back(parse_scalar(row.substr(s, comma == std::string_view::npos ? std::string_view::npos : comma - s)));
      if (comma == std::string_view::npos) break;
      s = comma + 1;
    }
    rows.push_back(std::move(entries));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  const std::size_t cols = rows.front().size();
  Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ParseError("ragged matrix literal");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << '[';
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    if (r) os << ';';
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) os << ',';
      os << m(r, c);
    }
  }
  os << ']';
  return os.str();
}

}  // namespace holant
