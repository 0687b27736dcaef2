#include "holant/interpolation.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <set>

#include "holant/errors.hpp"
#include "holant/gadget.hpp"
#include "holant/linalg.hpp"

namespace holant {

Scalar krylov_determinant(const Matrix& m, const Vector& s) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n || s.size() != n) throw DomainError("krylov: dimensions disagree");
  Matrix k(n, n);
  Vector col = s;
  for (Eigen::Index j = 0; j < n; ++j) {
    k.col(j) = col;
    col = m * col;
  }
  return det(k);
}

// Faddeev-LeVerrier.
std::vector<Scalar> characteristic_polynomial(const Matrix& m) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw DomainError("characteristic polynomial of a non-square matrix");
  std::vector<Scalar> c(static_cast<std::size_t>(n) + 1, Scalar(0));
  c[static_cast<std::size_t>(n)] = 1;
  Matrix mk = Matrix::Zero(n, n);
  const Matrix id = Matrix::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    mk = m * mk + c[static_cast<std::size_t>(n - k + 1)] * id;
    Matrix amk = m * mk;
    c[static_cast<std::size_t>(n - k)] = -amk.trace() / Scalar(static_cast<long>(k));
  }
  return c;
}

namespace {

double to_double(const Rational& q) { return q.value().get_d(); }

std::complex<double> to_complex(const Scalar& z) { return {to_double(z.real()), to_double(z.imag())}; }

Scalar evaluate(const std::vector<Scalar>& c, const Scalar& x) {
  Scalar acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Divide by (x - r), assuming r is a root.
std::vector<Scalar> deflate(const std::vector<Scalar>& c, const Scalar& r) {
  const std::size_t n = c.size() - 1;
  std::vector<Scalar> q(n);
  Scalar carry(0);
  for (std::size_t k = n; k-- > 0;) {
    carry = c[k + 1] + carry * r;
    q[k] = carry;
  }
  return q;
}

mpz_class lcm_denominators(const std::vector<Scalar>& c) {
  mpz_class l = 1;
  for (const auto& z : c) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), z.real().denominator().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), z.imag().denominator().get_mpz_t());
  }
  return l;
}

// Rounds numerical roots to Gaussian rationals y / D, where every rational root has that shape.
std::optional<Scalar> one_exact_root(const std::vector<Scalar>& c) {
  const std::size_t n = c.size() - 1;
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  const std::complex<double> lead = to_complex(c[n]);
  for (std::size_t k = 0; k < n; ++k) {
    companion(0, static_cast<Eigen::Index>(k)) = -to_complex(c[n - 1 - k]) / lead;
    if (k + 1 < n) companion(static_cast<Eigen::Index>(k + 1), static_cast<Eigen::Index>(k)) = 1.0;
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) return std::nullopt;
  const mpz_class d = lcm_denominators(c) * c[n].norm().numerator();
  const double dd = d.get_d();
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    const std::complex<double> y = solver.eigenvalues()(k) * dd;
    const double re0 = std::round(y.real()), im0 = std::round(y.imag());
    for (double dr : {0.0, -1.0, 1.0})
      for (double di : {0.0, -1.0, 1.0}) {
        Scalar cand(Rational(mpq_class(mpz_class(re0 + dr), d)), Rational(mpq_class(mpz_class(im0 + di), d)));
        if (evaluate(c, cand).is_zero()) return cand;
      }
  }
  return std::nullopt;
}

}  // namespace

std::vector<Scalar> eigenvalues(const Matrix& m) {
  std::vector<Scalar> poly = characteristic_polynomial(m);
  std::vector<Scalar> roots;
  while (poly.size() > 1) {
    if (poly.size() == 2) {
      roots.push_back(-poly[0] / poly[1]);
      break;
    }
    if (poly.size() == 3) {
      const Scalar disc = poly[1] * poly[1] - Scalar(4) * poly[0] * poly[2];
      auto r = sqrt_exact(disc);
      if (!r) throw Undecidable("eigenvalues involve the square root of " + to_string(disc));
      roots.push_back((-poly[1] + *r) / (Scalar(2) * poly[2]));
      roots.push_back((-poly[1] - *r) / (Scalar(2) * poly[2]));
      break;
    }
    auto r = one_exact_root(poly);
    if (!r) throw Undecidable("characteristic polynomial does not split over Q(i)");
    roots.push_back(*r);
    poly = deflate(poly, *r);
  }
  return roots;
}

std::optional<RowVector> orthogonal_row_eigenvector(const Matrix& m, const Vector& s) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n || s.size() != n) throw DomainError("dimensions disagree");
  std::vector<Scalar> distinct;
  for (const auto& l : eigenvalues(m))
    if (std::find(distinct.begin(), distinct.end(), l) == distinct.end()) distinct.push_back(l);
  for (const auto& lambda : distinct) {
    Matrix shifted = (m - lambda * Matrix::Identity(n, n)).transpose();
    auto basis = kernel_basis(shifted);
    std::vector<Scalar> dots;
    for (const auto& b : basis) {
      Scalar d = b.dot(s);
      if (d.is_zero()) return RowVector(b.transpose());
      dots.push_back(d);
    }
    if (basis.size() >= 2) return RowVector((dots[1] * basis[0] - dots[0] * basis[1]).transpose());
  }
  return std::nullopt;
}

std::optional<int> finite_projective_order(const Matrix& m, int bound) {
  if (m.rows() != m.cols()) throw DomainError("order of a non-square matrix");
  if (det(m).is_zero()) throw DomainError("matrix is singular");
  Matrix p = m;
  for (int l = 1; l <= bound; ++l) {
    if (scalar_identity_factor(p)) return l;
    p = p * m;
    Scalar lead(0);
    for (Eigen::Index k = 0; k < p.size() && lead.is_zero(); ++k) lead = p(k);
    p /= lead;
  }
  return std::nullopt;
}

InterpolationVerdict check_conditions(const RecursiveSpec& spec, int order_bound) {
  InterpolationVerdict v;
  v.det_m = det(spec.m);
  v.krylov_det = krylov_determinant(spec.m, spec.s);
  v.order_bound = order_bound;
  v.order_test_complete = spec.m.rows() == 2 && order_bound >= 120;
  if (!v.det_m.is_zero()) v.finite_order = finite_projective_order(spec.m, order_bound);
  v.passes = !v.det_m.is_zero() && !v.krylov_det.is_zero() && !v.finite_order;
  return v;
}

namespace {

Vector projective_normal_form(Vector v) {
  for (Eigen::Index k = 0; k < v.size(); ++k)
    if (!v(k).is_zero()) {
      const Scalar lead = v(k);
      return v / lead;
    }
  return v;
}

std::string key(const Vector& v) {
  std::string s;
  for (Eigen::Index k = 0; k < v.size(); ++k) s += to_string(v(k)) + ",";
  return s;
}

}  // namespace

bool pairwise_independent_prefix(const RecursiveSpec& spec, int k) {
  std::set<std::string> seen;
  Vector v = spec.s;
  for (int j = 0; j <= k; ++j) {
    if (!seen.insert(key(projective_normal_form(v))).second) return false;
    v = spec.m * v;
  }
  return true;
}

std::vector<Scalar> vandermonde_solve(const std::vector<Scalar>& points, const std::vector<Scalar>& values) {
  const std::size_t n = points.size();
  if (values.size() != n) throw DomainError("vandermonde_solve: point and value counts differ");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (points[a] == points[b]) throw DomainError("vandermonde_solve: repeated point " + to_string(points[a]));
  Matrix v(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  Vector rhs(static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < n; ++r) {
    Scalar p(1);
    for (std::size_t c = 0; c < n; ++c) {
      v(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = p;
      p *= points[r];
    }
    rhs(static_cast<Eigen::Index>(r)) = values[r];
  }
  Vector c = linear_solve(v, rhs);
  return {c.data(), c.data() + c.size()};
}

Scalar interpolate_unary_holant(const SignatureGrid& g, const std::string& placeholder, const RecursiveSpec& spec,
                                const Vector& target, int limit) {
  if (spec.m.rows() != 2 || spec.s.size() != 2 || target.size() != 2)
    throw DomainError("unary interpolation needs a 2x2 matrix, a 2-vector start and a 2-vector target");
  const InterpolationVerdict verdict = check_conditions(spec);
  if (!verdict.passes)
    throw DomainError("interpolation conditions fail (det M = " + to_string(verdict.det_m) + ", Krylov det = " +
                      to_string(verdict.krylov_det) +
                      (verdict.finite_order ? ", finite order " + std::to_string(*verdict.finite_order) : std::string()) + ")");
  std::vector<int> holes;
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    if (g.vertices[v].signature == placeholder) {
      if (g.arity_of(static_cast<int>(v)) != 1) throw DomainError("placeholder '" + placeholder + "' is not unary");
      holes.push_back(static_cast<int>(v));
    }
  const std::size_t n = holes.size();

  std::vector<Scalar> points, values;
  for (int k = 0; points.size() < n + 1; ++k) {
    const Vector u = recursive_unary(spec.m, spec.s, k);
    if (u(1).is_zero()) continue;  // at most one k has y_k = 0
    SignatureGrid gk = g;
    const SignatureGrid chain = unary_chain_gadget(spec.m, spec.s, k);
    // Substitution removes one vertex at a time; later holes keep their ids.
    for (std::size_t h = 0; h < n; ++h) {
      auto idx = gk.find_vertex(g.vertices[static_cast<std::size_t>(holes[h])].id);
      gk = substitute(gk, *idx, chain);
    }
    points.push_back(u(0) / u(1));
    values.push_back(holant(gk, limit) / pow(u(1), static_cast<long>(n)));
  }
  const std::vector<Scalar> c = vandermonde_solve(points, values);
  Scalar result(0);
  for (std::size_t l = 0; l <= n; ++l)
    result += c[l] * pow(target(0), static_cast<long>(l)) * pow(target(1), static_cast<long>(n - l));
  return result;
}

}  // namespace holant
