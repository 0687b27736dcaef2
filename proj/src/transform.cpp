#include "holant/transform.hpp"

#include "holant/errors.hpp"
#include "holant/linalg.hpp"

namespace holant {

Matrix hadamard() { return mat({{1, 1}, {1, -1}}); }
Matrix z_basis() { return mat({{1, 1}, {GaussianRational(0, 1), GaussianRational(0, -1)}}); }
Matrix swap_basis() { return mat({{0, 1}, {1, 0}}); }

Matrix parse_transform(std::string_view text) {
  Matrix t;
  if (text == "H")
    t = hadamard();
  else if (text == "Z")
    t = z_basis();
  else if (text == "X")
    t = swap_basis();
  else
    t = parse_matrix(text);
  if (t.rows() != 2 || t.cols() != 2) throw ParseError("a transform must be a 2x2 matrix");
  if (det(t).is_zero()) throw DomainError("transform matrix is singular");
  return t;
}

namespace {

void require_2x2(const Matrix& t) {
  if (t.rows() != 2 || t.cols() != 2) throw DomainError("transform must be 2x2");
}

std::vector<Scalar> binomial_row(int n) {
  std::vector<Scalar> row{1};
  for (int k = 1; k <= n; ++k) row.push_back(row.back() * Scalar(n - k + 1) / Scalar(k));
  return row;
}

std::vector<Scalar> powers(const Scalar& x, int n) {
  std::vector<Scalar> p{1};
  for (int k = 1; k <= n; ++k) p.push_back(p.back() * x);
  return p;
}

}  // namespace

// g_w = sum_k f_k sum_j C(w,j) T11^j T10^(w-j) C(n-w,k-j) T01^(k-j) T00^(n-w-k+j)
SymmetricSignature apply(const Matrix& t, const SymmetricSignature& f) {
  require_2x2(t);
  const int n = f.arity();
  std::vector<std::vector<Scalar>> binom;
  for (int m = 0; m <= n; ++m) binom.push_back(binomial_row(m));
  auto p00 = powers(t(0, 0), n), p01 = powers(t(0, 1), n);
  auto p10 = powers(t(1, 0), n), p11 = powers(t(1, 1), n);
  std::vector<Scalar> g(static_cast<std::size_t>(n) + 1, Scalar(0));
  for (int w = 0; w <= n; ++w) {
    Scalar sum(0);
    for (int k = 0; k <= n; ++k) {
      if (f[k].is_zero()) continue;
      Scalar inner(0);
      for (int j = std::max(0, k - (n - w)); j <= std::min(w, k); ++j)
        inner += binom[w][j] * p11[j] * p10[w - j] * binom[n - w][k - j] * p01[k - j] * p00[n - w - k + j];
      sum += f[k] * inner;
    }
    g[w] = sum;
  }
  return SymmetricSignature(std::move(g));
}

FullTensor apply(const Matrix& t, const FullTensor& f) {
  require_2x2(t);
  const int n = f.arity();
  Vector v = f.entries();
  for (int slot = 0; slot < n; ++slot) {
    const std::size_t bit = std::size_t{1} << (n - 1 - slot);
    Vector next(v.size());
    for (std::size_t x = 0; x < static_cast<std::size_t>(v.size()); ++x) {
      const std::size_t y = (x & bit) ? 1 : 0;
      const auto base = static_cast<Eigen::Index>(x & ~bit);
      const auto one = static_cast<Eigen::Index>(x | bit);
      next(static_cast<Eigen::Index>(x)) = t(static_cast<Eigen::Index>(y), 0) * v(base) +
                                           t(static_cast<Eigen::Index>(y), 1) * v(one);
    }
    v = std::move(next);
  }
  return FullTensor(n, std::move(v));
}

SymmetricSignature apply_row(const SymmetricSignature& f, const Matrix& t) {
  require_2x2(t);
  return apply(Matrix(t.transpose()), f);
}

FullTensor apply_row(const FullTensor& f, const Matrix& t) {
  require_2x2(t);
  return apply(Matrix(t.transpose()), f);
}

SymmetricSignature hat(const SymmetricSignature& f) { return apply(hadamard(), f); }

std::optional<Scalar> pseudo_orthogonal_factor(const Matrix& t) {
  require_2x2(t);
  Matrix p = t * t.transpose();
  auto lambda = scalar_identity_factor(p);
  if (!lambda || lambda->is_zero()) return std::nullopt;
  return lambda;
}

SymmetricSignature binary_conjugate(const SymmetricSignature& b, const Matrix& t) {
  require_2x2(t);
  if (b.arity() != 2) throw DomainError("binary_conjugate needs a binary signature");
  Matrix m = mat({{b[0], b[1]}, {b[1], b[2]}});
  Matrix c = t.transpose() * m * t;
  return SymmetricSignature{c(0, 0), c(0, 1), c(1, 1)};
}

Matrix adjugate2(const Matrix& t) {
  require_2x2(t);
  return mat({{t(1, 1), -t(0, 1)}, {-t(1, 0), t(0, 0)}});
}

}  // namespace holant
