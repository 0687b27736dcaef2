#pragma once

#include <optional>
#include <string>
#include <vector>

#include "holant/algebra.hpp"
#include "holant/grid.hpp"

namespace holant {

// Starter vector s and recursive matrix M; the k-th construction realizes M^k s.
struct RecursiveSpec {
  Matrix m;
  Vector s;
};

// det [s, Ms, ..., M^(n-1) s].
Scalar krylov_determinant(const Matrix& m, const Vector& s);
inline bool krylov_nonsingular(const Matrix& m, const Vector& s) { return !krylov_determinant(m, s).is_zero(); }

// Coefficients c_0..c_n (c_n = 1) of det(x I - M).
std::vector<Scalar> characteristic_polynomial(const Matrix& m);
// Eigenvalues with multiplicity; throws Undecidable when some eigenvalue lies outside Q(i).
std::vector<Scalar> eigenvalues(const Matrix& m);

// A row eigenvector v (v M = lambda v) with v . s = 0, if any exists.
std::optional<RowVector> orthogonal_row_eigenvector(const Matrix& m, const Vector& s);

// Smallest l <= bound with M^l a scalar multiple of I.
std::optional<int> finite_projective_order(const Matrix& m, int bound = 120);

struct InterpolationVerdict {
  bool passes = false;
  Scalar det_m;
  Scalar krylov_det;
  std::optional<int> finite_order;
  int order_bound = 120;
  bool order_test_complete = true;  // exhaustive only for 2x2
};
InterpolationVerdict check_conditions(const RecursiveSpec& spec, int order_bound = 120);

// No two of s, Ms, ..., M^K s are projectively equal.
bool pairwise_independent_prefix(const RecursiveSpec& spec, int k);

// c with sum_l c_l p^l = value(p) at every point.
std::vector<Scalar> vandermonde_solve(const std::vector<Scalar>& points, const std::vector<Scalar>& values);

// Holant of g with every vertex named `placeholder` (unary) replaced by `target`, recovered
// only from Holant values of grids where those vertices are literal chains realizing M^k s.
Scalar interpolate_unary_holant(const SignatureGrid& g, const std::string& placeholder, const RecursiveSpec& spec,
                                const Vector& target, int limit = kDefaultEdgeLimit);

}  // namespace holant
