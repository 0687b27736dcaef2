#include <doctest.h>

#include <random>

#include "holant/algebra.hpp"
#include "holant/errors.hpp"
#include "holant/linalg.hpp"
#include "oracles.hpp"

using namespace holant;

namespace {
Scalar S(const char* text) { return parse_scalar(text); }
}  // namespace

TEST_CASE("scalar field operations") {
  const Scalar i = Scalar::i();
  CHECK(i * i == Scalar(-1));
  CHECK(S("1/2") + S("1/2") == Scalar(1));
  CHECK(S("1+i") / S("1-i") == i);
  CHECK((S("3-4i")).conj() == S("3+4i"));
  CHECK(S("3-4i").norm() == Rational(25));
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), DomainError);
  CHECK(pow(S("2"), -2) == S("1/4"));
  CHECK(pow(i, 4) == Scalar(1));
}

TEST_CASE("rationals stay reduced") {
  const Rational q(6, -4);
  CHECK(q.numerator() == -3);
  CHECK(q.denominator() == 2);
  CHECK(to_string(Scalar(q)) == "-3/2");
}

TEST_CASE("scalar text round trip") {
  for (const char* text : {"3", "-1/2", "2i", "1+2i", "1/2-3/4i", "i", "-i", "0", "-7/3i"})
    CHECK(to_string(S(text)) == text);
  CHECK(to_string(S("4/6")) == "2/3");
  CHECK(to_string(S("0+3i")) == "3i");
  CHECK(to_string(S("1i")) == "i");
  CHECK_THROWS_AS(S("1/0"), ParseError);
  CHECK_THROWS_AS(S("abc"), ParseError);
  CHECK_THROWS_AS(S(""), ParseError);
}

TEST_CASE("exact square roots and powers of i") {
  CHECK(sqrt_exact(S("-4")).value() * sqrt_exact(S("-4")).value() == S("-4"));
  CHECK(sqrt_exact(S("2i")).value() * sqrt_exact(S("2i")).value() == S("2i"));
  CHECK_FALSE(sqrt_exact(S("2")).has_value());
  CHECK_FALSE(sqrt_exact(S("i")).has_value());
  CHECK(power_of_i(S("-i")) == 3);
  CHECK_FALSE(power_of_i(S("2")).has_value());
}

TEST_CASE("determinants") {
  CHECK(det(mat({{1, 1}, {1, -1}})) == Scalar(-2));
  CHECK(det(mat({{5, 2}, {1, 0}})) == Scalar(-2));
  CHECK(det(Matrix::Identity(3, 3)) == Scalar(1));
}

TEST_CASE("matrix powers") {
  CHECK(mat_pow(mat({{0, 1}, {1, 0}}), 2) == Matrix::Identity(2, 2));
  CHECK(mat_pow(mat({{1, 1}, {0, 1}}), 3) == mat({{1, 3}, {0, 1}}));
  CHECK(mat_pow(mat({{1, 2}, {1, 0}}), 2) == mat({{3, 2}, {1, 2}}));
  CHECK(mat_pow(mat({{1, 2}, {1, 0}}), 0) == Matrix::Identity(2, 2));
}

TEST_CASE("kernel bases") {
  CHECK(kernel_basis(Matrix(Matrix::Identity(2, 2))).empty());
  CHECK(kernel_basis(Matrix(Matrix::Zero(2, 2))).size() == 2);
  const auto k = kernel_basis(mat({{1, 0, 0}, {0, 0, 0}, {0, 0, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(projective_equal(k[0], vec({0, 1, 0})));
}

TEST_CASE("linear solves") {
  CHECK(linear_solve(Matrix(Matrix::Identity(2, 2)), vec({3, 4})) == vec({3, 4}));
  CHECK(linear_solve(mat({{1, 1}, {1, 2}}), vec({2, 3})) == vec({1, 1}));
  CHECK(linear_solve(mat({{1, 1, 1}, {1, 2, 4}, {1, 4, 16}}), vec({3, 7, 21})) == vec({1, 1, 1}));
  CHECK_THROWS_AS(linear_solve(mat({{1, 2}, {2, 4}}), vec({1, 1})), DomainError);
}

TEST_CASE("projective equality of vectors") {
  CHECK(projective_equal(vec({1, 2}), vec({2, 4})));
  CHECK_FALSE(projective_equal(vec({0, 1}), vec({1, 0})));
  CHECK(projective_equal(vec({1, S("i")}), vec({-S("i"), 1})));
  CHECK(projective_equal(vec({0, 0}), vec({0, 0})));
  CHECK_FALSE(projective_equal(vec({0, 0}), vec({0, 1})));
  CHECK_THROWS_AS(projective_equal(vec({1, 2}), vec({1, 2, 3})), DomainError);
}

TEST_CASE("matrix literals") {
  CHECK(parse_matrix("[1,2;3,4i]") == mat({{1, 2}, {3, S("4i")}}));
  CHECK(to_string(mat({{1, S("1/2")}, {S("-i"), 0}})) == "[1,1/2;-i,0]");
  CHECK_THROWS_AS(parse_matrix("[1,2;3]"), ParseError);
}

TEST_CASE("random linear algebra properties") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 3;
    const Matrix a = oracle::random_invertible(rng, n);
    Vector x(n);
    for (int k = 0; k < n; ++k) x(k) = oracle::random_scalar(rng);
    CHECK(linear_solve(a, Vector(a * x)) == x);
    const int k = trial % 4;
    CHECK(det(mat_pow(a, k)) == pow(det(a), k));
    CHECK(a * inverse(a) == Matrix::Identity(n, n));

    // A rank-deficient matrix: its kernel has dimension n - rank.
    Matrix b = a;
    b.row(n - 1) = b.row(0) * oracle::random_scalar(rng);
    const auto ker = kernel_basis(b);
    CHECK(static_cast<Eigen::Index>(ker.size()) == n - rank(b));
    for (const auto& v : ker) CHECK(Vector(b * v) == Vector(Vector::Zero(n)));
  }
}

TEST_CASE("projective equality is an equivalence on nonzero vectors") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Vector u(3);
    for (int k = 0; k < 3; ++k) u(k) = oracle::random_scalar(rng);
    if (u == Vector(Vector::Zero(3))) continue;
    const Scalar c = oracle::random_scalar(rng, false), d = oracle::random_scalar(rng, false);
    const Vector v = u * c, w = v * d;
    CHECK(projective_equal(u, u));
    CHECK(projective_equal(u, v) == projective_equal(v, u));
    CHECK(projective_equal(u, w));
  }
}
