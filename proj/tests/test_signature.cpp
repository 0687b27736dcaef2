#include <doctest.h>

#include <random>

#include "holant/errors.hpp"
#include "holant/linalg.hpp"
#include "holant/signature.hpp"
#include "oracles.hpp"

using namespace holant;

namespace {
SymmetricSignature sig(const char* text) { return parse_signature(text); }
Vector tensor_values(std::initializer_list<Scalar> v) { return vec(v); }
}  // namespace

TEST_CASE("expand to full tensors") {
  CHECK(expand(sig("[1,0,1]")).entries() == tensor_values({1, 0, 0, 1}));
  CHECK(expand(sig("[0,1,0]")).entries() == tensor_values({0, 1, 1, 0}));
  CHECK(expand(sig("[0,1,0,0]")).entries() == tensor_values({0, 1, 1, 0, 1, 0, 0, 0}));
  CHECK(expand(sig("[5]")).arity() == 0);
}

TEST_CASE("symmetrize") {
  CHECK(symmetrize(FullTensor(2, tensor_values({1, 0, 0, 1}))) == sig("[1,0,1]"));
  CHECK(symmetrize(FullTensor(3, tensor_values({2, 0, 0, 0, 0, 0, 0, 2}))) == sig("[2,0,0,2]"));
  try {
    symmetrize(FullTensor(2, tensor_values({0, 1, 2, 3})));
    FAIL("expected an asymmetry error");
  } catch (const DomainError& e) {
    const std::string what = e.what();
    CHECK(what.find('1') != std::string::npos);
    CHECK(what.find('2') != std::string::npos);
  }
  CHECK_THROWS_AS(FullTensor(2, tensor_values({1, 2, 3})), DomainError);
}

TEST_CASE("unary attachment") {
  CHECK(attach_unary(sig("[1,0,1,0]"), sig("[1,i]")) == sig("[1,i,1]"));
  CHECK(attach_unary(sig("[1,i,1]"), sig("[1,i]")) == sig("[0,2i]"));
  CHECK(attach_unary(sig("[3,4,5,6]"), sig("[1,0]")) == sig("[3,4,5]"));
  CHECK_THROWS_AS(attach_unary(sig("[2]"), sig("[1,0]")), DomainError);
  CHECK_THROWS_AS(attach_unary(sig("[1,0,1]"), sig("[1,0,1]")), DomainError);
}

TEST_CASE("self loops") {
  const Scalar b = parse_scalar("3+i"), x = parse_scalar("-2");
  CHECK(self_loop(SymmetricSignature{1, b, 1, x}) == SymmetricSignature{2, b + x});
  CHECK(self_loop(sig("[0,0,1,0,0]")) == sig("[1,0,1]"));
  CHECK(self_loop(SymmetricSignature{7, 1, 0, 0, 0}) == SymmetricSignature{7, 1, 0});
  CHECK_THROWS_AS(self_loop(sig("[1,2]")), DomainError);
}

TEST_CASE("signature matrices") {
  CHECK(signature_matrix(sig("[3,0,1,0,3]")) == mat({{3, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 1, 0}, {1, 0, 0, 3}}));
  CHECK(signature_matrix(sig("[0,0,1,0,0]")) == mat({{0, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 1, 0}, {1, 0, 0, 0}}));
  CHECK(signature_matrix(sig("[1,0,0,0,1]")) == mat({{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}}));
  CHECK_THROWS_AS(signature_matrix(sig("[1,0,1]")), DomainError);
  // The full-tensor and symmetric routes agree.
  std::mt19937 rng(3);
  for (int t = 0; t < 10; ++t) {
    const auto f = oracle::random_signature(rng, 4);
    CHECK(signature_matrix(expand(f)) == signature_matrix(f));
  }
}

TEST_CASE("compressed matrices") {
  const Scalar x = parse_scalar("2+i"), y = parse_scalar("5"), b = parse_scalar("1/3");
  CHECK(det(compressed_matrix(SymmetricSignature{1, 0, 0, x, y})) == -2 * x * x);
  // direct cofactor expansion of [[1,2b,1],[b,2,b],[1,2b,x]] gives 2(b^2-1)(1-x)
  CHECK(det(compressed_matrix(SymmetricSignature{1, b, 1, b, x})) == Scalar(2) * (b * b - 1) * (1 - x));
  CHECK(det(compressed_matrix(sig("[3,0,1,0,3]"))) == Scalar(16));
  CHECK_THROWS_AS(compressed_matrix(sig("[1,0,1]")), DomainError);
}

TEST_CASE("degeneracy") {
  CHECK(is_degenerate(sig("[1,2,4]")));
  CHECK_FALSE(is_degenerate(sig("[1,0,1]")));
  CHECK(is_degenerate(sig("[1,0,0,0]")));
  CHECK(is_degenerate(sig("[0,0,0]")));
  CHECK(is_degenerate(sig("[0,0,1]")));
  const auto form = degenerate_form(sig("[2,2i,-2]"));
  REQUIRE(form.has_value());
  for (int k = 0; k <= 2; ++k) CHECK(form->lambda * pow(form->a, 2 - k) * pow(form->b, k) == sig("[2,2i,-2]")[k]);
}

TEST_CASE("parity") {
  CHECK(parity(sig("[1,0,1,0,1]")) == Parity::even);
  CHECK(parity(sig("[0,1,0,1]")) == Parity::odd);
  CHECK(parity(sig("[1,1,0]")) == Parity::none);
  CHECK(parity(sig("[0,0,0]")) == Parity::even);
}

TEST_CASE("reversal") {
  CHECK(reverse(sig("[1,2,3]")) == sig("[3,2,1]"));
  CHECK(reverse(sig("[0,1,0,0,0]")) == sig("[0,0,0,1,0]"));
  CHECK(reverse(sig("[1,7,1]")) == sig("[1,7,1]"));
}

TEST_CASE("projective equality of signatures") {
  CHECK(projective_equal(sig("[1,2,3]"), sig("[2i,4i,6i]")));
  CHECK_FALSE(projective_equal(sig("[1,2,3]"), sig("[1,2,4]")));
  CHECK_THROWS_AS(projective_equal(sig("[1,2]"), sig("[1,2,4]")), DomainError);
}

TEST_CASE("signature text") {
  CHECK(to_string(sig("[ 1, -1/2 , 2i ]")) == "[1,-1/2,2i]");
  CHECK_THROWS_AS(sig("[1,2"), ParseError);
  CHECK_THROWS_AS(sig("[]"), ParseError);
  CHECK(equality(3) == sig("[1,0,0,1]"));
  CHECK(disequality() == sig("[0,1,0]"));
}

TEST_CASE("local operations agree with full-tensor contraction") {
  std::mt19937 rng(5);
  for (int n = 1; n <= 6; ++n)
    for (int t = 0; t < 8; ++t) {
      const auto f = oracle::random_signature(rng, n);
      const auto u = oracle::random_signature(rng, 1);
      for (int slot = 0; slot < n; ++slot)
        CHECK(symmetrize(contract_unary(expand(f), slot, u.as_vector())) == attach_unary(f, u));
      if (n >= 2) {
        CHECK(symmetrize(contract_pair(expand(f), 0, n - 1)) == self_loop(f));
        CHECK(symmetrize(contract_pair(expand(f), 0, 1)) == self_loop(f));
      }
    }
}

TEST_CASE("structural properties on random signatures") {
  std::mt19937 rng(9);
  for (int t = 0; t < 200; ++t) {
    const int n = t % 6;
    const auto f = oracle::random_signature(rng, n);
    CHECK(symmetrize(expand(f)) == f);
    CHECK(expand(symmetrize(expand(f))) == expand(f));
    CHECK(reverse(reverse(f)) == f);
    if (n % 2 == 1 && parity(f) == Parity::even && !f.is_zero()) CHECK(parity(reverse(f)) == Parity::odd);
    if (n % 2 == 1 && parity(f) == Parity::odd) CHECK(parity(reverse(f)) == Parity::even);
    if (n == 4) {
      const bool singular = det(compressed_matrix(f)).is_zero();
      CHECK(singular == !kernel_basis(hankel3(f)).empty());
    }
  }
  // Degenerate signatures stay degenerate under unary attachment.
  for (int t = 0; t < 50; ++t) {
    const Scalar a = oracle::random_scalar(rng), b = oracle::random_scalar(rng);
    const int n = 1 + t % 5;
    std::vector<Scalar> e;
    for (int k = 0; k <= n; ++k) e.push_back(pow(a, n - k) * pow(b, k));
    const SymmetricSignature f(e);
    CHECK(is_degenerate(f));
    if (n >= 2) CHECK(is_degenerate(attach_unary(f, oracle::random_signature(rng, 1))));
  }
}
