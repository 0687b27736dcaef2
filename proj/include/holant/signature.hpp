#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holant/algebra.hpp"

namespace holant {

// Symmetric Boolean function [f0,...,fn]; entry w is the value on inputs of Hamming weight w.
class SymmetricSignature {
 public:
  SymmetricSignature() : entries_{Scalar(0)} {}
  explicit SymmetricSignature(std::vector<Scalar> entries);
  SymmetricSignature(std::initializer_list<Scalar> entries)
      : SymmetricSignature(std::vector<Scalar>(entries)) {}
  template <typename Derived>
  explicit SymmetricSignature(const Eigen::MatrixBase<Derived>& v)
      : SymmetricSignature(std::vector<Scalar>(v.derived().data(), v.derived().data() + v.size())) {}

  int arity() const { return static_cast<int>(entries_.size()) - 1; }
  const Scalar& operator[](int w) const { return entries_[static_cast<std::size_t>(w)]; }
  const std::vector<Scalar>& entries() const { return entries_; }
  Vector as_vector() const;
  bool is_zero() const;

  friend bool operator==(const SymmetricSignature& a, const SymmetricSignature& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator!=(const SymmetricSignature& a, const SymmetricSignature& b) { return !(a == b); }
  friend SymmetricSignature operator*(const Scalar& c, const SymmetricSignature& f);

 private:
  std::vector<Scalar> entries_;
};

std::string to_string(const SymmetricSignature& f);
SymmetricSignature parse_signature(std::string_view text);

// Projective equality; signatures of different arity are rejected.
bool projective_equal(const SymmetricSignature& f, const SymmetricSignature& g);

// Function on {0,1}^n as 2^n values. Slot 0 is the most significant bit of the index.
class FullTensor {
 public:
  FullTensor() : entries_(Vector::Constant(1, Scalar(0))) {}
  FullTensor(int arity, Vector entries);

  int arity() const { return arity_; }
  std::size_t size() const { return static_cast<std::size_t>(entries_.size()); }
  const Scalar& operator[](std::size_t index) const { return entries_(static_cast<Eigen::Index>(index)); }
  const Vector& entries() const { return entries_; }

  friend bool operator==(const FullTensor& a, const FullTensor& b) {
    return a.arity_ == b.arity_ && a.entries_ == b.entries_;
  }

 private:
  int arity_ = 0;
  Vector entries_;
};

std::string to_string(const FullTensor& t);

FullTensor expand(const SymmetricSignature& f);
// Throws DomainError naming two conflicting indices when t is not symmetric.
SymmetricSignature symmetrize(const FullTensor& t);
bool is_symmetric(const FullTensor& t);

// Contract slot `slot` of t against the unary vector u.
FullTensor contract_unary(const FullTensor& t, int slot, const Vector& u);
// Join slots a and b of t by an edge (an =_2 contraction).
FullTensor contract_pair(const FullTensor& t, int a, int b);

SymmetricSignature attach_unary(const SymmetricSignature& f, const SymmetricSignature& u);
SymmetricSignature self_loop(const SymmetricSignature& f);

// 4x4 matrix with rows indexed by slot bits (0,1) and columns by slot bits (3,2).
Matrix signature_matrix(const FullTensor& t);
Matrix signature_matrix(const SymmetricSignature& f);
Matrix compressed_matrix(const SymmetricSignature& f);
// Rows (f_k, f_{k+1}, f_{k+2}) for k = 0, 1, 2.
Matrix hankel3(const SymmetricSignature& f);

bool is_degenerate(const SymmetricSignature& f);

// f_k = lambda * a^(n-k) * b^k; the zero signature reports lambda = 0.
struct DegenerateForm {
  Scalar lambda;
  Scalar a;
  Scalar b;
};
std::optional<DegenerateForm> degenerate_form(const SymmetricSignature& f);

enum class Parity { even, odd, none };
Parity parity(const SymmetricSignature& f);
std::string to_string(Parity p);

SymmetricSignature reverse(const SymmetricSignature& f);

// =_k and its named relatives.
SymmetricSignature equality(int k);
SymmetricSignature disequality();

}  // namespace holant
