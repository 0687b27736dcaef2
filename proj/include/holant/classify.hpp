#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "holant/signature.hpp"

namespace holant {

// A family member with its parameters. Re-evaluating the family formula gives back the
// signature exactly (for hadamard witnesses: gives back hat(f)).
struct FamilyWitness {
  std::string tag;  // F1 F2 F3 degenerate-affine product-degenerate disequality generalized-equality
                    // matchgate-form-1..4 matchgate-hat-case-1..3
  int arity = 0;
  Scalar lambda = 1;
  std::optional<int> r;
  std::optional<Scalar> alpha;
  std::optional<Scalar> beta;
  std::optional<int> epsilon;
  std::optional<int> form;  // matchgate form of hat(f) for the hadamard cases
  bool hadamard = false;  // the formula describes hat(f)
};

SymmetricSignature evaluate(const FamilyWitness& w);
std::string describe(const FamilyWitness& w);

std::optional<FamilyWitness> in_A(const SymmetricSignature& f);
std::optional<FamilyWitness> in_P(const SymmetricSignature& f);
std::optional<FamilyWitness> in_M(const SymmetricSignature& f);
std::optional<FamilyWitness> in_Phat(const SymmetricSignature& f);
std::optional<FamilyWitness> in_Mhat(const SymmetricSignature& f);

// Closed forms for signatures whose Hadamard transform is a matchgate signature.
SymmetricSignature hadamard_matchgate_case1(int n, const Scalar& lambda, const Scalar& alpha, const Scalar& beta, int epsilon);
SymmetricSignature hadamard_matchgate_case2(int n, const Scalar& lambda);
SymmetricSignature hadamard_matchgate_case3(int n, const Scalar& lambda);

struct VennFlags {
  std::optional<FamilyWitness> A, P, M, Phat, Mhat;
  bool inA() const { return A.has_value(); }
  bool inP() const { return P.has_value(); }
  bool inM() const { return M.has_value(); }
  bool inPhat() const { return Phat.has_value(); }
  bool inMhat() const { return Mhat.has_value(); }
};
VennFlags venn_flags(const SymmetricSignature& f);

enum class Outcome { tractable, hard };

struct Verdict {
  Outcome outcome = Outcome::hard;
  std::string label;                                         // class or case that decided it
  std::string rule;                                          // the condition that was checked
  std::vector<SymmetricSignature> witnesses;                 // offending signatures for hard verdicts
  std::vector<std::pair<std::string, std::string>> details;  // extra key/value lines
  bool tractable() const { return outcome == Outcome::tractable; }
};

// Planar graph homomorphism for a symmetric binary edge function.
Verdict classify_binary_gh(const SymmetricSignature& f);
// Edge function f with vertex degrees drawn from S.
Verdict classify_degree_prescribed(const SymmetricSignature& f, const std::set<int>& degrees);
// Single symmetric arity-4 signature.
Verdict classify_arity4(const SymmetricSignature& f);
// Planar #CSP in the Hadamard basis: classes A, Phat, M.
Verdict classify_plcsp_hat(const std::vector<SymmetricSignature>& set);
// Planar #CSP: classes A, P, Mhat.
Verdict classify_plcsp(const std::vector<SymmetricSignature>& set);

}  // namespace holant
