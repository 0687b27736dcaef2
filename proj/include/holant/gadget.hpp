#pragma once

#include <optional>

#include "holant/grid.hpp"

namespace holant {

// The gate function, symmetrized when it is symmetric.
std::optional<SymmetricSignature> gate_symmetric(const SignatureGrid& gate, int limit = kDefaultEdgeLimit);

// M^k s.
Vector recursive_unary(const Matrix& m, const Vector& s, long k);

struct AntiGadget {
  int order = 0;    // smallest l with M^l a multiple of I
  Matrix inverse;   // M^(l-1), a multiple of M^-1
};
std::optional<AntiGadget> anti_gadget(const Matrix& m, int bound = 120);

// Restrict external slots i and j to equal values and drop slot j (0-based).
FullTensor identify_slots(const FullTensor& t, int i, int j);
// Inverse of signature_matrix for arity 4.
FullTensor tensor_from_signature_matrix(const Matrix& m);

// Replace vertex v by a gate whose dangling edge k takes the place of slot k-1.
SignatureGrid substitute(const SignatureGrid& g, int v, const SignatureGrid& gate);

// Starter s followed by k copies of the binary M; slot 0 of M faces the output.
SignatureGrid unary_chain_gadget(const Matrix& m, const Vector& s, int k);
// N_0 is [v,1,0,0,0] with a self-loop; N_{k+1} hangs a new vertex on both dangling edges of N_k.
SignatureGrid n_chain_gadget(const Scalar& v, int k);
// s copies of an arity-4 gate linked D->A, C->B; its signature matrix is M^s.
SignatureGrid product_chain_gadget(const FullTensor& g, int s);
// Two copies of g joined by arity-1 parallel edges, one dangling edge on each.
SignatureGrid double_gadget(const SymmetricSignature& g);
// Wheel on five vertices with one dangling edge at each rim vertex.
SignatureGrid tetrahedron_gadget(const SymmetricSignature& f);

}  // namespace holant
