#pragma once

#include <optional>
#include <string_view>

#include "holant/algebra.hpp"
#include "holant/signature.hpp"

namespace holant {

// Named bases, unnormalized.
Matrix hadamard();  // [[1,1],[1,-1]]
Matrix z_basis();   // [[1,1],[i,-i]]
Matrix swap_basis();  // [[0,1],[1,0]]

// "H", "Z", "X", or a literal "[a,b;c,d]"; rejects singular matrices.
Matrix parse_transform(std::string_view text);

// T^{(x)n} f with f read as a column tensor.
SymmetricSignature apply(const Matrix& t, const SymmetricSignature& f);
FullTensor apply(const Matrix& t, const FullTensor& f);
// f T^{(x)n} with f read as a row tensor.
SymmetricSignature apply_row(const SymmetricSignature& f, const Matrix& t);
FullTensor apply_row(const FullTensor& f, const Matrix& t);

SymmetricSignature hat(const SymmetricSignature& f);

// lambda with T T^t = lambda I, if T is pseudo-orthogonal.
std::optional<Scalar> pseudo_orthogonal_factor(const Matrix& t);

// The binary signature with matrix T^t B T.
SymmetricSignature binary_conjugate(const SymmetricSignature& b, const Matrix& t);

// Adjugate of a 2x2 matrix: T adj(T) = det(T) I.
Matrix adjugate2(const Matrix& t);

}  // namespace holant
