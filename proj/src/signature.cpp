#include "holant/signature.hpp"

#include <cctype>
#include <sstream>

#include "holant/errors.hpp"
#include "holant/linalg.hpp"

namespace holant {

SymmetricSignature::SymmetricSignature(std::vector<Scalar> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("a signature needs at least one entry");
}

Vector SymmetricSignature::as_vector() const {
  Vector v(static_cast<Eigen::Index>(entries_.size()));
  for (std::size_t k = 0; k < entries_.size(); ++k) v(static_cast<Eigen::Index>(k)) = entries_[k];
  return v;
}

bool SymmetricSignature::is_zero() const {
  for (const auto& x : entries_)
    if (!x.is_zero()) return false;
  return true;
}

SymmetricSignature operator*(const Scalar& c, const SymmetricSignature& f) {
  std::vector<Scalar> out = f.entries_;
  for (auto& x : out) x *= c;
  return SymmetricSignature(std::move(out));
}

std::string to_string(const SymmetricSignature& f) {
  std::string s = "[";
  for (int k = 0; k <= f.arity(); ++k) {
    if (k) s += ',';
    s += to_string(f[k]);
  }
  return s + "]";
}

SymmetricSignature parse_signature(std::string_view text) {
  std::size_t open = text.find('[');
  std::size_t close = text.rfind(']');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open)
    throw ParseError("signature must look like [c0,...,cn]: '" + std::string(text) + "'");
  for (std::size_t p = 0; p < text.size(); ++p)
    if ((p < open || p > close) && !std::isspace(static_cast<unsigned char>(text[p])))
      throw ParseError("trailing characters around signature '" + std::string(text) + "'");
  std::string_view body = text.substr(open + 1, close - open - 1);
  std::vector<Scalar> entries;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = body.find(',', start);
    entries.push_back(parse_scalar(body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return SymmetricSignature(std::move(entries));
}

bool projective_equal(const SymmetricSignature& f, const SymmetricSignature& g) {
  if (f.arity() != g.arity())
    throw DomainError("projective comparison across arities " + std::to_string(f.arity()) + " and " +
                      std::to_string(g.arity()));
  return projective_equal(f.as_vector(), g.as_vector());
}

FullTensor::FullTensor(int arity, Vector entries) : arity_(arity), entries_(std::move(entries)) {
  if (arity < 0 || arity > 30 || entries_.size() != (Eigen::Index{1} << arity))
    throw DomainError("tensor of arity " + std::to_string(arity) + " needs 2^arity entries");
}

std::string to_string(const FullTensor& t) {
  std::string s = "(";
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) s += ',';
    s += to_string(t[k]);
  }
  return s + ")";
}

FullTensor expand(const SymmetricSignature& f) {
  const int n = f.arity();
  Vector v(Eigen::Index{1} << n);
  for (Eigen::Index x = 0; x < v.size(); ++x) v(x) = f[__builtin_popcountll(static_cast<unsigned long long>(x))];
  return FullTensor(n, std::move(v));
}

bool is_symmetric(const FullTensor& t) {
  std::vector<std::size_t> first(static_cast<std::size_t>(t.arity()) + 1, t.size());
  for (std::size_t x = 0; x < t.size(); ++x) {
    auto w = static_cast<std::size_t>(__builtin_popcountll(x));
    if (first[w] == t.size())
      first[w] = x;
    else if (t[x] != t[first[w]])
      return false;
  }
  return true;
}

SymmetricSignature symmetrize(const FullTensor& t) {
  const int n = t.arity();
  std::vector<Scalar> entries(static_cast<std::size_t>(n) + 1);
  std::vector<std::size_t> first(static_cast<std::size_t>(n) + 1, t.size());
  for (std::size_t x = 0; x < t.size(); ++x) {
    auto w = static_cast<std::size_t>(__builtin_popcountll(x));
    if (first[w] == t.size()) {
      first[w] = x;
      entries[w] = t[x];
    } else if (t[x] != entries[w]) {
      throw DomainError("asymmetric tensor: entries at indices " + std::to_string(first[w]) + " and " +
                        std::to_string(x) + " differ (" + to_string(entries[w]) + " vs " + to_string(t[x]) + ")");
    }
  }
  return SymmetricSignature(std::move(entries));
}

namespace {

// Insert bit `bit` at slot position `slot` (slot 0 = most significant) of an (n-1)-bit index.
std::size_t insert_bit(std::size_t rest, int n, int slot, std::size_t bit) {
  const int pos = n - 1 - slot;
  std::size_t low = rest & ((std::size_t{1} << pos) - 1);
  std::size_t high = rest >> pos;
  return (high << (pos + 1)) | (bit << pos) | low;
}

}  // namespace

FullTensor contract_unary(const FullTensor& t, int slot, const Vector& u) {
  const int n = t.arity();
  if (slot < 0 || slot >= n) throw DomainError("contract_unary: slot out of range");
  if (u.size() != 2) throw DomainError("contract_unary: unary vector needs two entries");
  Vector out(Eigen::Index{1} << (n - 1));
  for (std::size_t r = 0; r < static_cast<std::size_t>(out.size()); ++r)
    out(static_cast<Eigen::Index>(r)) = u(0) * t[insert_bit(r, n, slot, 0)] + u(1) * t[insert_bit(r, n, slot, 1)];
  return FullTensor(n - 1, std::move(out));
}

FullTensor contract_pair(const FullTensor& t, int a, int b) {
  const int n = t.arity();
  if (a == b || a < 0 || b < 0 || a >= n || b >= n) throw DomainError("contract_pair: bad slots");
  if (a > b) std::swap(a, b);
  Vector out(Eigen::Index{1} << (n - 2));
  for (std::size_t r = 0; r < static_cast<std::size_t>(out.size()); ++r) {
    Scalar sum(0);
    for (std::size_t x = 0; x < 2; ++x) {
      std::size_t idx = insert_bit(insert_bit(r, n - 1, a, x), n, b, x);
      sum += t[idx];
    }
    out(static_cast<Eigen::Index>(r)) = sum;
  }
  return FullTensor(n - 2, std::move(out));
}

SymmetricSignature attach_unary(const SymmetricSignature& f, const SymmetricSignature& u) {
  if (u.arity() != 1) throw DomainError("attach_unary: second argument must be unary");
  if (f.arity() < 1) throw DomainError("attach_unary: signature has no input to attach to");
  std::vector<Scalar> g;
  for (int k = 0; k < f.arity(); ++k) g.push_back(u[0] * f[k] + u[1] * f[k + 1]);
  return SymmetricSignature(std::move(g));
}

SymmetricSignature self_loop(const SymmetricSignature& f) {
  if (f.arity() < 2) throw DomainError("self_loop: arity must be at least 2");
  std::vector<Scalar> g;
  for (int k = 0; k + 2 <= f.arity(); ++k) g.push_back(f[k] + f[k + 2]);
  return SymmetricSignature(std::move(g));
}

Matrix signature_matrix(const FullTensor& t) {
  if (t.arity() != 4) throw DomainError("signature matrix needs arity 4");
  Matrix m(4, 4);
  for (std::size_t x = 0; x < 16; ++x) {
    std::size_t row = x >> 2;
    std::size_t col = ((x & 1) << 1) | ((x >> 1) & 1);
    m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = t[x];
  }
  return m;
}

Matrix signature_matrix(const SymmetricSignature& f) {
  if (f.arity() != 4) throw DomainError("signature matrix needs arity 4");
  return signature_matrix(expand(f));
}

Matrix compressed_matrix(const SymmetricSignature& f) {
  if (f.arity() != 4) throw DomainError("compressed matrix needs arity 4");
  Matrix m(3, 3);
  for (int r = 0; r < 3; ++r) {
    m(r, 0) = f[r];
    m(r, 1) = Scalar(2) * f[r + 1];
    m(r, 2) = f[r + 2];
  }
  return m;
}

Matrix hankel3(const SymmetricSignature& f) {
  if (f.arity() != 4) throw DomainError("Hankel matrix needs arity 4");
  Matrix m(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = f[r + c];
  return m;
}

bool is_degenerate(const SymmetricSignature& f) {
  const int n = f.arity();
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k)
      if (f[j] * f[k + 1] != f[j + 1] * f[k]) return false;
  return true;
}

std::optional<DegenerateForm> degenerate_form(const SymmetricSignature& f) {
  if (!is_degenerate(f)) return std::nullopt;
  const int n = f.arity();
  if (f.is_zero()) return DegenerateForm{0, 1, 0};
  if (!f[0].is_zero()) return DegenerateForm{f[0], 1, n == 0 ? Scalar(0) : f[1] / f[0]};
  // f0 = 0 forces the unary factor to be [0,1].
  return DegenerateForm{f[n], 0, 1};
}

Parity parity(const SymmetricSignature& f) {
  bool odd_zero = true;
  bool even_zero = true;
  for (int k = 0; k <= f.arity(); ++k) {
    if (f[k].is_zero()) continue;
    (k % 2 ? odd_zero : even_zero) = false;
  }
  if (odd_zero) return Parity::even;
  if (even_zero) return Parity::odd;
  return Parity::none;
}

std::string to_string(Parity p) {
  switch (p) {
    case Parity::even: return "even";
    case Parity::odd: return "odd";
    default: return "none";
  }
}

SymmetricSignature reverse(const SymmetricSignature& f) {
  std::vector<Scalar> e(f.entries().rbegin(), f.entries().rend());
  return SymmetricSignature(std::move(e));
}

SymmetricSignature equality(int k) {
  if (k < 1) throw DomainError("equality needs arity at least 1");
  std::vector<Scalar> e(static_cast<std::size_t>(k) + 1, Scalar(0));
  e.front() = 1;
  e.back() = 1;
  return SymmetricSignature(std::move(e));
}

SymmetricSignature disequality() { return {0, 1, 0}; }

}  // namespace holant
