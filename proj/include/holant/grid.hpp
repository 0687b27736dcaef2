#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holant/algebra.hpp"
#include "holant/signature.hpp"

namespace holant {

constexpr int kDefaultEdgeLimit = 24;

// Named vertex functions. Symmetric entries keep their weight-indexed form.
struct TableEntry {
  FullTensor tensor;
  std::optional<SymmetricSignature> symmetric;
};

class SignatureTable {
 public:
  void add(const std::string& name, const SymmetricSignature& f);
  void add(const std::string& name, const FullTensor& t);

  // Own entries first, then the built-ins EQk, NEQ2, EQ-HAT-k.
  const TableEntry* find(const std::string& name) const;
  const TableEntry& at(const std::string& name) const;
  bool defines(const std::string& name) const { return index_.count(name) > 0; }
  const std::vector<std::pair<std::string, TableEntry>>& entries() const { return entries_; }

 private:
  std::vector<std::pair<std::string, TableEntry>> entries_;
  std::map<std::string, std::size_t> index_;
  mutable std::map<std::string, TableEntry> builtins_;
};

std::optional<TableEntry> builtin_signature(const std::string& name);

// "sig <name> [c0,...]" and "tensor <name> <arity> (t0,...)" lines; '#' comments.
SignatureTable parse_signature_table(std::string_view text);

enum class Part { none, left, right };

struct SlotRef {
  int vertex = -1;
  int slot = -1;
  friend bool operator==(const SlotRef&, const SlotRef&) = default;
};

struct GridVertex {
  std::string id;
  std::string signature;
  Part part = Part::none;
};

struct GridEdge {
  SlotRef a;
  SlotRef b;
};

struct Dangling {
  int index = 0;  // external position, 1-based
  SlotRef at;
};

// A tensor network over Boolean edge variables. Slot order at a vertex is its rotation.
struct SignatureGrid {
  std::string name = "grid";
  SignatureTable table;
  std::vector<GridVertex> vertices;
  std::vector<GridEdge> edges;
  std::vector<Dangling> dangling;

  int add_vertex(const std::string& id, const std::string& signature, Part part = Part::none);
  void add_edge(int u, int su, int v, int sv) { edges.push_back({{u, su}, {v, sv}}); }
  void add_dangling(int index, int v, int slot) { dangling.push_back({index, {v, slot}}); }
  std::optional<int> find_vertex(const std::string& id) const;
  const TableEntry& signature_of(int v) const;
  int arity_of(int v) const;
};

// Every invariant violation, each naming its location; empty when well formed.
std::vector<std::string> validate(const SignatureGrid& g);

// Sum over edge assignments of the product of vertex values. Requires a closed grid.
Scalar holant(const SignatureGrid& g, int limit = kDefaultEdgeLimit);

// The gadget function over its dangling edges in external order 1..n.
FullTensor gate_signature(const SignatureGrid& g, int limit = kDefaultEdgeLimit);

// Subdivide every edge with an =_2 vertex; originals become the left part, new vertices the right.
SignatureGrid two_stretch(const SignatureGrid& g);

// holant(grid) == factor * holant(original).
struct TransformedGrid {
  SignatureGrid grid;
  Scalar factor;
};

// Bipartite rule: left signatures become f adj(T), right signatures become T g.
TransformedGrid transform_grid(const SignatureGrid& g, const Matrix& t);
// Every signature becomes T f; valid only when T T^t = lambda I.
TransformedGrid transform_all(const SignatureGrid& g, const Matrix& t);

SignatureGrid parse_grid(std::string_view text, const SignatureTable* extra = nullptr);
std::string serialize_grid(const SignatureGrid& g);

}  // namespace holant
