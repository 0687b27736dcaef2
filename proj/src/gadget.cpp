#include "holant/gadget.hpp"

#include <map>

#include "holant/errors.hpp"
#include "holant/interpolation.hpp"
#include "holant/linalg.hpp"

namespace holant {

std::optional<SymmetricSignature> gate_symmetric(const SignatureGrid& gate, int limit) {
  FullTensor t = gate_signature(gate, limit);
  if (!is_symmetric(t)) return std::nullopt;
  return symmetrize(t);
}

Vector recursive_unary(const Matrix& m, const Vector& s, long k) {
  if (m.rows() != m.cols() || m.cols() != s.size()) throw DomainError("recursive_unary: dimensions disagree");
  return mat_pow(m, k) * s;
}

std::optional<AntiGadget> anti_gadget(const Matrix& m, int bound) {
  auto order = finite_projective_order(m, bound);
  if (!order) return std::nullopt;
  return AntiGadget{*order, mat_pow(m, *order - 1)};
}

FullTensor identify_slots(const FullTensor& t, int i, int j) {
  const int n = t.arity();
  if (i == j || i < 0 || j < 0 || i >= n || j >= n) throw DomainError("identify_slots: bad slots");
  Vector out(Eigen::Index{1} << (n - 1));
  for (std::size_t r = 0; r < static_cast<std::size_t>(out.size()); ++r) {
    // Slots of r are the original slots without j, most significant first.
    std::size_t full = 0;
    int src = 0;
    for (int s = 0; s < n; ++s) {
      std::size_t bit;
      if (s == j) {
        bit = 0;
      } else {
        bit = (r >> (n - 2 - src)) & 1;
        ++src;
      }
      full = (full << 1) | bit;
    }
    const int ii = i < j ? i : i - 1;
    const std::size_t bit_i = (r >> (n - 2 - ii)) & 1;
    full |= bit_i << (n - 1 - j);
    out(static_cast<Eigen::Index>(r)) = t[full];
  }
  return FullTensor(n - 1, std::move(out));
}

FullTensor tensor_from_signature_matrix(const Matrix& m) {
  if (m.rows() != 4 || m.cols() != 4) throw DomainError("signature matrix must be 4x4");
  Vector v(16);
  for (std::size_t x = 0; x < 16; ++x) {
    std::size_t row = x >> 2;
    std::size_t col = ((x & 1) << 1) | ((x >> 1) & 1);
    v(static_cast<Eigen::Index>(x)) = m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }
  return FullTensor(4, std::move(v));
}

SignatureGrid substitute(const SignatureGrid& g, int v, const SignatureGrid& gate) {
  const int arity = g.arity_of(v);
  if (static_cast<int>(gate.dangling.size()) != arity)
    throw DomainError("substitute: gate has " + std::to_string(gate.dangling.size()) + " dangling edges, vertex has arity " +
                      std::to_string(arity));
  SignatureGrid out;
  out.name = g.name;
  out.table = g.table;
  const std::string& vid = g.vertices[static_cast<std::size_t>(v)].id;
  std::vector<int> old_to_new(g.vertices.size(), -1);
  for (std::size_t u = 0; u < g.vertices.size(); ++u) {
    if (static_cast<int>(u) == v) continue;
    const auto& vx = g.vertices[u];
    old_to_new[u] = out.add_vertex(vx.id, vx.signature, vx.part);
  }
  std::vector<int> gate_to_new(gate.vertices.size());
  for (std::size_t u = 0; u < gate.vertices.size(); ++u) {
    const auto& vx = gate.vertices[u];
    const TableEntry& entry = gate.table.at(vx.signature);
    std::string name = vx.signature;
    const TableEntry* existing = out.table.find(name);
    if (!existing || !(existing->tensor == entry.tensor)) {
      name = vid + "/" + vx.signature;
      if (!out.table.find(name)) {
        if (entry.symmetric)
          out.table.add(name, *entry.symmetric);
        else
          out.table.add(name, entry.tensor);
      }
    }
    gate_to_new[u] = out.add_vertex(vid + "/" + vx.id, name, vx.part);
  }
  for (const auto& e : gate.edges)
    out.add_edge(gate_to_new[static_cast<std::size_t>(e.a.vertex)], e.a.slot, gate_to_new[static_cast<std::size_t>(e.b.vertex)], e.b.slot);
  std::vector<SlotRef> port(static_cast<std::size_t>(arity));
  for (const auto& d : gate.dangling)
    port[static_cast<std::size_t>(d.index - 1)] = {gate_to_new[static_cast<std::size_t>(d.at.vertex)], d.at.slot};
  auto remap = [&](const SlotRef& r) {
    if (r.vertex == v) return port[static_cast<std::size_t>(r.slot)];
    return SlotRef{old_to_new[static_cast<std::size_t>(r.vertex)], r.slot};
  };
  for (const auto& e : g.edges) {
    SlotRef a = remap(e.a), b = remap(e.b);
    out.add_edge(a.vertex, a.slot, b.vertex, b.slot);
  }
  for (const auto& d : g.dangling) out.dangling.push_back({d.index, remap(d.at)});
  return out;
}

SignatureGrid unary_chain_gadget(const Matrix& m, const Vector& s, int k) {
  if (m.rows() != 2 || m.cols() != 2 || s.size() != 2) throw DomainError("unary chain needs a 2x2 matrix and a 2-vector");
  SignatureGrid g;
  g.name = "unary-chain";
  g.table.add("S", FullTensor(1, s));
  Vector mv(4);
  mv << m(0, 0), m(0, 1), m(1, 0), m(1, 1);
  g.table.add("M", FullTensor(2, mv));
  int prev = g.add_vertex("s", "S");
  int prev_slot = 0;
  for (int j = 1; j <= k; ++j) {
    int u = g.add_vertex("m" + std::to_string(j), "M");
    g.add_edge(u, 1, prev, prev_slot);
    prev = u;
    prev_slot = 0;
  }
  g.add_dangling(1, prev, prev_slot);
  return g;
}

SignatureGrid n_chain_gadget(const Scalar& v, int k) {
  if (k < 0) throw DomainError("n_chain_gadget: negative length");
  SignatureGrid g;
  g.name = "n-chain";
  g.table.add("F", SymmetricSignature{v, 1, 0, 0, 0});
  int prev = g.add_vertex("n0", "F");
  g.add_edge(prev, 2, prev, 3);
  for (int j = 1; j <= k; ++j) {
    int u = g.add_vertex("n" + std::to_string(j), "F");
    g.add_edge(u, 2, prev, 1);
    g.add_edge(u, 3, prev, 0);
    prev = u;
  }
  g.add_dangling(1, prev, 0);
  g.add_dangling(2, prev, 1);
  return g;
}

SignatureGrid product_chain_gadget(const FullTensor& t, int s) {
  if (t.arity() != 4 || s < 1) throw DomainError("product chain needs an arity-4 gate and s >= 1");
  SignatureGrid g;
  g.name = "product-chain";
  g.table.add("G", t);
  int prev = -1;
  int first = -1;
  for (int j = 0; j < s; ++j) {
    int u = g.add_vertex("g" + std::to_string(j), "G");
    if (prev < 0) {
      first = u;
    } else {
      g.add_edge(prev, 3, u, 0);
      g.add_edge(prev, 2, u, 1);
    }
    prev = u;
  }
  g.add_dangling(1, first, 0);
  g.add_dangling(2, first, 1);
  g.add_dangling(3, prev, 2);
  g.add_dangling(4, prev, 3);
  return g;
}

SignatureGrid double_gadget(const SymmetricSignature& f) {
  const int k = f.arity();
  if (k < 2) throw DomainError("double gadget needs arity at least 2");
  SignatureGrid g;
  g.name = "double";
  g.table.add("G", f);
  const int u = g.add_vertex("u", "G"), w = g.add_vertex("w", "G");
  for (int j = 1; j < k; ++j) g.add_edge(u, j, w, k - j);
  g.add_dangling(1, u, 0);
  g.add_dangling(2, w, 0);
  return g;
}

SignatureGrid tetrahedron_gadget(const SymmetricSignature& f) {
  if (f.arity() != 4) throw DomainError("tetrahedron gadget needs an arity-4 signature");
  SignatureGrid g;
  g.name = "tetrahedron";
  g.table.add("F", f);
  std::map<int, int> at;
  for (int id : {1, 2, 3, 5, 7}) at[id] = g.add_vertex(std::to_string(id), "F");
  const int edges[][4] = {{1, 1, 5, 3}, {1, 2, 2, 0}, {1, 3, 3, 1}, {5, 1, 7, 3},
                          {5, 2, 2, 1}, {7, 1, 3, 3}, {7, 2, 2, 2}, {3, 2, 2, 3}};
  for (const auto& e : edges) g.add_edge(at[e[0]], e[1], at[e[2]], e[3]);
  g.add_dangling(1, at[1], 0);
  g.add_dangling(2, at[5], 0);
  g.add_dangling(3, at[7], 0);
  g.add_dangling(4, at[3], 0);
  return g;
}

}  // namespace holant
