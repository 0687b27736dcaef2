#include "holant/grid.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "holant/errors.hpp"
#include "holant/linalg.hpp"
#include "holant/transform.hpp"

namespace holant {

void SignatureTable::add(const std::string& name, const SymmetricSignature& f) {
  if (index_.count(name)) throw DomainError("signature '" + name + "' defined twice");
  index_[name] = entries_.size();
  entries_.push_back({name, TableEntry{expand(f), f}});
}

void SignatureTable::add(const std::string& name, const FullTensor& t) {
  if (index_.count(name)) throw DomainError("signature '" + name + "' defined twice");
  index_[name] = entries_.size();
  entries_.push_back({name, TableEntry{t, std::nullopt}});
}

std::optional<TableEntry> builtin_signature(const std::string& name) {
  auto arity_after = [&](std::string_view prefix) -> std::optional<int> {
    if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
    std::string digits = name.substr(prefix.size());
    if (digits.size() > 2 || !std::all_of(digits.begin(), digits.end(), ::isdigit)) return std::nullopt;
    int k = std::stoi(digits);
    if (k < 1 || k > 16) return std::nullopt;
    return k;
  };
  std::optional<SymmetricSignature> f;
  if (name == "NEQ2") {
    f = disequality();
  } else if (auto k = arity_after("EQ-HAT-")) {
    std::vector<Scalar> e;
    for (int w = 0; w <= *k; ++w) e.push_back(w % 2 ? 0 : 1);
    f = SymmetricSignature(std::move(e));
  } else if (auto k2 = arity_after("EQ")) {
    f = equality(*k2);
  }
  if (!f) return std::nullopt;
  return TableEntry{expand(*f), f};
}

const TableEntry* SignatureTable::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it != index_.end()) return &entries_[it->second].second;
  auto b = builtins_.find(name);
  if (b != builtins_.end()) return &b->second;
  if (auto entry = builtin_signature(name)) return &builtins_.emplace(name, std::move(*entry)).first->second;
  return nullptr;
}

const TableEntry& SignatureTable::at(const std::string& name) const {
  const TableEntry* e = find(name);
  if (!e) throw DomainError("unknown signature name '" + name + "'");
  return *e;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : line) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (std::isspace(static_cast<unsigned char>(c)) && depth == 0) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

FullTensor parse_tensor(const std::string& arity_text, const std::string& body) {
  int arity = 0;
  try {
    arity = std::stoi(arity_text);
  } catch (const std::exception&) {
    throw ParseError("bad tensor arity '" + arity_text + "'");
  }
  if (body.size() < 2 || body.front() != '(' || body.back() != ')')
    throw ParseError("tensor values must look like (t0,...)");
  std::vector<Scalar> values;
  std::string_view inner(body.data() + 1, body.size() - 2);
  std::size_t start = 0;
  while (true) {
    std::size_t comma = inner.find(',', start);
    values.push_back(parse_scalar(inner.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (arity < 0 || arity > 20 || values.size() != (std::size_t{1} << arity))
    throw ParseError("tensor of arity " + arity_text + " needs 2^arity values");
  Vector v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t k = 0; k < values.size(); ++k) v(static_cast<Eigen::Index>(k)) = values[k];
  return FullTensor(arity, std::move(v));
}

// Handles sig/tensor lines; returns false for any other keyword.
bool parse_table_line(const std::vector<std::string>& tok, SignatureTable& table) {
  if (tok[0] == "sig") {
    if (tok.size() != 3) throw ParseError("expected: sig <name> [c0,...]");
    table.add(tok[1], parse_signature(tok[2]));
    return true;
  }
  if (tok[0] == "tensor") {
    if (tok.size() != 4) throw ParseError("expected: tensor <name> <arity> (t0,...)");
    table.add(tok[1], parse_tensor(tok[2], tok[3]));
    return true;
  }
  return false;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto tok = tokenize(strip_comment(line));
    if (tok.empty()) continue;
    try {
      fn(tok);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(number) + ": " + e.what());
    } catch (const DomainError& e) {
      throw ParseError("line " + std::to_string(number) + ": " + e.what());
    }
  }
}

}  // namespace

SignatureTable parse_signature_table(std::string_view text) {
  SignatureTable table;
  for_each_line(text, [&](const std::vector<std::string>& tok) {
    if (!parse_table_line(tok, table)) throw ParseError("unexpected keyword '" + tok[0] + "'");
  });
  return table;
}

int SignatureGrid::add_vertex(const std::string& id, const std::string& signature, Part part) {
  if (find_vertex(id)) throw DomainError("duplicate vertex id '" + id + "'");
  vertices.push_back({id, signature, part});
  return static_cast<int>(vertices.size()) - 1;
}

std::optional<int> SignatureGrid::find_vertex(const std::string& id) const {
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (vertices[v].id == id) return static_cast<int>(v);
  return std::nullopt;
}

const TableEntry& SignatureGrid::signature_of(int v) const { return table.at(vertices.at(static_cast<std::size_t>(v)).signature); }

int SignatureGrid::arity_of(int v) const { return signature_of(v).tensor.arity(); }

std::vector<std::string> validate(const SignatureGrid& g) {
  std::vector<std::string> issues;
  const int nv = static_cast<int>(g.vertices.size());
  std::vector<int> arity(static_cast<std::size_t>(nv), -1);
  std::set<std::string> ids;
  for (int v = 0; v < nv; ++v) {
    const auto& vx = g.vertices[static_cast<std::size_t>(v)];
    if (!ids.insert(vx.id).second) issues.push_back("vertex " + vx.id + ": duplicate id");
    if (const TableEntry* e = g.table.find(vx.signature))
      arity[static_cast<std::size_t>(v)] = e->tensor.arity();
    else
      issues.push_back("vertex " + vx.id + ": unknown signature '" + vx.signature + "'");
  }
  std::map<std::pair<int, int>, int> uses;
  auto touch = [&](const SlotRef& r, const std::string& where) {
    if (r.vertex < 0 || r.vertex >= nv) {
      issues.push_back(where + ": no such vertex");
      return;
    }
    const auto& vx = g.vertices[static_cast<std::size_t>(r.vertex)];
    int a = arity[static_cast<std::size_t>(r.vertex)];
    if (r.slot < 0 || (a >= 0 && r.slot >= a)) {
      issues.push_back(where + ": vertex " + vx.id + " has no slot " + std::to_string(r.slot));
      return;
    }
    if (++uses[{r.vertex, r.slot}] == 2)
      issues.push_back("vertex " + vx.id + ": slot " + std::to_string(r.slot) + " used more than once");
  };
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    touch(g.edges[k].a, "edge " + std::to_string(k));
    touch(g.edges[k].b, "edge " + std::to_string(k));
  }
  std::set<int> indices;
  for (const auto& d : g.dangling) {
    touch(d.at, "dangling " + std::to_string(d.index));
    if (!indices.insert(d.index).second) issues.push_back("dangling " + std::to_string(d.index) + ": index repeated");
  }
  if (!indices.empty() && (*indices.begin() != 1 || *indices.rbegin() != static_cast<int>(indices.size())))
    issues.push_back("dangling indices must be 1..n without gaps");
  for (int v = 0; v < nv; ++v) {
    int a = arity[static_cast<std::size_t>(v)];
    if (a < 0) continue;
    int used = 0;
    for (int s = 0; s < a; ++s) used += uses.count({v, s}) ? 1 : 0;
    if (used != a)
      issues.push_back("vertex " + g.vertices[static_cast<std::size_t>(v)].id + ": degree " + std::to_string(used) +
                       " but signature arity " + std::to_string(a));
  }
  return issues;
}

namespace {

void require_valid(const SignatureGrid& g) {
  auto issues = validate(g);
  if (!issues.empty()) throw DomainError("invalid grid: " + issues.front());
}

// Factor over edge variables; bit p of a table index is the value of vars[p].
struct Factor {
  std::vector<int> vars;
  std::vector<Scalar> table;
};

Factor vertex_factor(const FullTensor& t, const std::vector<int>& slot_vars) {
  Factor f;
  for (int v : slot_vars)
    if (std::find(f.vars.begin(), f.vars.end(), v) == f.vars.end()) f.vars.push_back(v);
  const int n = t.arity();
  std::vector<int> pos;
  for (int v : slot_vars) pos.push_back(static_cast<int>(std::find(f.vars.begin(), f.vars.end(), v) - f.vars.begin()));
  f.table.resize(std::size_t{1} << f.vars.size());
  for (std::size_t a = 0; a < f.table.size(); ++a) {
    std::size_t idx = 0;
    for (int s = 0; s < n; ++s) idx = (idx << 1) | ((a >> pos[static_cast<std::size_t>(s)]) & 1);
    f.table[a] = t[idx];
  }
  return f;
}

// Product of the given factors with `eliminate` summed out (or kept when -1).
Factor combine(const std::vector<const Factor*>& fs, int eliminate) {
  std::vector<int> vars;
  for (const Factor* f : fs)
    for (int v : f->vars)
      if (v != eliminate && std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  std::vector<int> all = vars;
  if (eliminate >= 0) all.push_back(eliminate);
  std::vector<std::vector<int>> where;
  for (const Factor* f : fs) {
    std::vector<int> w;
    for (int v : f->vars) w.push_back(static_cast<int>(std::find(all.begin(), all.end(), v) - all.begin()));
    where.push_back(std::move(w));
  }
  Factor out;
  out.vars = vars;
  out.table.assign(std::size_t{1} << vars.size(), Scalar(0));
  const std::size_t inner = eliminate >= 0 ? 2 : 1;
  for (std::size_t a = 0; a < out.table.size(); ++a) {
    Scalar sum(0);
    for (std::size_t x = 0; x < inner; ++x) {
      const std::size_t full = a | (x << vars.size());
      Scalar prod(1);
      for (std::size_t k = 0; k < fs.size() && !prod.is_zero(); ++k) {
        std::size_t idx = 0;
        const auto& w = where[k];
        for (std::size_t p = 0; p < w.size(); ++p) idx |= ((full >> w[p]) & 1) << p;
        prod *= fs[k]->table[idx];
      }
      sum += prod;
    }
    out.table[a] = std::move(sum);
  }
  return out;
}

// Variable elimination with a greedy smallest-intermediate order; external vars survive.
Factor contract(const SignatureGrid& g, int limit, std::vector<int>& external) {
  require_valid(g);
  if (static_cast<int>(g.edges.size()) > limit)
    throw ResourceLimit("grid has " + std::to_string(g.edges.size()) + " edges; limit is " + std::to_string(limit));
  const std::size_t nv = g.vertices.size();
  std::vector<std::vector<int>> slot_var(nv);
  for (std::size_t v = 0; v < nv; ++v) slot_var[v].assign(static_cast<std::size_t>(g.arity_of(static_cast<int>(v))), -1);
  int next = 0;
  for (const auto& e : g.edges) {
    slot_var[static_cast<std::size_t>(e.a.vertex)][static_cast<std::size_t>(e.a.slot)] = next;
    slot_var[static_cast<std::size_t>(e.b.vertex)][static_cast<std::size_t>(e.b.slot)] = next;
    ++next;
  }
  std::vector<Dangling> ordered = g.dangling;
  std::sort(ordered.begin(), ordered.end(), [](const Dangling& a, const Dangling& b) { return a.index < b.index; });
  external.clear();
  for (const auto& d : ordered) {
    slot_var[static_cast<std::size_t>(d.at.vertex)][static_cast<std::size_t>(d.at.slot)] = next;
    external.push_back(next++);
  }
  std::vector<Factor> factors;
  for (std::size_t v = 0; v < nv; ++v) factors.push_back(vertex_factor(g.signature_of(static_cast<int>(v)).tensor, slot_var[v]));

  const int internal = static_cast<int>(g.edges.size());
  std::vector<bool> done(static_cast<std::size_t>(internal), false);
  for (int round = 0; round < internal; ++round) {
    int best = -1;
    std::size_t best_width = 0;
    for (int var = 0; var < internal; ++var) {
      if (done[static_cast<std::size_t>(var)]) continue;
      std::set<int> scope;
      for (const auto& f : factors)
        if (std::find(f.vars.begin(), f.vars.end(), var) != f.vars.end()) scope.insert(f.vars.begin(), f.vars.end());
      if (best < 0 || scope.size() < best_width) {
        best = var;
        best_width = scope.size();
      }
    }
    std::vector<const Factor*> touching;
    std::vector<Factor> rest;
    for (const auto& f : factors)
      if (std::find(f.vars.begin(), f.vars.end(), best) != f.vars.end()) touching.push_back(&f);
    Factor merged = combine(touching, best);
    for (auto& f : factors)
      if (std::find(f.vars.begin(), f.vars.end(), best) == f.vars.end()) rest.push_back(std::move(f));
    rest.push_back(std::move(merged));
    factors = std::move(rest);
    done[static_cast<std::size_t>(best)] = true;
  }
  std::vector<const Factor*> all;
  for (const auto& f : factors) all.push_back(&f);
  return combine(all, -1);
}

}  // namespace

Scalar holant(const SignatureGrid& g, int limit) {
  if (!g.dangling.empty()) throw DomainError("holant needs a closed grid; use gate_signature for gadgets");
  std::vector<int> external;
  Factor f = contract(g, limit, external);
  return f.table.at(0);
}

FullTensor gate_signature(const SignatureGrid& g, int limit) {
  std::vector<int> external;
  Factor f = contract(g, limit, external);
  const int n = static_cast<int>(external.size());
  std::vector<int> pos;
  for (int v : external) {
    auto it = std::find(f.vars.begin(), f.vars.end(), v);
    pos.push_back(it == f.vars.end() ? -1 : static_cast<int>(it - f.vars.begin()));
  }
  Vector out(Eigen::Index{1} << n);
  for (std::size_t idx = 0; idx < static_cast<std::size_t>(out.size()); ++idx) {
    std::size_t a = 0;
    for (int k = 0; k < n; ++k) {
      std::size_t bit = (idx >> (n - 1 - k)) & 1;
      if (pos[static_cast<std::size_t>(k)] >= 0) a |= bit << pos[static_cast<std::size_t>(k)];
    }
    out(static_cast<Eigen::Index>(idx)) = f.table[a];
  }
  return FullTensor(n, std::move(out));
}

SignatureGrid two_stretch(const SignatureGrid& g) {
  SignatureGrid out;
  out.name = g.name;
  out.table = g.table;
  for (const auto& v : g.vertices) out.add_vertex(v.id, v.signature, Part::left);
  int counter = 0;
  for (const auto& e : g.edges) {
    std::string id;
    do {
      id = "s" + std::to_string(counter++);
    } while (out.find_vertex(id));
    int mid = out.add_vertex(id, "EQ2", Part::right);
    out.add_edge(e.a.vertex, e.a.slot, mid, 0);
    out.add_edge(mid, 1, e.b.vertex, e.b.slot);
  }
  out.dangling = g.dangling;
  return out;
}

namespace {

void add_transformed(SignatureTable& table, const std::string& name, const TableEntry& e, const Matrix& m, bool row) {
  if (table.defines(name)) return;
  if (e.symmetric)
    table.add(name, row ? apply_row(*e.symmetric, m) : apply(m, *e.symmetric));
  else
    table.add(name, row ? apply_row(e.tensor, m) : apply(m, e.tensor));
}

}  // namespace

TransformedGrid transform_grid(const SignatureGrid& g, const Matrix& t) {
  require_valid(g);
  if (det(t).is_zero()) throw DomainError("transform matrix is singular");
  if (!g.dangling.empty()) throw DomainError("transform_grid needs a closed grid");
  for (const auto& v : g.vertices)
    if (v.part == Part::none) throw DomainError("vertex " + v.id + " has no left/right part; grid is not bipartite");
  for (const auto& e : g.edges)
    if (g.vertices[static_cast<std::size_t>(e.a.vertex)].part == g.vertices[static_cast<std::size_t>(e.b.vertex)].part)
      throw DomainError("edge joins two vertices on the same side; grid is not bipartite");
  const Matrix adj = adjugate2(t);
  SignatureGrid out;
  out.name = g.name;
  out.edges = g.edges;
  for (const auto& v : g.vertices) {
    const TableEntry& e = g.table.at(v.signature);
    std::string name = v.part == Part::left ? v.signature + "*adjT" : "T*" + v.signature;
    add_transformed(out.table, name, e, v.part == Part::left ? adj : t, v.part == Part::left);
    out.vertices.push_back({v.id, name, v.part});
  }
  return {std::move(out), pow(det(t), static_cast<long>(g.edges.size()))};
}

TransformedGrid transform_all(const SignatureGrid& g, const Matrix& t) {
  require_valid(g);
  auto lambda = pseudo_orthogonal_factor(t);
  if (!lambda) throw DomainError("transform_all needs T T^t = lambda I");
  if (!g.dangling.empty()) throw DomainError("transform_all needs a closed grid");
  SignatureGrid out;
  out.name = g.name;
  out.edges = g.edges;
  for (const auto& v : g.vertices) {
    std::string name = "T*" + v.signature;
    add_transformed(out.table, name, g.table.at(v.signature), t, false);
    out.vertices.push_back({v.id, name, v.part});
  }
  return {std::move(out), pow(*lambda, static_cast<long>(g.edges.size()))};
}

namespace {

SlotRef parse_slot_ref(const SignatureGrid& g, const std::string& text) {
  auto dot = text.rfind('.');
  if (dot == std::string::npos) throw ParseError("expected <vid>.<slot>, got '" + text + "'");
  auto v = g.find_vertex(text.substr(0, dot));
  if (!v) throw ParseError("unknown vertex '" + text.substr(0, dot) + "'");
  std::string slot = text.substr(dot + 1);
  if (slot.empty() || !std::all_of(slot.begin(), slot.end(), ::isdigit)) throw ParseError("bad slot in '" + text + "'");
  return {*v, std::stoi(slot)};
}

}  // namespace

SignatureGrid parse_grid(std::string_view text, const SignatureTable* extra) {
  SignatureGrid g;
  if (extra)
    for (const auto& [name, entry] : extra->entries()) {
      if (entry.symmetric)
        g.table.add(name, *entry.symmetric);
      else
        g.table.add(name, entry.tensor);
    }
  bool started = false;
  bool ended = false;
  for_each_line(text, [&](const std::vector<std::string>& tok) {
    const std::string& kw = tok[0];
    if (ended) throw ParseError("content after 'end'");
    if (kw == "grid") {
      if (started) throw ParseError("repeated 'grid' header");
      if (tok.size() != 2) throw ParseError("expected: grid <name>");
      g.name = tok[1];
      started = true;
      return;
    }
    if (!started) throw ParseError("file must start with 'grid <name>'");
    if (parse_table_line(tok, g.table)) return;
    if (kw == "vertex") {
      if (tok.size() != 3 && tok.size() != 4) throw ParseError("expected: vertex <vid> <signame> [left|right]");
      if (!g.table.find(tok[2])) throw ParseError("unknown signature name '" + tok[2] + "'");
      Part part = Part::none;
      if (tok.size() == 4) {
        if (tok[3] == "left")
          part = Part::left;
        else if (tok[3] == "right")
          part = Part::right;
        else
          throw ParseError("part must be left or right");
      }
      if (g.find_vertex(tok[1])) throw ParseError("duplicate vertex id '" + tok[1] + "'");
      g.add_vertex(tok[1], tok[2], part);
    } else if (kw == "edge") {
      if (tok.size() != 3) throw ParseError("expected: edge <vid>.<slot> <vid>.<slot>");
      SlotRef a = parse_slot_ref(g, tok[1]);
      SlotRef b = parse_slot_ref(g, tok[2]);
      g.edges.push_back({a, b});
    } else if (kw == "dangling") {
      if (tok.size() != 3) throw ParseError("expected: dangling <k> <vid>.<slot>");
      if (!std::all_of(tok[1].begin(), tok[1].end(), ::isdigit)) throw ParseError("bad dangling index '" + tok[1] + "'");
      g.dangling.push_back({std::stoi(tok[1]), parse_slot_ref(g, tok[2])});
    } else if (kw == "end") {
      ended = true;
    } else {
      throw ParseError("unknown keyword '" + kw + "'");
    }
  });
  if (!started) throw ParseError("empty grid file");
  if (!ended) throw ParseError("missing 'end'");
  auto issues = validate(g);
  if (!issues.empty()) throw ParseError(issues.front());
  return g;
}

std::string serialize_grid(const SignatureGrid& g) {
  std::ostringstream os;
  os << "grid " << g.name << '\n';
  for (const auto& [name, e] : g.table.entries()) {
    if (e.symmetric) {
      os << "sig " << name << ' ' << to_string(*e.symmetric) << '\n';
    } else {
      os << "tensor " << name << ' ' << e.tensor.arity() << ' ' << to_string(e.tensor) << '\n';
    }
  }
  for (const auto& v : g.vertices) {
    os << "vertex " << v.id << ' ' << v.signature;
    if (v.part == Part::left) os << " left";
    if (v.part == Part::right) os << " right";
    os << '\n';
  }
  auto ref = [&](const SlotRef& r) { return g.vertices[static_cast<std::size_t>(r.vertex)].id + "." + std::to_string(r.slot); };
  for (const auto& e : g.edges) os << "edge " << ref(e.a) << ' ' << ref(e.b) << '\n';
  std::vector<Dangling> ordered = g.dangling;
  std::sort(ordered.begin(), ordered.end(), [](const Dangling& a, const Dangling& b) { return a.index < b.index; });
  for (const auto& d : ordered) os << "dangling " << d.index << ' ' << ref(d.at) << '\n';
  os << "end\n";
  return os.str();
}

}  // namespace holant
