#include "holant/catalog.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <sstream>

#include "holant/errors.hpp"
#include "holant/gadget.hpp"
#include "holant/linalg.hpp"
#include "holant/transform.hpp"

#ifndef HOLANT_DATA_DIR
#define HOLANT_DATA_DIR "data"
#endif

namespace holant {

Value Value::scalar(const Scalar& z) {
  Value v;
  v.kind = Kind::scalar;
  v.m = Matrix::Constant(1, 1, z);
  return v;
}

Value Value::list(const Vector& x) {
  Value v;
  v.kind = Kind::list;
  v.m = x;
  return v;
}

Value Value::matrix(const Matrix& m) {
  Value v;
  v.kind = Kind::matrix;
  v.m = m;
  return v;
}

const Scalar& Value::as_scalar() const {
  if (kind != Kind::scalar) throw DomainError("expected a scalar, got " + to_string(*this));
  return m(0, 0);
}

Vector Value::as_list() const {
  if (kind != Kind::list) throw DomainError("expected a list, got " + to_string(*this));
  return m.col(0);
}

std::string to_string(const Value& v) {
  switch (v.kind) {
    case Value::Kind::scalar: return to_string(v.m(0, 0));
    case Value::Kind::list: return to_string(SymmetricSignature(Vector(v.m.col(0))));
    default: return to_string(v.m);
  }
}

std::string default_catalog_path() { return std::string(HOLANT_DATA_DIR) + "/catalog.txt"; }

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// Recursive-descent evaluator over Q(i) values.
class Evaluator {
 public:
  using Lookup = std::function<std::optional<Value>(const std::string&)>;

  Evaluator(std::string_view text, Lookup lookup) : s_(text), lookup_(std::move(lookup)) {}

  Value run() {
    Value v = expr();
    skip();
    if (p_ != s_.size()) fail("unexpected '" + std::string(1, s_[p_]) + "'");
    return v;
  }

 private:
  std::string_view s_;
  std::size_t p_ = 0;
  Lookup lookup_;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("in expression '" + std::string(s_) + "': " + what);
  }

  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }

  bool eat(char c) {
    skip();
    if (p_ < s_.size() && s_[p_] == c) {
      ++p_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (eat('+'))
        v = add(v, term(), 1);
      else if (eat('-'))
        v = add(v, term(), -1);
      else
        return v;
    }
  }

  Value term() {
    Value v = unary();
    for (;;) {
      skip();
      // '==' never reaches the evaluator, so '*' and '/' are unambiguous.
      if (eat('*'))
        v = mul(v, unary());
      else if (eat('/'))
        v = divide(v, unary());
      else
        return v;
    }
  }

  Value unary() {
    if (eat('-')) {
      Value v = unary();
      v.m = -v.m;
      return v;
    }
    return power();
  }

  Value power() {
    Value base = atom();
    if (!eat('^')) return base;
    const Scalar e = unary().as_scalar();
    if (!e.is_real() || e.real().denominator() != 1) fail("exponent must be an integer");
    const long k = e.real().numerator().get_si();
    if (base.kind == Value::Kind::scalar) return Value::scalar(pow(base.as_scalar(), k));
    if (base.kind == Value::Kind::matrix) return Value::matrix(mat_pow(base.m, k));
    fail("cannot raise a list to a power");
  }

  Value atom() {
    skip();
    if (p_ >= s_.size()) fail("unexpected end");
    const char c = s_[p_];
    if (c == '(') {
      ++p_;
      Value v = expr();
      expect(')');
      return v;
    }
    if (c == '[') return literal();
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (p_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[p_])) || s_[p_] == '_')) name += s_[p_++];
      if (eat('(')) {
        std::vector<Value> args;
        if (!eat(')')) {
          do args.push_back(expr());
          while (eat(','));
          expect(')');
        }
        return call(name, args);
      }
      if (name == "i") return Value::scalar(Scalar::i());
      if (name == "H") return Value::matrix(hadamard());
      if (name == "Z") return Value::matrix(z_basis());
      if (name == "X") return Value::matrix(swap_basis());
      if (auto v = lookup_(name)) return *v;
      fail("unknown name '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Value number() {
    std::string digits;
    while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) digits += s_[p_++];
    Scalar z{Rational{mpq_class{mpz_class{digits}}}};
    if (p_ < s_.size() && s_[p_] == 'i' && (p_ + 1 == s_.size() || !std::isalnum(static_cast<unsigned char>(s_[p_ + 1])))) {
      ++p_;
      z = z * Scalar::i();
    }
    return Value::scalar(z);
  }

  Value literal() {
    expect('[');
    std::vector<std::vector<Scalar>> rows(1);
    bool matrix = false;
    if (!eat(']')) {
      for (;;) {
        rows.back().push_back(expr().as_scalar());
        if (eat(',')) continue;
        if (eat(';')) {
          matrix = true;
          rows.emplace_back();
          continue;
        }
        expect(']');
        break;
      }
    }
    if (!matrix) {
      Vector v(static_cast<Eigen::Index>(rows[0].size()));
      for (std::size_t k = 0; k < rows[0].size(); ++k) v(static_cast<Eigen::Index>(k)) = rows[0][k];
      return Value::list(v);
    }
    const std::size_t cols = rows[0].size();
    Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) fail("ragged matrix literal");
      for (std::size_t k = 0; k < cols; ++k) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) = rows[r][k];
    }
    return Value::matrix(m);
  }

  Value add(const Value& a, const Value& b, int sign) {
    if (a.kind != b.kind || a.m.rows() != b.m.rows() || a.m.cols() != b.m.cols())
      fail("cannot add " + to_string(a) + " and " + to_string(b));
    Value v = a;
    if (sign > 0)
      v.m = a.m + b.m;
    else
      v.m = a.m - b.m;
    return v;
  }

  Value mul(const Value& a, const Value& b) {
    using K = Value::Kind;
    if (a.kind == K::scalar) {
      Value v = b;
      v.m = a.as_scalar() * b.m;
      return v;
    }
    if (b.kind == K::scalar) {
      Value v = a;
      v.m = a.m * b.as_scalar();
      return v;
    }
    if (a.kind == K::matrix && a.m.cols() == b.m.rows()) {
      Value v = b;
      v.m = a.m * b.m;
      return v;
    }
    fail("cannot multiply " + to_string(a) + " by " + to_string(b));
  }

  Value divide(const Value& a, const Value& b) {
    const Scalar d = b.as_scalar();
    if (d.is_zero()) fail("division by zero");
    Value v = a;
    v.m = a.m / d;
    return v;
  }

  static long integer(const Value& v) {
    const Scalar z = v.as_scalar();
    if (!z.is_real() || z.real().denominator() != 1) throw DomainError("expected an integer, got " + to_string(z));
    return z.real().numerator().get_si();
  }

  Value call(const std::string& f, const std::vector<Value>& a) {
    auto arity = [&](std::size_t n) {
      if (a.size() != n) fail(f + " takes " + std::to_string(n) + " arguments");
    };
    auto sig = [](const Value& v) { return SymmetricSignature(v.as_list()); };
    auto out = [](const SymmetricSignature& s) { return Value::list(s.as_vector()); };
    if (f == "inv") {
      arity(1);
      return Value::matrix(inverse(a[0].m));
    }
    if (f == "transpose") {
      arity(1);
      return Value::matrix(a[0].m.transpose());
    }
    if (f == "det") {
      arity(1);
      return Value::scalar(det(a[0].m));
    }
    if (f == "diag") {
      arity(1);
      return Value::matrix(Matrix(a[0].as_list().asDiagonal()));
    }
    if (f == "apply") {
      arity(2);
      return out(apply(a[0].m, sig(a[1])));
    }
    if (f == "apply_row") {
      arity(2);
      return out(apply_row(sig(a[0]), a[1].m));
    }
    if (f == "conjugate") {
      arity(2);
      return out(binary_conjugate(sig(a[0]), a[1].m));
    }
    if (f == "hat") {
      arity(1);
      return out(hat(sig(a[0])));
    }
    if (f == "reverse") {
      arity(1);
      return out(reverse(sig(a[0])));
    }
    if (f == "sigmat") {
      arity(1);
      return Value::matrix(signature_matrix(sig(a[0])));
    }
    if (f == "tapply") {
      arity(2);
      return Value::matrix(signature_matrix(apply(a[0].m, tensor_from_signature_matrix(a[1].m))));
    }
    if (f == "unary") {
      arity(3);
      return Value::list(recursive_unary(a[0].m, a[1].as_list(), integer(a[2])));
    }
    if (f == "append") {
      arity(2);
      auto e = sig(a[0]).entries();
      e.push_back(a[1].as_scalar());
      return out(SymmetricSignature(std::move(e)));
    }
    if (f == "exactone") {
      arity(1);
      const long k = integer(a[0]);
      if (k < 1) fail("exactone needs arity at least 1");
      std::vector<Scalar> e(static_cast<std::size_t>(k) + 1, Scalar(0));
      e[1] = 1;
      return out(SymmetricSignature(std::move(e)));
    }
    fail("unknown function '" + f + "'");
  }
};

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> w;
  for (std::string t; in >> t;) w.push_back(t);
  return w;
}

// One parameter assignment of one entry.
class Instance {
 public:
  Instance(std::map<std::string, Value> vars, int limit) : vars_(std::move(vars)), limit_(limit) {
    grid_.name = "catalog";
  }

  // Returns an empty string on success, or a failure description.
  std::string run(const std::vector<CatalogEntry::Statement>& statements, int& comparisons) {
    for (const auto& st : statements) {
      try {
        if (auto failure = step(st, comparisons); !failure.empty()) return failure;
      } catch (const ResourceLimit&) {
        throw;
      } catch (const Error& e) {
        throw ParseError("line " + std::to_string(st.line) + ": " + e.what());
      }
    }
    return {};
  }

 private:
  std::map<std::string, Value> vars_;
  int limit_;
  SignatureGrid grid_;
  std::vector<std::pair<int, int>> identify_;
  std::optional<FullTensor> gate_;

  Value eval(const std::string& text) {
    return Evaluator(text, [this](const std::string& name) -> std::optional<Value> {
             if (name == "gate") return Value::list(symmetric_gate().as_vector());
             if (name == "gatematrix") return Value::matrix(signature_matrix(gate()));
             auto it = vars_.find(name);
             if (it == vars_.end()) return std::nullopt;
             return it->second;
           })
        .run();
  }

  const FullTensor& gate() {
    if (!gate_) {
      FullTensor t = gate_signature(grid_, limit_);
      for (const auto& [i, j] : identify_) t = identify_slots(t, i - 1, j - 1);
      gate_ = t;
    }
    return *gate_;
  }

  SymmetricSignature symmetric_gate() {
    const FullTensor& t = gate();
    if (!is_symmetric(t)) throw DomainError("gate is not symmetric: " + to_string(t));
    return symmetrize(t);
  }

  SlotRef slot(const std::string& text) {
    const auto dot = text.rfind('.');
    if (dot == std::string::npos) throw ParseError("expected <vid>.<slot>, got '" + text + "'");
    auto v = grid_.find_vertex(text.substr(0, dot));
    if (!v) throw ParseError("unknown vertex '" + text.substr(0, dot) + "'");
    return {*v, std::stoi(text.substr(dot + 1))};
  }

  void add_tensor(const std::string& name, const Value& v) {
    if (v.kind == Value::Kind::matrix) {
      if (v.m.rows() == 4 && v.m.cols() == 4) {
        grid_.table.add(name, tensor_from_signature_matrix(v.m));
        return;
      }
      if (v.m.rows() == 2 && v.m.cols() == 2) {
        grid_.table.add(name, FullTensor(2, vec({v.m(0, 0), v.m(0, 1), v.m(1, 0), v.m(1, 1)})));
        return;
      }
      throw DomainError("tensor matrices must be 2x2 or 4x4");
    }
    const Vector x = v.as_list();
    int n = 0;
    while ((Eigen::Index{1} << n) < x.size()) ++n;
    if ((Eigen::Index{1} << n) != x.size()) throw DomainError("tensor length must be a power of two");
    grid_.table.add(name, FullTensor(n, x));
  }

  std::string step(const CatalogEntry::Statement& st, int& comparisons) {
    const std::string& kw = st.keyword;
    if (kw == "let") {
      const auto eq = st.rest.find('=');
      if (eq == std::string::npos) throw ParseError("expected: let <name> = <expr>");
      vars_[trim(st.rest.substr(0, eq))] = eval(st.rest.substr(eq + 1));
    } else if (kw == "sig" || kw == "tensor") {
      const auto w = words(st.rest);
      if (w.size() < 2) throw ParseError("expected: " + kw + " <name> <expr>");
      const Value v = eval(st.rest.substr(st.rest.find(w[0]) + w[0].size()));
      if (kw == "sig")
        grid_.table.add(w[0], SymmetricSignature(v.as_list()));
      else
        add_tensor(w[0], v);
    } else if (kw == "vertex") {
      const auto w = words(st.rest);
      if (w.size() != 2) throw ParseError("expected: vertex <vid> <signame>");
      grid_.add_vertex(w[0], w[1]);
    } else if (kw == "edge") {
      const auto w = words(st.rest);
      if (w.size() != 2) throw ParseError("expected: edge <vid>.<slot> <vid>.<slot>");
      const SlotRef a = slot(w[0]), b = slot(w[1]);
      grid_.add_edge(a.vertex, a.slot, b.vertex, b.slot);
    } else if (kw == "dangling") {
      const auto w = words(st.rest);
      if (w.size() != 2) throw ParseError("expected: dangling <k> <vid>.<slot>");
      const SlotRef a = slot(w[1]);
      grid_.add_dangling(std::stoi(w[0]), a.vertex, a.slot);
    } else if (kw == "build") {
      const auto w = words(st.rest);
      if (w.empty()) throw ParseError("expected: build <gadget> <args>");
      auto arg = [&](std::size_t k) {
        if (k >= w.size()) throw ParseError("build " + w[0] + ": missing argument");
        return eval(w[k]);
      };
      auto count = [&](std::size_t k) {
        const Scalar z = arg(k).as_scalar();
        if (!z.is_real() || z.real().denominator() != 1) throw DomainError("expected an integer argument");
        return static_cast<int>(z.real().numerator().get_si());
      };
      if (w[0] == "nchain") {
        grid_ = n_chain_gadget(arg(1).as_scalar(), count(2));
      } else if (w[0] == "chain") {
        if (w.size() < 3) throw ParseError("expected: build chain <tensor> <s>");
        grid_ = product_chain_gadget(grid_.table.at(w[1]).tensor, count(2));
      } else if (w[0] == "double") {
        if (w.size() < 2) throw ParseError("expected: build double <signame>");
        const auto& entry = grid_.table.at(w[1]);
        if (!entry.symmetric) throw DomainError("double gadget needs a symmetric signature");
        grid_ = double_gadget(*entry.symmetric);
      } else if (w[0] == "tetrahedron") {
        if (w.size() < 2) throw ParseError("expected: build tetrahedron <signame>");
        const auto& entry = grid_.table.at(w[1]);
        if (!entry.symmetric) throw DomainError("tetrahedron gadget needs a symmetric signature");
        grid_ = tetrahedron_gadget(*entry.symmetric);
      } else {
        throw ParseError("unknown gadget '" + w[0] + "'");
      }
      gate_.reset();
    } else if (kw == "identify") {
      const auto w = words(st.rest);
      if (w.size() != 2) throw ParseError("expected: identify <i> <j>");
      identify_.emplace_back(std::stoi(w[0]), std::stoi(w[1]));
      gate_.reset();
    } else if (kw == "expect" || kw == "expect-exact") {
      const auto eq = st.rest.find("==");
      if (eq == std::string::npos) throw ParseError("expected: " + kw + " <lhs> == <rhs>");
      const Value lhs = eval(st.rest.substr(0, eq)), rhs = eval(st.rest.substr(eq + 2));
      ++comparisons;
      bool ok;
      if (lhs.kind != rhs.kind || lhs.m.rows() != rhs.m.rows() || lhs.m.cols() != rhs.m.cols())
        ok = false;
      else if (kw == "expect-exact")
        ok = lhs.m == rhs.m;
      else
        ok = projective_equal(lhs.m.reshaped(), rhs.m.reshaped());
      if (!ok)
        return "line " + std::to_string(st.line) + ": " + trim(st.rest.substr(0, eq)) + " = " + to_string(lhs) +
               ", expected " + to_string(rhs);
    } else {
      throw ParseError("unknown statement '" + kw + "'");
    }
    return {};
  }
};

}  // namespace

std::vector<CatalogEntry> parse_catalog(std::string_view text) {
  std::vector<CatalogEntry> entries;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  bool open = false;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto space = t.find_first_of(" \t");
    const std::string kw = t.substr(0, space);
    const std::string rest = space == std::string::npos ? std::string() : trim(t.substr(space));
    auto where = [&] { return "line " + std::to_string(number) + ": "; };
    if (kw == "entry") {
      if (open) throw ParseError(where() + "entry inside an entry");
      if (rest.empty()) throw ParseError(where() + "expected: entry <name>");
      entries.push_back({rest, {}, {}});
      open = true;
    } else if (!open) {
      throw ParseError(where() + "statement outside an entry");
    } else if (kw == "end") {
      open = false;
    } else if (kw == "anchor") {
      entries.back().anchor = rest;
    } else {
      static const char* const known[] = {"param", "let", "sig", "tensor", "vertex", "edge", "dangling",
                                          "build", "identify", "expect", "expect-exact"};
      if (std::find(std::begin(known), std::end(known), kw) == std::end(known))
        throw ParseError(where() + "unknown statement '" + kw + "'");
      entries.back().statements.push_back({number, kw, rest});
    }
  }
  if (open) throw ParseError("entry '" + entries.back().name + "' is missing 'end'");
  return entries;
}

std::vector<CatalogResult> verify_catalog(const std::vector<CatalogEntry>& entries, int limit) {
  std::vector<CatalogResult> results;
  for (const auto& entry : entries) {
    CatalogResult r{entry.name, entry.anchor, true, 0, 0, {}};
    // Parameters form a cartesian product in declaration order.
    std::vector<std::pair<std::string, std::vector<Value>>> params;
    std::vector<CatalogEntry::Statement> body;
    try {
      for (const auto& st : entry.statements) {
        if (st.keyword != "param") {
          body.push_back(st);
          continue;
        }
        const auto w = words(st.rest);
        if (w.size() < 2) throw ParseError("line " + std::to_string(st.line) + ": expected: param <name> <value> ...");
        std::vector<Value> values;
        for (std::size_t k = 1; k < w.size(); ++k)
          values.push_back(Evaluator(w[k], [](const std::string&) { return std::nullopt; }).run());
        params.emplace_back(w[0], std::move(values));
      }
      std::vector<std::size_t> idx(params.size(), 0);
      for (;;) {
        std::map<std::string, Value> vars;
        std::string label;
        for (std::size_t k = 0; k < params.size(); ++k) {
          vars[params[k].first] = params[k].second[idx[k]];
          label += (label.empty() ? "" : " ") + params[k].first + "=" + to_string(params[k].second[idx[k]]);
        }
        ++r.instances;
        std::string failure = Instance(vars, limit).run(body, r.comparisons);
        if (!failure.empty()) {
          r.passed = false;
          r.message = label.empty() ? failure : "[" + label + "] " + failure;
          break;
        }
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == params[k].second.size()) idx[k++] = 0;
        if (k == idx.size()) break;
      }
    } catch (const Error& e) {
      r.passed = false;
      r.message = e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace holant
