// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "holant/catalog.hpp"
#include "holant/classify.hpp"
#include "holant/errors.hpp"
#include "holant/gadget.hpp"
#include "holant/grid.hpp"
#include "holant/interpolation.hpp"
#include "holant/linalg.hpp"
#include "holant/planar.hpp"
#include "holant/transform.hpp"
#include "oracles.hpp"

using namespace holant;
using oracle::EdgeList;

namespace {

// Collects failure messages for one criterion.
struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 10) failures.push_back(what);
  }
};

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

PlaneMultigraph embed(const EdgeList& e) {
  auto g = is_planar(oracle::graph_from_edges(oracle::vertex_count(e), e));
  if (!g) throw std::logic_error("expected a planar graph");
  return *g;
}

// Column transform T^{(x)n} on a full tensor, entry by entry.
FullTensor kron_apply(const Matrix& t, const FullTensor& f) {
  const int n = f.arity();
  Vector out = Vector::Constant(static_cast<Eigen::Index>(f.size()), Scalar(0));
  for (std::size_t x = 0; x < f.size(); ++x)
    for (std::size_t y = 0; y < f.size(); ++y) {
      Scalar c(1);
      for (int k = 0; k < n; ++k) c *= t(static_cast<Eigen::Index>((x >> k) & 1), static_cast<Eigen::Index>((y >> k) & 1));
      out(static_cast<Eigen::Index>(x)) += c * f[y];
    }
  return FullTensor(n, out);
}

// H^{(x)n} on a symmetric signature: entry k is sum_j f_j sum_i (-1)^i C(k,i) C(n-k,j-i).
SymmetricSignature hadamard_symmetric(const SymmetricSignature& f) {
  const int n = f.arity();
  auto choose = [](int a, int b) -> long {
    if (b < 0 || b > a) return 0;
    long r = 1;
    for (int t = 1; t <= b; ++t) r = r * (a - b + t) / t;
    return r;
  };
  std::vector<Scalar> out;
  for (int k = 0; k <= n; ++k) {
    Scalar total(0);
    for (int j = 0; j <= n; ++j) {
      long w = 0;
      for (int i = 0; i <= std::min(k, j); ++i) w += (i % 2 ? -1 : 1) * choose(k, i) * choose(n - k, j - i);
      total += Scalar(w) * f[j];
    }
    out.push_back(total);
  }
  return SymmetricSignature(out);
}

SignatureGrid with_table(const SignatureGrid& g, const std::function<SymmetricSignature(const SymmetricSignature&)>& map) {
  SignatureGrid h;
  h.name = g.name;
  for (const auto& [name, e] : g.table.entries()) h.table.add(name, map(*e.symmetric));
  h.vertices = g.vertices;
  h.edges = g.edges;
  h.dangling = g.dangling;
  return h;
}

SignatureGrid regular_grid(const EdgeList& edges, const SymmetricSignature& f) {
  SignatureGrid g;
  g.table.add("F", f);
  const int n = oracle::vertex_count(edges);
  for (int v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v), "F");
  std::vector<int> next(static_cast<std::size_t>(n), 0);
  for (const auto& [a, b] : edges) {
    const int sa = next[static_cast<std::size_t>(a)]++;
    const int sb = next[static_cast<std::size_t>(b)]++;
    g.add_edge(a, sa, b, sb);
  }
  return g;
}

SymmetricSignature from(std::vector<Scalar> e) { return SymmetricSignature(std::move(e)); }

// ---------------------------------------------------------------------------------------------

void las_vergnas(Check& c) {
  std::vector<EdgeList> corpus = {{{0, 1}, {1, 2}, {2, 0}},
                                  {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
                                  {{0, 1}, {0, 1}}};
  std::mt19937 rng(1001);
  for (int t = 0; t < 20; ++t) corpus.push_back(oracle::random_connected_multigraph(rng, 6, 1 + t % 7));
  for (const auto& e : corpus) {
    const auto g = embed(e);
    // left side from the subset expansion, right side from the library's orientation sum
    Scalar t33(0);
    for (const auto& [ij, coeff] : oracle::tutte_subsets(g.vertex_count(), e)) t33 += Scalar(static_cast<long>(coeff)) * pow(Scalar(3), ij.first + ij.second);
    const auto r = verify_las_vergnas(g);
    c.expect(r.holds && r.tutte_side == r.orientation_side, "identity fails on a graph with " + std::to_string(e.size()) + " edges");
    c.expect(r.tutte_side == Scalar(2) * t33, "2T(G;3,3) disagrees with the subset expansion");
    c.expect(weighted_eo_sum(medial(g)) == Scalar(2) * t33, "orientation sum disagrees with the subset expansion");
  }
}

void tetrahedron(Check& c) {
  const Matrix ghat = mat({{19, 0, 0, 7}, {0, 7, 5, 0}, {0, 5, 7, 0}, {7, 0, 0, 19}}) * Scalar(Rational(1, 2));
  const auto gadget = tetrahedron_gadget(parse_signature("[3,0,1,0,3]"));
  c.expect(gadget.vertices.size() == 5, "gadget should have five vertices");
  c.expect(signature_matrix(gate_signature(gadget)) == Matrix(ghat * Scalar(32)), "gate is not 32 g-hat");
}

void eigendecompositions(Check& c) {
  const Matrix t = mat({{0, 0, 1, 1}, {1, 1, 0, 0}, {-1, 1, 0, 0}, {0, 0, -1, 1}});
  const Matrix tinv = inverse(t);
  auto diag = [](std::initializer_list<Scalar> d) {
    Matrix m = Matrix::Constant(4, 4, Scalar(0));
    int k = 0;
    for (const auto& x : d) m(k, k) = x, ++k;
    return m;
  };
  // f-hat from Z^{(x)4} f = 4 f-hat, with M_f the right-hand side of the Las Vergnas problem
  const Matrix mf = mat({{0, 0, 0, 1}, {0, 1, 2, 0}, {0, 2, 1, 0}, {1, 0, 0, 0}});
  const FullTensor zf = kron_apply(z_basis(), tensor_from_signature_matrix(mf));
  const Matrix mfhat = signature_matrix(zf) * Scalar(Rational(1, 4));
  c.expect(mfhat == mat({{2, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 2}}), "M_f-hat differs from the stated matrix");
  c.expect(Matrix(t * diag({1, 1, 1, 3}) * tinv) == mfhat, "M_f-hat is not T diag(1,1,1,3) T^-1");

  const FullTensor g = gate_signature(tetrahedron_gadget(parse_signature("[3,0,1,0,3]")));
  const Matrix mg = signature_matrix(g) * Scalar(Rational(1, 32));
  c.expect(Matrix(t * diag({1, 6, 6, 13}) * tinv) == mg, "M_g-hat is not T diag(1,6,6,13) T^-1");
  const FullTensor gh = tensor_from_signature_matrix(mg);
  for (int s = 1; s <= 3; ++s) {
    const Matrix chained = signature_matrix(gate_signature(product_chain_gadget(gh, s)));
    c.expect(chained == mat_pow(mg, s), "N_" + std::to_string(s) + " is not M_g-hat^s");
    const Scalar six = pow(Scalar(6), s);
    c.expect(chained == Matrix(t * diag({1, six, six, pow(Scalar(13), s)}) * tinv), "N_" + std::to_string(s) + " eigenvalues");
  }
}

void catalog(Check& c) {
  const auto entries = parse_catalog(read(default_catalog_path()));
  const auto results = verify_catalog(entries);
  std::set<std::string> passed;
  for (const auto& r : results) {
    c.expect(r.passed, r.name + ": " + r.message);
    c.expect(r.comparisons > 0, r.name + " compared nothing");
    if (r.passed) passed.insert(r.name);
  }
  for (const char* name : {"pinning-1i", "binary-interp", "double-gadget", "arity5-232", "tetrahedron", "eo-Z-binary",
                           "eo-Z-quaternary", "N-chain", "domain-pairing", "pairing-square", "mixing-conjugation",
                           "unary-into-eq3", "pinning-1b1", "eo-eigen", "eo-chain"})
    c.expect(passed.count(name) == 1, std::string("missing or failing entry ") + name);
}

void invariances(Check& c) {
  std::mt19937 rng(1005);
  for (int t = 0; t < 100; ++t) {
    const auto g = oracle::random_grid(rng, 10);
    const Scalar before = oracle::brute_holant(g);
    const auto hatted = with_table(g, hadamard_symmetric);
    const Scalar scale = pow(Scalar(2), static_cast<long>(g.edges.size()));
    c.expect(oracle::brute_holant(hatted) == scale * before, "hadamard scaling fails");
    const auto lib = transform_all(g, hadamard());
    c.expect(lib.factor == scale && holant::holant(lib.grid) == scale * before, "transform_all disagrees");
    c.expect(holant::holant(two_stretch(g)) == before, "two-stretch changes the Holant");
  }
  for (int t = 0; t < 50; ++t) {
    const auto g = oracle::random_bipartite_grid(rng, 9);
    const Matrix m = oracle::random_invertible(rng, 2);
    const auto r = transform_grid(g, m);
    const Scalar expected = pow(det(m), static_cast<long>(g.edges.size()));
    c.expect(r.factor == expected, "bipartite factor is not det(T)^|E|");
    c.expect(oracle::brute_holant(r.grid) == expected * oracle::brute_holant(g), "bipartite identity fails");
  }
}

void venn(Check& c) {
  struct Rep {
    SymmetricSignature f;
    bool a, phat, m;
  };
  std::vector<Rep> reps;
  const Scalar i = Scalar::i();
  auto alternating = [](int n, const Scalar& first, const Scalar& second) {
    std::vector<Scalar> e;
    for (int k = 0; k <= n; ++k) e.push_back(k % 2 ? second : first);
    return from(e);
  };
  // even-position geometric: [1,0,r,0,r^2,...]
  auto even_geometric = [](int n, const Scalar& r, bool shifted) {
    std::vector<Scalar> e;
    for (int k = 0; k <= n; ++k) {
      const int j = shifted ? k - 1 : k;
      e.push_back(j >= 0 && j % 2 == 0 ? pow(r, j / 2) : Scalar(0));
    }
    return from(e);
  };
  reps.push_back({parse_signature("[1,0,-1]"), true, true, true});
  for (int n = 2; n <= 6; ++n) {
    reps.push_back({alternating(n, 1, 0), true, true, true});
    reps.push_back({alternating(n, 0, 1), true, true, true});
  }
  for (const Scalar& s : {Scalar(1), Scalar(-1)}) reps.push_back({SymmetricSignature{1, s}, true, true, false});
  for (int n = 2; n <= 6; ++n)
    for (const Scalar& s : {i, -i}) reps.push_back({alternating(n, 1, s), true, true, false});
  for (const Scalar& s : {i, -i}) reps.push_back({SymmetricSignature{1, 0, s}, true, false, true});
  for (int n = 3; n <= 6; ++n) {
    reps.push_back({even_geometric(n, -1, false), true, false, true});
    reps.push_back({even_geometric(n, -1, true), true, false, true});
  }
  for (int n = 3; n <= 6; ++n)
    for (const Scalar& s : {Scalar(1), Scalar(-1), i, -i}) {
      std::vector<Scalar> e(static_cast<std::size_t>(n + 1), Scalar(0));
      e.front() = 1;
      e.back() = s;
      reps.push_back({from(e), true, false, false});
    }
  for (int n = 2; n <= 6; ++n)
    for (const Scalar& s : {Scalar(1), Scalar(-1)}) {
      // [1, s, -1, -s, 1, s, ...]
      std::vector<Scalar> e;
      for (int k = 0; k <= n; ++k) e.push_back((k % 2 ? s : Scalar(1)) * (k % 4 >= 2 ? Scalar(-1) : Scalar(1)));
      reps.push_back({from(e), true, false, false});
    }
  const std::vector<Scalar> bs = {2, -3, Scalar(1, 1), Scalar(Rational(1, 2)), Scalar(0, 2)};
  for (int n = 2; n <= 6; ++n)
    for (const Scalar& b : bs) reps.push_back({alternating(n, 1, b), false, true, false});
  for (const Scalar& r : bs) reps.push_back({SymmetricSignature{1, 0, r}, false, false, true});
  const std::vector<Scalar> rs = {2, -3, Scalar(1, 1), i, Scalar(Rational(1, 2))};
  for (int n = 3; n <= 6; ++n)
    for (const Scalar& r : rs) {
      reps.push_back({even_geometric(n, r, false), false, false, true});
      reps.push_back({even_geometric(n, r, true), false, false, true});
    }
  for (int n = 3; n <= 6; ++n) {
    std::vector<Scalar> e(static_cast<std::size_t>(n + 1), Scalar(0));
    e[1] = 1;
    reps.push_back({from(e), false, false, true});
    reps.push_back({reverse(from(e)), false, false, true});
  }
  for (const auto& r : reps) {
    const auto v = venn_flags(r.f);
    c.expect(v.inA() == r.a && v.inPhat() == r.phat && v.inM() == r.m,
             to_string(r.f) + " lands in the wrong region (A " + std::to_string(v.inA()) + ", P-hat " +
                 std::to_string(v.inPhat()) + ", M " + std::to_string(v.inM()) + ")");
  }

  // emptiness of (M and P-hat) minus A
  const std::vector<Scalar> values = {0, 1, -1, i, -i, 2, Scalar(1, 1)};
  auto check = [&](const SymmetricSignature& f) {
    if (f.is_zero()) return;
    if (in_M(f) && in_Phat(f) && !in_A(f)) c.expect(false, "counterexample " + to_string(f));
  };
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::size_t> d(static_cast<std::size_t>(n + 1), 0);
    for (;;) {
      std::vector<Scalar> e;
      for (auto x : d) e.push_back(values[x]);
      check(from(e));
      std::size_t k = 0;
      while (k < d.size() && ++d[k] == values.size()) d[k++] = 0;
      if (k == d.size()) break;
    }
  }
  std::mt19937 rng(1006);
  std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
  for (int t = 0; t < 20000; ++t) {
    std::vector<Scalar> e;
    for (int k = 0; k <= 4 + t % 2; ++k) e.push_back(values[pick(rng)]);
    check(from(e));
  }
}

void arity4(Check& c) {
  c.expect(classify_arity4(parse_signature("[1,0,0,0,1]")).label == "P-transformable", "=4 should be P-transformable");
  const auto vanishing = parse_signature("[0,1,2i,-3,-4i]");
  c.expect(classify_arity4(vanishing).label == "vanishing", "[0,1,2i,-3,-4i] should be vanishing");
  const std::vector<EdgeList> grids = {{{0, 0}, {0, 0}},
                                       {{0, 1}, {0, 1}, {0, 1}, {0, 1}},
                                       {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {2, 0}, {2, 0}},
                                       {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {4, 1},
                                        {5, 1}, {5, 2}, {5, 3}, {5, 4}}};
  for (const auto& e : grids) {
    const auto g = regular_grid(e, vanishing);
    c.expect(holant::holant(g) == Scalar(0) && oracle::brute_holant(g) == Scalar(0), "vanishing Holant is not 0");
  }
  for (const char* v : {"1", "2", "i"}) {
    const auto f = parse_signature(std::string("[") + v + ",1,0,0,0]");
    c.expect(!classify_arity4(f).tractable(), to_string(f) + " should be hard");
  }
  c.expect(classify_arity4(parse_signature("[0,1,0,0,0]")).label == "M-transformable", "[0,1,0,0,0] should be M-transformable");
  const auto eo = parse_signature("[3,0,1,0,3]");
  c.expect(!classify_arity4(eo).tractable(), "[3,0,1,0,3] should be hard");
  c.expect(det(compressed_matrix(eo)) == Scalar(16), "compressed determinant of [3,0,1,0,3] is not 16");
}

void interpolation(Check& c) {
  const RecursiveSpec unipotent{mat({{1, 1}, {0, 1}}), vec({0, 1})};
  const auto v = check_conditions(unipotent);
  c.expect(v.passes && !v.det_m.is_zero() && !v.krylov_det.is_zero() && !v.finite_order, "unipotent spec should pass");
  // pairwise independence checked directly: M^k s = (k, 1)
  std::vector<Vector> orbit;
  Vector s = unipotent.s;
  for (int k = 0; k <= 50; ++k, s = unipotent.m * s) orbit.push_back(s);
  for (int k = 0; k <= 50; ++k)
    for (int l = k + 1; l <= 50; ++l) {
      const Scalar cross = orbit[k](0) * orbit[l](1) - orbit[k](1) * orbit[l](0);
      c.expect(!cross.is_zero(), "orbit points are dependent");
    }
  c.expect(pairwise_independent_prefix(unipotent, 50), "library pairwise check fails");

  std::mt19937 rng(1008);
  static const std::vector<Scalar> pool = {1, -1, 2, -2, 3, Scalar::i(), Scalar(1, 1), Scalar(0, -2)};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  int singular = 0;
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + t % 3;
    const bool jordan = t % 5 == 1;
    Matrix j = Matrix::Constant(n, n, Scalar(0));
    for (int k = 0; k < n; ++k) j(k, k) = pool[pick(rng)];
    int block = 0;
    if (jordan) {
      block = std::uniform_int_distribution<int>(0, n - 2)(rng);
      j(block + 1, block + 1) = j(block, block);
      j(block, block + 1) = 1;
    }
    const Matrix p = oracle::random_invertible(rng, n);
    const Matrix m = p * j * inverse(p);
    Vector w(n);
    for (int k = 0; k < n; ++k) w(k) = oracle::random_scalar(rng, false);
    // a zero coordinate makes s orthogonal to the matching row eigenvector of M
    if (t % 3 == 0) w(jordan ? block + 1 : std::uniform_int_distribution<int>(0, n - 1)(rng)) = 0;
    const Vector sv = p * w;
    const auto witness = orthogonal_row_eigenvector(m, sv);
    const bool nonsingular = krylov_nonsingular(m, sv);
    singular += !nonsingular;
    c.expect(nonsingular == !witness.has_value(), "krylov criterion and eigenvector criterion disagree");
    if (witness) {
      const RowVector x = *witness;
      c.expect((x * sv)(0).is_zero(), "witness is not orthogonal to s");
      c.expect(projective_equal(Vector((x * m).transpose()), Vector(x.transpose())), "witness is not a row eigenvector");
    }
  }
  c.expect(singular > 20 && singular < 180, "constructed matrices do not cover both outcomes");

  const RecursiveSpec spec{mat({{1, 2}, {1, 0}}), vec({1, 1})};
  for (int t = 0; t < 20; ++t) {
    const auto g = oracle::random_grid_with_unaries(rng, 9, 1 + t % 3, "U");
    const Vector target = vec({oracle::random_scalar(rng), oracle::random_scalar(rng)});
    SignatureGrid exact = g;
    exact.table = SignatureTable{};
    for (const auto& [name, e] : g.table.entries())
      exact.table.add(name, name == "U" ? SymmetricSignature{target(0), target(1)} : *e.symmetric);
    c.expect(interpolate_unary_holant(g, "U", spec, target) == oracle::brute_holant(exact), "interpolation disagrees with direct evaluation");
  }
}

void pairing(Check& c) {
  std::mt19937 rng(1009);
  int bridged = 0, parallel = 0;
  auto valid = [&](const PlaneMultigraph& g, const Pairing& p) {
    std::vector<int> hits(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const auto& [a, b] : p) {
      if (a == b) return false;
      ++hits[static_cast<std::size_t>(a)];
      ++hits[static_cast<std::size_t>(b)];
    }
    for (int h : hits)
      if (h != 1) return false;
    return is_planar(with_pairing(g, p)).has_value();
  };
  for (int t = 0; t < 200; ++t) {
    const EdgeList e = oracle::grow_planar_cubic(rng, oracle::planar_cubic_seed(t % 5), 16);
    const auto g = oracle::graph_from_edges(oracle::vertex_count(e), e);
    if (g.vertex_count() > 16 || !is_planar(g)) {
      c.expect(false, "generator produced an invalid graph");
      continue;
    }
    bridged += !bridges(g).empty();
    std::set<std::pair<int, int>> seen;
    bool par = false;
    for (auto [a, b] : e) par |= a == b || !seen.insert({std::min(a, b), std::max(a, b)}).second;
    parallel += par;
    c.expect(valid(g, planar_pairing(g)), "pairing invalid on graph " + std::to_string(t));
  }
  c.expect(bridged > 0 && parallel > 0, "corpus lacks bridged or parallel-edge graphs");
  const auto dumbbell = parse_graph(read(std::string(HOLANT_TEST_DATA) + "/graphs/dumbbell.graph"));
  const auto p = planar_pairing(dumbbell);
  c.expect(valid(dumbbell, p), "bridged example pairing invalid");
  const int u = *dumbbell.find_vertex("u"), w = *dumbbell.find_vertex("w");
  bool has_bridge_pair = false;
  for (const auto& [a, b] : p) has_bridge_pair |= (a == u && b == w) || (a == w && b == u);
  c.expect(has_bridge_pair, "bridged example does not pair the bridge endpoints");
}

void oracle_equivalence(Check& c) {
  std::mt19937 rng(1010);
  for (int t = 0; t < 30; ++t) {
    const int n = 4 + 2 * (t % 5);
    EdgeList e;
    for (;;) {
      e = oracle::random_cubic(rng, n, t % 2 == 0);
      if (oracle::spanning_trees(n, e) != 0) break;  // connected
    }
    const Scalar h = holant::holant(regular_grid(e, parse_signature("[0,1,0,0]")));
    c.expect(h == Scalar(static_cast<long>(oracle::count_perfect_matchings(n, e))), "matching count disagrees");
    const auto poly = tutte(oracle::graph_from_edges(n, e), 18);
    c.expect(poly.evaluate(1, 1) == Scalar(Rational(oracle::spanning_trees(n, e))), "spanning tree count disagrees");
  }
}

}  // namespace

int main() {
  std::setvbuf(stdout, nullptr, _IOLBF, 0);
  struct Criterion {
    const char* name;
    void (*run)(Check&);
    double budget_seconds;
  };
  const Criterion criteria[] = {
      {"las vergnas identity", las_vergnas, 60},
      {"tetrahedron gadget", tetrahedron, 1},
      {"eigendecompositions and chained gadgets", eigendecompositions, 0},
      {"gadget catalog", catalog, 10},
      {"holographic invariances", invariances, 0},
      {"venn diagram regions", venn, 0},
      {"arity-4 decisions", arity4, 0},
      {"interpolation suite", interpolation, 0},
      {"planar pairings", pairing, 0},
      {"evaluator oracle equivalence", oracle_equivalence, 0},
  };
  int failed = 0;
  int index = 0;
  for (const auto& cr : criteria) {
    ++index;
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.budget_seconds > 0 && seconds > cr.budget_seconds)
      c.failures.push_back("took " + std::to_string(seconds) + " s, budget " + std::to_string(cr.budget_seconds) + " s");
    const bool ok = c.failures.empty();
    failed += !ok;
    std::printf("%s %d %s (%.2f s)\n", ok ? "PASS" : "FAIL", index, cr.name, seconds);
    for (const auto& f : c.failures) std::printf("    %s\n", f.c_str());
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
