#include <functional>
#include <numeric>
#include <sstream>

#include "holant/errors.hpp"
#include "holant/planar.hpp"

namespace holant {

namespace {

void check_edge_limit(const PlaneMultigraph& g, int limit, const char* what) {
  if (g.edge_count() > limit)
    throw ResourceLimit(std::string(what) + ": " + std::to_string(g.edge_count()) + " edges exceed the limit of " +
                        std::to_string(limit));
}

// Depth-first over edge directions, pruning when a vertex can no longer balance.
template <typename Visit>
void enumerate_orientations(const PlaneMultigraph& g, Visit&& visit) {
  const std::size_t m = g.edges.size();
  std::vector<int> balance(g.vertices.size(), 0), remaining(g.vertices.size(), 0);
  for (const auto& e : g.edges)
    if (e.u != e.v) {
      ++remaining[static_cast<std::size_t>(e.u)];
      ++remaining[static_cast<std::size_t>(e.v)];
    }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) % 2) return;
  Orientation o(m, true);
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == m) {
      visit(o);
      return;
    }
    const auto& e = g.edges[k];
    const std::size_t u = static_cast<std::size_t>(e.u), v = static_cast<std::size_t>(e.v);
    if (u == v) {
      for (bool dir : {true, false}) {
        o[k] = dir;
        go(k + 1);
      }
      return;
    }
    --remaining[u];
    --remaining[v];
    for (bool dir : {true, false}) {
      const int s = dir ? 1 : -1;
      balance[u] += s;
      balance[v] -= s;
      if (std::abs(balance[u]) <= remaining[u] && std::abs(balance[v]) <= remaining[v]) {
        o[k] = dir;
        go(k + 1);
      }
      balance[u] -= s;
      balance[v] += s;
    }
    ++remaining[u];
    ++remaining[v];
  };
  go(0);
}

bool is_out(const PlaneMultigraph& g, const Orientation& o, int h) {
  (void)g;
  const bool forward = o[static_cast<std::size_t>(h / 2)];
  return (h % 2 == 0) == forward;
}

}  // namespace

std::uint64_t count_eulerian_orientations(const PlaneMultigraph& g, int limit) {
  check_edge_limit(g, limit, "Eulerian orientations");
  std::uint64_t count = 0;
  enumerate_orientations(g, [&](const Orientation&) { ++count; });
  return count;
}

std::vector<Orientation> eulerian_orientations(const PlaneMultigraph& g, int limit) {
  check_edge_limit(g, limit, "Eulerian orientations");
  std::vector<Orientation> all;
  enumerate_orientations(g, [&](const Orientation& o) { all.push_back(o); });
  return all;
}

int saddle_count(const PlaneMultigraph& g, const Orientation& o) {
  if (!g.has_rotation()) throw DomainError("saddle count needs a rotation system");
  if (o.size() != g.edges.size()) throw DomainError("orientation does not match the edge set");
  int saddles = 0;
  for (const auto& rot : g.rotation) {
    if (rot.size() != 4) throw DomainError("saddle count needs a 4-regular graph");
    const bool a = is_out(g, o, rot[0]), b = is_out(g, o, rot[1]), c = is_out(g, o, rot[2]), d = is_out(g, o, rot[3]);
    if (a == c && b == d && a != b) ++saddles;
  }
  return saddles;
}

Scalar weighted_eo_sum(const PlaneMultigraph& g, int limit) {
  check_edge_limit(g, limit, "weighted orientation sum");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 4) throw DomainError("weighted orientation sum needs a 4-regular graph");
  if (!g.has_rotation()) throw DomainError("weighted orientation sum needs a rotation system");
  mpz_class total = 0;
  enumerate_orientations(g, [&](const Orientation& o) {
    mpz_class term = 1;
    term <<= static_cast<mp_bitcnt_t>(saddle_count(g, o));
    total += term;
  });
  return Scalar(Rational(mpq_class(total)));
}

Scalar TuttePoly::evaluate(const Scalar& x, const Scalar& y) const {
  Scalar sum(0);
  for (const auto& [ij, c] : coeff)
    sum += Scalar(Rational(mpq_class(mpz_class(std::to_string(c))))) * pow(x, ij.first) * pow(y, ij.second);
  return sum;
}

std::string to_string(const TuttePoly& t) {
  if (t.coeff.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t.coeff.rbegin(); it != t.coeff.rend(); ++it) {
    const auto [i, j] = it->first;
    if (!first) os << " + ";
    first = false;
    const bool constant = i == 0 && j == 0;
    if (it->second != 1 || constant) os << it->second;
    auto power = [&](const char* var, int p) {
      if (p == 0) return;
      os << var;
      if (p > 1) os << "^" << p;
    };
    power("x", i);
    power("y", j);
  }
  return os.str();
}

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

bool connected_without(const EdgeList& edges, std::size_t skip, int n, int from, int to) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (k == skip) continue;
    adj[static_cast<std::size_t>(edges[k].first)].push_back(edges[k].second);
    adj[static_cast<std::size_t>(edges[k].second)].push_back(edges[k].first);
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{from};
  seen[static_cast<std::size_t>(from)] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (x == to) return true;
    for (int y : adj[static_cast<std::size_t>(x)])
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        stack.push_back(y);
      }
  }
  return false;
}

void add_shifted(TuttePoly& into, const TuttePoly& from, int dx, int dy) {
  for (const auto& [ij, c] : from.coeff) into.coeff[{ij.first + dx, ij.second + dy}] += c;
}

TuttePoly tutte_rec(EdgeList edges, int n) {
  TuttePoly t;
  if (edges.empty()) {
    t.coeff[{0, 0}] = 1;
    return t;
  }
  const auto [u, v] = edges.back();
  edges.pop_back();
  if (u == v) {
    add_shifted(t, tutte_rec(std::move(edges), n), 0, 1);
    return t;
  }
  EdgeList contracted = edges;
  for (auto& [a, b] : contracted) {
    if (a == v) a = u;
    if (b == v) b = u;
  }
  edges.emplace_back(u, v);
  const bool bridge = !connected_without(edges, edges.size() - 1, n, u, v);
  edges.pop_back();
  if (bridge) {
    add_shifted(t, tutte_rec(std::move(contracted), n), 1, 0);
    return t;
  }
  add_shifted(t, tutte_rec(std::move(edges), n), 0, 0);
  add_shifted(t, tutte_rec(std::move(contracted), n), 0, 0);
  return t;
}

}  // namespace

TuttePoly tutte(const PlaneMultigraph& g, int limit) {
  check_edge_limit(g, limit, "Tutte polynomial");
  EdgeList edges;
  for (const auto& e : g.edges) edges.emplace_back(e.u, e.v);
  return tutte_rec(std::move(edges), g.vertex_count());
}

LasVergnas verify_las_vergnas(const PlaneMultigraph& g, int tutte_limit, int orientation_limit) {
  PlaneMultigraph embedded = g;
  if (!embedded.has_rotation()) {
    auto e = is_planar(g);
    if (!e) throw DomainError("graph is not planar");
    embedded = *e;
  }
  LasVergnas r;
  r.tutte_side = Scalar(2) * tutte(embedded, tutte_limit).evaluate(3, 3);
  r.orientation_side = weighted_eo_sum(medial(embedded), orientation_limit);
  r.holds = r.tutte_side == r.orientation_side;
  return r;
}

std::vector<int> bridges(const PlaneMultigraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));  // (neighbor, edge)
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edges[static_cast<std::size_t>(e)];
    if (ed.u == ed.v) continue;
    adj[static_cast<std::size_t>(ed.u)].emplace_back(ed.v, e);
    adj[static_cast<std::size_t>(ed.v)].emplace_back(ed.u, e);
  }
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<int> out;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int x, int via) {
    disc[static_cast<std::size_t>(x)] = low[static_cast<std::size_t>(x)] = timer++;
    for (const auto& [y, e] : adj[static_cast<std::size_t>(x)]) {
      if (e == via) continue;
      if (disc[static_cast<std::size_t>(y)] >= 0) {
        low[static_cast<std::size_t>(x)] = std::min(low[static_cast<std::size_t>(x)], disc[static_cast<std::size_t>(y)]);
      } else {
        dfs(y, e);
        low[static_cast<std::size_t>(x)] = std::min(low[static_cast<std::size_t>(x)], low[static_cast<std::size_t>(y)]);
        if (low[static_cast<std::size_t>(y)] > disc[static_cast<std::size_t>(x)]) out.push_back(e);
      }
    }
  };
  for (int v = 0; v < n; ++v)
    if (disc[static_cast<std::size_t>(v)] < 0) dfs(v, -1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace holant
