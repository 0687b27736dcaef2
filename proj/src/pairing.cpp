#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>
#include <set>

#include "holant/errors.hpp"
#include "holant/planar.hpp"

namespace holant {

namespace {

using MatchGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;

void require_cubic(const PlaneMultigraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 3)
      throw DomainError("vertex '" + g.vertices[static_cast<std::size_t>(v)] + "' has degree " + std::to_string(g.degree(v)) +
                        ", expected 3");
}

std::pair<int, int> key(int a, int b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); }

}  // namespace

std::vector<int> perfect_matching_cubic(const PlaneMultigraph& g) {
  if (g.vertices.empty()) throw DomainError("empty graph");
  require_cubic(g);
  for (const auto& e : g.edges)
    if (e.u == e.v) throw DomainError("self-loop in a 3-regular graph forces a bridge");
  if (!bridges(g).empty()) throw DomainError("graph has a bridge");

  std::map<std::pair<int, int>, std::vector<int>> parallel;
  for (int e = 0; e < g.edge_count(); ++e)
    parallel[key(g.edges[static_cast<std::size_t>(e)].u, g.edges[static_cast<std::size_t>(e)].v)].push_back(e);

  std::vector<int> matching;
  std::vector<char> done(g.vertices.size(), 0);
  // Triple edges are whole components.
  for (const auto& [uv, es] : parallel)
    if (es.size() == 3) {
      matching.push_back(es[0]);
      done[static_cast<std::size_t>(uv.first)] = done[static_cast<std::size_t>(uv.second)] = 1;
    }

  // Simple graph: double edges u=v become u-w1, u-w2, v-w1, v-w2, w1-w2.
  int n = g.vertex_count();
  MatchGraph mg(static_cast<std::size_t>(n));
  std::map<std::pair<int, int>, int> simple_edge;  // simple pair -> original edge (-1 for gadget edges)
  std::map<int, std::pair<int, int>> gadget_owner;  // gadget vertex -> the doubled pair
  for (const auto& [uv, es] : parallel) {
    if (done[static_cast<std::size_t>(uv.first)]) continue;
    if (es.size() == 1) {
      boost::add_edge(static_cast<std::size_t>(uv.first), static_cast<std::size_t>(uv.second), mg);
      simple_edge[uv] = es[0];
    } else {
      const int w1 = n++, w2 = n++;
      boost::add_vertex(mg);
      boost::add_vertex(mg);
      gadget_owner[w1] = gadget_owner[w2] = uv;
      for (auto [a, b] : {std::pair{uv.first, w1}, {uv.first, w2}, {uv.second, w1}, {uv.second, w2}, {w1, w2}}) {
        boost::add_edge(static_cast<std::size_t>(a), static_cast<std::size_t>(b), mg);
        simple_edge[key(a, b)] = -1;
      }
    }
  }
  std::vector<boost::graph_traits<MatchGraph>::vertex_descriptor> mate(static_cast<std::size_t>(n));
  boost::edmonds_maximum_cardinality_matching(mg, &mate[0]);
  const auto none = boost::graph_traits<MatchGraph>::null_vertex();
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (done[static_cast<std::size_t>(v)]) continue;
    const auto m = mate[static_cast<std::size_t>(v)];
    if (m == none) throw InternalError("no perfect matching found in a bridgeless cubic graph");
    const int w = static_cast<int>(m);
    if (w < v) continue;
    if (w >= g.vertex_count()) {
      // Matched into its gadget; the partner is matched there too, so use one parallel edge.
      const auto uv = gadget_owner.at(w);
      if (uv.first == v) matching.push_back(parallel.at(uv)[0]);
    } else {
      matching.push_back(simple_edge.at(key(v, w)));
    }
  }
  std::sort(matching.begin(), matching.end());
  std::vector<int> covered(g.vertices.size(), 0);
  for (int e : matching) {
    ++covered[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(e)].u)];
    ++covered[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(e)].v)];
  }
  for (int c : covered)
    if (c != 1) throw InternalError("projected matching is not perfect");
  return matching;
}

namespace {

// Vertex ids into g, edge list local to the recursion.
struct Sub {
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> edges;
};

PlaneMultigraph to_graph(const Sub& s, std::map<int, int>& local) {
  PlaneMultigraph h;
  local.clear();
  for (int v : s.vertices) local[v] = h.add_vertex(std::to_string(v));
  for (const auto& [a, b] : s.edges) h.add_edge(local.at(a), local.at(b));
  return h;
}

void pair_component(const Sub& s, Pairing& out) {
  if (s.vertices.empty()) return;
  std::map<int, int> local;
  const PlaneMultigraph h = to_graph(s, local);
  const auto [comp, count] = components(h);
  if (count > 1) {
    std::vector<Sub> parts(static_cast<std::size_t>(count));
    for (int v : s.vertices) parts[static_cast<std::size_t>(comp[static_cast<std::size_t>(local.at(v))])].vertices.push_back(v);
    for (const auto& e : s.edges) parts[static_cast<std::size_t>(comp[static_cast<std::size_t>(local.at(e.first))])].edges.push_back(e);
    for (const auto& p : parts) pair_component(p, out);
    return;
  }
  const auto br = bridges(h);
  if (br.empty()) {
    for (int e : perfect_matching_cubic(h)) out.emplace_back(s.edges[static_cast<std::size_t>(e)].first, s.edges[static_cast<std::size_t>(e)].second);
    return;
  }
  const std::size_t bridge = static_cast<std::size_t>(br.front());
  const int u = s.edges[bridge].first, v = s.edges[bridge].second;
  // Split G - (u,v) into the sides of u and v, then drop u and v and close each side.
  PlaneMultigraph cut;
  for (int x : s.vertices) cut.add_vertex(std::to_string(x));
  for (std::size_t k = 0; k < s.edges.size(); ++k)
    if (k != bridge) cut.add_edge(local.at(s.edges[k].first), local.at(s.edges[k].second));
  const auto side = components(cut).first;
  auto close_side = [&](int center) {
    Sub part;
    std::vector<int> neighbors;
    const int c = side[static_cast<std::size_t>(local.at(center))];
    for (int x : s.vertices)
      if (x != center && side[static_cast<std::size_t>(local.at(x))] == c) part.vertices.push_back(x);
    for (std::size_t k = 0; k < s.edges.size(); ++k) {
      if (k == bridge) continue;
      const auto [a, b] = s.edges[k];
      if (side[static_cast<std::size_t>(local.at(a))] != c) continue;
      if (a == center && b == center) continue;
      if (a == center)
        neighbors.push_back(b);
      else if (b == center)
        neighbors.push_back(a);
      else
        part.edges.emplace_back(a, b);
    }
    if (neighbors.size() == 2) part.edges.emplace_back(neighbors[0], neighbors[1]);
    return part;
  };
  pair_component(close_side(u), out);
  pair_component(close_side(v), out);
  out.emplace_back(u, v);
}

}  // namespace

Pairing planar_pairing(const PlaneMultigraph& g) {
  require_cubic(g);
  if (!is_planar(g)) throw DomainError("graph is not planar");
  Sub all;
  for (int v = 0; v < g.vertex_count(); ++v) all.vertices.push_back(v);
  for (const auto& e : g.edges) all.edges.emplace_back(e.u, e.v);
  Pairing p;
  pair_component(all, p);
  for (auto& [a, b] : p)
    if (a > b) std::swap(a, b);
  std::sort(p.begin(), p.end());
  std::vector<int> covered(g.vertices.size(), 0);
  for (const auto& [a, b] : p) {
    ++covered[static_cast<std::size_t>(a)];
    ++covered[static_cast<std::size_t>(b)];
  }
  for (int c : covered)
    if (c != 1) throw InternalError("pairing is not a perfect matching on the vertices");
  if (!is_planar(with_pairing(g, p))) throw InternalError("graph plus pairing is not planar");
  return p;
}

}  // namespace holant
