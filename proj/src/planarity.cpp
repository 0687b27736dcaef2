#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <boost/property_map/property_map.hpp>

#include "holant/errors.hpp"
#include "holant/planar.hpp"

namespace holant {

namespace {

using SimpleGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                          boost::property<boost::vertex_index_t, int>,
                                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<SimpleGraph>::edge_descriptor;

}  // namespace

std::optional<PlaneMultigraph> is_planar(const PlaneMultigraph& g) {
  // Subdivide every edge once (loops twice) so the Boost graph is simple. Each half-edge of g
  // becomes the unique edge between its vertex and the adjacent subdivision vertex.
  const int n = g.vertex_count();
  int next_vertex = n;
  struct Piece {
    int a, b;
    int half_edge;  // half-edge of g at vertex a, or -1 for an interior segment
  };
  std::vector<Piece> pieces;
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edges[static_cast<std::size_t>(e)];
    if (ed.u == ed.v) {
      const int m1 = next_vertex++, m2 = next_vertex++;
      pieces.push_back({ed.u, m1, 2 * e});
      pieces.push_back({m1, m2, -1});
      pieces.push_back({ed.u, m2, 2 * e + 1});
    } else {
      const int m = next_vertex++;
      pieces.push_back({ed.u, m, 2 * e});
      pieces.push_back({ed.v, m, 2 * e + 1});
    }
  }
  SimpleGraph sg(static_cast<std::size_t>(next_vertex));
  std::map<std::pair<int, int>, int> half_edge_of;
  for (const auto& p : pieces) {
    boost::add_edge(static_cast<std::size_t>(p.a), static_cast<std::size_t>(p.b), sg);
    if (p.half_edge >= 0) half_edge_of[{p.a, p.b}] = p.half_edge;
  }
  auto edge_index = boost::get(boost::edge_index, sg);
  boost::graph_traits<SimpleGraph>::edges_size_type count = 0;
  boost::graph_traits<SimpleGraph>::edge_iterator ei, ei_end;
  for (boost::tie(ei, ei_end) = boost::edges(sg); ei != ei_end; ++ei) boost::put(edge_index, *ei, count++);

  std::vector<std::vector<BoostEdge>> embedding(boost::num_vertices(sg));
  auto embedding_map = boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, sg));
  const bool planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = sg,
                                                          boost::boyer_myrvold_params::embedding = embedding_map);
  if (!planar) return std::nullopt;

  PlaneMultigraph out = g;
  out.rotation.assign(static_cast<std::size_t>(n), {});
  for (int v = 0; v < n; ++v)
    for (const BoostEdge& e : embedding[static_cast<std::size_t>(v)]) {
      const int s = static_cast<int>(boost::source(e, sg)), t = static_cast<int>(boost::target(e, sg));
      const int other = s == v ? t : s;
      auto it = half_edge_of.find({v, other});
      if (it == half_edge_of.end()) throw InternalError("planar embedding lost a half-edge");
      out.rotation[static_cast<std::size_t>(v)].push_back(it->second);
    }
  if (!euler_check(out)) throw InternalError("recovered rotation system fails the Euler check");
  return out;
}

}  // namespace holant
