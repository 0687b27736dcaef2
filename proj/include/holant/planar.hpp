#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "holant/algebra.hpp"

namespace holant {

inline constexpr int kDefaultTutteEdgeLimit = 16;
inline constexpr int kDefaultOrientationEdgeLimit = 20;

// Multigraph with optional rotation system. Half-edge h belongs to edge h/2; end 0 sits at
// edges[h/2].u and end 1 at edges[h/2].v, so a loop contributes two half-edges at one vertex.
struct PlaneMultigraph {
  struct Edge {
    std::string id;
    int u = 0;
    int v = 0;
  };

  std::string name;
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  // Counterclockwise half-edges around each vertex; empty when no embedding is known.
  std::vector<std::vector<int>> rotation;

  int add_vertex(std::string id);
  int add_edge(int u, int v, std::string id = {});
  std::optional<int> find_vertex(std::string_view id) const;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int vertex_of(int half_edge) const;
  int degree(int v) const;
  bool has_rotation() const { return !rotation.empty(); }
};

PlaneMultigraph parse_graph(std::string_view text);
std::string serialize_graph(const PlaneMultigraph& g);

// Component index per vertex and the number of components.
std::pair<std::vector<int>, int> components(const PlaneMultigraph& g);
bool is_connected(const PlaneMultigraph& g);

// Face boundary walks as sequences of half-edges (darts). Requires a complete rotation.
std::vector<std::vector<int>> trace_faces(const PlaneMultigraph& g);
// V - E + F = 2 on every component that has an edge.
bool euler_check(const PlaneMultigraph& g);
// Faces of the embedding, counting the shared outer face once.
int face_count(const PlaneMultigraph& g);

// A copy of g with a planar rotation system, or nullopt when g is not planar.
std::optional<PlaneMultigraph> is_planar(const PlaneMultigraph& g);

// One vertex per edge of g, one edge per pair of consecutive darts on a face. The rotation at
// the vertex for edge e (darts d = 2e, d' = 2e+1) is: toward next(d), from prev(d), toward next(d'),
// from prev(d'). Medial edge k starts at the vertex of dart k and ends at the vertex of next(k).
PlaneMultigraph medial(const PlaneMultigraph& g);

// out[e]: edge e runs from end 0 to end 1.
using Orientation = std::vector<bool>;

std::uint64_t count_eulerian_orientations(const PlaneMultigraph& g, int limit = kDefaultOrientationEdgeLimit);
std::vector<Orientation> eulerian_orientations(const PlaneMultigraph& g, int limit = kDefaultOrientationEdgeLimit);
// Vertices whose four half-edges alternate in, out, in, out around the rotation.
int saddle_count(const PlaneMultigraph& g, const Orientation& o);
// Sum over Eulerian orientations of 2^saddles.
Scalar weighted_eo_sum(const PlaneMultigraph& g, int limit = kDefaultOrientationEdgeLimit);

struct TuttePoly {
  std::map<std::pair<int, int>, std::uint64_t> coeff;  // (i, j) -> coefficient of x^i y^j
  Scalar evaluate(const Scalar& x, const Scalar& y) const;
};
std::string to_string(const TuttePoly& t);
TuttePoly tutte(const PlaneMultigraph& g, int limit = kDefaultTutteEdgeLimit);

struct LasVergnas {
  bool holds = false;
  Scalar tutte_side;        // 2 T(G; 3, 3)
  Scalar orientation_side;  // weighted Eulerian orientation sum of the medial graph
};
LasVergnas verify_las_vergnas(const PlaneMultigraph& g, int tutte_limit = kDefaultTutteEdgeLimit,
                              int orientation_limit = kDefaultOrientationEdgeLimit);

std::vector<int> bridges(const PlaneMultigraph& g);

// Edge ids of a perfect matching of a 3-regular bridgeless multigraph.
std::vector<int> perfect_matching_cubic(const PlaneMultigraph& g);

using Pairing = std::vector<std::pair<int, int>>;
// Perfect matching P on the vertices with (V, E + P) planar, for a planar 3-regular multigraph.
Pairing planar_pairing(const PlaneMultigraph& g);
PlaneMultigraph with_pairing(const PlaneMultigraph& g, const Pairing& p);

}  // namespace holant
