#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "holant/errors.hpp"
#include "holant/planar.hpp"

namespace holant {

int PlaneMultigraph::add_vertex(std::string id) {
  if (find_vertex(id)) throw DomainError("duplicate vertex id '" + id + "'");
  vertices.push_back(std::move(id));
  if (has_rotation()) rotation.emplace_back();
  return vertex_count() - 1;
}

int PlaneMultigraph::add_edge(int u, int v, std::string id) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) throw DomainError("edge endpoint out of range");
  if (id.empty()) id = "e" + std::to_string(edges.size());
  edges.push_back({std::move(id), u, v});
  rotation.clear();
  return edge_count() - 1;
}

std::optional<int> PlaneMultigraph::find_vertex(std::string_view id) const {
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (vertices[v] == id) return static_cast<int>(v);
  return std::nullopt;
}

int PlaneMultigraph::vertex_of(int h) const {
  const Edge& e = edges.at(static_cast<std::size_t>(h / 2));
  return h % 2 == 0 ? e.u : e.v;
}

int PlaneMultigraph::degree(int v) const {
  int d = 0;
  for (const auto& e : edges) d += (e.u == v) + (e.v == v);
  return d;
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tok;
  for (std::string t; in >> t;) tok.push_back(t);
  return tok;
}

// Checks that each half-edge appears exactly once, at its own vertex.
void check_rotation(const PlaneMultigraph& g) {
  if (static_cast<int>(g.rotation.size()) != g.vertex_count()) throw DomainError("rotation does not cover every vertex");
  std::vector<int> seen(2 * g.edges.size(), 0);
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int h : g.rotation[static_cast<std::size_t>(v)]) {
      if (h < 0 || h >= static_cast<int>(seen.size())) throw DomainError("rotation names an unknown half-edge");
      if (g.vertex_of(h) != v) throw DomainError("rotation at '" + g.vertices[static_cast<std::size_t>(v)] + "' lists edge '" +
                                                 g.edges[static_cast<std::size_t>(h / 2)].id + "' which is not incident");
      if (seen[static_cast<std::size_t>(h)]++) throw DomainError("half-edge listed twice in the rotation");
    }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw DomainError("rotation misses a half-edge");
}

}  // namespace

PlaneMultigraph parse_graph(std::string_view text) {
  PlaneMultigraph g;
  std::map<std::string, std::vector<std::string>> rotations;
  std::vector<std::string> rotation_order;
  std::map<std::string, int> edge_index;
  bool started = false, ended = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto tok = split(line);
    if (tok.empty()) continue;
    try {
      const std::string& kw = tok[0];
      if (ended) throw ParseError("content after 'end'");
      if (kw == "graph") {
        if (started) throw ParseError("repeated 'graph' header");
        if (tok.size() != 2) throw ParseError("expected: graph <name>");
        g.name = tok[1];
        started = true;
        continue;
      }
      if (!started) throw ParseError("file must start with 'graph <name>'");
      if (kw == "vertex") {
        if (tok.size() != 2) throw ParseError("expected: vertex <vid>");
        g.add_vertex(tok[1]);
      } else if (kw == "edge") {
        if (tok.size() != 4) throw ParseError("expected: edge <eid> <vid> <vid>");
        if (edge_index.count(tok[1])) throw ParseError("duplicate edge id '" + tok[1] + "'");
        auto u = g.find_vertex(tok[2]), v = g.find_vertex(tok[3]);
        if (!u) throw ParseError("unknown vertex '" + tok[2] + "'");
        if (!v) throw ParseError("unknown vertex '" + tok[3] + "'");
        edge_index[tok[1]] = g.add_edge(*u, *v, tok[1]);
      } else if (kw == "rotation") {
        if (tok.size() < 2 || tok[1].back() != ':') throw ParseError("expected: rotation <vid>: <eid> ...");
        std::string vid = tok[1].substr(0, tok[1].size() - 1);
        if (rotations.count(vid)) throw ParseError("repeated rotation for '" + vid + "'");
        rotations[vid] = std::vector<std::string>(tok.begin() + 2, tok.end());
        rotation_order.push_back(vid);
      } else if (kw == "end") {
        ended = true;
      } else {
        throw ParseError("unknown keyword '" + kw + "'");
      }
    } catch (const Error& e) {
      throw ParseError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  if (!started) throw ParseError("empty graph file");
  if (!ended) throw ParseError("missing 'end'");
  if (!rotations.empty()) {
    g.rotation.assign(g.vertices.size(), {});
    std::vector<int> used(g.edges.size(), 0);
    for (const auto& vid : rotation_order) {
      auto v = g.find_vertex(vid);
      if (!v) throw ParseError("rotation for unknown vertex '" + vid + "'");
      for (const auto& eid : rotations[vid]) {
        auto it = edge_index.find(eid);
        if (it == edge_index.end()) throw ParseError("rotation names unknown edge '" + eid + "'");
        const auto& e = g.edges[static_cast<std::size_t>(it->second)];
        int end;
        if (e.u == e.v) {
          // First listing of a loop is end 0, the second end 1.
          end = used[static_cast<std::size_t>(it->second)]++;
          if (end > 1) throw ParseError("loop '" + eid + "' listed more than twice");
        } else if (e.u == *v) {
          end = 0;
        } else if (e.v == *v) {
          end = 1;
        } else {
          throw ParseError("rotation at '" + vid + "' lists non-incident edge '" + eid + "'");
        }
        g.rotation[static_cast<std::size_t>(*v)].push_back(2 * it->second + end);
      }
    }
    try {
      check_rotation(g);
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
    if (!euler_check(g)) throw ParseError("rotation system is not a plane embedding (Euler check fails)");
  }
  return g;
}

std::string serialize_graph(const PlaneMultigraph& g) {
  std::ostringstream os;
  os << "graph " << (g.name.empty() ? "g" : g.name) << "\n";
  for (const auto& v : g.vertices) os << "vertex " << v << "\n";
  for (const auto& e : g.edges)
    os << "edge " << e.id << " " << g.vertices[static_cast<std::size_t>(e.u)] << " "
       << g.vertices[static_cast<std::size_t>(e.v)] << "\n";
  if (g.has_rotation())
    for (int v = 0; v < g.vertex_count(); ++v) {
      os << "rotation " << g.vertices[static_cast<std::size_t>(v)] << ":";
      for (int h : g.rotation[static_cast<std::size_t>(v)]) os << " " << g.edges[static_cast<std::size_t>(h / 2)].id;
      os << "\n";
    }
  os << "end\n";
  return os.str();
}

std::pair<std::vector<int>, int> components(const PlaneMultigraph& g) {
  std::vector<int> parent(g.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]); };
  for (const auto& e : g.edges) parent[static_cast<std::size_t>(find(e.u))] = find(e.v);
  std::vector<int> comp(g.vertices.size(), -1);
  std::map<int, int> label;
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto [it, fresh] = label.emplace(find(v), static_cast<int>(label.size()));
    comp[static_cast<std::size_t>(v)] = it->second;
  }
  return {comp, static_cast<int>(label.size())};
}

bool is_connected(const PlaneMultigraph& g) { return components(g).second <= 1; }

namespace {

// Position of each half-edge inside its vertex rotation.
std::vector<int> rotation_positions(const PlaneMultigraph& g) {
  std::vector<int> pos(2 * g.edges.size(), -1);
  for (const auto& rot : g.rotation)
    for (std::size_t k = 0; k < rot.size(); ++k) pos[static_cast<std::size_t>(rot[k])] = static_cast<int>(k);
  return pos;
}

// Dart following h on its face: the rotation successor of the twin of h.
std::vector<int> next_darts(const PlaneMultigraph& g) {
  const auto pos = rotation_positions(g);
  std::vector<int> next(2 * g.edges.size());
  for (std::size_t h = 0; h < next.size(); ++h) {
    const int twin = static_cast<int>(h ^ 1);
    const auto& rot = g.rotation[static_cast<std::size_t>(g.vertex_of(twin))];
    const std::size_t k = static_cast<std::size_t>(pos[static_cast<std::size_t>(twin)]);
    next[h] = rot[(k + 1) % rot.size()];
  }
  return next;
}

}  // namespace

std::vector<std::vector<int>> trace_faces(const PlaneMultigraph& g) {
  if (!g.has_rotation()) throw DomainError("graph has no rotation system");
  check_rotation(g);
  const auto next = next_darts(g);
  std::vector<char> visited(next.size(), 0);
  std::vector<std::vector<int>> faces;
  for (std::size_t start = 0; start < next.size(); ++start) {
    if (visited[start]) continue;
    std::vector<int> face;
    for (int h = static_cast<int>(start); !visited[static_cast<std::size_t>(h)]; h = next[static_cast<std::size_t>(h)]) {
      visited[static_cast<std::size_t>(h)] = 1;
      face.push_back(h);
    }
    faces.push_back(std::move(face));
  }
  return faces;
}

bool euler_check(const PlaneMultigraph& g) {
  const auto [comp, count] = components(g);
  std::vector<long> v(static_cast<std::size_t>(count), 0), e(v), f(v);
  for (int x = 0; x < g.vertex_count(); ++x) ++v[static_cast<std::size_t>(comp[static_cast<std::size_t>(x)])];
  for (const auto& ed : g.edges) ++e[static_cast<std::size_t>(comp[static_cast<std::size_t>(ed.u)])];
  for (const auto& face : trace_faces(g)) ++f[static_cast<std::size_t>(comp[static_cast<std::size_t>(g.vertex_of(face[0]))])];
  for (std::size_t c = 0; c < v.size(); ++c)
    if (e[c] > 0 && v[c] - e[c] + f[c] != 2) return false;
  return true;
}

int face_count(const PlaneMultigraph& g) {
  const auto [comp, count] = components(g);
  std::set<int> with_edges;
  for (const auto& e : g.edges) with_edges.insert(comp[static_cast<std::size_t>(e.u)]);
  const int traced = static_cast<int>(trace_faces(g).size());
  return traced - static_cast<int>(with_edges.size()) + 1;
}

PlaneMultigraph medial(const PlaneMultigraph& g) {
  if (g.edges.empty()) throw DomainError("medial graph of an edgeless graph");
  if (!is_connected(g)) throw DomainError("medial graph needs a connected graph");
  if (!g.has_rotation()) throw DomainError("medial graph needs an embedded graph");
  check_rotation(g);
  if (!euler_check(g)) throw DomainError("rotation system is not a plane embedding");
  const auto next = next_darts(g);
  std::vector<int> prev(next.size());
  for (std::size_t h = 0; h < next.size(); ++h) prev[static_cast<std::size_t>(next[h])] = static_cast<int>(h);

  PlaneMultigraph m;
  m.name = "medial(" + (g.name.empty() ? std::string("g") : g.name) + ")";
  for (const auto& e : g.edges) m.add_vertex(e.id);
  for (std::size_t d = 0; d < next.size(); ++d)
    m.add_edge(static_cast<int>(d / 2), next[d] / 2, "m" + std::to_string(d));
  m.rotation.assign(g.edges.size(), {});
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const int d = static_cast<int>(2 * e), dt = d + 1;
    m.rotation[e] = {2 * d, 2 * prev[static_cast<std::size_t>(d)] + 1, 2 * dt, 2 * prev[static_cast<std::size_t>(dt)] + 1};
  }
  return m;
}

PlaneMultigraph with_pairing(const PlaneMultigraph& g, const Pairing& p) {
  PlaneMultigraph out;
  out.name = g.name;
  out.vertices = g.vertices;
  out.edges = g.edges;
  for (const auto& [a, b] : p) out.add_edge(a, b, "p" + std::to_string(out.edges.size()));
  return out;
}

}  // namespace holant
