#pragma once

// Reference implementations used only by the tests. Each one is written directly from the
// definition and shares no code path with the library routine it checks.

#include <gmpxx.h>

#include <map>
#include <random>
#include <utility>
#include <vector>

#include "holant/grid.hpp"
#include "holant/planar.hpp"

namespace oracle {

using holant::Scalar;
using EdgeList = std::vector<std::pair<int, int>>;

// Sum over edge assignments, reading each vertex value straight from its table entry.
Scalar brute_holant(const holant::SignatureGrid& g);

// Perfect matchings of a multigraph (parallel edges counted separately, loops never used).
std::uint64_t count_perfect_matchings(int n, const EdgeList& edges);

// Spanning trees of a connected multigraph by the matrix-tree theorem over mpq_class.
mpz_class spanning_trees(int n, const EdgeList& edges);

// Tutte polynomial coefficients from the subset expansion
// sum_A (x-1)^(r(E)-r(A)) (y-1)^(|A|-r(A)).
std::map<std::pair<int, int>, long long> tutte_subsets(int n, const EdgeList& edges);

// Eulerian orientations by checking every one of the 2^m direction choices.
std::uint64_t brute_eulerian_orientations(int n, const EdgeList& edges);

holant::PlaneMultigraph graph_from_edges(int n, const EdgeList& edges, const std::string& name = "g");
EdgeList edges_of(const holant::PlaneMultigraph& g);

// Uniform small scalars: integers in [-3,3] plus optional small imaginary part and halves.
Scalar random_scalar(std::mt19937& rng, bool allow_zero = true);
holant::SymmetricSignature random_signature(std::mt19937& rng, int arity);
holant::Matrix random_invertible(std::mt19937& rng, int n);

// Connected multigraph with loops and parallel edges, m edges on at most n vertices.
EdgeList random_connected_multigraph(std::mt19937& rng, int n, int m);

// Random closed grid over a random multigraph with at most max_edges edges.
holant::SignatureGrid random_grid(std::mt19937& rng, int max_edges);
// Random closed grid plus `count` pendant vertices carrying the unary signature `placeholder`.
holant::SignatureGrid random_grid_with_unaries(std::mt19937& rng, int max_edges, int count, const std::string& placeholder);
// Random bipartite closed grid with left/right parts.
holant::SignatureGrid random_bipartite_grid(std::mt19937& rng, int max_edges);

// 3-regular multigraph from a random configuration, simple when `simple` is set.
EdgeList random_cubic(std::mt19937& rng, int n, bool simple);

// Planar cubic multigraphs: seeds grown by planarity-preserving local operations.
EdgeList planar_cubic_seed(int which);  // 0 K4, 1 theta, 2 prism, 3 dumbbell, 4 cube
EdgeList grow_planar_cubic(std::mt19937& rng, EdgeList g, int max_vertices);
int vertex_count(const EdgeList& edges);

}  // namespace oracle
