#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "kmin/graph.hpp"

namespace kmin {

inline constexpr int kMaxCanonicalOrder = 10;
inline constexpr int kMaxEnumerationOrder = 9;

/// Canonical relabelling: isomorphic graphs map to equal graphs. n <= 10.
Graph canonical_form(const Graph& g);
/// Upper-triangle bit code of the canonical form.
std::uint64_t canonical_code(const Graph& g);

/// One representative per isomorphism class on exactly n vertices, in
/// canonical form, sorted by canonical code. Built by extending every class
/// on n - 1 vertices with every neighbour set of a new vertex.
std::vector<Graph> nonisomorphic_graphs(int n);

/// Visits every class with 1 <= order <= max_n, ordered by order then code.
void for_each_graph(int max_n, const std::function<void(const Graph&)>& visit);

/// G(n, p) sample from a seeded 64-bit Mersenne twister.
Graph random_graph(int n, double p, std::uint64_t seed);

}  // namespace kmin
