#pragma once

#include "kmin/graph.hpp"

namespace kmin {

// Basic graphs.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph petersen_graph();

// Products use the index (u, v) -> u * g2.order() + v.
Graph strong_product(const Graph& g1, const Graph& g2);
Graph cartesian_product(const Graph& g1, const Graph& g2);

/// Adds an edge between any two vertices at distance 2.
Graph square(const Graph& g);

/// P_m x K^2 (Cartesian).
LabeledGraph ladder(int m);

/// C_l strong-product K^{k/2} for even k >= 2 and l >= 4; labels "(i,c)".
LabeledGraph strong_cycle(int k, int l);

/// Odd-k variant: C_l strong-product K^{(k+1)/2}, then delete vertex `a` of
/// copy `copy` and vertex `b` of copy `copy + 1`. The choice of the two
/// deleted vertices is left to the caller; no canonical form is claimed.
LabeledGraph strong_cycle_odd(int k, int l, int copy = 0, int a = 0, int b = 0);

/// l copies H_1..H_l of K^{2(k-1)} chained by disjoint (k-1)-matchings, a new
/// vertex a on the free half of H_1, b on the free half of H_l, and edge ab.
/// In every copy, members 0..k-2 match leftward and k-1..2k-3 rightward.
/// Labels: "a", "b", "H<i>:<j>" with i 1-based.
LabeledGraph band_graph(int k, int l);

/// Square of the path v1..vl plus v1v4 and v(l-3)vl, minus v3v4 and
/// v(l-3)v(l-2). Labels "v1".."vl". Requires l >= 10.
LabeledGraph path_square_example(int l);

/// Path on m vertices with every edge of multiplicity k.
MultiGraph multipath(int k, int m);

}  // namespace kmin
