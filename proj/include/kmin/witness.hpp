#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kmin/connectivity.hpp"
#include "kmin/graph.hpp"
#include "kmin/minimality.hpp"

namespace kmin {

// ---------------------------------------------------------------------------
// Separator-intersection procedure for vertex-minimally k-connected graphs

struct Lemma5Trace {
  int k = 0;
  std::vector<Vertex> initial_H;
  int shrink_steps = 0;
  std::string minimality;  // "exact" or "descent"

  std::vector<Vertex> H;
  std::vector<Vertex> T;   // boundary of H
  std::vector<Vertex> C1;  // H - T
  std::vector<Vertex> C2;  // G - H
  Vertex x = -1;
  std::vector<Vertex> T_prime;
  std::vector<Vertex> T_star;
  std::vector<Vertex> D1;
  std::vector<Vertex> D2;
  /// quadrant[i][j] = C_{i+1} cap D_{j+1}; side[i][j] the matching T^i_j.
  std::array<std::array<std::vector<Vertex>, 2>, 2> quadrant;
  std::array<std::array<std::vector<Vertex>, 2>, 2> side;

  std::string X_name;
  std::vector<Vertex> X;
  Vertex witness = -1;
  int degree = 0;
  int bound = 0;  // floor(3k/2) - 1
  bool witness_in_H = false;
};

/// Boundary plus smallest component of a minimum separator; nullopt if G
/// has no separator of size k.
std::optional<std::vector<Vertex>> find_profound_k_region(const Graph& g, int k);

/// H is given as a vertex set. With `verify_class` the class precondition is
/// checked (costly on big graphs).
Lemma5Trace lemma5_witness(const Graph& g, std::span<const Vertex> h, int k, bool verify_class = true);

// ---------------------------------------------------------------------------

struct Lemma7Result {
  Vertex witness = -1;
  int degree = 0;
  std::vector<Vertex> component;
  MixedSet S;
};

/// S mixes vertices and edges of g; C must be a whole component of G - S
/// with |C| <= |S_E| and |S| <= k.
Lemma7Result lemma7_witness(const Graph& g, const MixedSet& s, std::span<const Vertex> c, int k);

// ---------------------------------------------------------------------------

enum class RegionSearch { Auto, Enumerate, FlowDescent };

struct MinimalRegion {
  Region region;
  int boundary_weight = 0;  // multiplicities counted for multigraphs
  std::string method;       // "enumeration" or "flow-descent"; both exact
};

inline constexpr int kRegionEnumerationLimit = 12;

/// Inclusion-minimal non-empty region H inside D with boundary weight < m.
MinimalRegion minimal_region_small_edge_boundary(const Graph& g, std::span<const Vertex> d, int m,
                                                 RegionSearch search = RegionSearch::Auto);
MinimalRegion minimal_region_small_edge_boundary(const MultiGraph& g, std::span<const Vertex> d, int m,
                                                 RegionSearch search = RegionSearch::Auto);

/// Exhaustive check over all proper non-empty subsets (|H| <= 20).
bool is_inclusion_minimal_region(const Graph& g, std::span<const Vertex> h, int m);

// ---------------------------------------------------------------------------

struct Theorem4cSide {
  std::vector<Vertex> D;
  MinimalRegion H;
  Vertex witness = -1;
  int degree = 0;
};

struct Theorem4cResult {
  int k = 0;
  Cut cut;
  std::array<Theorem4cSide, 2> sides;
};

Theorem4cResult theorem4c_witness(const Graph& g, int k, bool verify_class = true);
Theorem4cResult theorem4c_witness(const MultiGraph& g, int k, bool verify_class = true);

// ---------------------------------------------------------------------------

struct Lemma8Step {
  std::string action;  // "start", "split", "descend-B", "descend-A"
  std::vector<Vertex> C;
  Vertex x = -1;
  Vertex y = -1;
  std::vector<Edge> F;
};

struct Lemma8Trace {
  int k = 0;
  std::vector<Lemma8Step> steps;
  std::vector<Vertex> C;
  Vertex x = -1;
  int lambda_minus_x = 0;
  std::vector<Edge> boundary;  // edges from C - x to G - C
  Lemma7Result lemma7;
  Vertex witness = -1;
  int degree = 0;
};

Lemma8Trace lemma8_witness(const Graph& g, int k, bool verify_class = true);

/// Second run inside G - (C - x) of the first, giving a distinct vertex.
std::array<Lemma8Trace, 2> lemma8_two_witnesses(const Graph& g, int k, bool verify_class = true);

// ---------------------------------------------------------------------------

struct WitnessEntry {
  Vertex vertex = -1;
  int degree = 0;
};

struct WitnessReport {
  MinimalityClass cls{};
  int k = 0;
  int order = 0;
  int bound = 0;
  int required = 0;
  bool in_scope = true;
  bool satisfied = false;
  bool min_degree_is_k = true;  // only meaningful for class a
  double ratio = 0.0;           // |V_bound| / |G|
  std::vector<WitnessEntry> witnesses;
};

/// Degree bound for the class: floor(3k/2) - 1 for vertex-minimal
/// k-connectivity, k otherwise.
int witness_bound(MinimalityClass c, int k);
/// Required size of V_bound. `max_degree` feeds class a. The counts 4 for
/// classes c and d are capped at |G| (K^3 is vertex-minimally 2-edge-connected).
int witness_requirement(MinimalityClass c, int k, int order, int max_degree);
/// False only for class b at k = 1: its sole member K^2 has no vertex of
/// degree 0.
bool in_theorem_scope(MinimalityClass c, int k);

WitnessReport theorem2_witness_report(const Graph& g, MinimalityClass c, int k, bool verify_class = true);

}  // namespace kmin
