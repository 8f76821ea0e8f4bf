#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kmin/graph.hpp"
#include "kmin/minimality.hpp"

namespace kmin {

/// Vertex coordinates inside an infinite family. Ray-based families put the
/// position along the rays first; tree families put the clique copy first
/// and the tree word after it.
using Key = std::vector<int>;

enum class EndMode { Vertex, Edge };

const char* to_string(EndMode mode);
EndMode parse_end_mode(std::string_view text);

struct DeclaredClass {
  MinimalityClass cls{};
  int k = 0;
};

/// Finite induced piece of an infinite family.
struct Ball {
  Graph graph;
  std::vector<Key> keys;
  std::vector<std::string> labels;
  std::vector<int> distance;     // from the centre, in the infinite graph
  std::vector<char> frontier;    // some neighbour lies outside the piece
  std::vector<int> multiplicity; // per graph.edges(); all 1 for simple families
  std::map<Key, Vertex> index;

  std::optional<Vertex> find(const Key& key) const;
  MultiGraph multigraph() const;
  /// Vertices at distance <= r.
  std::vector<Vertex> within(int r) const;
};

/// Neighbour-function oracle for one of the locally finite families.
class Family {
 public:
  virtual ~Family() = default;

  virtual std::string name() const = 0;
  virtual Key root() const = 0;
  virtual std::vector<Key> neighbors(const Key& v) const = 0;
  virtual std::string label(const Key& v) const = 0;
  virtual int multiplicity(const Key&, const Key&) const { return 1; }

  virtual std::vector<DeclaredClass> declared_classes() const = 0;
  /// Exact end degrees stated for the family, per mode.
  virtual std::optional<int> declared_end_degree(EndMode) const { return std::nullopt; }
  /// Vertices the estimator's base set must contain.
  virtual std::vector<Key> cross_section() const { return {root()}; }

  virtual bool tree_based() const { return false; }
  virtual bool multigraph() const { return false; }
  virtual bool edge_mode_supported() const { return true; }

  // Tree families only.
  virtual std::vector<int> word(const Key&) const { return {}; }
  virtual int branching(int /*depth*/) const { return 0; }
  /// All vertices sitting on tree vertex `word` (clique copies).
  virtual std::vector<Key> copies(const std::vector<int>& /*word*/) const { return {}; }

  // Ray families only: position along the rays.
  virtual int level(const Key& v) const { return v.front(); }

  Ball ball(int radius) const;
  Ball ball(const Key& center, int radius) const;
};

using FamilyPtr = std::shared_ptr<const Family>;

/// "double-ray", "dr-square", "strong-dr:k=3", "cartesian-dr:k=2",
/// "strong-tree:r=3,k=2", "cartesian-tree:r=3,k=2", "clique-tree:r=2,k=4",
/// "figure5:k=4,l=8", "multipath-inf:k=3". Throws InvalidParams.
FamilyPtr make_family(std::string_view spec);
bool is_family_spec(std::string_view spec);

// ---------------------------------------------------------------------------
// Ends

struct EndDescriptor {
  std::string tag;             // "left"/"right" or a branch prefix "0.1"
  std::vector<int> branch;     // tree families: prefix, continued with 0s
  int sign = 0;                // ray families: -1 left, +1 right
};

/// Ray families: both ends. Tree families: every branch prefix of the given
/// depth (default 1).
std::vector<EndDescriptor> ends(const Family& f, int prefix_depth = 1);
EndDescriptor parse_end(const Family& f, std::string_view tag);

struct EndDegreeEstimate {
  EndMode mode = EndMode::Vertex;
  std::string end;
  int base_radius = 1;
  int lower = 0;
  int upper = 0;
  bool converged = false;
  bool lower_monotone = true;
  int radius_used = 0;
  std::vector<std::pair<int, int>> history;  // (lower, upper) for each tested radius
  std::vector<std::string> separator;        // vertex mode certificate
  std::vector<std::pair<std::string, std::string>> cut;  // edge mode certificate
  std::vector<std::vector<std::string>> rays;            // disjoint path certificate
  std::optional<int> declared;
};

inline constexpr int kDefaultRMax = 20;
inline constexpr int kDefaultWindow = 3;

/// Base S = ball(r0) where r0 is the least radius >= 1 containing the
/// family's cross-section. For each radius r: lower(r) = maximum number of
/// disjoint paths from S to the direction sphere, upper(r) = minimum
/// separator between ball(floor(r/2)) and that sphere.
EndDegreeEstimate end_degree_estimate(const Family& f, const EndDescriptor& end, EndMode mode,
                                      int r_max = kDefaultRMax, int window = kDefaultWindow);

/// Piece used for radius r: the ball, or for tree families the tube around
/// the branch. Exposed for tests.
Ball estimator_view(const Family& f, const EndDescriptor& end, int r, int base_radius);
std::vector<Vertex> direction_sphere(const Family& f, const EndDescriptor& end, const Ball& view, int r);
int estimator_base_radius(const Family& f);

/// Re-applies the estimate's separator (or cut) to the view at
/// radius_used + extra and checks it still cuts ball(radius_used / 2) off the
/// direction sphere there.
bool separator_still_separates(const Family& f, const EndDescriptor& end, const EndDegreeEstimate& est,
                               int extra = 2);

// ---------------------------------------------------------------------------

struct EdgeCertificate {
  std::string u, v;
  bool certified = false;
  int cut_size = 0;
  std::vector<std::pair<std::string, std::string>> cut;
};

struct EdgeCertificationReport {
  int radius = 0, pad = 0, k = 0;
  int certified = 0;
  std::vector<EdgeCertificate> edges;
};

EdgeCertificationReport certify_essential_edges(const Family& f, int r, int pad, int k);

// ---------------------------------------------------------------------------

struct Theorem3Point {
  std::string kind;  // "vertex" or "end"
  std::string name;  // label or end tag
  int value = 0;     // degree, or end-degree upper bound
};

struct Theorem3Report {
  MinimalityClass cls{};
  int k = 0;
  int vertex_bound = 0;
  int search_radius = 0;
  std::vector<Theorem3Point> points;
  bool disjunction = false;  // at least one point
  bool count_two = false;    // at least two points
};

Theorem3Report validate_theorem3(const Family& f, int k, MinimalityClass cls, int search_radius = 4);

}  // namespace kmin
