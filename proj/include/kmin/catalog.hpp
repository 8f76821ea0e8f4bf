#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kmin/families.hpp"
#include "kmin/graph.hpp"

namespace kmin {

/// "name:key=value,key=value" with integer values.
struct ParamSpec {
  std::string name;
  std::map<std::string, int> params;

  /// Throws InvalidParams when missing.
  int get(const std::string& key) const;
  int get_or(const std::string& key, int fallback) const;
  /// Throws InvalidParams on any key outside `allowed`.
  void only(std::initializer_list<const char*> allowed) const;
};

ParamSpec parse_param_spec(std::string_view text);

/// Finite constructions: "complete:n=5", "cycle:n=6", "path:n=4", "petersen",
/// "ladder:m=5", "band:k=3,l=2", "strong-cycle:k=4,l=6",
/// "strong-cycle-odd:k=3,l=5", "path-square:l=12", "multipath:k=3,m=5".
struct Construction {
  std::string name;
  std::optional<LabeledGraph> graph;
  std::optional<MultiGraph> multigraph;
  /// Classes the construction is stated to belong to.
  std::vector<DeclaredClass> declared;
};

Construction build_construction(std::string_view spec);
bool is_construction_spec(std::string_view spec);

}  // namespace kmin
