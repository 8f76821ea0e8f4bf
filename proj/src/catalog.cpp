#include "kmin/catalog.hpp"

#include <algorithm>
#include <charconv>

#include "kmin/constructions.hpp"
#include "kmin/error.hpp"

namespace kmin {

int ParamSpec::get(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) fail(ErrorCode::InvalidParams, name + " needs parameter " + key);
  return it->second;
}

int ParamSpec::get_or(const std::string& key, int fallback) const {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

void ParamSpec::only(std::initializer_list<const char*> allowed) const {
  for (const auto& [key, value] : params)
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
      fail(ErrorCode::InvalidParams, name + " has no parameter " + key);
}

ParamSpec parse_param_spec(std::string_view text) {
  ParamSpec spec;
  const auto colon = text.find(':');
  spec.name = std::string(text.substr(0, colon));
  if (spec.name.empty()) fail(ErrorCode::InvalidParams, "empty construction name");
  if (colon == std::string_view::npos) return spec;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos)
      fail(ErrorCode::InvalidParams, "expected key=value in '" + std::string(item) + "'");
    int value = 0;
    std::string_view num = item.substr(eq + 1);
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
    if (num.empty() || ec != std::errc{} || ptr != num.data() + num.size())
      fail(ErrorCode::InvalidParams, "bad integer in '" + std::string(item) + "'");
    spec.params[std::string(item.substr(0, eq))] = value;
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
  }
  return spec;
}

namespace {

LabeledGraph numbered(Graph g) {
  LabeledGraph out{std::move(g), {}};
  for (Vertex v = 0; v < out.graph.order(); ++v) out.labels.push_back(std::to_string(v));
  return out;
}

std::vector<DeclaredClass> all_classes(int k) {
  std::vector<DeclaredClass> out;
  for (MinimalityClass c : kAllClasses) out.push_back({c, k});
  return out;
}

constexpr const char* kNames[] = {"complete", "cycle",        "path",             "petersen",    "ladder",
                                  "band",     "strong-cycle", "strong-cycle-odd", "path-square", "multipath"};

}  // namespace

bool is_construction_spec(std::string_view spec) {
  const std::string_view name = spec.substr(0, spec.find(':'));
  return std::find(std::begin(kNames), std::end(kNames), name) != std::end(kNames);
}

Construction build_construction(std::string_view text) {
  const ParamSpec s = parse_param_spec(text);
  Construction c;
  c.name = std::string(text);
  if (s.name == "complete") {
    s.only({"n"});
    const int n = s.get("n");
    if (n < 1) fail(ErrorCode::InvalidParams, "complete needs n >= 1");
    c.graph = numbered(complete_graph(n));
    if (n >= 2) c.declared = all_classes(n - 1);
  } else if (s.name == "cycle") {
    s.only({"n"});
    c.graph = numbered(cycle_graph(s.get("n")));
    c.declared = all_classes(2);
  } else if (s.name == "path") {
    s.only({"n"});
    const int n = s.get("n");
    c.graph = numbered(path_graph(n));
    if (n >= 2) c.declared = {{MinimalityClass::EdgeMinKConn, 1}, {MinimalityClass::EdgeMinKEdgeConn, 1}};
  } else if (s.name == "petersen") {
    s.only({});
    c.graph = numbered(petersen_graph());
    c.declared = all_classes(3);
  } else if (s.name == "ladder") {
    s.only({"m"});
    c.graph = ladder(s.get("m"));
  } else if (s.name == "band") {
    s.only({"k", "l"});
    const int k = s.get("k");
    c.graph = band_graph(k, s.get("l"));
    c.declared = {{MinimalityClass::VertexMinKConn, k}, {MinimalityClass::VertexMinKEdgeConn, k}};
  } else if (s.name == "strong-cycle") {
    s.only({"k", "l"});
    const int k = s.get("k");
    c.graph = strong_cycle(k, s.get("l"));
    c.declared = {{MinimalityClass::VertexMinKConn, k}};
  } else if (s.name == "strong-cycle-odd") {
    s.only({"k", "l", "copy", "a", "b"});
    c.graph = strong_cycle_odd(s.get("k"), s.get("l"), s.get_or("copy", 0), s.get_or("a", 0), s.get_or("b", 0));
  } else if (s.name == "path-square") {
    s.only({"l"});
    c.graph = path_square_example(s.get("l"));
    c.declared = {{MinimalityClass::EdgeMinKEdgeConn, 3}};
  } else if (s.name == "multipath") {
    s.only({"k", "m"});
    const int k = s.get("k");
    c.multigraph = multipath(k, s.get("m"));
    c.declared = {{MinimalityClass::EdgeMinKEdgeConn, k}};
  } else {
    fail(ErrorCode::InvalidParams, "unknown construction '" + s.name + "'");
  }
  return c;
}

}  // namespace kmin
