#include "kmin/kmin.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "kmin/catalog.hpp"
#include "kmin/connectivity.hpp"
#include "kmin/enumerate.hpp"
#include "kmin/error.hpp"
#include "kmin/families.hpp"
#include "kmin/io.hpp"
#include "kmin/report.hpp"

struct kmin_graph {
  std::optional<kmin::LabeledGraph> simple;
  std::optional<kmin::MultiGraph> multi;
};

struct kmin_verifier {
  kmin::Verifier verifier;
};

namespace {

thread_local std::string last_error;

kmin_status status_of(kmin::ErrorCode code) {
  return static_cast<kmin_status>(static_cast<int>(code) + 1);
}

struct Unsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
kmin_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return KMIN_OK;
  } catch (const Unsupported& e) {
    last_error = e.what();
    return KMIN_E_UNSUPPORTED;
  } catch (const kmin::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return KMIN_E_TOO_LARGE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return KMIN_E_INTERNAL;
  }
}

#define KMIN_REQUIRE(ptr)                                \
  do {                                                   \
    if (!(ptr)) {                                        \
      last_error = "null pointer argument: " #ptr;       \
      return KMIN_E_NULL_POINTER;                        \
    }                                                    \
  } while (0)

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bool looks_like_multigraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int seen = 0;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string tok;
    int count = 0;
    while (fields >> tok) ++count;
    if (count == 0) continue;
    if (++seen == 2) return count == 3;
    if (count != 2) return false;
  }
  return false;
}

kmin::MinimalityClass class_of(char c) { return kmin::parse_class(std::string_view(&c, 1)); }

}  // namespace

extern "C" {

const char* kmin_version(void) { return "1.0.0"; }

const char* kmin_status_name(kmin_status status) {
  switch (status) {
    case KMIN_OK: return "OK";
    case KMIN_E_NULL_POINTER: return "NullPointer";
    case KMIN_E_UNSUPPORTED: return "Unsupported";
    default: break;
  }
  const int code = static_cast<int>(status) - 1;
  if (code < 0 || code > static_cast<int>(kmin::ErrorCode::Internal)) return "Unknown";
  return kmin::to_string(static_cast<kmin::ErrorCode>(code));
}

const char* kmin_last_error(void) { return last_error.c_str(); }

void kmin_string_free(char* s) { std::free(s); }

kmin_status kmin_graph_parse(const char* text, const char* format, kmin_graph** out) {
  KMIN_REQUIRE(text);
  KMIN_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    const std::string_view fmt = format ? format : "auto";
    auto g = std::make_unique<kmin_graph>();
    if (fmt == "multi" || (fmt == "auto" && looks_like_multigraph(text)))
      g->multi = kmin::parse_multi_edge_list(text);
    else
      g->simple = kmin::parse_graph(text, kmin::parse_format(fmt));
    *out = g.release();
  });
}

kmin_status kmin_graph_from_edges(int n, const int* pairs, int m, kmin_graph** out) {
  KMIN_REQUIRE(out);
  if (m > 0) KMIN_REQUIRE(pairs);
  *out = nullptr;
  return guarded([&] {
    if (n < 0 || m < 0) kmin::fail(kmin::ErrorCode::InvalidArgument, "negative size");
    std::vector<kmin::Edge> edges;
    for (int i = 0; i < m; ++i) {
      if (pairs[2 * i] == pairs[2 * i + 1]) kmin::fail(kmin::ErrorCode::InvalidArgument, "loop");
      edges.push_back(kmin::Edge::of(pairs[2 * i], pairs[2 * i + 1]));
    }
    auto g = std::make_unique<kmin_graph>();
    kmin::LabeledGraph lg{kmin::Graph(n, edges), {}};
    for (int v = 0; v < n; ++v) lg.labels.push_back(std::to_string(v));
    g->simple = std::move(lg);
    *out = g.release();
  });
}

void kmin_graph_free(kmin_graph* g) { delete g; }

kmin_status kmin_graph_order(const kmin_graph* g, int* out) {
  KMIN_REQUIRE(g);
  KMIN_REQUIRE(out);
  *out = g->simple ? g->simple->graph.order() : g->multi->order();
  return KMIN_OK;
}

kmin_status kmin_graph_is_multigraph(const kmin_graph* g, int* out) {
  KMIN_REQUIRE(g);
  KMIN_REQUIRE(out);
  *out = g->multi.has_value();
  return KMIN_OK;
}

kmin_status kmin_graph_to_graph6(const kmin_graph* g, char** out) {
  KMIN_REQUIRE(g);
  KMIN_REQUIRE(out);
  if (g->multi) {
    last_error = "graph6 cannot encode multiplicities";
    return KMIN_E_UNSUPPORTED;
  }
  return guarded([&] { *out = dup(kmin::to_graph6(g->simple->graph)); });
}

kmin_status kmin_vertex_connectivity(const kmin_graph* g, int* out) {
  KMIN_REQUIRE(g);
  KMIN_REQUIRE(out);
  return guarded([&] {
    *out = kmin::vertex_connectivity(g->simple ? g->simple->graph : g->multi->simple());
  });
}

kmin_status kmin_edge_connectivity(const kmin_graph* g, int* out) {
  KMIN_REQUIRE(g);
  KMIN_REQUIRE(out);
  return guarded([&] {
    *out = g->simple ? kmin::edge_connectivity(g->simple->graph) : kmin::edge_connectivity(*g->multi);
  });
}

kmin_status kmin_in_class(const kmin_graph* g, char cls, int k, int* out) {
  KMIN_REQUIRE(g);
  KMIN_REQUIRE(out);
  return guarded([&] {
    const kmin::MinimalityClass c = class_of(cls);
    if (g->simple) {
      *out = kmin::check_class(g->simple->graph, c, k).holds;
    } else if (c == kmin::MinimalityClass::EdgeMinKEdgeConn) {
      *out = kmin::is_edge_min_k_edge_connected(*g->multi, k).holds;
    } else if (c == kmin::MinimalityClass::VertexMinKEdgeConn) {
      *out = kmin::is_vertex_min_k_edge_connected(*g->multi, k).holds;
    } else {
      throw Unsupported("classes a and b are defined for simple graphs only");
    }
  });
}

kmin_status kmin_check_json(const kmin_graph* g, int k, char** json) {
  KMIN_REQUIRE(g);
  KMIN_REQUIRE(json);
  return guarded([&] {
    *json = dup(g->simple ? kmin::classification_json(*g->simple, k) : kmin::classification_json(*g->multi, k));
  });
}

kmin_status kmin_witness_json(const kmin_graph* g, char cls, int k, int explain, char** json) {
  KMIN_REQUIRE(g);
  KMIN_REQUIRE(json);
  return guarded([&] {
    const kmin::MinimalityClass c = class_of(cls);
    if (g->simple) {
      *json = dup(kmin::witness_json(*g->simple, c, k, explain != 0));
    } else {
      if (c != kmin::MinimalityClass::EdgeMinKEdgeConn)
        throw Unsupported("multigraph witnesses are available for class c only");
      *json = dup(kmin::witness_json(*g->multi, k, explain != 0));
    }
  });
}

kmin_status kmin_verify_csv_header(char** out) {
  KMIN_REQUIRE(out);
  return guarded([&] { *out = dup(kmin::verification_csv_header()); });
}

kmin_status kmin_verifier_new(const char* classes, int k_min, int k_max, kmin_verifier** out) {
  KMIN_REQUIRE(classes);
  KMIN_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    std::vector<kmin::MinimalityClass> selected;
    for (const char* p = classes; *p; ++p)
      if (*p != ',') selected.push_back(class_of(*p));
    *out = new kmin_verifier{kmin::Verifier(selected, k_min, k_max)};
  });
}

void kmin_verifier_free(kmin_verifier* v) { delete v; }

kmin_status kmin_verifier_feed(kmin_verifier* v, const char* graph6, char** csv_rows, int* violations) {
  KMIN_REQUIRE(v);
  KMIN_REQUIRE(graph6);
  KMIN_REQUIRE(csv_rows);
  KMIN_REQUIRE(violations);
  *csv_rows = nullptr;
  *violations = 0;
  return guarded([&] {
    std::string text;
    for (const kmin::VerificationRow& row : v->verifier.feed(graph6)) {
      text += kmin::to_csv(row);
      *violations += !row.satisfied;
    }
    *csv_rows = dup(text);
  });
}

kmin_status kmin_verifier_summary_json(const kmin_verifier* v, char** json) {
  KMIN_REQUIRE(v);
  KMIN_REQUIRE(json);
  return guarded([&] { *json = dup(kmin::summary_json(v->verifier.summary())); });
}

kmin_status kmin_enumerate(int max_n, int exact, char** graph6_lines) {
  KMIN_REQUIRE(graph6_lines);
  return guarded([&] {
    if (max_n < 1 || max_n > kmin::kMaxEnumerationOrder)
      kmin::fail(kmin::ErrorCode::InvalidParams,
                 "enumeration order must be in 1.." + std::to_string(kmin::kMaxEnumerationOrder));
    std::string text;
    auto emit = [&](const kmin::Graph& g) { text += kmin::to_graph6(g) + "\n"; };
    if (exact)
      for (const kmin::Graph& g : kmin::nonisomorphic_graphs(max_n)) emit(g);
    else
      kmin::for_each_graph(max_n, emit);
    *graph6_lines = dup(text);
  });
}

kmin_status kmin_random_graph6(int n, double p, uint64_t seed, char** out) {
  KMIN_REQUIRE(out);
  return guarded([&] {
    if (n < 1 || p < 0.0 || p > 1.0) kmin::fail(kmin::ErrorCode::InvalidParams, "need n >= 1 and 0 <= p <= 1");
    *out = dup(kmin::to_graph6(kmin::random_graph(n, p, seed)));
  });
}

kmin_status kmin_construct(const char* spec, int radius, const char* format, char** graph, char** sidecar) {
  KMIN_REQUIRE(spec);
  KMIN_REQUIRE(graph);
  *graph = nullptr;
  if (sidecar) *sidecar = nullptr;
  return guarded([&] {
    using Json = nlohmann::ordered_json;
    const std::string_view fmt = format ? format : "edges";
    if (fmt != "graph6" && fmt != "g6" && fmt != "edges" && fmt != "json")
      kmin::fail(kmin::ErrorCode::InvalidParams, "construct formats are graph6, edges and json");
    auto render = [&](const kmin::LabeledGraph& g) -> std::string {
      if (fmt == "graph6" || fmt == "g6") return kmin::to_graph6(g.graph) + "\n";
      if (fmt == "json") return kmin::to_json(g) + "\n";
      return kmin::to_edge_list(g.graph);
    };
    auto render_multi = [&](const kmin::MultiGraph& g) -> std::string {
      if (fmt != "edges") kmin::fail(kmin::ErrorCode::InvalidParams, "multigraphs are written as edge lists");
      return kmin::to_multi_edge_list(g);
    };

    std::string out, side;
    if (kmin::is_family_spec(spec)) {
      if (radius < 0) kmin::fail(kmin::ErrorCode::InvalidParams, "family truncations need a radius >= 0");
      kmin::FamilyPtr f = kmin::make_family(spec);
      const kmin::Ball b = f->ball(radius);
      out = f->multigraph() ? render_multi(b.multigraph()) : render({b.graph, b.labels});
      side = kmin::ball_sidecar_json(*f, b, radius);
    } else {
      const kmin::Construction c = kmin::build_construction(spec);
      Json declared = Json::array();
      for (const kmin::DeclaredClass& d : c.declared)
        declared.push_back(Json{{"class", std::string(1, kmin::class_letter(d.cls))}, {"k", d.k}});
      Json j{{"construction", c.name}, {"declared", declared}};
      if (c.graph) {
        out = render(*c.graph);
        j["labels"] = c.graph->labels;
      } else {
        out = render_multi(*c.multigraph);
      }
      side = j.dump(2);
    }
    *graph = dup(out);
    if (sidecar) *sidecar = dup(side);
  });
}

kmin_status kmin_end_degree_json(const char* family, const char* end, const char* mode, int r_max, int window,
                                 char** json, int* converged, int* mismatch) {
  KMIN_REQUIRE(family);
  KMIN_REQUIRE(end);
  KMIN_REQUIRE(mode);
  KMIN_REQUIRE(json);
  return guarded([&] {
    kmin::FamilyPtr f = kmin::make_family(family);
    const kmin::EndMode m = kmin::parse_end_mode(mode);
    if (m == kmin::EndMode::Edge && !f->edge_mode_supported())
      throw Unsupported(f->name() + ": edge-degree estimation is not supported on this family");
    const kmin::EndDegreeEstimate est = kmin::end_degree_estimate(*f, kmin::parse_end(*f, end), m, r_max, window);
    *json = dup(kmin::end_degree_json(*f, est, r_max, window));
    if (converged) *converged = est.converged;
    if (mismatch) *mismatch = est.converged && est.declared && *est.declared != est.upper;
  });
}

kmin_status kmin_family_ends_json(const char* family, int prefix_depth, char** json) {
  KMIN_REQUIRE(family);
  KMIN_REQUIRE(json);
  return guarded([&] {
    kmin::FamilyPtr f = kmin::make_family(family);
    nlohmann::ordered_json tags = nlohmann::ordered_json::array();
    for (const kmin::EndDescriptor& e : kmin::ends(*f, prefix_depth)) tags.push_back(e.tag);
    *json = dup(nlohmann::ordered_json{{"family", f->name()}, {"ends", tags}}.dump(2));
  });
}

kmin_status kmin_certify_edges_json(const char* family, int r, int pad, int k, char** json, int* all_certified) {
  KMIN_REQUIRE(family);
  KMIN_REQUIRE(json);
  return guarded([&] {
    kmin::FamilyPtr f = kmin::make_family(family);
    const kmin::EdgeCertificationReport rep = kmin::certify_essential_edges(*f, r, pad, k);
    *json = dup(kmin::certification_json(*f, rep));
    if (all_certified) *all_certified = rep.certified == static_cast<int>(rep.edges.size());
  });
}

kmin_status kmin_validate_json(const char* family, int k, char cls, char** json) {
  KMIN_REQUIRE(family);
  KMIN_REQUIRE(json);
  return guarded([&] {
    kmin::FamilyPtr f = kmin::make_family(family);
    *json = dup(kmin::theorem3_json(*f, kmin::validate_theorem3(*f, k, class_of(cls))));
  });
}

}  // extern "C"
