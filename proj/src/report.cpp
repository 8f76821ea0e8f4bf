#include "kmin/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "kmin/error.hpp"
#include "kmin/io.hpp"

namespace kmin {

using Json = nlohmann::ordered_json;

namespace {

Json edge_json(Edge e) { return Json::array({e.u, e.v}); }

Json edges_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (Edge e : edges) out.push_back(edge_json(e));
  return out;
}

Json certificate_json(const Certificate& c) {
  Json j{{"kind", to_string(c.kind)}, {"value", c.value}};
  if (c.edge) j["edge"] = edge_json(*c.edge);
  if (c.vertex) j["vertex"] = *c.vertex;
  return j;
}

Json result_json(const MinimalityResult& r) {
  Json j{{"class", std::string(1, class_letter(r.cls))}, {"name", class_name(r.cls)}, {"k", r.k},
         {"holds", r.holds}, {"base", r.base}};
  if (!r.holds) j["certificate"] = certificate_json(r.certificate);
  return j;
}

Json witness_entries(const std::vector<WitnessEntry>& ws, const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (const WitnessEntry& w : ws) {
    Json j{{"vertex", w.vertex}, {"degree", w.degree}};
    if (!labels.empty()) j["label"] = labels[w.vertex];
    out.push_back(j);
  }
  return out;
}

Json report_json(const WitnessReport& r, const std::vector<std::string>& labels) {
  Json j{{"class", std::string(1, class_letter(r.cls))},
         {"k", r.k},
         {"order", r.order},
         {"degree_bound", r.bound},
         {"required", r.required},
         {"in_scope", r.in_scope},
         {"satisfied", r.satisfied},
         {"ratio", r.ratio}};
  if (r.cls == MinimalityClass::EdgeMinKConn) j["min_degree_is_k"] = r.min_degree_is_k;
  j["witnesses"] = witness_entries(r.witnesses, labels);
  return j;
}

Json lemma5(const Lemma5Trace& t) {
  Json quadrants;
  const char* names[2][2] = {{"C1D1", "C1D2"}, {"C2D1", "C2D2"}};
  Json sides;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      quadrants[names[i][j]] = t.quadrant[i][j];
      sides[names[i][j]] = t.side[i][j];
    }
  return Json{{"lemma", "5"},
              {"k", t.k},
              {"initial_H", t.initial_H},
              {"shrink_steps", t.shrink_steps},
              {"minimality", t.minimality},
              {"H", t.H},
              {"T", t.T},
              {"C1", t.C1},
              {"C2", t.C2},
              {"x", t.x},
              {"Tprime", t.T_prime},
              {"Tstar", t.T_star},
              {"D1", t.D1},
              {"D2", t.D2},
              {"quadrants", quadrants},
              {"sides", sides},
              {"X_name", t.X_name},
              {"X", t.X},
              {"witness", t.witness},
              {"degree", t.degree},
              {"bound", t.bound},
              {"witness_in_H", t.witness_in_H}};
}

Json region_json(const MinimalRegion& m) {
  return Json{{"vertices", m.region.vertices},
              {"edge_boundary", edges_json(m.region.edge_boundary)},
              {"boundary_weight", m.boundary_weight},
              {"method", m.method}};
}

Json theorem4c(const Theorem4cResult& r) {
  Json sides = Json::array();
  for (const Theorem4cSide& s : r.sides)
    sides.push_back(Json{{"D", s.D}, {"H", region_json(s.H)}, {"witness", s.witness}, {"degree", s.degree}});
  return Json{{"procedure", "min-cut regions"},
              {"k", r.k},
              {"cut", Json{{"edges", edges_json(r.cut.edges)}, {"weight", r.cut.weight}}},
              {"sides", sides}};
}

Json lemma8(const Lemma8Trace& t) {
  Json steps = Json::array();
  for (const Lemma8Step& s : t.steps) {
    Json j{{"action", s.action}, {"C", s.C}, {"x", s.x}};
    if (s.y >= 0) j["y"] = s.y;
    if (!s.F.empty()) j["F"] = edges_json(s.F);
    steps.push_back(j);
  }
  return Json{{"lemma", "8"},
              {"k", t.k},
              {"steps", steps},
              {"C", t.C},
              {"x", t.x},
              {"lambda_minus_x", t.lambda_minus_x},
              {"boundary", edges_json(t.boundary)},
              {"lemma7", Json{{"S_vertices", t.lemma7.S.vertices},
                              {"S_edges", edges_json(t.lemma7.S.edges)},
                              {"component", t.lemma7.component},
                              {"witness", t.lemma7.witness},
                              {"degree", t.lemma7.degree}}},
              {"witness", t.witness},
              {"degree", t.degree}};
}

std::vector<std::string> nontrivial_labels(const LabeledGraph& g) {
  for (Vertex v = 0; v < g.graph.order(); ++v)
    if (v < static_cast<int>(g.labels.size()) && g.labels[v] != std::to_string(v)) return g.labels;
  return {};
}

}  // namespace

std::string classification_json(const LabeledGraph& g, int k) {
  const ClassificationReport rep = classify(g.graph, k, to_graph6(g.graph));
  Json classes = Json::object();
  for (const MinimalityResult& r : rep.results) classes[class_name(r.cls)] = result_json(r);
  return Json{{"graph", rep.graph_id}, {"n", g.graph.order()}, {"m", g.graph.size()}, {"k", k}, {"classes", classes}}
      .dump(2);
}

std::string classification_json(const MultiGraph& g, int k) {
  Json classes = Json::object();
  classes[class_name(MinimalityClass::EdgeMinKEdgeConn)] = result_json(is_edge_min_k_edge_connected(g, k));
  classes[class_name(MinimalityClass::VertexMinKEdgeConn)] = result_json(is_vertex_min_k_edge_connected(g, k));
  return Json{{"graph", "multigraph"}, {"n", g.order()}, {"m", g.total_multiplicity()}, {"k", k}, {"classes", classes}}
      .dump(2);
}

std::string witness_json(const LabeledGraph& g, MinimalityClass c, int k, bool explain) {
  const WitnessReport rep = theorem2_witness_report(g.graph, c, k, true);
  Json j{{"graph", to_graph6(g.graph)}};
  j.update(report_json(rep, nontrivial_labels(g)));
  if (explain) {
    Json traces = Json::array();
    if (c == MinimalityClass::VertexMinKConn && k >= 2) {
      if (auto h = find_profound_k_region(g.graph, k)) traces.push_back(lemma5(lemma5_witness(g.graph, *h, k, false)));
    } else if (c == MinimalityClass::EdgeMinKEdgeConn && k >= 2) {
      traces.push_back(theorem4c(theorem4c_witness(g.graph, k, false)));
    } else if (c == MinimalityClass::VertexMinKEdgeConn && k >= 2 && g.graph.order() >= 3) {
      for (const Lemma8Trace& t : lemma8_two_witnesses(g.graph, k, false)) traces.push_back(lemma8(t));
    }
    j["traces"] = traces;
  }
  return j.dump(2);
}

std::string witness_json(const MultiGraph& g, int k, bool explain) {
  const MinimalityResult check = is_edge_min_k_edge_connected(g, k);
  if (!check.holds)
    fail(ErrorCode::ClassMismatch, "multigraph is not in class c for k = " + std::to_string(k));
  WitnessReport r;
  r.cls = MinimalityClass::EdgeMinKEdgeConn;
  r.k = k;
  r.order = g.order();
  r.bound = k;
  r.required = std::min(2, g.order());
  for (Vertex v : small_degree_set(g, k)) r.witnesses.push_back({v, g.degree(v)});
  r.satisfied = static_cast<int>(r.witnesses.size()) >= r.required;
  r.ratio = g.order() ? static_cast<double>(r.witnesses.size()) / g.order() : 0.0;
  Json j = report_json(r, {});
  if (explain && k >= 2) j["traces"] = Json::array({theorem4c(theorem4c_witness(g, k, false))});
  return j.dump(2);
}

std::string lemma5_json(const Lemma5Trace& t) { return lemma5(t).dump(2); }

std::string end_degree_json(const Family& f, const EndDegreeEstimate& est, int r_max, int window) {
  Json history = Json::array();
  for (auto [lo, up] : est.history) history.push_back(Json::array({lo, up}));
  Json cut = Json::array();
  for (const auto& [a, b] : est.cut) cut.push_back(Json::array({a, b}));
  Json j{{"family", f.name()},
         {"end", est.end},
         {"mode", to_string(est.mode)},
         {"lower", est.lower},
         {"upper", est.upper},
         {"converged", est.converged},
         {"radius_used", est.radius_used},
         {"base_radius", est.base_radius},
         {"r_max", r_max},
         {"window", window},
         {"history", history},
         {"status", est.declared ? "declared" : "empirical"}};
  if (est.declared) {
    j["declared"] = *est.declared;
    j["matches_declared"] = !est.converged || *est.declared == est.upper;
  }
  if (est.mode == EndMode::Vertex)
    j["separator_certificate"] = est.separator;
  else
    j["separator_certificate"] = cut;
  j["rays_certificate"] = est.rays;
  return j.dump(2);
}

std::string certification_json(const Family& f, const EdgeCertificationReport& rep) {
  Json edges = Json::array();
  for (const EdgeCertificate& e : rep.edges) {
    Json cut = Json::array();
    for (const auto& [a, b] : e.cut) cut.push_back(Json::array({a, b}));
    edges.push_back(Json{{"edge", Json::array({e.u, e.v})},
                         {"status", e.certified ? "certified" : "undecided"},
                         {"cut_size", e.cut_size},
                         {"cut", cut}});
  }
  return Json{{"family", f.name()},
              {"radius", rep.radius},
              {"pad", rep.pad},
              {"k", rep.k},
              {"edges_total", rep.edges.size()},
              {"certified", rep.certified},
              {"edges", edges}}
      .dump(2);
}

std::string theorem3_json(const Family& f, const Theorem3Report& rep) {
  Json points = Json::array();
  for (const Theorem3Point& p : rep.points) points.push_back(Json{{"kind", p.kind}, {"name", p.name}, {"value", p.value}});
  return Json{{"family", f.name()},
              {"class", std::string(1, class_letter(rep.cls))},
              {"k", rep.k},
              {"vertex_bound", rep.vertex_bound},
              {"search_radius", rep.search_radius},
              {"disjunction", rep.disjunction},
              {"count_two", rep.count_two},
              {"points", points}}
      .dump(2);
}

std::string ball_sidecar_json(const Family& f, const Ball& b, int radius) {
  std::vector<int> frontier;
  for (Vertex v = 0; v < b.graph.order(); ++v)
    if (b.frontier[v]) frontier.push_back(v);
  Json j{{"family", f.name()}, {"radius", radius}, {"labels", b.labels}, {"distance", b.distance},
         {"frontier", frontier}};
  if (f.multigraph()) j["multiplicity"] = b.multiplicity;
  return j.dump(2);
}

// ---------------------------------------------------------------------------

std::string verification_csv_header() {
  return std::string("# ") + kVerifySchema + "\ngraph6,n,k,class,v_k,v_bound,min_degree,required,in_scope,satisfied,witnesses\n";
}

std::string to_csv(const VerificationRow& r) {
  std::ostringstream out;
  out << r.graph6 << ',' << r.n << ',' << r.k << ',' << class_letter(r.cls) << ',' << r.v_k << ',' << r.v_bound
      << ',' << r.min_degree << ',' << r.required << ',' << (r.in_scope ? "true" : "false") << ',' << (r.satisfied ? "true" : "false") << ',';
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) out << (i ? ";" : "") << r.witnesses[i];
  out << '\n';
  return out.str();
}

std::string summary_json(const VerificationSummary& s) {
  Json counts = Json::object(), ratios = Json::object();
  for (const auto& [c, per_k] : s.counts)
    for (const auto& [k, n] : per_k) counts[std::string(1, c)][std::to_string(k)] = n;
  for (const auto& [c, per_k] : s.min_ratio)
    for (const auto& [k, x] : per_k) ratios[std::string(1, c)][std::to_string(k)] = x;
  return Json{{"schema", kVerifySchema},
              {"graphs", s.graphs},
              {"skipped", s.skipped},
              {"rows", s.rows},
              {"violations", s.violations},
              {"counts", counts},
              {"min_ratio", ratios}}
      .dump(2);
}

Verifier::Verifier(std::vector<MinimalityClass> classes, int k_min, int k_max)
    : classes_(std::move(classes)), k_min_(k_min), k_max_(k_max) {
  if (k_min < 1 || k_max < k_min) fail(ErrorCode::InvalidArgument, "bad k range");
  if (classes_.empty()) fail(ErrorCode::InvalidArgument, "no classes selected");
}

std::vector<VerificationRow> Verifier::feed(const std::string& line) {
  Graph g;
  try {
    g = from_graph6(line);
  } catch (const Error&) {
    ++summary_.skipped;
    throw;
  }
  ++summary_.graphs;
  std::vector<VerificationRow> rows;
  if (g.order() < 2 || !g.is_connected()) return rows;
  const MinimalityProfile profile = minimality_profile(g);
  for (int k = k_min_; k <= k_max_; ++k)
    for (MinimalityClass c : classes_) {
      if (!profile.in_class(c, k)) continue;
      const WitnessReport rep = theorem2_witness_report(g, c, k, false);
      VerificationRow row;
      row.graph6 = line;
      row.n = g.order();
      row.k = k;
      row.cls = c;
      row.v_k = static_cast<int>(small_degree_set(g, k).size());
      row.v_bound = static_cast<int>(rep.witnesses.size());
      row.min_degree = g.min_degree();
      row.required = rep.required;
      row.in_scope = rep.in_scope;
      row.satisfied = !rep.in_scope || (rep.satisfied && rep.min_degree_is_k);
      for (const WitnessEntry& w : rep.witnesses) row.witnesses.push_back(w.vertex);

      const char letter = class_letter(c);
      ++summary_.counts[letter][k];
      auto [it, fresh] = summary_.min_ratio[letter].emplace(k, rep.ratio);
      if (!fresh) it->second = std::min(it->second, rep.ratio);
      ++summary_.rows;
      if (!row.satisfied) ++summary_.violations;
      rows.push_back(std::move(row));
    }
  return rows;
}

}  // namespace kmin
