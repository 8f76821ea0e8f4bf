// kmin command-line front end. Talks to the library only through kmin.h.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

#include "kmin/kmin.h"

namespace {

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kViolation = 3 };

int exit_for(kmin_status s) {
  switch (s) {
    case KMIN_OK: return kOk;
    case KMIN_E_PARSE: return kParse;
    case KMIN_E_CLASS_MISMATCH:
    case KMIN_E_VALIDATION_FAILED:
    case KMIN_E_NOT_CONVERGED: return kViolation;
    default: return kUsage;
  }
}

int report(kmin_status s) {
  if (s != KMIN_OK) std::cerr << "error (" << kmin_status_name(s) << "): " << kmin_last_error() << "\n";
  return exit_for(s);
}

struct Owned {
  char* p = nullptr;
  ~Owned() { kmin_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

using GraphPtr = std::unique_ptr<kmin_graph, decltype(&kmin_graph_free)>;

bool read_input(const std::string& path, std::string& out) {
  if (path.empty() || path == "-") {
    out.assign(std::istreambuf_iterator<char>(std::cin), {});
    return true;
  }
  std::ifstream in(path);
  if (!in) return false;
  out.assign(std::istreambuf_iterator<char>(in), {});
  return true;
}

int load_graph(const std::string& path, const std::string& format, GraphPtr& g) {
  std::string text;
  if (!read_input(path, text)) {
    std::cerr << "error: cannot read " << path << "\n";
    return kUsage;
  }
  kmin_graph* raw = nullptr;
  kmin_status s = kmin_graph_parse(text.c_str(), format.c_str(), &raw);
  if (s != KMIN_OK) return report(s);
  g.reset(raw);
  return kOk;
}

bool parse_range(const std::string& text, int& lo, int& hi) {
  try {
    const auto dash = text.find('-');
    if (dash == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, dash));
      hi = std::stoi(text.substr(dash + 1));
    }
  } catch (const std::exception&) {
    return false;
  }
  return lo >= 1 && hi >= lo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimally k-connected graphs: classification, witnesses, verification and infinite families"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kmin_version()));

  std::string input, format = "auto", cls = "abcd", k_text = "1-4", spec, end, mode = "vertex";
  std::string sidecar_path;
  int k = 2, radius = -1, rmax = 20, window = 3, pad = 2, r = 2, n = 7, depth = 1, count = 1;
  double p = 0.5;
  std::uint64_t seed = 0;
  bool explain = false, strict = false, exact = false;

  auto* check = app.add_subcommand("check", "Report all four minimality classes for one graph");
  check->add_option("input", input, "Graph file (default stdin)");
  check->add_option("--k", k, "Connectivity parameter")->required();
  check->add_option("--format", format, "auto, graph6, edges, json or multi");

  auto* witness = app.add_subcommand("witness", "List small-degree vertices of a graph in a class");
  witness->add_option("input", input, "Graph file (default stdin)");
  witness->add_option("--k", k, "Connectivity parameter")->required();
  witness->add_option("--class", cls, "a, b, c or d")->required();
  witness->add_option("--format", format, "auto, graph6, edges, json or multi");
  witness->add_flag("--explain", explain, "Attach procedure traces");

  auto* verify = app.add_subcommand("verify", "Check the degree bounds over a graph6 stream, CSV out");
  verify->add_option("input", input, "graph6 stream (default stdin)");
  verify->add_option("--k", k_text, "k or range lo-hi");
  verify->add_option("--class", cls, "Subset of abcd");
  verify->add_option("--summary", sidecar_path, "Write the JSON summary here instead of stderr");

  auto* construct = app.add_subcommand("construct", "Write a construction or a family truncation");
  construct->add_option("spec", spec, "e.g. band:k=3,l=2 or clique-tree:r=2,k=4")->required();
  construct->add_option("--radius", radius, "Truncation radius for infinite families");
  construct->add_option("--format", format, "graph6, edges or json");
  construct->add_option("--sidecar", sidecar_path, "Write labels/frontier JSON here");

  auto* enumerate = app.add_subcommand("enumerate", "All graphs up to isomorphism as graph6");
  enumerate->add_option("n", n, "Largest order")->required();
  enumerate->add_flag("--exact", exact, "Only order n");

  auto* random = app.add_subcommand("random", "Seeded G(n,p) samples as graph6");
  random->add_option("--n", n, "Order")->required();
  random->add_option("--p", p, "Edge probability");
  random->add_option("--count", count, "Number of samples");
  random->add_option("--seed", seed, "Seed (sample i uses seed + i)");

  auto* end_degree = app.add_subcommand("end-degree", "Estimate the vertex- or edge-degree of an end");
  end_degree->add_option("family", spec, "e.g. dr-square")->required();
  end_degree->add_option("end", end, "left, right or a branch prefix such as 0.1")->required();
  end_degree->add_option("mode", mode, "vertex or edge");
  end_degree->add_option("--rmax", rmax, "Largest radius");
  end_degree->add_option("--window", window, "Stability window");
  end_degree->add_flag("--strict", strict, "Fail when not converged");

  auto* ends = app.add_subcommand("ends", "List end tags of a family");
  ends->add_option("family", spec)->required();
  ends->add_option("--depth", depth, "Branch prefix depth for tree families");

  auto* certify = app.add_subcommand("certify-edges", "Certify that ball edges lie in k-cuts");
  certify->add_option("family", spec)->required();
  certify->add_option("--radius", r, "Ball radius");
  certify->add_option("--pad", pad, "Padding");
  certify->add_option("--k", k, "Cut size")->required();
  certify->add_flag("--strict", strict, "Fail unless every edge is certified");

  auto* validate = app.add_subcommand("validate", "Exhibit the small vertices or ends for a family");
  validate->add_option("family", spec)->required();
  validate->add_option("--k", k)->required();
  validate->add_option("--class", cls)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (check->parsed() || witness->parsed()) {
    GraphPtr g(nullptr, kmin_graph_free);
    if (int rc = load_graph(input, format, g)) return rc;
    Owned json;
    kmin_status s = check->parsed() ? kmin_check_json(g.get(), k, &json.p)
                                    : kmin_witness_json(g.get(), cls.empty() ? '?' : cls[0], k, explain, &json.p);
    if (s != KMIN_OK) return report(s);
    std::cout << json.str() << "\n";
    return kOk;
  }

  if (verify->parsed()) {
    int lo = 0, hi = 0;
    if (!parse_range(k_text, lo, hi)) {
      std::cerr << "error: bad --k range " << k_text << "\n";
      return kUsage;
    }
    kmin_verifier* raw = nullptr;
    if (kmin_status s = kmin_verifier_new(cls.c_str(), lo, hi, &raw); s != KMIN_OK) return report(s);
    std::unique_ptr<kmin_verifier, decltype(&kmin_verifier_free)> v(raw, kmin_verifier_free);

    std::ifstream file;
    if (!input.empty() && input != "-") {
      file.open(input);
      if (!file) {
        std::cerr << "error: cannot read " << input << "\n";
        return kUsage;
      }
    }
    std::istream& in = file.is_open() ? file : std::cin;
    Owned header;
    kmin_verify_csv_header(&header.p);
    std::cout << header.str();
    std::string line;
    long line_no = 0;
    int rc = kOk;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#' || line.rfind(">>graph6<<", 0) == 0) continue;
      Owned rows;
      int violations = 0;
      kmin_status s = kmin_verifier_feed(v.get(), line.c_str(), &rows.p, &violations);
      if (s == KMIN_E_PARSE) {
        std::cerr << "warning: line " << line_no << " skipped: " << kmin_last_error() << "\n";
        continue;
      }
      if (s != KMIN_OK) return report(s);
      std::cout << rows.str();
      if (violations) {
        std::cerr << "violation at line " << line_no << " (" << line << "):\n" << rows.str();
        rc = kViolation;
        break;
      }
    }
    Owned summary;
    kmin_verifier_summary_json(v.get(), &summary.p);
    if (sidecar_path.empty()) {
      std::cerr << summary.str() << "\n";
    } else {
      std::ofstream(sidecar_path) << summary.str() << "\n";
    }
    return rc;
  }

  if (construct->parsed()) {
    Owned graph, side;
    const std::string fmt = format == "auto" ? "edges" : format;
    kmin_status s = kmin_construct(spec.c_str(), radius, fmt.c_str(), &graph.p, &side.p);
    if (s != KMIN_OK) return report(s);
    std::cout << graph.str();
    if (!sidecar_path.empty()) std::ofstream(sidecar_path) << side.str() << "\n";
    return kOk;
  }

  if (enumerate->parsed()) {
    Owned lines;
    if (kmin_status s = kmin_enumerate(n, exact, &lines.p); s != KMIN_OK) return report(s);
    std::cout << lines.str();
    return kOk;
  }

  if (random->parsed()) {
    for (int i = 0; i < count; ++i) {
      Owned g6;
      if (kmin_status s = kmin_random_graph6(n, p, seed + static_cast<std::uint64_t>(i), &g6.p); s != KMIN_OK)
        return report(s);
      std::cout << g6.str() << "\n";
    }
    return kOk;
  }

  if (end_degree->parsed()) {
    Owned json;
    int converged = 0, mismatch = 0;
    kmin_status s =
        kmin_end_degree_json(spec.c_str(), end.c_str(), mode.c_str(), rmax, window, &json.p, &converged, &mismatch);
    if (s != KMIN_OK) return report(s);
    std::cout << json.str() << "\n";
    if (mismatch) {
      std::cerr << "error: converged value differs from the family's declared end degree\n";
      return kViolation;
    }
    if (!converged && strict) {
      std::cerr << "error: estimate did not converge within r_max = " << rmax << "\n";
      return kViolation;
    }
    return kOk;
  }

  if (ends->parsed()) {
    Owned json;
    if (kmin_status s = kmin_family_ends_json(spec.c_str(), depth, &json.p); s != KMIN_OK) return report(s);
    std::cout << json.str() << "\n";
    return kOk;
  }

  if (certify->parsed()) {
    Owned json;
    int all = 0;
    if (kmin_status s = kmin_certify_edges_json(spec.c_str(), r, pad, k, &json.p, &all); s != KMIN_OK)
      return report(s);
    std::cout << json.str() << "\n";
    return (!all && strict) ? kViolation : kOk;
  }

  if (validate->parsed()) {
    Owned json;
    if (kmin_status s = kmin_validate_json(spec.c_str(), k, cls.empty() ? '?' : cls[0], &json.p); s != KMIN_OK)
      return report(s);
    std::cout << json.str() << "\n";
    return kOk;
  }
  return kUsage;
}
