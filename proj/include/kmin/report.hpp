#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "kmin/families.hpp"
#include "kmin/graph.hpp"
#include "kmin/minimality.hpp"
#include "kmin/witness.hpp"

namespace kmin {

// JSON renderings. Vertices are reported by index and, where the graph has
// labels, by label.

std::string classification_json(const LabeledGraph& g, int k);
/// Multigraphs only support the edge-connectivity classes (c and d).
std::string classification_json(const MultiGraph& g, int k);

/// Throws ClassMismatch when g is not in the class. With `explain` the
/// class-specific procedure traces are attached.
std::string witness_json(const LabeledGraph& g, MinimalityClass c, int k, bool explain);
/// Class c only.
std::string witness_json(const MultiGraph& g, int k, bool explain);

std::string lemma5_json(const Lemma5Trace& t);
std::string end_degree_json(const Family& f, const EndDegreeEstimate& est, int r_max, int window);
std::string certification_json(const Family& f, const EdgeCertificationReport& rep);
std::string theorem3_json(const Family& f, const Theorem3Report& rep);
/// Labels, distances and frontier of a truncation.
std::string ball_sidecar_json(const Family& f, const Ball& b, int radius);

// ---------------------------------------------------------------------------
// Stream verification

struct VerificationRow {
  std::string graph6;
  int n = 0;
  int k = 0;
  MinimalityClass cls{};
  int v_k = 0;        // |V_k|
  int v_bound = 0;    // |V_bound| for the class bound (floor(3k/2)-1 for b)
  int min_degree = 0;
  int required = 0;
  bool in_scope = true;
  bool satisfied = false;  // true when out of scope
  std::vector<Vertex> witnesses;
};

inline constexpr const char* kVerifySchema = "kmin-verify/1";

/// Schema tag line followed by the column line, both newline terminated.
std::string verification_csv_header();
std::string to_csv(const VerificationRow& row);

struct VerificationSummary {
  long graphs = 0;
  long skipped = 0;  // unparsable lines
  long rows = 0;
  long violations = 0;
  /// Keyed by class letter then k.
  std::map<char, std::map<int, long>> counts;
  std::map<char, std::map<int, double>> min_ratio;
};

std::string summary_json(const VerificationSummary& s);

/// Classifies graph6 lines one at a time for the selected classes and
/// k range and accumulates a summary.
class Verifier {
 public:
  Verifier(std::vector<MinimalityClass> classes, int k_min, int k_max);

  /// Rows for the classes the graph belongs to. Throws Parse on bad input
  /// (counted as skipped).
  std::vector<VerificationRow> feed(const std::string& graph6);
  const VerificationSummary& summary() const { return summary_; }

 private:
  std::vector<MinimalityClass> classes_;
  int k_min_, k_max_;
  VerificationSummary summary_;
};

}  // namespace kmin
