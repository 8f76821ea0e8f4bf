#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace kmin {

/// Dinic max-flow on an integer-capacity arc list. Capacities can be edited
/// in place and restored, so one network serves a whole family of queries.
class FlowNetwork {
 public:
  static constexpr int kInfinity = std::numeric_limits<int>::max() / 4;

  FlowNetwork() = default;
  explicit FlowNetwork(int nodes) { reset(nodes); }

  void reset(int nodes);
  int nodes() const { return static_cast<int>(out_.size()); }

  /// Adds arc from->to with `capacity` and its paired reverse arc with
  /// `reverse_capacity`. Returns the forward arc id; the reverse is id ^ 1.
  int add_arc(int from, int to, int capacity, int reverse_capacity = 0);

  void set_capacity(int arc, int capacity) { base_[arc] = capacity; }
  int capacity(int arc) const { return base_[arc]; }
  /// Restores every residual capacity to its base value.
  void clear_flow() { residual_ = base_; }

  /// Stops as soon as the flow reaches `limit`.
  long long max_flow(int source, int sink, long long limit = std::numeric_limits<long long>::max());

  /// Nodes reachable from `source` in the residual network (the unique
  /// inclusion-minimal source side of a minimum cut after a full max_flow).
  std::vector<char> source_side(int source) const;

  int flow(int arc) const { return base_[arc] - residual_[arc]; }
  int head(int arc) const { return to_[arc]; }
  int tail(int arc) const { return to_[arc ^ 1]; }
  int arc_count() const { return static_cast<int>(to_.size()); }
  const std::vector<int>& out_arcs(int node) const { return out_[node]; }

 private:
  bool build_levels(int source, int sink);
  int augment(int node, int sink, int pushed);

  std::vector<std::vector<int>> out_;
  std::vector<int> to_;
  std::vector<int> base_;
  std::vector<int> residual_;
  std::vector<int> level_;
  std::vector<int> cursor_;
};

}  // namespace kmin
