#include "kmin/flow.hpp"

#include <algorithm>
#include <queue>

namespace kmin {

void FlowNetwork::reset(int nodes) {
  out_.assign(nodes, {});
  to_.clear();
  base_.clear();
  residual_.clear();
}

int FlowNetwork::add_arc(int from, int to, int capacity, int reverse_capacity) {
  const int id = static_cast<int>(to_.size());
  to_.push_back(to);
  base_.push_back(capacity);
  out_[from].push_back(id);
  to_.push_back(from);
  base_.push_back(reverse_capacity);
  out_[to].push_back(id + 1);
  residual_.push_back(capacity);
  residual_.push_back(reverse_capacity);
  return id;
}

bool FlowNetwork::build_levels(int source, int sink) {
  level_.assign(nodes(), -1);
  std::vector<int> queue{source};
  level_[source] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int v = queue[i];
    for (int arc : out_[v]) {
      if (residual_[arc] > 0 && level_[to_[arc]] < 0) {
        level_[to_[arc]] = level_[v] + 1;
        queue.push_back(to_[arc]);
      }
    }
  }
  return level_[sink] >= 0;
}

int FlowNetwork::augment(int node, int sink, int pushed) {
  if (node == sink) return pushed;
  auto& arcs = out_[node];
  for (int& i = cursor_[node]; i < static_cast<int>(arcs.size()); ++i) {
    const int arc = arcs[i];
    const int next = to_[arc];
    if (residual_[arc] <= 0 || level_[next] != level_[node] + 1) continue;
    const int got = augment(next, sink, std::min(pushed, residual_[arc]));
    if (got > 0) {
      residual_[arc] -= got;
      residual_[arc ^ 1] += got;
      return got;
    }
  }
  return 0;
}

long long FlowNetwork::max_flow(int source, int sink, long long limit) {
  long long total = 0;
  if (source == sink) return 0;
  while (total < limit && build_levels(source, sink)) {
    cursor_.assign(nodes(), 0);
    while (total < limit) {
      const long long want = std::min<long long>(limit - total, kInfinity);
      const int got = augment(source, sink, static_cast<int>(want));
      if (got == 0) break;
      total += got;
    }
  }
  return total;
}

std::vector<char> FlowNetwork::source_side(int source) const {
  std::vector<char> seen(nodes(), 0);
  std::vector<int> stack{source};
  seen[source] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int arc : out_[v]) {
      if (residual_[arc] > 0 && !seen[to_[arc]]) {
        seen[to_[arc]] = 1;
        stack.push_back(to_[arc]);
      }
    }
  }
  return seen;
}

}  // namespace kmin
