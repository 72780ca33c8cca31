#pragma once

#include <string>
#include <vector>

#include "snc/network.hpp"

namespace snc {

// Edge-disjoint source-to-target paths realizing the minimum cut capacity.
// Paths are edge-index sequences starting at the source; each ends on a
// distinct member of the target set. Canonically sorted.
struct PathSystem {
  ChannelSet target;
  std::vector<std::vector<int>> paths;
};

// The complete family of minimum cuts between the source and a channel-set,
// reported in original edge ids and sorted lexicographically.
struct MinCutFamily {
  ChannelSet target;
  std::vector<ChannelSet> cuts;
};

// Result of the auxiliary-sink transform: every edge of the target set is
// replaced by a fresh edge from its tail into the new node.
struct AugmentResult {
  Network net;
  std::string t_a;
  std::vector<std::pair<std::string, std::string>> replacements;  // (new id, original id)
};

AugmentResult augment_for_set(const Network& net, const ChannelSet& target);

int mincut_capacity(const Network& net, const ChannelSet& target);
PathSystem edge_disjoint_paths(const Network& net, const ChannelSet& target);
bool is_cut(const Network& net, const ChannelSet& candidate, const ChannelSet& target);

inline constexpr long kDefaultMinCutCap = 1'000'000;
MinCutFamily enumerate_min_cuts(const Network& net, const ChannelSet& target,
                                long cap = kDefaultMinCutCap);

// Per-path earlier-edge combination of two minimum cuts; the result is again
// a minimum cut for the same target.
ChannelSet min_cut_meet(const Network& net, const PathSystem& ps, const ChannelSet& c1,
                        const ChannelSet& c2);

// Min-cut capacity from the source to a sink node (its incoming edge set).
int sink_capacity(const Network& net, int sink);
// Smallest sink capacity over all sinks.
int min_sink_capacity(const Network& net);

namespace detail {

// Unit-capacity max-flow workspace over one network plus a virtual sink.
// Target edges are redirected into the virtual sink in place, so repeated
// queries over many channel-sets reuse all buffers. Augmenting searches scan
// arcs in lexicographic edge-id order, which makes every result deterministic.
class FlowSolver {
public:
  explicit FlowSolver(const Network& net);

  // Runs a fresh max-flow for the given nonempty, reachable target set and
  // returns its value. State stays valid for the queries below until the next
  // solve()/separates() call.
  int solve(const std::vector<int>& target, int path_limit = -1);

  std::vector<std::vector<int>> flow_paths() const;
  // All minimum cuts as sorted edge-index sets (closure enumeration over the
  // condensed residual graph); throws cap_exceeded past `cap` distinct cuts.
  std::vector<std::vector<int>> all_min_cuts(long cap) const;

  // True iff removing `candidate` disconnects the source from the virtual
  // sink of `target`. Independent of any previous solve() state.
  bool separates(const std::vector<int>& candidate, const std::vector<int>& target);

  void check_target(const std::vector<int>& target) const;

private:
  void begin(const std::vector<int>& target);
  bool augment();

  const Network& net_;
  int vcount_;  // nodes + virtual sink
  int t_a_;
  std::vector<int> head_;  // current arc heads; members of the active target point at t_a_
  std::vector<int> active_;
  std::vector<signed char> flow_;
  std::vector<int> seen_;
  std::vector<int> parent_arc_;
  std::vector<signed char> parent_back_;
  std::vector<int> ocur_, icur_, cur_;  // per-node arc cursors, epoch-reset
  std::vector<int> dfs_;
  int epoch_ = 0;
  int value_ = 0;
};

}  // namespace detail

}  // namespace snc
