#include "snc/cuts.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace snc {

namespace detail {

FlowSolver::FlowSolver(const Network& net)
    : net_(net),
      vcount_(net.node_count() + 1),
      t_a_(net.node_count()),
      head_(net.edge_count()),
      flow_(net.edge_count(), 0),
      seen_(vcount_, 0),
      parent_arc_(vcount_, -1),
      parent_back_(vcount_, 0) {
  for (int e = 0; e < net.edge_count(); ++e) head_[e] = net.head_of(e);
  ocur_.resize(vcount_, 0);
  icur_.resize(vcount_, 0);
  cur_.resize(vcount_, 0);
}

void FlowSolver::check_target(const std::vector<int>& target) const {
  if (target.empty()) fail(Errc::empty_set, "channel-set is empty");
  for (int e : target)
    if (!net_.edge_reachable(e))
      fail(Errc::unreachable_edge,
           "edge '" + net_.edge(e).id + "' is not reachable from the source; its cut capacity is undefined");
}

void FlowSolver::begin(const std::vector<int>& target) {
  for (int e : active_) head_[e] = net_.head_of(e);
  active_ = target;
  for (int e : active_) head_[e] = t_a_;
  std::fill(flow_.begin(), flow_.end(), 0);
}

bool FlowSolver::augment() {
  ++epoch_;
  const int s = net_.source();
  seen_[s] = epoch_;
  dfs_.clear();
  dfs_.push_back(s);
  bool found = false;
  while (!dfs_.empty() && !found) {
    int u = dfs_.back();
    if (cur_[u] != epoch_) {
      cur_[u] = epoch_;
      ocur_[u] = 0;
      icur_[u] = 0;
    }
    const std::vector<int>& out = net_.out_edges(u);
    const std::vector<int>& in = net_.in_edges(u);
    int pick = -1, to = -1;
    bool back = false;
    while (pick < 0) {
      // Merge forward and backward residual arcs in ascending edge order.
      int fa = ocur_[u] < static_cast<int>(out.size()) ? out[ocur_[u]] : -1;
      int ba = icur_[u] < static_cast<int>(in.size()) ? in[icur_[u]] : -1;
      if (fa < 0 && ba < 0) break;
      if (ba < 0 || (fa >= 0 && fa < ba)) {
        ++ocur_[u];
        if (flow_[fa] == 0 && seen_[head_[fa]] != epoch_) {
          pick = fa;
          to = head_[fa];
        }
      } else {
        ++icur_[u];
        // Skip arcs redirected away from their original head.
        if (head_[ba] == u && flow_[ba] == 1 && seen_[net_.tail_of(ba)] != epoch_) {
          pick = ba;
          back = true;
          to = net_.tail_of(ba);
        }
      }
    }
    if (pick < 0) {
      dfs_.pop_back();
      continue;
    }
    seen_[to] = epoch_;
    parent_arc_[to] = pick;
    parent_back_[to] = back ? 1 : 0;
    if (to == t_a_) {
      found = true;
    } else {
      dfs_.push_back(to);
    }
  }
  if (!found) return false;
  for (int v = t_a_; v != s;) {
    int a = parent_arc_[v];
    if (parent_back_[v]) {
      flow_[a] = 0;
      v = head_[a];
    } else {
      flow_[a] = 1;
      v = net_.tail_of(a);
    }
  }
  return true;
}

int FlowSolver::solve(const std::vector<int>& target, int path_limit) {
  check_target(target);
  begin(target);
  value_ = 0;
  while ((path_limit < 0 || value_ < path_limit) && augment()) ++value_;
  return value_;
}

std::vector<std::vector<int>> FlowSolver::flow_paths() const {
  std::vector<signed char> left(flow_);
  std::vector<std::vector<int>> paths;
  const int s = net_.source();
  for (int p = 0; p < value_; ++p) {
    std::vector<int> path;
    int u = s;
    while (u != t_a_) {
      int chosen = -1;
      for (int a : net_.out_edges(u))
        if (left[a]) {
          chosen = a;
          break;
        }
      assert(chosen >= 0);  // flow conservation on a DAG
      left[chosen] = 0;
      path.push_back(chosen);
      u = head_[chosen];
    }
    paths.push_back(std::move(path));
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

bool FlowSolver::separates(const std::vector<int>& candidate, const std::vector<int>& target) {
  begin(target);
  std::vector<char> removed(net_.edge_count(), 0);
  for (int e : candidate) removed[e] = 1;
  ++epoch_;
  const int s = net_.source();
  seen_[s] = epoch_;
  dfs_.clear();
  dfs_.push_back(s);
  bool reached = false;
  while (!dfs_.empty() && !reached) {
    int u = dfs_.back();
    dfs_.pop_back();
    for (int a : net_.out_edges(u)) {
      if (removed[a]) continue;
      int v = head_[a];
      if (seen_[v] == epoch_) continue;
      seen_[v] = epoch_;
      if (v == t_a_) {
        reached = true;
        break;
      }
      dfs_.push_back(v);
    }
  }
  return !reached;
}

std::vector<std::vector<int>> FlowSolver::all_min_cuts(long cap) const {
  const int s = net_.source();
  const int ne = net_.edge_count();

  // Restrict to nodes on some source-to-sink path; pruning dead zones keeps
  // the closure enumeration proportional to the actual cut family.
  std::vector<char> fwd(vcount_, 0), bwd(vcount_, 0);
  {
    std::vector<int> q{s};
    fwd[s] = 1;
    while (!q.empty()) {
      int u = q.back();
      q.pop_back();
      if (u == t_a_) continue;
      for (int a : net_.out_edges(u))
        if (!fwd[head_[a]]) {
          fwd[head_[a]] = 1;
          q.push_back(head_[a]);
        }
    }
    q.assign(1, t_a_);
    bwd[t_a_] = 1;
    while (!q.empty()) {
      int v = q.back();
      q.pop_back();
      const std::vector<int>& in = v == t_a_ ? active_ : net_.in_edges(v);
      for (int a : in) {
        if (head_[a] != v) continue;
        int u = net_.tail_of(a);
        if (!bwd[u]) {
          bwd[u] = 1;
          q.push_back(u);
        }
      }
    }
  }
  std::vector<char> kept(vcount_, 0);
  for (int v = 0; v < vcount_; ++v) kept[v] = fwd[v] && bwd[v];
  assert(kept[s] && kept[t_a_]);

  // Residual arcs among kept nodes: forward when idle, reversed when carrying.
  std::vector<std::vector<int>> radj(vcount_);
  std::vector<std::pair<int, int>> kept_arcs;  // (tail, head) in the flow graph
  std::vector<int> kept_arc_edge;
  for (int a = 0; a < ne; ++a) {
    int u = net_.tail_of(a), v = head_[a];
    if (!kept[u] || !kept[v]) continue;
    kept_arcs.emplace_back(u, v);
    kept_arc_edge.push_back(a);
    if (flow_[a])
      radj[v].push_back(u);
    else
      radj[u].push_back(v);
  }

  // Iterative Tarjan over kept nodes; component ids come out in reverse
  // topological order of the condensation.
  std::vector<int> comp(vcount_, -1), low(vcount_, 0), disc(vcount_, -1), stk;
  std::vector<char> on_stack(vcount_, 0);
  int timer = 0, ncomp = 0;
  struct Frame {
    int v;
    size_t child;
  };
  std::vector<Frame> frames;
  for (int root = 0; root < vcount_; ++root) {
    if (!kept[root] || disc[root] >= 0) continue;
    frames.push_back({root, 0});
    disc[root] = low[root] = timer++;
    stk.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.child < radj[f.v].size()) {
        int w = radj[f.v][f.child++];
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          stk.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        int v = f.v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        if (low[v] == disc[v]) {
          while (true) {
            int w = stk.back();
            stk.pop_back();
            on_stack[w] = 0;
            comp[w] = ncomp;
            if (w == v) break;
          }
          ++ncomp;
        }
      }
    }
  }

  // Condensed residual successors, and the forced sides: everything the
  // source's component reaches stays on the source side, everything reaching
  // the sink's component stays on the sink side.
  std::vector<std::vector<int>> csucc(ncomp), cpred(ncomp);
  for (int v = 0; v < vcount_; ++v) {
    if (!kept[v]) continue;
    for (int w : radj[v])
      if (comp[v] != comp[w]) {
        csucc[comp[v]].push_back(comp[w]);
        cpred[comp[w]].push_back(comp[v]);
      }
  }
  for (auto& lst : csucc) {
    std::sort(lst.begin(), lst.end());
    lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
  }
  for (auto& lst : cpred) {
    std::sort(lst.begin(), lst.end());
    lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
  }

  enum Side : char { kFree = 0, kIn = 1, kOut = 2 };
  std::vector<char> side(ncomp, kFree);
  {
    std::vector<int> q{comp[s]};
    side[comp[s]] = kIn;
    while (!q.empty()) {
      int c = q.back();
      q.pop_back();
      for (int d : csucc[c])
        if (side[d] != kIn) {
          side[d] = kIn;
          q.push_back(d);
        }
    }
    q.assign(1, comp[t_a_]);
    if (side[comp[t_a_]] == kIn)
      fail(Errc::inconsistent, "internal: residual path from source to sink after max flow");
    side[comp[t_a_]] = kOut;
    while (!q.empty()) {
      int c = q.back();
      q.pop_back();
      for (int d : cpred[c]) {
        if (side[d] == kIn)
          fail(Errc::inconsistent, "internal: residual path from source to sink after max flow");
        if (side[d] != kOut) {
          side[d] = kOut;
          q.push_back(d);
        }
      }
    }
  }

  std::vector<int> free_comps;
  for (int c = 0; c < ncomp; ++c)
    if (side[c] == kFree) free_comps.push_back(c);
  // Ascending component id = successors first, so a component may join the
  // source side only when all of its free successors already joined.

  std::set<std::vector<int>> cuts;
  std::vector<char> in_side(ncomp, 0);
  for (int c = 0; c < ncomp; ++c) in_side[c] = side[c] == kIn;
  long leaves = 0;
  const long leaf_budget = cap > (1L << 50) ? (1L << 56) : cap * 64 + 64;

  auto emit = [&]() {
    if (++leaves > leaf_budget)
      fail(Errc::cap_exceeded, "minimum-cut enumeration exceeded the cap of " + std::to_string(cap));
    std::vector<int> cut;
    for (size_t i = 0; i < kept_arcs.size(); ++i) {
      auto [u, v] = kept_arcs[i];
      if (in_side[comp[u]] && !in_side[comp[v]]) cut.push_back(kept_arc_edge[i]);
    }
    std::sort(cut.begin(), cut.end());
    cuts.insert(std::move(cut));
    if (static_cast<long>(cuts.size()) > cap)
      fail(Errc::cap_exceeded, "minimum-cut family exceeded the cap of " + std::to_string(cap) +
                                   " distinct cuts");
  };

  // Backtracking over the free components in ascending id order.
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == free_comps.size()) {
      emit();
      return;
    }
    int c = free_comps[i];
    self(self, i + 1);  // c stays on the sink side
    for (int d : csucc[c])
      if (!in_side[d]) return;
    in_side[c] = 1;
    self(self, i + 1);
    in_side[c] = 0;
  };
  rec(rec, 0);

  return {cuts.begin(), cuts.end()};
}

}  // namespace detail

AugmentResult augment_for_set(const Network& net, const ChannelSet& target) {
  if (target.empty()) fail(Errc::empty_set, "channel-set is empty");
  for (int e : target.indices())
    if (!net.edge_reachable(e))
      fail(Errc::unreachable_edge,
           "edge '" + net.edge(e).id + "' is not reachable from the source; its cut capacity is undefined");

  std::string t_a = "tA";
  while (net.has_node(t_a)) t_a += "_";

  std::set<std::string> used;
  for (const Edge& e : net.edges()) used.insert(e.id);

  AugmentResult res;
  res.t_a = t_a;
  std::vector<Edge> edges;
  for (int e = 0; e < net.edge_count(); ++e) {
    const Edge& orig = net.edge(e);
    if (target.contains(e)) {
      std::string nid = orig.id + "'";
      while (used.count(nid)) nid += "'";
      used.insert(nid);
      edges.push_back({nid, orig.tail, t_a});
      res.replacements.emplace_back(nid, orig.id);
    } else {
      edges.push_back(orig);
    }
  }
  res.net = Network::from_parts(net.source_id(), {t_a}, std::move(edges));
  return res;
}

int mincut_capacity(const Network& net, const ChannelSet& target) {
  detail::FlowSolver fs(net);
  return fs.solve(target.indices());
}

PathSystem edge_disjoint_paths(const Network& net, const ChannelSet& target) {
  detail::FlowSolver fs(net);
  fs.solve(target.indices());
  return PathSystem{target, fs.flow_paths()};
}

bool is_cut(const Network& net, const ChannelSet& candidate, const ChannelSet& target) {
  detail::FlowSolver fs(net);
  return fs.separates(candidate.indices(), target.indices());
}

MinCutFamily enumerate_min_cuts(const Network& net, const ChannelSet& target, long cap) {
  detail::FlowSolver fs(net);
  fs.solve(target.indices());
  MinCutFamily fam;
  fam.target = target;
  for (auto& cut : fs.all_min_cuts(cap)) fam.cuts.emplace_back(std::move(cut));
  return fam;
}

int sink_capacity(const Network& net, int sink) {
  const std::vector<int>& in = net.in_edges(sink);
  if (in.empty()) return 0;
  detail::FlowSolver fs(net);
  return fs.solve(in);
}

int min_sink_capacity(const Network& net) {
  int cmin = -1;
  for (int t : net.sinks()) {
    int c = sink_capacity(net, t);
    if (cmin < 0 || c < cmin) cmin = c;
  }
  return cmin;
}

ChannelSet min_cut_meet(const Network& net, const PathSystem& ps, const ChannelSet& c1,
                        const ChannelSet& c2) {
  const size_t r = ps.paths.size();
  if (c1.indices().size() != r || c2.indices().size() != r)
    fail(Errc::misaligned_cut, "cut size does not match the path system");
  std::vector<int> meet;
  for (const std::vector<int>& path : ps.paths) {
    int e1 = -1, e2 = -1;
    for (int a : path) {
      if (c1.contains(a)) {
        if (e1 >= 0) fail(Errc::misaligned_cut, "cut has two edges on one path");
        e1 = a;
      }
      if (c2.contains(a)) {
        if (e2 >= 0) fail(Errc::misaligned_cut, "cut has two edges on one path");
        e2 = a;
      }
    }
    if (e1 < 0 || e2 < 0) fail(Errc::misaligned_cut, "cut misses a path of the path system");
    meet.push_back(net.precedes(e1, e2) ? e1 : e2);
  }
  ChannelSet result(std::move(meet));
  if (result.size() != static_cast<int>(r) || !is_cut(net, result, ps.target))
    fail(Errc::inconsistent, "internal: per-path meet is not a minimum cut");
  return result;
}

}  // namespace snc
