#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "snc/error.hpp"

namespace snc {

struct Edge {
  std::string id;
  std::string tail;
  std::string head;
};

// Immutable directed acyclic multigraph with unit-capacity edges, one source
// and a nonempty sink set. Edge and node identifiers are opaque case-sensitive
// strings; every deterministic ordering in the library is lexicographic on
// those ids. Internally edges and nodes are indexed in sorted-id order, so
// index order equals id order.
class Network {
public:
  static Network from_parts(std::string source, std::vector<std::string> sinks,
                            std::vector<Edge> edges);
  static Network parse(std::istream& in);  // `snc-network v1` text format

  std::string render() const;

  const std::string& source_id() const { return nodes_[source_]; }
  int source() const { return source_; }
  const std::vector<int>& sinks() const { return sinks_; }
  std::vector<std::string> sink_ids() const;

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }  // sorted by id
  const Edge& edge(int e) const { return edges_[e]; }
  const std::string& node_id(int v) const { return nodes_[v]; }

  int edge_index(std::string_view id) const;  // throws unknown_edge
  int node_index(std::string_view id) const;  // throws unknown_node
  bool has_node(std::string_view id) const;

  int tail_of(int e) const { return tail_[e]; }
  int head_of(int e) const { return head_[e]; }
  const std::vector<int>& out_edges(int v) const { return out_[v]; }
  const std::vector<int>& in_edges(int v) const { return in_[v]; }

  // Node-to-node reachability (directed path of length >= 0).
  bool reaches(int u, int v) const;
  // An edge is reachable when its tail is reachable from the source.
  bool edge_reachable(int e) const { return reaches(source_, tail_[e]); }

  // Edge ids in an order where e precedes e' whenever head(e) reaches tail(e').
  // Ties broken lexicographically; the result is a permutation of all edges.
  const std::vector<int>& topo_edges() const { return topo_edges_; }

  // The edge partial order: e1 == e2, or head(e1) reaches tail(e2).
  bool precedes(int e1, int e2) const;

private:
  Network() = default;
  void validate_and_index();

  std::vector<std::string> nodes_;  // sorted
  std::vector<Edge> edges_;         // sorted by id
  std::vector<int> tail_, head_;    // per edge, node indices
  std::vector<std::vector<int>> out_, in_;
  int source_ = -1;
  std::vector<int> sinks_;  // sorted node indices
  std::vector<int> topo_edges_;
  std::vector<uint64_t> reach_;  // node_count x node_count bit matrix
  int reach_words_ = 0;
};

// Canonical channel-set: strictly increasing edge indices of one network.
// Index order equals lexicographic edge-id order, so container comparison is
// the canonical ordering used everywhere cuts and wiretap sets are ranked.
class ChannelSet {
public:
  ChannelSet() = default;
  explicit ChannelSet(std::vector<int> indices);
  static ChannelSet from_ids(const Network& net, const std::vector<std::string>& ids);

  const std::vector<int>& indices() const { return e_; }
  int size() const { return static_cast<int>(e_.size()); }
  bool empty() const { return e_.empty(); }
  bool contains(int e) const;

  std::vector<std::string> ids(const Network& net) const;
  std::string str(const Network& net) const;  // space-separated sorted ids

  friend bool operator==(const ChannelSet& a, const ChannelSet& b) { return a.e_ == b.e_; }
  friend bool operator<(const ChannelSet& a, const ChannelSet& b) { return a.e_ < b.e_; }

private:
  std::vector<int> e_;
};

Network load_network(std::istream& in);
Network load_network_file(const std::string& path);
void save_network_file(const Network& net, const std::string& path);

// Combination network: source feeding N internal nodes (edge u<i>), one sink
// per k-subset of internal nodes in lexicographic subset order, with lower
// edges l<i>_<sink-index>.
Network gen_combination(int n_internal, int k);

std::vector<std::string> topological_order(const Network& net);
bool precedes(const Network& net, const std::string& e1, const std::string& e2);

}  // namespace snc
