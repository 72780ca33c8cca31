#include "snc/network.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace snc {

namespace {

std::vector<std::string> split_tokens(const std::string& line, int lineno) {
  std::vector<std::string> toks;
  std::string cur;
  for (char c : line) {
    if (c == ' ') {
      if (cur.empty())
        fail(Errc::parse, "line " + std::to_string(lineno) + ": tokens must be separated by single spaces");
      toks.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (cur.empty())
    fail(Errc::parse, "line " + std::to_string(lineno) + ": trailing space");
  toks.push_back(std::move(cur));
  return toks;
}

}  // namespace

ChannelSet::ChannelSet(std::vector<int> indices) : e_(std::move(indices)) {
  std::sort(e_.begin(), e_.end());
  e_.erase(std::unique(e_.begin(), e_.end()), e_.end());
}

ChannelSet ChannelSet::from_ids(const Network& net, const std::vector<std::string>& ids) {
  std::vector<int> idx;
  idx.reserve(ids.size());
  for (const auto& id : ids) idx.push_back(net.edge_index(id));
  return ChannelSet(std::move(idx));
}

bool ChannelSet::contains(int e) const {
  return std::binary_search(e_.begin(), e_.end(), e);
}

std::vector<std::string> ChannelSet::ids(const Network& net) const {
  std::vector<std::string> out;
  out.reserve(e_.size());
  for (int e : e_) out.push_back(net.edge(e).id);
  return out;
}

std::string ChannelSet::str(const Network& net) const {
  std::string s;
  for (int e : e_) {
    if (!s.empty()) s += ' ';
    s += net.edge(e).id;
  }
  return s;
}

Network Network::from_parts(std::string source, std::vector<std::string> sinks,
                            std::vector<Edge> edges) {
  Network net;
  std::set<std::string> node_ids;
  for (const Edge& e : edges) {
    node_ids.insert(e.tail);
    node_ids.insert(e.head);
  }
  net.nodes_.assign(node_ids.begin(), node_ids.end());

  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (size_t i = 1; i < edges.size(); ++i)
    if (edges[i].id == edges[i - 1].id)
      fail(Errc::duplicate_edge, "duplicate edge id '" + edges[i].id + "'");
  net.edges_ = std::move(edges);

  if (!node_ids.count(source))
    fail(Errc::unknown_node, "source '" + source + "' does not appear in any edge");
  net.source_ = static_cast<int>(std::distance(node_ids.begin(), node_ids.find(source)));

  if (sinks.empty()) fail(Errc::invalid_network, "sink set is empty");
  std::set<int> sink_set;
  for (const auto& t : sinks) {
    if (!node_ids.count(t)) fail(Errc::unknown_node, "sink '" + t + "' does not appear in any edge");
    sink_set.insert(static_cast<int>(std::distance(node_ids.begin(), node_ids.find(t))));
  }
  net.sinks_.assign(sink_set.begin(), sink_set.end());

  net.validate_and_index();
  return net;
}

void Network::validate_and_index() {
  const int nv = node_count();
  const int ne = edge_count();
  tail_.resize(ne);
  head_.resize(ne);
  out_.assign(nv, {});
  in_.assign(nv, {});
  for (int e = 0; e < ne; ++e) {
    tail_[e] = node_index(edges_[e].tail);
    head_[e] = node_index(edges_[e].head);
    if (tail_[e] == head_[e])
      fail(Errc::invalid_network, "self-loop on edge '" + edges_[e].id + "'");
    out_[tail_[e]].push_back(e);  // edges are id-sorted, so lists stay sorted
    in_[head_[e]].push_back(e);
  }
  if (!in_[source_].empty())
    fail(Errc::invalid_network,
         "source '" + nodes_[source_] + "' has incoming edge '" + edges_[in_[source_][0]].id + "'");

  // Kahn with a min-heap on node index: a deterministic topological order of
  // nodes, or a cycle diagnosis.
  std::vector<int> indeg(nv, 0);
  for (int e = 0; e < ne; ++e) indeg[head_[e]]++;
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int v = 0; v < nv; ++v)
    if (indeg[v] == 0) ready.push(v);
  std::vector<int> topo_pos(nv, -1);
  int seen = 0;
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    topo_pos[v] = seen++;
    for (int e : out_[v])
      if (--indeg[head_[e]] == 0) ready.push(head_[e]);
  }
  if (seen != nv) fail(Errc::cycle, "cycle detected");

  topo_edges_.resize(ne);
  for (int e = 0; e < ne; ++e) topo_edges_[e] = e;
  std::stable_sort(topo_edges_.begin(), topo_edges_.end(),
                   [&](int a, int b) { return topo_pos[tail_[a]] < topo_pos[tail_[b]]; });

  // Reachability closure by reverse-topological sweep over bit rows.
  reach_words_ = (nv + 63) / 64;
  reach_.assign(static_cast<size_t>(nv) * reach_words_, 0);
  std::vector<int> order(nv);
  for (int v = 0; v < nv; ++v) order[topo_pos[v]] = v;
  for (int i = nv - 1; i >= 0; --i) {
    int v = order[i];
    uint64_t* row = &reach_[static_cast<size_t>(v) * reach_words_];
    row[v / 64] |= uint64_t{1} << (v % 64);
    for (int e : out_[v]) {
      const uint64_t* hrow = &reach_[static_cast<size_t>(head_[e]) * reach_words_];
      for (int w = 0; w < reach_words_; ++w) row[w] |= hrow[w];
    }
  }

  for (int t : sinks_)
    if (!reaches(source_, t))
      fail(Errc::invalid_network, "sink '" + nodes_[t] + "' is not reachable from the source");
}

bool Network::reaches(int u, int v) const {
  return (reach_[static_cast<size_t>(u) * reach_words_ + v / 64] >> (v % 64)) & 1;
}

bool Network::precedes(int e1, int e2) const {
  if (e1 == e2) return true;
  return reaches(head_[e1], tail_[e2]);
}

int Network::edge_index(std::string_view id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, std::string_view v) { return e.id < v; });
  if (it == edges_.end() || it->id != id)
    fail(Errc::unknown_edge, "unknown edge '" + std::string(id) + "'");
  return static_cast<int>(it - edges_.begin());
}

bool Network::has_node(std::string_view id) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), id);
}

int Network::node_index(std::string_view id) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id);
  if (it == nodes_.end() || *it != id)
    fail(Errc::unknown_node, "unknown node '" + std::string(id) + "'");
  return static_cast<int>(it - nodes_.begin());
}

std::vector<std::string> Network::sink_ids() const {
  std::vector<std::string> out;
  out.reserve(sinks_.size());
  for (int t : sinks_) out.push_back(nodes_[t]);
  return out;
}

Network Network::parse(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool saw_header = false;
  std::string source;
  std::vector<std::string> sinks;
  std::vector<Edge> edges;
  bool saw_source = false, saw_sinks = false;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!saw_header) {
      if (line != "snc-network v1")
        fail(Errc::parse, "line " + std::to_string(lineno) + ": expected 'snc-network v1' header");
      saw_header = true;
      continue;
    }
    auto toks = split_tokens(line, lineno);
    const std::string& kw = toks[0];
    if (kw == "source") {
      if (toks.size() != 2)
        fail(Errc::parse, "line " + std::to_string(lineno) + ": 'source' takes one node id");
      if (saw_source) fail(Errc::parse, "line " + std::to_string(lineno) + ": duplicate 'source'");
      source = toks[1];
      saw_source = true;
    } else if (kw == "sinks") {
      if (toks.size() < 2)
        fail(Errc::parse, "line " + std::to_string(lineno) + ": 'sinks' needs at least one node id");
      if (saw_sinks) fail(Errc::parse, "line " + std::to_string(lineno) + ": duplicate 'sinks'");
      sinks.assign(toks.begin() + 1, toks.end());
      saw_sinks = true;
    } else if (kw == "edge") {
      if (toks.size() != 4)
        fail(Errc::parse, "line " + std::to_string(lineno) + ": 'edge' takes id, tail, head");
      edges.push_back({toks[1], toks[2], toks[3]});
    } else {
      fail(Errc::parse, "line " + std::to_string(lineno) + ": unknown declaration '" + kw + "'");
    }
  }
  if (!saw_header) fail(Errc::parse, "empty input: missing 'snc-network v1' header");
  if (!saw_source) fail(Errc::parse, "missing 'source' declaration");
  if (!saw_sinks) fail(Errc::parse, "missing 'sinks' declaration");
  return from_parts(std::move(source), std::move(sinks), std::move(edges));
}

std::string Network::render() const {
  std::ostringstream os;
  os << "snc-network v1\n";
  os << "source " << source_id() << '\n';
  os << "sinks";
  for (int t : sinks_) os << ' ' << nodes_[t];
  os << '\n';
  for (const Edge& e : edges_) os << "edge " << e.id << ' ' << e.tail << ' ' << e.head << '\n';
  return os.str();
}

Network load_network(std::istream& in) { return Network::parse(in); }

Network load_network_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(Errc::io, "cannot open '" + path + "'");
  return Network::parse(f);
}

void save_network_file(const Network& net, const std::string& path) {
  std::ofstream f(path);
  if (!f) fail(Errc::io, "cannot write '" + path + "'");
  f << net.render();
}

Network gen_combination(int n_internal, int k) {
  if (n_internal < 1 || k < 1 || k > n_internal)
    fail(Errc::out_of_range, "combination network needs 1 <= k <= N");
  std::vector<Edge> edges;
  for (int i = 1; i <= n_internal; ++i)
    edges.push_back({"u" + std::to_string(i), "s", "v" + std::to_string(i)});

  // k-subsets of {1..N} in lexicographic order; subset j feeds sink t<j>.
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i + 1;
  std::vector<std::string> sinks;
  int sink_index = 0;
  while (true) {
    ++sink_index;
    std::string t = "t" + std::to_string(sink_index);
    sinks.push_back(t);
    for (int i : pick)
      edges.push_back({"l" + std::to_string(i) + "_" + std::to_string(sink_index),
                       "v" + std::to_string(i), t});
    int pos = k - 1;
    while (pos >= 0 && pick[pos] == n_internal - (k - 1 - pos)) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int i = pos + 1; i < k; ++i) pick[i] = pick[i - 1] + 1;
  }
  return Network::from_parts("s", std::move(sinks), std::move(edges));
}

std::vector<std::string> topological_order(const Network& net) {
  std::vector<std::string> out;
  out.reserve(net.edge_count());
  for (int e : net.topo_edges()) out.push_back(net.edge(e).id);
  return out;
}

bool precedes(const Network& net, const std::string& e1, const std::string& e2) {
  return net.precedes(net.edge_index(e1), net.edge_index(e2));
}

}  // namespace snc
