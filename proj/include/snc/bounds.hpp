#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "snc/cuts.hpp"
#include "snc/network.hpp"

namespace snc {

using BigInt = boost::multiprecision::cpp_int;

BigInt big_binomial(long long n, long long k);

// All channel-sets whose size equals their min-cut capacity from the source
// (the only wiretap sets that matter topologically). Lexicographic order;
// sets containing unreachable edges are excluded. 1 <= r <= min sink capacity.
std::vector<ChannelSet> enumerate_tight_sets(const Network& net, int r, int workers = 1);

// Partition of the tight sets under "shares a minimum cut with": buckets of
// sets sharing one canonical cut are merged, and since the relation is
// transitive the resulting components are exactly the equivalence classes.
struct ClassPartition {
  int r = 0;
  std::vector<ChannelSet> members;        // tight sets in lexicographic order
  std::vector<int> class_of;              // member index -> class index
  std::vector<std::vector<int>> classes;  // member indices, ordered by representative
  std::vector<ChannelSet> representatives;
  std::vector<ChannelSet> witness_cuts;  // smallest merging cut per class

  int class_count() const { return static_cast<int>(classes.size()); }
};

ClassPartition equivalence_classes(const Network& net, int r, int workers = 1,
                                   long cap = kDefaultMinCutCap);

// Deduplicated set of every minimum cut appearing for any tight set; every
// tight set has at least one of its minimum cuts in the output, so the kernel
// spans of these cuts dominate all wiretap spans.
std::vector<ChannelSet> class_subspace_keys(const Network& net, int r, int workers = 1,
                                            long cap = kDefaultMinCutCap);

struct BoundsReport {
  long long e_count = 0;
  long long t_count = 0;
  long long c_min = 0;
  int r = 0;
  BigInt binom;      // C(|E|, r)
  long long ercut = 0;
  std::vector<long long> ercut_by_source_edges;  // index = #edges leaving the source
  long long classes = 0;
  BigInt rouayheb1;  // C(|E|-1, r-1) + |T|
  BigInt rouayheb2;  // C(2*cmin^3*|T|^2 - 1, r-1) + |T|
  BigInt silva;      // |T|^cmin reference value
};

BoundsReport bound_report(const Network& net, int r, int workers = 1,
                          long cap = kDefaultMinCutCap);

std::string render_report_kv(const BoundsReport& rep);
std::string render_report_table(const BoundsReport& rep);

}  // namespace snc
