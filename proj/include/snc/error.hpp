#pragma once

#include <stdexcept>
#include <string>

namespace snc {

// Error categories surfaced by the library. The CLI maps each to a distinct
// message and a nonzero exit status.
enum class Errc {
  parse,
  cycle,
  unknown_node,
  unknown_edge,
  duplicate_edge,
  invalid_network,
  empty_set,
  unreachable_edge,
  cap_exceeded,
  out_of_range,
  not_prime,
  singular,
  dimension_mismatch,
  field_too_small,
  too_large,
  bad_observation,
  inconsistent,
  misaligned_cut,
  io,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace snc
