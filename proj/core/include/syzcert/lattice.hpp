#pragma once

// Supports of homogeneous subbundles of V_d. A subbundle W is graded by twist,
// W = (+) W(i); the set {i : W(i) != 0} is closed downward under base-p digit
// dominance, and each nonzero W(i) contains the minimal SL(n)-submodule of
// S^{d-i}(V_1). This module enumerates those supports and bounds the slope
// gap of any subbundle living on one.

#include <cstdint>
#include <map>
#include <vector>

#include "syzcert/arith.hpp"
#include "syzcert/rational.hpp"

namespace syz::lattice {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

struct SupportSet {
  std::uint64_t n = 2;
  std::uint64_t p = 2;
  std::uint64_t d = 1;
  std::vector<std::uint64_t> indices;  ///< sorted, each < d

  friend bool operator==(const SupportSet&, const SupportSet&) = default;
};

/// Per-index dimension box: lo = minimal block, hi = full block.
struct SupportProfile {
  SupportSet support;
  std::vector<Nat> lo;
  std::vector<Nat> hi;
};

enum class BlockChoice { Lo, Hi };

struct MarginResult {
  Rational margin;
  std::map<std::uint64_t, BlockChoice> choice;
  bool conclusive = false;  ///< margin > 0
};

/// j <= i digitwise in base p.
bool dominance_leq(std::uint64_t j, std::uint64_t i, std::uint64_t p);

/// prod_j |S^{t_j}(V_1)| over the base-p digits t_j of e.
Nat minimal_block_dim(std::uint64_t n, std::uint64_t p, std::uint64_t e);

bool is_downward_closed(const std::vector<std::uint64_t>& indices, std::uint64_t p,
                        std::uint64_t d);

/// Builds a SupportSet after sorting and validating the indices.
/// Throws ParameterError if an index is >= d or the set is not closed.
SupportSet make_support(std::uint64_t n, std::uint64_t p, std::uint64_t d,
                        std::vector<std::uint64_t> indices);

SupportProfile profile(const SupportSet& s);

/// All nonempty downward-closed subsets of [0, d-1], ordered by cardinality
/// then lexicographically. The full index set is left out when every one of
/// its blocks is forced to full rank (then it can only carry W = V_d).
/// Throws EnumerationOverflow when more than `cap` supports exist.
std::vector<SupportSet> enumerate_supports(std::uint64_t n, std::uint64_t p, std::uint64_t d,
                                           std::uint64_t cap = kDefaultEnumerationCap);

/// C_j classes: index i goes to the largest digit position j where its
/// base-p digit differs from that of d. Every j in [0, m] is a key.
std::map<std::size_t, std::vector<std::uint64_t>> classify_support(const SupportSet& s);

/// Coefficient c_i = ((d - i)/n - i) - d / rank(V_d).
Rational margin_coefficient(std::uint64_t n, std::uint64_t d, std::uint64_t i);

/// sum_{i in S} c_i w_i for explicit block dimensions (aligned with indices).
Rational linear_form(const SupportSet& s, const std::vector<Nat>& weights);

/// Minimum of the linear form over the 2^|S| box vertices. A positive margin
/// proves mu(W) < mu(V_d) for every W on this support; a non-positive one
/// proves nothing.
MarginResult crude_margin(const SupportSet& s);

}  // namespace syz::lattice
