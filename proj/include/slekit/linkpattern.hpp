#pragma once

// Planar pair partitions of {1, ..., 2N} (link patterns), the walk bijection
// and its partial order, link surgery (removal and tying), and allowable
// removal orderings.

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace slekit {

using Link = std::pair<int, int>;  // {a, b} with a < b

/// Non-negative walk of 2N unit steps from 0 to 0; values = (W_0, ..., W_2N).
struct Walk {
  std::vector<int> values;

  bool operator==(const Walk& o) const { return values == o.values; }
  bool operator<(const Walk& o) const { return values < o.values; }
};

/// Planar pair partition of {1, ..., 2N}. Immutable; constructors validate
/// both the partition property and planarity.
class LinkPattern {
 public:
  LinkPattern() = default;  // the empty pattern (N = 0)
  explicit LinkPattern(std::vector<Link> links);

  int size() const { return static_cast<int>(links_.size()); }  // |alpha| = N
  const std::vector<Link>& links() const { return links_; }     // sorted by left endpoint
  bool contains(int a, int b) const;
  /// The partner of endpoint a.
  int partner(int a) const;

  bool operator==(const LinkPattern& o) const { return links_ == o.links_; }
  bool operator!=(const LinkPattern& o) const { return links_ != o.links_; }
  bool operator<(const LinkPattern& o) const { return links_ < o.links_; }

  /// Text form "a1-b1,a2-b2,..." sorted by left endpoint; "" for N = 0.
  std::string to_string() const;
  static LinkPattern parse(const std::string& text);

  std::string to_json() const;  // [[a, b], ...] sorted by left endpoint
  static LinkPattern from_json(const std::string& text);

 private:
  std::vector<Link> links_;
};

/// The maximally nested pattern {1-2N, 2-(2N-1), ..., N-(N+1)}.
LinkPattern rainbow(int n);

/// Walk bijection: step up at left endpoints, down at right endpoints.
Walk to_walk(const LinkPattern& alpha);
LinkPattern from_walk(const Walk& w);

/// Partial order: alpha <= beta iff the walk of alpha is pointwise below the
/// walk of beta. Throws on size mismatch.
bool leq(const LinkPattern& alpha, const LinkPattern& beta);

/// Removes the link {j, j+1} (which must be present) and relabels indices
/// greater than j+1 down by two.
LinkPattern remove_link(const LinkPattern& alpha, int j);

/// Tying operation: alpha itself if {j, j+1} is a link; otherwise cuts the
/// links at j and j+1 and forms {j, j+1} together with the link joining the
/// two freed endpoints.
LinkPattern tie(const LinkPattern& alpha, int j);

/// The fiber of the tying operation through alpha: all beta with
/// tie(beta, j) == tie(alpha, j). Brute force over the full enumeration.
std::vector<LinkPattern> tie_fiber(const LinkPattern& alpha, int j);

/// Same fiber by cut-and-reconnect surgery on tie(alpha, j); cross-check path.
std::vector<LinkPattern> tie_fiber_constructive(const LinkPattern& alpha, int j);

/// One step of a removal ordering: the link in the original labels of alpha,
/// and its relabeled left-endpoint index at the moment of removal.
struct RemovalStep {
  Link link;     // in the original labeling of alpha
  int position;  // a_j(j-1): left endpoint after the previous removals
};

/// All orderings of alpha's links such that each successive link has
/// consecutive endpoints after removal of its predecessors.
std::vector<std::vector<RemovalStep>> allowable_orderings(const LinkPattern& alpha);

/// The deterministic allowable ordering choosing the smallest consecutive
/// position at each step (exists for every planar pattern).
std::vector<RemovalStep> first_allowable_ordering(const LinkPattern& alpha);

/// Tests whether the given ordering of alpha's links is allowable, filling
/// the relabeled positions when it is.
bool is_allowable_ordering(const LinkPattern& alpha, const std::vector<Link>& order,
                           std::vector<RemovalStep>* steps = nullptr);

/// All of LP_N in lexicographic order of the associated walks.
std::vector<LinkPattern> enumerate_patterns(int n);

/// Catalan number C_n.
std::uint64_t catalan(int n);

/// Walk area (sum of heights), the grading used for the linear extension.
long walk_area(const LinkPattern& alpha);

/// LP_N sorted by walk area descending (ties by lexicographic walk order):
/// a deterministic linear extension of the reversed partial order, starting
/// at the rainbow pattern.
std::vector<LinkPattern> linear_extension(int n);

}  // namespace slekit
