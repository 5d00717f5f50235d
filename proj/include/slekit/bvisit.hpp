#pragma once

// Boundary visit orders, the associated link patterns, and the doublet
// vectors built from pure partition vectors by fusing visited-point factor
// pairs into three-dimensional representations.
//
// In the fused product M_3^(x)R (x) M_2 (x) M_3^(x)L, right-counted factor
// positions are: 1..L the left-visit factors (outermost visit first), L+1 the
// starting-point doublet, L+2..L+R+1 the right-visit factors (innermost visit
// first), L+R+2 the top doublet consumed by the R_+ extraction.

#include "slekit/linkpattern.hpp"
#include "slekit/purevec.hpp"
#include "slekit/qfield.hpp"
#include "slekit/tensor.hpp"

#include <string>
#include <vector>

namespace slekit {

/// A sequence of visit sides; -1 for a left visit, +1 for a right visit.
struct VisitOrder {
  std::vector<int> signs;

  int size() const { return static_cast<int>(signs.size()); }
  int count_left() const;
  int count_right() const;

  std::string to_string() const;  // e.g. "+-+"
  static VisitOrder parse(const std::string& text);

  bool operator==(const VisitOrder& o) const { return signs == o.signs; }
};

/// All 2^n visit orders of n points, in binary order (- before +).
std::vector<VisitOrder> enumerate_visit_orders(int n);

/// Endpoint bookkeeping of the pattern construction: link j of the pattern is
/// {a[j-1], b[j-1]} before sorting, j = 1..N'+1.
struct VisitPatternData {
  LinkPattern pattern;
  std::vector<int> a;
  std::vector<int> b;
};

VisitPatternData visit_pattern_data(const VisitOrder& omega);

/// The link pattern alpha(omega) in LP_(N'+1).
LinkPattern visit_to_pattern(const VisitOrder& omega);

/// Collapse of the first visit: drops omega_1.
VisitOrder collapse_first(const VisitOrder& omega);

/// Collapse of the m-th and (m+1)-st visits on the given side (which must be
/// successive); drops one of the two equal symbols.
VisitOrder collapse_successive(const VisitOrder& omega, int side, int m);

/// True when the m-th and (m+1)-st visits on the given side are not separated
/// by any visit to the other side.
bool successive_visits(const VisitOrder& omega, int side, int m);

/// Right-counted position of the factor pair the side-(epsilon) rank-m
/// projection acts on, for a fused shape with the given L and R.
int projection_position(int left_count, int right_count, int epsilon, int m);

/// Constants relating the fused projections to singlet-projection chains,
/// computed symbolically by evaluating both routes on a highest-weight vector.
QRat doublet_constant();        // [2]^2 / [3]
QRat triplet_constant();        // [2]^2 / (q^2 + q^-2)
QRat singlet_chain_constant();  // [2]^3 / [3]

/// Doublet vector of a visit order together with its fused tensor vector.
struct BVisitVector {
  VisitOrder order;
  TensorVector vector;  // in M_3^(x)R (x) M_2 (x) M_3^(x)L

  std::string to_json() const;
};

/// Builds the boundary-visit vector: fuses the visited-point factor pairs of
/// v_alpha(omega) into triplets, then extracts the doublet highest-weight
/// component from the top factor. Requires |alpha(omega)| <= table.max_n().
BVisitVector build_bvisit(const VisitOrder& omega, const PureVectorTable& table);

/// One verified condition of the defining system.
struct BVisitCheck {
  std::string id;
  bool ok;
  std::string detail;
};

/// Verifies the full defining system for every visit order with up to
/// max_nprime visits: weight conditions, vanishing singlet projections,
/// triplet projections against collapses, and the first-visit doublet
/// projections with their constants.
std::vector<BVisitCheck> verify_bvisit_system(int max_nprime, const PureVectorTable& table);

/// Kernel of the homogeneous system on the weight-q subspace of the fused
/// product for given (L, R), at a rational specialization; Lemma-style
/// uniqueness means this is 0.
int bvisit_homogeneous_kernel_dim(int left_count, int right_count, const Rational& q);

}  // namespace slekit
