#pragma once

// Pure partition vectors v_alpha in M_2^(x)2N: the rainbow closed form, the
// downward tying recursion over the walk partial order, the dual functionals
// psi_alpha, and the symmetric vectors v^(N).

#include "slekit/linkpattern.hpp"
#include "slekit/qfield.hpp"
#include "slekit/tensor.hpp"

#include <map>
#include <string>

namespace slekit {

/// theta_l^(N) = F^l.(e_0 (x) ... (x) e_0) in M_2^(x)N; zero for l outside
/// [0, N].
TensorVector theta(int n, int l);

/// Closed-form solution for the maximally nested pattern:
/// v = (q^-2 - 1)^-N ([2]^N / [N+1]!) sum_l (-1)^l q^(l(N-l-1))
///     theta_l^(N) (x) theta_(N-l)^(N).
TensorVector rainbow_vector(int n);

/// Memoized table of all v_alpha for |alpha| <= max_N, built by descending
/// the linear extension within each N.
class PureVectorTable {
 public:
  explicit PureVectorTable(int max_n);

  int max_n() const { return max_n_; }
  const TensorVector& at(const LinkPattern& alpha) const;
  bool has(const LinkPattern& alpha) const;
  const std::map<LinkPattern, TensorVector>& entries() const { return entries_; }

 private:
  int max_n_;
  std::map<LinkPattern, TensorVector> entries_;
};

/// psi_alpha(v): iterated singlet projections along an allowable ordering of
/// alpha's links (the value is independent of the ordering chosen).
QRat dual_functional(const LinkPattern& alpha, const TensorVector& v);

/// Same, along an explicitly given allowable ordering.
QRat dual_functional_along(const std::vector<RemovalStep>& ordering, const TensorVector& v);

/// v^(N) = sum over all alpha in LP_N of v_alpha.
TensorVector symmetric_vector(int n, const PureVectorTable& table);

/// Checks the full defining system for every pattern of size n: K.v = v,
/// E.v = 0, and the projection dichotomy against the table's smaller entries.
/// On failure returns false and describes the first violation.
bool check_defining_system(const PureVectorTable& table, int n, std::string* failure = nullptr);

}  // namespace slekit
