#pragma once

// Irreducible representations M_d of the q-deformed sl2, generator actions on
// tensor products, Clebsch-Gordan highest-weight vectors, and the projection
// calculus between adjacent factors.
//
// Factor positions count from the RIGHT of the displayed tensor product
// M_{d_n} (x) ... (x) M_{d_1}: position j refers to M_{d_j}, and a stored index
// sequence (l_1, ..., l_n) has l_1 = basis label of the rightmost factor.

#include "slekit/qfield.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace slekit {

/// Factor dimensions (d_1, ..., d_n), position 1 = rightmost factor.
struct TensorShape {
  std::vector<int> dims;

  int factors() const { return static_cast<int>(dims.size()); }
  bool operator==(const TensorShape& o) const { return dims == o.dims; }
  bool operator!=(const TensorShape& o) const { return dims != o.dims; }
};

enum class Generator { E, F, K, Kinv };

/// Sparse vector in M_{d_n} (x) ... (x) M_{d_1} with QRat coefficients.
/// Zero coefficients are never stored; term keys are index sequences
/// (l_1, ..., l_n) with 0 <= l_j <= d_j - 1.
class TensorVector {
 public:
  using TermMap = std::map<std::vector<int>, QRat>;

  TensorVector() = default;
  explicit TensorVector(TensorShape shape) : shape_(std::move(shape)) {}

  /// The scalar c in the empty tensor product (0 factors).
  static TensorVector scalar(QRat c);

  /// Basis tensor e_{l_n} (x) ... (x) e_{l_1} with coefficient 1.
  static TensorVector basis(TensorShape shape, std::vector<int> idx);

  const TensorShape& shape() const { return shape_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  /// Coefficient of a basis tensor (zero if absent).
  QRat coeff(const std::vector<int>& idx) const;

  void add_term(const std::vector<int>& idx, const QRat& c);

  TensorVector operator+(const TensorVector& o) const;
  TensorVector operator-(const TensorVector& o) const;
  TensorVector operator*(const QRat& c) const;
  TensorVector operator-() const;
  bool operator==(const TensorVector& o) const;
  bool operator!=(const TensorVector& o) const { return !(*this == o); }

  std::string to_json() const;
  static TensorVector from_json(const std::string& text);

 private:
  TensorShape shape_;
  TermMap terms_;
};

/// Displayed tensor product left (x) right; the right operand occupies the
/// low (rightmost) factor positions of the result.
TensorVector kron(const TensorVector& left, const TensorVector& right);

/// Action of a generator through the iterated coproduct
/// Delta(E) = E(x)K + 1(x)E, Delta(F) = F(x)1 + K^-1(x)F, Delta(K) = K(x)K,
/// with legs read in display order (leftmost leg acts on the leftmost factor).
TensorVector act(Generator g, const TensorVector& v);

/// Highest weight vector tau_0^(d; d1, d2) in M_{d2} (x) M_{d1}, where
/// d = d1 + d2 - 1 - 2m for some m in [0, min(d1,d2)-1]. Satisfies E.tau = 0
/// and K.tau = q^(d-1) tau. Throws on incompatible (d, d1, d2).
TensorVector cg_highest_weight(int d, int d1, int d2);

/// Singlet projection pi-hat_j: contracts M_2 factors j and j+1 to a scalar,
/// returning a vector with two fewer factors. Both factors must have dim 2.
TensorVector singlet_project_hat(const TensorVector& v, int j);

/// Inserts the singlet vector s at factor positions j, j+1, the section of
/// singlet_project_hat: pi_j(v) = insert_singlet(pi-hat_j(v), j).
TensorVector insert_singlet(const TensorVector& v, int j);

/// Projection endomorphism pi_j onto the singlet component of factors j, j+1.
TensorVector singlet_project(const TensorVector& v, int j);

/// Projection onto the Clebsch-Gordan component M_d of the two factors at
/// (position, position+1), identified with M_d via tau_l -> e_l^(d).
/// The factor at `position` must have dimension d1 and the one above it d2;
/// computed by exact linear solve against the full CG basis F^l.tau_0^(d';...).
TensorVector general_project(int d, int d1, int d2, const TensorVector& v, int position);

/// Embedding iota^(3): replaces the M_3 factor at `position` by M_2 (x) M_2
/// via e_l^(3) -> tau_l^(3;2,2); section of general_project(3,2,2,...).
TensorVector embed_triplet(const TensorVector& v, int position);

/// K-eigenvalue exponent of a basis index: sum of (d_j - 1 - 2 l_j).
int weight_exponent(const TensorShape& shape, const std::vector<int>& idx);

/// All basis index sequences of the shape with the given K-weight exponent.
std::vector<std::vector<int>> weight_basis(const TensorShape& shape, int weight);

/// Kernel dimension of the stacked linear constraints {op_k(v) = 0} on the
/// span of `basis`, evaluated at an exact rational specialization of q.
int kernel_dim_at(const std::vector<TensorVector>& basis,
                  const std::vector<std::function<TensorVector(const TensorVector&)>>& ops,
                  const Rational& q);

/// Rank of the span of `vectors` at a rational specialization of q.
int rank_at(const std::vector<TensorVector>& vectors, const Rational& q);

/// Dimension of {v in M_2^(x)n : E.v = 0, K.v = v}, computed as a kernel rank
/// at two generic rational specializations of q (which must agree).
int trivial_subspace_dim(int n);

/// The two generic specialization points used for all rank computations.
Rational generic_point_a();
Rational generic_point_b();

}  // namespace slekit
