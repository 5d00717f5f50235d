#include "slekit/purevec.hpp"

#include <sstream>
#include <stdexcept>

namespace slekit {

TensorVector theta(int n, int l) {
  if (n < 0) throw std::invalid_argument("theta: negative N");
  TensorShape shape{std::vector<int>(n, 2)};
  if (l < 0 || l > n) return TensorVector(shape);
  TensorVector v = TensorVector::basis(shape, std::vector<int>(n, 0));
  for (int k = 0; k < l; ++k) v = act(Generator::F, v);
  return v;
}

TensorVector rainbow_vector(int n) {
  if (n < 0) throw std::invalid_argument("rainbow_vector: negative N");
  if (n == 0) return TensorVector::scalar(QRat(1));
  QRat front(1);
  QRat base = QRat::q_power(-2) - QRat(1);
  for (int k = 0; k < n; ++k) front = front * qnum(2) / base;
  front = front / qfact(n + 1);

  std::vector<TensorVector> thetas;
  thetas.reserve(n + 1);
  for (int l = 0; l <= n; ++l) thetas.push_back(theta(n, l));

  TensorVector sum(TensorShape{std::vector<int>(2 * n, 2)});
  for (int l = 0; l <= n; ++l) {
    QRat c = QRat::q_power(l * (n - l - 1));
    if (l % 2 != 0) c = -c;
    sum = sum + kron(thetas[l], thetas[n - l]) * c;
  }
  return sum * front;
}

namespace {

// Smallest j with links {l1, j} and {j+1, l2} in alpha, l1 < j < j+1 < l2.
// Exists for every non-rainbow pattern.
int recursion_index(const LinkPattern& alpha) {
  const int n2 = 2 * alpha.size();
  for (int j = 1; j + 1 <= n2; ++j) {
    int p = alpha.partner(j);
    int p2 = alpha.partner(j + 1);
    if (p < j && p2 > j + 1) return j;
  }
  return 0;
}

}  // namespace

PureVectorTable::PureVectorTable(int max_n) : max_n_(max_n) {
  if (max_n < 0 || max_n > 8)
    throw std::invalid_argument("PureVectorTable: max_N must be in [0, 8]");
  entries_.emplace(LinkPattern(), TensorVector::scalar(QRat(1)));
  const QRat two = qnum(2);
  for (int n = 1; n <= max_n; ++n) {
    std::vector<LinkPattern> order = linear_extension(n);
    entries_.emplace(order.front(), rainbow_vector(n));
    for (size_t i = 1; i < order.size(); ++i) {
      const LinkPattern& alpha = order[i];
      int j = recursion_index(alpha);
      if (j == 0) throw std::logic_error("PureVectorTable: no recursion index");
      LinkPattern gamma = tie(alpha, j);
      const TensorVector& vg = entries_.at(gamma);
      TensorVector v = (vg - singlet_project(vg, j)) * two;
      for (const LinkPattern& beta : tie_fiber(alpha, j)) {
        if (beta == alpha || beta == gamma) continue;
        auto it = entries_.find(beta);
        if (it == entries_.end())
          throw std::logic_error("PureVectorTable: fiber member not yet computed");
        v = v - it->second;
      }
      entries_.emplace(alpha, std::move(v));
    }
  }
}

const TensorVector& PureVectorTable::at(const LinkPattern& alpha) const {
  auto it = entries_.find(alpha);
  if (it == entries_.end()) throw std::out_of_range("PureVectorTable: pattern not in table");
  return it->second;
}

bool PureVectorTable::has(const LinkPattern& alpha) const {
  return entries_.count(alpha) > 0;
}

QRat dual_functional(const LinkPattern& alpha, const TensorVector& v) {
  return dual_functional_along(first_allowable_ordering(alpha), v);
}

QRat dual_functional_along(const std::vector<RemovalStep>& ordering, const TensorVector& v) {
  TensorVector w = v;
  for (const auto& step : ordering) w = singlet_project_hat(w, step.position);
  if (w.shape().factors() != 0)
    throw std::invalid_argument("dual_functional: vector size does not match pattern");
  return w.coeff({});
}

TensorVector symmetric_vector(int n, const PureVectorTable& table) {
  if (n > table.max_n()) throw std::invalid_argument("symmetric_vector: N exceeds table");
  if (n == 0) return TensorVector::scalar(QRat(1));
  TensorVector sum(TensorShape{std::vector<int>(2 * n, 2)});
  for (const auto& alpha : enumerate_patterns(n)) sum = sum + table.at(alpha);
  return sum;
}

bool check_defining_system(const PureVectorTable& table, int n, std::string* failure) {
  auto fail = [&](const LinkPattern& alpha, const std::string& what) {
    if (failure) {
      std::ostringstream out;
      out << "pattern " << alpha.to_string() << ": " << what;
      *failure = out.str();
    }
    return false;
  };
  for (const auto& alpha : enumerate_patterns(n)) {
    const TensorVector& v = table.at(alpha);
    if (act(Generator::K, v) != v) return fail(alpha, "K.v != v");
    if (!act(Generator::E, v).is_zero()) return fail(alpha, "E.v != 0");
    for (int j = 1; j <= 2 * n - 1; ++j) {
      TensorVector p = singlet_project_hat(v, j);
      if (alpha.contains(j, j + 1)) {
        if (p != table.at(remove_link(alpha, j)))
          return fail(alpha, "projection at " + std::to_string(j) + " misses removal target");
      } else if (!p.is_zero()) {
        return fail(alpha, "projection at " + std::to_string(j) + " nonzero");
      }
    }
  }
  return true;
}

}  // namespace slekit
