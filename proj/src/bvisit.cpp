#include "slekit/bvisit.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace slekit {

using json = nlohmann::json;

int VisitOrder::count_left() const {
  return static_cast<int>(std::count(signs.begin(), signs.end(), -1));
}

int VisitOrder::count_right() const {
  return static_cast<int>(std::count(signs.begin(), signs.end(), +1));
}

std::string VisitOrder::to_string() const {
  std::string s;
  for (int v : signs) s += (v > 0 ? '+' : '-');
  return s;
}

VisitOrder VisitOrder::parse(const std::string& text) {
  VisitOrder omega;
  for (char c : text) {
    if (c == '+')
      omega.signs.push_back(+1);
    else if (c == '-')
      omega.signs.push_back(-1);
    else
      throw std::invalid_argument("VisitOrder: expected only + and - symbols");
  }
  return omega;
}

std::vector<VisitOrder> enumerate_visit_orders(int n) {
  std::vector<VisitOrder> out;
  out.reserve(1u << n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    VisitOrder omega;
    omega.signs.reserve(n);
    for (int j = 0; j < n; ++j) omega.signs.push_back((mask >> j) & 1 ? +1 : -1);
    out.push_back(std::move(omega));
  }
  return out;
}

VisitPatternData visit_pattern_data(const VisitOrder& omega) {
  const int nprime = omega.size();
  const int n = nprime + 1;
  const int left = omega.count_left();
  VisitPatternData data;
  data.a.resize(n);
  data.b.resize(n);
  data.a[0] = 2 * left + 1;
  int lo = data.a[0];
  int hi = data.a[0];
  for (int j = 1; j <= n; ++j) {
    if (j > 1) {
      data.a[j - 1] = data.b[j - 2] + omega.signs[j - 2];
      lo = std::min(lo, data.a[j - 1]);
      hi = std::max(hi, data.a[j - 1]);
    }
    if (j == n)
      data.b[j - 1] = 2 * n;
    else if (j == 1)
      data.b[0] = data.a[0] + omega.signs[0];
    else
      data.b[j - 1] = omega.signs[j - 1] > 0 ? hi + 1 : lo - 1;
  }
  std::vector<Link> links;
  links.reserve(n);
  for (int j = 0; j < n; ++j)
    links.emplace_back(std::min(data.a[j], data.b[j]), std::max(data.a[j], data.b[j]));
  data.pattern = LinkPattern(std::move(links));
  return data;
}

LinkPattern visit_to_pattern(const VisitOrder& omega) {
  return visit_pattern_data(omega).pattern;
}

VisitOrder collapse_first(const VisitOrder& omega) {
  if (omega.size() == 0) throw std::invalid_argument("collapse_first: empty order");
  VisitOrder out;
  out.signs.assign(omega.signs.begin() + 1, omega.signs.end());
  return out;
}

namespace {

// Index (1-based) of the m-th symbol equal to `side`, or 0 if absent.
int side_index(const VisitOrder& omega, int side, int m) {
  int count = 0;
  for (int j = 0; j < omega.size(); ++j) {
    if (omega.signs[j] == side && ++count == m) return j + 1;
  }
  return 0;
}

}  // namespace

bool successive_visits(const VisitOrder& omega, int side, int m) {
  int j = side_index(omega, side, m);
  return j > 0 && j < omega.size() && omega.signs[j] == side;
}

VisitOrder collapse_successive(const VisitOrder& omega, int side, int m) {
  if (!successive_visits(omega, side, m))
    throw std::invalid_argument("collapse_successive: visits are not successive");
  int j = side_index(omega, side, m);
  VisitOrder out;
  out.signs = omega.signs;
  out.signs.erase(out.signs.begin() + (j - 1));
  return out;
}

int projection_position(int left_count, int right_count, int epsilon, int m) {
  if (epsilon > 0) {
    if (m < 1 || m >= right_count)
      throw std::invalid_argument("projection_position: rank out of range");
    return left_count + 1 + m;
  }
  if (m < 1 || m >= left_count)
    throw std::invalid_argument("projection_position: rank out of range");
  return left_count - m;
}

QRat doublet_constant() {
  // Both routes send tau_0^(2;2,3) to multiples of e_0; the fused projection
  // is normalized to give e_0 itself.
  TensorVector tau = cg_highest_weight(2, 2, 3);
  TensorVector w = singlet_project_hat(embed_triplet(tau, 2), 1);
  QRat c = w.coeff({0});
  if (c.is_zero()) throw std::logic_error("doublet_constant: chain vanishes");
  return c.inverse();
}

QRat triplet_constant() {
  TensorVector tau = cg_highest_weight(3, 3, 3);
  TensorVector w = embed_triplet(embed_triplet(tau, 2), 1);
  w = singlet_project_hat(w, 2);
  w = general_project(3, 2, 2, w, 1);
  QRat c = w.coeff({0});
  if (c.is_zero()) throw std::logic_error("triplet_constant: chain vanishes");
  return c.inverse();
}

QRat singlet_chain_constant() {
  TensorVector tau = cg_highest_weight(1, 3, 3);
  TensorVector w = embed_triplet(embed_triplet(tau, 2), 1);
  w = singlet_project_hat(w, 2);
  w = singlet_project_hat(w, 1);
  QRat c = w.coeff({});
  if (c.is_zero()) throw std::logic_error("singlet_chain_constant: chain vanishes");
  return c.inverse();
}

std::string BVisitVector::to_json() const {
  json j = json::parse(vector.to_json());
  j["order"] = order.to_string();
  return j.dump();
}

namespace {

// Splits off the factor at `position`, returning the slice vectors indexed by
// that factor's basis label.
std::vector<TensorVector> factor_slices(const TensorVector& v, int position) {
  const TensorShape& shape = v.shape();
  int dim = shape.dims[position - 1];
  TensorShape rest;
  rest.dims = shape.dims;
  rest.dims.erase(rest.dims.begin() + (position - 1));
  std::vector<TensorVector> slices(dim, TensorVector(rest));
  for (const auto& [idx, c] : v.terms()) {
    std::vector<int> jdx = idx;
    int l = jdx[position - 1];
    jdx.erase(jdx.begin() + (position - 1));
    slices[l].add_term(jdx, c);
  }
  return slices;
}

// Fuses the visited-point M_2 pairs of a vector in M_2^(x)2N into triplets.
TensorVector fuse_visit_pairs(const TensorVector& v, int left_count, int right_count) {
  TensorVector w = v;
  // Highest pairs first so lower positions stay valid.
  for (int m = right_count; m >= 1; --m)
    w = general_project(3, 2, 2, w, 2 * left_count + 2 * m);
  for (int m = left_count; m >= 1; --m)
    w = general_project(3, 2, 2, w, 2 * m - 1);
  return w;
}

}  // namespace

BVisitVector build_bvisit(const VisitOrder& omega, const PureVectorTable& table) {
  const int left = omega.count_left();
  const int right = omega.count_right();
  LinkPattern alpha = visit_to_pattern(omega);
  if (alpha.size() > table.max_n())
    throw std::invalid_argument("build_bvisit: pattern size exceeds table");

  TensorVector fused = fuse_visit_pairs(table.at(alpha), left, right);

  // Doublet extraction from the top factor: the fused vector decomposes as
  // -q e_0 (x) F.tau + e_1 (x) tau with tau the doublet highest-weight vector.
  int top = left + right + 2;
  std::vector<TensorVector> slices = factor_slices(fused, top);
  const TensorVector& tau = slices[1];
  TensorVector residual = slices[0] + act(Generator::F, tau) * QRat::q_power(1);
  if (!residual.is_zero()) throw std::logic_error("build_bvisit: doublet extraction failed");
  return BVisitVector{omega, tau};
}

namespace {

void push_check(std::vector<BVisitCheck>& out, const std::string& id, bool ok,
                const std::string& detail) {
  out.push_back({id, ok, detail});
}

}  // namespace

std::vector<BVisitCheck> verify_bvisit_system(int max_nprime, const PureVectorTable& table) {
  std::vector<BVisitCheck> checks;
  const QRat c2 = doublet_constant();
  const QRat c3 = triplet_constant();

  std::map<std::vector<int>, TensorVector> built;
  for (int nprime = 0; nprime <= max_nprime; ++nprime) {
    for (const auto& omega : enumerate_visit_orders(nprime)) {
      BVisitVector bv = build_bvisit(omega, table);
      built.emplace(omega.signs, bv.vector);
      const TensorVector& v = bv.vector;
      const std::string tag = "omega=" + (nprime ? omega.to_string() : std::string("()"));
      const int left = omega.count_left();
      const int right = omega.count_right();

      push_check(checks, tag + " cartan", act(Generator::K, v) == v * QRat::q_power(1),
                 "K eigenvalue q");
      push_check(checks, tag + " raising", act(Generator::E, v).is_zero(), "E annihilates");

      for (int eps : {+1, -1}) {
        int count = eps > 0 ? right : left;
        const char side = eps > 0 ? '+' : '-';
        for (int m = 1; m < count; ++m) {
          int pos = projection_position(left, right, eps, m);
          TensorVector p1 = general_project(1, 3, 3, v, pos);
          push_check(checks,
                     tag + " singlet " + side + std::to_string(m),
                     p1.is_zero(), "vanishing singlet projection");
          TensorVector p3 = general_project(3, 3, 3, v, pos);
          if (successive_visits(omega, eps, m)) {
            const TensorVector& target = built.at(collapse_successive(omega, eps, m).signs);
            push_check(checks, tag + " triplet " + side + std::to_string(m),
                       p3 == target * c3, "collapse of successive visits");
          } else {
            push_check(checks, tag + " triplet " + side + std::to_string(m), p3.is_zero(),
                       "non-successive visits project to zero");
          }
        }
      }

      if (nprime > 0) {
        const TensorVector& target = built.at(collapse_first(omega).signs);
        if (right > 0) {
          TensorVector p = general_project(2, 2, 3, v, left + 1);
          bool ok = omega.signs[0] > 0 ? (p == target * c2) : p.is_zero();
          push_check(checks, tag + " doublet +", ok, "first-visit collapse on the right");
        }
        if (left > 0) {
          TensorVector p = general_project(2, 3, 2, v, left);
          bool ok = omega.signs[0] < 0 ? (p == target * c2) : p.is_zero();
          push_check(checks, tag + " doublet -", ok, "first-visit collapse on the left");
        }
      }
    }
  }
  return checks;
}

int bvisit_homogeneous_kernel_dim(int left_count, int right_count, const Rational& q) {
  std::vector<int> dims(left_count, 3);
  dims.push_back(2);
  dims.insert(dims.end(), right_count, 3);
  TensorShape shape{dims};

  std::vector<TensorVector> basis;
  for (auto& idx : weight_basis(shape, 1)) basis.push_back(TensorVector::basis(shape, idx));

  std::vector<std::function<TensorVector(const TensorVector&)>> ops;
  ops.emplace_back([](const TensorVector& v) { return act(Generator::E, v); });
  for (int eps : {+1, -1}) {
    int count = eps > 0 ? right_count : left_count;
    for (int m = 1; m < count; ++m) {
      int pos = projection_position(left_count, right_count, eps, m);
      ops.emplace_back(
          [pos](const TensorVector& v) { return general_project(1, 3, 3, v, pos); });
      ops.emplace_back(
          [pos](const TensorVector& v) { return general_project(3, 3, 3, v, pos); });
    }
  }
  if (right_count > 0) {
    int pos = left_count + 1;
    ops.emplace_back(
        [pos](const TensorVector& v) { return general_project(2, 2, 3, v, pos); });
  }
  if (left_count > 0) {
    int pos = left_count;
    ops.emplace_back(
        [pos](const TensorVector& v) { return general_project(2, 3, 2, v, pos); });
  }
  return kernel_dim_at(basis, ops, q);
}

}  // namespace slekit
