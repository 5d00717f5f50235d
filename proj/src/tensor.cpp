#include "slekit/tensor.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace slekit {

using json = nlohmann::json;

namespace {

const QRat& qnum_cached(int m) {
  static std::mutex mu;
  static std::map<int, QRat> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, qnum(m)).first;
  return it->second;
}

void check_index(const TensorShape& shape, const std::vector<int>& idx) {
  if (static_cast<int>(idx.size()) != shape.factors())
    throw std::invalid_argument("TensorVector: index length does not match shape");
  for (size_t j = 0; j < idx.size(); ++j)
    if (idx[j] < 0 || idx[j] >= shape.dims[j])
      throw std::invalid_argument("TensorVector: index out of range for factor");
}

}  // namespace

TensorVector TensorVector::scalar(QRat c) {
  TensorVector v;
  if (!c.is_zero()) v.terms_.emplace(std::vector<int>{}, std::move(c));
  return v;
}

TensorVector TensorVector::basis(TensorShape shape, std::vector<int> idx) {
  check_index(shape, idx);
  TensorVector v(std::move(shape));
  v.terms_.emplace(std::move(idx), QRat(1));
  return v;
}

QRat TensorVector::coeff(const std::vector<int>& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? QRat() : it->second;
}

void TensorVector::add_term(const std::vector<int>& idx, const QRat& c) {
  if (c.is_zero()) return;
  check_index(shape_, idx);
  auto [it, inserted] = terms_.emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorVector TensorVector::operator+(const TensorVector& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (shape_ != o.shape_) throw std::invalid_argument("TensorVector: shape mismatch in +");
  TensorVector r(*this);
  for (const auto& [idx, c] : o.terms_) {
    auto [it, inserted] = r.terms_.emplace(idx, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) r.terms_.erase(it);
    }
  }
  return r;
}

TensorVector TensorVector::operator-(const TensorVector& o) const { return *this + (-o); }

TensorVector TensorVector::operator*(const QRat& c) const {
  if (c.is_zero()) return TensorVector(shape_);
  TensorVector r(shape_);
  for (const auto& [idx, v] : terms_) r.terms_.emplace(idx, v * c);
  return r;
}

TensorVector TensorVector::operator-() const {
  TensorVector r(shape_);
  for (const auto& [idx, v] : terms_) r.terms_.emplace(idx, -v);
  return r;
}

bool TensorVector::operator==(const TensorVector& o) const {
  if (!is_zero() && !o.is_zero() && shape_ != o.shape_) return false;
  if (terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (it->first != jt->first || !(it->second == jt->second)) return false;
  }
  return true;
}

std::string TensorVector::to_json() const {
  json j;
  j["dims"] = shape_.dims;
  json arr = json::array();
  for (const auto& [idx, c] : terms_) {
    json t;
    t["idx"] = idx;
    t["coef"] = json::parse(c.to_json());
    arr.push_back(std::move(t));
  }
  j["terms"] = std::move(arr);
  return j.dump();
}

TensorVector TensorVector::from_json(const std::string& text) {
  json j = json::parse(text);
  TensorVector v(TensorShape{j.at("dims").get<std::vector<int>>()});
  for (const auto& t : j.at("terms"))
    v.add_term(t.at("idx").get<std::vector<int>>(), QRat::from_json(t.at("coef").dump()));
  return v;
}

TensorVector kron(const TensorVector& left, const TensorVector& right) {
  TensorShape shape;
  shape.dims = right.shape().dims;
  shape.dims.insert(shape.dims.end(), left.shape().dims.begin(), left.shape().dims.end());
  TensorVector r(std::move(shape));
  for (const auto& [li, lc] : left.terms()) {
    for (const auto& [ri, rc] : right.terms()) {
      std::vector<int> idx = ri;
      idx.insert(idx.end(), li.begin(), li.end());
      r.add_term(idx, lc * rc);
    }
  }
  return r;
}

TensorVector act(Generator g, const TensorVector& v) {
  const TensorShape& shape = v.shape();
  const int n = shape.factors();
  TensorVector r(shape);
  for (const auto& [idx, c] : v.terms()) {
    switch (g) {
      case Generator::K:
      case Generator::Kinv: {
        int e = weight_exponent(shape, idx);
        if (g == Generator::Kinv) e = -e;
        r.add_term(idx, c * QRat::q_power(e));
        break;
      }
      case Generator::E: {
        // E on factor i picks up K-eigenvalues of all factors to its right.
        int right_weight = 0;
        for (int i = 0; i < n; ++i) {
          int d = shape.dims[i];
          int l = idx[i];
          if (l > 0) {
            QRat coef = c * QRat::q_power(right_weight) * qnum_cached(l) * qnum_cached(d - l);
            std::vector<int> jdx = idx;
            --jdx[i];
            r.add_term(jdx, coef);
          }
          right_weight += d - 1 - 2 * l;
        }
        break;
      }
      case Generator::F: {
        // F on factor i picks up K^-1-eigenvalues of all factors to its left.
        std::vector<int> prefix(n + 1, 0);  // prefix[i] = weight of factors > i
        for (int i = n - 1; i >= 0; --i)
          prefix[i] = prefix[i + 1] + shape.dims[i] - 1 - 2 * idx[i];
        for (int i = 0; i < n; ++i) {
          int d = shape.dims[i];
          int l = idx[i];
          if (l < d - 1) {
            QRat coef = c * QRat::q_power(-prefix[i + 1]);
            std::vector<int> jdx = idx;
            ++jdx[i];
            r.add_term(jdx, coef);
          }
        }
        break;
      }
    }
  }
  return r;
}

TensorVector cg_highest_weight(int d, int d1, int d2) {
  if (d1 < 1 || d2 < 1) throw std::invalid_argument("cg_highest_weight: bad dimensions");
  int twice_m = d1 + d2 - 1 - d;
  if (twice_m < 0 || twice_m % 2 != 0)
    throw std::invalid_argument("cg_highest_weight: incompatible (d, d1, d2)");
  int m = twice_m / 2;
  if (m > std::min(d1, d2) - 1)
    throw std::invalid_argument("cg_highest_weight: incompatible (d, d1, d2)");

  QRat qm1 = QRat::q_power(1) - QRat::q_power(-1);
  QRat denom_pow(1);
  for (int k = 0; k < m; ++k) denom_pow *= qm1;

  TensorVector tau(TensorShape{{d1, d2}});
  for (int l1 = std::max(0, m - (d2 - 1)); l1 <= std::min(m, d1 - 1); ++l1) {
    int l2 = m - l1;
    QRat num = qfact(d1 - 1 - l1) * qfact(d2 - 1 - l2);
    QRat den = qfact(l1) * qfact(d1 - 1) * qfact(l2) * qfact(d2 - 1);
    QRat coef = num / den * QRat::q_power(l1 * (d1 - l1)) / denom_pow;
    if (l1 % 2 != 0) coef = -coef;
    tau.add_term({l1, l2}, coef);
  }
  return tau;
}

TensorVector singlet_project_hat(const TensorVector& v, int j) {
  const TensorShape& shape = v.shape();
  const int n = shape.factors();
  if (j < 1 || j + 1 > n) throw std::invalid_argument("singlet_project_hat: bad position");
  if (shape.dims[j - 1] != 2 || shape.dims[j] != 2)
    throw std::invalid_argument("singlet_project_hat: factors must have dimension 2");

  // pi-hat on e_{l'} (x) e_l, where l' is factor j+1 and l is factor j.
  const QRat two = qnum_cached(2);
  const QRat val01 = (QRat::q_power(-1) - QRat::q_power(1)) / two;  // e_0 (x) e_1
  const QRat val10 = (QRat(1) - QRat::q_power(-2)) / two;           // e_1 (x) e_0

  TensorShape out_shape;
  out_shape.dims = shape.dims;
  out_shape.dims.erase(out_shape.dims.begin() + (j - 1), out_shape.dims.begin() + (j + 1));
  TensorVector r(std::move(out_shape));
  for (const auto& [idx, c] : v.terms()) {
    int l = idx[j - 1];
    int lp = idx[j];
    if (l == lp) continue;
    const QRat& val = (lp == 0) ? val01 : val10;
    std::vector<int> jdx = idx;
    jdx.erase(jdx.begin() + (j - 1), jdx.begin() + (j + 1));
    r.add_term(jdx, c * val);
  }
  return r;
}

TensorVector insert_singlet(const TensorVector& v, int j) {
  const TensorShape& shape = v.shape();
  const int n = shape.factors();
  if (j < 1 || j > n + 1) throw std::invalid_argument("insert_singlet: bad position");

  // s = (e_1 (x) e_0 - q e_0 (x) e_1) / (q - q^-1), displayed left factor at j+1.
  QRat inv = (QRat::q_power(1) - QRat::q_power(-1)).inverse();
  QRat c10 = inv;                        // (l_j, l_{j+1}) = (0, 1)
  QRat c01 = -(QRat::q_power(1) * inv);  // (l_j, l_{j+1}) = (1, 0)

  TensorShape out_shape;
  out_shape.dims = shape.dims;
  out_shape.dims.insert(out_shape.dims.begin() + (j - 1), {2, 2});
  TensorVector r(std::move(out_shape));
  for (const auto& [idx, c] : v.terms()) {
    std::vector<int> a = idx;
    a.insert(a.begin() + (j - 1), {0, 1});
    r.add_term(a, c * c10);
    std::vector<int> b = idx;
    b.insert(b.begin() + (j - 1), {1, 0});
    r.add_term(b, c * c01);
  }
  return r;
}

TensorVector singlet_project(const TensorVector& v, int j) {
  return insert_singlet(singlet_project_hat(v, j), j);
}

namespace {

// Cached inverse of the CG change-of-basis matrix for M_{d2} (x) M_{d1}.
// Columns are F^l.tau_0^(d';d1,d2) over admissible d', flattened by
// idx = l1 + d1 * l2; rows of the inverse give CG coordinates.
struct CgSolver {
  std::vector<std::pair<int, int>> layout;       // (d', l) per column
  std::vector<std::vector<QRat>> inverse;        // (d1 d2) x (d1 d2)
};

const CgSolver& cg_solver(int d1, int d2) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, CgSolver> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(d1, d2);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const int dim = d1 * d2;
  CgSolver solver;
  std::vector<std::vector<QRat>> mat(dim, std::vector<QRat>(dim));
  int col = 0;
  for (int m = 0; m <= std::min(d1, d2) - 1; ++m) {
    int dprime = d1 + d2 - 1 - 2 * m;
    TensorVector tau = cg_highest_weight(dprime, d1, d2);
    for (int l = 0; l < dprime; ++l) {
      for (const auto& [idx, c] : tau.terms()) mat[idx[0] + d1 * idx[1]][col] = c;
      solver.layout.emplace_back(dprime, l);
      ++col;
      if (l + 1 < dprime) tau = act(Generator::F, tau);
    }
  }
  if (col != dim) throw std::logic_error("cg_solver: CG basis does not fill the space");

  // Gauss-Jordan inversion over the exact scalar field.
  std::vector<std::vector<QRat>> aug(dim, std::vector<QRat>(2 * dim));
  for (int i = 0; i < dim; ++i) {
    for (int k = 0; k < dim; ++k) aug[i][k] = mat[i][k];
    aug[i][dim + i] = QRat(1);
  }
  for (int c2 = 0; c2 < dim; ++c2) {
    int pivot = -1;
    for (int r = c2; r < dim; ++r)
      if (!aug[r][c2].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::logic_error("cg_solver: CG basis fails to span");
    std::swap(aug[c2], aug[pivot]);
    QRat inv = aug[c2][c2].inverse();
    for (int k = c2; k < 2 * dim; ++k) aug[c2][k] *= inv;
    for (int r = 0; r < dim; ++r) {
      if (r == c2 || aug[r][c2].is_zero()) continue;
      QRat f = aug[r][c2];
      for (int k = c2; k < 2 * dim; ++k) aug[r][k] -= f * aug[c2][k];
    }
  }
  solver.inverse.assign(dim, std::vector<QRat>(dim));
  for (int i = 0; i < dim; ++i)
    for (int k = 0; k < dim; ++k) solver.inverse[i][k] = aug[i][dim + k];
  return cache.emplace(key, std::move(solver)).first->second;
}

}  // namespace

TensorVector general_project(int d, int d1, int d2, const TensorVector& v, int position) {
  const TensorShape& shape = v.shape();
  const int n = shape.factors();
  if (position < 1 || position + 1 > n)
    throw std::invalid_argument("general_project: bad position");
  if (shape.dims[position - 1] != d1 || shape.dims[position] != d2)
    throw std::invalid_argument("general_project: factor dimensions do not match kind");
  const CgSolver& solver = cg_solver(d1, d2);
  const int dim = d1 * d2;

  TensorShape out_shape;
  out_shape.dims = shape.dims;
  out_shape.dims.erase(out_shape.dims.begin() + (position - 1),
                       out_shape.dims.begin() + (position + 1));
  if (d > 1) out_shape.dims.insert(out_shape.dims.begin() + (position - 1), d);
  TensorVector r(std::move(out_shape));

  // Group terms by the untouched factor indices and solve each group in the
  // CG basis of the two projected factors.
  std::map<std::vector<int>, std::vector<QRat>> groups;
  for (const auto& [idx, c] : v.terms()) {
    std::vector<int> outer = idx;
    int l1 = idx[position - 1];
    int l2 = idx[position];
    outer.erase(outer.begin() + (position - 1), outer.begin() + (position + 1));
    auto [it, inserted] = groups.emplace(std::move(outer), std::vector<QRat>());
    if (inserted) it->second.assign(dim, QRat());
    it->second[l1 + d1 * l2] = c;
  }
  for (const auto& [outer, y] : groups) {
    for (int row = 0; row < dim; ++row) {
      auto [dprime, l] = solver.layout[row];
      if (dprime != d) continue;
      QRat coord;
      for (int k = 0; k < dim; ++k) {
        if (y[k].is_zero()) continue;
        coord += solver.inverse[row][k] * y[k];
      }
      if (coord.is_zero()) continue;
      std::vector<int> jdx = outer;
      if (d > 1) jdx.insert(jdx.begin() + (position - 1), l);
      r.add_term(jdx, coord);
    }
  }
  return r;
}

TensorVector embed_triplet(const TensorVector& v, int position) {
  const TensorShape& shape = v.shape();
  const int n = shape.factors();
  if (position < 1 || position > n) throw std::invalid_argument("embed_triplet: bad position");
  if (shape.dims[position - 1] != 3)
    throw std::invalid_argument("embed_triplet: factor must have dimension 3");

  // tau_l^(3;2,2) expanded in (l_pos, l_pos+1) coordinates.
  TensorShape out_shape;
  out_shape.dims = shape.dims;
  out_shape.dims[position - 1] = 2;
  out_shape.dims.insert(out_shape.dims.begin() + position, 2);
  TensorVector r(std::move(out_shape));
  for (const auto& [idx, c] : v.terms()) {
    int l = idx[position - 1];
    auto emit = [&](int low, int high, const QRat& f) {
      std::vector<int> jdx = idx;
      jdx[position - 1] = low;
      jdx.insert(jdx.begin() + position, high);
      r.add_term(jdx, c * f);
    };
    switch (l) {
      case 0:
        emit(0, 0, QRat(1));
        break;
      case 1:
        emit(1, 0, QRat::q_power(-1));
        emit(0, 1, QRat(1));
        break;
      case 2:
        emit(1, 1, qnum_cached(2));
        break;
    }
  }
  return r;
}

int weight_exponent(const TensorShape& shape, const std::vector<int>& idx) {
  int w = 0;
  for (size_t j = 0; j < idx.size(); ++j) w += shape.dims[j] - 1 - 2 * idx[j];
  return w;
}

std::vector<std::vector<int>> weight_basis(const TensorShape& shape, int weight) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(shape.factors(), 0);
  while (true) {
    if (weight_exponent(shape, idx) == weight) out.push_back(idx);
    int j = 0;
    for (; j < shape.factors(); ++j) {
      if (idx[j] + 1 < shape.dims[j]) {
        ++idx[j];
        break;
      }
      idx[j] = 0;
    }
    if (j == shape.factors()) break;
  }
  return out;
}

namespace {

int rational_matrix_rank(std::vector<std::vector<Rational>>& m) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    Rational inv = 1 / m[rank][c];
    for (int k = c; k < cols; ++k) {
      m[rank][k] *= inv;
      m[rank][k].canonicalize();
    }
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (int k = c; k < cols; ++k) {
        m[r][k] -= f * m[rank][k];
        m[r][k].canonicalize();
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int kernel_dim_at(const std::vector<TensorVector>& basis,
                  const std::vector<std::function<TensorVector(const TensorVector&)>>& ops,
                  const Rational& q) {
  const int n = static_cast<int>(basis.size());
  std::vector<std::vector<Rational>> rows;
  for (const auto& op : ops) {
    std::vector<TensorVector> images;
    images.reserve(n);
    std::map<std::vector<int>, int> row_of;
    for (const auto& b : basis) {
      images.push_back(op(b));
      for (const auto& [idx, c] : images.back().terms()) row_of.emplace(idx, 0);
    }
    int base = static_cast<int>(rows.size());
    int r = 0;
    for (auto& [idx, pos] : row_of) pos = base + r++;
    rows.resize(base + row_of.size(), std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
      for (const auto& [idx, c] : images[i].terms()) rows[row_of[idx]][i] = c.eval(q);
  }
  return n - rational_matrix_rank(rows);
}

int rank_at(const std::vector<TensorVector>& vectors, const Rational& q) {
  std::map<std::vector<int>, int> col_of;
  for (const auto& v : vectors)
    for (const auto& [idx, c] : v.terms()) col_of.emplace(idx, 0);
  int c = 0;
  for (auto& [idx, pos] : col_of) pos = c++;
  std::vector<std::vector<Rational>> m(vectors.size(), std::vector<Rational>(col_of.size()));
  for (size_t i = 0; i < vectors.size(); ++i)
    for (const auto& [idx, coef] : vectors[i].terms()) m[i][col_of[idx]] = coef.eval(q);
  return rational_matrix_rank(m);
}

Rational generic_point_a() { return Rational(7, 5); }
Rational generic_point_b() { return Rational(11, 3); }

int trivial_subspace_dim(int n) {
  if (n < 0) throw std::invalid_argument("trivial_subspace_dim: negative n");
  if (n == 0) return 1;
  if (n % 2 != 0) return 0;  // K.v = v forces total weight zero
  TensorShape shape{std::vector<int>(n, 2)};
  std::vector<TensorVector> basis;
  for (auto& idx : weight_basis(shape, 0)) basis.push_back(TensorVector::basis(shape, idx));
  std::vector<std::function<TensorVector(const TensorVector&)>> ops = {
      [](const TensorVector& v) { return act(Generator::E, v); }};
  int da = kernel_dim_at(basis, ops, generic_point_a());
  int db = kernel_dim_at(basis, ops, generic_point_b());
  if (da != db)
    throw std::logic_error("trivial_subspace_dim: specializations disagree on rank");
  return da;
}

}  // namespace slekit
