#include "sphlie/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace sphlie {

QVec operator+(const QVec& a, const QVec& b) {
  require(a.size() == b.size(), errc::dimension_mismatch, "vector add");
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVec operator-(const QVec& a, const QVec& b) {
  require(a.size() == b.size(), errc::dimension_mismatch, "vector sub");
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVec operator*(const Rat& c, const QVec& v) {
  QVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

QVec& operator+=(QVec& a, const QVec& b) {
  require(a.size() == b.size(), errc::dimension_mismatch, "vector add");
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

bool is_zero(const QVec& v) {
  for (auto& x : v)
    if (x != 0) return false;
  return true;
}

Rat dot(const QVec& a, const QVec& b) {
  require(a.size() == b.size(), errc::dimension_mismatch, "dot");
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVec zero_vec(int n) { return QVec(size_t(n), Rat(0)); }

QVec unit_vec(int n, int i) {
  QVec v = zero_vec(n);
  v[size_t(i)] = 1;
  return v;
}

QVec primitive(const QVec& v, bool fix_sign) {
  Int l(1);
  for (auto& x : v) l = boost::multiprecision::lcm(l, rat_den(x));
  Int g(0);
  for (auto& x : v) g = boost::multiprecision::gcd(g, Int(rat_num(x) * (l / rat_den(x))));
  if (g == 0) return zero_vec(int(v.size()));
  QVec r(v.size());
  Rat scale(l, g);
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] * scale;
  if (fix_sign) {
    for (auto& x : r) {
      if (x == 0) continue;
      if (x < 0)
        for (auto& y : r) y = -y;
      break;
    }
  }
  return r;
}

bool vec_less(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

QMat::QMat(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = int(rows.size());
  cols_ = rows_ ? int(rows.begin()->size()) : 0;
  a_.reserve(size_t(rows_) * cols_);
  for (auto& r : rows) {
    require(int(r.size()) == cols_, errc::dimension_mismatch, "ragged initializer");
    for (auto& x : r) a_.push_back(x);
  }
}

QMat QMat::identity(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::from_rows(const std::vector<QVec>& rows) {
  if (rows.empty()) return QMat();
  QMat m(int(rows.size()), int(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    require(rows[size_t(i)].size() == rows[0].size(), errc::dimension_mismatch, "ragged rows");
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[size_t(i)][size_t(j)];
  }
  return m;
}

QMat QMat::from_cols(const std::vector<QVec>& cols) {
  if (cols.empty()) return QMat();
  QMat m(int(cols[0].size()), int(cols.size()));
  for (int j = 0; j < m.cols(); ++j) {
    require(cols[size_t(j)].size() == cols[0].size(), errc::dimension_mismatch, "ragged cols");
    for (int i = 0; i < m.rows(); ++i) m.at(i, j) = cols[size_t(j)][size_t(i)];
  }
  return m;
}

QVec QMat::row(int i) const {
  QVec v(static_cast<size_t>(cols_));
  for (int j = 0; j < cols_; ++j) v[size_t(j)] = at(i, j);
  return v;
}

QVec QMat::col(int j) const {
  QVec v(static_cast<size_t>(rows_));
  for (int i = 0; i < rows_; ++i) v[size_t(i)] = at(i, j);
  return v;
}

std::vector<QVec> QMat::col_list() const {
  std::vector<QVec> r;
  r.reserve(size_t(cols_));
  for (int j = 0; j < cols_; ++j) r.push_back(col(j));
  return r;
}

QMat QMat::transpose() const {
  QMat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

QMat operator*(const QMat& a, const QMat& b) {
  require(a.cols() == b.rows(), errc::dimension_mismatch, "matrix product");
  QMat c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Rat& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

QVec operator*(const QMat& a, const QVec& v) {
  require(a.cols() == int(v.size()), errc::dimension_mismatch, "matrix-vector product");
  QVec r = zero_vec(a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != 0) r[size_t(i)] += a.at(i, j) * v[size_t(j)];
  return r;
}

QMat hstack(const QMat& a, const QMat& b) {
  if (a.cols() == 0 && a.rows() == 0) return b;
  if (b.cols() == 0 && b.rows() == 0) return a;
  require(a.rows() == b.rows(), errc::dimension_mismatch, "hstack");
  QMat m(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
  }
  return m;
}

QMat vstack(const QMat& a, const QMat& b) {
  if (a.rows() == 0 && a.cols() == 0) return b;
  if (b.rows() == 0 && b.cols() == 0) return a;
  require(a.cols() == b.cols(), errc::dimension_mismatch, "vstack");
  QMat m(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) m.at(a.rows() + i, j) = b.at(i, j);
  return m;
}

std::vector<int> rref(QMat& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    Rat inv = Rat(1) / m.at(r, c);
    for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(QMat m) { return int(rref(m).size()); }

QMat kernel_basis(const QMat& m) {
  QMat r = m;
  std::vector<int> pivots = rref(r);
  std::vector<bool> is_pivot(size_t(m.cols()), false);
  for (int p : pivots) is_pivot[size_t(p)] = true;
  std::vector<QVec> basis;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[size_t(c)]) continue;
    QVec v = zero_vec(m.cols());
    v[size_t(c)] = 1;
    for (size_t k = 0; k < pivots.size(); ++k) v[size_t(pivots[k])] = -r.at(int(k), c);
    basis.push_back(v);
  }
  return col_echelon(QMat::from_cols(basis).rows() ? QMat::from_cols(basis)
                                                   : QMat(m.cols(), 0));
}

namespace {

// Pivot rows if the matrix is in reduced column echelon form; coordinates of
// span members are then read off at the pivot rows, O(nk) per query.
std::optional<std::vector<int>> echelon_pivots(const QMat& a) {
  int n = a.rows(), k = a.cols();
  std::vector<int> pivot(static_cast<size_t>(k), -1);
  int prev = -1;
  for (int j = 0; j < k; ++j) {
    int r = -1;
    for (int i = 0; i < n; ++i)
      if (a.at(i, j) != 0) {
        r = i;
        break;
      }
    if (r <= prev || a.at(r, j) != 1) return std::nullopt;
    pivot[size_t(j)] = r;
    prev = r;
  }
  for (int j = 0; j < k; ++j)
    for (int j2 = 0; j2 < k; ++j2)
      if (j2 != j && a.at(pivot[size_t(j)], j2) != 0) return std::nullopt;
  return pivot;
}

// Authoritative for echelon matrices: the unique candidate either matches or
// the vector is outside the span.
std::optional<QVec> echelon_coords(const QMat& a, const std::vector<int>& pivot, const QVec& v) {
  int n = a.rows(), k = a.cols();
  QVec c(static_cast<size_t>(k));
  for (int j = 0; j < k; ++j) c[size_t(j)] = v[size_t(pivot[size_t(j)])];
  for (int i = 0; i < n; ++i) {
    Rat s(0);
    for (int j = 0; j < k; ++j)
      if (a.at(i, j) != 0) s += a.at(i, j) * c[size_t(j)];
    if (s != v[size_t(i)]) return std::nullopt;
  }
  return c;
}

} // namespace

std::optional<QVec> solve(const QMat& a, const QVec& b) {
  require(a.rows() == int(b.size()), errc::dimension_mismatch, "solve");
  if (auto pivots = echelon_pivots(a)) return echelon_coords(a, *pivots, b);
  QMat aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[size_t(i)];
  }
  std::vector<int> pivots = rref(aug);
  for (int p : pivots)
    if (p == a.cols()) return std::nullopt;
  QVec x = zero_vec(a.cols());
  for (size_t k = 0; k < pivots.size(); ++k) x[size_t(pivots[k])] = aug.at(int(k), a.cols());
  return x;
}

QMat inverse(const QMat& m) {
  require(m.rows() == m.cols(), errc::dimension_mismatch, "inverse of non-square");
  QMat aug = hstack(m, QMat::identity(m.rows()));
  std::vector<int> pivots = rref(aug);
  require(int(pivots.size()) == m.rows() && (pivots.empty() || pivots.back() < m.rows()),
          errc::dimension_mismatch, "singular matrix");
  QMat inv(m.rows(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.rows(); ++j) inv.at(i, j) = aug.at(i, m.rows() + j);
  return inv;
}

QMat col_echelon(const QMat& m) {
  QMat t = m.transpose();
  std::vector<int> pivots = rref(t);
  QMat r(m.rows(), int(pivots.size()));
  for (int j = 0; j < int(pivots.size()); ++j)
    for (int i = 0; i < m.rows(); ++i) r.at(i, j) = t.at(j, i);
  return r;
}


bool span_contains(const QMat& basis, const QVec& v) {
  if (is_zero(v)) return true;
  if (basis.cols() == 0) return false;
  return solve(basis, v).has_value();
}

bool span_contains_all(const QMat& basis, const QMat& other) {
  for (int j = 0; j < other.cols(); ++j)
    if (!span_contains(basis, other.col(j))) return false;
  return true;
}

QMat span_sum(const QMat& a, const QMat& b) { return col_echelon(hstack(a, b)); }

QMat span_intersect(const QMat& a, const QMat& b) {
  if (a.cols() == 0 || b.cols() == 0) return QMat(a.rows() ? a.rows() : b.rows(), 0);
  require(a.rows() == b.rows(), errc::dimension_mismatch, "span_intersect");
  // Kernel of [a | -b]; the a-part of each kernel vector gives a point in both spans.
  QMat ab(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) ab.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) ab.at(i, a.cols() + j) = -b.at(i, j);
  }
  QMat ker = kernel_basis(ab);
  std::vector<QVec> pts;
  for (int j = 0; j < ker.cols(); ++j) {
    QVec coeff(size_t(a.cols()));
    for (int i = 0; i < a.cols(); ++i) coeff[size_t(i)] = ker.at(i, j);
    pts.push_back(a * coeff);
  }
  if (pts.empty()) return QMat(a.rows(), 0);
  return col_echelon(QMat::from_cols(pts));
}

std::vector<std::vector<Int>> hnf_lattice_basis(const std::vector<std::vector<Int>>& cols) {
  if (cols.empty()) return {};
  size_t n = cols[0].size();
  std::vector<std::vector<Int>> w = cols;
  for (auto& c : w)
    require(c.size() == n, errc::dimension_mismatch, "hnf ragged input");
  size_t row = 0, done = 0;
  while (row < n && done < w.size()) {
    // Euclidean column reduction on the current row.
    while (true) {
      size_t best = w.size();
      for (size_t j = done; j < w.size(); ++j)
        if (w[j][row] != 0 &&
            (best == w.size() || abs(w[j][row]) < abs(w[best][row])))
          best = j;
      if (best == w.size()) break;
      std::swap(w[done], w[best]);
      bool clean = true;
      for (size_t j = done + 1; j < w.size(); ++j) {
        if (w[j][row] == 0) continue;
        Int q = w[j][row] / w[done][row];
        for (size_t i = 0; i < n; ++i) w[j][i] -= q * w[done][i];
        if (w[j][row] != 0) clean = false;
      }
      if (clean) break;
    }
    if (done < w.size() && w[done][row] != 0) ++done;
    ++row;
  }
  w.resize(done);
  return w;
}

std::optional<std::vector<Int>> lattice_coordinates(const std::vector<std::vector<Int>>& basis,
                                                    const std::vector<Int>& v) {
  if (basis.empty()) {
    for (auto& x : v)
      if (x != 0) return std::nullopt;
    return std::vector<Int>();
  }
  size_t n = basis[0].size();
  QMat a(int(n), int(basis.size()));
  for (size_t j = 0; j < basis.size(); ++j)
    for (size_t i = 0; i < n; ++i) a.at(int(i), int(j)) = Rat(basis[j][i]);
  QVec b(n);
  for (size_t i = 0; i < n; ++i) b[i] = Rat(v[i]);
  auto x = solve(a, b);
  if (!x) return std::nullopt;
  // The basis has full column rank (HNF output), so the solution is unique.
  std::vector<Int> z(x->size());
  for (size_t i = 0; i < x->size(); ++i) {
    if (rat_den((*x)[i]) != 1) return std::nullopt;
    z[i] = rat_num((*x)[i]);
  }
  return z;
}

} // namespace sphlie
