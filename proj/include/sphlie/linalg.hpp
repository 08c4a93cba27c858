#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "sphlie/rational.hpp"

namespace sphlie {

using QVec = std::vector<Rat>;

QVec operator+(const QVec& a, const QVec& b);
QVec operator-(const QVec& a, const QVec& b);
QVec operator*(const Rat& c, const QVec& v);
QVec& operator+=(QVec& a, const QVec& b);
bool is_zero(const QVec& v);
Rat dot(const QVec& a, const QVec& b);
QVec zero_vec(int n);
QVec unit_vec(int n, int i);

/// Scales to integer entries with gcd 1; sign of first nonzero entry positive
/// when `fix_sign` is set (used for lineality directions), otherwise the
/// direction is preserved.
QVec primitive(const QVec& v, bool fix_sign = false);

/// Strict total order on rational vectors (length, then lexicographic).
bool vec_less(const QVec& a, const QVec& b);

/// Dense exact rational matrix, row-major.
class QMat {
public:
  QMat() : rows_(0), cols_(0) {}
  QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Rat(0)) {}
  QMat(std::initializer_list<std::initializer_list<Rat>> rows);

  static QMat identity(int n);
  static QMat from_rows(const std::vector<QVec>& rows);
  static QMat from_cols(const std::vector<QVec>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  QVec row(int i) const;
  QVec col(int j) const;
  std::vector<QVec> col_list() const;

  QMat transpose() const;
  bool operator==(const QMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const QMat& o) const { return !(*this == o); }

private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

QMat operator*(const QMat& a, const QMat& b);
QVec operator*(const QMat& a, const QVec& v);
QMat hstack(const QMat& a, const QMat& b);
QMat vstack(const QMat& a, const QMat& b);

/// In-place reduced row echelon form; returns pivot column indices.
std::vector<int> rref(QMat& m);

int rank(QMat m);

/// Basis of the right kernel, as canonical reduced-column-echelon matrix.
QMat kernel_basis(const QMat& m);

/// One solution x of A x = b, if any.
std::optional<QVec> solve(const QMat& a, const QVec& b);

/// Inverse of a square nonsingular matrix (throws on singular input).
QMat inverse(const QMat& m);

/// Canonical reduced column echelon form; zero columns dropped. Two matrices
/// have equal column span iff their forms are identical.
QMat col_echelon(const QMat& m);

bool span_contains(const QMat& basis, const QVec& v);
bool span_contains_all(const QMat& basis, const QMat& other);
QMat span_sum(const QMat& a, const QMat& b);
QMat span_intersect(const QMat& a, const QMat& b);

/// Column-style Hermite normal form of an integer matrix; returns a lattice
/// basis (columns) of the integer column span.
std::vector<std::vector<Int>> hnf_lattice_basis(const std::vector<std::vector<Int>>& cols);

/// Integer coordinates of v in the given lattice basis, if they exist.
std::optional<std::vector<Int>> lattice_coordinates(const std::vector<std::vector<Int>>& basis,
                                                    const std::vector<Int>& v);

} // namespace sphlie
