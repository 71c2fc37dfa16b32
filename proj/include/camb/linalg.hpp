#pragma once

#include <cassert>
#include <initializer_list>
#include <optional>
#include <vector>

#include "camb/scalar.hpp"

namespace camb {

using Vec = std::vector<Scalar>;

/// Dense square-ish matrix over Scalar, row major. Sizes here are the group
/// rank (tiny), so everything is plain Gaussian elimination.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    assert(a.cols_ == b.rows_);
    Mat c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
      }
    return c;
  }

  Vec apply(const Vec& x) const {
    assert(static_cast<int>(x.size()) == cols_);
    Vec y(rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!at(i, j).is_zero()) y[i] += at(i, j) * x[j];
    return y;
  }

  friend Mat operator+(const Mat& a, const Mat& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    Mat c = a;
    for (size_t i = 0; i < c.e_.size(); ++i) c.e_[i] += b.e_[i];
    return c;
  }

 private:
  int rows_, cols_;
  std::vector<Scalar> e_;
};

inline Vec operator+(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}
inline Vec operator-(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}
inline Vec operator-(const Vec& a) {
  Vec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return c;
}
inline Vec operator*(const Scalar& s, const Vec& a) {
  Vec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = s * a[i];
  return c;
}
inline bool is_zero_vec(const Vec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

/// Lexicographic total order on vectors (used for deterministic set keys).
inline bool vec_less(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i) {
    const int s = (a[i] - b[i]).sign();
    if (s != 0) return s < 0;
  }
  return false;
}
struct VecLess {
  bool operator()(const Vec& a, const Vec& b) const { return vec_less(a, b); }
};

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    const Scalar inv = m.at(r, c).inverse();
    for (int j = 0; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      const Scalar f = m.at(i, c);
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline int rank(Mat m) { return static_cast<int>(rref(m).size()); }

inline Scalar det(Mat m) {
  assert(m.rows() == m.cols());
  Scalar d = 1;
  for (int c = 0; c < m.cols(); ++c) {
    int p = -1;
    for (int i = c; i < m.rows(); ++i)
      if (!m.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return Scalar(0);
    if (p != c) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(c, j));
      d = -d;
    }
    d = d * m.at(c, c);
    const Scalar inv = m.at(c, c).inverse();
    for (int i = c + 1; i < m.rows(); ++i) {
      if (m.at(i, c).is_zero()) continue;
      const Scalar f = m.at(i, c) * inv;
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return d;
}

inline std::optional<Mat> inverse(const Mat& m) {
  assert(m.rows() == m.cols());
  const int n = m.rows();
  Mat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  const auto pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1) return std::nullopt;
  Mat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

/// Basis of the kernel of m (column vectors as Vec).
inline std::vector<Vec> kernel(Mat m) {
  const int n = m.cols();
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    Vec v(n);
    v[c] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      if (pivots[r] < c) v[pivots[r]] = -m.at(static_cast<int>(r), c);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves m*x = b exactly; nullopt if inconsistent. If the solution space is
/// positive-dimensional, returns one solution (free variables set to 0).
inline std::optional<Vec> solve(const Mat& m, const Vec& b) {
  Mat aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), m.cols());
  return x;
}

/// Canonical form of a subspace given by spanning rows: RREF with zero rows
/// dropped. Equal subspaces yield identical forms.
inline Mat subspace_canonical(Mat rows_span) {
  const auto pivots = rref(rows_span);
  Mat out(static_cast<int>(pivots.size()), rows_span.cols());
  for (int i = 0; i < out.rows(); ++i)
    for (int j = 0; j < out.cols(); ++j) out.at(i, j) = rows_span.at(i, j);
  return out;
}

inline bool mat_less(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows();
  if (a.cols() != b.cols()) return a.cols() < b.cols();
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const int s = (a.at(i, j) - b.at(i, j)).sign();
      if (s != 0) return s < 0;
    }
  return false;
}

}  // namespace camb
