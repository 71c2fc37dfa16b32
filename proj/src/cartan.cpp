#include "camb/cartan.hpp"

#include <functional>
#include <sstream>

namespace camb {

void CoxeterMatrix::validate() const {
  const int n = rank();
  if (static_cast<int>(m.size()) != n) throw std::invalid_argument("CoxeterMatrix: size mismatch");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[i].size()) != n) throw std::invalid_argument("CoxeterMatrix: ragged table");
    if (m[i][i] != 1) throw std::invalid_argument("CoxeterMatrix: diagonal must be 1");
    for (int j = 0; j < n; ++j) {
      if (m[i][j] != m[j][i]) throw std::invalid_argument("CoxeterMatrix: not symmetric");
      if (i != j && m[i][j] != kInfiniteBond && m[i][j] < 2)
        throw std::invalid_argument("CoxeterMatrix: off-diagonal labels must be >= 2 or infinite");
    }
  }
}

int CoxeterMatrix::index_of(const std::string& name) const {
  for (int i = 0; i < rank(); ++i)
    if (names[i] == name) return i;
  throw std::invalid_argument("unknown generator: " + name);
}

std::optional<Scalar> four_cos_squared(int m) {
  switch (m) {
    case 2:
      return Scalar(0);
    case 3:
      return Scalar(1);
    case 4:
      return Scalar(2);
    case 5:
      return Scalar(Rat(3, 2), Rat(1, 2), 5);  // (3+sqrt5)/2
    case 6:
      return Scalar(3);
    case 10:
      return Scalar(Rat(5, 2), Rat(1, 2), 5);  // (5+sqrt5)/2
    case 12:
      return Scalar(Rat(2), Rat(1), 3);  // 2+sqrt3
    default:
      return std::nullopt;
  }
}

namespace {

int field_of(const Mat& A) {
  int d = 1;
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) {
      const Scalar& x = A.at(i, j);
      if (x.surd() != 0) {
        if (d != 1 && d != x.d())
          throw CartanError(CartanErrorKind::MixedField, "Cartan entries from different quadratic fields");
        d = x.d();
      }
    }
  return d;
}

}  // namespace

CartanData validate_cartan(const Mat& A, const CoxeterMatrix& cox,
                           const std::optional<std::vector<Scalar>>& delta_override) {
  cox.validate();
  const int n = cox.rank();
  if (A.rows() != n || A.cols() != n)
    throw CartanError(CartanErrorKind::NotCartanI, "Cartan matrix size does not match Coxeter matrix");
  const int d = field_of(A);

  for (int i = 0; i < n; ++i) {
    if (A.at(i, i) != Scalar(2))
      throw CartanError(CartanErrorKind::NotCartanI, "condition (i): a_ss must equal 2 at " + cox.names[i]);
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (A.at(i, j).sign() > 0)
        throw CartanError(CartanErrorKind::NotCartanII,
                          "condition (ii): off-diagonal entries must be <= 0 at (" + cox.names[i] + "," +
                              cox.names[j] + ")");
      if (A.at(i, j).is_zero() != A.at(j, i).is_zero())
        throw CartanError(CartanErrorKind::NotCartanIII,
                          "condition (iii): a_ss' = 0 iff a_s's = 0 fails at (" + cox.names[i] + "," +
                              cox.names[j] + ")");
      if (i < j) {
        const Scalar prod = A.at(i, j) * A.at(j, i);
        const int m = cox.label(i, j);
        if (m == kInfiniteBond) {
          if (prod < Scalar(4))
            throw CartanError(CartanErrorKind::NotCartanII,
                              "condition (ii): product must be >= 4 for an infinite label at (" + cox.names[i] +
                                  "," + cox.names[j] + ")");
        } else {
          const auto want = four_cos_squared(m);
          if (!want)
            throw CartanError(CartanErrorKind::UnsupportedLabel,
                              "label m=" + std::to_string(m) + " has no value in a quadratic field");
          if (prod != *want)
            throw CartanError(CartanErrorKind::NotCartanII,
                              "condition (ii): a_ss' a_s's != 4cos^2(pi/m) at (" + cox.names[i] + "," +
                                  cox.names[j] + ")");
        }
      }
    }
  }

  // delta by propagation along diagram edges (a_ij != 0):
  // delta_j = delta_i * a_ij / a_ji.
  std::vector<Scalar> delta(n);
  std::vector<bool> seen(n, false);
  if (delta_override) {
    if (static_cast<int>(delta_override->size()) != n)
      throw CartanError(CartanErrorKind::NotSymmetrizable, "delta override has wrong size");
    delta = *delta_override;
    for (int i = 0; i < n; ++i) {
      if (delta[i].sign() <= 0)
        throw CartanError(CartanErrorKind::NotSymmetrizable, "delta must be positive");
      seen[i] = true;
    }
  } else {
    for (int start = 0; start < n; ++start) {
      if (seen[start]) continue;
      delta[start] = 1;
      seen[start] = true;
      std::vector<int> stack{start};
      while (!stack.empty()) {
        const int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < n; ++j) {
          if (i == j || A.at(i, j).is_zero()) continue;
          const Scalar forced = delta[i] * A.at(i, j) / A.at(j, i);
          if (!seen[j]) {
            delta[j] = forced;
            seen[j] = true;
            stack.push_back(j);
          }
        }
      }
    }
  }
  // Consistency across every edge (covers cycles and overrides).
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || A.at(i, j).is_zero()) continue;
      if (delta[i] * A.at(i, j) != delta[j] * A.at(j, i))
        throw CartanError(CartanErrorKind::NotSymmetrizable,
                          "no positive delta satisfies delta(s) a_ss' = delta(s') a_s's");
    }
  for (int i = 0; i < n; ++i)
    if (delta[i].sign() <= 0)
      throw CartanError(CartanErrorKind::NotSymmetrizable, "delta must be positive");

  // delta must be constant on Gamma^odd components (conjugate generators).
  for (const auto& cls : simple_conjugacy_classes(cox))
    for (size_t k = 1; k < cls.size(); ++k)
      if (delta[cls[k]] != delta[cls[0]])
        throw CartanError(CartanErrorKind::DeltaConflict,
                          "delta forced unequal on conjugate generators " + cox.names[cls[0]] + ", " +
                              cox.names[cls[k]]);

  CartanData data;
  data.cox = cox;
  data.A = A;
  data.delta = delta;
  data.d = d;
  data.K = Mat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) data.K.at(i, j) = delta[i] * A.at(i, j);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (data.K.at(i, j) != data.K.at(j, i))
        throw CartanError(CartanErrorKind::NotSymmetrizable, "internal: K not symmetric");
  return data;
}

CartanData standard_crystallographic_cartan(const CoxeterMatrix& cox) {
  cox.validate();
  const int n = cox.rank();
  Mat A(n, n);
  for (int i = 0; i < n; ++i) A.at(i, i) = 2;
  const Scalar golden(Rat(1, 2), Rat(1, 2), 5);  // (1+sqrt5)/2
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int m = cox.label(i, j);
      Scalar aij, aji;
      switch (m) {
        case 2:
          break;  // zeros
        case 3:
          aij = aji = Scalar(-1);
          break;
        case 4:
          aij = Scalar(-1);
          aji = Scalar(-2);
          break;
        case 5:
          aij = aji = -golden;
          break;
        case 6:
          aij = Scalar(-1);
          aji = Scalar(-3);
          break;
        case kInfiniteBond:
          aij = aji = Scalar(-2);
          break;
        default:
          throw CartanError(CartanErrorKind::UnsupportedLabel,
                            "no canonical Cartan entries for label m=" + std::to_string(m));
      }
      A.at(i, j) = aij;
      A.at(j, i) = aji;
    }
  return validate_cartan(A, cox);
}

std::vector<std::vector<int>> simple_conjugacy_classes(const CoxeterMatrix& cox) {
  const int n = cox.rank();
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    comp[start] = ncomp;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (i == j || comp[j] >= 0) continue;
        const int m = cox.label(i, j);
        if (m != kInfiniteBond && m % 2 == 1) {
          comp[j] = ncomp;
          stack.push_back(j);
        }
      }
    }
    ++ncomp;
  }
  std::vector<std::vector<int>> classes(ncomp);
  for (int i = 0; i < n; ++i) classes[comp[i]].push_back(i);
  return classes;
}

}  // namespace camb
