#pragma once

#include <optional>
#include <string>
#include <vector>

#include "camb/linalg.hpp"
#include "camb/scalar.hpp"

namespace camb {

/// m(s,s') = 0 encodes the infinite label, matching the JSON group schema.
constexpr int kInfiniteBond = 0;

struct CoxeterMatrix {
  std::vector<std::string> names;
  std::vector<std::vector<int>> m;

  int rank() const { return static_cast<int>(names.size()); }
  int label(int i, int j) const { return m[i][j]; }

  /// Throws std::invalid_argument unless symmetric, diagonal 1, off-diagonal
  /// >= 2 or infinite.
  void validate() const;

  int index_of(const std::string& name) const;
};

enum class CartanErrorKind {
  NotCartanI,
  NotCartanII,
  NotCartanIII,
  NotSymmetrizable,
  DeltaConflict,
  UnsupportedLabel,
  MixedField,
};

struct CartanError : std::runtime_error {
  CartanError(CartanErrorKind k, const std::string& what) : std::runtime_error(what), kind(k) {}
  CartanErrorKind kind;
};

/// A validated symmetrizable generalized Cartan matrix with its symmetrizing
/// weights and the symmetric form K(alpha_i, alpha_j) = delta_i * a_ij.
struct CartanData {
  CoxeterMatrix cox;
  Mat A;
  std::vector<Scalar> delta;
  int d = 1;  // the square-free integer of the coefficient field Q(sqrt(d))
  Mat K;

  int rank() const { return cox.rank(); }
};

/// 4cos^2(pi/m) when it lies in a quadratic field; nullopt otherwise.
/// For the infinite label there is no single value (condition is >= 4).
std::optional<Scalar> four_cos_squared(int m);

/// Checks conditions (i)-(iii), computes delta by propagation along diagram
/// edges (normalized to 1 at the first generator of each connected component
/// of the diagram, unless overridden), and checks delta is constant on
/// Gamma^odd components. Throws CartanError on any violation.
CartanData validate_cartan(const Mat& A, const CoxeterMatrix& m,
                           const std::optional<std::vector<Scalar>>& delta_override = std::nullopt);

/// Canonical integer (or golden, for m=5) Cartan matrix for the given Coxeter
/// matrix: m=2 -> (0,0); 3 -> (-1,-1); 4 -> (-1,-2); 6 -> (-1,-3);
/// infinity -> (-2,-2); 5 -> both entries -(1+sqrt 5)/2 over Q(sqrt 5).
/// The earlier generator receives the -1 at asymmetric labels.
CartanData standard_crystallographic_cartan(const CoxeterMatrix& m);

/// Connected components of Gamma^odd (edges where m(s,s') is odd; the
/// infinite label counts even). Partition of generator indices, each class
/// sorted, classes ordered by smallest member.
std::vector<std::vector<int>> simple_conjugacy_classes(const CoxeterMatrix& m);

}  // namespace camb
