#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "freeimm/error.hpp"
#include "freeimm/linalg.hpp"
#include "freeimm/poly_det.hpp"
#include "freeimm/trig_poly.hpp"

namespace freeimm {

/// Integer weight vectors w_1..w_r in Z^k, one per planar rotation block,
/// plus an optional rotation-invariant coordinate.
///
/// Target coordinates are laid out block by block (two coordinates each);
/// the fixed coordinate, if present, sits at coordinate `fixed_index`, which
/// must fall between blocks (even, <= 2r). Default: last.
struct WeightSet {
  int k = 0;
  std::vector<std::vector<int>> weights;
  bool fixed_coordinate = false;
  int fixed_index = -1;

  int blocks() const { return static_cast<int>(weights.size()); }
  int target_dim() const { return 2 * blocks() + (fixed_coordinate ? 1 : 0); }
  int resolved_fixed_index() const { return fixed_index < 0 ? 2 * blocks() : fixed_index; }

  /// Coordinate pair of block j.
  std::array<int, 2> block_coords(int j) const;

  /// Throws DimensionMismatch / ValidationError on malformed data.
  void validate() const;
};

/// X_i acting on a target vector: block j is multiplied by w_{ji} J, the
/// fixed coordinate is sent to 0.
template <class T>
std::vector<T> apply_generator(const WeightSet& ws, int i, std::span<const T> v) {
  std::vector<T> out(v.size(), T(0));
  for (int j = 0; j < ws.blocks(); ++j) {
    const auto [p, q] = ws.block_coords(j);
    const int w = ws.weights[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    if (w == 0) continue;
    // J (a, b) = (-b, a)
    out[static_cast<std::size_t>(p)] = v[static_cast<std::size_t>(q)] * T(-w);
    out[static_cast<std::size_t>(q)] = v[static_cast<std::size_t>(p)] * T(w);
  }
  return out;
}

/// Dense integer matrices of X_1..X_k.
std::vector<Matrix<int>> generator_matrices(const WeightSet& ws);

/// One osculating column: the word X_{i1}...X_{ip} applied to v^{(q)}.
struct DerivativeIndex {
  std::vector<int> x_word;  // nondecreasing x-variable indices (0-based)
  int z_order = 0;

  int order() const { return static_cast<int>(x_word.size()) + z_order; }
  /// "x1x2z", "zz", "x3", ...
  std::string label() const;
  static DerivativeIndex parse(const std::string& label, int k);

  friend bool operator==(const DerivativeIndex&, const DerivativeIndex&) = default;
};

enum class OrderingKind { Canonical, Lexicographic, Explicit };

/// Canonical: by total order, then by z-order ascending, then x-word lex.
/// Lexicographic: by total order, then the variable word (x1 < ... < xk < z).
struct ColumnOrdering {
  OrderingKind kind = OrderingKind::Canonical;
  std::vector<DerivativeIndex> explicit_columns;
};

std::vector<DerivativeIndex> column_indices(int k, int order, const ColumnOrdering& ordering);

/// q_{m,order} = C(m+order, order) - 1.
long critical_dimension(int m, int order);

struct AnsatzSpec {
  WeightSet weight_set;
  std::vector<TrigPoly> loop;
  int order = 2;
  std::string label;
  ColumnOrdering ordering;

  int m() const { return weight_set.k + 1; }
};

struct DerivativeFamily {
  std::vector<std::vector<TrigPoly>> columns;
  std::vector<DerivativeIndex> ordering;
  int dimension = 0;

  /// Row-major matrix whose column c is columns[c].
  Matrix<TrigPoly> as_matrix() const;
};

/// R-stripped columns X^alpha v^{(q)} from the derivative jets
/// jets[q] = v^{(q)}, q = 0..max order. Works for any scalar type.
template <class T>
std::vector<std::vector<T>> columns_from_jets(const WeightSet& ws, std::span<const DerivativeIndex> indices,
                                              std::span<const std::vector<T>> jets) {
  std::vector<std::vector<T>> cols;
  cols.reserve(indices.size());
  for (const auto& idx : indices) {
    std::vector<T> v = jets[static_cast<std::size_t>(idx.z_order)];
    for (auto it = idx.x_word.rbegin(); it != idx.x_word.rend(); ++it) {
      v = apply_generator<T>(ws, *it, std::span<const T>(v));
    }
    cols.push_back(std::move(v));
  }
  return cols;
}

DerivativeFamily derivative_family(const AnsatzSpec& spec);

/// Exact determinant of the stripped family, with the Weierstrass bookkeeping.
TrigDeterminant osculating_determinant(const DerivativeFamily& fam);
TrigPoly osculating_det(const DerivativeFamily& fam);

struct ObstructionReport {
  int m = 0;
  int k = 0;
  int blocks = 0;            // r
  long required_blocks = 0;  // m(m-1)/2 = dim Sym^2(R^k)
  bool count_ok = false;
  bool weights_given = false;
  int quadratic_rank = 0;    // rank of the r x k(k+1)/2 quadratic-vector matrix
  bool rank_ok = false;
  bool passes = false;

  std::string summary() const;
};

/// Without weights, r = floor(q_m / 2) and only the count bound is checked.
ObstructionReport obstruction_check(int m, const std::optional<WeightSet>& ws);

/// Two-parameter extension: per block b_r = e^{Q_r(u)} (cos mu_r v, sin mu_r v)
/// with q_r = Q_r', plus a companion block (c_u(u), c_v(v)) of two planar loops.
struct ExtendedAnsatzSpec {
  WeightSet weight_set;
  std::vector<int> mu;
  std::vector<TrigPoly> logderivs;
  std::array<TrigPoly, 2> companion_u;
  std::array<TrigPoly, 2> companion_v;
  std::string label;
};

struct ReducedMatrix {
  std::vector<std::string> column_labels;
  Matrix<TrigPoly> entries;  // 2r x 2r, trig polynomials in u
};

/// The matrix whose determinant, times exp(2 sum Q_r), is the block
/// determinant of all columns with vanishing companion part.
ReducedMatrix extended_reduced_matrix(const ExtendedAnsatzSpec& spec);

/// det(c_u, c_v, c_uu, c_vv); StructureError unless it is a nonzero constant.
Rational companion_determinant(const ExtendedAnsatzSpec& spec);

}  // namespace freeimm
