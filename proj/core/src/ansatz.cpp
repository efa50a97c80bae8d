#include "freeimm/ansatz.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace freeimm {

std::array<int, 2> WeightSet::block_coords(int j) const {
  int p = 2 * j;
  if (fixed_coordinate && p >= resolved_fixed_index()) ++p;
  return {p, p + 1};
}

void WeightSet::validate() const {
  std::vector<std::string> errors;
  if (k < 0) errors.push_back("k must be non-negative");
  if (weights.empty()) errors.push_back("at least one weight vector is required");
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (static_cast<int>(weights[j].size()) != k) {
      errors.push_back("weight " + std::to_string(j + 1) + " has length " + std::to_string(weights[j].size()) +
                       " != k " + std::to_string(k));
    }
  }
  std::set<std::vector<int>> distinct(weights.begin(), weights.end());
  if (distinct.size() != weights.size()) errors.push_back("weights pairwise distinct violated");
  if (fixed_coordinate && fixed_index >= 0 && (fixed_index % 2 != 0 || fixed_index > 2 * blocks())) {
    errors.push_back("fixed_index must be an even coordinate between blocks");
  }
  if (!errors.empty()) throw ValidationError(std::move(errors));
}

std::vector<Matrix<int>> generator_matrices(const WeightSet& ws) {
  const int n = ws.target_dim();
  std::vector<Matrix<int>> out;
  for (int i = 0; i < ws.k; ++i) {
    Matrix<int> x(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int j = 0; j < ws.blocks(); ++j) {
      const auto [p, q] = ws.block_coords(j);
      const int w = ws.weights[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      x[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = -w;
      x[static_cast<std::size_t>(q)][static_cast<std::size_t>(p)] = w;
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::string DerivativeIndex::label() const {
  std::string s;
  for (int i : x_word) s += "x" + std::to_string(i + 1);
  s.append(static_cast<std::size_t>(z_order), 'z');
  return s;
}

DerivativeIndex DerivativeIndex::parse(const std::string& label, int k) {
  DerivativeIndex idx;
  std::size_t pos = 0;
  auto bad = [&] { return ValidationError({"malformed column label \"" + label + "\""}); };
  if (label.empty()) throw bad();
  while (pos < label.size()) {
    if (label[pos] == 'z') {
      ++idx.z_order;
      ++pos;
    } else if (label[pos] == 'x') {
      if (idx.z_order > 0) throw bad();
      std::size_t end = pos + 1;
      while (end < label.size() && std::isdigit(static_cast<unsigned char>(label[end]))) ++end;
      if (end == pos + 1) throw bad();
      int var = std::stoi(label.substr(pos + 1, end - pos - 1));
      if (var < 1 || var > k) throw bad();
      idx.x_word.push_back(var - 1);
      pos = end;
    } else {
      throw bad();
    }
  }
  if (!std::is_sorted(idx.x_word.begin(), idx.x_word.end())) throw bad();
  return idx;
}

namespace {

// Nondecreasing words of the given length over {0..alphabet-1}, in lex order.
void words(int alphabet, int length, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& f) {
  if (static_cast<int>(cur.size()) == length) {
    f(cur);
    return;
  }
  const int start = cur.empty() ? 0 : cur.back();
  for (int a = start; a < alphabet; ++a) {
    cur.push_back(a);
    words(alphabet, length, cur, f);
    cur.pop_back();
  }
}

std::vector<DerivativeIndex> canonical_indices(int k, int order) {
  std::vector<DerivativeIndex> out;
  std::vector<int> cur;
  for (int o = 1; o <= order; ++o) {
    for (int q = 0; q <= o; ++q) {
      words(k, o - q, cur, [&](const std::vector<int>& w) { out.push_back({w, q}); });
    }
  }
  return out;
}

std::vector<DerivativeIndex> lexicographic_indices(int k, int order) {
  std::vector<DerivativeIndex> out;
  std::vector<int> cur;
  for (int o = 1; o <= order; ++o) {
    // variable k stands for z and sorts last
    words(k + 1, o, cur, [&](const std::vector<int>& w) {
      DerivativeIndex idx;
      for (int v : w) {
        if (v == k) {
          ++idx.z_order;
        } else {
          idx.x_word.push_back(v);
        }
      }
      out.push_back(std::move(idx));
    });
  }
  return out;
}

}  // namespace

std::vector<DerivativeIndex> column_indices(int k, int order, const ColumnOrdering& ordering) {
  switch (ordering.kind) {
    case OrderingKind::Canonical:
      return canonical_indices(k, order);
    case OrderingKind::Lexicographic:
      return lexicographic_indices(k, order);
    case OrderingKind::Explicit: {
      auto expected = canonical_indices(k, order);
      auto key = [](const DerivativeIndex& d) { return d.label(); };
      std::vector<std::string> a, b;
      for (const auto& d : expected) a.push_back(key(d));
      for (const auto& d : ordering.explicit_columns) b.push_back(key(d));
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) {
        throw ValidationError({"explicit ordering is not a permutation of the order-" + std::to_string(order) +
                               " derivative columns"});
      }
      return ordering.explicit_columns;
    }
  }
  return {};
}

long critical_dimension(int m, int order) {
  // C(m+order, order) - 1
  long c = 1;
  for (int i = 1; i <= order; ++i) c = c * (m + i) / i;
  return c - 1;
}

Matrix<TrigPoly> DerivativeFamily::as_matrix() const {
  const std::size_t n = columns.empty() ? 0 : columns[0].size();
  Matrix<TrigPoly> m(n, std::vector<TrigPoly>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (std::size_t r = 0; r < n; ++r) m[r][c] = columns[c][r];
  }
  return m;
}

DerivativeFamily derivative_family(const AnsatzSpec& spec) {
  const auto& ws = spec.weight_set;
  ws.validate();
  if (static_cast<int>(spec.loop.size()) != ws.target_dim()) {
    throw DimensionMismatch("loop length " + std::to_string(spec.loop.size()) + " != target_dim " +
                            std::to_string(ws.target_dim()));
  }
  if (spec.order < 1) throw ValidationError({"order must be >= 1"});
  auto indices = column_indices(ws.k, spec.order, spec.ordering);
  if (indices.size() != spec.loop.size()) {
    throw DimensionMismatch("derivative family has " + std::to_string(indices.size()) + " columns but target_dim is " +
                            std::to_string(spec.loop.size()) + "; only critical-dimension (square) specs are supported");
  }
  std::vector<std::vector<TrigPoly>> jets{spec.loop};
  for (int q = 1; q <= spec.order; ++q) {
    std::vector<TrigPoly> d;
    d.reserve(spec.loop.size());
    for (const auto& c : jets.back()) d.push_back(c.derivative());
    jets.push_back(std::move(d));
  }
  DerivativeFamily fam;
  fam.columns = columns_from_jets<TrigPoly>(ws, indices, jets);
  fam.ordering = std::move(indices);
  fam.dimension = static_cast<int>(spec.loop.size());
  return fam;
}

TrigDeterminant osculating_determinant(const DerivativeFamily& fam) {
  return trig_determinant(fam.as_matrix());
}

TrigPoly osculating_det(const DerivativeFamily& fam) { return osculating_determinant(fam).value; }

std::string ObstructionReport::summary() const {
  std::ostringstream os;
  if (!count_ok) {
    os << "fails: ";
    if (weights_given) {
      os << "r=" << blocks;
    } else {
      os << "floor(q_m/2)=" << blocks;
    }
    os << " < " << required_blocks;
    return os.str();
  }
  if (weights_given && !rank_ok) {
    os << "fails: quadratic rank " << quadratic_rank << " < " << required_blocks;
    return os.str();
  }
  os << "passes: r=" << blocks << " >= " << required_blocks;
  if (weights_given) os << ", quadratic rank " << quadratic_rank << " = " << required_blocks;
  return os.str();
}

ObstructionReport obstruction_check(int m, const std::optional<WeightSet>& ws) {
  if (m < 1) throw ValidationError({"m must be >= 1"});
  ObstructionReport rep;
  rep.m = m;
  rep.k = m - 1;
  rep.required_blocks = static_cast<long>(m) * (m - 1) / 2;
  rep.weights_given = ws.has_value();
  if (ws) {
    ws->validate();
    if (ws->k != rep.k) {
      throw DimensionMismatch("weight set has k=" + std::to_string(ws->k) + " but m=" + std::to_string(m) +
                              " needs k=" + std::to_string(rep.k));
    }
    rep.blocks = ws->blocks();
  } else {
    rep.blocks = static_cast<int>(critical_dimension(m, 2) / 2);
  }
  rep.count_ok = rep.blocks >= rep.required_blocks;
  if (ws) {
    Matrix<Rational> quad;
    for (const auto& w : ws->weights) {
      std::vector<Rational> row;
      for (int i = 0; i < rep.k; ++i) {
        for (int j = i; j < rep.k; ++j) row.emplace_back(w[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(j)]);
      }
      quad.push_back(std::move(row));
    }
    rep.quadratic_rank = rank(std::move(quad));
    rep.rank_ok = rep.quadratic_rank == rep.required_blocks;
  }
  rep.passes = rep.count_ok && (!ws || rep.rank_ok);
  return rep;
}

ReducedMatrix extended_reduced_matrix(const ExtendedAnsatzSpec& spec) {
  const auto& ws = spec.weight_set;
  ws.validate();
  const int r = ws.blocks();
  if (ws.fixed_coordinate) throw StructureError("extended ansatz blocks carry no fixed coordinate");
  if (static_cast<int>(spec.mu.size()) != r || static_cast<int>(spec.logderivs.size()) != r) {
    throw StructureError("extended ansatz needs one mu and one log-derivative per block (" + std::to_string(r) +
                         " blocks, " + std::to_string(spec.mu.size()) + " mu, " +
                         std::to_string(spec.logderivs.size()) + " log-derivatives)");
  }

  // Columns whose companion part vanishes: x_i, x_i x_j, x_i u, x_i v, uv.
  // Symbols: 0..k-1 = X_i, k = d/du, k+1 = d/dv.
  const int k = ws.k;
  const int du = k, dv = k + 1;
  std::vector<std::vector<int>> cols;
  std::vector<std::string> labels;
  auto name = [&](const std::vector<int>& w) {
    std::string s;
    for (int a : w) s += a < k ? "x" + std::to_string(a + 1) : (a == du ? "u" : "v");
    return s;
  };
  for (int i = 0; i < k; ++i) cols.push_back({i});
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) cols.push_back({i, j});
  }
  for (int i = 0; i < k; ++i) {
    cols.push_back({i, du});
    cols.push_back({i, dv});
  }
  cols.push_back({du, dv});
  for (const auto& c : cols) labels.push_back(name(c));
  if (static_cast<int>(cols.size()) != 2 * r) {
    throw StructureError("extended ansatz has " + std::to_string(cols.size()) + " companion-free columns but " +
                         std::to_string(2 * r) + " block coordinates");
  }

  ReducedMatrix out;
  out.column_labels = std::move(labels);
  out.entries.assign(static_cast<std::size_t>(2 * r), std::vector<TrigPoly>(cols.size()));
  for (int b = 0; b < r; ++b) {
    const auto& q = spec.logderivs[static_cast<std::size_t>(b)];
    for (std::size_t c = 0; c < cols.size(); ++c) {
      // block state at v = 0 with e^{Q_b} factored out: starts at (1, 0)
      std::array<TrigPoly, 2> s{TrigPoly(1), TrigPoly(0)};
      for (auto it = cols[c].rbegin(); it != cols[c].rend(); ++it) {
        const int op = *it;
        if (op == du) {
          s = {s[0].derivative() + q * s[0], s[1].derivative() + q * s[1]};
        } else {
          const int f = op == dv ? spec.mu[static_cast<std::size_t>(b)]
                                 : ws.weights[static_cast<std::size_t>(b)][static_cast<std::size_t>(op)];
          s = {-s[1] * Rational(f), s[0] * Rational(f)};
        }
      }
      out.entries[static_cast<std::size_t>(2 * b)][c] = s[0];
      out.entries[static_cast<std::size_t>(2 * b + 1)][c] = s[1];
    }
  }
  return out;
}

Rational companion_determinant(const ExtendedAnsatzSpec& spec) {
  auto planar = [](const std::array<TrigPoly, 2>& c) {
    TrigPoly d0 = c[0].derivative(), d1 = c[1].derivative();
    TrigPoly dd0 = d0.derivative(), dd1 = d1.derivative();
    return d0 * dd1 - dd0 * d1;
  };
  TrigPoly du = planar(spec.companion_u);
  TrigPoly dv = planar(spec.companion_v);
  if (!du.is_constant() || !dv.is_constant()) {
    throw StructureError("companion block determinant is not constant");
  }
  // (c_u, c_v, c_uu, c_vv) is one transposition away from block-diagonal order.
  Rational det = -(du.constant() * dv.constant());
  if (det == 0) throw StructureError("companion block is degenerate");
  return det;
}

}  // namespace freeimm
