// Smith normal form over the integers and abelian invariants.

#ifndef ORBKIT_SMITH_HPP_
#define ORBKIT_SMITH_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "orbkit/coset_table.hpp"
#include "orbkit/word.hpp"

namespace orbkit {

/// U * A * V = D with U, V unimodular and D diagonal, nonnegative, and
/// d1 | d2 | ... among its nonzero entries.
struct SNFResult {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;
};

namespace detail {

inline void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
inline void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row[dst] += k * row[src]
inline void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& k) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (m(src, j) != 0) m(dst, j) += k * m(src, j);
  }
}
// col[dst] += k * col[src]
inline void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& k) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m(i, src) != 0) m(i, dst) += k * m(i, src);
  }
}

}  // namespace detail

inline SNFResult smith_normal_form(const IntMatrix& a) {
  using detail::add_col;
  using detail::add_row;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SNFResult r{a, IntMatrix::identity(m), IntMatrix::identity(n)};
  IntMatrix& d = r.D;

  // Row operations act on D and U (from the left); column operations act on
  // D and V (from the right).
  auto row_op = [&](std::size_t dst, std::size_t src, const BigInt& k) {
    add_row(d, dst, src, k);
    add_row(r.U, dst, src, k);
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const BigInt& k) {
    add_col(d, dst, src, k);
    add_col(r.V, dst, src, k);
  };
  auto row_swap = [&](std::size_t x, std::size_t y) {
    detail::swap_rows(d, x, y);
    detail::swap_rows(r.U, x, y);
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    detail::swap_cols(d, x, y);
    detail::swap_cols(r.V, x, y);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < m; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        if (d(i, j) == 0) continue;
        if (!best || abs(d(i, j)) < abs(d(best->first, best->second))) best = {i, j};
      }
    }
    if (!best) break;
    row_swap(t, best->first);
    col_swap(t, best->second);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        BigInt q = d(i, t) / d(t, t);
        if (q != 0) row_op(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        BigInt q = d(t, j) / d(t, t);
        if (q != 0) col_op(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        // a remainder smaller than the pivot is left in row or column t
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (d(i, t) != 0 && abs(d(i, t)) < abs(d(bi, bj))) bi = i, bj = t;
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (d(t, j) != 0 && abs(d(t, j)) < abs(d(bi, bj))) bi = t, bj = j;
        }
        row_swap(t, bi);
        col_swap(t, bj);
        continue;
      }
      // pivot must divide the rest of the trailing block
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < m && !bad_row; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (d(i, j) % d(t, t) != 0) {
            bad_row = i;
            break;
          }
        }
      }
      if (!bad_row) break;
      row_op(t, *bad_row, BigInt(1));
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < m; ++j) r.U(t, j) = -r.U(t, j);
    }
  }
  return r;
}

/// Z^free_rank + Z/torsion[0] + Z/torsion[1] + ... with torsion[i] | torsion[i+1].
struct AbelianInvariants {
  std::vector<BigInt> torsion;
  std::size_t free_rank = 0;

  [[nodiscard]] bool is_finite() const { return free_rank == 0; }
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Invariants of Z^cols / (row space of `relations`).
inline AbelianInvariants abelian_invariants(const IntMatrix& relations) {
  AbelianInvariants inv;
  auto snf = smith_normal_form(relations);
  std::size_t rank = 0;
  for (std::size_t t = 0; t < std::min(relations.rows(), relations.cols()); ++t) {
    const BigInt& e = snf.D(t, t);
    if (e == 0) continue;
    ++rank;
    if (e > 1) inv.torsion.push_back(e);
  }
  inv.free_rank = relations.cols() - rank;
  return inv;
}

inline AbelianInvariants abelianization(const Presentation& p) {
  return abelian_invariants(abelianized_relation_matrix(p));
}

/// Abelianization of the stabilizer of coset 0 in a complete coset table,
/// by abelianized Reidemeister-Schreier rewriting: one column per non-tree
/// edge, one row per (coset, relator).
inline AbelianInvariants subgroup_abelianization(const Presentation& p, const CosetTable& t) {
  const std::size_t k = t.num_generators();
  auto tree = schreier_tree(t);
  std::vector<long long> column_of(t.size() * k, -1);
  std::size_t ncols = 0;
  for (std::size_t e = 0; e < column_of.size(); ++e) {
    if (!tree.tree_edge[e]) column_of[e] = static_cast<long long>(ncols++);
  }
  IntMatrix rel(t.size() * p.relators().size(), ncols);
  std::size_t row = 0;
  for (const auto& r : p.relators()) {
    for (std::size_t c = 0; c < t.size(); ++c, ++row) {
      Coset cur = static_cast<Coset>(c);
      for (auto l : r) {
        Coset from = l.exp > 0 ? cur : t(cur, l.column());
        long long col = column_of[static_cast<std::size_t>(from) * k + l.gen];
        if (col >= 0) rel(row, static_cast<std::size_t>(col)) += l.exp;
        cur = t(cur, l.column());
      }
    }
  }
  return abelian_invariants(rel);
}

}  // namespace orbkit

#endif  // ORBKIT_SMITH_HPP_
