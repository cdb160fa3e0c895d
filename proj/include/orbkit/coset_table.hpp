// Coset tables: the action of generators and their inverses on cosets.

#ifndef ORBKIT_COSET_TABLE_HPP_
#define ORBKIT_COSET_TABLE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "orbkit/word.hpp"

namespace orbkit {

using Coset = std::int32_t;
inline constexpr Coset kUndefined = -1;

/// Cosets are numbered from 0 here (coset 0 is the subgroup itself); the
/// text and JSON renderings shift to 1-based numbering.
class CosetTable {
 public:
  CosetTable() = default;
  CosetTable(std::size_t num_generators, std::size_t num_cosets)
      : cols_(2 * num_generators), rows_(num_cosets), data_(cols_ * rows_, kUndefined) {}

  [[nodiscard]] std::size_t size() const { return rows_; }
  [[nodiscard]] std::size_t num_columns() const { return cols_; }
  [[nodiscard]] std::size_t num_generators() const { return cols_ / 2; }

  [[nodiscard]] Coset operator()(Coset c, std::size_t col) const {
    return data_[static_cast<std::size_t>(c) * cols_ + col];
  }
  Coset& operator()(Coset c, std::size_t col) {
    return data_[static_cast<std::size_t>(c) * cols_ + col];
  }
  [[nodiscard]] Coset act(Coset c, Letter l) const { return (*this)(c, l.column()); }

  [[nodiscard]] std::span<const Coset> row(Coset c) const {
    return {data_.data() + static_cast<std::size_t>(c) * cols_, cols_};
  }

  /// Image of `c` under `w`, or nullopt if the trace hits an undefined entry.
  [[nodiscard]] std::optional<Coset> trace(Coset c, const Word& w) const {
    for (auto l : w) {
      c = act(c, l);
      if (c == kUndefined) return std::nullopt;
    }
    return c;
  }

  /// Every entry defined, each generator column a permutation, and the
  /// inverse columns inverse to the generator columns.
  [[nodiscard]] bool is_complete() const {
    for (std::size_t col = 0; col < cols_; col += 2) {
      std::vector<char> hit(rows_, 0);
      for (std::size_t c = 0; c < rows_; ++c) {
        Coset d = (*this)(static_cast<Coset>(c), col);
        if (d < 0 || static_cast<std::size_t>(d) >= rows_ || hit[d]) return false;
        hit[d] = 1;
        if ((*this)(d, col + 1) != static_cast<Coset>(c)) return false;
      }
    }
    return true;
  }

  /// Complete, every relator closes at every coset, and every subgroup
  /// generator closes at coset 0.
  [[nodiscard]] bool satisfies(const Presentation& p, std::span<const Word> subgroup = {}) const {
    if (rows_ == 0 || !is_complete() || num_generators() != p.num_generators()) return false;
    for (const auto& r : p.relators()) {
      for (std::size_t c = 0; c < rows_; ++c) {
        if (trace(static_cast<Coset>(c), r) != static_cast<Coset>(c)) return false;
      }
    }
    for (const auto& h : subgroup) {
      if (trace(0, h) != Coset{0}) return false;
    }
    return true;
  }

  /// Relabels cosets in breadth-first order from `base` (scanning rows in
  /// order, columns in order).  Requires a complete, transitive table.
  [[nodiscard]] CosetTable standardized(Coset base = 0) const {
    std::vector<Coset> to_new(rows_, kUndefined);
    std::vector<Coset> to_old;
    to_old.reserve(rows_);
    to_new[base] = 0;
    to_old.push_back(base);
    for (std::size_t i = 0; i < to_old.size(); ++i) {
      for (std::size_t col = 0; col < cols_; ++col) {
        Coset d = (*this)(to_old[i], col);
        if (d != kUndefined && to_new[d] == kUndefined) {
          to_new[d] = static_cast<Coset>(to_old.size());
          to_old.push_back(d);
        }
      }
    }
    if (to_old.size() != rows_) throw std::logic_error("standardized: table is not transitive");
    CosetTable out(num_generators(), rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t col = 0; col < cols_; ++col) {
        Coset d = (*this)(to_old[i], col);
        out(static_cast<Coset>(i), col) = d == kUndefined ? kUndefined : to_new[d];
      }
    }
    return out;
  }

  friend bool operator==(const CosetTable&, const CosetTable&) = default;
  friend auto operator<=>(const CosetTable& a, const CosetTable& b) {
    if (a.rows_ != b.rows_) return a.rows_ <=> b.rows_;
    return a.data_ <=> b.data_;
  }

 private:
  std::size_t cols_ = 0;
  std::size_t rows_ = 0;
  std::vector<Coset> data_;
};

/// Coset representatives along the breadth-first spanning tree from coset 0,
/// plus which (coset, generator) pairs are tree edges.
struct SchreierTree {
  std::vector<Word> representative;
  // tree_edge[c * num_generators + g]: edge c --g--> c*g lies in the tree
  std::vector<char> tree_edge;
};

inline SchreierTree schreier_tree(const CosetTable& t) {
  const std::size_t n = t.size();
  const std::size_t k = t.num_generators();
  SchreierTree tree;
  tree.representative.assign(n, Word{});
  tree.tree_edge.assign(n * k, 0);
  std::vector<char> seen(n, 0);
  std::vector<Coset> queue{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Coset c = queue[i];
    for (std::size_t col = 0; col < t.num_columns(); ++col) {
      Coset d = t(c, col);
      if (d == kUndefined || seen[d]) continue;
      seen[d] = 1;
      queue.push_back(d);
      Letter l = Letter::from_column(col);
      tree.representative[d] = tree.representative[c] * Word{l};
      if (l.exp > 0) {
        tree.tree_edge[static_cast<std::size_t>(c) * k + l.gen] = 1;
      } else {
        tree.tree_edge[static_cast<std::size_t>(d) * k + l.gen] = 1;
      }
    }
  }
  return tree;
}

/// Schreier generators of the stabilizer of coset 0: one reduced word
/// rep(c) g rep(c g)^-1 per non-tree edge, identity words dropped.
inline std::vector<Word> schreier_generators(const CosetTable& t) {
  auto tree = schreier_tree(t);
  std::vector<Word> out;
  const std::size_t k = t.num_generators();
  for (std::size_t c = 0; c < t.size(); ++c) {
    for (std::uint32_t g = 0; g < k; ++g) {
      if (tree.tree_edge[c * k + g]) continue;
      Coset d = t(static_cast<Coset>(c), 2 * g);
      Word w = tree.representative[c] * Word{Letter(g, 1)} * tree.representative[d].inverse();
      if (!w.empty()) out.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace orbkit

#endif  // ORBKIT_COSET_TABLE_HPP_
