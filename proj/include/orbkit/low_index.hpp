// Low-index subgroup enumeration.
//
// Backtracking over partial coset tables kept in standard form: the first
// undefined entry (lowest coset, then lowest column) is assigned each
// existing coset whose inverse entry is free, then a fresh coset.  Relator
// scans propagate forced entries; a scan that fails to close kills the
// branch.  A partial table survives only if no change of base coset yields
// a lexicographically smaller standard table, so each conjugacy class of
// subgroups is reached exactly once.

#ifndef ORBKIT_LOW_INDEX_HPP_
#define ORBKIT_LOW_INDEX_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orbkit/coset_table.hpp"
#include "orbkit/smith.hpp"
#include "orbkit/todd_coxeter.hpp"
#include "orbkit/word.hpp"

namespace orbkit {

/// One conjugacy class representative.
struct SubgroupRecord {
  std::size_t index = 0;
  CosetTable table;                    // standardized, coset 0 = subgroup
  std::vector<Word> generator_words;   // Schreier generators
  std::optional<AbelianInvariants> abelianization;
};

class SearchOverflow : public std::runtime_error {
 public:
  explicit SearchOverflow(std::size_t nodes)
      : std::runtime_error("low-index search exceeded " + std::to_string(nodes) + " nodes"),
        nodes_(nodes) {}
  [[nodiscard]] std::size_t nodes() const { return nodes_; }

 private:
  std::size_t nodes_;
};

struct LowIndexOptions {
  bool exact = false;
  std::size_t node_limit = 200'000'000;
};

namespace detail {

class LowIndexSearch {
 public:
  LowIndexSearch(const Presentation& p, std::size_t max_index, std::size_t node_limit)
      : gens_(p.num_generators()),
        cols_(p.num_columns()),
        max_index_(max_index),
        node_limit_(node_limit),
        conjugates_(relator_conjugates(p)),
        table_(max_index * cols_, kUndefined) {}

  std::vector<CosetTable> run() {
    n_ = 1;
    if (process()) recurse();
    return std::move(found_);
  }

  [[nodiscard]] std::size_t nodes() const { return nodes_; }

 private:
  Coset& at(Coset c, std::size_t x) { return table_[static_cast<std::size_t>(c) * cols_ + x]; }

  void set(Coset c, std::size_t x, Coset d) {
    at(c, x) = d;
    at(d, inverse_column(x)) = c;
    trail_.push_back(static_cast<std::size_t>(c) * cols_ + x);
    trail_.push_back(static_cast<std::size_t>(d) * cols_ + inverse_column(x));
    pending_.emplace_back(c, x);
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      table_[trail_.back()] = kUndefined;
      trail_.pop_back();
    }
  }

  // Scan without definitions; false on a contradiction.
  bool scan(Coset c, const std::vector<std::size_t>& w) {
    Coset f = c;
    std::size_t i = 0;
    std::size_t j = w.size();
    while (i < j && at(f, w[i]) != kUndefined) f = at(f, w[i++]);
    if (i == j) return f == c;
    Coset b = c;
    while (j > i && at(b, inverse_column(w[j - 1])) != kUndefined) b = at(b, inverse_column(w[--j]));
    if (j == i) return f == b;
    if (j == i + 1) set(f, w[i], b);
    return true;
  }

  bool process() {
    while (!pending_.empty()) {
      auto [c, x] = pending_.back();
      pending_.pop_back();
      for (const auto& w : conjugates_[x]) {
        if (!scan(c, w)) {
          pending_.clear();
          return false;
        }
      }
      Coset d = at(c, x);
      for (const auto& w : conjugates_[inverse_column(x)]) {
        if (!scan(d, w)) {
          pending_.clear();
          return false;
        }
      }
    }
    return true;
  }

  // Compare the standard table with the one obtained by rebasing at `base`.
  // Returns -1 if the rebased table is smaller, +1 if larger, 0 if equal or
  // undecidable on the entries defined so far.
  int compare_rebased(Coset base) {
    std::fill(to_new_.begin(), to_new_.end(), kUndefined);
    to_old_.clear();
    to_new_[base] = 0;
    to_old_.push_back(base);
    for (std::size_t i = 0; i < n_; ++i) {
      if (i >= to_old_.size()) return 0;
      for (std::size_t x = 0; x < cols_; ++x) {
        Coset orig = at(static_cast<Coset>(i), x);
        Coset image = at(to_old_[i], x);
        if (orig == kUndefined || image == kUndefined) return 0;
        if (to_new_[image] == kUndefined) {
          to_new_[image] = static_cast<Coset>(to_old_.size());
          to_old_.push_back(image);
        }
        Coset relabeled = to_new_[image];
        if (relabeled < orig) return -1;
        if (relabeled > orig) return 1;
      }
    }
    return 0;
  }

  bool canonical() {
    to_new_.assign(n_, kUndefined);
    for (std::size_t b = 1; b < n_; ++b) {
      if (compare_rebased(static_cast<Coset>(b)) < 0) return false;
    }
    return true;
  }

  void recurse() {
    if (++nodes_ > node_limit_) throw SearchOverflow(node_limit_);
    // first undefined entry in standard order
    while (cursor_ < n_ * cols_ && table_[cursor_] != kUndefined) ++cursor_;
    if (cursor_ == n_ * cols_) {
      CosetTable t(gens_, n_);
      for (std::size_t c = 0; c < n_; ++c) {
        for (std::size_t x = 0; x < cols_; ++x) t(static_cast<Coset>(c), x) = at(static_cast<Coset>(c), x);
      }
      found_.push_back(std::move(t));
      return;
    }
    const std::size_t saved_cursor = cursor_;
    const Coset c = static_cast<Coset>(cursor_ / cols_);
    const std::size_t x = cursor_ % cols_;
    const std::size_t xi = inverse_column(x);

    for (std::size_t d = 0; d <= n_ && d < max_index_; ++d) {
      const bool fresh = d == n_;
      if (!fresh && at(static_cast<Coset>(d), xi) != kUndefined) continue;
      const std::size_t mark = trail_.size();
      if (fresh) ++n_;
      set(c, x, static_cast<Coset>(d));
      if (process() && canonical()) recurse();
      undo(mark);
      if (fresh) --n_;
      cursor_ = saved_cursor;
    }
  }

  std::size_t gens_;
  std::size_t cols_;
  std::size_t max_index_;
  std::size_t node_limit_;
  std::vector<std::vector<std::vector<std::size_t>>> conjugates_;
  std::vector<Coset> table_;
  std::vector<std::size_t> trail_;
  std::vector<std::pair<Coset, std::size_t>> pending_;
  std::vector<Coset> to_new_;
  std::vector<Coset> to_old_;
  std::vector<CosetTable> found_;
  std::size_t n_ = 0;
  std::size_t cursor_ = 0;
  std::size_t nodes_ = 0;
};

}  // namespace detail

/// Number of base cosets whose rebased standard table equals `t`, i.e. the
/// index of the subgroup in its normalizer.
inline std::size_t normalizer_index(const CosetTable& t) {
  std::size_t same = 0;
  for (std::size_t b = 0; b < t.size(); ++b) {
    if (t.standardized(static_cast<Coset>(b)) == t) ++same;
  }
  return same;
}

/// All subgroups of index <= max_index (exactly max_index when
/// `options.exact`), one per conjugacy class, ordered by (index, table).
inline std::vector<SubgroupRecord> low_index_subgroups(const Presentation& p, std::size_t max_index,
                                                       const LowIndexOptions& options = {}) {
  if (max_index == 0) throw std::invalid_argument("max_index must be positive");
  detail::LowIndexSearch search(p, max_index, options.node_limit);
  auto tables = search.run();
  std::sort(tables.begin(), tables.end());
  std::vector<SubgroupRecord> out;
  for (auto& t : tables) {
    if (options.exact && t.size() != max_index) continue;
    SubgroupRecord rec;
    rec.index = t.size();
    rec.generator_words = schreier_generators(t);
    rec.table = std::move(t);
    out.push_back(std::move(rec));
  }
  return out;
}

struct SubgroupCount {
  std::size_t classes = 0;
  std::size_t total = 0;  // conjugates included
};

inline SubgroupCount count_index_subgroups(const Presentation& p, std::size_t index,
                                           const LowIndexOptions& options = {}) {
  LowIndexOptions exact = options;
  exact.exact = true;
  SubgroupCount count;
  for (const auto& rec : low_index_subgroups(p, index, exact)) {
    ++count.classes;
    count.total += rec.index / normalizer_index(rec.table);
  }
  return count;
}

/// Fills in the record's abelianization from its table.
inline void compute_abelianization(const Presentation& p, SubgroupRecord& rec) {
  rec.abelianization = subgroup_abelianization(p, rec.table);
}

/// Checks that the record's table is a complete permutation action that
/// satisfies every relator, and that coset enumeration over its generator
/// words reproduces the same index.
inline bool reverify(const Presentation& p, const SubgroupRecord& rec,
                     std::size_t max_cosets = kDefaultMaxCosets) {
  if (rec.table.size() != rec.index) return false;
  if (!rec.table.satisfies(p, rec.generator_words)) return false;
  auto outcome = coset_enumerate(p, rec.generator_words, max_cosets);
  auto* done = std::get_if<EnumerationComplete>(&outcome);
  return done && done->index == rec.index && done->table == rec.table;
}

}  // namespace orbkit

#endif  // ORBKIT_LOW_INDEX_HPP_
