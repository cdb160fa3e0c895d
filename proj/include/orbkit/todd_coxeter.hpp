// Felsch-style Todd-Coxeter coset enumeration.
//
// Definitions are made at the first undefined entry of the first live coset
// (which guarantees termination whenever the index is finite).  Each new
// entry is pushed on a deduction stack; processing a deduction scans every
// cyclic conjugate of every relator (and relator inverse) that passes through
// it, filling single-entry gaps and merging cosets on coincidence.

#ifndef ORBKIT_TODD_COXETER_HPP_
#define ORBKIT_TODD_COXETER_HPP_

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "orbkit/coset_table.hpp"
#include "orbkit/word.hpp"

namespace orbkit {

inline constexpr std::size_t kDefaultMaxCosets = 10000;

struct EnumerationComplete {
  CosetTable table;
  std::size_t index = 0;
};

struct EnumerationOverflow {
  // total cosets defined (live or dead) when the limit was hit
  std::size_t cosets_used = 0;
};

using EnumerationOutcome = std::variant<EnumerationComplete, EnumerationOverflow>;

inline bool is_complete(const EnumerationOutcome& o) {
  return std::holds_alternative<EnumerationComplete>(o);
}

namespace detail {

/// Relator conjugates grouped by first column.  Relators are cyclically
/// reduced first; every rotation of r and of r^-1 is included once.
inline std::vector<std::vector<std::vector<std::size_t>>> relator_conjugates(
    const Presentation& p) {
  std::vector<std::vector<std::vector<std::size_t>>> by_col(p.num_columns());
  std::set<std::vector<std::size_t>> seen;
  for (const auto& rel : p.relators()) {
    Word r = rel.cyclically_reduced();
    for (const Word& base : {r, r.inverse()}) {
      for (std::size_t k = 0; k < base.size(); ++k) {
        std::vector<std::size_t> cols;
        cols.reserve(base.size());
        for (std::size_t i = 0; i < base.size(); ++i) cols.push_back(base[(i + k) % base.size()].column());
        if (seen.insert(cols).second) by_col[cols.front()].push_back(std::move(cols));
      }
    }
  }
  return by_col;
}

class FelschEnumerator {
 public:
  FelschEnumerator(const Presentation& p, std::size_t max_cosets)
      : cols_(p.num_columns()), max_cosets_(max_cosets), conjugates_(relator_conjugates(p)) {
    new_coset();
  }

  EnumerationOutcome run(const std::vector<Word>& subgroup) {
    try {
      for (const auto& w : subgroup) {
        std::vector<std::size_t> cols;
        for (auto l : w) cols.push_back(l.column());
        scan_and_fill(0, cols);
        process_deductions();
      }
      for (std::size_t c = 0; c < parent_.size(); ++c) {
        if (parent_[c] != static_cast<Coset>(c)) continue;
        for (std::size_t x = 0; x < cols_; ++x) {
          if (parent_[c] != static_cast<Coset>(c)) break;
          if (entry(static_cast<Coset>(c), x) == kUndefined) {
            define(static_cast<Coset>(c), x);
            process_deductions();
          }
        }
      }
    } catch (const Overflow&) {
      return EnumerationOverflow{parent_.size()};
    }
    return finish();
  }

 private:
  struct Overflow {};

  Coset& entry(Coset c, std::size_t x) { return table_[static_cast<std::size_t>(c) * cols_ + x]; }

  Coset new_coset() {
    if (live_ >= max_cosets_) throw Overflow{};
    Coset c = static_cast<Coset>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + cols_, kUndefined);
    ++live_;
    return c;
  }

  void define(Coset c, std::size_t x) {
    Coset d = new_coset();
    entry(c, x) = d;
    entry(d, inverse_column(x)) = c;
    deductions_.emplace_back(c, x);
  }

  Coset find(Coset c) {
    Coset root = c;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[c] != root) {
      Coset next = parent_[c];
      parent_[c] = root;
      c = next;
    }
    return root;
  }

  bool is_live(Coset c) const { return parent_[c] == c; }

  void merge(Coset a, Coset b, std::vector<Coset>& queue) {
    Coset ra = find(a);
    Coset rb = find(b);
    if (ra == rb) return;
    if (ra > rb) std::swap(ra, rb);
    parent_[rb] = ra;
    queue.push_back(rb);
    --live_;
  }

  void coincidence(Coset a, Coset b) {
    std::vector<Coset> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Coset g = queue[i];
      for (std::size_t x = 0; x < cols_; ++x) {
        Coset d = entry(g, x);
        if (d == kUndefined) continue;
        std::size_t xi = inverse_column(x);
        if (entry(d, xi) == g) entry(d, xi) = kUndefined;
        Coset mu = find(g);
        Coset nu = find(d);
        if (entry(mu, x) != kUndefined) {
          merge(nu, entry(mu, x), queue);
        } else if (entry(nu, xi) != kUndefined) {
          merge(mu, entry(nu, xi), queue);
        } else {
          entry(mu, x) = nu;
          entry(nu, xi) = mu;
          deductions_.emplace_back(mu, x);
        }
      }
    }
  }

  // Scan `w` at coset c without defining new cosets.
  void scan(Coset c, const std::vector<std::size_t>& w) {
    Coset f = c;
    std::size_t i = 0;
    std::size_t j = w.size();
    while (i < j && entry(f, w[i]) != kUndefined) f = entry(f, w[i++]);
    if (i == j) {
      if (f != c) coincidence(f, c);
      return;
    }
    Coset b = c;
    while (j > i && entry(b, inverse_column(w[j - 1])) != kUndefined) {
      b = entry(b, inverse_column(w[--j]));
    }
    if (j == i) {
      coincidence(f, b);
    } else if (j == i + 1) {
      entry(f, w[i]) = b;
      entry(b, inverse_column(w[i])) = f;
      deductions_.emplace_back(f, w[i]);
    }
  }

  void scan_and_fill(Coset c, const std::vector<std::size_t>& w) {
    if (w.empty()) return;
    for (;;) {
      Coset f = c;
      std::size_t i = 0;
      std::size_t j = w.size();
      while (i < j && entry(f, w[i]) != kUndefined) f = entry(f, w[i++]);
      if (i == j) {
        if (f != c) coincidence(f, c);
        return;
      }
      Coset b = c;
      while (j > i && entry(b, inverse_column(w[j - 1])) != kUndefined) {
        b = entry(b, inverse_column(w[--j]));
      }
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        entry(f, w[i]) = b;
        entry(b, inverse_column(w[i])) = f;
        deductions_.emplace_back(f, w[i]);
        return;
      }
      define(f, w[i]);
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      auto [c, x] = deductions_.back();
      deductions_.pop_back();
      if (!is_live(c)) continue;
      for (const auto& w : conjugates_[x]) {
        scan(c, w);
        if (!is_live(c)) break;
      }
      if (!is_live(c)) continue;
      Coset d = entry(c, x);
      if (d == kUndefined || !is_live(d)) continue;
      for (const auto& w : conjugates_[inverse_column(x)]) {
        scan(d, w);
        if (!is_live(d)) break;
      }
    }
  }

  EnumerationOutcome finish() {
    std::vector<Coset> to_new(parent_.size(), kUndefined);
    Coset n = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (is_live(static_cast<Coset>(c))) to_new[c] = n++;
    }
    CosetTable t(cols_ / 2, static_cast<std::size_t>(n));
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (to_new[c] == kUndefined) continue;
      for (std::size_t x = 0; x < cols_; ++x) {
        Coset d = entry(static_cast<Coset>(c), x);
        if (d == kUndefined || to_new[d] == kUndefined) {
          throw std::logic_error("coset enumeration finished with an incomplete table");
        }
        t(to_new[c], x) = to_new[d];
      }
    }
    auto std_table = t.standardized(0);
    std::size_t index = std_table.size();
    return EnumerationComplete{std::move(std_table), index};
  }

  std::size_t cols_;
  std::size_t max_cosets_;
  std::vector<std::vector<std::vector<std::size_t>>> conjugates_;
  std::vector<Coset> table_;
  std::vector<Coset> parent_;
  std::size_t live_ = 0;
  std::vector<std::pair<Coset, std::size_t>> deductions_;
};

}  // namespace detail

/// Enumerates the cosets of <subgroup> in the group presented by `p`.
/// Returns Complete with a standardized table, or Overflow once the number
/// of live cosets would exceed `max_cosets`.  Deterministic.
inline EnumerationOutcome coset_enumerate(const Presentation& p, const std::vector<Word>& subgroup,
                                          std::size_t max_cosets = kDefaultMaxCosets) {
  if (max_cosets == 0) throw std::invalid_argument("max_cosets must be positive");
  for (const auto& w : subgroup) {
    if (w.generator_bound() > p.num_generators()) {
      throw std::invalid_argument("subgroup word uses an unknown generator");
    }
  }
  return detail::FelschEnumerator(p, max_cosets).run(subgroup);
}

}  // namespace orbkit

#endif  // ORBKIT_TODD_COXETER_HPP_
