// Brute-force oracles for small finite groups.  Nothing here calls into the
// coset enumerator or the low-index search: groups are built from concrete
// permutation or matrix generators by closure, and permutation
// representations of a presentation are enumerated tuple by tuple.

#ifndef ORBKIT_TESTS_ORACLE_FINITE_GROUP_HPP_
#define ORBKIT_TESTS_ORACLE_FINITE_GROUP_HPP_

#include <algorithm>
#include <array>
#include <bitset>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbkit/parser.hpp"
#include "orbkit/word.hpp"

namespace oracle {

using Elem = std::vector<int>;

/// A concrete group given by generators and a composition rule.  Words act
/// on the right: the element of `l1 l2 ... lk` is g(l1) * g(l2) * ... where
/// x * y means "x, then y".
struct ConcreteGroup {
  enum class Kind { Perm, Mat2 } kind = Kind::Perm;
  int modulus = 0;  // Mat2 entries are mod this prime; matrices are (a b; c d) row-major
  std::vector<Elem> gens;

  [[nodiscard]] Elem identity() const {
    if (kind == Kind::Mat2) return {1, 0, 0, 1};
    Elem e(gens.at(0).size());
    std::iota(e.begin(), e.end(), 0);
    return e;
  }

  [[nodiscard]] Elem mul(const Elem& x, const Elem& y) const {
    if (kind == Kind::Perm) {
      Elem z(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) z[i] = y[x[i]];
      return z;
    }
    // row vectors act on the right: v (X Y)
    auto m = [&](int a, int b) { return ((a * b) % modulus + modulus) % modulus; };
    return {(m(x[0], y[0]) + m(x[1], y[2])) % modulus, (m(x[0], y[1]) + m(x[1], y[3])) % modulus,
            (m(x[2], y[0]) + m(x[3], y[2])) % modulus, (m(x[2], y[1]) + m(x[3], y[3])) % modulus};
  }

  [[nodiscard]] Elem inv(const Elem& x) const {
    if (kind == Kind::Perm) {
      Elem z(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) z[x[i]] = static_cast<int>(i);
      return z;
    }
    // det = 1 assumed not; compute adjugate / det
    int det = ((x[0] * x[3] - x[1] * x[2]) % modulus + modulus) % modulus;
    int det_inv = 1;
    while ((det * det_inv) % modulus != 1) ++det_inv;
    auto f = [&](int v) { return ((v * det_inv) % modulus + modulus) % modulus; };
    return {f(x[3]), f(-x[1]), f(-x[2]), f(x[0])};
  }

  [[nodiscard]] Elem eval(const orbkit::Word& w) const {
    Elem e = identity();
    for (auto l : w) e = mul(e, l.exp > 0 ? gens[l.gen] : inv(gens[l.gen]));
    return e;
  }
};

/// Multiplication table of the closure of the generators.
struct MultiplicationTable {
  std::vector<Elem> elements;          // elements[0] is the identity
  std::vector<std::vector<int>> mul;   // mul[i][j] = index of e_i * e_j
  std::vector<int> inv;
  std::vector<int> gen_index;          // index of each generator

  [[nodiscard]] std::size_t order() const { return elements.size(); }
};

inline MultiplicationTable build_table(const ConcreteGroup& g, std::size_t limit = 4096) {
  MultiplicationTable t;
  std::map<Elem, int> index;
  auto add = [&](const Elem& e) {
    auto [it, fresh] = index.emplace(e, static_cast<int>(t.elements.size()));
    if (fresh) t.elements.push_back(e);
    if (t.elements.size() > limit) throw std::runtime_error("oracle group too large");
    return it->second;
  };
  add(g.identity());
  for (std::size_t i = 0; i < t.elements.size(); ++i) {
    for (const auto& s : g.gens) add(g.mul(t.elements[i], s));
  }
  const std::size_t n = t.elements.size();
  t.mul.assign(n, std::vector<int>(n));
  t.inv.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t.mul[i][j] = index.at(g.mul(t.elements[i], t.elements[j]));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (t.mul[i][j] == 0) t.inv[i] = static_cast<int>(j);
    }
  }
  for (const auto& s : g.gens) t.gen_index.push_back(index.at(s));
  return t;
}

using Subset = std::bitset<64>;

inline Subset closure(const MultiplicationTable& t, Subset s) {
  s.set(0);
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t i = 0; i < t.order(); ++i) {
      if (!s[i]) continue;
      for (std::size_t j = 0; j < t.order(); ++j) {
        if (s[j] && !s[t.mul[i][j]]) {
          s.set(t.mul[i][j]);
          grew = true;
        }
      }
    }
  }
  return s;
}

/// Every subgroup, found by adjoining one element at a time.
inline std::vector<Subset> all_subgroups(const MultiplicationTable& t) {
  if (t.order() > 64) throw std::runtime_error("subgroup lattice oracle limited to order 64");
  std::set<std::string> seen;
  std::vector<Subset> out;
  std::vector<Subset> frontier{closure(t, Subset{})};
  while (!frontier.empty()) {
    std::vector<Subset> next;
    for (const auto& h : frontier) {
      if (!seen.insert(h.to_string()).second) continue;
      out.push_back(h);
      for (std::size_t g = 0; g < t.order(); ++g) {
        if (!h[g]) {
          Subset s = h;
          s.set(g);
          next.push_back(closure(t, s));
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

struct IndexCounts {
  std::map<std::size_t, std::size_t> classes;  // index -> conjugacy classes
  std::map<std::size_t, std::size_t> total;    // index -> subgroups
};

inline IndexCounts subgroup_counts(const MultiplicationTable& t) {
  IndexCounts out;
  auto subs = all_subgroups(t);
  std::set<std::string> done;
  for (const auto& h : subs) {
    std::size_t idx = t.order() / h.count();
    ++out.total[idx];
    if (done.count(h.to_string())) continue;
    ++out.classes[idx];
    for (std::size_t g = 0; g < t.order(); ++g) {
      Subset conj;
      for (std::size_t x = 0; x < t.order(); ++x) {
        if (h[x]) conj.set(t.mul[t.mul[t.inv[g]][x]][g]);
      }
      done.insert(conj.to_string());
    }
  }
  return out;
}

inline std::size_t subgroup_order(const MultiplicationTable& t, const ConcreteGroup& g,
                                  const std::vector<orbkit::Word>& words) {
  std::map<Elem, int> index;
  for (std::size_t i = 0; i < t.order(); ++i) index.emplace(t.elements[i], static_cast<int>(i));
  Subset s;
  for (const auto& w : words) s.set(index.at(g.eval(w)));
  return closure(t, s).count();
}

/// Number of transitive actions of the presented group on {0..n-1}, by
/// trying every tuple of permutations for the generators.
inline std::size_t transitive_actions(const orbkit::Presentation& p, int n) {
  std::vector<Elem> perms;
  Elem e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 0);
  do perms.push_back(e);
  while (std::next_permutation(e.begin(), e.end()));

  auto inverse = [](const Elem& x) {
    Elem z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[x[i]] = static_cast<int>(i);
    return z;
  };
  std::vector<Elem> invs;
  for (const auto& x : perms) invs.push_back(inverse(x));

  const std::size_t k = p.num_generators();
  std::vector<std::size_t> choice(k, 0);
  std::size_t count = 0;
  for (;;) {
    bool ok = true;
    for (const auto& r : p.relators()) {
      for (int pt = 0; pt < n && ok; ++pt) {
        int x = pt;
        for (auto l : r) x = (l.exp > 0 ? perms[choice[l.gen]] : invs[choice[l.gen]])[x];
        ok = x == pt;
      }
      if (!ok) break;
    }
    if (ok) {
      std::vector<char> seen(n, 0);
      std::vector<int> stack{0};
      seen[0] = 1;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (std::size_t g = 0; g < k; ++g) {
          for (int y : {perms[choice[g]][x], invs[choice[g]][x]}) {
            if (!seen[y]) {
              seen[y] = 1;
              stack.push_back(y);
            }
          }
        }
      }
      if (std::all_of(seen.begin(), seen.end(), [](char c) { return c; })) ++count;
    }
    std::size_t i = 0;
    while (i < k && ++choice[i] == perms.size()) choice[i++] = 0;
    if (i == k) break;
  }
  return count;
}

/// Subgroups of index n = transitive actions on n points / (n-1)!.
inline std::size_t subgroups_of_index(const orbkit::Presentation& p, int n) {
  std::size_t fact = 1;
  for (int i = 2; i < n; ++i) fact *= static_cast<std::size_t>(i);
  std::size_t t = transitive_actions(p, n);
  if (t % fact != 0) throw std::logic_error("transitive action count not divisible by (n-1)!");
  return t / fact;
}

struct Fixture {
  std::string name;
  std::string presentation;
  ConcreteGroup group;
  std::size_t order;
};

inline ConcreteGroup perms(std::vector<Elem> gens) {
  return {ConcreteGroup::Kind::Perm, 0, std::move(gens)};
}
inline ConcreteGroup mats(int p, std::vector<Elem> gens) {
  return {ConcreteGroup::Kind::Mat2, p, std::move(gens)};
}

/// Presentations of groups of order <= 24 with faithful concrete models.
inline std::vector<Fixture> fixtures() {
  return {
      {"trivial", "gens x\nrel x", perms({{0, 1}}), 1},
      {"Z6", "gens x\nrel x^6", perms({{1, 2, 3, 4, 5, 0}}), 6},
      {"S3", "gens x y\nrel x^2\nrel y^3\nrel (x y)^2", perms({{1, 0, 2}, {1, 2, 0}}), 6},
      {"Z2xZ2", "gens x y\nrel x^2\nrel y^2\nrel (x y)^2", perms({{1, 0, 2, 3}, {0, 1, 3, 2}}), 4},
      {"D4", "gens r s\nrel r^4\nrel s^2\nrel (s r)^2", perms({{1, 2, 3, 0}, {0, 3, 2, 1}}), 8},
      {"Q8", "gens i j\nrel i^4\nrel i^2 j^-2\nrel j^-1 i j i", mats(3, {{0, 2, 1, 0}, {1, 1, 1, 2}}), 8},
      {"Z2xZ4", "gens x y\nrel x^2\nrel y^4\nrel x y x^-1 y^-1",
       perms({{1, 0, 2, 3, 4, 5}, {0, 1, 3, 4, 5, 2}}), 8},
      {"Z2^3", "gens x y z\nrel x^2\nrel y^2\nrel z^2\nrel x y x y\nrel x z x z\nrel y z y z",
       perms({{1, 0, 2, 3, 4, 5}, {0, 1, 3, 2, 4, 5}, {0, 1, 2, 3, 5, 4}}), 8},
      {"D5", "gens r s\nrel r^5\nrel s^2\nrel (s r)^2", perms({{1, 2, 3, 4, 0}, {0, 4, 3, 2, 1}}), 10},
      {"A4", "gens a b\nrel a^2\nrel b^3\nrel (a b)^3", perms({{1, 0, 3, 2}, {1, 2, 0, 3}}), 12},
      {"D6", "gens r s\nrel r^6\nrel s^2\nrel (s r)^2",
       perms({{1, 2, 3, 4, 5, 0}, {0, 5, 4, 3, 2, 1}}), 12},
      {"Dic3", "gens a x\nrel a^6\nrel x^2 a^-3\nrel x^-1 a x a", mats(7, {{3, 0, 0, 5}, {0, 6, 1, 0}}), 12},
      {"Z7:Z3", "gens a b\nrel a^7\nrel b^3\nrel b^-1 a b a^-2",
       perms({{1, 2, 3, 4, 5, 6, 0}, {0, 2, 4, 6, 1, 3, 5}}), 21},
      {"S4", "gens s t\nrel s^2\nrel t^4\nrel (s t)^3", perms({{1, 0, 2, 3}, {1, 2, 3, 0}}), 24},
      {"D12", "gens r s\nrel r^12\nrel s^2\nrel (s r)^2",
       perms({{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 0}, {0, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1}}), 24},
  };
}

}  // namespace oracle

#endif  // ORBKIT_TESTS_ORACLE_FINITE_GROUP_HPP_
