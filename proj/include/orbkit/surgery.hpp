// Slope and cyclic-order arithmetic for Dehn fillings of the Berge manifold
// and the orbifolds beta(n, m) obtained by (n, m) surgery on its unknotted
// cusp.
//
// The unknotted and knotted cusps link `linking` times, so a twist of r on
// the unknotted cusp sends the knotted-cusp curve (a, b) to
// (a + linking^2 * r * b, b).  The knotted cusp has three solid-torus
// fillings: the meridian (1, 0) and the slopes (f, 1) for each f in
// `fillings`.

#ifndef ORBKIT_SURGERY_HPP_
#define ORBKIT_SURGERY_HPP_

#include <array>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace orbkit::surgery {

using Int = std::int64_t;

/// Linking data of a two-cusped manifold whose knotted cusp has three
/// solid-torus fillings.
struct FillingProfile {
  Int linking = 7;
  std::array<Int, 2> fillings{18, 19};

  [[nodiscard]] constexpr Int twist_coefficient() const { return linking * linking; }
};

inline constexpr FillingProfile kBergeProfile{};

inline Int checked_mul(Int a, Int b) {
  Int r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("surgery arithmetic overflow");
  return r;
}
inline Int checked_add(Int a, Int b) {
  Int r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("surgery arithmetic overflow");
  return r;
}
inline Int abs_checked(Int a) {
  if (a == INT64_MIN) throw std::overflow_error("surgery arithmetic overflow");
  return a < 0 ? -a : a;
}

/// An unoriented slope p/q: coprime, not (0, 0), with p > 0 or (p, q) = (0, 1).
class Slope {
 public:
  Slope(Int p, Int q) {
    if (p == 0 && q == 0) throw std::invalid_argument("slope (0,0) is not a slope");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("slope entries must be coprime");
    if (p < 0 || (p == 0 && q < 0)) {
      p = -p;
      q = -q;
    }
    p_ = p;
    q_ = q;
  }

  [[nodiscard]] Int p() const { return p_; }
  [[nodiscard]] Int q() const { return q_; }
  [[nodiscard]] std::string str() const {
    return "(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
  }

  friend bool operator==(const Slope&, const Slope&) = default;

 private:
  Int p_ = 1;
  Int q_ = 0;
};

inline Slope slope_after_twist(const Slope& s, Int r, const FillingProfile& prof = kBergeProfile) {
  Int shift = checked_mul(checked_mul(prof.twist_coefficient(), r), s.q());
  return Slope(checked_add(s.p(), shift), s.q());
}

/// Orders of the three cyclic fundamental groups, in filling order
/// (meridian, fillings[0], fillings[1]).
struct OrderTriple {
  Int a = 0;
  Int b = 0;
  Int c = 0;

  [[nodiscard]] bool pairwise_distinct() const { return a != b && b != c && a != c; }
  friend bool operator==(const OrderTriple&, const OrderTriple&) = default;
};

/// Lens-space orders after (p, q) surgery on the unknotted cusp followed by
/// each solid-torus filling of the knotted cusp:
/// (|p|, |L^2 q + f0 p|, |L^2 q + f1 p|).
inline OrderTriple lens_orders(Int p, Int q, const FillingProfile& prof = kBergeProfile) {
  if (p <= 0) throw std::invalid_argument("lens_orders requires p >= 1");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("lens_orders requires gcd(p, q) = 1");
  Int base = checked_mul(prof.twist_coefficient(), q);
  return {p, abs_checked(checked_add(base, checked_mul(prof.fillings[0], p))),
          abs_checked(checked_add(base, checked_mul(prof.fillings[1], p)))};
}

/// Surgery coefficients (n, m) on the unknotted cusp; r = gcd(n, |m|) is the
/// order of the singular core.  Construction enforces gcd(n, linking) = 1.
class SurgerySpec {
 public:
  SurgerySpec(Int n, Int m, const FillingProfile& prof = kBergeProfile) : n_(n), m_(m), prof_(prof) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (std::gcd(n, prof.linking) != 1) {
      throw std::invalid_argument("n must be coprime to the linking number");
    }
    r_ = std::gcd(n, m);  // gcd(n, 0) = n
  }

  [[nodiscard]] Int n() const { return n_; }
  [[nodiscard]] Int m() const { return m_; }
  [[nodiscard]] Int r() const { return r_; }
  [[nodiscard]] const FillingProfile& profile() const { return prof_; }

 private:
  Int n_;
  Int m_;
  Int r_;
  FillingProfile prof_;
};

/// The order formula without the coprimality hypothesis on n:
/// (n, r |L^2 m/r + f0 n/r|, r |L^2 m/r + f1 n/r|).
inline OrderTriple beta_orders_unchecked(Int n, Int m, const FillingProfile& prof = kBergeProfile) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  Int r = std::gcd(n, m);
  Int mr = m / r;
  Int nr = n / r;
  Int base = checked_mul(prof.twist_coefficient(), mr);
  return {n, checked_mul(r, abs_checked(checked_add(base, checked_mul(prof.fillings[0], nr)))),
          checked_mul(r, abs_checked(checked_add(base, checked_mul(prof.fillings[1], nr))))};
}

class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Orders of the three cyclic orbifold fundamental groups of the fillings of
/// beta(n, m).  Throws InvariantViolation if they are not pairwise distinct.
inline OrderTriple beta_orders(const SurgerySpec& spec) {
  OrderTriple t = beta_orders_unchecked(spec.n(), spec.m(), spec.profile());
  if (!t.pairwise_distinct()) {
    throw InvariantViolation("beta orders collide for (n,m) = (" + std::to_string(spec.n()) + "," +
                             std::to_string(spec.m()) + ")");
  }
  return t;
}

/// A twist r and filling f with N = |L^2 r + f|.
struct BergeOrderWitness {
  Int r = 0;
  Int filling = 0;
};

/// Whether N is a lens-space order |L^2 r + f| for some integer r and some
/// filling f; r ranges over all integers, so both sign conventions
/// |L^2 r + f| and |L^2 r - f| are covered.
inline std::optional<BergeOrderWitness> is_berge_lens_order(Int N,
                                                            const FillingProfile& prof = kBergeProfile) {
  if (N < 1) throw std::invalid_argument("order must be positive");
  const Int k = prof.twist_coefficient();
  for (Int f : prof.fillings) {
    for (Int target : {N, -N}) {
      Int diff = target - f;
      if (diff % k == 0) return BergeOrderWitness{diff / k, f};
    }
  }
  return std::nullopt;
}

/// Linking number of the knot with the second singular component after a
/// (1, n) twist on it: l2 + n * l1.
inline Int linking_after_twist(Int l1, Int l2, Int n) {
  return checked_add(l2, checked_mul(n, l1));
}

/// The unique twist n with l2 + n l1 = target, if l1 != 0 and it exists.
inline std::optional<Int> twist_hitting(Int l1, Int l2, Int target) {
  if (l1 == 0) return std::nullopt;
  Int diff = target - l2;
  if (diff % l1 != 0) return std::nullopt;
  return diff / l1;
}

/// True when l2 + n l1 differs from `target` for all but finitely many n.
inline bool eventually_avoids(Int l1, Int l2, Int target = kBergeProfile.linking) {
  return l1 != 0 || l2 != target;
}

/// The covers of the fillings are knot (not link) complements exactly when
/// n is coprime to the linking number.
inline bool covers_are_connected(Int n, const FillingProfile& prof = kBergeProfile) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  return std::gcd(n, prof.linking) == 1;
}

}  // namespace orbkit::surgery

#endif  // ORBKIT_SURGERY_HPP_
