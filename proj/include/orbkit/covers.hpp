// Covering-degree arithmetic for orbifolds with rigid cusps, and volume
// bookkeeping in units of v0 (the regular ideal tetrahedron).

#ifndef ORBKIT_COVERS_HPP_
#define ORBKIT_COVERS_HPP_

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace orbkit::covers {

using Int = std::int64_t;
using Rational = boost::rational<Int>;

/// Display-only value of v0; no decision depends on it.
inline constexpr double kV0 = 1.01494146;

/// Volume of the Berge manifold in units of v0.
inline constexpr Int kBergeVolume = 4;

enum class CuspType { Torus, S2_244, S2_333, S2_236 };

inline bool is_rigid(CuspType c) { return c != CuspType::Torus; }

inline std::string_view cusp_name(CuspType c) {
  switch (c) {
    case CuspType::Torus: return "torus";
    case CuspType::S2_244: return "244";
    case CuspType::S2_333: return "333";
    case CuspType::S2_236: return "236";
  }
  return "?";
}

inline std::optional<CuspType> parse_cusp(std::string_view s) {
  for (auto c : {CuspType::Torus, CuspType::S2_244, CuspType::S2_333, CuspType::S2_236}) {
    if (cusp_name(c) == s) return c;
  }
  return std::nullopt;
}

/// The field a rigid cusp forces into the invariant trace field.
inline std::optional<std::string_view> cusp_field(CuspType c) {
  switch (c) {
    case CuspType::S2_244: return "Q(i)";
    case CuspType::S2_333:
    case CuspType::S2_236: return "Q(sqrt(-3))";
    case CuspType::Torus: break;
  }
  return std::nullopt;
}

class IncompatibleCusps : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Number of preimages in the covering cusp `upper` of a generic point of
/// the covered cusp `lower`: n^2 for like rigid cusps, 2n^2 for S2(3,3,3)
/// over S2(2,3,6).
inline Int fiber_size(CuspType upper, CuspType lower, Int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (!is_rigid(upper) || !is_rigid(lower)) throw IncompatibleCusps("fiber size needs rigid cusps");
  if (upper == lower) return n * n;
  if (upper == CuspType::S2_333 && lower == CuspType::S2_236) return 2 * n * n;
  throw IncompatibleCusps(std::string("no covering of a ") + std::string(cusp_name(lower)) +
                          " cusp by a " + std::string(cusp_name(upper)) + " cusp");
}

/// All (l, n) with l, n >= 1 and 3l + n^2 = d.
inline std::vector<std::pair<Int, Int>> representable_3l_nsq(Int d) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  std::vector<std::pair<Int, Int>> out;
  for (Int n = 1; n * n < d; ++n) {
    Int rest = d - n * n;
    if (rest % 3 == 0) out.emplace_back(rest / 3, n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

enum class Branch { NSquared, TwoNSquared };

inline std::string_view branch_name(Branch b) { return b == Branch::NSquared ? "nsq" : "2nsq"; }

/// d = 3k(3l + n^2) or d = 3k(3l + 2n^2) (l even on the second branch).
struct DegreeWitness {
  Int k = 0;
  Int l = 0;
  Int n = 0;
  Branch branch = Branch::NSquared;
  Int d = 0;

  friend bool operator==(const DegreeWitness&, const DegreeWitness&) = default;
};

inline Int witness_degree(Branch b, Int k, Int l, Int n) {
  return 3 * k * (3 * l + (b == Branch::NSquared ? 1 : 2) * n * n);
}

/// Every witness with d in [d_min, d_max], sorted by (d, k, l, n).
inline std::vector<DegreeWitness> enumerate_degrees(Branch b, Int d_min, Int d_max) {
  if (d_min < 1 || d_max < d_min) throw std::invalid_argument("need 1 <= d_min <= d_max");
  std::vector<DegreeWitness> out;
  const Int l_step = b == Branch::TwoNSquared ? 2 : 1;
  // 3k(3l + c n^2) grows in each of k, l, n, so each loop stops at d_max
  for (Int k = 1; witness_degree(b, k, l_step, 1) <= d_max; ++k) {
    for (Int l = l_step; witness_degree(b, k, l, 1) <= d_max; l += l_step) {
      for (Int n = 1; witness_degree(b, k, l, n) <= d_max; ++n) {
        Int d = witness_degree(b, k, l, n);
        if (d >= d_min) out.push_back({k, l, n, b, d});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const DegreeWitness& x, const DegreeWitness& y) {
    return std::tie(x.d, x.k, x.l, x.n) < std::tie(y.d, y.k, y.l, y.n);
  });
  return out;
}

/// Upper bound on the volume of a quotient of the Berge manifold by a
/// degree-d cover, as an exact multiple of v0.
struct VolumeBound {
  Int d = 1;
  Rational bound{kBergeVolume, 1};

  /// "v0/6", "v0", "4v0/7".
  [[nodiscard]] std::string render() const {
    std::string out;
    if (bound.numerator() != 1) out += std::to_string(bound.numerator());
    out += "v0";
    if (bound.denominator() != 1) out += "/" + std::to_string(bound.denominator());
    return out;
  }

  [[nodiscard]] double approx() const {
    return kV0 * static_cast<double>(bound.numerator()) / static_cast<double>(bound.denominator());
  }

  [[nodiscard]] std::string render_with_value() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.8f", approx());
    return render() + " ~ " + buf;
  }
};

inline VolumeBound volume_bound(Int d) {
  if (d < 1) throw std::invalid_argument("degree must be positive");
  return VolumeBound{d, Rational(kBergeVolume, d)};
}

/// Smallest volume of a cusped orientable hyperbolic 3-orbifold, in v0.
inline const Rational kMinimumCuspedVolume{1, 12};

/// True iff the bound is at least the minimum cusped orbifold volume.
inline bool minimum_orbifold_volume_check(const VolumeBound& b) {
  return b.bound >= kMinimumCuspedVolume;
}

}  // namespace orbkit::covers

#endif  // ORBKIT_COVERS_HPP_
