// End-to-end replay of the machine-checkable claims about the Berge-manifold
// orbifolds, rendered as a fixed-order report.

#ifndef ORBKIT_VERIFY_HPP_
#define ORBKIT_VERIFY_HPP_

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "orbkit/covers.hpp"
#include "orbkit/low_index.hpp"
#include "orbkit/parser.hpp"
#include "orbkit/smith.hpp"
#include "orbkit/surgery.hpp"
#include "orbkit/todd_coxeter.hpp"

namespace orbkit {

enum class Verdict { Pass, Fail, Skipped };

inline std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

struct Check {
  std::string id;
  std::string claim;
  Verdict verdict = Verdict::Skipped;
  std::string detail;
};

struct VerificationReport {
  std::vector<Check> checks;

  [[nodiscard]] bool passed() const {
    return std::none_of(checks.begin(), checks.end(),
                        [](const Check& c) { return c.verdict == Verdict::Fail; });
  }
};

/// Claim ids in report order, with the statement each one checks.
inline const std::vector<std::pair<std::string, std::string>>& claim_registry() {
  static const std::vector<std::pair<std::string, std::string>> registry = {
      {"QM-INDEX8", "the orbifold group of Q_M has no subgroup of index 8"},
      {"PSL2O3-INDEX4-UNIQUE", "PSL(2,O3) has a unique index-4 subgroup up to conjugacy"},
      {"PSL2O3-G-FINITE-ABEL", "the index-4 subgroup of PSL(2,O3) has finite abelianization"},
      {"DEGREE-8", "8 is not of the form 3l + n^2 with l, n >= 1"},
      {"DEGREE-CASES-24-48", "degrees 3k(3l+2n^2) in [12,48] include (1,2,1)->24 and (2,2,1)->48"},
      {"PRETZEL-ORDERS-18-19", "pretzel fillings give orders 1, 18, 19; twists send (18,1) to (49r+18,1)"},
      {"BETA-DISTINCTNESS-SWEEP", "beta(n,m) filling orders are pairwise distinct when gcd(n,7) = 1"},
      {"ORDER-32", "32 is not a lens-space order |49r+18| or |49r+19|"},
      {"LINKING-7-ESCAPE", "l2 + n l1 equals 7 for at most one n when l1 != 0"},
      {"VOLUME-FLOOR", "candidate quotient volumes 4v0/d stay at or above v0/12"},
  };
  return registry;
}

struct VerifyOptions {
  std::string qm_path;
  std::optional<std::string> psl2o3_path;
  surgery::Int sweep_n_max = 200;
  surgery::Int sweep_m_max = 200;
  std::size_t node_limit = LowIndexOptions{}.node_limit;
};

/// Directory holding the bundled .grp files: $ORBKIT_DATA if set, else the
/// compiled-in default.
inline std::string data_directory() {
  if (const char* env = std::getenv("ORBKIT_DATA"); env && *env) return env;
#ifdef ORBKIT_DATA_DIR
  return ORBKIT_DATA_DIR;
#else
  return "data";
#endif
}

inline VerifyOptions default_verify_options() {
  VerifyOptions o;
  std::filesystem::path dir = data_directory();
  o.qm_path = (dir / "qm.grp").string();
  o.psl2o3_path = (dir / "psl2o3.grp").string();
  return o;
}

namespace detail {

inline Check make_check(const std::string& id, bool ok, std::string detail) {
  for (const auto& [cid, claim] : claim_registry()) {
    if (cid == id) return {id, claim, ok ? Verdict::Pass : Verdict::Fail, std::move(detail)};
  }
  throw std::logic_error("unregistered claim " + id);
}

inline std::string torsion_string(const AbelianInvariants& a) {
  std::string s = "torsion=[";
  for (std::size_t i = 0; i < a.torsion.size(); ++i) {
    if (i) s += ",";
    s += a.torsion[i].str();
  }
  return s + "] free_rank=" + std::to_string(a.free_rank);
}

inline Check check_qm_index8(const Presentation& qm, std::size_t node_limit) {
  LowIndexOptions opt;
  opt.exact = true;
  opt.node_limit = node_limit;
  auto recs = low_index_subgroups(qm, 8, opt);
  return make_check("QM-INDEX8", recs.empty(),
                    std::to_string(recs.size()) + " conjugacy classes of index-8 subgroups");
}

inline std::vector<Check> check_psl2o3(const std::optional<std::string>& path, std::size_t node_limit) {
  auto skipped = [](const std::string& why) {
    std::vector<Check> out;
    for (const char* id : {"PSL2O3-INDEX4-UNIQUE", "PSL2O3-G-FINITE-ABEL"}) {
      Check c = make_check(id, true, why);
      c.verdict = Verdict::Skipped;
      out.push_back(std::move(c));
    }
    return out;
  };
  if (!path || !std::filesystem::exists(*path)) return skipped("presentation file not found");
  Presentation psl;
  try {
    psl = load_presentation(*path);
  } catch (const std::exception& e) {
    return skipped(std::string("presentation unreadable: ") + e.what());
  }
  auto ab = abelianization(psl);
  if (!ab.is_finite()) return skipped("sanity gate: abelianization is infinite");
  if (!is_complete(coset_enumerate(psl, psl.generator_words()))) {
    return skipped("sanity gate: index-1 enumeration did not complete");
  }

  LowIndexOptions opt;
  opt.exact = true;
  opt.node_limit = node_limit;
  auto recs = low_index_subgroups(psl, 4, opt);
  std::vector<Check> out;
  out.push_back(make_check("PSL2O3-INDEX4-UNIQUE", recs.size() == 1,
                           std::to_string(recs.size()) + " conjugacy classes of index-4 subgroups"));
  if (recs.size() != 1) {
    out.push_back(make_check("PSL2O3-G-FINITE-ABEL", false, "no unique index-4 subgroup G"));
  } else {
    auto g_ab = subgroup_abelianization(psl, recs.front().table);
    out.push_back(make_check("PSL2O3-G-FINITE-ABEL", g_ab.is_finite(), "G^ab: " + torsion_string(g_ab)));
  }
  return out;
}

inline Check check_degree8() {
  bool ok = covers::representable_3l_nsq(8).empty();
  std::size_t violations = 0;
  for (covers::Int d = 2; d <= 1000; d += 3) {
    if (!covers::representable_3l_nsq(d).empty()) ++violations;
  }
  return make_check("DEGREE-8", ok && violations == 0,
                    std::string("3l+n^2=8 ") + (ok ? "has no solution" : "has a solution") +
                        "; d = 2 mod 3, d <= 1000: " + std::to_string(violations) + " representable");
}

inline Check check_degree_cases() {
  using covers::Branch;
  auto got = covers::enumerate_degrees(Branch::TwoNSquared, 12, 48);
  std::vector<std::tuple<covers::Int, covers::Int, covers::Int, covers::Int>> got_set;
  for (const auto& w : got) got_set.emplace_back(w.k, w.l, w.n, w.d);
  // independent triple loop
  std::vector<std::tuple<covers::Int, covers::Int, covers::Int, covers::Int>> naive;
  for (covers::Int k = 1; k <= 48; ++k) {
    for (covers::Int l = 1; l <= 48; ++l) {
      for (covers::Int n = 1; n <= 48; ++n) {
        covers::Int d = 3 * k * (3 * l + 2 * n * n);
        if (l % 2 == 0 && d >= 12 && d <= 48) naive.emplace_back(k, l, n, d);
      }
    }
  }
  auto by_d = [](const auto& a, const auto& b) {
    return std::tie(std::get<3>(a), std::get<0>(a), std::get<1>(a), std::get<2>(a)) <
           std::tie(std::get<3>(b), std::get<0>(b), std::get<1>(b), std::get<2>(b));
  };
  std::sort(naive.begin(), naive.end(), by_d);
  const decltype(naive) expected = {{1, 2, 1, 24}, {1, 2, 2, 42}, {1, 4, 1, 42}, {2, 2, 1, 48}};
  bool ok = got_set == naive && got_set == expected &&
            covers::volume_bound(24).render() == "v0/6" && covers::volume_bound(48).render() == "v0/12";
  std::string detail;
  for (const auto& [k, l, n, d] : got_set) {
    detail += "(k,l,n)=(" + std::to_string(k) + "," + std::to_string(l) + "," + std::to_string(n) +
              ")->" + std::to_string(d) + " vol<=" + covers::volume_bound(d).render() + "; ";
  }
  detail += got_set == naive ? "matches brute force" : "differs from brute force";
  return make_check("DEGREE-CASES-24-48", ok, detail);
}

inline Check check_pretzel_orders() {
  using namespace surgery;
  bool ok = lens_orders(1, 0) == OrderTriple{1, 18, 19};
  std::size_t bad = 0;
  for (Int r = -10; r <= 10; ++r) {
    if (slope_after_twist(Slope(18, 1), r) != Slope(49 * r + 18, 1)) ++bad;
    if (slope_after_twist(Slope(1, 0), r) != Slope(1, 0)) ++bad;
  }
  return make_check("PRETZEL-ORDERS-18-19", ok && bad == 0,
                    "lens_orders(1,0)=(1,18,19); twist mismatches for r in [-10,10]: " +
                        std::to_string(bad));
}

inline Check check_beta_sweep(surgery::Int n_max, surgery::Int m_max) {
  using namespace surgery;
  std::size_t tested = 0;
  std::size_t collisions = 0;
  for (Int n = 1; n <= n_max; ++n) {
    if (!covers_are_connected(n)) continue;
    for (Int m = -m_max; m <= m_max; ++m) {
      ++tested;
      if (!beta_orders_unchecked(n, m).pairwise_distinct()) ++collisions;
    }
  }
  auto witness = beta_orders_unchecked(49, -17);
  bool hypothesis_needed = !witness.pairwise_distinct();
  return make_check("BETA-DISTINCTNESS-SWEEP", collisions == 0 && hypothesis_needed,
                    std::to_string(tested) + " pairs, " + std::to_string(collisions) +
                        " collisions; (n,m)=(49,-17) gives (" + std::to_string(witness.a) + "," +
                        std::to_string(witness.b) + "," + std::to_string(witness.c) + ")");
}

inline Check check_order32() {
  using namespace surgery;
  bool ok = !is_berge_lens_order(32).has_value();
  const std::tuple<Int, Int, Int> expected[] = {{18, 0, 18}, {19, 0, 19}, {67, 1, 18}, {68, 1, 19}};
  for (auto [N, r, f] : expected) {
    auto w = is_berge_lens_order(N);
    ok = ok && w && w->r == r && w->filling == f;
  }
  return make_check("ORDER-32", ok, "32 not realized; 18, 19, 67, 68 realized by r = 0, 0, 1, 1");
}

inline Check check_linking_escape() {
  using namespace surgery;
  bool ok = true;
  for (Int l1 = -20; l1 <= 20; ++l1) {
    for (Int l2 = -20; l2 <= 20; ++l2) {
      std::size_t hits = 0;
      for (Int n = -100; n <= 100; ++n) hits += linking_after_twist(l1, l2, n) == 7;
      if (l1 != 0) {
        ok = ok && hits <= 1 && eventually_avoids(l1, l2);
        auto n7 = twist_hitting(l1, l2, 7);
        ok = ok && (hits == 1) == (n7 && *n7 >= -100 && *n7 <= 100);
      } else if (l2 == 7) {
        ok = ok && hits == 201 && !eventually_avoids(l1, l2);
      }
    }
  }
  return make_check("LINKING-7-ESCAPE", ok,
                    "l1 in [-20,20], l2 in [-20,20], n in [-100,100]; l1 = 0, l2 = 7 never escapes");
}

inline Check check_volume_floor() {
  using namespace covers;
  bool ok = true;
  std::size_t n = 0;
  for (Branch b : {Branch::NSquared, Branch::TwoNSquared}) {
    for (const auto& w : enumerate_degrees(b, 12, 48)) {
      ok = ok && minimum_orbifold_volume_check(volume_bound(w.d));
      ++n;
    }
  }
  ok = ok && volume_bound(48).bound == kMinimumCuspedVolume && !minimum_orbifold_volume_check(volume_bound(52));
  return make_check("VOLUME-FLOOR", ok,
                    std::to_string(n) + " witnesses in [12,48] above v0/12; d = 48 meets it exactly");
}

}  // namespace detail

/// Runs every registered check.  Throws on unreadable Q_M input; PSL(2,O3)
/// checks are skipped when that file is missing or fails its sanity gate.
inline VerificationReport verify_paper(const VerifyOptions& opt) {
  Presentation qm = load_presentation(opt.qm_path);
  VerificationReport rep;
  rep.checks.push_back(detail::check_qm_index8(qm, opt.node_limit));
  for (auto& c : detail::check_psl2o3(opt.psl2o3_path, opt.node_limit)) rep.checks.push_back(std::move(c));
  rep.checks.push_back(detail::check_degree8());
  rep.checks.push_back(detail::check_degree_cases());
  rep.checks.push_back(detail::check_pretzel_orders());
  rep.checks.push_back(detail::check_beta_sweep(opt.sweep_n_max, opt.sweep_m_max));
  rep.checks.push_back(detail::check_order32());
  rep.checks.push_back(detail::check_linking_escape());
  rep.checks.push_back(detail::check_volume_floor());
  return rep;
}

enum class ReportFormat { Text, Json };

inline std::string emit_report(const VerificationReport& rep, ReportFormat fmt) {
  if (fmt == ReportFormat::Json) {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : rep.checks) {
      nlohmann::ordered_json j;
      j["id"] = c.id;
      j["paper"] = c.claim;
      j["verdict"] = verdict_name(c.verdict);
      j["detail"] = c.detail;
      checks.push_back(std::move(j));
    }
    nlohmann::ordered_json out;
    out["checks"] = std::move(checks);
    out["overall"] = rep.passed() ? "pass" : "fail";
    return out.dump();
  }
  std::ostringstream os;
  std::size_t width = 2;
  for (const auto& c : rep.checks) width = std::max(width, c.id.size());
  for (const auto& c : rep.checks) {
    std::string verdict(verdict_name(c.verdict));
    for (auto& ch : verdict) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    os << c.id << std::string(width + 2 - c.id.size(), ' ') << verdict
       << std::string(9 - verdict.size(), ' ') << c.detail << "\n";
  }
  os << "overall: " << (rep.passed() ? "pass" : "fail") << "\n";
  return os.str();
}

}  // namespace orbkit

#endif  // ORBKIT_VERIFY_HPP_
