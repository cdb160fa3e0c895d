// orbkit: command-line front end.
//
// Exit codes: 0 success / pass, 1 a check or sweep failed, 2 usage or I/O error.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbkit/orbkit.hpp"

namespace {

using nlohmann::ordered_json;
using namespace orbkit;

struct Globals {
  bool json = false;
  bool quiet = false;
};

ordered_json abel_json(const AbelianInvariants& a) {
  ordered_json t = ordered_json::array();
  for (const auto& d : a.torsion) t.push_back(static_cast<long long>(d));
  return {{"torsion", t}, {"free_rank", a.free_rank}};
}

std::string abel_text(const AbelianInvariants& a) {
  std::string s;
  for (std::size_t i = 0; i < a.free_rank; ++i) s += s.empty() ? "Z" : " + Z";
  for (const auto& d : a.torsion) s += (s.empty() ? "Z/" : " + Z/") + d.str();
  return s.empty() ? "0" : s;
}

ordered_json table_json(const CosetTable& t) {
  ordered_json rows = ordered_json::array();
  for (std::size_t c = 0; c < t.size(); ++c) {
    ordered_json row = ordered_json::array();
    for (Coset d : t.row(static_cast<Coset>(c))) row.push_back(d + 1);
    rows.push_back(std::move(row));
  }
  return rows;
}

void print(const Globals& g, const ordered_json& j, const std::string& text) {
  if (g.quiet) return;
  if (g.json) {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << text;
  }
}

surgery::Slope parse_slope(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw CLI::ValidationError("--slope", "expected P,Q");
  return surgery::Slope(std::stoll(s.substr(0, comma)), std::stoll(s.substr(comma + 1)));
}

int run(int argc, char** argv) {
  CLI::App app{"orbkit: finitely presented groups and Berge-manifold surgery arithmetic"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Emit JSON");
  app.add_flag("--quiet", g.quiet, "Suppress output; exit code only");
  int status = 0;

  // parse
  auto* parse = app.add_subcommand("parse", "Parse a presentation file and print it normalized");
  parse->fallthrough();
  std::string parse_file;
  parse->add_option("FILE", parse_file)->required();
  parse->callback([&] {
    auto p = load_presentation(parse_file);
    ordered_json rels = ordered_json::array();
    for (const auto& r : p.relators()) rels.push_back(format_word(r, p.generators()));
    print(g, {{"group", p.name()}, {"generators", p.generators()}, {"relators", rels}},
          format_presentation(p));
  });

  // abel
  auto* abel = app.add_subcommand("abel", "Abelian invariants of a presented group");
  abel->fallthrough();
  std::string abel_file;
  abel->add_option("FILE", abel_file)->required();
  abel->callback([&] {
    auto a = abelianization(load_presentation(abel_file));
    print(g, abel_json(a), abel_text(a) + "\n");
  });

  // enum
  auto* en = app.add_subcommand("enum", "Todd-Coxeter coset enumeration");
  en->fallthrough();
  std::string enum_file;
  std::string subgroup;
  std::size_t max_cosets = kDefaultMaxCosets;
  bool show_table = false;
  en->add_option("FILE", enum_file)->required();
  en->add_option("--subgroup", subgroup, "Subgroup generators as \"w1;w2;...\" (empty: trivial)");
  en->add_option("--max-cosets", max_cosets, "Live coset limit")->check(CLI::PositiveNumber);
  en->add_flag("--table", show_table, "Include the coset table");
  en->callback([&] {
    auto p = load_presentation(enum_file);
    auto out = coset_enumerate(p, parse_word_list(subgroup, p.generators()), max_cosets);
    if (auto* done = std::get_if<EnumerationComplete>(&out)) {
      ordered_json j{{"outcome", "complete"}, {"index", done->index}};
      std::string text = "complete: index " + std::to_string(done->index) + "\n";
      if (show_table) {
        j["table"] = table_json(done->table);
        for (const auto& row : j["table"]) text += row.dump() + "\n";
      }
      print(g, j, text);
    } else {
      auto& ov = std::get<EnumerationOverflow>(out);
      print(g, {{"outcome", "overflow"}, {"cosets_used", ov.cosets_used}},
            "overflow: " + std::to_string(ov.cosets_used) + " cosets used\n");
    }
  });

  // lowindex
  auto* li = app.add_subcommand("lowindex", "Subgroups of low index up to conjugacy");
  li->fallthrough();
  std::string li_file;
  std::size_t max_index = 1;
  bool exact = false;
  bool with_abel = false;
  std::size_t node_limit = LowIndexOptions{}.node_limit;
  li->add_option("FILE", li_file)->required();
  li->add_option("--max-index", max_index)->required()->check(CLI::PositiveNumber);
  li->add_flag("--exact", exact, "Only subgroups of index exactly --max-index");
  li->add_flag("--abel", with_abel, "Compute each subgroup's abelianization");
  li->add_option("--node-limit", node_limit, "Search node ceiling");
  li->callback([&] {
    auto p = load_presentation(li_file);
    LowIndexOptions opt;
    opt.exact = exact;
    opt.node_limit = node_limit;
    auto recs = low_index_subgroups(p, max_index, opt);
    ordered_json arr = ordered_json::array();
    std::string text;
    for (auto& rec : recs) {
      if (with_abel) compute_abelianization(p, rec);
      ordered_json j{{"index", rec.index}, {"table", table_json(rec.table)}};
      text += "index " + std::to_string(rec.index) + ": conjugates " +
              std::to_string(rec.index / normalizer_index(rec.table));
      if (rec.abelianization) {
        j["abelianization"] = abel_json(*rec.abelianization);
        text += ", abelianization " + abel_text(*rec.abelianization);
      }
      text += "\n";
      arr.push_back(std::move(j));
    }
    text += std::to_string(recs.size()) + " conjugacy classes\n";
    print(g, arr, text);
  });

  // surgery
  auto* sur = app.add_subcommand("surgery", "Slope and lens-space order arithmetic");
  sur->fallthrough();
  sur->require_subcommand(1);

  auto* orders = sur->add_subcommand("orders", "Cyclic orders of the three fillings of beta(n,m)");
  orders->fallthrough();
  surgery::Int on = 1, om = 0;
  orders->add_option("--n", on)->required();
  orders->add_option("--m", om)->required();
  orders->callback([&] {
    surgery::SurgerySpec spec(on, om);
    auto t = surgery::beta_orders(spec);
    print(g, {{"n", on}, {"m", om}, {"r", spec.r()}, {"orders", {t.a, t.b, t.c}}},
          "r = " + std::to_string(spec.r()) + ", orders (" + std::to_string(t.a) + ", " +
              std::to_string(t.b) + ", " + std::to_string(t.c) + ")\n");
  });

  auto* slope = sur->add_subcommand("slope", "Image of a knotted-cusp slope under a twist");
  slope->fallthrough();
  surgery::Int twist = 0;
  std::string slope_text;
  slope->add_option("--r", twist)->required();
  slope->add_option("--slope", slope_text, "P,Q")->required();
  slope->callback([&] {
    auto s = surgery::slope_after_twist(parse_slope(slope_text), twist);
    print(g, {{"p", s.p()}, {"q", s.q()}}, s.str() + "\n");
  });

  auto* berge = sur->add_subcommand("berge-order", "Is N = |49r+18| or |49r+19| for some r?");
  berge->fallthrough();
  surgery::Int order = 1;
  berge->add_option("N", order)->required()->check(CLI::PositiveNumber);
  berge->callback([&] {
    auto w = surgery::is_berge_lens_order(order);
    ordered_json j{{"order", order}, {"realized", w.has_value()}};
    std::string text = w ? "yes: |49*" + std::to_string(w->r) + " + " + std::to_string(w->filling) + "|\n"
                         : "no\n";
    if (w) {
      j["r"] = w->r;
      j["filling"] = w->filling;
    }
    print(g, j, text);
  });

  auto* sweep = sur->add_subcommand("sweep", "Distinctness sweep over gcd(n,7)=1");
  sweep->fallthrough();
  surgery::Int n_max = 200, m_max = 200;
  sweep->add_option("--n-max", n_max)->check(CLI::PositiveNumber);
  sweep->add_option("--m-max", m_max)->check(CLI::NonNegativeNumber);
  sweep->callback([&] {
    std::size_t tested = 0;
    ordered_json bad = ordered_json::array();
    for (surgery::Int n = 1; n <= n_max; ++n) {
      if (!surgery::covers_are_connected(n)) continue;
      for (surgery::Int m = -m_max; m <= m_max; ++m) {
        ++tested;
        if (!surgery::beta_orders_unchecked(n, m).pairwise_distinct()) bad.push_back({n, m});
      }
    }
    print(g, {{"tested", tested}, {"violations", bad}},
          std::to_string(tested) + " pairs tested, " + std::to_string(bad.size()) + " violations\n");
    if (!bad.empty()) status = 1;
  });

  // covers
  auto* cov = app.add_subcommand("covers", "Covering-degree arithmetic");
  cov->fallthrough();
  cov->require_subcommand(1);

  auto* cenum = cov->add_subcommand("enumerate", "Degrees 3k(3l+n^2) or 3k(3l+2n^2) in a range");
  cenum->fallthrough();
  std::string branch = "2nsq";
  covers::Int dmin = 12, dmax = 48;
  cenum->add_option("--branch", branch)->check(CLI::IsMember({"nsq", "2nsq"}));
  cenum->add_option("--dmin", dmin);
  cenum->add_option("--dmax", dmax);
  cenum->callback([&] {
    auto b = branch == "nsq" ? covers::Branch::NSquared : covers::Branch::TwoNSquared;
    ordered_json arr = ordered_json::array();
    std::string text;
    for (const auto& w : covers::enumerate_degrees(b, dmin, dmax)) {
      auto vol = covers::volume_bound(w.d);
      arr.push_back({{"k", w.k}, {"l", w.l}, {"n", w.n}, {"d", w.d}, {"volume_bound", vol.render()}});
      text += "k=" + std::to_string(w.k) + " l=" + std::to_string(w.l) + " n=" + std::to_string(w.n) +
              " d=" + std::to_string(w.d) + " vol<=" + vol.render_with_value() + "\n";
    }
    print(g, arr, text);
  });

  auto* rep = cov->add_subcommand("representable", "Solutions of 3l + n^2 = D");
  rep->fallthrough();
  covers::Int degree = 1;
  rep->add_option("D", degree)->required()->check(CLI::PositiveNumber);
  rep->callback([&] {
    ordered_json arr = ordered_json::array();
    std::string text;
    for (auto [l, n] : covers::representable_3l_nsq(degree)) {
      arr.push_back({{"l", l}, {"n", n}});
      text += "l=" + std::to_string(l) + " n=" + std::to_string(n) + "\n";
    }
    if (text.empty()) text = "not representable\n";
    print(g, {{"d", degree}, {"solutions", arr}}, text);
  });

  auto* fib = cov->add_subcommand("fiber", "Fiber size of a rigid-cusp covering");
  fib->fallthrough();
  std::string from, to;
  covers::Int fn = 1;
  std::vector<std::string> cusp_names{"244", "333", "236", "torus"};
  fib->add_option("--from", from)->required()->check(CLI::IsMember(cusp_names));
  fib->add_option("--to", to)->required()->check(CLI::IsMember(cusp_names));
  fib->add_option("--n", fn)->required()->check(CLI::PositiveNumber);
  fib->callback([&] {
    auto size = covers::fiber_size(*covers::parse_cusp(from), *covers::parse_cusp(to), fn);
    print(g, {{"fiber_size", size}}, std::to_string(size) + "\n");
  });

  // verify-paper
  auto* ver = app.add_subcommand("verify-paper", "Replay every registered claim");
  ver->fallthrough();
  VerifyOptions vopt = default_verify_options();
  std::string psl_path = *vopt.psl2o3_path;
  ver->add_option("--qm", vopt.qm_path, "Q_M presentation file");
  ver->add_option("--psl2o3", psl_path, "PSL(2,O3) presentation file");
  ver->add_option("--n-max", vopt.sweep_n_max)->check(CLI::PositiveNumber);
  ver->add_option("--m-max", vopt.sweep_m_max)->check(CLI::NonNegativeNumber);
  ver->callback([&] {
    vopt.psl2o3_path = psl_path;
    auto report = verify_paper(vopt);
    if (!g.quiet) {
      std::cout << emit_report(report, g.json ? ReportFormat::Json : ReportFormat::Text);
      if (g.json) std::cout << "\n";
    }
    status = report.passed() ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "orbkit: " << e.what() << "\n";
    return 2;
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
