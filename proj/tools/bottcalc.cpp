// Command-line front end: single evaluations, scans, tables, oracle runs and the acceptance suite.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 truncation.

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "bottcalc/acceptance.hpp"
#include "bottcalc/bott_grassmannian.hpp"
#include "bottcalc/bott_isotropic.hpp"
#include "bottcalc/cotangent_oracle.hpp"
#include "bottcalc/reference_tables.hpp"
#include "bottcalc/serialize.hpp"

using namespace bottcalc;

namespace {

enum exit_code { exit_pass = 0, exit_fail = 1, exit_usage = 2, exit_truncated = 3 };

struct Global {
  std::string format = "text";
  std::string pairing = "linear";
  std::string rule = "tables";
  unsigned threads = 0;

  bool json() const { return format == "json"; }
  bool csv() const { return format == "csv"; }
  Pairing pairing_value() const { return pairing == "coroot" ? Pairing::coroot : Pairing::linear; }
  WeightRule rule_value() const { return rule == "literal" ? WeightRule::literal : WeightRule::tables; }
};

// Raised for user-facing precondition failures; carries the module name.
struct usage_error : std::invalid_argument {
  std::string module;
  usage_error(std::string mod, const std::string& what) : std::invalid_argument(what), module(std::move(mod)) {}
};

unsigned default_threads() {
  if (const char* s = std::getenv("BOTTCALC_THREADS")) {
    try {
      const long v = std::stol(s);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw usage_error("cli", std::string("BOTTCALC_THREADS must be a positive integer, got '") + s + "'");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

// Errors from library code are reported with the module that raised them.
int guarded(const char* module, const std::function<int()>& body) {
  try {
    return body();
  } catch (const usage_error& e) {
    std::cerr << "bottcalc: " << e.module << ": " << e.what() << '\n';
    return exit_usage;
  } catch (const parse_error& e) {
    std::cerr << "bottcalc: weights: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "bottcalc: " << module << ": precondition violated: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "bottcalc: " << module << ": " << e.what() << '\n';
    return exit_fail;
  }
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string short_answer(const CohomologyAnswer& a) { return detail::describe(a); }

// ---- bott ----

struct BottArgs {
  std::size_t n = 0, r = 0;
  std::string bundle, alpha, beta;
  Int twist = 0;
  std::vector<Int> range;
};

int cmd_bott(const Global& g, const BottArgs& a) {
  check_grassmannian(a.n, a.r);
  const bool named = !a.bundle.empty();
  if (named == (!a.alpha.empty() || !a.beta.empty()))
    throw usage_error("cli", "bott needs either --bundle or both --alpha and --beta");
  if (!named && (a.alpha.empty() || a.beta.empty())) throw usage_error("cli", "bott needs both --alpha and --beta");
  std::optional<GrassBundle> gb;
  if (named) {
    if (a.bundle == "O") gb = GrassBundle::O;
    else if (a.bundle == "theta") gb = GrassBundle::theta;
    else throw usage_error("bott_grassmannian", "unknown bundle '" + a.bundle + "' (O, theta)");
  }
  Int lo = a.twist, hi = a.twist;
  if (!a.range.empty()) {
    lo = a.range[0];
    hi = a.range[1];
    if (lo > hi) throw usage_error("cli", "--range needs LO <= HI");
  }
  auto spec_at = [&](Int m) {
    if (gb) return named_bundle(*gb, a.n, a.r, m);
    return BundleSpec{parse_weight(a.alpha), parse_weight(a.beta), m, "custom"};
  };
  const std::string label = named ? a.bundle : "custom";
  Json list = Json::array();
  if (g.csv()) std::cout << "n,r,bundle,m,l,weight,dim\n";
  for (Int m = lo; m <= hi; ++m) {
    const BundleSpec spec = spec_at(m);
    const CohomologyAnswer ans = bott_evaluate(spec, a.n, a.r);
    if (g.json()) {
      list.push_back(bott_entry(label, m, ans));
    } else if (g.csv()) {
      std::cout << a.n << ',' << a.r << ',' << label << ',' << m << ',';
      if (ans.vanishes) std::cout << ",,0\n";
      else std::cout << ans.degree << ',' << csv_quote(render_weight(ans.weight)) << ',' << ans.dimension.get_str() << '\n';
    } else if (lo == hi) {
      std::cout << short_answer(ans) << '\n';
    } else {
      std::cout << "m=" << m << ": " << short_answer(ans) << '\n';
    }
  }
  if (g.json()) {
    Json j = schema_header("bott");
    j["G"] = {{"r", a.r}, {"n", a.n}};
    j["entries"] = list;
    print_json(j);
  }
  return exit_pass;
}

// ---- iso ----

struct IsoArgs {
  std::string family, bundle;
  std::size_t r = 0, n = 0;
  std::optional<Int> m;
  bool lemmata = false;
};

std::string range_text(const IsoRange& r) {
  std::string where;
  if (!r.lo && !r.hi) where = "all m";
  else if (!r.lo) where = "m <= " + std::to_string(*r.hi);
  else if (!r.hi) where = "m >= " + std::to_string(*r.lo);
  else if (*r.lo == *r.hi) where = "m = " + std::to_string(*r.lo);
  else where = std::to_string(*r.lo) + " <= m <= " + std::to_string(*r.hi);
  return where + ": " + (r.index ? "index " + std::to_string(*r.index) : std::string("vanishes"));
}

int cmd_iso(const Global& g, const IsoArgs& a) {
  const IsoGrassmannian X{parse_family(a.family), a.r, a.n};
  const IsoBundle b = parse_iso_bundle(a.bundle);
  if (!bundle_valid(X.type(), X.n, X.r, b))
    throw usage_error("bott_isotropic", iso_bundle_name(b) + std::string(" is not defined on ") + X.name());
  const IsoClassification c = cohomology_indices(X, b, g.rule_value(), g.pairing_value());
  std::vector<LemmaCheck> checks;
  if (a.lemmata) checks = verify_lemmata(X, g.rule_value(), g.pairing_value());
  bool ok = true;
  for (const LemmaCheck& k : checks) ok = ok && k.ok();

  if (a.m) {
    const std::vector<Int> gamma = gamma_weight(X, b, *a.m, g.rule_value());
    const std::optional<Int> idx = X.roots().index(gamma, g.pairing_value());
    if (g.json()) {
      Json j = schema_header("iso");
      j["X"] = X.name();
      j["bundle"] = iso_bundle_name(b);
      j["m"] = *a.m;
      j["gamma"] = gamma;
      j["result"] = idx ? Json{{"l", *idx}} : Json{{"vanishes", true}};
      print_json(j);
    } else if (g.csv()) {
      std::cout << "X,bundle,m,l\n" << csv_quote(X.name()) << ',' << iso_bundle_name(b) << ',' << *a.m << ','
                << (idx ? std::to_string(*idx) : "") << '\n';
    } else {
      std::cout << (idx ? "index " + std::to_string(*idx) : std::string("vanishes")) << '\n';
    }
    return exit_pass;
  }

  if (g.json()) {
    Json j = schema_header("iso");
    const Json body = iso_json(X, b, c, checks);
    for (const auto& [k, v] : body.items()) j[k] = v;
    print_json(j);
  } else if (g.csv()) {
    std::cout << "X,bundle,m_lo,m_hi,status\n";
    for (const IsoRange& r : c.ranges)
      std::cout << csv_quote(X.name()) << ',' << iso_bundle_name(b) << ',' << (r.lo ? std::to_string(*r.lo) : "")
                << ',' << (r.hi ? std::to_string(*r.hi) : "") << ','
                << (r.index ? "H^" + std::to_string(*r.index) : std::string("vanishes")) << '\n';
  } else {
    std::cout << X.name() << ", " << iso_bundle_name(b) << "(m), dim " << X.dim() << '\n';
    for (const IsoRange& r : c.ranges) std::cout << "  " << range_text(r) << '\n';
    if (a.lemmata) {
      for (const LemmaCheck& k : checks)
        std::cout << "  " << std::left << std::setw(10) << k.lemma << std::setw(16) << band_name(k.band)
                  << " expected " << std::setw(13) << verdict_name(k.expected) << " computed " << std::setw(13)
                  << verdict_name(k.computed) << (k.ok() ? "ok" : "MISMATCH") << '\n';
    }
  }
  return ok ? exit_pass : exit_fail;
}

// ---- scan ----

struct ScanArgs {
  std::size_t n = 0, r = 0;
  Int i_lo = 1, i_hi = 0;
  bool i_hi_set = false;
};

int cmd_scan(const Global& g, const ScanArgs& a) {
  check_grassmannian(a.n, a.r);
  const Int top = static_cast<Int>(a.r * (a.n - a.r));
  const Int i_hi = a.i_hi_set ? a.i_hi : top - 1;
  std::cerr << "scan " << detail::gname(a.r, a.n) << ": H^i for " << a.i_lo << " <= i <= " << i_hi << ", |m| <= "
            << scan_window(a.n) << '\n';
  const ScanReport rep = scan_vanishing(a.n, a.r, a.i_lo, i_hi);
  bool undocumented = false;
  for (const auto& e : rep.exceptions) undocumented = undocumented || !e.documented;
  if (g.json()) {
    Json j = schema_header("scan");
    j["G"] = {{"r", a.r}, {"n", a.n}};
    Json list = Json::array();
    for (GrassBundle b : {GrassBundle::O, GrassBundle::theta})
      for (Int m = -rep.window; m <= rep.window; ++m)
        list.push_back(bott_entry(bundle_name(b), m, bott_evaluate(named_bundle(b, a.n, a.r, m), a.n, a.r)));
    j["entries"] = list;
    j["summary"] = to_json(rep);
    print_json(j);
  } else if (g.csv()) {
    std::cout << "n,r,bundle,l,m,documented\n";
    for (const auto& e : rep.exceptions)
      std::cout << a.n << ',' << a.r << ',' << bundle_name(e.bundle) << ',' << e.degree << ',' << e.m << ','
                << (e.documented ? "yes" : "no") << '\n';
  } else {
    std::cout << detail::gname(a.r, a.n) << ": window |m| <= " << rep.window
              << (rep.stable ? " (beyond stability threshold)" : " (below stability threshold)") << '\n';
    if (rep.certified_hi >= a.i_lo)
      std::cout << "H^i(O(m)) = H^i(Theta(m)) = 0 for all m, " << a.i_lo << " <= i <= " << rep.certified_hi << '\n';
    for (const auto& e : rep.exceptions)
      std::cout << "nonzero: H^" << e.degree << "(" << bundle_name(e.bundle) << "(" << e.m << "))"
                << (e.documented ? " (documented)" : " (UNDOCUMENTED)") << '\n';
  }
  return undocumented ? exit_fail : exit_pass;
}

// ---- table ----

struct TableArgs {
  std::string g, rcase, bundle;
  bool check = false;
  std::size_t n_max = 8;
};

RootType parse_algebra(const std::string& s) {
  if (s == "sp" || s == "C" || s == "LG") return RootType::C;
  if (s == "so_odd" || s == "so-odd" || s == "B" || s == "OG_odd") return RootType::B;
  if (s == "so_even" || s == "so-even" || s == "D" || s == "OG_even") return RootType::D;
  throw usage_error("reference_tables", "unknown algebra '" + s + "' (sp, so_odd, so_even)");
}

const char* algebra_name(RootType t) {
  switch (t) {
    case RootType::C: return "sp";
    case RootType::B: return "so_odd";
    case RootType::D: return "so_even";
    default: return "?";
  }
}

int cmd_table(const Global& g, const TableArgs& a) {
  const RootType t = parse_algebra(a.g);
  std::optional<IsoBundle> fb;
  if (!a.bundle.empty()) fb = parse_iso_bundle(a.bundle);
  std::vector<const TableRow*> rows;
  for (const TableRow& row : reference_rows)
    if (row.type == t && (a.rcase.empty() || row.rcase == a.rcase) && (!fb || row.bundle == *fb)) rows.push_back(&row);
  if (rows.empty()) throw usage_error("reference_tables", "no row for " + a.g + (a.rcase.empty() ? "" : " with r-case '" + a.rcase + "'"));

  std::vector<TableCheck> checks;
  if (a.check)
    for (const TableCheck& c : verify_tables(a.n_max, g.rule_value()))
      for (const TableRow* row : rows)
        if (c.row == row) checks.push_back(c);
  bool ok = true;
  for (const TableCheck& c : checks) ok = ok && c.ok;

  if (g.json()) {
    Json j = schema_header("table");
    j["g"] = algebra_name(t);
    Json rs = Json::array();
    for (const TableRow* row : rows)
      rs.push_back({{"bundle", iso_bundle_name(row->bundle)},
                    {"r_case", std::string(row->rcase)},
                    {"ones", std::string(row->ones)},
                    {"max", std::string(row->max2)},
                    {"other", std::string(row->other)}});
    j["rows"] = rs;
    if (a.check) {
      Json cs = Json::array();
      for (const TableCheck& c : checks) cs.push_back(to_json(c));
      j["checks"] = cs;
    }
    print_json(j);
  } else if (g.csv()) {
    std::cout << "g,bundle,r_case,ones,max,other\n";
    for (const TableRow* row : rows)
      std::cout << algebra_name(t) << ',' << iso_bundle_name(row->bundle) << ',' << csv_quote(std::string(row->rcase))
                << ',' << csv_quote(std::string(row->ones)) << ',' << csv_quote(std::string(row->max2)) << ','
                << csv_quote(std::string(row->other)) << '\n';
  } else {
    for (const TableRow* row : rows) {
      std::cout << algebra_name(t) << "  " << iso_bundle_name(row->bundle) << "  " << row->rcase << "  |  "
                << row->ones << "  |  " << (row->max2.empty() ? "-" : row->max2) << "  |  "
                << (row->other.empty() ? "-" : row->other) << '\n';
    }
    for (const TableCheck& c : checks) {
      std::cout << "  n=" << c.n << " r=" << c.r << " " << iso_bundle_name(c.row->bundle) << " " << c.row->rcase
                << ": " << (c.ok ? "ok" : "MISMATCH") << "  " << render_values(c.ones_computed, c.twos_computed);
      if (!c.ok) std::cout << "  (" << c.detail << ")";
      std::cout << '\n';
    }
  }
  return ok ? exit_pass : exit_fail;
}

// ---- oracle ----

struct OracleArgs {
  std::size_t r = 0, n = 0;
  std::optional<std::size_t> deg;
  std::size_t p_min = 1, p_max = 3;
  bool all_weights = false, modular = false, timing = false;
  std::size_t max_columns = 2000000;
  double time_limit = 0;
  std::string dump;
};

std::string totals_line(const SliceTotals& t) {
  std::ostringstream os;
  os << "C0 " << t.c0 << "  C1 " << t.c1 << "  Omega " << t.omega << "  C2 " << t.c2 << "  C3 " << t.c3
     << "  rank d1 " << t.rank_d1 << "  rank d2 " << t.rank_d2 << "  ker d3 " << t.ker_d3;
  return os.str();
}

int cmd_oracle(const Global& g, const OracleArgs& a) {
  OracleConfig cfg;
  cfg.r = a.r;
  cfg.n = a.n;
  cfg.p_min = a.deg ? *a.deg : a.p_min;
  cfg.p_max = a.deg ? *a.deg : a.p_max;
  cfg.all_weights = a.all_weights;
  cfg.modular = a.modular;
  cfg.max_columns = a.max_columns;
  cfg.time_limit = a.time_limit;
  cfg.threads = g.threads;
  cfg.dump_dir = a.dump;
  cfg.on_slice = [](const SliceReport& s) {
    std::cerr << "oracle: P-degree " << s.p << " done, " << s.blocks.size() << " blocks, " << std::fixed
              << std::setprecision(2) << s.seconds << " s" << (s.truncated ? " (truncated)" : "") << '\n';
  };
  const OracleReport rep = local_cohomology_dims(cfg);

  bool ok = rep.minors_rank == subsets(a.n, a.r).size() && BigInt(rep.relations) == rep.relations_predicted;
  for (const SliceReport& s : rep.slices) ok = ok && s.mismatches.empty() && s.composites_zero && s.image_invariant;

  if (g.json()) {
    Json j = schema_header("oracle");
    const Json body = to_json(rep);
    for (const auto& [k, v] : body.items()) j[k] = v;
    if (a.timing) {
      Json secs = Json::array();
      for (const SliceReport& s : rep.slices) secs.push_back(s.seconds);
      j["seconds"] = secs;
    }
    print_json(j);
  } else if (g.csv()) {
    std::cout << "r,n,p,C0,C1,Omega,C2,C3,rank_d1,rank_d2,ker_d3,H1,H2,blocks,exact,truncated,seconds\n";
    for (const SliceReport& s : rep.slices) {
      const SliceTotals& t = s.totals;
      std::cout << a.r << ',' << a.n << ',' << s.p << ',' << t.c0 << ',' << t.c1 << ',' << t.omega << ',' << t.c2 << ','
                << t.c3 << ',' << t.rank_d1 << ',' << t.rank_d2 << ',' << t.ker_d3 << ',' << t.h1 << ',' << t.h2 << ','
                << s.blocks.size() << ',' << (s.exact ? 1 : 0) << ',' << (s.truncated ? 1 : 0) << ',' << std::fixed
                << std::setprecision(3) << s.seconds << '\n';
    }
  } else {
    std::cout << detail::gname(a.r, a.n) << ": " << rep.minors_rank << " independent minors, " << rep.relations
              << " quadratic relations (predicted " << rep.relations_predicted << ")\n";
    for (const SliceReport& s : rep.slices) {
      std::cout << "P-degree " << s.p << (s.truncated ? " [truncated]" : "") << (s.exact ? "" : " [modular]") << '\n';
      std::cout << "  computed   " << totals_line(s.totals) << '\n';
      std::cout << "  predicted  " << totals_line(s.predicted) << '\n';
      if (!s.truncated) {
        std::cout << "  dim H0_m(Omega)_" << s.p << " = " << s.totals.h1 << '\n';
        std::cout << "  dim H1_m(Omega)_" << s.p << " = " << s.totals.h2 << '\n';
      }
      if (!s.composites_zero) std::cout << "  composite of consecutive differentials is NONZERO\n";
      if (!s.image_invariant) std::cout << "  image of d2 is NOT invariant\n";
      for (const BlockMismatch& m : s.mismatches)
        std::cout << "  mismatch at weight (" << render_weight(m.mu) << "): " << m.quantity << " computed "
                  << m.computed << " predicted " << m.predicted << '\n';
    }
    if (!a.dump.empty()) std::cout << "matrices written to " << a.dump << '\n';
  }
  if (rep.truncated) return exit_truncated;
  return ok ? exit_pass : exit_fail;
}

// ---- verify-paper ----

struct VerifyArgs {
  std::vector<std::string> only;
  bool json = false, details = false;
  std::size_t p_max_r2 = 4, p_max_36 = 3;
};

int cmd_verify(const Global& g, const VerifyArgs& a) {
  std::vector<std::string> only;
  for (const std::string& s : a.only) {
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) {
        if (!known_criterion(item)) throw usage_error("acceptance", "unknown criterion '" + item + "'");
        only.push_back(item);
      }
  }
  AcceptanceConfig cfg;
  cfg.threads = g.threads;
  cfg.p_max_r2 = a.p_max_r2;
  cfg.p_max_36 = a.p_max_36;
  AcceptanceContext ctx(cfg);
  const auto results = run_acceptance(ctx, only, [](const CriterionResult& r) {
    std::cerr << "criterion " << r.id << " (" << r.key << ") " << (r.passed ? "passed" : "FAILED") << '\n';
  });
  bool ok = true;
  for (const CriterionResult& r : results) ok = ok && r.passed;
  if (a.json || g.json()) {
    Json j = schema_header("verify-paper");
    Json list = Json::array();
    for (const CriterionResult& r : results) list.push_back(to_json(r));
    j["criteria"] = list;
    j["passed"] = ok;
    print_json(j);
  } else if (g.csv()) {
    std::cout << "id,key,passed,summary,seconds\n";
    for (const CriterionResult& r : results)
      std::cout << r.id << ',' << r.key << ',' << (r.passed ? "PASS" : "FAIL") << ',' << csv_quote(r.summary) << ','
                << std::fixed << std::setprecision(3) << r.seconds << '\n';
  } else {
    for (const CriterionResult& r : results) {
      std::cout << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << std::left << std::setw(18) << r.key
                << r.summary << "  (" << std::fixed << std::setprecision(2) << r.seconds << " s)\n";
      if (!r.passed || a.details)
        for (const std::string& f : r.failures) std::cout << "      " << f << '\n';
    }
  }
  return ok ? exit_pass : exit_fail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bottcalc: Bott cohomology on Grassmannians and local cohomology of Pluecker algebras"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_flag_callback("--json", [&g] { g.format = "json"; }, "Shorthand for --format json");
  app.add_option("--pairing", g.pairing, "Root pairing for isotropic indices")
      ->check(CLI::IsMember({"linear", "coroot"}));
  app.add_option("--weight-rule", g.rule, "Reading of delta_{r+1} at D_n, r = n-2")
      ->check(CLI::IsMember({"tables", "literal"}));
  app.add_option("--threads", g.threads, "Worker threads (default: BOTTCALC_THREADS or all cores)")
      ->check(CLI::PositiveNumber);

  std::function<int()> run;

  BottArgs ba;
  auto* bott = app.add_subcommand("bott", "Cohomology of S_alpha Q (x) S_beta R (x) O(m) on G(r,n)");
  bott->add_option("--n", ba.n, "Ambient dimension")->required();
  bott->add_option("--r", ba.r, "Subspace dimension")->required();
  bott->add_option("--bundle", ba.bundle, "Named bundle: O or theta");
  bott->add_option("--alpha", ba.alpha, "Weight on Q (n-r entries)");
  bott->add_option("--beta", ba.beta, "Weight on R (r entries)");
  bott->add_option("--twist,-m", ba.twist, "Twist m");
  bott->add_option("--range", ba.range, "Twist range LO HI")->expected(2);
  bott->callback([&] { run = [&] { return guarded("bott_grassmannian", [&] { return cmd_bott(g, ba); }); }; });

  IsoArgs ia;
  auto* iso = app.add_subcommand("iso", "Cohomology index of a bundle on an isotropic Grassmannian");
  iso->add_option("--family", ia.family, "LG, OG_even or OG_odd")->required();
  iso->add_option("--r", ia.r, "Subspace dimension")->required();
  iso->add_option("--n", ia.n, "Rank of the root system")->required();
  iso->add_option("--bundle", ia.bundle, "d2, w2, tq or O")->required();
  iso->add_option("--m", ia.m, "Single twist; omit for the classification over all m");
  iso->add_flag("--lemmata", ia.lemmata, "Also check the stated vanishing classifications for X");
  iso->callback([&] { run = [&] { return guarded("bott_isotropic", [&] { return cmd_iso(g, ia); }); }; });

  ScanArgs sa;
  auto* scan = app.add_subcommand("scan", "Vanishing scan of H^i(O(m)) and H^i(Theta(m)) over the stable window");
  scan->add_option("--n", sa.n, "Ambient dimension")->required();
  scan->add_option("--r", sa.r, "Subspace dimension")->required();
  scan->add_option("--i-lo", sa.i_lo, "Lowest degree");
  auto* ihi = scan->add_option("--i-hi", sa.i_hi, "Highest degree (default r(n-r)-1)");
  scan->callback([&] {
    sa.i_hi_set = ihi->count() > 0;
    run = [&] { return guarded("bott_grassmannian", [&] { return cmd_scan(g, sa); }); };
  });

  TableArgs ta;
  auto* table = app.add_subcommand("table", "Print reference rows; with --check, recompute every instance");
  table->add_option("--g", ta.g, "sp, so_odd or so_even")->required();
  table->add_option("--r-case", ta.rcase, "Row label, e.g. \"2=r=n\"");
  table->add_option("--bundle", ta.bundle, "d2, w2 or tq");
  table->add_flag("--check", ta.check, "Recompute the root values for every instance");
  table->add_option("--n-max", ta.n_max, "Largest n for --check")->check(CLI::Range(2, 12));
  table->callback([&] { run = [&] { return guarded("bott_isotropic", [&] { return cmd_table(g, ta); }); }; });

  OracleArgs oa;
  auto* oracle = app.add_subcommand("oracle", "Exact dimensions of the four-term complex for the Pluecker algebra");
  oracle->add_option("--r", oa.r, "Subspace dimension")->required();
  oracle->add_option("--n", oa.n, "Ambient dimension")->required();
  oracle->add_option("--deg", oa.deg, "Single P-degree")->check(CLI::PositiveNumber);
  oracle->add_option("--p-min", oa.p_min, "First P-degree")->check(CLI::PositiveNumber);
  oracle->add_option("--p-max", oa.p_max, "Last P-degree")->check(CLI::PositiveNumber);
  oracle->add_flag("--all-weights", oa.all_weights, "Use every weight block instead of dominant ones");
  oracle->add_flag("--modular", oa.modular, "Ranks modulo two primes (results marked non-exact)");
  oracle->add_option("--max-columns", oa.max_columns, "Largest block size before truncation");
  oracle->add_option("--time-limit", oa.time_limit, "Seconds before truncation (0 = none)");
  oracle->add_option("--dump", oa.dump, "Directory for sparse-triplet matrix dumps")->check(CLI::ExistingDirectory);
  oracle->add_flag("--timing", oa.timing, "Include per-slice seconds in JSON output");
  oracle->callback([&] { run = [&] { return guarded("cotangent_oracle", [&] { return cmd_oracle(g, oa); }); }; });

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify-paper", "Run the acceptance suite");
  verify->add_option("--only", va.only, "Criterion ids or keys (repeatable, comma separated)");
  verify->add_flag("--json", va.json, "Machine-readable verdict list");
  verify->add_flag("--details", va.details, "List failure details for passing criteria too");
  verify->add_option("--p-max-r2", va.p_max_r2, "Oracle cutoff for G(2,4), G(2,5)")->check(CLI::PositiveNumber);
  verify->add_option("--p-max-36", va.p_max_36, "Oracle cutoff for G(3,6)")->check(CLI::PositiveNumber);
  verify->callback([&] { run = [&] { return guarded("acceptance", [&] { return cmd_verify(g, va); }); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? exit_pass : exit_usage;
  }
  return guarded("cli", [&] {
    if (g.threads == 0) g.threads = default_threads();
    return run();
  });
}
