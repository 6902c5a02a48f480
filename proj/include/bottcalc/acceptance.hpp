#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bott_grassmannian.hpp"
#include "bott_isotropic.hpp"
#include "cotangent_oracle.hpp"
#include "schur.hpp"

namespace bottcalc {

struct CriterionResult {
  int id = 0;
  std::string key;
  std::string title;
  bool passed = false;
  std::string summary;
  std::vector<std::string> failures;
  double seconds = 0;
};

struct AcceptanceConfig {
  unsigned threads = 1;
  std::size_t p_max_r2 = 4;   // P-degrees 1..4 for (2,4) and (2,5)
  std::size_t p_max_36 = 3;   // P-degrees 1..3 for (3,6)
  std::size_t max_failures = 20;
};

// Shared oracle runs for criteria 6-8.
class AcceptanceContext {
 public:
  explicit AcceptanceContext(AcceptanceConfig cfg = {}) : cfg_(cfg) {}
  const AcceptanceConfig& config() const { return cfg_; }

  const OracleReport& oracle(std::size_t r, std::size_t n) {
    auto it = oracle_.find({r, n});
    if (it != oracle_.end()) return it->second;
    OracleConfig c;
    c.r = r;
    c.n = n;
    c.p_max = r == 2 ? cfg_.p_max_r2 : cfg_.p_max_36;
    c.threads = cfg_.threads;
    return oracle_.emplace(std::make_pair(r, n), local_cohomology_dims(c)).first->second;
  }

  static const std::vector<std::pair<std::size_t, std::size_t>>& oracle_cases() {
    static const std::vector<std::pair<std::size_t, std::size_t>> cases{{2, 4}, {2, 5}, {3, 6}};
    return cases;
  }

 private:
  AcceptanceConfig cfg_;
  std::map<std::pair<std::size_t, std::size_t>, OracleReport> oracle_;
};

namespace detail {

class Collector {
 public:
  Collector(CriterionResult& res, std::size_t cap) : res_(res), cap_(cap) {}
  void fail(const std::string& s) {
    ++count_;
    if (res_.failures.size() < cap_) res_.failures.push_back(s);
  }
  void check(bool ok, const std::string& s) {
    ++checks_;
    if (!ok) fail(s);
  }
  std::size_t failures() const { return count_; }
  std::size_t checks() const { return checks_; }

 private:
  CriterionResult& res_;
  std::size_t cap_;
  std::size_t count_ = 0, checks_ = 0;
};

inline std::string describe(const CohomologyAnswer& a) {
  if (a.vanishes) return "vanishes";
  return "H^" + std::to_string(a.degree) + " = S_(" + render_weight(a.weight) + "), dim " + a.dimension.get_str();
}

inline std::string gname(std::size_t r, std::size_t n) {
  return "G(" + std::to_string(r) + "," + std::to_string(n) + ")";
}

}  // namespace detail

inline CriterionResult criterion_botttheta(AcceptanceContext& ctx) {
  CriterionResult res{1, "botttheta", "O(m) and Theta(m) on G(r,n) match the closed forms", false, "", {}, 0};
  detail::Collector col(res, ctx.config().max_failures);
  std::size_t grass = 0;
  for (std::size_t n = 4; n <= 8; ++n)
    for (std::size_t r = 2; r + 2 <= n; ++r) {
      if (r == 2 && n == 4) continue;
      ++grass;
      const Int W = scan_window(n);
      for (const auto& e : verify_botttheta(n, r, -W, W).entries)
        col.check(e.ok, detail::gname(r, n) + " " + bundle_name(e.bundle) + "(" + std::to_string(e.m) +
                            "): got " + detail::describe(e.computed) + ", expected " + detail::describe(e.expected));
    }
  res.passed = col.failures() == 0;
  res.summary = std::to_string(col.checks() - col.failures()) + "/" + std::to_string(col.checks()) +
                " evaluations on " + std::to_string(grass) + " Grassmannians";
  return res;
}

inline CriterionResult criterion_g24(AcceptanceContext& ctx) {
  CriterionResult res{2, "g24", "G(2,4): H^1(Theta(-2)) = k, all other Theta(m) as the closed forms", false, "", {}, 0};
  detail::Collector col(res, ctx.config().max_failures);
  const Int W = scan_window(4);
  for (const auto& e : verify_botttheta(4, 2, -W, W).entries) {
    if (e.bundle != GrassBundle::theta) continue;
    col.check(e.ok, "Theta(" + std::to_string(e.m) + "): got " + detail::describe(e.computed) + ", expected " +
                        detail::describe(e.expected));
  }
  const CohomologyAnswer a = bott_evaluate(theta_bundle(4, 2, -2), 4, 2);
  const bool special = !a.vanishes && a.degree == 1 && a.dimension == 1 && sl_normalize(a.weight) == Weight::constant(4, 0);
  col.check(special, "Theta(-2): got " + detail::describe(a));
  res.passed = col.failures() == 0;
  res.summary = std::string("H^1(Theta(-2)) ") + (special ? "= S_(" + render_weight(a.weight) + "), dim 1" : "wrong") +
                "; " + std::to_string(col.checks() - col.failures()) + "/" + std::to_string(col.checks()) + " twists";
  return res;
}

inline CriterionResult criterion_euler(AcceptanceContext& ctx) {
  CriterionResult res{3, "euler", "Euler characteristic of O(m) equals dim S_(m^r)", false, "", {}, 0};
  detail::Collector col(res, ctx.config().max_failures);
  for (std::size_t n = 2; n <= 7; ++n)
    for (std::size_t r = 1; r < n; ++r)
      for (Int m = 0; m <= 5; ++m) {
        BigInt chi = 0;
        const CohomologyAnswer a = bott_evaluate(structure_sheaf(n, r, m), n, r);
        if (!a.vanishes) chi = (a.degree % 2 ? -1 : 1) * a.dimension;
        const BigInt want = gl_dimension(Weight::constant(r, m), n);
        col.check(chi == want, detail::gname(r, n) + " O(" + std::to_string(m) + "): chi " + chi.get_str() +
                                   ", expected " + want.get_str());
      }
  res.passed = col.failures() == 0;
  res.summary = std::to_string(col.checks() - col.failures()) + "/" + std::to_string(col.checks()) + " (r,n,m)";
  return res;
}

inline CriterionResult criterion_tables(AcceptanceContext& ctx) {
  CriterionResult res{4, "tables", "alpha(gamma) value lists match the reference rows, n <= 8", false, "", {}, 0};
  detail::Collector col(res, ctx.config().max_failures);
  const auto checks = verify_tables(8, WeightRule::tables);
  for (const TableCheck& c : checks) {
    std::ostringstream s;
    s << type_letter(c.row->type) << " " << iso_bundle_name(c.row->bundle) << " \"" << c.row->rcase << "\" n=" << c.n
      << " r=" << c.r << ": computed " << render_values(c.ones_computed, c.twos_computed) << "; " << c.detail;
    col.check(c.ok, s.str());
  }
  std::size_t literal_ok = 0;
  const auto lit = verify_tables(8, WeightRule::literal);
  for (const TableCheck& c : lit) literal_ok += c.ok;
  res.passed = col.failures() == 0;
  res.summary = std::to_string(col.checks() - col.failures()) + "/" + std::to_string(col.checks()) +
                " row instances (literal weight rule: " + std::to_string(literal_ok) + "/" + std::to_string(lit.size()) + ")";
  return res;
}

inline CriterionResult criterion_lemmata(AcceptanceContext& ctx) {
  CriterionResult res{5, "lemmata", "isotropic vanishing classifications, n <= 8", false, "", {}, 0};
  detail::Collector col(res, ctx.config().max_failures);
  std::size_t cases = 0;
  std::set<std::string> seen;
  for (const IsoGrassmannian& X : supported_cases(8)) {
    ++cases;
    seen.insert(X.name());
    for (const LemmaCheck& c : verify_lemmata(X))
      col.check(c.ok(), c.lemma + " " + X.name() + " " + band_name(c.band) + ": expected " + verdict_name(c.expected) +
                            ", computed " + verdict_name(c.computed));
    const TVanishing t = certify_t_vanishing(X);
    col.check(!t.t1_expected || t.t1_certified, "T^1 " + X.name() + " not certified");
    col.check(!t.middle_expected || t.middle_certified, "T^i middle " + X.name() + " not certified");
  }
  // Exceptional cases must be among those checked.
  for (const std::string name : {"LG(3,6)", "LG(2,4)", "LG(2,8)", "OG(4,8)", "OG(5,10)", "OG(1,8)", "OG(1,5)",
                                 "LG(2,6)", "LG(3,8)", "OG(3,7)"})
    col.check(seen.count(name) == 1, "exceptional case " + name + " not covered");
  res.passed = col.failures() == 0;
  res.summary = std::to_string(col.checks() - col.failures()) + "/" + std::to_string(col.checks()) + " verdicts on " +
                std::to_string(cases) + " spaces";
  return res;
}

inline CriterionResult criterion_oracle_dims(AcceptanceContext& ctx) {
  CriterionResult res{6, "oracle-dims", "invariant slice dimensions match the Schur predictions", false, "", {}, 0};
  detail::Collector col(res, ctx.config().max_failures);
  std::ostringstream sum;
  for (auto [r, n] : AcceptanceContext::oracle_cases()) {
    const OracleReport& rep = ctx.oracle(r, n);
    const std::string g = detail::gname(r, n);
    col.check(!rep.truncated, g + ": run truncated");
    col.check(rep.minors_rank == subsets(n, r).size(), g + ": minors dependent");
    col.check(BigInt(static_cast<unsigned long>(rep.relations)) == rep.relations_predicted,
              g + ": " + std::to_string(rep.relations) + " relations, expected " + rep.relations_predicted.get_str());
    PluckerData D(r, n);
    for (std::size_t m = 0; m <= 3; ++m) {
      const HilbertCheck h = hilbert_check(D, m);
      col.check(h.computed == h.predicted && h.per_weight_ok,
                g + ": dim A_" + std::to_string(m) + " = " + h.computed.get_str() + ", expected " + h.predicted.get_str());
    }
    std::size_t p_hi = 0;
    for (const SliceReport& s : rep.slices) {
      p_hi = s.p;
      const std::string at = g + " p=" + std::to_string(s.p) + ": ";
      for (const BlockMismatch& mm : s.mismatches)
        col.fail(at + mm.quantity + " in weight (" + render_weight(mm.mu) + ") " + mm.computed.get_str() + " vs " +
                 mm.predicted.get_str());
      col.check(s.totals.c0 == s.predicted.c0, at + "C0 " + s.totals.c0.get_str() + " vs " + s.predicted.c0.get_str());
      col.check(s.totals.c1 == s.predicted.c1, at + "C1 " + s.totals.c1.get_str() + " vs " + s.predicted.c1.get_str());
      col.check(s.totals.c2 == s.predicted.c2, at + "C2 " + s.totals.c2.get_str() + " vs " + s.predicted.c2.get_str());
      col.check(s.totals.c3 == s.predicted.c3, at + "C3 " + s.totals.c3.get_str() + " vs " + s.predicted.c3.get_str());
      col.check(s.totals.rank_d2 == s.predicted.rank_d2,
                at + "rank d2 " + s.totals.rank_d2.get_str() + " vs " + s.predicted.rank_d2.get_str());
      col.check(s.totals.ker_d3 == s.predicted.ker_d3,
                at + "ker d3 " + s.totals.ker_d3.get_str() + " vs " + s.predicted.ker_d3.get_str());
    }
    sum << g << " p<=" << p_hi << " ";
  }
  res.passed = col.failures() == 0;
  res.summary = sum.str() + std::to_string(col.checks() - col.failures()) + "/" + std::to_string(col.checks()) + " checks";
  return res;
}

inline CriterionResult criterion_oracle_cohomology(AcceptanceContext& ctx) {
  CriterionResult res{7, "oracle-cohomology", "H^0_m(Omega_A) and H^1_m(Omega_A) from the four-term complex", false, "", {}, 0};
  detail::Collector col(res, ctx.config().max_failures);
  std::ostringstream sum;
  for (auto [r, n] : AcceptanceContext::oracle_cases()) {
    const OracleReport& rep = ctx.oracle(r, n);
    const std::string g = detail::gname(r, n);
    col.check(!rep.truncated, g + ": run truncated");
    sum << g << " H1 [";
    for (const SliceReport& s : rep.slices) {
      const BigInt want_h1 = s.p == 2 ? dimension(h0_omega_degree2(r, n), n) : BigInt(0);
      col.check(s.totals.h1 == want_h1, g + " p=" + std::to_string(s.p) + ": dim H1 " + s.totals.h1.get_str() +
                                            ", expected " + want_h1.get_str());
      col.check(s.totals.h2 == 0, g + " p=" + std::to_string(s.p) + ": dim H2 " + s.totals.h2.get_str());
      col.check(s.exact, g + " p=" + std::to_string(s.p) + ": ranks not exact");
      sum << (s.p > 1 ? "," : "") << s.totals.h1.get_str();
    }
    sum << "] ";
  }
  res.passed = col.failures() == 0;
  res.summary = sum.str() + "H2 = 0";
  return res;
}

inline CriterionResult criterion_witnesses(AcceptanceContext& ctx) {
  CriterionResult res{8, "witnesses", "explicit witnesses and vanishing composites", false, "", {}, 0};
  detail::Collector col(res, ctx.config().max_failures);
  for (auto [r, n] : AcceptanceContext::oracle_cases()) {
    const std::string g = detail::gname(r, n);
    for (std::size_t m = 1; m <= 2; ++m) {
      const WitnessReport w = kerd_witnesses(r, n, m);
      const std::string at = g + " m=" + std::to_string(m) + ": ";
      col.check(w.d2_u1_nonzero, at + "d2(u1^m (x) u1) = 0");
      col.check(w.u2_weight_ok && w.d2_u2_nonzero, at + "u1^m (x) du2 witness failed");
      col.check(w.delta_weight_ok, at + "delta has the wrong weight");
      col.check(w.delta_invariant, at + "delta is not invariant");
      col.check(w.d3_delta_nonzero && w.d3_delta_at_x_ok, at + "d3(delta) witness failed");
      col.check(w.d3_u_delta_nonzero && w.u_delta_weight_ok, at + "d3(u^{m-1} delta) witness failed");
    }
    for (const SliceReport& s : ctx.oracle(r, n).slices) {
      col.check(s.composites_zero, g + " p=" + std::to_string(s.p) + ": d2 d1 or d3 d2 nonzero");
      col.check(s.image_invariant, g + " p=" + std::to_string(s.p) + ": image of d2 not invariant");
    }
  }
  res.passed = col.failures() == 0;
  res.summary = std::to_string(col.checks() - col.failures()) + "/" + std::to_string(col.checks()) + " checks";
  return res;
}

// Dual bundle twisted by the canonical bundle det(Q)^{-r} (x) det(R)^{n-r}.
inline BundleSpec serre_dual(const BundleSpec& b, std::size_t n) {
  const Int r = static_cast<Int>(b.beta.size()), N = static_cast<Int>(n);
  return {add_constant(negate_reverse(b.effective_alpha()), -r), add_constant(negate_reverse(b.beta), N - r), 0, "dual"};
}

inline CriterionResult criterion_properties(AcceptanceContext& ctx) {
  CriterionResult res{9, "properties", "LR symmetry, dimension additivity, Serre duality, wedge^2 of wedge^r", false, "", {}, 0};
  detail::Collector col(res, ctx.config().max_failures);
  std::vector<Weight> parts;
  for (Int k = 0; k <= 6; ++k)
    for (const Weight& w : partitions(k, 7)) parts.push_back(w);
  std::size_t lr = 0, add = 0, serre = 0, wedge = 0;
  for (const Weight& a : parts)
    for (const Weight& b : parts) {
      if (a > b) continue;
      const SchurDecomposition ab = tensor_decompose(a, b, 7), ba = tensor_decompose(b, a, 7);
      ++lr;
      col.check(ab == ba, "LR symmetry fails for (" + render_weight(a) + ") (" + render_weight(b) + ")");
      for (std::size_t n = std::max({a.size(), b.size(), std::size_t{1}}); n <= 7; ++n) {
        ++add;
        const SchurDecomposition d = tensor_decompose(a, b, n);
        col.check(dimension(d, n) == gl_dimension(a, n) * gl_dimension(b, n),
                  "dimension additivity fails for (" + render_weight(a) + ") (" + render_weight(b) + ") n=" + std::to_string(n));
      }
    }
  for (std::size_t n = 3; n <= 6; ++n)
    for (std::size_t r = 1; r < n; ++r) {
      const Int top = static_cast<Int>(r * (n - r));
      for (const Weight& a0 : partitions(2, n - r))
        for (const Weight& b0 : partitions(2, r))
          for (Int m = -Int(n) - 3; m <= 3; ++m) {
            const BundleSpec B{pad(a0, n - r), negate_reverse(pad(b0, r)), m, "probe"};
            const CohomologyAnswer x = bott_evaluate(B, n, r), y = bott_evaluate(serre_dual(B, n), n, r);
            bool ok = x.vanishes == y.vanishes;
            if (ok && !x.vanishes)
              ok = y.degree == top - x.degree && y.dimension == x.dimension && y.weight == negate_reverse(x.weight);
            ++serre;
            col.check(ok, "Serre duality fails on " + detail::gname(r, n) + " alpha (" + render_weight(B.alpha) +
                              ") beta (" + render_weight(B.beta) + ") m=" + std::to_string(m));
          }
    }
  for (std::size_t n = 2; n <= 7; ++n)
    for (std::size_t r = 1; r < n; ++r) {
      ++wedge;
      BigInt c;
      mpz_bin_uiui(c.get_mpz_t(), n, r);
      BigInt want;
      mpz_bin_ui(want.get_mpz_t(), c.get_mpz_t(), 2);
      const BigInt got = dimension(wedge2_of_wedge_r(r, n), n);
      col.check(got == want, "wedge^2 wedge^" + std::to_string(r) + " dimension " + got.get_str() + " != " + want.get_str());
    }
  res.passed = col.failures() == 0;
  res.summary = std::to_string(lr) + " LR pairs, " + std::to_string(add) + " products, " + std::to_string(serre) +
                " Serre pairs, " + std::to_string(wedge) + " exterior squares; " + std::to_string(col.failures()) +
                " failures";
  return res;
}

struct CriterionEntry {
  int id;
  const char* key;
  CriterionResult (*run)(AcceptanceContext&);
};

inline const std::vector<CriterionEntry>& criteria() {
  static const std::vector<CriterionEntry> all{
      {1, "botttheta", criterion_botttheta},     {2, "g24", criterion_g24},
      {3, "euler", criterion_euler},             {4, "tables", criterion_tables},
      {5, "lemmata", criterion_lemmata},         {6, "oracle-dims", criterion_oracle_dims},
      {7, "oracle-cohomology", criterion_oracle_cohomology},
      {8, "witnesses", criterion_witnesses},     {9, "properties", criterion_properties},
  };
  return all;
}

// Selected criteria by id or key; empty selection runs all.
inline std::vector<CriterionResult> run_acceptance(AcceptanceContext& ctx, const std::vector<std::string>& only = {},
                                                   const std::function<void(const CriterionResult&)>& progress = {}) {
  std::vector<CriterionResult> out;
  for (const CriterionEntry& c : criteria()) {
    bool pick = only.empty();
    for (const std::string& s : only) pick = pick || s == c.key || s == std::to_string(c.id);
    if (!pick) continue;
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r = c.run(ctx);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (progress) progress(r);
    out.push_back(std::move(r));
  }
  return out;
}

inline bool known_criterion(const std::string& s) {
  for (const CriterionEntry& c : criteria())
    if (s == c.key || s == std::to_string(c.id)) return true;
  return false;
}

}  // namespace bottcalc
