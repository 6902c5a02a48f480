#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "affine_expr.hpp"
#include "reference_tables.hpp"
#include "root_systems.hpp"

namespace bottcalc {

enum class Family { LG, OG_even, OG_odd };

// tables: at D_n, r=n-2, delta_{r+1} becomes delta_{n-1}+delta_n (see README).
// literal: delta_{r+1} as printed.
enum class WeightRule { tables, literal };

inline RootType family_type(Family f) {
  switch (f) {
    case Family::LG: return RootType::C;
    case Family::OG_even: return RootType::D;
    case Family::OG_odd: return RootType::B;
  }
  return RootType::C;
}

inline const char* family_name(Family f) {
  switch (f) {
    case Family::LG: return "LG";
    case Family::OG_even: return "OG_even";
    case Family::OG_odd: return "OG_odd";
  }
  return "?";
}

inline Family parse_family(const std::string& s) {
  if (s == "LG" || s == "lg") return Family::LG;
  if (s == "OG_even" || s == "OGe" || s == "og_even") return Family::OG_even;
  if (s == "OG_odd" || s == "OGo" || s == "og_odd") return Family::OG_odd;
  throw std::invalid_argument("unknown family '" + s + "' (LG, OG_even, OG_odd)");
}

inline const char* iso_bundle_name(IsoBundle b) {
  switch (b) {
    case IsoBundle::D2RStar: return "D2RStar";
    case IsoBundle::Wedge2RStar: return "Wedge2RStar";
    case IsoBundle::RStarTensorQuot: return "RStarTensorQuot";
    case IsoBundle::StructureSheaf: return "StructureSheaf";
  }
  return "?";
}

inline IsoBundle parse_iso_bundle(const std::string& s) {
  if (s == "d2" || s == "D2RStar") return IsoBundle::D2RStar;
  if (s == "w2" || s == "wedge2" || s == "Wedge2RStar") return IsoBundle::Wedge2RStar;
  if (s == "tq" || s == "RStarTensorQuot") return IsoBundle::RStarTensorQuot;
  if (s == "O" || s == "o" || s == "StructureSheaf") return IsoBundle::StructureSheaf;
  throw std::invalid_argument("unknown isotropic bundle '" + s + "' (d2, w2, tq, O)");
}

// Total dimension 2n (LG, OG_even) or 2n+1 (OG_odd); r-planes.
struct IsoGrassmannian {
  Family family;
  std::size_t r;
  std::size_t n;

  std::string name() const {
    const std::string dim = std::to_string(family == Family::OG_odd ? 2 * n + 1 : 2 * n);
    return std::string(family == Family::LG ? "LG(" : "OG(") + std::to_string(r) + "," + dim + ")";
  }
  RootType type() const { return family_type(family); }
  RootSystem roots() const { return RootSystem(type(), n); }

  bool standing_assumptions() const {
    if (r < 1 || r > n) return false;
    switch (family) {
      case Family::LG: return r > 1 && n >= 2;
      case Family::OG_even: return n >= 4 && r != n - 1;
      case Family::OG_odd: return n >= 2;
    }
    return false;
  }
  void require_standing() const {
    if (!standing_assumptions()) throw std::invalid_argument(name() + " violates the standing assumptions");
  }

  // Theta = extension of the quotient by the sub-bundle; no sub-bundle when R^vee/R = 0.
  bool has_sub() const { return r < n || family == Family::OG_odd; }
  IsoBundle quotient() const { return family == Family::LG ? IsoBundle::D2RStar : IsoBundle::Wedge2RStar; }

  std::size_t d() const { return roots().roots_through(r).size() + 1; }
  std::size_t dim() const {
    // independent closed forms, checked against |roots through alpha_r|
    const std::size_t R = r, N = n;
    switch (family) {
      case Family::LG: return R * (2 * N - R) - R * (R - 1) / 2;
      case Family::OG_even: return R * (2 * N - R) - R * (R + 1) / 2;
      case Family::OG_odd: return R * (2 * N + 1 - R) - R * (R + 1) / 2;
    }
    return 0;
  }
};

// gamma = base + m * slope in fundamental-weight coordinates.
struct AffineWeight {
  std::vector<Int> base;
  std::vector<Int> slope;
  std::vector<Int> at(Int m) const {
    std::vector<Int> g = base;
    for (std::size_t i = 0; i < g.size(); ++i) g[i] += m * slope[i];
    return g;
  }
};

inline bool bundle_valid(RootType t, std::size_t n, std::size_t r, IsoBundle b) {
  if (r < 1 || r > n) return false;
  switch (b) {
    case IsoBundle::D2RStar: return t == RootType::C;
    case IsoBundle::Wedge2RStar: return t == RootType::B || t == RootType::D;
    case IsoBundle::RStarTensorQuot:
      if (t == RootType::B) return true;
      if (t == RootType::D) return r + 1 < n;
      return r < n;
    case IsoBundle::StructureSheaf: return true;
  }
  return false;
}

inline AffineWeight gamma_affine(RootType t, std::size_t n, std::size_t r, IsoBundle b,
                                 WeightRule rule = WeightRule::tables) {
  if (!bundle_valid(t, n, r, b))
    throw std::invalid_argument(std::string(iso_bundle_name(b)) + " is not defined for type " + type_letter(t) +
                                std::to_string(n) + " with r=" + std::to_string(r));
  AffineWeight g{std::vector<Int>(n, 1), std::vector<Int>(n, 0)};
  g.slope[r - 1] = 1;
  switch (b) {
    case IsoBundle::D2RStar: g.base[0] += 2; break;
    case IsoBundle::Wedge2RStar:
      g.base[0] += 1;
      g.base[1] += 1;
      break;
    case IsoBundle::RStarTensorQuot:
      g.base[0] += 1;
      if (r < n) {
        if (t == RootType::D && r + 2 == n && rule == WeightRule::tables) {
          g.base[n - 2] += 1;
          g.base[n - 1] += 1;
        } else {
          g.base[r] += 1;
        }
      }
      break;
    case IsoBundle::StructureSheaf: break;
  }
  return g;
}

inline std::vector<Int> gamma_weight(const IsoGrassmannian& X, IsoBundle b, Int m,
                                     WeightRule rule = WeightRule::tables) {
  if (b == IsoBundle::RStarTensorQuot && !X.has_sub())
    throw std::invalid_argument("RStarTensorQuot requires r < n (R^vee/R = 0 for r = n)");
  return gamma_affine(X.type(), X.n, X.r, b, rule).at(m);
}

struct IsoRange {
  std::optional<Int> lo, hi;  // nullopt: unbounded
  std::optional<Int> index;   // nullopt: vanishes in all degrees
};

struct IsoClassification {
  std::vector<IsoRange> ranges;
  Int window = 0;
  Int threshold = 0;
  std::map<Int, std::optional<Int>> by_m;  // window plus one step on each side
  std::set<Int> degrees() const {
    std::set<Int> s;
    for (const auto& [m, i] : by_m)
      if (i) s.insert(*i);
    return s;
  }
};

inline Int iso_window(std::size_t n) { return 2 * static_cast<Int>(n) + 4; }

inline IsoClassification classify(const RootSystem& rs, const AffineWeight& g, Pairing p = Pairing::linear) {
  IsoClassification c;
  c.window = iso_window(rs.rank());
  // Pairings are a*m+b with a >= 0; beyond |m| > |b|/a every sign is frozen.
  for (const Root& a : rs.positive_roots()) {
    const Affine v = rs.pairing(a, g.base, g.slope, p);
    if (v.a < 0) throw std::logic_error("negative slope in pairing");
    if (v.a > 0) c.threshold = std::max(c.threshold, std::abs(v.b) / v.a + 1);
  }
  if (c.threshold > c.window) throw std::logic_error("stabilization window too small");
  for (Int m = -c.window - 1; m <= c.window + 1; ++m) c.by_m[m] = rs.index(g.at(m), p);
  if (c.by_m[-c.window - 1] != c.by_m[-c.window] || c.by_m[c.window + 1] != c.by_m[c.window])
    throw std::logic_error("classification not stable at window boundary");
  for (Int m = -c.window; m <= c.window; ++m) {
    const auto st = c.by_m[m];
    if (!c.ranges.empty() && c.ranges.back().index == st) {
      c.ranges.back().hi = m;
    } else {
      c.ranges.push_back({m, m, st});
    }
  }
  c.ranges.front().lo.reset();
  c.ranges.back().hi.reset();
  return c;
}

inline IsoClassification cohomology_indices(const IsoGrassmannian& X, IsoBundle b,
                                            WeightRule rule = WeightRule::tables, Pairing p = Pairing::linear) {
  if (b == IsoBundle::RStarTensorQuot && !X.has_sub())
    throw std::invalid_argument("RStarTensorQuot requires r < n (R^vee/R = 0 for r = n)");
  return classify(X.roots(), gamma_affine(X.type(), X.n, X.r, b, rule), p);
}

// ---- value tables ----

struct TableCheck {
  const TableRow* row = nullptr;
  std::size_t n = 0, r = 0;
  std::set<Int> ones_computed, ones_expected;
  std::vector<Int> twos_computed;  // constants b of 2m+b
  std::optional<Int> max_expected;
  std::vector<Int> other_expected;
  bool ok = false;
  std::string detail;
};

namespace detail {

inline std::vector<std::string> split_commas(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur.push_back(c);
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

inline Int expect_slope(std::string_view entry, Int n, Int r, Int slope) {
  const auto [a, b] = parse_linear(entry).at(n, r);
  if (a != slope) throw parse_error("table entry '" + std::string(entry) + "' has unexpected m-coefficient", 0);
  return b;
}

inline std::set<Int> expand_ones(std::string_view list, Int n, Int r) {
  const auto toks = split_commas(list);
  std::set<Int> out;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (toks[i] == "...") {
      if (i == 0 || i + 1 == toks.size()) throw parse_error("ellipsis needs two neighbours", i);
      const Int lo = expect_slope(toks[i - 1], n, r, 1), hi = expect_slope(toks[i + 1], n, r, 1);
      for (Int v = lo; v <= hi; ++v) out.insert(v);
    } else {
      out.insert(expect_slope(toks[i], n, r, 1));
    }
  }
  return out;
}

}  // namespace detail

inline TableCheck verify_table_instance(const TableRow& row, std::size_t n, std::size_t r,
                                        WeightRule rule = WeightRule::tables) {
  TableCheck c;
  c.row = &row;
  c.n = n;
  c.r = r;
  const RootSystem rs(row.type, n);
  const AffineWeight g = gamma_affine(row.type, n, r, row.bundle, rule);
  for (const Root& a : rs.roots_through(r)) {
    const Affine v = rs.pairing(a, g.base, g.slope, Pairing::linear);
    if (v.a == 1) c.ones_computed.insert(v.b);
    else c.twos_computed.push_back(v.b);
  }
  std::sort(c.twos_computed.begin(), c.twos_computed.end());
  const Int N = static_cast<Int>(n), R = static_cast<Int>(r);
  c.ones_expected = detail::expand_ones(row.ones, N, R);
  if (!row.max2.empty()) c.max_expected = detail::expect_slope(row.max2, N, R, 2);
  for (const auto& t : detail::split_commas(row.other)) c.other_expected.push_back(detail::expect_slope(t, N, R, 2));

  bool ok = c.ones_computed == c.ones_expected;
  if (!ok) c.detail += "coefficient-1 values differ; ";
  if (c.max_expected) {
    if (c.twos_computed.empty() || c.twos_computed.back() != *c.max_expected) {
      ok = false;
      c.detail += "coefficient-2 maximum differs; ";
    }
  } else if (!c.twos_computed.empty()) {
    ok = false;
    c.detail += "unexpected coefficient-2 roots; ";
  }
  for (Int v : c.other_expected)
    if (!std::binary_search(c.twos_computed.begin(), c.twos_computed.end(), v)) {
      ok = false;
      c.detail += "missing other value; ";
    }
  if (c.detail.size() >= 2) c.detail.resize(c.detail.size() - 2);
  c.ok = ok;
  return c;
}

// Every row instance with n <= n_max (type D needs n >= 4).
inline std::vector<TableCheck> verify_tables(std::size_t n_max = 8, WeightRule rule = WeightRule::tables) {
  std::vector<TableCheck> out;
  for (const TableRow& row : reference_rows)
    for (std::size_t n = 2; n <= n_max; ++n)
      for (std::size_t r = 1; r <= n; ++r) {
        if (!case_holds(row.rcase, static_cast<Int>(n), static_cast<Int>(r))) continue;
        if (row.type == RootType::D && n < 4) continue;
        if (!bundle_valid(row.type, n, r, row.bundle)) continue;
        out.push_back(verify_table_instance(row, n, r, rule));
      }
  return out;
}

inline std::string render_values(const std::set<Int>& ones, const std::vector<Int>& twos) {
  std::string s = "[";
  bool first = true;
  for (Int b : ones) {
    s += (first ? "" : ", ") + render_affine({1, b});
    first = false;
  }
  s += "] [";
  first = true;
  for (Int b : twos) {
    s += (first ? "" : ", ") + render_affine({2, b});
    first = false;
  }
  return s + "]";
}

// ---- vanishing claims ----

enum class Verdict { vanishes, nonzero, undetermined, no_claim };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::vanishes: return "vanishes";
    case Verdict::nonzero: return "nonzero";
    case Verdict::undetermined: return "undetermined";
    case Verdict::no_claim: return "no_claim";
  }
  return "?";
}

enum class DegreeBand { one, middle, top };  // i = 1, 2 <= i <= d-3, i = d-2

inline const char* band_name(DegreeBand b) {
  switch (b) {
    case DegreeBand::one: return "H^1";
    case DegreeBand::middle: return "H^i, 2<=i<=d-3";
    case DegreeBand::top: return "H^{d-2}";
  }
  return "?";
}

inline bool in_band(DegreeBand band, Int i, Int d) {
  switch (band) {
    case DegreeBand::one: return i == 1;
    case DegreeBand::middle: return i >= 2 && i <= d - 3;
    case DegreeBand::top: return i == d - 2;
  }
  return false;
}

// Exact answer for a single irreducible bundle: vanishes for all m, or nonzero for some m.
inline Verdict band_status(const IsoClassification& c, DegreeBand band, Int d) {
  for (Int i : c.degrees())
    if (in_band(band, i, d)) return Verdict::nonzero;
  return Verdict::vanishes;
}

// Stated classification: expected verdict, or no_claim.
inline Verdict lemma_expectation(const std::string& lemma, const IsoGrassmannian& X, DegreeBand band) {
  const std::size_t r = X.r, n = X.n;
  const bool LG = X.family == Family::LG, OGe = X.family == Family::OG_even, OGo = X.family == Family::OG_odd;
  auto v = [](bool vanish) { return vanish ? Verdict::vanishes : Verdict::nonzero; };
  if (lemma == "lga") {
    if (!LG) return Verdict::no_claim;
    if (band == DegreeBand::middle) return v(!(r == 3 && n == 3));
    if (band == DegreeBand::one) return v(!(r == 2 && n == 2));
    return v(r != n);
  }
  if (lemma == "oga") {
    if (LG) return Verdict::no_claim;
    if (band == DegreeBand::middle) return Verdict::vanishes;
    if (band == DegreeBand::one) return v(!(r == 1 || (OGe && r == 4 && n == 4)));
    return v(!(r == 1 || (OGe && r == n)));
  }
  if (lemma == "b") {
    if (!X.has_sub()) return Verdict::no_claim;
    if (band == DegreeBand::middle) return Verdict::vanishes;
    if (band == DegreeBand::one)
      return v(!((LG && r == 2 && n > 3) || (OGe && (r == 1 || r == 2)) || (OGo && (r == 1 || r == 2) && r != n)));
    return v((LG && r + 1 == n) || (OGo && r == n));
  }
  if (lemma == "thm:main") {
    if (band == DegreeBand::middle) return v(!(LG && r == 3 && n == 3));
    if (band == DegreeBand::top) return v((LG && r + 1 == n) || (OGo && r == n));
    const bool og48 = OGe && r == 4 && n == 4;
    if (r != 1 && r != 2 && !og48) return Verdict::vanishes;
    if ((LG && r == 2 && n != 3) || ((OGe || OGo) && r == 1) || og48) return Verdict::nonzero;
    return Verdict::no_claim;
  }
  if (lemma == "thm:main2") return Verdict::vanishes;
  throw std::invalid_argument("unknown lemma id '" + lemma + "'");
}

inline IsoBundle lemma_bundle(const std::string& lemma, const IsoGrassmannian& X) {
  if (lemma == "lga") return IsoBundle::D2RStar;
  if (lemma == "oga") return IsoBundle::Wedge2RStar;
  if (lemma == "b") return IsoBundle::RStarTensorQuot;
  if (lemma == "thm:main2") return IsoBundle::StructureSheaf;
  return X.quotient();
}

// Per-m status of H^i(Theta(m)) from the long exact sequence of 0 -> Sub -> Theta -> Quot -> 0.
enum class PinchStatus { zero, nonzero, undetermined };

struct ThetaCell {
  PinchStatus status;
  bool cited = false;  // resolved by the LG(2,2n) argument rather than the generic pinch
};

struct ThetaAnalysis {
  IsoGrassmannian X;
  Int d = 0;
  IsoClassification sub, quot;
  std::map<std::pair<Int, Int>, ThetaCell> cells;  // (i, m)
  std::vector<std::pair<Int, Int>> undetermined;

  Verdict band(DegreeBand b) const {
    bool undet = false;
    for (const auto& [key, cell] : cells) {
      if (!in_band(b, key.first, d)) continue;
      if (cell.status == PinchStatus::nonzero) return Verdict::nonzero;
      if (cell.status == PinchStatus::undetermined) undet = true;
    }
    return undet ? Verdict::undetermined : Verdict::vanishes;
  }
};

inline ThetaAnalysis analyze_theta(const IsoGrassmannian& X, WeightRule rule = WeightRule::tables,
                                   Pairing p = Pairing::linear) {
  ThetaAnalysis t{X, static_cast<Int>(X.d()), {}, {}, {}, {}};
  t.quot = cohomology_indices(X, X.quotient(), rule, p);
  if (X.has_sub()) t.sub = cohomology_indices(X, IsoBundle::RStarTensorQuot, rule, p);
  auto nz = [](const IsoClassification& c, bool present, Int m, Int i) {
    if (!present) return false;
    const auto it = c.by_m.find(m);
    return it->second && *it->second == i;
  };
  const Int W = t.quot.window;
  for (Int m = -W - 1; m <= W + 1; ++m)
    for (Int i = 0; i <= t.d - 1; ++i) {
      const bool S = X.has_sub();
      const bool sub_i = nz(t.sub, S, m, i), sub_next = nz(t.sub, S, m, i + 1);
      const bool q_i = nz(t.quot, true, m, i), q_prev = nz(t.quot, true, m, i - 1);
      PinchStatus st;
      if (!sub_i && !q_i) st = PinchStatus::zero;
      else if ((sub_i && !q_prev) || (q_i && !sub_next)) st = PinchStatus::nonzero;
      else st = PinchStatus::undetermined;
      ThetaCell cell{st, false};
      if (st == PinchStatus::undetermined && X.family == Family::LG && X.r == 2 && i == 1 && m == -2 && q_i &&
          !nz(t.sub, S, m, 0))
        cell = {PinchStatus::nonzero, true};
      if (cell.status == PinchStatus::undetermined) t.undetermined.emplace_back(i, m);
      t.cells[{i, m}] = cell;
    }
  return t;
}

struct LemmaCheck {
  std::string lemma;
  IsoGrassmannian X;
  DegreeBand band;
  Verdict expected;
  Verdict computed;
  bool ok() const { return expected == Verdict::no_claim || expected == computed; }
};

inline std::vector<LemmaCheck> verify_lemmata(const IsoGrassmannian& X, WeightRule rule = WeightRule::tables,
                                              Pairing p = Pairing::linear) {
  X.require_standing();
  std::vector<LemmaCheck> out;
  const Int d = static_cast<Int>(X.d());
  const DegreeBand bands[] = {DegreeBand::one, DegreeBand::middle, DegreeBand::top};
  for (const std::string lemma : {"lga", "oga", "b", "thm:main2"}) {
    if (lemma_expectation(lemma, X, DegreeBand::one) == Verdict::no_claim) continue;
    const auto c = cohomology_indices(X, lemma_bundle(lemma, X), rule, p);
    for (DegreeBand b : bands) {
      if (lemma == "thm:main2") {
        // all 1 <= i <= d-2
        Verdict comp = Verdict::vanishes;
        for (Int i : c.degrees())
          if (i >= 1 && i <= d - 2) comp = Verdict::nonzero;
        if (b == DegreeBand::one) out.push_back({lemma, X, b, Verdict::vanishes, comp});
        continue;
      }
      out.push_back({lemma, X, b, lemma_expectation(lemma, X, b), band_status(c, b, d)});
    }
  }
  const ThetaAnalysis th = analyze_theta(X, rule, p);
  for (DegreeBand b : bands) out.push_back({"thm:main", X, b, lemma_expectation("thm:main", X, b), th.band(b)});
  return out;
}

// All (family, r, n) with n <= n_max under the standing assumptions.
inline std::vector<IsoGrassmannian> supported_cases(std::size_t n_max) {
  std::vector<IsoGrassmannian> out;
  for (Family f : {Family::LG, Family::OG_even, Family::OG_odd})
    for (std::size_t n = 2; n <= n_max; ++n)
      for (std::size_t r = 1; r <= n; ++r) {
        IsoGrassmannian X{f, r, n};
        if (X.standing_assumptions()) out.push_back(X);
      }
  return out;
}

// Sufficient condition for T^i_A = 0 from O(m) and Theta(m) vanishing.
struct TVanishing {
  IsoGrassmannian X;
  bool t1_certified = false;
  bool middle_certified = false;  // 2 <= i <= d-3
  bool t1_expected = false;       // stated: not 1- or 2-planes, not OG(4,8)
  bool middle_expected = false;   // stated: X != LG(3,6)
};

inline TVanishing certify_t_vanishing(const IsoGrassmannian& X, WeightRule rule = WeightRule::tables) {
  X.require_standing();
  TVanishing t{X};
  const Int d = static_cast<Int>(X.d());
  const auto O = cohomology_indices(X, IsoBundle::StructureSheaf, rule);
  const ThetaAnalysis th = analyze_theta(X, rule);
  const bool o1 = band_status(O, DegreeBand::one, d) == Verdict::vanishes;
  const bool om = band_status(O, DegreeBand::middle, d) == Verdict::vanishes;
  t.t1_certified = o1 && th.band(DegreeBand::one) == Verdict::vanishes;
  t.middle_certified = om && th.band(DegreeBand::middle) == Verdict::vanishes;
  const bool og48 = X.family == Family::OG_even && X.r == 4 && X.n == 4;
  t.t1_expected = X.r > 2 && !og48;
  t.middle_expected = !(X.family == Family::LG && X.r == 3 && X.n == 3);
  return t;
}

}  // namespace bottcalc
