#pragma once

#include <cstdlib>
#include <string>
#include <vector>

#include "schur.hpp"
#include "weights.hpp"

namespace bottcalc {

// S_alpha Q (x) S_beta R (x) O(m) on G(r,n), Q of rank n-r and R of rank r.
struct BundleSpec {
  Weight alpha;
  Weight beta;
  Int twist = 0;
  std::string label = "custom";

  Weight effective_alpha() const { return add_constant(alpha, twist); }
  Weight gamma() const { return concat(effective_alpha(), beta); }
};

struct CohomologyAnswer {
  bool vanishes = true;
  Int degree = 0;
  Weight weight;
  BigInt dimension = 0;

  static CohomologyAnswer zero() { return {}; }
  friend bool operator==(const CohomologyAnswer& a, const CohomologyAnswer& b) {
    if (a.vanishes || b.vanishes) return a.vanishes == b.vanishes;
    return a.degree == b.degree && a.weight == b.weight && a.dimension == b.dimension;
  }
};

inline void check_grassmannian(std::size_t n, std::size_t r) {
  if (r < 1 || r >= n) throw std::invalid_argument("G(r,n) requires 1 <= r < n");
}

inline CohomologyAnswer bott_evaluate(const BundleSpec& spec, std::size_t n, std::size_t r) {
  check_grassmannian(n, r);
  if (spec.alpha.size() != n - r) throw invalid_size("bott: alpha must have n-r entries");
  if (spec.beta.size() != r) throw invalid_size("bott: beta must have r entries");
  if (!spec.alpha.dominant()) throw std::invalid_argument("bott: alpha is not dominant");
  if (!spec.beta.dominant()) throw std::invalid_argument("bott: beta is not dominant");
  auto s = bott_sort(spec.gamma());
  if (!s) return CohomologyAnswer::zero();
  CohomologyAnswer out;
  out.vanishes = false;
  out.degree = s->swaps;
  out.weight = s->sorted;
  out.dimension = gl_dimension(out.weight, n);
  return out;
}

inline BundleSpec structure_sheaf(std::size_t n, std::size_t r, Int m) {
  check_grassmannian(n, r);
  return {Weight::constant(n - r, 0), Weight::constant(r, 0), m, "O"};
}

// Theta(m) = S_{(m+1, m^{n-r-1})} Q (x) S_{(0^{r-1}, -1)} R.
inline BundleSpec theta_bundle(std::size_t n, std::size_t r, Int m) {
  check_grassmannian(n, r);
  Weight a = Weight::constant(n - r, 0);
  a[0] = 1;
  Weight b = Weight::constant(r, 0);
  b[r - 1] = -1;
  return {a, b, m, "theta"};
}

enum class GrassBundle { O, theta };

inline BundleSpec named_bundle(GrassBundle b, std::size_t n, std::size_t r, Int m) {
  return b == GrassBundle::O ? structure_sheaf(n, r, m) : theta_bundle(n, r, m);
}

// Closed forms for O(m) and Theta(m), weights normalized to last entry 0.
inline CohomologyAnswer closed_form(GrassBundle b, std::size_t n, std::size_t r, Int m) {
  check_grassmannian(n, r);
  const Int N = static_cast<Int>(n), R = static_cast<Int>(r), top = R * (N - R);
  auto answer = [&](Int deg, std::vector<Int> w) {
    CohomologyAnswer a;
    a.vanishes = false;
    a.degree = deg;
    a.weight = sl_normalize(pad(Weight(std::move(w)), n));
    a.dimension = gl_dimension(a.weight, n);
    return a;
  };
  if (b == GrassBundle::O) {
    if (m >= 0) return answer(0, std::vector<Int>(n - r, m));
    if (m <= -N) return answer(top, std::vector<Int>(r, -m - N));
    return CohomologyAnswer::zero();
  }
  if (m >= 0) {
    std::vector<Int> w{m + 1};
    w.insert(w.end(), n - r - 1, m);
    w.insert(w.end(), r - 1, 0);
    w.push_back(-1);
    return answer(0, w);
  }
  if (m == -N) return answer(top - 1, {0});
  if (m <= -N - 2) {
    std::vector<Int> w(r - 1, -m - N);
    w.push_back(-m - N - 1);
    w.push_back(1);
    return answer(top, w);
  }
  return CohomologyAnswer::zero();
}

inline CohomologyAnswer normalized(CohomologyAnswer a) {
  if (!a.vanishes) a.weight = sl_normalize(a.weight);
  return a;
}

inline Int scan_window(std::size_t n) { return 2 * static_cast<Int>(n) + 2; }

// |m| beyond which the ordering of gamma+delta is frozen.
inline Int stability_threshold(const BundleSpec& spec, std::size_t n, std::size_t r) {
  check_grassmannian(n, r);
  const Weight d = staircase(n);
  std::vector<Int> a(n), b(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = i < n - r ? 1 : 0;
    b[i] = (i < n - r ? spec.alpha[i] : spec.beta[i - (n - r)]) + d[i];
  }
  Int t = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a[i] != a[j]) t = std::max(t, std::abs(b[i] - b[j]) + 1);
  return t;
}

struct BotthetaEntry {
  GrassBundle bundle;
  Int m;
  CohomologyAnswer computed;  // normalized
  CohomologyAnswer expected;  // normalized
  bool ok;
};

struct BotthetaReport {
  std::size_t n = 0, r = 0;
  Int m_lo = 0, m_hi = 0;
  std::vector<BotthetaEntry> entries;
  std::size_t mismatches() const {
    std::size_t k = 0;
    for (const auto& e : entries) k += !e.ok;
    return k;
  }
};

// For G(2,4) the theta expectation gains H^1 = k at m=-2.
inline BotthetaReport verify_botttheta(std::size_t n, std::size_t r, Int m_lo, Int m_hi) {
  check_grassmannian(n, r);
  BotthetaReport rep{n, r, m_lo, m_hi, {}};
  for (GrassBundle b : {GrassBundle::O, GrassBundle::theta})
    for (Int m = m_lo; m <= m_hi; ++m) {
      CohomologyAnswer got = normalized(bott_evaluate(named_bundle(b, n, r, m), n, r));
      CohomologyAnswer want = closed_form(b, n, r, m);
      if (b == GrassBundle::theta && n == 4 && r == 2 && m == -2) {
        want.vanishes = false;
        want.degree = 1;
        want.weight = Weight::constant(4, 0);
        want.dimension = 1;
      }
      rep.entries.push_back({b, m, got, want, got == want});
    }
  return rep;
}

struct ScanException {
  GrassBundle bundle;
  Int degree;
  Int m;
  bool documented;
};

struct ScanReport {
  std::size_t n = 0, r = 0;
  Int i_lo = 0, i_hi = 0, window = 0;
  bool stable = true;
  std::vector<ScanException> exceptions;
  Int certified_hi = 0;  // H^i vanish for i_lo <= i <= certified_hi; < i_lo if none
};

inline bool documented_exception(GrassBundle b, std::size_t n, std::size_t r, Int i, Int m) {
  const Int N = static_cast<Int>(n), R = static_cast<Int>(r);
  if (b != GrassBundle::theta) return false;
  if (i == R * (N - R) - 1 && m == -N) return true;
  return n == 4 && r == 2 && i == 1 && m == -2;
}

inline ScanReport scan_vanishing(std::size_t n, std::size_t r, Int i_lo, Int i_hi) {
  check_grassmannian(n, r);
  const Int top = static_cast<Int>(r * (n - r));
  if (i_lo < 1 || i_hi > top - 1 || i_lo > i_hi + 1)
    throw std::invalid_argument("scan: need 1 <= i_lo <= i_hi <= r(n-r)-1");
  ScanReport rep;
  rep.n = n;
  rep.r = r;
  rep.i_lo = i_lo;
  rep.i_hi = i_hi;
  rep.window = scan_window(n);
  Int first_bad = i_hi + 1;
  for (GrassBundle b : {GrassBundle::O, GrassBundle::theta}) {
    rep.stable = rep.stable && stability_threshold(named_bundle(b, n, r, 0), n, r) <= rep.window;
    for (Int m = -rep.window; m <= rep.window; ++m) {
      const CohomologyAnswer a = bott_evaluate(named_bundle(b, n, r, m), n, r);
      if (a.vanishes || a.degree < i_lo || a.degree > i_hi) continue;
      rep.exceptions.push_back({b, a.degree, m, documented_exception(b, n, r, a.degree, m)});
      first_bad = std::min(first_bad, a.degree);
    }
  }
  rep.certified_hi = first_bad - 1;
  return rep;
}

inline const char* bundle_name(GrassBundle b) { return b == GrassBundle::O ? "O" : "theta"; }

}  // namespace bottcalc
