#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "linalg.hpp"
#include "poly.hpp"
#include "schur.hpp"
#include "weights.hpp"

namespace bottcalc {

// Four-term complex  A (x) F -d1-> A (x) U* -d2-> (S (x) V*)^G -d3-> (S (x) sl_r*)^G  of the
// Pluecker algebra A = S^G, S = k[x_ij], G = SL(W), sliced by P-degree p:
//   C0_p = A_{p-2} (x) F,  C1_p = A_{p-1} (x) U*,  C2_p = (S_{pr-1} (x) V*)^G,  C3_p = (S_{pr} (x) sl*)^G.
// Every term is a GL(E)-module; each slice is split into GL(E)-weight blocks mu with |mu| = pr.
// H1_p = ker d2 / im d1 is H^0_m(Omega_A)_p and H2_p = ker d3 / im d2 is H^1_m(Omega_A)_p.

using Mat = std::vector<std::vector<Int>>;

// Basis of sl_r: E_ab (a != b, lexicographic), then H_a = E_aa - E_{a+1,a+1}.
// E_ab acts on S by rho(E_ab) = sum_k x_ka d/dx_kb; the raising operators are E_{c,c+1}.
class SlBasis {
 public:
  explicit SlBasis(std::size_t r) : r_(r) {
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) {
        if (a == b) continue;
        Mat m(r, std::vector<Int>(r, 0));
        m[a][b] = 1;
        std::vector<Int> s(r, 0);
        ++s[a];
        --s[b];
        push(std::move(m), std::move(s), "w*" + std::to_string(b + 1) + "(x)w" + std::to_string(a + 1));
      }
    for (std::size_t a = 0; a + 1 < r; ++a) {
      Mat m(r, std::vector<Int>(r, 0));
      m[a][a] = 1;
      m[a + 1][a + 1] = -1;
      push(std::move(m), std::vector<Int>(r, 0), "h" + std::to_string(a + 1));
    }
  }

  std::size_t r() const { return r_; }
  std::size_t size() const { return mats_.size(); }
  const Mat& matrix(std::size_t l) const { return mats_[l]; }
  const std::string& name(std::size_t l) const { return names_[l]; }
  // GL(W)-weight of the basis element.
  const std::vector<Int>& shift(std::size_t l) const { return shift_[l]; }

  std::size_t index_of_e(std::size_t a, std::size_t b) const {
    if (a == b || a >= r_ || b >= r_) throw std::out_of_range("index_of_e");
    return a * (r_ - 1) + (b < a ? b : b - 1);
  }

  Mat raising(std::size_t c) const { return mats_[index_of_e(c, c + 1)]; }

  // Coordinates of a traceless matrix.
  std::vector<Int> coords(const Mat& m) const {
    std::vector<Int> out(size(), 0);
    Int trace = 0, partial = 0;
    for (std::size_t a = 0; a < r_; ++a) {
      trace += m[a][a];
      for (std::size_t b = 0; b < r_; ++b)
        if (a != b) out[index_of_e(a, b)] = m[a][b];
    }
    if (trace != 0) throw std::invalid_argument("coords: matrix is not traceless");
    for (std::size_t a = 0; a + 1 < r_; ++a) {
      partial += m[a][a];
      out[r_ * (r_ - 1) + a] = partial;
    }
    return out;
  }

  static Mat bracket(const Mat& x, const Mat& y) {
    const std::size_t r = x.size();
    Mat out(r, std::vector<Int>(r, 0));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k) out[i][j] += x[i][k] * y[k][j] - y[i][k] * x[k][j];
    return out;
  }

 private:
  void push(Mat m, std::vector<Int> s, std::string name) {
    mats_.push_back(std::move(m));
    shift_.push_back(std::move(s));
    names_.push_back(std::move(name));
  }
  std::size_t r_;
  std::vector<Mat> mats_;
  std::vector<std::vector<Int>> shift_;
  std::vector<std::string> names_;
};

// rho(X) f = sum_{a,b} X_ab sum_k x_ka df/dx_kb.
inline Poly rho_apply(const MatrixRing& R, const Mat& X, const Poly& f) {
  Poly out;
  for (std::size_t a = 0; a < R.r(); ++a)
    for (std::size_t b = 0; b < R.r(); ++b) {
      if (!X[a][b]) continue;
      for (std::size_t k = 0; k < R.n(); ++k)
        out += f.derivative(R.var(k, b)).times_variable(R.var(k, a)).scaled(static_cast<long>(X[a][b]));
    }
  return out;
}

// Sparse elements keyed by (tag, index, monomial):
//   forms f dx_v -> (0, v, f); C1 elements f (x) u_I -> (0, I, f);
//   S (x) sl* functions Phi with Phi(X_l) = f -> (0, l, f).
// Nonzero tags separate the target components of stacked maps.
struct Key {
  std::uint32_t tag = 0;
  std::uint32_t index = 0;
  Mono mono;
  friend bool operator==(const Key&, const Key&) = default;
  friend auto operator<=>(const Key&, const Key&) = default;
};

using Element = std::map<Key, mpq_class>;

inline void accumulate(Element& e, const Key& k, const mpq_class& c) {
  if (c == 0) return;
  auto [it, fresh] = e.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) e.erase(it);
  }
}

inline void accumulate(Element& e, std::uint32_t tag, std::uint32_t index, const Poly& f, const mpq_class& scale = 1) {
  for (const auto& [m, c] : f.terms()) accumulate(e, Key{tag, index, m}, c * scale);
}

// Assigns consecutive column indices to keys on first sight.
class Coordinates {
 public:
  QVec vec(const Element& e) {
    QVec v;
    v.reserve(e.size());
    for (const auto& [k, c] : e) {
      auto [it, fresh] = idx_.try_emplace(k, idx_.size());
      v.emplace_back(it->second, c);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }
  std::size_t size() const { return idx_.size(); }

 private:
  std::map<Key, std::size_t> idx_;
};

// g * df as a form.
inline Element differential(const MatrixRing& R, const Poly& g, const Poly& f) {
  Element out;
  for (std::size_t v = 0; v < R.nvars(); ++v) {
    Poly d = f.derivative(v);
    if (d.is_zero()) continue;
    accumulate(out, 0, static_cast<std::uint32_t>(v), g * d);
  }
  return out;
}

// Lie derivative of a form along rho(X): (rho(X)f) dx_kb + f sum_a X_ab dx_ka.
inline Element lie_form(const MatrixRing& R, const Mat& X, const Element& w) {
  Element out;
  for (const auto& [k, c] : w) {
    const Poly f = Poly::monomial(k.mono, c);
    accumulate(out, 0, k.index, rho_apply(R, X, f));
    const std::size_t row = R.row_of(k.index), b = R.col_of(k.index);
    for (std::size_t a = 0; a < R.r(); ++a)
      if (X[a][b]) accumulate(out, Key{0, static_cast<std::uint32_t>(R.var(row, a)), k.mono}, c * static_cast<long>(X[a][b]));
  }
  return out;
}

// d3(f dx_v)(X_l) = f rho_v(X_l).
inline Element contract(const MatrixRing& R, const SlBasis& sl, const Element& w) {
  Element out;
  for (std::size_t l = 0; l < sl.size(); ++l) {
    const Mat& X = sl.matrix(l);
    for (const auto& [k, c] : w) {
      const std::size_t row = R.row_of(k.index), b = R.col_of(k.index);
      for (std::size_t a = 0; a < R.r(); ++a) {
        if (!X[a][b]) continue;
        Mono m = k.mono;
        ++m.e[R.var(row, a)];
        accumulate(out, Key{0, static_cast<std::uint32_t>(l), m}, c * static_cast<long>(X[a][b]));
      }
    }
  }
  return out;
}

// (Y.Phi)(X_k) = rho(Y) Phi(X_k) - Phi([Y, X_k]).
inline Element act_hom(const MatrixRing& R, const SlBasis& sl, const Mat& Y, const Element& phi) {
  std::vector<std::vector<Int>> br(sl.size());
  for (std::size_t k = 0; k < sl.size(); ++k) br[k] = sl.coords(SlBasis::bracket(Y, sl.matrix(k)));
  Element out;
  for (const auto& [key, c] : phi) {
    accumulate(out, 0, key.index, rho_apply(R, Y, Poly::monomial(key.mono, c)));
    for (std::size_t k = 0; k < sl.size(); ++k) {
      const Int coef = br[k][key.index];
      if (coef) accumulate(out, Key{0, static_cast<std::uint32_t>(k), key.mono}, -c * static_cast<long>(coef));
    }
  }
  return out;
}

// Quadratic element sum c (u_a u_b), a <= b, of Sym^2 U*.
struct Quadric {
  std::vector<std::tuple<std::size_t, std::size_t, mpq_class>> terms;
};

struct SliceReport;

struct OracleConfig {
  std::size_t r = 2, n = 4;
  std::size_t p_min = 1, p_max = 4;
  bool all_weights = false;           // every GL(E)-weight block instead of dominant ones
  bool modular = false;               // agreed ranks modulo two primes, exact on disagreement
  std::size_t max_columns = 2000000;  // per block; larger blocks truncate the run
  double time_limit = 0;              // seconds, 0 = none
  unsigned threads = 1;
  std::string dump_dir;               // sparse-triplet dumps when nonempty
  std::function<void(const SliceReport&)> on_slice;  // called after each P-degree
};

// Polynomial ring, minors, products of minors and Pluecker relations, cached by weight.
class PluckerData {
 public:
  PluckerData(std::size_t r, std::size_t n) : R_(n, r) {
    if (r < 1 || r > n) throw std::invalid_argument("Pluecker data needs 1 <= r <= n");
    subsets_ = subsets(n, r);
    for (const auto& s : subsets_) minors_.push_back(maximal_minor(R_, s));
    for (std::size_t a = 0; a < subsets_.size(); ++a)
      for (std::size_t b = a; b < subsets_.size(); ++b) pairs_[add_w(indicator(a), indicator(b))].emplace_back(a, b);
    for (const auto& [nu, prs] : pairs_) {
      std::vector<QVec> cols;
      Coordinates co;
      for (auto [a, b] : prs) {
        Element e;
        accumulate(e, 0, 0, minors_[a] * minors_[b]);
        cols.push_back(co.vec(e));
      }
      for (const QVec& k : kernel_of(cols)) {
        Quadric q;
        for (const auto& [i, c] : k) q.terms.emplace_back(prs[i].first, prs[i].second, c);
        relations_[nu].push_back(std::move(q));
      }
    }
  }

  const MatrixRing& ring() const { return R_; }
  std::size_t r() const { return R_.r(); }
  std::size_t n() const { return R_.n(); }
  const std::vector<std::vector<std::size_t>>& row_sets() const { return subsets_; }
  const std::vector<Poly>& minors() const { return minors_; }
  const std::map<std::vector<Int>, std::vector<Quadric>>& relations() const { return relations_; }

  std::vector<Int> indicator(std::size_t a) const {
    std::vector<Int> w(n(), 0);
    for (std::size_t i : subsets_[a]) w[i] = 1;
    return w;
  }

  std::size_t relation_count() const {
    std::size_t k = 0;
    for (const auto& [nu, qs] : relations_) k += qs.size();
    return k;
  }

  // Basis of A_m of GL(E)-weight nu: an independent subset of the products of m minors.
  std::vector<Poly> algebra_basis(std::size_t m, const std::vector<Int>& nu) {
    Int total = 0;
    for (Int x : nu) {
      if (x < 0 || x > static_cast<Int>(m)) return {};
      total += x;
    }
    if (total != static_cast<Int>(m * r())) return {};
    const auto key = std::make_pair(m, nu);
    {
      std::lock_guard<std::mutex> g(mtx_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    std::vector<Poly> basis;
    QEchelon ech;
    Coordinates co;
    std::vector<Int> rem = nu;
    std::vector<std::size_t> chosen;
    auto rec = [&](auto&& self, std::size_t start) -> void {
      if (chosen.size() == m) {
        Poly prod = Poly::constant(1);
        for (std::size_t a : chosen) prod = prod * minors_[a];
        Element e;
        accumulate(e, 0, 0, prod);
        if (ech.insert(co.vec(e))) basis.push_back(std::move(prod));
        return;
      }
      for (std::size_t a = start; a < subsets_.size(); ++a) {
        bool ok = true;
        for (std::size_t i : subsets_[a]) ok = ok && rem[i] > 0;
        if (!ok) continue;
        for (std::size_t i : subsets_[a]) --rem[i];
        chosen.push_back(a);
        self(self, a);
        chosen.pop_back();
        for (std::size_t i : subsets_[a]) ++rem[i];
      }
    };
    rec(rec, 0);
    std::lock_guard<std::mutex> g(mtx_);
    cache_.emplace(key, basis);
    return basis;
  }

 private:
  std::vector<Int> add_w(std::vector<Int> a, const std::vector<Int>& b) const {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  }

  MatrixRing R_;
  std::vector<std::vector<std::size_t>> subsets_;
  std::vector<Poly> minors_;
  std::map<std::vector<Int>, std::vector<std::pair<std::size_t, std::size_t>>> pairs_;
  std::map<std::vector<Int>, std::vector<Quadric>> relations_;
  std::mutex mtx_;
  std::map<std::pair<std::size_t, std::vector<Int>>, std::vector<Poly>> cache_;
};

// Sizes and ranks of one GL(E)-weight block of a slice.
struct BlockCounts {
  std::size_t c0 = 0, c1 = 0, omega = 0, c2 = 0, c3_ambient = 0, c3 = 0;
  std::size_t rank_d1 = 0, rank_d2 = 0, ker_d3 = 0;
  bool d2d1_zero = true, d3d2_zero = true, image_invariant = true, exact = true;

  long h1() const { return static_cast<long>(c1) - static_cast<long>(rank_d2) - static_cast<long>(rank_d1); }
  long h2() const { return static_cast<long>(ker_d3) - static_cast<long>(rank_d2); }
};

// Predicted GL(E)-decompositions of the slice terms and maps at P-degree p.
struct SlicePrediction {
  SchurDecomposition c0, c1, c2, c3, rank_d1, rank_d2, ker_d3, h1;
};

namespace detail {

inline Weight blocks_weight(std::initializer_list<std::pair<Int, Int>> runs) {
  std::vector<Int> v;
  for (auto [value, count] : runs)
    for (Int i = 0; i < count; ++i) v.push_back(value);
  return Weight(std::move(v));
}

inline void add_if_partition(SchurDecomposition& d, const Weight& w, std::size_t n) {
  const Weight s = strip_zeros(w);
  if (s.is_partition() && s.size() <= n) d.add(s);
}

}  // namespace detail

inline SlicePrediction predict_slice(std::size_t r, std::size_t n, std::size_t p) {
  using detail::add_if_partition;
  using detail::blocks_weight;
  if (p < 1) throw std::invalid_argument("predict_slice: P-degree starts at 1");
  const Int R = static_cast<Int>(r), P = static_cast<Int>(p), m = P - 1;
  const Int top = static_cast<Int>(std::min(r, n - r));
  SlicePrediction s;
  if (p >= 2 && r < n)
    for (const auto& t : plucker_relation_space(r, n).terms)
      for (const auto& u : tensor_decompose(Weight::constant(r, P - 2), t.weight, n).terms)
        s.c0.add(strip_zeros(u.weight), u.multiplicity * t.multiplicity);
  for (Int i = 0; i <= top; ++i) add_if_partition(s.c1, blocks_weight({{m + 1, R - i}, {m, i}, {1, i}}), n);
  if (r == 1) {
    for (const auto& u : tensor_decompose(Weight{m}, Weight{1}, n).terms) s.c2.add(strip_zeros(u.weight), u.multiplicity);
  } else if (m >= 1) {
    add_if_partition(s.c2, blocks_weight({{m + 2, 1}, {m + 1, R - 2}, {m, 1}}), n);
    add_if_partition(s.c2, blocks_weight({{m + 1, R}}), n);
    add_if_partition(s.c2, blocks_weight({{m + 1, R - 1}, {m, 1}, {1, 1}}), n);
  } else {
    add_if_partition(s.c2, blocks_weight({{2, 1}, {1, R - 2}}), n);
    add_if_partition(s.c2, blocks_weight({{1, R}}), n);
  }
  if (r >= 2) add_if_partition(s.c3, blocks_weight({{m + 2, 1}, {m + 1, R - 2}, {m, 1}}), n);
  // Image of d2: S_{((m+1)^r)} + S_{((m+1)^{r-1},m,1)} for m >= 1, the top exterior power for m = 0.
  add_if_partition(s.rank_d2, blocks_weight({{m + 1, R}}), n);
  if (m >= 1) add_if_partition(s.rank_d2, blocks_weight({{m + 1, R - 1}, {m, 1}, {1, 1}}), n);
  s.ker_d3 = s.rank_d2;
  if (p == 2 && r < n) s.rank_d1 = plucker_relation_space(r, n);
  if (p >= 3)
    for (Int i = 2; i <= top; ++i) add_if_partition(s.rank_d1, blocks_weight({{m + 1, R - i}, {m, i}, {1, i}}), n);
  if (p == 2 && r < n) s.h1 = h0_omega_degree2(r, n);
  return s;
}

struct BlockResult {
  Weight mu;
  BigInt orbit = 1;
  BlockCounts counts;
};

struct SliceTotals {
  BigInt c0 = 0, c1 = 0, omega = 0, c2 = 0, c3 = 0, rank_d1 = 0, rank_d2 = 0, ker_d3 = 0, h1 = 0, h2 = 0;
};

struct BlockMismatch {
  Weight mu;
  std::string quantity;
  BigInt computed, predicted;
};

struct SliceReport {
  std::size_t p = 0;
  bool truncated = false;
  bool exact = true;
  double seconds = 0;
  std::vector<BlockResult> blocks;
  SliceTotals totals;
  SliceTotals predicted;
  std::vector<BlockMismatch> mismatches;
  bool composites_zero = true;   // d2 d1 = 0 and d3 d2 = 0 on every block
  bool image_invariant = true;   // d2 lands in the invariants
};

struct OracleReport {
  std::size_t r = 0, n = 0;
  std::size_t minors_rank = 0;
  std::size_t relations = 0;
  BigInt relations_predicted = 0;
  std::vector<SliceReport> slices;
  bool truncated = false;
  double seconds = 0;
};

namespace detail {

inline BigInt orbit_size(const Weight& mu) {
  std::map<Int, unsigned long> mult;
  for (Int x : mu) ++mult[x];
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), mu.size());
  for (auto [v, k] : mult) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), k);
    out /= f;
  }
  return out;
}

inline void compositions(Int total, std::size_t len, std::vector<Int>& cur, std::vector<Weight>& out) {
  if (cur.size() + 1 == len) {
    cur.push_back(total);
    out.emplace_back(cur);
    cur.pop_back();
    return;
  }
  for (Int k = total; k >= 0; --k) {
    cur.push_back(k);
    compositions(total - k, len, cur, out);
    cur.pop_back();
  }
}

class Dumper {
 public:
  explicit Dumper(std::ostream* os) : os_(os) {}
  void write(const char* map, std::size_t p, const Weight& mu, const std::vector<QVec>& cols, std::size_t rows) {
    if (!os_) return;
    std::size_t nnz = 0;
    for (const QVec& c : cols) nnz += c.size();
    std::ostringstream s;
    s << "# map " << map << " p " << p << " mu " << render_weight(mu) << " rows " << rows << " cols " << cols.size()
      << " nnz " << nnz << "\n";
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (const auto& [i, c] : cols[j]) s << i << ' ' << j << ' ' << c.get_str() << "\n";
    std::lock_guard<std::mutex> g(mtx_);
    *os_ << s.str();
  }

 private:
  std::ostream* os_;
  std::mutex mtx_;
};

}  // namespace detail

// Ambient basis f dx_v of Omega_S in GL(E)-weight mu and GL(W)-weight (p,...,p).
inline std::vector<Element> omega_basis(const MatrixRing& R, const Weight& mu, std::size_t p) {
  std::vector<Element> out;
  for (std::size_t v = 0; v < R.nvars(); ++v) {
    std::vector<Int> rows = mu.entries(), cols(R.r(), static_cast<Int>(p));
    --rows[R.row_of(v)];
    --cols[R.col_of(v)];
    for (const Mono& m : R.monomials(rows, cols)) out.push_back(Element{{Key{0, static_cast<std::uint32_t>(v), m}, 1}});
  }
  return out;
}

// Ambient basis of S_{pr} (x) sl* in GL(E)-weight mu with constant GL(W)-weight.
inline std::vector<Element> hom_basis(const MatrixRing& R, const SlBasis& sl, const Weight& mu, std::size_t p) {
  std::vector<Element> out;
  for (std::size_t l = 0; l < sl.size(); ++l) {
    std::vector<Int> cols(R.r(), static_cast<Int>(p));
    for (std::size_t j = 0; j < R.r(); ++j) cols[j] += sl.shift(l)[j];
    for (const Mono& m : R.monomials(mu.entries(), cols)) out.push_back(Element{{Key{0, static_cast<std::uint32_t>(l), m}, 1}});
  }
  return out;
}

// Raising operators stacked into one element with tags 1..r-1.
template <class Act>
Element raise_all(const SlBasis& sl, const Element& x, Act act) {
  Element out;
  for (std::size_t c = 0; c + 1 < sl.r(); ++c)
    for (const auto& [k, v] : act(sl.raising(c), x)) out.emplace(Key{static_cast<std::uint32_t>(c + 1), k.index, k.mono}, v);
  return out;
}

inline std::size_t block_rank(const std::vector<QVec>& cols, bool modular, bool& exact) {
  const RankResult rr = certified_rank(cols, modular);
  exact = exact && rr.exact;
  return rr.rank;
}

// Invariant basis of Omega_S in one weight block, as combinations of omega_basis.
inline std::vector<QVec> omega_invariants(const MatrixRing& R, const SlBasis& sl, const Weight& mu, std::size_t p) {
  std::vector<QVec> cols;
  Coordinates co;
  for (const Element& e : omega_basis(R, mu, p))
    cols.push_back(co.vec(raise_all(sl, e, [&](const Mat& Y, const Element& w) { return lie_form(R, Y, w); })));
  return kernel_of(cols);
}

inline BlockCounts compute_block(PluckerData& D, const SlBasis& sl, const Weight& mu, std::size_t p, bool modular,
                                 detail::Dumper* dump = nullptr) {
  const MatrixRing& R = D.ring();
  BlockCounts out;
  auto lie = [&](const Mat& Y, const Element& w) { return lie_form(R, Y, w); };

  // C1 basis g (x) u_I and its d2 images.
  std::vector<Element> c1_images;
  Coordinates omega_co;
  std::vector<QVec> d2_cols;
  for (std::size_t a = 0; a < D.row_sets().size(); ++a) {
    std::vector<Int> rest = mu.entries();
    const std::vector<Int> ind = D.indicator(a);
    for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= ind[i];
    for (const Poly& g : D.algebra_basis(p - 1, rest)) {
      ++out.c1;
      Element img = differential(R, g, D.minors()[a]);
      d2_cols.push_back(omega_co.vec(img));
      c1_images.push_back(std::move(img));
    }
  }

  // C0 basis g (x) q and its d1 images sum c (g u_b (x) u_a + g u_a (x) u_b).
  Coordinates c1_co;
  std::vector<QVec> d1_cols;
  if (p >= 2)
    for (const auto& [nu, qs] : D.relations()) {
      std::vector<Int> rest = mu.entries();
      bool ok = true;
      for (std::size_t i = 0; i < rest.size(); ++i) ok = ok && (rest[i] -= nu[i]) >= 0;
      if (!ok) continue;
      for (const Poly& g : D.algebra_basis(p - 2, rest))
        for (const Quadric& q : qs) {
          ++out.c0;
          Element img;
          Element form;
          for (const auto& [a, b, c] : q.terms) {
            const Poly ga = g * D.minors()[a], gb = g * D.minors()[b];
            accumulate(img, 0, static_cast<std::uint32_t>(a), gb, c);
            accumulate(img, 0, static_cast<std::uint32_t>(b), ga, c);
            for (const auto& [k, v] : differential(R, gb, D.minors()[a])) accumulate(form, k, v * c);
            for (const auto& [k, v] : differential(R, ga, D.minors()[b])) accumulate(form, k, v * c);
          }
          out.d2d1_zero = out.d2d1_zero && form.empty();
          d1_cols.push_back(c1_co.vec(img));
        }
    }
  out.rank_d1 = block_rank(d1_cols, modular, out.exact);
  out.rank_d2 = block_rank(d2_cols, modular, out.exact);

  for (const Element& img : c1_images) {
    out.d3d2_zero = out.d3d2_zero && contract(R, sl, img).empty();
    out.image_invariant = out.image_invariant && raise_all(sl, img, lie).empty();
  }

  // Omega block: invariants = ker(raising), ker d3 on invariants = ker(raising + d3).
  const std::vector<Element> om = omega_basis(R, mu, p);
  out.omega = om.size();
  std::vector<QVec> e_cols, ed_cols;
  Coordinates e_co, ed_co;
  for (const Element& w : om) {
    Element up = raise_all(sl, w, lie);
    Element both = up;
    for (const auto& [k, v] : contract(R, sl, w)) both.emplace(Key{0, k.index, k.mono}, v);
    e_cols.push_back(e_co.vec(up));
    ed_cols.push_back(ed_co.vec(both));
  }
  out.c2 = out.omega - block_rank(e_cols, modular, out.exact);
  out.ker_d3 = out.omega - block_rank(ed_cols, modular, out.exact);

  const std::vector<Element> hb = hom_basis(R, sl, mu, p);
  out.c3_ambient = hb.size();
  std::vector<QVec> h_cols;
  Coordinates h_co;
  for (const Element& phi : hb)
    h_cols.push_back(h_co.vec(raise_all(sl, phi, [&](const Mat& Y, const Element& x) { return act_hom(R, sl, Y, x); })));
  out.c3 = out.c3_ambient - block_rank(h_cols, modular, out.exact);

  if (dump) {
    dump->write("d1", p, mu, d1_cols, c1_co.size());
    dump->write("d2", p, mu, d2_cols, omega_co.size());
    dump->write("raise_omega", p, mu, e_cols, e_co.size());
    dump->write("raise_omega+d3", p, mu, ed_cols, ed_co.size());
    dump->write("raise_hom", p, mu, h_cols, h_co.size());
  }
  return out;
}

inline std::vector<Weight> block_weights(std::size_t r, std::size_t n, std::size_t p, bool all_weights) {
  const Int total = static_cast<Int>(p * r);
  std::vector<Weight> out;
  if (all_weights) {
    std::vector<Int> cur;
    detail::compositions(total, n, cur, out);
  } else {
    for (const Weight& w : partitions(total, n)) out.push_back(pad(w, n));
  }
  return out;
}

// Ambient Omega columns of a block, used to enforce the resource limit before building it.
inline std::size_t omega_size(const MatrixRing& R, const Weight& mu, std::size_t p) {
  std::size_t k = 0;
  for (std::size_t v = 0; v < R.nvars(); ++v) {
    std::vector<Int> rows = mu.entries(), cols(R.r(), static_cast<Int>(p));
    --rows[R.row_of(v)];
    --cols[R.col_of(v)];
    k += R.monomials(rows, cols).size();
  }
  return k;
}

inline SliceReport compute_slice(PluckerData& D, const OracleConfig& cfg, std::size_t p, detail::Dumper* dump,
                                 std::chrono::steady_clock::time_point deadline) {
  const auto t0 = std::chrono::steady_clock::now();
  const SlBasis sl(D.r());
  SliceReport rep;
  rep.p = p;
  const std::vector<Weight> mus = block_weights(D.r(), D.n(), p, cfg.all_weights);
  for (const Weight& mu : mus)
    if (omega_size(D.ring(), mu, p) > cfg.max_columns) {
      rep.truncated = true;
      return rep;
    }
  std::vector<std::optional<BlockCounts>> results(mus.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> out_of_time{false};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < mus.size();) {
      if (cfg.time_limit > 0 && std::chrono::steady_clock::now() > deadline) {
        out_of_time = true;
        return;
      }
      results[i] = compute_block(D, sl, mus[i], p, cfg.modular, dump);
    }
  };
  const unsigned k = std::max(1u, cfg.threads);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < k; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (out_of_time) {
    rep.truncated = true;
    return rep;
  }

  const SlicePrediction pred = predict_slice(D.r(), D.n(), p);
  auto check = [&](const Weight& mu, const char* what, std::size_t got, const SchurDecomposition& d) {
    const BigInt want = weight_multiplicity(d, mu);
    if (want != static_cast<unsigned long>(got)) rep.mismatches.push_back({mu, what, static_cast<unsigned long>(got), want});
  };
  for (std::size_t i = 0; i < mus.size(); ++i) {
    BlockResult b{mus[i], cfg.all_weights ? BigInt(1) : detail::orbit_size(mus[i]), *results[i]};
    const BlockCounts& c = b.counts;
    check(b.mu, "C0", c.c0, pred.c0);
    check(b.mu, "C1", c.c1, pred.c1);
    check(b.mu, "C2", c.c2, pred.c2);
    check(b.mu, "C3", c.c3, pred.c3);
    check(b.mu, "rank d1", c.rank_d1, pred.rank_d1);
    check(b.mu, "rank d2", c.rank_d2, pred.rank_d2);
    check(b.mu, "ker d3", c.ker_d3, pred.ker_d3);
    rep.composites_zero = rep.composites_zero && c.d2d1_zero && c.d3d2_zero;
    rep.image_invariant = rep.image_invariant && c.image_invariant;
    rep.exact = rep.exact && c.exact;
    auto add = [&](BigInt& acc, long v) { acc += b.orbit * BigInt(v); };
    add(rep.totals.c0, static_cast<long>(c.c0));
    add(rep.totals.c1, static_cast<long>(c.c1));
    add(rep.totals.omega, static_cast<long>(c.omega));
    add(rep.totals.c2, static_cast<long>(c.c2));
    add(rep.totals.c3, static_cast<long>(c.c3));
    add(rep.totals.rank_d1, static_cast<long>(c.rank_d1));
    add(rep.totals.rank_d2, static_cast<long>(c.rank_d2));
    add(rep.totals.ker_d3, static_cast<long>(c.ker_d3));
    add(rep.totals.h1, c.h1());
    add(rep.totals.h2, c.h2());
    rep.blocks.push_back(std::move(b));
  }
  const std::size_t n = D.n();
  rep.predicted.c0 = dimension(pred.c0, n);
  rep.predicted.c1 = dimension(pred.c1, n);
  rep.predicted.c2 = dimension(pred.c2, n);
  rep.predicted.c3 = dimension(pred.c3, n);
  rep.predicted.rank_d1 = dimension(pred.rank_d1, n);
  rep.predicted.rank_d2 = dimension(pred.rank_d2, n);
  rep.predicted.ker_d3 = dimension(pred.ker_d3, n);
  rep.predicted.h1 = dimension(pred.h1, n);
  rep.predicted.h2 = 0;
  rep.predicted.omega = rep.totals.omega;
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

// dim H^0_m(Omega_A)_p and dim H^1_m(Omega_A)_p for p_min <= p <= p_max.
inline OracleReport local_cohomology_dims(const OracleConfig& cfg) {
  if (cfg.r < 1 || cfg.r >= cfg.n) throw std::invalid_argument("oracle: need 1 <= r < n");
  if (cfg.p_min < 1 || cfg.p_min > cfg.p_max) throw std::invalid_argument("oracle: need 1 <= p_min <= p_max");
  const auto t0 = std::chrono::steady_clock::now();
  const auto deadline = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                 std::chrono::duration<double>(cfg.time_limit > 0 ? cfg.time_limit : 0));
  PluckerData D(cfg.r, cfg.n);
  OracleReport rep;
  rep.r = cfg.r;
  rep.n = cfg.n;
  {
    std::vector<QVec> cols;
    Coordinates co;
    for (const Poly& f : D.minors()) {
      Element e;
      accumulate(e, 0, 0, f);
      cols.push_back(co.vec(e));
    }
    rep.minors_rank = rank_of(cols);
  }
  rep.relations = D.relation_count();
  rep.relations_predicted = dimension(plucker_relation_space(cfg.r, cfg.n), cfg.n);

  std::ofstream file;
  std::optional<detail::Dumper> dumper;
  if (!cfg.dump_dir.empty()) {
    const std::string path = cfg.dump_dir + "/oracle_r" + std::to_string(cfg.r) + "_n" + std::to_string(cfg.n) + ".txt";
    file.open(path);
    if (!file) throw std::runtime_error("cannot open dump file " + path);
    file << "# sparse triplets: row col value (0-based, value a or a/b); one header line per block and map\n";
    dumper.emplace(&file);
  }
  for (std::size_t p = cfg.p_min; p <= cfg.p_max; ++p) {
    SliceReport s = compute_slice(D, cfg, p, dumper ? &*dumper : nullptr, deadline);
    const bool cut = s.truncated;
    if (cfg.on_slice) cfg.on_slice(s);
    rep.slices.push_back(std::move(s));
    if (cut) {
      rep.truncated = true;
      break;
    }
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

// Hilbert function of A in P-degree m: sum over weights of the span of products of minors.
struct HilbertCheck {
  std::size_t m = 0;
  BigInt computed = 0, predicted = 0;
  bool per_weight_ok = true;
};

inline HilbertCheck hilbert_check(PluckerData& D, std::size_t m) {
  HilbertCheck h;
  h.m = m;
  const Weight rect = Weight::constant(D.r(), static_cast<Int>(m));
  for (const Weight& mu : block_weights(D.r(), D.n(), m, false)) {
    const std::size_t k = D.algebra_basis(m, mu.entries()).size();
    h.computed += detail::orbit_size(mu) * static_cast<unsigned long>(k);
    h.per_weight_ok = h.per_weight_ok && kostka(rect, mu) == static_cast<unsigned long>(k);
  }
  h.predicted = gl_dimension(rect, D.n());
  return h;
}

// Explicit vectors from the proofs of the image and kernel lemmas.
struct WitnessReport {
  std::size_t r = 0, n = 0, m = 0;
  bool d2_u1_nonzero = false;       // d2(u1^m (x) u1) = u1^m du1
  bool u2_weight_ok = false;        // u1^m (x) u2 has weight ((m+1)^{r-1}, m, 1)
  bool d2_u2_nonzero = false;
  bool delta_weight_ok = false;     // (2, 1^{r-2}, 0^{n-r+1})
  bool delta_invariant = false;
  bool d3_delta_nonzero = false;
  bool d3_delta_at_x_ok = false;    // d3(delta)(w*_r (x) w_1) = det with last row (0,...,0,x11)
  bool d3_u_delta_nonzero = false;  // d3(u^{m-1} delta) != 0, m >= 1
  bool u_delta_weight_ok = false;   // (m+1, m^{r-2}, m-1, 0^{n-r})
  bool ok() const {
    return d2_u1_nonzero && u2_weight_ok && d2_u2_nonzero && delta_weight_ok && delta_invariant && d3_delta_nonzero &&
           d3_delta_at_x_ok && d3_u_delta_nonzero && u_delta_weight_ok;
  }
};

inline std::vector<Int> form_weight(const MatrixRing& R, const Element& w) {
  std::optional<std::vector<Int>> wt;
  for (const auto& [k, c] : w) {
    std::vector<Int> v = R.row_weight(k.mono);
    ++v[R.row_of(k.index)];
    if (wt && *wt != v) return {};
    wt = v;
  }
  return wt ? *wt : std::vector<Int>{};
}

// delta = det of the r x r matrix with rows x_1, ..., x_{r-1}, dx_1.
inline Element special_form(const MatrixRing& R) {
  const std::size_t r = R.r();
  Element out;
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<std::vector<Poly>> M;
    for (std::size_t i = 0; i + 1 < r; ++i) {
      std::vector<Poly> row;
      for (std::size_t c = 0; c < r; ++c)
        if (c != j) row.push_back(Poly::variable(R.var(i, c)));
      M.push_back(std::move(row));
    }
    const long sign = ((r - 1 + j) % 2) ? -1 : 1;
    accumulate(out, 0, static_cast<std::uint32_t>(R.var(0, j)), determinant(M), sign);
  }
  return out;
}

inline WitnessReport kerd_witnesses(std::size_t r, std::size_t n, std::size_t m) {
  if (r < 2 || r >= n) throw std::invalid_argument("witnesses need 2 <= r < n");
  if (m < 1) throw std::invalid_argument("witnesses need m >= 1");
  const MatrixRing R(n, r);
  const SlBasis sl(r);
  WitnessReport w;
  w.r = r;
  w.n = n;
  w.m = m;
  std::vector<std::size_t> rows1(r), rows2(r);
  for (std::size_t i = 0; i < r; ++i) rows1[i] = rows2[i] = i;
  rows2[r - 1] = r;
  const Poly u1 = maximal_minor(R, rows1), u2 = maximal_minor(R, rows2);
  const Poly u1m = power(u1, static_cast<unsigned>(m));
  w.d2_u1_nonzero = !differential(R, u1m, u1).empty();
  const Element e2 = differential(R, u1m, u2);
  w.d2_u2_nonzero = !e2.empty();
  {
    std::vector<Int> want(n, 0);
    for (std::size_t i = 0; i + 1 < r; ++i) want[i] = static_cast<Int>(m) + 1;
    want[r - 1] = static_cast<Int>(m);
    want[r] = 1;
    w.u2_weight_ok = form_weight(R, e2) == want;
  }
  const Element delta = special_form(R);
  {
    std::vector<Int> want(n, 0);
    want[0] = 2;
    for (std::size_t i = 1; i + 1 < r; ++i) want[i] = 1;
    w.delta_weight_ok = form_weight(R, delta) == want;
  }
  bool col_const = true;
  for (const auto& [k, c] : delta) {
    std::vector<Int> cw = R.col_weight(k.mono);
    ++cw[R.col_of(k.index)];
    col_const = col_const && cw == std::vector<Int>(r, 1);
  }
  w.delta_invariant = col_const && raise_all(sl, delta, [&](const Mat& Y, const Element& x) { return lie_form(R, Y, x); }).empty();
  const Element d3 = contract(R, sl, delta);
  w.d3_delta_nonzero = !d3.empty();
  {
    std::vector<std::vector<Poly>> M(r, std::vector<Poly>(r));
    for (std::size_t i = 0; i + 1 < r; ++i)
      for (std::size_t j = 0; j < r; ++j) M[i][j] = Poly::variable(R.var(i, j));
    M[r - 1][r - 1] = Poly::variable(R.var(0, 0));
    const Poly want = determinant(M);
    const std::size_t l = sl.index_of_e(0, r - 1);
    Poly got;
    for (const auto& [k, c] : d3)
      if (k.index == l) got.add_term(k.mono, c);
    w.d3_delta_at_x_ok = !want.is_zero() && got == want;
  }
  Element ud;
  const Poly um1 = power(u1, static_cast<unsigned>(m - 1));
  for (const auto& [k, c] : delta)
    for (const auto& [mono, c2] : um1.terms()) accumulate(ud, Key{0, k.index, k.mono.times(mono)}, c * c2);
  w.d3_u_delta_nonzero = !contract(R, sl, ud).empty();
  {
    std::vector<Int> want(n, 0);
    want[0] = static_cast<Int>(m) + 1;
    for (std::size_t i = 1; i + 1 < r; ++i) want[i] = static_cast<Int>(m);
    want[r - 1] = static_cast<Int>(m) - 1;
    w.u_delta_weight_ok = form_weight(R, ud) == want;
  }
  return w;
}

}  // namespace bottcalc
