#pragma once

#include <gmpxx.h>

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "weights.hpp"

namespace bottcalc {

using BigInt = mpz_class;

struct SchurTerm {
  Weight weight;
  Int multiplicity = 1;
  friend bool operator==(const SchurTerm&, const SchurTerm&) = default;
};

// Terms are kept sorted by weight, descending, with merged multiplicities.
struct SchurDecomposition {
  std::vector<SchurTerm> terms;

  void add(const Weight& w, Int mult = 1) {
    for (auto& t : terms)
      if (t.weight == w) {
        t.multiplicity += mult;
        return;
      }
    terms.push_back({w, mult});
    std::sort(terms.begin(), terms.end(),
              [](const SchurTerm& a, const SchurTerm& b) { return a.weight > b.weight; });
  }
  bool empty() const { return terms.empty(); }
  friend bool operator==(const SchurDecomposition&, const SchurDecomposition&) = default;
};

inline Weight strip_zeros(const Weight& w) {
  std::vector<Int> v = w.entries();
  while (!v.empty() && v.back() == 0) v.pop_back();
  return Weight(std::move(v));
}

inline BigInt gl_dimension(const Weight& lambda, std::size_t n) {
  if (lambda.size() > n) throw invalid_size("gl_dimension: weight has more than n entries");
  const Weight l = pad(lambda, n);
  if (!l.dominant()) throw std::invalid_argument("gl_dimension: weight is not dominant");
  BigInt num = 1, den = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      num *= BigInt(static_cast<long>(l[i] - l[j] + static_cast<Int>(j - i)));
      den *= static_cast<unsigned long>(j - i);
    }
  return BigInt(num / den);
}

inline BigInt dimension(const SchurDecomposition& d, std::size_t n) {
  BigInt s = 0;
  for (const auto& t : d.terms) s += BigInt(static_cast<long>(t.multiplicity)) * gl_dimension(t.weight, n);
  return s;
}

namespace detail {

struct LRCounter {
  std::vector<Int> lam, nu, mu;
  std::vector<std::vector<Int>> fill;  // fill[row][col]; 0 for cells of lam
  std::vector<Int> count;
  Int found = 0;

  Int cell(std::size_t row, Int col) const {
    return fill[row][static_cast<std::size_t>(col)];
  }

  // Rows top to bottom, each row right to left (the reading order).
  void place(std::size_t row, Int col) {
    if (row == nu.size()) {
      ++found;
      return;
    }
    const Int start = row < lam.size() ? lam[row] : 0;
    if (col < start) {
      place(row + 1, row + 1 < nu.size() ? nu[row + 1] - 1 : 0);
      return;
    }
    const Int right = (col + 1 < nu[row]) ? cell(row, col + 1) : static_cast<Int>(mu.size());
    Int lo = 1;
    if (row > 0) {
      const Int above_start = row - 1 < lam.size() ? lam[row - 1] : 0;
      if (col >= above_start) lo = cell(row - 1, col) + 1;
    }
    const Int hi = std::min<Int>(right, static_cast<Int>(row) + 1);
    for (Int v = lo; v <= hi; ++v) {
      const auto k = static_cast<std::size_t>(v - 1);
      if (count[k] >= mu[k]) continue;
      if (k > 0 && count[k] + 1 > count[k - 1]) continue;
      ++count[k];
      fill[row][static_cast<std::size_t>(col)] = v;
      place(row, col - 1);
      --count[k];
    }
    fill[row][static_cast<std::size_t>(col)] = 0;
  }
};

inline std::vector<Int> trimmed(const Weight& w) { return strip_zeros(w).entries(); }

}  // namespace detail

// Number of LR skew tableaux of shape nu/lambda with content mu.
inline Int littlewood_richardson(const Weight& lambda, const Weight& mu, const Weight& nu) {
  for (const Weight* w : {&lambda, &mu, &nu})
    if (!w->is_partition()) throw std::invalid_argument("littlewood_richardson: arguments must be partitions");
  if (lambda.total() + mu.total() != nu.total()) return 0;
  detail::LRCounter c;
  c.lam = detail::trimmed(lambda);
  c.mu = detail::trimmed(mu);
  c.nu = detail::trimmed(nu);
  if (c.lam.size() > c.nu.size()) return 0;
  for (std::size_t i = 0; i < c.lam.size(); ++i)
    if (c.lam[i] > c.nu[i]) return 0;
  if (c.nu.empty()) return 1;
  c.fill.resize(c.nu.size());
  for (std::size_t i = 0; i < c.nu.size(); ++i) c.fill[i].assign(static_cast<std::size_t>(c.nu[i]), 0);
  c.count.assign(c.mu.size() + 1, 0);
  c.mu.push_back(0);
  c.place(0, c.nu[0] - 1);
  return c.found;
}

namespace detail {

inline void partitions_rec(Int remaining, Int max_part, std::size_t max_len, std::vector<Int>& cur,
                           std::vector<Weight>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (cur.size() == max_len) return;
  for (Int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, max_len, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

// Partitions of k with at most max_len parts, largest first, no trailing zeros.
inline std::vector<Weight> partitions(Int k, std::size_t max_len, Int max_part = -1) {
  std::vector<Weight> out;
  std::vector<Int> cur;
  if (k < 0) return out;
  detail::partitions_rec(k, max_part < 0 ? k : max_part, max_len, cur, out);
  return out;
}

inline SchurDecomposition tensor_decompose(const Weight& lambda, const Weight& mu, std::size_t n) {
  if (lambda.size() > n) throw invalid_size("tensor_decompose: lambda longer than n");
  if (!mu.is_partition()) throw std::invalid_argument("tensor_decompose: mu must be a partition");
  const Weight l = pad(lambda, n);
  if (!l.dominant()) throw std::invalid_argument("tensor_decompose: lambda is not dominant");
  const Int shift = n ? std::min<Int>(l[n - 1], 0) : 0;
  const Weight lp = add_constant(l, -shift);
  const Weight m = strip_zeros(mu);
  SchurDecomposition out;
  if (m.size() > n) return out;
  const Int mu1 = m.empty() ? 0 : m[0];
  const Int boxes = m.total();
  std::vector<Int> nu(n);
  // Weyl: nu_i <= lambda_i + mu_1.
  auto rec = [&](auto&& self, std::size_t i, Int left) -> void {
    if (i == n) {
      if (left != 0) return;
      const Weight nw(nu);
      const Int c = littlewood_richardson(lp, m, nw);
      if (c) out.add(add_constant(nw, shift), c);
      return;
    }
    const Int hi = std::min({lp[i] + mu1, lp[i] + left, i ? nu[i - 1] : lp[i] + mu1});
    for (Int v = hi; v >= lp[i]; --v) {
      nu[i] = v;
      self(self, i + 1, left - (v - lp[i]));
    }
  };
  rec(rec, 0, boxes);
  return out;
}

inline SchurDecomposition tensor_decompose(const SchurDecomposition& a, const Weight& mu, std::size_t n) {
  SchurDecomposition out;
  for (const auto& t : a.terms)
    for (const auto& u : tensor_decompose(t.weight, mu, n).terms) out.add(u.weight, u.multiplicity * t.multiplicity);
  return out;
}

// Pairs (lambda, lambda) for Sym^k(E (x) F), dim E = n, dim F = p.
inline std::vector<std::pair<Weight, Weight>> cauchy(Int k, std::size_t dimE, std::size_t dimF) {
  std::vector<std::pair<Weight, Weight>> out;
  for (const Weight& l : partitions(k, std::min(dimE, dimF))) out.emplace_back(l, l);
  return out;
}

namespace detail {

inline Weight two_one(std::size_t r, std::size_t i) {
  std::vector<Int> v(r - i, 2);
  v.insert(v.end(), 2 * i, 1);
  return Weight(std::move(v));
}

inline SchurDecomposition two_one_family(std::size_t r, std::size_t n, std::size_t lo, bool odd) {
  if (r < 1 || r >= n) throw std::invalid_argument("need 1 <= r < n");
  SchurDecomposition out;
  const std::size_t top = std::min(r, n - r);
  for (std::size_t i = lo; i <= top; ++i)
    if ((i % 2 == 1) == odd) out.add(two_one(r, i));
  return out;
}

}  // namespace detail

inline SchurDecomposition plucker_relation_space(std::size_t r, std::size_t n) {
  return detail::two_one_family(r, n, 2, false);
}

inline SchurDecomposition wedge2_of_wedge_r(std::size_t r, std::size_t n) {
  return detail::two_one_family(r, n, 1, true);
}

inline SchurDecomposition h0_omega_degree2(std::size_t r, std::size_t n) {
  return detail::two_one_family(r, n, 3, true);
}

// Number of semistandard tableaux of shape lambda and content mu.
inline BigInt kostka(const Weight& lambda, const Weight& mu) {
  if (!lambda.is_partition()) throw std::invalid_argument("kostka: shape must be a partition");
  std::vector<Int> content = mu.entries();
  for (Int c : content)
    if (c < 0) return 0;
  std::sort(content.begin(), content.end(), std::greater<>());
  while (!content.empty() && content.back() == 0) content.pop_back();
  const std::vector<Int> shape = strip_zeros(lambda).entries();
  Int total = 0;
  for (Int c : content) total += c;
  if (total != lambda.total()) return 0;

  static std::mutex mtx;
  static std::map<std::pair<std::vector<Int>, std::vector<Int>>, BigInt> memo;
  auto rec = [&](auto&& self, const std::vector<Int>& sh, std::size_t k) -> BigInt {
    if (k == 0) return sh.empty() ? 1 : 0;
    if (sh.size() > k) return 0;
    std::vector<Int> key_content(content.begin(), content.begin() + static_cast<std::ptrdiff_t>(k));
    {
      std::lock_guard<std::mutex> g(mtx);
      auto it = memo.find({sh, key_content});
      if (it != memo.end()) return it->second;
    }
    const Int strip = content[k - 1];
    BigInt acc = 0;
    std::vector<Int> inner(sh.size());
    // Remove a horizontal strip: sh[i+1] <= inner[i] <= sh[i].
    auto strips = [&](auto&& go, std::size_t i, Int left) -> void {
      if (i == sh.size()) {
        if (left) return;
        std::vector<Int> t = inner;
        while (!t.empty() && t.back() == 0) t.pop_back();
        acc += self(self, t, k - 1);
        return;
      }
      const Int lo = i + 1 < sh.size() ? sh[i + 1] : 0;
      for (Int v = sh[i]; v >= lo && sh[i] - v <= left; --v) {
        inner[i] = v;
        go(go, i + 1, left - (sh[i] - v));
      }
    };
    strips(strips, 0, strip);
    std::lock_guard<std::mutex> g(mtx);
    memo[{sh, key_content}] = acc;
    return acc;
  };
  return rec(rec, shape, content.size());
}

// Multiplicity of the weight mu (any order, possibly negative entries) in the decomposition.
inline BigInt weight_multiplicity(const SchurDecomposition& d, const Weight& mu) {
  BigInt s = 0;
  const std::size_t n = mu.size();
  for (const auto& t : d.terms) {
    const Weight l = pad(t.weight, n);
    const Int shift = n ? std::min<Int>(l[n - 1], 0) : 0;
    s += BigInt(static_cast<long>(t.multiplicity)) * kostka(add_constant(l, -shift), add_constant(mu, -shift));
  }
  return s;
}

}  // namespace bottcalc
