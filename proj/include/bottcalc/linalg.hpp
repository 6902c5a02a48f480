#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bottcalc {

// Sparse vector: strictly increasing indices, nonzero entries.
template <class T>
using SparseVec = std::vector<std::pair<std::size_t, T>>;

using QVec = SparseVec<mpq_class>;

namespace detail {

// a - c*b
template <class T, class Sub>
SparseVec<T> axpy(const SparseVec<T>& a, const T& c, const SparseVec<T>& b, Sub sub) {
  SparseVec<T> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      T v = sub(T(0), c, b[j].second);
      if (v != T(0)) out.emplace_back(b[j].first, std::move(v));
      ++j;
    } else {
      T v = sub(a[i].second, c, b[j].second);
      if (v != T(0)) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

inline mpq_class q_sub(const mpq_class& a, const mpq_class& c, const mpq_class& b) { return a - c * b; }

}  // namespace detail

// Incremental row echelon form over Q. Each inserted vector is reduced against stored rows;
// with tracking enabled, dependent insertions yield kernel vectors in input coordinates.
class QEchelon {
 public:
  explicit QEchelon(bool track = false) : track_(track) {}

  // True when v is independent of everything inserted so far.
  bool insert(QVec v) {
    QVec combo;
    if (track_) combo.emplace_back(count_, mpq_class(1));
    ++count_;
    while (!v.empty()) {
      auto it = rows_.find(v.front().first);
      if (it == rows_.end()) {
        const mpq_class lead = v.front().second;
        for (auto& [k, x] : v) x /= lead;
        for (auto& [k, x] : combo) x /= lead;
        const std::size_t pivot = v.front().first;
        rows_.emplace(pivot, Row{std::move(v), std::move(combo)});
        return true;
      }
      const mpq_class c = v.front().second;
      v = detail::axpy(v, c, it->second.vec, detail::q_sub);
      if (track_) combo = detail::axpy(combo, c, it->second.combo, detail::q_sub);
    }
    if (track_) kernel_.push_back(std::move(combo));
    return false;
  }

  // Reduction of v modulo the stored rows; empty iff v lies in their span.
  QVec reduce(QVec v) const {
    std::size_t pos = 0;
    while (pos < v.size()) {
      auto it = rows_.find(v[pos].first);
      if (it == rows_.end()) {
        ++pos;
        continue;
      }
      const mpq_class c = v[pos].second;
      QVec head(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(pos));
      QVec tail(v.begin() + static_cast<std::ptrdiff_t>(pos), v.end());
      tail = detail::axpy(tail, c, it->second.vec, detail::q_sub);
      head.insert(head.end(), tail.begin(), tail.end());
      v = std::move(head);
    }
    return v;
  }

  bool contains(const QVec& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted() const { return count_; }
  const std::vector<QVec>& kernel() const { return kernel_; }

 private:
  struct Row {
    QVec vec;
    QVec combo;
  };
  bool track_;
  std::size_t count_ = 0;
  std::map<std::size_t, Row> rows_;
  std::vector<QVec> kernel_;
};

inline std::size_t rank_rational(const std::vector<QVec>& vectors) {
  QEchelon e;
  for (const QVec& v : vectors) e.insert(v);
  return e.rank();
}

namespace detail {

struct int_overflow {};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw int_overflow{};
  return r;
}
inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw int_overflow{};
  return r;
}

inline void make_primitive(SparseVec<std::int64_t>& v) {
  std::int64_t g = 0;
  for (const auto& [k, x] : v) g = std::gcd(g, x);
  if (g > 1)
    for (auto& [k, x] : v) x /= g;
}

}  // namespace detail

// Exact rank by fraction-free elimination on primitive int64 rows; nullopt on overflow.
inline std::optional<std::size_t> rank_int64(const std::vector<QVec>& vectors) {
  using IVec = SparseVec<std::int64_t>;
  try {
    std::map<std::size_t, IVec> rows;
    for (const QVec& q : vectors) {
      mpz_class l = 1;
      for (const auto& [k, x] : q) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
      IVec v;
      v.reserve(q.size());
      for (const auto& [k, x] : q) {
        const mpz_class t = x.get_num() * (l / x.get_den());
        if (!t.fits_slong_p()) return std::nullopt;
        v.emplace_back(k, t.get_si());
      }
      detail::make_primitive(v);
      while (!v.empty()) {
        auto it = rows.find(v.front().first);
        if (it == rows.end()) {
          const std::size_t pivot = v.front().first;
          rows.emplace(pivot, std::move(v));
          break;
        }
        const IVec& row = it->second;
        std::int64_t a = row.front().second, b = v.front().second;
        const std::int64_t g = std::gcd(a, b);
        a /= g;
        b /= g;
        // v <- a v - b row
        IVec out;
        out.reserve(v.size() + row.size());
        std::size_t i = 0, j = 0;
        while (i < v.size() || j < row.size()) {
          if (j == row.size() || (i < v.size() && v[i].first < row[j].first)) {
            out.emplace_back(v[i].first, detail::checked_mul(a, v[i].second));
            ++i;
          } else if (i == v.size() || row[j].first < v[i].first) {
            out.emplace_back(row[j].first, detail::checked_sub(0, detail::checked_mul(b, row[j].second)));
            ++j;
          } else {
            const std::int64_t t = detail::checked_sub(detail::checked_mul(a, v[i].second), detail::checked_mul(b, row[j].second));
            if (t) out.emplace_back(v[i].first, t);
            ++i;
            ++j;
          }
        }
        detail::make_primitive(out);
        v = std::move(out);
      }
    }
    return rows.size();
  } catch (const detail::int_overflow&) {
    return std::nullopt;
  }
}

// Exact rank: int64 fraction-free elimination, rational elimination if that overflows.
inline std::size_t rank_of(const std::vector<QVec>& vectors) {
  if (auto r = rank_int64(vectors)) return *r;
  return rank_rational(vectors);
}

// Basis of {c : sum_i c_i v_i = 0}.
inline std::vector<QVec> kernel_of(const std::vector<QVec>& vectors) {
  QEchelon e(true);
  for (const QVec& v : vectors) e.insert(v);
  return e.kernel();
}

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1) r = mulmod(r, a, p);
  return r;
}

inline std::optional<std::uint64_t> reduce_mod(const mpq_class& q, std::uint64_t p) {
  const mpz_class P(static_cast<unsigned long>(p));
  mpz_class num = q.get_num() % P, den = q.get_den() % P;
  if (num < 0) num += P;
  if (den == 0) return std::nullopt;
  return mulmod(num.get_ui(), powmod(den.get_ui(), p - 2, p), p);
}

}  // namespace detail

// Rank over F_p, or nullopt when a denominator vanishes mod p.
inline std::optional<std::size_t> rank_mod(const std::vector<QVec>& vectors, std::uint64_t p) {
  using MVec = SparseVec<std::uint64_t>;
  auto sub = [p](std::uint64_t a, std::uint64_t c, std::uint64_t b) {
    const std::uint64_t t = detail::mulmod(c, b, p);
    return a >= t ? a - t : a + p - t;
  };
  std::map<std::size_t, MVec> rows;
  for (const QVec& q : vectors) {
    MVec v;
    for (const auto& [k, x] : q) {
      auto m = detail::reduce_mod(x, p);
      if (!m) return std::nullopt;
      if (*m) v.emplace_back(k, *m);
    }
    while (!v.empty()) {
      auto it = rows.find(v.front().first);
      if (it == rows.end()) {
        const std::uint64_t inv = detail::powmod(v.front().second, p - 2, p);
        for (auto& [k, x] : v) x = detail::mulmod(x, inv, p);
        const std::size_t pivot = v.front().first;
        rows.emplace(pivot, std::move(v));
        break;
      }
      v = detail::axpy(v, v.front().second, it->second, sub);
    }
  }
  return rows.size();
}

inline constexpr std::uint64_t modular_primes[2] = {4294967291ULL, 4294967279ULL};

struct RankResult {
  std::size_t rank = 0;
  bool exact = true;  // false: two modular ranks agreed and exact elimination was skipped
};

// Exact rank, or with `modular` the agreed rank modulo two primes (exact on disagreement).
inline RankResult certified_rank(const std::vector<QVec>& vectors, bool modular) {
  if (modular) {
    auto a = rank_mod(vectors, modular_primes[0]);
    auto b = rank_mod(vectors, modular_primes[1]);
    if (a && b && *a == *b) return {*a, false};
  }
  return {rank_of(vectors), true};
}

}  // namespace bottcalc
