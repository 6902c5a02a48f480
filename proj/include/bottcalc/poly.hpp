#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "weights.hpp"

namespace bottcalc {

// Polynomials in the entries x_{ij} (0 <= i < n, 0 <= j < r) of a generic n x r matrix.
// Variable x_{ij} has index i*r + j; monomials are exponent arrays ordered lexicographically.
inline constexpr std::size_t max_variables = 32;

struct Mono {
  std::array<std::uint8_t, max_variables> e{};

  friend bool operator==(const Mono&, const Mono&) = default;
  friend auto operator<=>(const Mono&, const Mono&) = default;

  unsigned degree() const {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
  }
  Mono times(const Mono& o) const {
    Mono m;
    for (std::size_t i = 0; i < max_variables; ++i) {
      const unsigned s = e[i] + o.e[i];
      if (s > 255) throw std::overflow_error("monomial exponent overflow");
      m.e[i] = static_cast<std::uint8_t>(s);
    }
    return m;
  }
};

class MatrixRing {
 public:
  MatrixRing(std::size_t n, std::size_t r) : n_(n), r_(r) {
    if (r < 1 || n < 1) throw std::invalid_argument("matrix ring needs n, r >= 1");
    if (n * r > max_variables) throw std::invalid_argument("matrix ring: n*r exceeds " + std::to_string(max_variables));
  }
  std::size_t n() const { return n_; }
  std::size_t r() const { return r_; }
  std::size_t nvars() const { return n_ * r_; }
  std::size_t var(std::size_t i, std::size_t j) const { return i * r_ + j; }
  std::size_t row_of(std::size_t v) const { return v / r_; }
  std::size_t col_of(std::size_t v) const { return v % r_; }

  // GL(E)-weight: exponent sums along rows.
  std::vector<Int> row_weight(const Mono& m) const {
    std::vector<Int> w(n_, 0);
    for (std::size_t v = 0; v < nvars(); ++v) w[row_of(v)] += m.e[v];
    return w;
  }
  // GL(W)-weight: exponent sums along columns.
  std::vector<Int> col_weight(const Mono& m) const {
    std::vector<Int> w(r_, 0);
    for (std::size_t v = 0; v < nvars(); ++v) w[col_of(v)] += m.e[v];
    return w;
  }

  std::string render(const Mono& m) const {
    std::string out;
    for (std::size_t v = 0; v < nvars(); ++v) {
      if (!m.e[v]) continue;
      if (!out.empty()) out += '*';
      out += "x" + std::to_string(row_of(v) + 1) + std::to_string(col_of(v) + 1);
      if (m.e[v] > 1) out += "^" + std::to_string(m.e[v]);
    }
    return out.empty() ? "1" : out;
  }

  // All monomials with prescribed row sums and column sums (contingency tables).
  std::vector<Mono> monomials(const std::vector<Int>& rows, const std::vector<Int>& cols) const {
    std::vector<Mono> out;
    if (rows.size() != n_ || cols.size() != r_) throw invalid_size("monomials: weight length mismatch");
    Int total = 0, total2 = 0;
    for (Int x : rows) {
      if (x < 0) return out;
      total += x;
    }
    for (Int x : cols) {
      if (x < 0) return out;
      total2 += x;
    }
    if (total != total2) return out;
    std::vector<Int> colrem = cols;
    Mono cur;
    fill_row(0, rows, colrem, cur, out);
    return out;
  }

 private:
  void fill_row(std::size_t i, const std::vector<Int>& rows, std::vector<Int>& colrem, Mono& cur,
                std::vector<Mono>& out) const {
    if (i == n_) {
      out.push_back(cur);
      return;
    }
    fill_cell(i, 0, rows[i], rows, colrem, cur, out);
  }
  void fill_cell(std::size_t i, std::size_t j, Int left, const std::vector<Int>& rows, std::vector<Int>& colrem,
                 Mono& cur, std::vector<Mono>& out) const {
    if (j + 1 == r_) {
      if (left > colrem[j] || left > 255) return;
      cur.e[var(i, j)] = static_cast<std::uint8_t>(left);
      colrem[j] -= left;
      fill_row(i + 1, rows, colrem, cur, out);
      colrem[j] += left;
      cur.e[var(i, j)] = 0;
      return;
    }
    for (Int k = std::min(left, colrem[j]); k >= 0; --k) {
      cur.e[var(i, j)] = static_cast<std::uint8_t>(k);
      colrem[j] -= k;
      fill_cell(i, j + 1, left - k, rows, colrem, cur, out);
      colrem[j] += k;
    }
    cur.e[var(i, j)] = 0;
  }

  std::size_t n_, r_;
};

// Canonical form: no zero coefficients.
class Poly {
 public:
  using Terms = std::map<Mono, mpq_class>;

  Poly() = default;
  static Poly constant(const mpq_class& c) {
    Poly p;
    if (c != 0) p.t_[Mono{}] = c;
    return p;
  }
  static Poly variable(std::size_t v) {
    Mono m;
    m.e[v] = 1;
    Poly p;
    p.t_[m] = 1;
    return p;
  }
  static Poly monomial(const Mono& m, const mpq_class& c = 1) {
    Poly p;
    if (c != 0) p.t_[m] = c;
    return p;
  }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }

  void add_term(const Mono& m, const mpq_class& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  Poly scaled(const mpq_class& k) const {
    Poly p;
    if (k == 0) return p;
    for (const auto& [m, c] : t_) p.t_.emplace_hint(p.t_.end(), m, c * k);
    return p;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly p;
    for (const auto& [ma, ca] : a.t_)
      for (const auto& [mb, cb] : b.t_) p.add_term(ma.times(mb), ca * cb);
    return p;
  }

  Poly derivative(std::size_t v) const {
    Poly p;
    for (const auto& [m, c] : t_) {
      if (!m.e[v]) continue;
      Mono d = m;
      --d.e[v];
      p.add_term(d, c * static_cast<unsigned long>(m.e[v]));
    }
    return p;
  }

  Poly times_variable(std::size_t v) const {
    Mono x;
    x.e[v] = 1;
    Poly p;
    for (const auto& [m, c] : t_) p.t_.emplace(m.times(x), c);
    return p;
  }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  Terms t_;
};

inline Poly power(const Poly& p, unsigned k) {
  Poly out = Poly::constant(1);
  for (unsigned i = 0; i < k; ++i) out = out * p;
  return out;
}

// Determinant of a square matrix of polynomials by Laplace expansion along the first row.
inline Poly determinant(const std::vector<std::vector<Poly>>& M) {
  const std::size_t k = M.size();
  if (k == 0) return Poly::constant(1);
  if (k == 1) return M[0][0];
  Poly out;
  for (std::size_t j = 0; j < k; ++j) {
    if (M[0][j].is_zero()) continue;
    std::vector<std::vector<Poly>> sub;
    for (std::size_t i = 1; i < k; ++i) {
      std::vector<Poly> row;
      for (std::size_t c = 0; c < k; ++c)
        if (c != j) row.push_back(M[i][c]);
      sub.push_back(std::move(row));
    }
    Poly t = M[0][j] * determinant(sub);
    if (j % 2) out -= t;
    else out += t;
  }
  return out;
}

// Maximal minor on the given (increasing) rows.
inline Poly maximal_minor(const MatrixRing& R, const std::vector<std::size_t>& rows) {
  if (rows.size() != R.r()) throw invalid_size("maximal_minor: need r rows");
  std::vector<std::vector<Poly>> M(R.r(), std::vector<Poly>(R.r()));
  for (std::size_t a = 0; a < R.r(); ++a)
    for (std::size_t b = 0; b < R.r(); ++b) M[a][b] = Poly::variable(R.var(rows[a], b));
  return determinant(M);
}

// Increasing k-subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  while (true) {
    out.push_back(s);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

}  // namespace bottcalc
