#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "weights.hpp"

namespace bottcalc {

enum class RootType { A, B, C, D };

// alpha(gamma) = sum c_i g_i (c: simple-root coefficients, g: fundamental-weight coordinates),
// or the coroot pairing <gamma, alpha^vee>. The two agree for A and D.
enum class Pairing { linear, coroot };

inline char type_letter(RootType t) { return "ABCD"[static_cast<int>(t)]; }

inline RootType parse_root_type(char c) {
  switch (c) {
    case 'A': case 'a': return RootType::A;
    case 'B': case 'b': return RootType::B;
    case 'C': case 'c': return RootType::C;
    case 'D': case 'd': return RootType::D;
  }
  throw std::invalid_argument(std::string("unknown root type '") + c + "'");
}

using Root = std::vector<Int>;  // simple-root coordinates

// Value a*m + b of a pairing that depends affinely on the twist m.
struct Affine {
  Int a = 0, b = 0;
  Int at(Int m) const { return a * m + b; }
  friend bool operator==(const Affine&, const Affine&) = default;
  friend auto operator<=>(const Affine&, const Affine&) = default;
};

inline std::string render_affine(const Affine& v) {
  std::string out;
  if (v.a != 0) out = (v.a == 1 ? "" : v.a == -1 ? "-" : std::to_string(v.a)) + "m";
  if (v.b != 0 || out.empty()) {
    if (!out.empty() && v.b > 0) out += "+";
    out += std::to_string(v.b);
  }
  return out;
}

class RootSystem {
 public:
  RootSystem(RootType t, std::size_t rank) : type_(t), rank_(rank) {
    const std::size_t min_rank = (t == RootType::A) ? 1 : 2;
    if (rank < min_rank || rank > 24) throw std::invalid_argument("unsupported rank for root system");
    build();
  }

  RootType type() const { return type_; }
  std::size_t rank() const { return rank_; }
  std::size_t ambient_dim() const { return type_ == RootType::A ? rank_ + 1 : rank_; }
  std::string name() const { return std::string(1, type_letter(type_)) + std::to_string(rank_); }

  // Ascending lexicographic order on simple-root coordinates.
  const std::vector<Root>& positive_roots() const { return roots_; }
  const std::vector<std::vector<Int>>& positive_roots_eps() const { return roots_eps_; }
  const std::vector<std::vector<Int>>& simple_roots_eps() const { return simple_eps_; }

  std::vector<Root> roots_through(std::size_t r) const {
    check_index(r);
    std::vector<Root> out;
    for (const Root& a : roots_)
      if (a[r - 1] != 0) out.push_back(a);
    return out;
  }

  bool is_positive_root(const Root& a) const {
    for (const Root& b : roots_)
      if (b == a) return true;
    return false;
  }

  // Coefficient of alpha_i^vee in alpha^vee.
  std::vector<Int> coroot_coeffs(const Root& a) const {
    const Int len = norm2(eps_of(a));
    std::vector<Int> d(rank_);
    for (std::size_t i = 0; i < rank_; ++i) {
      const Int num = a[i] * norm2(simple_eps_[i]);
      if (num % len) throw std::logic_error("non-integral coroot coefficient");
      d[i] = num / len;
    }
    return d;
  }

  Int pairing(const Root& a, const std::vector<Int>& g, Pairing p = Pairing::linear) const {
    check_weight(g);
    if (!is_positive_root(a)) throw std::invalid_argument("pairing: not a positive root of " + name());
    const std::vector<Int> c = (p == Pairing::linear) ? a : coroot_coeffs(a);
    Int s = 0;
    for (std::size_t i = 0; i < rank_; ++i) s += c[i] * g[i];
    return s;
  }

  Affine pairing(const Root& a, const std::vector<Int>& base, const std::vector<Int>& slope,
                 Pairing p = Pairing::linear) const {
    return {pairing(a, slope, p), pairing(a, base, p)};
  }

  // nullopt when some positive root pairs to zero.
  std::optional<Int> index(const std::vector<Int>& g, Pairing p = Pairing::linear) const {
    Int neg = 0;
    for (const Root& a : roots_) {
      const Int v = pairing(a, g, p);
      if (v == 0) return std::nullopt;
      if (v < 0) ++neg;
    }
    return neg;
  }

  mpz_class weyl_dimension(const std::vector<Int>& lambda) const {
    check_weight(lambda);
    for (Int x : lambda)
      if (x < 0) throw std::invalid_argument("weyl_dimension: weight is not dominant");
    mpq_class q = 1;
    for (const Root& a : roots_) {
      const std::vector<Int> d = coroot_coeffs(a);
      Int num = 0, den = 0;
      for (std::size_t i = 0; i < rank_; ++i) {
        num += d[i] * (lambda[i] + 1);
        den += d[i];
      }
      q *= mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    }
    q.canonicalize();
    if (q.get_den() != 1) throw std::logic_error("weyl_dimension: non-integral result");
    return q.get_num();
  }

  std::size_t expected_root_count() const {
    switch (type_) {
      case RootType::A: return rank_ * (rank_ + 1) / 2;
      case RootType::B:
      case RootType::C: return rank_ * rank_;
      case RootType::D: return rank_ * (rank_ - 1);
    }
    return 0;
  }

  std::vector<Int> eps_of(const Root& a) const {
    std::vector<Int> v(ambient_dim(), 0);
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t k = 0; k < v.size(); ++k) v[k] += a[i] * simple_eps_[i][k];
    return v;
  }

 private:
  static Int norm2(const std::vector<Int>& v) {
    Int s = 0;
    for (Int x : v) s += x * x;
    return s;
  }

  void check_index(std::size_t r) const {
    if (r < 1 || r > rank_) throw std::out_of_range("node index out of range for " + name());
  }
  void check_weight(const std::vector<Int>& g) const {
    if (g.size() != rank_) throw invalid_size("weight length differs from rank of " + name());
  }

  void build() {
    const std::size_t N = ambient_dim();
    auto unit = [&](std::size_t i, Int s, std::size_t j, Int t) {
      std::vector<Int> v(N, 0);
      v[i] += s;
      if (t) v[j] += t;
      return v;
    };
    const std::size_t n = rank_;
    for (std::size_t i = 0; i + 1 < (type_ == RootType::A ? n + 1 : n); ++i) simple_eps_.push_back(unit(i, 1, i + 1, -1));
    if (type_ == RootType::B) simple_eps_.push_back(unit(n - 1, 1, 0, 0));
    if (type_ == RootType::C) simple_eps_.push_back(unit(n - 1, 2, 0, 0));
    if (type_ == RootType::D) simple_eps_.push_back(unit(n - 2, 1, n - 1, 1));

    std::vector<std::vector<Int>> eps;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = i + 1; j < N; ++j) {
        eps.push_back(unit(i, 1, j, -1));
        if (type_ != RootType::A) eps.push_back(unit(i, 1, j, 1));
      }
    if (type_ == RootType::B)
      for (std::size_t i = 0; i < N; ++i) eps.push_back(unit(i, 1, 0, 0));
    if (type_ == RootType::C)
      for (std::size_t i = 0; i < N; ++i) eps.push_back(unit(i, 2, 0, 0));

    for (const auto& e : eps) roots_.push_back(solve(e));
    std::sort(roots_.begin(), roots_.end());
    for (const Root& a : roots_) {
      for (Int c : a)
        if (c < 0) throw std::logic_error("root with negative simple coordinate");
      roots_eps_.push_back(eps_of(a));
    }
  }

  // Exact solve of sum_i c_i simple_i = e (least squares is exact since e is in the span).
  Root solve(const std::vector<Int>& e) const {
    const std::size_t n = rank_, N = ambient_dim();
    std::vector<std::vector<mpq_class>> M(n, std::vector<mpq_class>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Int s = 0;
        for (std::size_t k = 0; k < N; ++k) s += simple_eps_[i][k] * simple_eps_[j][k];
        M[i][j] = static_cast<long>(s);
      }
      Int s = 0;
      for (std::size_t k = 0; k < N; ++k) s += simple_eps_[i][k] * e[k];
      M[i][n] = static_cast<long>(s);
    }
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (M[p][c] == 0) ++p;
      std::swap(M[p], M[c]);
      for (std::size_t i = 0; i < n; ++i) {
        if (i == c || M[i][c] == 0) continue;
        const mpq_class f = M[i][c] / M[c][c];
        for (std::size_t j = c; j <= n; ++j) M[i][j] -= f * M[c][j];
      }
    }
    Root out(n);
    for (std::size_t i = 0; i < n; ++i) {
      mpq_class v = M[i][n] / M[i][i];
      v.canonicalize();
      if (v.get_den() != 1) throw std::logic_error("root not in the integral span of simple roots");
      out[i] = v.get_num().get_si();
    }
    return out;
  }

  RootType type_;
  std::size_t rank_;
  std::vector<std::vector<Int>> simple_eps_;
  std::vector<Root> roots_;
  std::vector<std::vector<Int>> roots_eps_;
};

inline std::string render_root(const Root& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (a[i] != 1) out += std::to_string(a[i]);
    out += 'a' + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

}  // namespace bottcalc
