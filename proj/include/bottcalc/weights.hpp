#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bottcalc {

using Int = std::int64_t;

struct invalid_size : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct parse_error : std::invalid_argument {
  std::size_t position;
  parse_error(const std::string& msg, std::size_t pos)
      : std::invalid_argument(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// Fixed-length integer tuple. Trailing zeros are significant.
class Weight {
 public:
  Weight() = default;
  Weight(std::initializer_list<Int> v) : e_(v) {}
  explicit Weight(std::vector<Int> v) : e_(std::move(v)) {}
  static Weight constant(std::size_t n, Int v) { return Weight(std::vector<Int>(n, v)); }

  std::size_t size() const { return e_.size(); }
  bool empty() const { return e_.empty(); }
  Int operator[](std::size_t i) const { return e_[i]; }
  Int& operator[](std::size_t i) { return e_[i]; }
  const std::vector<Int>& entries() const { return e_; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }

  bool dominant() const {
    for (std::size_t i = 1; i < e_.size(); ++i)
      if (e_[i - 1] < e_[i]) return false;
    return true;
  }
  bool is_partition() const { return dominant() && (e_.empty() || e_.back() >= 0); }
  Int total() const {
    Int s = 0;
    for (Int x : e_) s += x;
    return s;
  }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

 private:
  std::vector<Int> e_;
};

struct SortResult {
  Weight sorted;
  Int swaps = 0;
  bool has_repeats = false;
};

inline Weight staircase(std::size_t n) {
  if (n == 0) throw invalid_size("staircase: n must be positive");
  std::vector<Int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Int>(n - 1 - i);
  return Weight(std::move(v));
}

// Stable insertion sort into non-increasing order; each adjacent swap is one inversion.
inline SortResult sort_with_inversions(const Weight& w) {
  std::vector<Int> v = w.entries();
  SortResult out;
  for (std::size_t i = 1; i < v.size(); ++i)
    for (std::size_t j = i; j > 0 && v[j - 1] < v[j]; --j) {
      std::swap(v[j - 1], v[j]);
      ++out.swaps;
    }
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] == v[i]) out.has_repeats = true;
  out.sorted = Weight(std::move(v));
  return out;
}

inline Weight add(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw invalid_size("add: length mismatch");
  std::vector<Int> v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i] + b[i];
  return Weight(std::move(v));
}

inline Weight subtract(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw invalid_size("subtract: length mismatch");
  std::vector<Int> v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i] - b[i];
  return Weight(std::move(v));
}

inline Weight concat(const Weight& a, const Weight& b) {
  std::vector<Int> v = a.entries();
  v.insert(v.end(), b.begin(), b.end());
  return Weight(std::move(v));
}

// Weight of the dual representation.
inline Weight negate_reverse(const Weight& w) {
  std::vector<Int> v(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) v[i] = -w[w.size() - 1 - i];
  return Weight(std::move(v));
}

inline Weight add_constant(const Weight& w, Int c) {
  std::vector<Int> v = w.entries();
  for (Int& x : v) x += c;
  return Weight(std::move(v));
}

// Twist by a determinant power so that the last entry is zero.
inline Weight sl_normalize(const Weight& w) {
  if (w.empty()) return w;
  return add_constant(w, -w[w.size() - 1]);
}

inline Weight pad(const Weight& w, std::size_t n, Int fill = 0) {
  if (w.size() > n) throw invalid_size("pad: weight longer than target length");
  std::vector<Int> v = w.entries();
  v.resize(n, fill);
  return Weight(std::move(v));
}

// Returns nullopt for singular gamma.
inline std::optional<SortResult> bott_sort(const Weight& gamma) {
  const Weight d = staircase(gamma.size());
  SortResult s = sort_with_inversions(add(gamma, d));
  if (s.has_repeats) return std::nullopt;
  s.sorted = subtract(s.sorted, d);
  return s;
}

inline std::optional<Weight> tilde(const Weight& gamma, std::size_t n) {
  if (gamma.size() != n) throw invalid_size("tilde: length of gamma differs from n");
  auto s = bott_sort(gamma);
  if (!s) return std::nullopt;
  return s->sorted;
}

// Exponent notation: comma-separated terms `v` or `v^k`, whitespace ignored.
inline Weight parse_weight(std::string_view text) {
  std::string s;
  std::vector<std::size_t> origin;
  for (std::size_t i = 0; i < text.size(); ++i)
    if (!std::isspace(static_cast<unsigned char>(text[i]))) {
      s.push_back(text[i]);
      origin.push_back(i);
    }
  auto at = [&](std::size_t i) { return i < origin.size() ? origin[i] : text.size(); };
  std::vector<Int> out;
  if (s.empty() || s == "()") return Weight();
  std::size_t i = 0;
  if (s.front() == '(' && s.back() == ')') {
    s = s.substr(1, s.size() - 2);
    origin.erase(origin.begin());
    origin.pop_back();
  }
  auto number = [&](bool allow_sign) -> Int {
    std::size_t start = i;
    bool neg = false;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) {
      neg = s[i] == '-';
      ++i;
    }
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw parse_error("expected integer", at(i));
    Int v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      if (v > (Int{1} << 50)) throw parse_error("integer too large", at(start));
      v = v * 10 + (s[i] - '0');
      ++i;
    }
    return neg ? -v : v;
  };
  while (true) {
    Int v = number(true);
    Int k = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      std::size_t kpos = i;
      k = number(false);
      if (k > 4096) throw parse_error("exponent too large", at(kpos));
    }
    out.insert(out.end(), static_cast<std::size_t>(k), v);
    if (i == s.size()) break;
    if (s[i] != ',') throw parse_error("expected ',' or '^'", at(i));
    ++i;
  }
  return Weight(std::move(out));
}

inline std::string render_weight(const Weight& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += ',';
    out += std::to_string(w[i]);
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

// Partition display: trailing zeros dropped.
inline std::string render_partition(const Weight& w) {
  std::vector<Int> v = w.entries();
  while (!v.empty() && v.back() == 0) v.pop_back();
  return "(" + render_weight(Weight(std::move(v))) + ")";
}

}  // namespace bottcalc
