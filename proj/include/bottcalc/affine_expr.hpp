#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "weights.hpp"

namespace bottcalc {

// c_m*m + c_n*n + c_r*r + c0
struct LinearForm {
  Int cm = 0, cn = 0, cr = 0, c0 = 0;

  LinearForm& operator+=(const LinearForm& o) {
    cm += o.cm; cn += o.cn; cr += o.cr; c0 += o.c0;
    return *this;
  }
  LinearForm scaled(Int k) const { return {cm * k, cn * k, cr * k, c0 * k}; }
  // Coefficient of m and the constant part once n and r are fixed.
  std::pair<Int, Int> at(Int n, Int r) const { return {cm, cn * n + cr * r + c0}; }
};

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) {
    for (char c : s)
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
  }

  LinearForm parse_all() {
    LinearForm f = expr();
    if (i_ != s_.size()) fail("unexpected character");
    return f;
  }

  LinearForm expr() {
    LinearForm f = term();
    while (i_ < s_.size() && (s_[i_] == '+' || s_[i_] == '-')) {
      const bool neg = s_[i_++] == '-';
      LinearForm t = term();
      f += neg ? t.scaled(-1) : t;
    }
    return f;
  }

  bool at_end() const { return i_ >= s_.size(); }
  char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
  void advance(std::size_t k = 1) { i_ += k; }
  const std::string& text() const { return s_; }
  std::size_t pos() const { return i_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error("expression '" + s_ + "': " + what, i_);
  }

 private:
  LinearForm term() {
    Int sign = 1;
    if (peek() == '-') {
      sign = -1;
      advance();
    }
    bool have_coef = false;
    Int coef = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = coef * 10 + (peek() - '0');
      have_coef = true;
      advance();
    }
    LinearForm atom;
    bool have_atom = true;
    switch (peek()) {
      case 'm': atom.cm = 1; advance(); break;
      case 'n': atom.cn = 1; advance(); break;
      case 'r': atom.cr = 1; advance(); break;
      case '(': {
        advance();
        atom = expr();
        if (peek() != ')') fail("expected ')'");
        advance();
        break;
      }
      default: have_atom = false;
    }
    if (!have_coef && !have_atom) fail("expected term");
    if (!have_atom) return LinearForm{0, 0, 0, sign * coef};
    return atom.scaled(sign * (have_coef ? coef : 1));
  }

  std::string s_;
  std::size_t i_ = 0;
};

}  // namespace detail

inline LinearForm parse_linear(std::string_view s) { return detail::ExprParser(s).parse_all(); }

// Conjunction of chained comparisons, e.g. "1<r=n-1" or "r>=n-1,n>4".
inline bool case_holds(std::string_view label, Int n, Int r) {
  std::size_t start = 0;
  while (start <= label.size()) {
    std::size_t comma = label.find(',', start);
    if (comma == std::string_view::npos) comma = label.size();
    const std::string_view part = label.substr(start, comma - start);
    std::vector<std::string> operands, ops;
    std::string cur;
    for (std::size_t i = 0; i < part.size(); ++i) {
      const char c = part[i];
      if (c == '<' || c == '>' || c == '=') {
        std::string op(1, c);
        if (c != '=' && i + 1 < part.size() && part[i + 1] == '=') {
          op += '=';
          ++i;
        }
        operands.push_back(cur);
        ops.push_back(op);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    operands.push_back(cur);
    if (ops.empty()) throw parse_error("case label '" + std::string(part) + "' has no comparison", start);
    for (std::size_t k = 0; k < ops.size(); ++k) {
      const auto [am, a] = parse_linear(operands[k]).at(n, r);
      const auto [bm, b] = parse_linear(operands[k + 1]).at(n, r);
      if (am || bm) throw parse_error("case label may not mention m", start);
      const std::string& op = ops[k];
      const bool ok = op == "<" ? a < b : op == "<=" ? a <= b : op == ">" ? a > b : op == ">=" ? a >= b : a == b;
      if (!ok) return false;
    }
    start = comma + 1;
  }
  return true;
}

}  // namespace bottcalc
