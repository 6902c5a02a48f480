#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "bottcalc/schur.hpp"
#include "bottcalc/weights.hpp"

using namespace bottcalc;

namespace {

Int brute_inversions(const std::vector<Int>& v) {
  Int k = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) k += v[i] < v[j];
  return k;
}

// Semistandard tableaux of shape lambda with entries in 1..n, visited cell by cell.
void ssyt_walk(const std::vector<Int>& shape, Int n, std::vector<std::vector<Int>>& t, std::size_t row, std::size_t col,
               const std::function<void(const std::vector<std::vector<Int>>&)>& visit) {
  if (row == shape.size()) {
    visit(t);
    return;
  }
  if (col == static_cast<std::size_t>(shape[row])) {
    ssyt_walk(shape, n, t, row + 1, 0, visit);
    return;
  }
  Int lo = 1;
  if (col > 0) lo = std::max(lo, t[row][col - 1]);
  if (row > 0) lo = std::max(lo, t[row - 1][col] + 1);
  for (Int v = lo; v <= n; ++v) {
    t[row][col] = v;
    ssyt_walk(shape, n, t, row, col + 1, visit);
  }
}

std::map<std::vector<Int>, Int> schur_polynomial(const Weight& lambda, Int n) {
  std::vector<Int> shape = strip_zeros(lambda).entries();
  std::vector<std::vector<Int>> t;
  for (Int len : shape) t.emplace_back(len, 0);
  std::map<std::vector<Int>, Int> poly;
  ssyt_walk(shape, n, t, 0, 0, [&](const std::vector<std::vector<Int>>& tab) {
    std::vector<Int> e(n, 0);
    for (const auto& r : tab)
      for (Int v : r) ++e[v - 1];
    ++poly[e];
  });
  return poly;
}

std::map<std::vector<Int>, Int> multiply(const std::map<std::vector<Int>, Int>& a, const std::map<std::vector<Int>, Int>& b) {
  std::map<std::vector<Int>, Int> out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<Int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  return out;
}

// Peels off the Schur polynomial of the largest dominant exponent until nothing is left.
std::map<std::vector<Int>, Int> schur_expand(std::map<std::vector<Int>, Int> p, Int n) {
  std::map<std::vector<Int>, Int> out;
  while (true) {
    for (auto it = p.begin(); it != p.end();)
      it = it->second == 0 ? p.erase(it) : std::next(it);
    if (p.empty()) break;
    std::vector<Int> lead;
    for (const auto& [e, c] : p)
      if (std::is_sorted(e.rbegin(), e.rend()) && (lead.empty() || e > lead)) lead = e;
    const Int c = p[lead];
    out[lead] += c;
    for (const auto& [e, k] : schur_polynomial(Weight(lead), n)) p[e] -= c * k;
  }
  return out;
}

Int binomial(Int n, Int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (Int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(Weights, ParseRenderRoundTrip) {
  EXPECT_EQ(parse_weight("3,2^2,0^3"), (Weight{3, 2, 2, 0, 0, 0}));
  EXPECT_EQ(parse_weight("(-1^4)"), (Weight{-1, -1, -1, -1}));
  EXPECT_EQ(parse_weight(" 1 , -2 "), (Weight{1, -2}));
  EXPECT_EQ(render_weight(Weight{3, 2, 2, 0, 0, 0}), "3,2^2,0^3");
  EXPECT_EQ(render_partition(Weight{2, 1, 0, 0}), "(2,1)");
  std::mt19937 rng(7);
  std::uniform_int_distribution<Int> d(-3, 3);
  for (int t = 0; t < 200; ++t) {
    std::vector<Int> v(1 + t % 7);
    for (Int& x : v) x = d(rng);
    const Weight w(v);
    EXPECT_EQ(parse_weight(render_weight(w)), w);
  }
}

TEST(Weights, ParseErrorsCarryPosition) {
  try {
    parse_weight("0,x");
    FAIL();
  } catch (const parse_error& e) {
    EXPECT_EQ(e.position, 2u);
  }
  EXPECT_THROW(parse_weight("1;2"), parse_error);
  EXPECT_THROW(parse_weight("1^"), parse_error);
  EXPECT_THROW(parse_weight("1^-2"), parse_error);
}

TEST(Weights, InversionCountMatchesBruteForce) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<Int> d(-4, 4);
  for (int t = 0; t < 500; ++t) {
    std::vector<Int> v(1 + t % 8);
    for (Int& x : v) x = d(rng);
    const SortResult s = sort_with_inversions(Weight(v));
    std::vector<Int> sorted = v;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    EXPECT_EQ(s.sorted.entries(), sorted);
    EXPECT_EQ(s.has_repeats, std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end());
    if (!s.has_repeats) {
      EXPECT_EQ(s.swaps, brute_inversions(v));
    }
  }
}

TEST(Weights, BasicOperations) {
  EXPECT_EQ(staircase(4), (Weight{3, 2, 1, 0}));
  EXPECT_EQ(negate_reverse(Weight{3, 1, 0}), (Weight{0, -1, -3}));
  EXPECT_EQ(sl_normalize(Weight{-1, -1, -1, -1}), (Weight{0, 0, 0, 0}));
  EXPECT_EQ(concat(Weight{1}, Weight{0, -1}), (Weight{1, 0, -1}));
  EXPECT_THROW(add(Weight{1}, Weight{1, 2}), invalid_size);
}

TEST(Schur, DimensionCountsTableaux) {
  for (Int n = 1; n <= 4; ++n)
    for (Int k = 0; k <= 5; ++k)
      for (const Weight& l : partitions(k, static_cast<std::size_t>(n))) {
        Int count = 0;
        for (const auto& [e, c] : schur_polynomial(l, n)) count += c;
        EXPECT_EQ(gl_dimension(l, n), count) << render_weight(l) << " n=" << n;
      }
  // Shifting by det does not change the dimension.
  EXPECT_EQ(gl_dimension(Weight{-1, -1, -2}, 3), gl_dimension(Weight{1, 1, 0}, 3));
  EXPECT_THROW(gl_dimension(Weight{0, 1}, 2), std::invalid_argument);
}

TEST(Schur, KostkaCountsTableaux) {
  for (Int k = 1; k <= 5; ++k)
    for (const Weight& l : partitions(k, 4)) {
      const auto poly = schur_polynomial(l, 4);
      for (const auto& [e, c] : poly) EXPECT_EQ(kostka(l, Weight(e)), c);
    }
  EXPECT_EQ(kostka(Weight{2, 1}, Weight{1, 1, 1}), 2);
  EXPECT_EQ(kostka(Weight{2}, Weight{1, 1, 1}), 0);
}

TEST(Schur, LittlewoodRichardsonMatchesCharacterProduct) {
  const Int n = 4;
  for (Int a = 1; a <= 3; ++a)
    for (Int b = 1; b <= 3; ++b)
      for (const Weight& l : partitions(a, n))
        for (const Weight& m : partitions(b, n)) {
          const auto expect = schur_expand(multiply(schur_polynomial(l, n), schur_polynomial(m, n)), n);
          const SchurDecomposition got = tensor_decompose(l, m, n);
          std::map<std::vector<Int>, Int> got_map;
          for (const auto& t : got.terms) got_map[pad(t.weight, n).entries()] += t.multiplicity;
          EXPECT_EQ(got_map, expect) << render_weight(l) << " x " << render_weight(m);
          for (const auto& [nu, c] : expect) EXPECT_EQ(littlewood_richardson(l, m, Weight(nu)), c);
        }
}

TEST(Schur, LittlewoodRichardsonKnownValues) {
  EXPECT_EQ(littlewood_richardson(Weight{2, 1}, Weight{2, 1}, Weight{3, 2, 1}), 2);
  EXPECT_EQ(littlewood_richardson(Weight{1}, Weight{1}, Weight{2}), 1);
  EXPECT_EQ(littlewood_richardson(Weight{1}, Weight{1}, Weight{3}), 0);
}

TEST(SchurProperties, LRSymmetry) {
  for (Int a = 0; a <= 4; ++a)
    for (Int b = 0; b <= 4; ++b)
      for (const Weight& l : partitions(a, 5))
        for (const Weight& m : partitions(b, 5))
          for (const Weight& nu : partitions(a + b, 5))
            ASSERT_EQ(littlewood_richardson(l, m, nu), littlewood_richardson(m, l, nu));
}

TEST(SchurProperties, TensorDimensionAdditivity) {
  for (std::size_t n = 1; n <= 7; ++n)
    for (Int a = 0; a <= 6; a += 2)
      for (Int b = 0; b <= 6; b += 3)
        for (const Weight& l : partitions(a, n))
          for (const Weight& m : partitions(b, n))
            ASSERT_EQ(dimension(tensor_decompose(l, m, n), n), gl_dimension(l, n) * gl_dimension(m, n))
                << render_weight(l) << " x " << render_weight(m) << " n=" << n;
}

TEST(SchurProperties, WedgeTwoOfWedgeR) {
  for (std::size_t n = 2; n <= 7; ++n)
    for (std::size_t r = 1; r < n; ++r) {
      const Int N = binomial(static_cast<Int>(n), static_cast<Int>(r));
      EXPECT_EQ(dimension(wedge2_of_wedge_r(r, n), n), binomial(N, 2)) << r << "," << n;
      // Sym^2 of wedge^r splits into the Pluecker quadrics and the degree-2 part of the algebra.
      EXPECT_EQ(dimension(plucker_relation_space(r, n), n) + gl_dimension(Weight::constant(r, 2), n),
                binomial(N + 1, 2));
    }
}

TEST(SchurProperties, PluckerRelationCounts) {
  EXPECT_EQ(dimension(plucker_relation_space(2, 4), 4), 1);
  EXPECT_EQ(dimension(plucker_relation_space(2, 5), 5), 5);
  EXPECT_EQ(dimension(plucker_relation_space(3, 6), 6), 35);
  const SchurDecomposition h = h0_omega_degree2(3, 6);
  ASSERT_EQ(h.terms.size(), 1u);
  EXPECT_EQ(h.terms[0].weight, (Weight{1, 1, 1, 1, 1, 1}));
  EXPECT_TRUE(h0_omega_degree2(2, 5).empty());
}

TEST(Schur, CauchyPairs) {
  const auto c = cauchy(3, 4, 2);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].first, (Weight{3}));
  EXPECT_EQ(c[1].first, (Weight{2, 1}));
}

TEST(Schur, WeightMultiplicityAcceptsNegativeEntries) {
  SchurDecomposition d;
  d.add(Weight{0, 0, -1});
  EXPECT_EQ(weight_multiplicity(d, Weight{-1, 0, 0}), 1);
  EXPECT_EQ(weight_multiplicity(d, Weight{1, -1, -1}), 0);
}
