#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>

#include "bottcalc/cotangent_oracle.hpp"

using namespace bottcalc;

namespace {

// Weyl product formula for GL_n.
BigInt weyl_gl(const std::vector<Int>& lambda, std::size_t n) {
  std::vector<Int> l(lambda);
  l.resize(n, 0);
  BigInt num = 1, den = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      num *= l[i] - l[j] + static_cast<Int>(j - i);
      den *= static_cast<Int>(j - i);
    }
  return num / den;
}

BigInt binom(std::size_t n, std::size_t k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

// f dx_v with x_v in column c and f of column weight (p,...,p) - e_c.
BigInt omega_ambient(std::size_t r, std::size_t n, std::size_t p) {
  return BigInt(static_cast<unsigned long>(r * n)) * binom(n + p - 2, p - 1) * [&] {
    BigInt x = 1;
    for (std::size_t i = 1; i < r; ++i) x *= binom(n + p - 1, p);
    return x;
  }();
}

OracleReport run(std::size_t r, std::size_t n, std::size_t p_max, bool all_weights = false, bool modular = false) {
  OracleConfig cfg;
  cfg.r = r;
  cfg.n = n;
  cfg.p_max = p_max;
  cfg.all_weights = all_weights;
  cfg.modular = modular;
  return local_cohomology_dims(cfg);
}

void expect_same_totals(const SliceTotals& a, const SliceTotals& b) {
  EXPECT_EQ(a.c0, b.c0);
  EXPECT_EQ(a.c1, b.c1);
  EXPECT_EQ(a.omega, b.omega);
  EXPECT_EQ(a.c2, b.c2);
  EXPECT_EQ(a.c3, b.c3);
  EXPECT_EQ(a.rank_d1, b.rank_d1);
  EXPECT_EQ(a.rank_d2, b.rank_d2);
  EXPECT_EQ(a.ker_d3, b.ker_d3);
  EXPECT_EQ(a.h1, b.h1);
  EXPECT_EQ(a.h2, b.h2);
}

}  // namespace

TEST(Oracle, PluckerRelations) {
  for (auto [r, n] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 4}, {2, 5}, {3, 6}, {2, 6}}) {
    const OracleReport rep = run(r, n, 1);
    const BigInt N = binom(n, r);
    EXPECT_EQ(BigInt(static_cast<unsigned long>(rep.minors_rank)), N);
    const BigInt want = N * (N + 1) / 2 - weyl_gl(std::vector<Int>(r, 2), n);
    EXPECT_EQ(BigInt(static_cast<unsigned long>(rep.relations)), want) << r << "," << n;
    EXPECT_EQ(rep.relations_predicted, want);
  }
  EXPECT_EQ(run(2, 4, 1).relations, 1u);
  EXPECT_EQ(run(2, 5, 1).relations, 5u);
  EXPECT_EQ(run(3, 6, 1).relations, 35u);
}

TEST(Oracle, HilbertFunctionOfPluckerAlgebra) {
  for (auto [r, n] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 4}, {2, 5}, {3, 6}}) {
    PluckerData D(r, n);
    for (std::size_t m = 0; m <= 3; ++m) {
      const HilbertCheck h = hilbert_check(D, m);
      EXPECT_EQ(h.computed, weyl_gl(std::vector<Int>(r, static_cast<Int>(m)), n)) << r << "," << n << " m=" << m;
      EXPECT_EQ(h.predicted, h.computed);
      EXPECT_TRUE(h.per_weight_ok);
    }
  }
}

TEST(Oracle, SlicesMatchRepresentationTheory) {
  for (auto [r, n, p] : std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>{{2, 4, 3}, {2, 5, 3}, {3, 6, 2}}) {
    const OracleReport rep = run(r, n, p);
    ASSERT_FALSE(rep.truncated);
    ASSERT_EQ(rep.slices.size(), p);
    for (const SliceReport& s : rep.slices) {
      EXPECT_TRUE(s.mismatches.empty()) << r << "," << n << " p=" << s.p;
      EXPECT_TRUE(s.composites_zero);
      EXPECT_TRUE(s.image_invariant);
      EXPECT_TRUE(s.exact);
      expect_same_totals(s.totals, s.predicted);
      EXPECT_EQ(s.totals.omega, omega_ambient(r, n, s.p)) << r << "," << n << " p=" << s.p;
    }
  }
}

TEST(Oracle, GrassmannianTwoFourFrozenSlices) {
  const OracleReport rep = run(2, 4, 2);
  const SliceTotals& p1 = rep.slices[0].totals;
  const SliceTotals& p2 = rep.slices[1].totals;
  EXPECT_EQ(p1.omega, 32);
  EXPECT_EQ(p1.c2, 16);
  EXPECT_EQ(p1.c3, 10);
  EXPECT_EQ(p2.c1, 36);
  EXPECT_EQ(p2.omega, 320);
  EXPECT_EQ(p2.c2, 80);
  EXPECT_EQ(p2.c3, 45);
  for (const SliceReport& s : rep.slices) {
    EXPECT_EQ(s.totals.h1, 0);
    EXPECT_EQ(s.totals.h2, 0);
  }
}

TEST(Oracle, ThreeSixDegreeTwoHasOneClass) {
  const OracleReport rep = run(3, 6, 2);
  EXPECT_EQ(rep.slices[0].totals.h1, 0);
  EXPECT_EQ(rep.slices[1].totals.h1, 1);
  EXPECT_EQ(rep.slices[1].totals.h2, 0);
  // The class spans the determinant representation.
  std::size_t hits = 0;
  for (const BlockResult& b : rep.slices[1].blocks)
    if (b.counts.h1() != 0) {
      ++hits;
      EXPECT_EQ(b.mu, Weight::constant(6, 1));
    }
  EXPECT_EQ(hits, 1u);
}

TEST(Oracle, AllWeightsAgreeWithDominantBlocks) {
  for (auto [r, n] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 4}, {2, 5}}) {
    const OracleReport a = run(r, n, 2), b = run(r, n, 2, true);
    ASSERT_EQ(a.slices.size(), b.slices.size());
    for (std::size_t i = 0; i < a.slices.size(); ++i) {
      expect_same_totals(a.slices[i].totals, b.slices[i].totals);
      EXPECT_GT(b.slices[i].blocks.size(), a.slices[i].blocks.size());
    }
  }
}

TEST(Oracle, ModularRanksAgreeAndAreFlagged) {
  const OracleReport a = run(2, 5, 2), b = run(2, 5, 2, false, true);
  for (std::size_t i = 0; i < a.slices.size(); ++i) {
    expect_same_totals(a.slices[i].totals, b.slices[i].totals);
    EXPECT_TRUE(a.slices[i].exact);
    EXPECT_FALSE(b.slices[i].exact);
  }
}

TEST(Oracle, KernelAndImageWitnesses) {
  for (auto [r, n] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 4}, {2, 5}, {3, 6}})
    for (std::size_t m = 1; m <= 2; ++m) EXPECT_TRUE(kerd_witnesses(r, n, m).ok()) << r << "," << n << " m=" << m;
}

TEST(Oracle, TruncationAndCallbacks) {
  OracleConfig cfg;
  cfg.r = 2;
  cfg.n = 5;
  cfg.p_max = 3;
  cfg.max_columns = 10;
  std::size_t calls = 0;
  cfg.on_slice = [&](const SliceReport&) { ++calls; };
  const OracleReport rep = local_cohomology_dims(cfg);
  EXPECT_TRUE(rep.truncated);
  EXPECT_TRUE(rep.slices.back().truncated);
  EXPECT_EQ(calls, rep.slices.size());
  EXPECT_LT(rep.slices.size(), 3u);
}

TEST(Oracle, Preconditions) {
  EXPECT_THROW(run(3, 3, 1), std::invalid_argument);
  OracleConfig cfg;
  cfg.p_min = 3;
  cfg.p_max = 2;
  EXPECT_THROW(local_cohomology_dims(cfg), std::invalid_argument);
}

TEST(Oracle, DumpIsSparseTriplets) {
  const auto dir = std::filesystem::temp_directory_path() / "bottcalc_dump_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  OracleConfig cfg;
  cfg.p_max = 2;
  cfg.dump_dir = dir.string();
  local_cohomology_dims(cfg);
  std::ifstream in(dir / "oracle_r2_n4.txt");
  ASSERT_TRUE(in);
  const std::regex header(R"(# map \S+ p (\d+) mu \S+ rows (\d+) cols (\d+) nnz (\d+))");
  const std::regex triplet(R"((\d+) (\d+) -?\d+(/\d+)?)");
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line.rfind("# sparse triplets", 0), 0u);
  std::size_t blocks = 0, expect_nnz = 0, seen = 0, rows = 0, cols = 0;
  while (std::getline(in, line)) {
    std::smatch m;
    if (std::regex_match(line, m, header)) {
      EXPECT_EQ(seen, expect_nnz);
      ++blocks;
      rows = std::stoul(m[2]);
      cols = std::stoul(m[3]);
      expect_nnz = std::stoul(m[4]);
      seen = 0;
      continue;
    }
    ASSERT_TRUE(std::regex_match(line, m, triplet)) << line;
    EXPECT_LT(std::stoul(m[1]), rows);
    EXPECT_LT(std::stoul(m[2]), cols);
    ++seen;
  }
  EXPECT_EQ(seen, expect_nnz);
  EXPECT_GT(blocks, 0u);
  std::filesystem::remove_all(dir);
}
