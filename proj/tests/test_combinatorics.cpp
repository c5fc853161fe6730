#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace gtagkz;

namespace {

std::vector<std::string> names(const std::vector<SubsetIndex>& xs) {
  std::vector<std::string> out;
  for (auto x : xs) out.push_back(x.to_string());
  return out;
}

}  // namespace

TEST(Subsets, CanonicalOrderForThree) {
  std::vector<std::string> want = {"1", "2", "3", "1,2", "1,3", "2,3", "1,2,3"};
  EXPECT_EQ(names(enumerate_subsets(3)), want);
}

TEST(Subsets, SizesAndEdgeCases) {
  EXPECT_EQ(names(enumerate_subsets(1)), std::vector<std::string>{"1"});
  EXPECT_EQ(enumerate_subsets(4).size(), 15u);
  EXPECT_EQ(enumerate_subsets(6).size(), 63u);
  EXPECT_THROW(enumerate_subsets(0), std::invalid_argument);
  EXPECT_THROW(enumerate_subsets(-2), std::invalid_argument);
}

TEST(Subsets, OrderIsCardinalityThenLex) {
  auto xs = enumerate_subsets(5);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    EXPECT_LE(xs[i - 1].cardinality(), xs[i].cardinality());
    if (xs[i - 1].cardinality() == xs[i].cardinality()) {
      EXPECT_LT(xs[i - 1].elements(), xs[i].elements());
    }
  }
}

TEST(Subsets, ParseRoundTrip) {
  for (auto x : enumerate_subsets(5)) EXPECT_EQ(SubsetIndex::parse(x.to_string()), x);
  EXPECT_THROW(SubsetIndex::parse(""), std::invalid_argument);
  EXPECT_THROW(SubsetIndex::parse("2,1"), std::invalid_argument);
  EXPECT_THROW(SubsetIndex::parse("1,1"), std::invalid_argument);
  EXPECT_THROW(SubsetIndex::parse("0"), std::invalid_argument);
}

TEST(Universe, IndexOfInvertsSubset) {
  SubsetUniverse u(4);
  for (int c = 0; c < u.dimension(); ++c) EXPECT_EQ(u.index_of(u.subset(c)), c);
}

TEST(Chi, Examples) {
  EXPECT_EQ(chi(1, 2, SubsetIndex::parse("1,3"), 3), 1);
  EXPECT_EQ(chi(2, 2, SubsetIndex::parse("1,3"), 3), 0);
  EXPECT_THROW(chi(2, 1, SubsetIndex::parse("1"), 3), std::invalid_argument);
  EXPECT_THROW(chi(1, 4, SubsetIndex::parse("1"), 3), std::invalid_argument);
  EXPECT_THROW(chi(0, 2, SubsetIndex::parse("1"), 3), std::invalid_argument);
}

TEST(Chi, TopFunctionalSeesOnlyFullSet) {
  for (int n = 1; n <= 5; ++n)
    for (auto x : enumerate_subsets(n)) EXPECT_EQ(chi(n, n, x, n), x == initial_segment(n) ? 1 : 0);
}

TEST(Chi, MonotoneUnderInclusion) {
  const int n = 4;
  auto xs = enumerate_subsets(n);
  for (auto [p, q] : chi_pairs(n))
    for (auto x : xs)
      for (auto y : xs)
        if (x.is_subset_of(y)) {
          EXPECT_LE(chi(p, q, x, n), chi(p, q, y, n));
        }
}

TEST(Chi, FunctionalsAreIndependent) {
  for (int n = 1; n <= 6; ++n) {
    auto pairs = chi_pairs(n);
    auto xs = enumerate_subsets(n);
    std::vector<std::vector<Rational>> m;
    for (auto [p, q] : pairs) {
      std::vector<Rational> row;
      for (auto x : xs) row.push_back(chi(p, q, x, n));
      m.push_back(row);
    }
    // rank by elimination
    int rank = 0;
    const int cols = static_cast<int>(xs.size());
    for (int c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
      int piv = -1;
      for (int r = rank; r < static_cast<int>(m.size()); ++r)
        if (m[r][c] != 0) piv = r;
      if (piv < 0) continue;
      std::swap(m[piv], m[rank]);
      for (int r = 0; r < static_cast<int>(m.size()); ++r) {
        if (r == rank || m[r][c] == 0) continue;
        Rational f = m[r][c] / m[rank][c];
        for (int k = 0; k < cols; ++k) m[r][k] -= f * m[rank][k];
      }
      ++rank;
    }
    EXPECT_EQ(rank, n * (n + 1) / 2) << "n=" << n;
  }
}

TEST(Diagrams, CountsFromExamples) {
  EXPECT_EQ(enumerate_diagrams(Weight{{1, 0, 0}}).size(), 3u);
  EXPECT_EQ(enumerate_diagrams(Weight{{0, 0, 0}}).size(), 1u);
  EXPECT_EQ(enumerate_diagrams(Weight{{2, 1, 0}}).size(), 8u);
}

TEST(Diagrams, MatchWeylDimension) {
  std::vector<std::vector<long>> tops = {{0},          {3, 0},       {2, 1, 0},    {3, 1, 0},    {4, 2, 0},
                                         {1, 1, 0, 0}, {2, 1, 0, 0}, {2, 2, 1, 0}, {3, 1, 1, 0}, {1, 1, 1, 0, 0},
                                         {2, 1, 0, 0, 0}};
  for (const auto& top : tops)
    EXPECT_EQ(Integer(enumerate_diagrams(Weight{top}).size()), oracle::weyl_dimension(top)) << Weight{top}.to_string();
}

TEST(Diagrams, CompleteAndSound) {
  for (const auto& top : std::vector<std::vector<long>>{{2, 1, 0}, {3, 1, 0}, {2, 1, 0, 0}, {2, 2, 0, 0}}) {
    auto got = enumerate_diagrams(Weight{top});
    std::set<std::vector<std::vector<long>>> rows;
    for (const auto& d : got) {
      EXPECT_TRUE(d.satisfies_betweenness());
      std::vector<std::vector<long>> r;
      for (int q = 1; q <= d.rank(); ++q) r.push_back(d.row(q));
      rows.insert(r);
    }
    EXPECT_EQ(rows.size(), got.size()) << "duplicates";
    EXPECT_EQ(rows, oracle::brute_force_diagrams(top));
  }
}

TEST(Diagrams, DeterministicOrder) {
  auto a = enumerate_diagrams(Weight{{3, 1, 0, 0}});
  EXPECT_TRUE(std::is_sorted(a.begin(), a.end()));
  EXPECT_EQ(a, enumerate_diagrams(Weight{{3, 1, 0, 0}}));
}

TEST(Diagrams, RejectsBadTopRows) {
  EXPECT_THROW(enumerate_diagrams(Weight{{1, 2, 0}}), std::invalid_argument);
  EXPECT_THROW(enumerate_diagrams(Weight{{2, 1, 1}}), std::invalid_argument);
  EXPECT_THROW(enumerate_diagrams(Weight{{}}), std::invalid_argument);
}

TEST(Diagrams, NormalizeTopRow) {
  auto nt = normalize_top_row(Weight{{5, 3, 2}});
  EXPECT_EQ(nt.top_row.components, (std::vector<long>{3, 1, 0}));
  EXPECT_EQ(nt.full_minor_power, 2);
}

TEST(Weights, Examples) {
  auto ds = enumerate_diagrams(Weight{{2, 1, 0}});
  auto highest = *std::max_element(ds.begin(), ds.end());
  EXPECT_EQ(diagram_weight(highest).components, (std::vector<long>{2, 1, 0}));
  auto zero = enumerate_diagrams(Weight{{0, 0, 0}}).front();
  EXPECT_EQ(diagram_weight(zero).components, (std::vector<long>{0, 0, 0}));
  auto d = GTDiagram::from_top_down({{2, 1, 0}, {2, 1}, {1}});
  EXPECT_EQ(diagram_weight(d).components, (std::vector<long>{1, 2, 0}));
}

TEST(Weights, SumToTopRowTotal) {
  for (const auto& d : enumerate_diagrams(Weight{{3, 2, 0, 0}})) {
    auto w = diagram_weight(d);
    EXPECT_EQ(std::accumulate(w.components.begin(), w.components.end(), 0L), 5);
  }
}

TEST(Diagrams, TextRoundTrip) {
  auto d = GTDiagram::from_top_down({{2, 1, 0}, {2, 1}, {1}});
  EXPECT_EQ(d.to_string(), "2,1,0;2,1;1");
}
