#include <gtest/gtest.h>

#include <chrono>

#include "oracles.hpp"

using namespace gtagkz;

namespace {

ExponentVector ev(std::vector<long> e) { return ExponentVector(std::move(e)); }

long expected_rank(int n) { return (1L << n) - 1 - n * (n + 1) / 2; }

}  // namespace

TEST(Basis, SizeMatchesRankFormula) {
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(static_cast<long>(lattice_basis(n).size()), std::max(0L, expected_rank(n))) << n;
}

TEST(Basis, GlThreeVector) {
  auto b = lattice_basis(3);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0].v, ev({1, -1, 0, 0, -1, 1, 0}));
  EXPECT_EQ(b[0].r, ev({-1, 0, 1, 1, 0, -1, 0}));
  EXPECT_EQ(std::tie(b[0].i, b[0].j, b[0].x), std::make_tuple(1, 2, 3));
  EXPECT_TRUE(b[0].tail.empty());
}

TEST(Basis, StructuralInvariants) {
  for (int n = 3; n <= 6; ++n) {
    GTLattice lat(n);
    for (const auto& b : lat.basis()) {
      EXPECT_LT(b.i, b.j);
      EXPECT_LT(b.j, b.x);
      for (int e : b.tail.elements()) EXPECT_GT(e, b.x);
      EXPECT_EQ(b.v, b.v_plus - b.v_minus);
      EXPECT_EQ(b.r, b.v_zero - b.v_plus);
      for (const auto* w : {&b.v_plus, &b.v_minus, &b.v_zero}) {
        EXPECT_TRUE(w->is_nonnegative());
        EXPECT_EQ(w->total(), 2);
        EXPECT_EQ(*std::max_element(w->entries().begin(), w->entries().end()), 1);
      }
      EXPECT_TRUE(lat.in_lattice(b.v)) << b.label();
      for (auto [p, q] : chi_pairs(n)) EXPECT_EQ(lat.chi_apply(p, q, b.v), 0);
    }
  }
}

TEST(Basis, LinearlyIndependentAndCoordinatesRecover) {
  for (int n = 3; n <= 5; ++n) {
    GTLattice lat(n);
    std::mt19937_64 rng(n);
    std::uniform_int_distribution<long> d(-3, 3);
    for (int k = 0; k < 20; ++k) {
      MultiIndex t(lat.basis_size());
      for (auto& x : t) x = d(rng);
      EXPECT_EQ(lat.lattice_coordinates(lat.add_v(lat.zero(), t)), t);
    }
    EXPECT_THROW(lat.lattice_coordinates(ExponentVector::unit(lat.dimension(), 0)), std::invalid_argument);
  }
}

TEST(Basis, SpansTheLattice) {
  // Every integer vector killed by all counting functionals in a small box
  // has integral coordinates.
  GTLattice lat(3);
  std::vector<long> e(7, -2);
  int found = 0;
  while (true) {
    ExponentVector x(e);
    if (lat.in_lattice(x)) {
      ++found;
      EXPECT_NO_THROW(lat.lattice_coordinates(x));
    }
    int i = 0;
    for (; i < 7; ++i) {
      if (e[i] < 2) {
        ++e[i];
        break;
      }
      e[i] = -2;
    }
    if (i == 7) break;
  }
  EXPECT_EQ(found, 5);  // t in {-2..2}
}

TEST(Basis, RankCountIsFast) {
  auto start = std::chrono::steady_clock::now();
  for (int n = 3; n <= 6; ++n) EXPECT_EQ(static_cast<long>(lattice_basis(n).size()), expected_rank(n));
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 1.0);
}

TEST(InLattice, Examples) {
  GTLattice lat(3);
  EXPECT_TRUE(lat.in_lattice(lat.zero()));
  EXPECT_FALSE(lat.in_lattice(ExponentVector::unit(7, 0)));
  EXPECT_THROW(lat.in_lattice(ExponentVector(6)), std::invalid_argument);
  EXPECT_THROW(chi_apply(1, 1, ExponentVector(6), lat.universe()), std::invalid_argument);
  EXPECT_EQ(chi_apply(1, 2, lat.zero(), lat.universe()), 0);
}

TEST(Shift, SatisfiesCountingEquations) {
  for (const auto& top : std::vector<std::vector<long>>{{2, 1, 0}, {3, 1, 0}, {2, 1, 0, 0}, {3, 2, 1, 0}, {2, 1, 1, 0, 0}}) {
    GTLattice lat(static_cast<int>(top.size()));
    for (const auto& d : enumerate_diagrams(Weight{top})) {
      auto s = lat.shift_from_diagram(d);
      for (auto [p, q] : chi_pairs(lat.rank())) EXPECT_EQ(lat.chi_apply(p, q, s.gamma), d.m(p, q));
      EXPECT_EQ(lat.diagram_of(s.gamma), d);
    }
  }
}

TEST(Shift, GlThreeClosedFormCoset) {
  GTLattice lat(3);
  for (const auto& d : enumerate_diagrams(Weight{{3, 1, 0}})) {
    long m1 = d.m(1, 3), m2 = d.m(2, 3), k1 = d.m(1, 2), k2 = d.m(2, 2), h1 = d.m(1, 1);
    ExponentVector classical = ev({h1 - m2, k1 - h1, m1 - k1, k2, m2 - k2, 0, 0});
    EXPECT_TRUE(lat.in_lattice(lat.shift_from_diagram(d).gamma - classical)) << d.to_string();
  }
}

TEST(Shift, ZeroDiagram) {
  GTLattice lat(4);
  auto d = enumerate_diagrams(Weight{{0, 0, 0, 0}}).front();
  EXPECT_TRUE(lat.in_lattice(lat.shift_from_diagram(d).gamma));
}

TEST(Shift, HighestDiagramHasOnePoint) {
  for (const auto& top : std::vector<std::vector<long>>{{2, 1, 0}, {2, 1, 0, 0}, {3, 1, 1, 0}}) {
    GTLattice lat(static_cast<int>(top.size()));
    auto ds = enumerate_diagrams(Weight{top});
    auto pts = lat.nonneg_points(lat.shift_from_diagram(ds.back()).gamma);
    ASSERT_EQ(pts.size(), 1u);
    EXPECT_EQ(Polynomial::monomial(pts[0], ratio(1, factorial(pts[0]))), highest_vector(Weight{top}, lat.universe()));
  }
}

TEST(Points, AgreeWithBruteForce) {
  for (const auto& top : std::vector<std::vector<long>>{{2, 1, 0}, {3, 1, 0}, {4, 2, 0}, {2, 1, 0, 0}, {2, 2, 0, 0}, {3, 1, 0, 0}, {2, 1, 1, 0}}) {
    GTLattice lat(static_cast<int>(top.size()));
    for (const auto& d : enumerate_diagrams(Weight{top})) {
      auto gamma = lat.shift_from_diagram(d).gamma;
      auto pts = lat.nonneg_points(gamma);
      std::set<ExponentVector> got(pts.begin(), pts.end());
      EXPECT_EQ(got.size(), pts.size());
      EXPECT_EQ(got, oracle::brute_force_points(lat, gamma)) << d.to_string();
    }
  }
}

TEST(Points, CarryLatticeCoordinates) {
  GTLattice lat(4);
  for (const auto& d : enumerate_diagrams(Weight{{3, 1, 0, 0}})) {
    auto gamma = lat.shift_from_diagram(d).gamma;
    for (const auto& p : *lat.nonneg_points_cached(gamma)) {
      EXPECT_EQ(lat.add_v(gamma, p.t), p.x);
      EXPECT_TRUE(p.x.is_nonnegative());
    }
  }
}

TEST(Points, BetweennessViolationGivesNone) {
  GTLattice lat(3);
  auto bad = GTDiagram::from_top_down({{2, 1, 0}, {1, 2}, {1}});
  EXPECT_FALSE(bad.satisfies_betweenness());
  EXPECT_TRUE(lat.nonneg_points(lat.shift_from_diagram(bad).gamma).empty());
  auto bad2 = GTDiagram::from_top_down({{2, 1, 0}, {3, 0}, {1}});
  EXPECT_TRUE(lat.nonneg_points(lat.shift_from_diagram(bad2).gamma).empty());
}

TEST(Points, GlThreeCountMatchesGaussTerms) {
  GTLattice lat(3);
  for (const auto& d : enumerate_diagrams(Weight{{2, 1, 0}}))
    EXPECT_EQ(lat.nonneg_points(lat.shift_from_diagram(d).gamma).size(), oracle::gauss_expansion_gl3(d).size());
  auto one = GTDiagram::from_top_down({{2, 1, 0}, {2, 1}, {1}});
  EXPECT_EQ(lat.nonneg_points(lat.shift_from_diagram(one).gamma).size(), 1u);
  auto two = GTDiagram::from_top_down({{2, 1, 0}, {2, 0}, {1}});
  EXPECT_EQ(lat.nonneg_points(lat.shift_from_diagram(two).gamma).size(), 2u);
}

TEST(Points, RankTwoAndBelow) {
  GTLattice lat(2);
  EXPECT_EQ(lat.basis_size(), 0);
  for (const auto& d : enumerate_diagrams(Weight{{3, 0}})) {
    auto gamma = lat.shift_from_diagram(d).gamma;
    auto pts = lat.nonneg_points(gamma);
    ASSERT_EQ(pts.size(), 1u);
    EXPECT_EQ(pts[0], gamma);
  }
}

TEST(Order, GlThreeExamples) {
  GTLattice lat(3);
  auto gamma = lat.shift_from_diagram(GTDiagram::from_top_down({{2, 1, 0}, {2, 1}, {1}})).gamma;
  auto refl = lat.coset_leq(gamma, gamma);
  ASSERT_TRUE(refl);
  EXPECT_EQ(*refl, MultiIndex{0});
  auto up = lat.coset_leq(gamma, gamma + lat.basis()[0].r);
  ASSERT_TRUE(up);
  EXPECT_EQ(*up, MultiIndex{1});
  EXPECT_FALSE(lat.coset_leq(gamma + lat.basis()[0].r, gamma));
  // r leaves chi_1^1 alone, so diagrams differing only in h1 are incomparable.
  auto a = lat.shift_from_diagram(GTDiagram::from_top_down({{2, 1, 0}, {2, 0}, {1}})).gamma;
  auto b = lat.shift_from_diagram(GTDiagram::from_top_down({{2, 1, 0}, {2, 0}, {2}})).gamma;
  EXPECT_EQ(lat.chi_apply(1, 1, lat.basis()[0].r), 0);
  EXPECT_FALSE(lat.coset_leq(a, b));
  EXPECT_FALSE(lat.coset_leq(b, a));
}

TEST(Order, SignOfRImages) {
  // Each r^a lowers chi_i^m and raises chi_{i+1}^m for j <= m < x, nothing else.
  for (int n = 3; n <= 5; ++n) {
    GTLattice lat(n);
    for (const auto& b : lat.basis())
      for (auto [p, q] : chi_pairs(n)) {
        long want = 0;
        if (q >= b.j && q < b.x) want = (p == b.i) ? -1 : (p == b.i + 1 ? 1 : 0);
        EXPECT_EQ(lat.chi_apply(p, q, b.r), want) << b.label() << " p=" << p << " q=" << q;
      }
  }
}

TEST(Order, PartialOrderAxioms) {
  for (const auto& top : std::vector<std::vector<long>>{{3, 1, 0}, {2, 1, 0, 0}, {3, 1, 0, 0}}) {
    GTLattice lat(static_cast<int>(top.size()));
    std::vector<ExponentVector> gs;
    for (const auto& d : enumerate_diagrams(Weight{top})) gs.push_back(lat.shift_from_diagram(d).gamma);
    const std::size_t n = gs.size();
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto w = lat.coset_leq(gs[i], gs[j]);
        le[i][j] = w.has_value();
        if (w) {
          EXPECT_TRUE(lat.same_coset(lat.add_r(gs[i], *w), gs[j]));
        }
      }
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_TRUE(le[i][i]);
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) {
          EXPECT_FALSE(le[i][j] && le[j][i]);
        }
        for (std::size_t k = 0; k < n; ++k)
          if (le[i][j] && le[j][k]) {
            EXPECT_TRUE(le[i][k]);
          }
      }
    }
  }
}

TEST(Order, AllWitnessesAreValid) {
  GTLattice lat(4);
  auto ds = enumerate_diagrams(Weight{{2, 1, 0, 0}});
  for (const auto& a : ds)
    for (const auto& b : ds) {
      auto ga = lat.shift_from_diagram(a).gamma, gb = lat.shift_from_diagram(b).gamma;
      for (const auto& s : lat.coset_leq_witnesses(ga, gb)) {
        EXPECT_TRUE(is_nonnegative(s));
        EXPECT_TRUE(lat.same_coset(lat.add_r(ga, s), gb));
      }
    }
}

TEST(Descents, ExactlyTheFeasibleOnes) {
  GTLattice lat(4);
  for (const auto& d : enumerate_diagrams(Weight{{2, 1, 0, 0}})) {
    auto gamma = lat.shift_from_diagram(d).gamma;
    auto desc = lat.feasible_descents(gamma);
    ASSERT_FALSE(desc.empty());
    EXPECT_EQ(desc.front(), lat.zero_multi());
    std::set<MultiIndex> in(desc.begin(), desc.end());
    // Exhaustive check on a box large enough to contain every descent.
    for_each_below(MultiIndex(lat.basis_size(), 3), [&](const MultiIndex& s) {
      bool feasible = lat.has_nonneg_point(lat.add_r(gamma, s, -1));
      EXPECT_EQ(feasible, in.count(s) == 1) << d.to_string() << " " << to_string(s);
    });
    for (const auto& s : desc)
      for (long x : s) EXPECT_LT(x, 3);
  }
}

TEST(CanonicalShift, ComparableDiagramsDifferByR) {
  for (const auto& top : std::vector<std::vector<long>>{{2, 1, 0}, {3, 1, 0}, {1, 1, 0, 0}}) {
    GTLattice lat(static_cast<int>(top.size()));
    auto ds = enumerate_diagrams(Weight{top});
    auto shifts = canonical_shifts(lat, ds);
    for (std::size_t i = 0; i < ds.size(); ++i) {
      for (auto [p, q] : chi_pairs(lat.rank())) EXPECT_EQ(lat.chi_apply(p, q, shifts[i].gamma), ds[i].m(p, q));
      for (std::size_t j = 0; j < ds.size(); ++j) {
        auto w = lat.coset_leq(shifts[i].gamma, shifts[j].gamma);
        if (w) {
          EXPECT_EQ(lat.add_r(shifts[i].gamma, *w), shifts[j].gamma);
        }
      }
    }
  }
}

TEST(CanonicalShift, MinimumKeepsStaircaseShift) {
  GTLattice lat(3);
  auto ds = enumerate_diagrams(Weight{{2, 1, 0}});
  auto shifts = canonical_shifts(lat, ds);
  // (2,1,0;2,0;1) and (2,1,0;1,1;1) share weight (1,1,1); adding r moves
  // the middle row from (2,0) to (1,1).
  auto lo = std::find(ds.begin(), ds.end(), GTDiagram::from_top_down({{2, 1, 0}, {2, 0}, {1}})) - ds.begin();
  auto hi = std::find(ds.begin(), ds.end(), GTDiagram::from_top_down({{2, 1, 0}, {1, 1}, {1}})) - ds.begin();
  EXPECT_EQ(shifts[lo].gamma, lat.shift_from_diagram(ds[lo]).gamma);
  EXPECT_EQ(shifts[hi].gamma, shifts[lo].gamma + lat.basis()[0].r);
  EXPECT_EQ(canonical_shift(lat, ds[hi], ds).gamma, shifts[hi].gamma);
}

TEST(CanonicalShift, HighestWeightOfVectorRepresentation) {
  GTLattice lat(3);
  auto ds = enumerate_diagrams(Weight{{1, 0, 0}});
  auto s = canonical_shift(lat, ds.back(), ds);
  EXPECT_TRUE(lat.same_coset(s.gamma, ExponentVector::unit(7, 0)));
  EXPECT_THROW(canonical_shift(lat, GTDiagram::from_top_down({{2, 0, 0}, {1, 0}, {0}}), ds), std::invalid_argument);
}

TEST(CanonicalShift, AmbiguousWitnessIsReported) {
  // In gl4 (2,1,0,0) two r-combinations reach the same coset but give
  // different representatives; without a resolver this must be reported.
  GTLattice lat(4);
  auto ds = enumerate_diagrams(Weight{{2, 1, 0, 0}});
  EXPECT_THROW(canonical_shifts(lat, ds), AmbiguousMinimum);
  std::vector<std::string> notes;
  auto shifts = canonical_shifts(lat, ds, {}, &notes);
  EXPECT_FALSE(notes.empty());
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (auto [p, q] : chi_pairs(4)) EXPECT_EQ(lat.chi_apply(p, q, shifts[i].gamma), ds[i].m(p, q));
}
