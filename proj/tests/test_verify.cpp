#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace gtagkz;

TEST(GaussClosedForm, MatchesIndependentExpansion) {
  for (const auto& top : std::vector<std::vector<long>>{{2, 1, 0}, {3, 1, 0}, {4, 2, 0}, {5, 2, 0}}) {
    for (const auto& d : enumerate_diagrams(Weight{top})) {
      auto f = gauss_closed_form_gl3(d);
      auto want = oracle::gauss_expansion_gl3(d);
      ASSERT_EQ(f.size(), want.size()) << d.to_string();
      for (const auto& [e, c] : want) EXPECT_EQ(f.coefficient(e), c);
    }
  }
  EXPECT_THROW(gauss_closed_form_gl3(enumerate_diagrams(Weight{{1, 0, 0, 0}}).front()), std::invalid_argument);
}

TEST(Checks, AllPassOnTwoOneZero) {
  auto b = RepresentationBasis::build(Weight{{2, 1, 0}});
  for (const auto& r : run_checks(check_names(), *b, VerifyOptions{})) {
    EXPECT_EQ(r.status, CheckStatus::pass) << r.name << (r.failures.empty() ? "" : ": " + r.failures.front());
    EXPECT_GT(r.cases, 0) << r.name;
  }
}

TEST(Checks, ResultsInRequestOrder) {
  auto b = RepresentationBasis::build(Weight{{1, 1, 0, 0}});
  std::vector<std::string> names = {"orthogonality", "agkz-annihilation", "gl3-closed-form"};
  auto rs = run_checks(names, *b, VerifyOptions{});
  ASSERT_EQ(rs.size(), 3u);
  for (std::size_t i = 0; i < names.size(); ++i) EXPECT_EQ(rs[i].name, names[i]);
  EXPECT_EQ(rs[0].status, CheckStatus::pass);
  EXPECT_EQ(rs[2].status, CheckStatus::skipped);
  EXPECT_TRUE(rs[2].passed());
}

TEST(Checks, UnknownNameRejected) {
  auto b = RepresentationBasis::build(Weight{{1, 0, 0}});
  EXPECT_FALSE(is_check_name("nosuch"));
  EXPECT_THROW(run_checks({"orthogonality", "nosuch"}, *b, VerifyOptions{}), std::invalid_argument);
}

TEST(Checks, MissingCanonicalFormIsAFailure) {
  auto b = RepresentationBasis::build(Weight{{2, 1, 0, 0}});
  auto r = check_canf_minor_identity(*b, VerifyOptions{});
  EXPECT_EQ(r.status, CheckStatus::fail);
  ASSERT_EQ(r.failures.size(), 1u);
  EXPECT_NE(r.failures.front().find("no representative"), std::string::npos);
}

TEST(Checks, DetectsABrokenIdentity) {
  CheckResult r{"x"};
  r.expect(true, "a");
  EXPECT_TRUE(r.passed());
  for (int k = 0; k < 8; ++k) r.expect(false, "b" + std::to_string(k));
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.cases, 9);
  EXPECT_EQ(r.failures.size(), 5u);
}
