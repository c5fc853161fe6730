#pragma once

// Named identity checks over one representation, shared by the command
// line tool and the acceptance driver.

#include <functional>
#include <optional>
#include <future>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gtbasis.hpp"
#include "operators.hpp"

namespace gtagkz {

struct VerifyOptions {
  unsigned long seed = 42;
  int matrices = 20;
  int osnf_pairs = 10;
};

enum class CheckStatus { pass, fail, skipped };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  long cases = 0;
  std::vector<std::string> failures;  // first few, in a fixed order
  std::string note;

  CheckResult() = default;
  explicit CheckResult(std::string n) : name(std::move(n)) {}

  bool passed() const { return status != CheckStatus::fail; }
  void fail(const std::string& what) {
    status = CheckStatus::fail;
    if (failures.size() < 5) failures.push_back(what);
  }
  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok) fail(what);
  }
};

inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "agkz-annihilation", "plucker-annihilation", "gkz-homogeneity", "pairing-invariance", "orthogonality",
      "triangularity",     "canf-minor-identity",  "osnf-identity",   "coeff-crosscheck",   "gl3-closed-form"};
  return names;
}

inline bool is_check_name(const std::string& name) {
  for (const auto& n : check_names())
    if (n == name) return true;
  return false;
}

/// Terms of the gl3 Gamma-series as a terminating Gauss series: along the
/// lattice direction the coefficient ratio is (a1+k)(a2+k)/((b1+k)(k+1)).
inline Polynomial gauss_closed_form_gl3(const GTDiagram& d) {
  if (d.rank() != 3) throw std::invalid_argument("gauss_closed_form_gl3 needs a rank 3 diagram");
  const long m1 = d.m(1, 3), m2 = d.m(2, 3), k1 = d.m(1, 2), k2 = d.m(2, 2), h1 = d.m(1, 1);
  // A1, A2, A3, A12, A13, A23, A123
  std::vector<long> g = {h1 - m2, k1 - h1, m1 - k1, k2, m2 - k2, 0, 0};
  Polynomial out(7);
  const long back = std::min(g[0], g[5]);
  g[0] -= back, g[1] += back, g[4] += back, g[5] -= back;
  if (g[1] < 0 || g[2] < 0 || g[3] < 0 || g[4] < 0) return out;
  const long other = g[0] + g[5];
  Rational term = ratio(1, factorial(g[1]) * factorial(g[4]) * factorial(other) * factorial(g[2]) * factorial(g[3]));
  for (long k = 0; term != 0; ++k) {
    ExponentVector e(std::vector<long>{g[0] == 0 ? k : g[0] + k, g[1] - k, g[2], g[3], g[4] - k,
                                       g[0] == 0 ? g[5] + k : k, 0});
    out.add_term(e, term);
    term *= ratio((g[1] - k) * (g[4] - k), (other + 1 + k) * (k + 1));
  }
  return out;
}

namespace detail {

inline std::vector<Polynomial> random_span(const RepresentationBasis& b, std::mt19937_64& rng, int count) {
  std::uniform_int_distribution<int> c(-3, 3);
  std::vector<Polynomial> out;
  for (int k = 0; k < count; ++k) {
    Polynomial f(b.lattice().dimension());
    for (const auto& e : b.entries()) f += e.F * Rational(c(rng));
    out.push_back(std::move(f));
  }
  return out;
}

/// Dominant top rows of the same rank, ending in 0, componentwise at most
/// top and not zero.
inline std::vector<Weight> smaller_weights(const Weight& top) {
  std::vector<Weight> out;
  const int n = top.size();
  std::vector<long> w(n, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n - 1) {
      w[i] = 0;
      if (w[0] > 0) out.push_back(Weight{w});
      return;
    }
    long hi = top[i];
    if (i > 0) hi = std::min(hi, w[i - 1]);
    for (long v = 0; v <= hi; ++v) {
      w[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

inline std::string pair_label(const BasisEntry& a, const BasisEntry& b) {
  return a.diagram.to_string() + " / " + b.diagram.to_string();
}

}  // namespace detail

inline CheckResult check_agkz_annihilation(const RepresentationBasis& b) {
  CheckResult r{"agkz-annihilation"};
  for (const auto& e : b.entries())
    for (int a = 1; a <= b.lattice().basis_size(); ++a)
      r.expect(agkz_apply(b.lattice(), a, e.F).is_zero(), e.diagram.to_string() + " alpha=" + std::to_string(a));
  return r;
}

inline CheckResult check_plucker_annihilation(const RepresentationBasis& b, const VerifyOptions& opt) {
  CheckResult r{"plucker-annihilation"};
  const auto mats = random_nonsingular_matrices(b.universe().rank(), opt.matrices, opt.seed);
  for (int a = 1; a <= b.lattice().basis_size(); ++a) {
    const auto p = plucker_generator(b.lattice(), a);
    for (const auto& e : b.entries())
      r.expect(diff_apply(p, e.F).is_zero(), e.diagram.to_string() + " alpha=" + std::to_string(a));
    for (std::size_t m = 0; m < mats.size(); ++m)
      r.expect(evaluate_minors(p, mats[m], b.universe()) == 0,
               "alpha=" + std::to_string(a) + " matrix " + std::to_string(m));
  }
  return r;
}

inline CheckResult check_gkz_homogeneity(const RepresentationBasis& b) {
  CheckResult r{"gkz-homogeneity"};
  for (const auto& e : b.entries()) {
    for (auto [p, q] : chi_pairs(b.universe().rank()))
      r.expect(homogeneity_apply(p, q, e.gamma_series, b.universe()) == e.gamma_series * Rational(e.diagram.m(p, q)),
               e.diagram.to_string() + " chi_" + std::to_string(p) + "^" + std::to_string(q));
    for (int a = 1; a <= b.lattice().basis_size(); ++a)
      r.expect(gkz_apply(b.lattice(), a, e.gamma_series).is_zero(), e.diagram.to_string() + " alpha=" + std::to_string(a));
  }
  return r;
}

inline CheckResult check_pairing_invariance(const RepresentationBasis& b, const VerifyOptions& opt) {
  CheckResult r{"pairing-invariance"};
  std::mt19937_64 rng(opt.seed);
  const auto fs = detail::random_span(b, rng, 3), gs = detail::random_span(b, rng, 3);
  const int n = b.universe().rank();
  for (std::size_t k = 0; k < fs.size(); ++k)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        r.expect(pair(e_action(i, j, fs[k], b.universe()), gs[k]) == pair(fs[k], e_action(j, i, gs[k], b.universe())),
                 "E" + std::to_string(i) + std::to_string(j) + " sample " + std::to_string(k));
  return r;
}

inline CheckResult check_orthogonality(const RepresentationBasis& b) {
  CheckResult r{"orthogonality"};
  std::vector<Polynomial> g;
  try {
    g = gt_functions(b, coefficient_table(b));
  } catch (const DegenerateMetric& ex) {
    r.fail(ex.what());
    return r;
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    r.expect(pair(g[i], g[i]) != 0, b.entries()[i].diagram.to_string() + " has zero norm");
    for (std::size_t j = i + 1; j < g.size(); ++j)
      r.expect(pair(g[i], g[j]) == 0, detail::pair_label(b.entries()[i], b.entries()[j]));
  }
  return r;
}

/// pair(Gamma_gamma, F_delta) vanishes unless gamma + B lies below delta + B,
/// and then equals the sum over witnesses u of (-1)^u/u! J^u_{delta-u.r}(1).
inline CheckResult check_triangularity(const RepresentationBasis& b) {
  CheckResult r{"triangularity"};
  const auto& lat = b.lattice();
  for (const auto& gi : b.entries())
    for (const auto& fj : b.entries()) {
      const Rational p = pair(gi.gamma_series, fj.F);
      const auto witnesses = lat.coset_leq_witnesses(gi.shift.gamma, fj.shift.gamma);
      Rational want = 0;
      for (const auto& u : witnesses)
        want += ratio(sign_of(total(u)), factorial(u)) * b.engine().j_value_at_ones(lat.add_r(fj.shift.gamma, u, -1), u);
      r.expect(p == want, detail::pair_label(gi, fj));
      if (&gi == &fj) r.expect(p != 0, gi.diagram.to_string() + " has zero diagonal");
    }
  return r;
}

inline CheckResult check_canf_minor_identity(const RepresentationBasis& b, const VerifyOptions& opt) {
  CheckResult r{"canf-minor-identity"};
  const auto mats = random_nonsingular_matrices(b.universe().rank(), opt.matrices, opt.seed);
  for (const auto& e : b.entries()) {
    const auto rep = terminating_representative(b.engine(), e.shift.gamma);
    if (!rep) {
      r.expect(false, e.diagram.to_string() + ": no representative with a finite canonical form");
      continue;
    }
    const auto diff = e.gamma_series - canonical_form(b.engine(), *rep);
    for (std::size_t m = 0; m < mats.size(); ++m)
      r.expect(evaluate_minors(diff, mats[m], b.universe()) == 0, e.diagram.to_string() + " matrix " + std::to_string(m));
  }
  return r;
}

/// diff_apply(Gamma_gamma, F_omega) against the expansion in F's, for seeded
/// pairs: omega a shift of this representation, gamma a shift of a smaller
/// one whose expansion is finite.
inline CheckResult check_osnf_identity(const RepresentationBasis& b, const VerifyOptions& opt) {
  CheckResult r{"osnf-identity"};
  const auto& lat = b.lattice();
  std::vector<ExponentVector> gammas;
  for (const auto& w : detail::smaller_weights(b.top_row()))
    for (const auto& d : enumerate_diagrams(w)) {
      auto g = lat.shift_from_diagram(d).gamma;
      try {
        canonical_coefficients(b.engine(), g);
        gammas.push_back(std::move(g));
      } catch (const std::domain_error&) {
      }
    }
  if (gammas.empty()) {
    r.status = CheckStatus::skipped;
    r.note = "no shift with a finite expansion";
    return r;
  }
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> pick_g(0, gammas.size() - 1), pick_w(0, b.size() - 1);
  for (int k = 0; k < opt.osnf_pairs; ++k) {
    const auto& gamma = gammas[pick_g(rng)];
    const auto& omega = b.entries()[pick_w(rng)];
    r.expect(diff_apply(b.engine().gamma_series(gamma), omega.F) == gamma_action_expansion(b.engine(), gamma, omega.shift.gamma),
             "gamma=" + gamma.to_string() + " omega=" + omega.diagram.to_string());
  }
  return r;
}

inline CheckResult check_coeff_crosscheck(const RepresentationBasis& b) {
  CheckResult r{"coeff-crosscheck"};
  const auto table = coefficient_table(b);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t k = 0; k < table.entries[i].orders.size(); ++k) {
      const auto& l = table.entries[i].orders[k];
      r.expect(table.entries[i].C[k] == coeff_C_alt(b.engine(), b.entries()[i].shift.gamma, l),
               b.entries()[i].diagram.to_string() + " l=" + to_string(l));
    }
  return r;
}

/// Rank 3 only: Gamma-series against the Gauss closed form, and G equal to a
/// multiple of the Gamma-series on seeded matrices.
inline CheckResult check_gl3_closed_form(const RepresentationBasis& b, const VerifyOptions& opt) {
  CheckResult r{"gl3-closed-form"};
  if (b.universe().rank() != 3) {
    r.status = CheckStatus::skipped;
    r.note = "rank is not 3";
    return r;
  }
  std::vector<Polynomial> g;
  try {
    g = gt_functions(b, coefficient_table(b));
  } catch (const DegenerateMetric& ex) {
    r.fail(ex.what());
    return r;
  }
  const auto mats = random_nonsingular_matrices(3, opt.matrices, opt.seed);
  for (std::size_t i = 0; i < b.size(); ++i) {
    const auto& e = b.entries()[i];
    r.expect(e.gamma_series == gauss_closed_form_gl3(e.diagram), e.diagram.to_string() + " Gauss series");
    // The scalar is fixed by the first matrix where the Gamma-series does not
    // vanish; lower-coset terms of G fold into it through Pluecker relations,
    // so the leading coefficient alone does not determine it.
    std::optional<Rational> scalar;
    for (std::size_t m = 0; m < mats.size(); ++m) {
      const Rational fv = evaluate_minors(e.gamma_series, mats[m], b.universe());
      const Rational gv = evaluate_minors(g[i], mats[m], b.universe());
      if (!scalar) {
        if (fv != 0) scalar = gv / fv;
        continue;
      }
      r.expect(gv == *scalar * fv, e.diagram.to_string() + " matrix " + std::to_string(m));
    }
    r.expect(scalar.has_value() && *scalar != 0, e.diagram.to_string() + " vanishes on every sample");
  }
  return r;
}

inline CheckResult run_check(const std::string& name, const RepresentationBasis& b, const VerifyOptions& opt) {
  if (name == "agkz-annihilation") return check_agkz_annihilation(b);
  if (name == "plucker-annihilation") return check_plucker_annihilation(b, opt);
  if (name == "gkz-homogeneity") return check_gkz_homogeneity(b);
  if (name == "pairing-invariance") return check_pairing_invariance(b, opt);
  if (name == "orthogonality") return check_orthogonality(b);
  if (name == "triangularity") return check_triangularity(b);
  if (name == "canf-minor-identity") return check_canf_minor_identity(b, opt);
  if (name == "osnf-identity") return check_osnf_identity(b, opt);
  if (name == "coeff-crosscheck") return check_coeff_crosscheck(b);
  if (name == "gl3-closed-form") return check_gl3_closed_form(b, opt);
  throw std::invalid_argument("unknown check '" + name + "'");
}

/// Runs the named checks concurrently; results come back in request order.
inline std::vector<CheckResult> run_checks(const std::vector<std::string>& names, const RepresentationBasis& b,
                                           const VerifyOptions& opt) {
  for (const auto& n : names)
    if (!is_check_name(n)) throw std::invalid_argument("unknown check '" + n + "'");
  std::vector<std::future<CheckResult>> jobs;
  for (const auto& n : names) jobs.push_back(std::async(std::launch::async, [&b, &opt, n] { return run_check(n, b, opt); }));
  std::vector<CheckResult> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace gtagkz
