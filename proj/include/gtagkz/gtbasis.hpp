#pragma once

// The representation spanned by the A-GKZ solutions F, its Gram matrix, the
// triangular coefficients C and S, the Gelfand-Tsetlin functions G, the
// canonical form of a Gamma-series modulo Pluecker generators, and an
// independent Lagrange diagonalization used for cross-checking.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "operators.hpp"
#include "series.hpp"

namespace gtagkz {

class DegenerateMetric : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct BasisEntry {
  GTDiagram diagram;
  ShiftVector shift;
  Polynomial F;            // A-GKZ solution
  Polynomial gamma_series;  // plain Gamma-series of the same coset
};

/// Enumerates every s >= 0 with s <= bound componentwise.
template <class Visit>
void for_each_below(const MultiIndex& bound, const Visit& visit) {
  MultiIndex s(bound.size(), 0);
  while (true) {
    visit(static_cast<const MultiIndex&>(s));
    std::size_t i = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < bound[i]) {
        ++s[i];
        break;
      }
      s[i] = 0;
    }
    if (i == s.size()) return;
  }
}

inline MultiIndex add(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}
inline MultiIndex subtract(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

/// All diagrams of one irreducible representation with their canonical
/// shift vectors and series. Owns its lattice and series engine.
class RepresentationBasis {
public:
  static std::unique_ptr<RepresentationBasis> build(const Weight& top_row) {
    return std::unique_ptr<RepresentationBasis>(new RepresentationBasis(top_row));
  }

  const Weight& top_row() const { return top_row_; }
  const GTLattice& lattice() const { return *lattice_; }
  const SeriesEngine& engine() const { return *engine_; }
  const SubsetUniverse& universe() const { return lattice_->universe(); }
  const std::vector<BasisEntry>& entries() const { return entries_; }
  /// Diagnostics for diagrams whose shift vector depended on a choice of
  /// r-witness; empty when every choice was forced.
  const std::vector<std::string>& ambiguities() const { return ambiguities_; }
  std::size_t size() const { return entries_.size(); }

  std::optional<std::size_t> index_of(const GTDiagram& d) const {
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (entries_[i].diagram == d) return i;
    return std::nullopt;
  }

  /// below(i, j): the coset of entry i lies below that of entry j.
  bool below(std::size_t i, std::size_t j) const { return below_[i][j]; }

  /// Entries ordered so that every entry follows those below it; ties by
  /// diagram order.
  std::vector<std::size_t> triangular_order() const {
    const std::size_t n = entries_.size();
    std::vector<std::size_t> out;
    std::vector<bool> placed(n, false);
    while (out.size() < n) {
      std::optional<std::size_t> next;
      for (std::size_t i = 0; i < n; ++i) {
        if (placed[i]) continue;
        bool ready = true;
        for (std::size_t j = 0; j < n && ready; ++j)
          if (!placed[j] && j != i && below_[j][i]) ready = false;
        if (ready && (!next || entries_[i].diagram < entries_[*next].diagram)) next = i;
      }
      if (!next) throw std::logic_error("order on shift cosets has a cycle");
      placed[*next] = true;
      out.push_back(*next);
    }
    return out;
  }

private:
  explicit RepresentationBasis(const Weight& top_row)
      : top_row_(top_row),
        lattice_(std::make_unique<GTLattice>(top_row.size())),
        engine_(std::make_unique<SeriesEngine>(*lattice_)) {
    auto diagrams = enumerate_diagrams(top_row);
    const SeriesEngine& engine = *engine_;
    auto shifts = canonical_shifts(*lattice_, diagrams, [&engine](const ExponentVector& a, const ExponentVector& b) {
      return engine.agkz_solution(a) == engine.agkz_solution(b);
    }, &ambiguities_);
    for (std::size_t i = 0; i < diagrams.size(); ++i) {
      const auto& gamma = shifts[i].gamma;
      entries_.push_back(BasisEntry{diagrams[i], shifts[i], engine.agkz_solution(gamma), engine.gamma_series(gamma)});
    }
    const std::size_t n = entries_.size();
    below_.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) below_[i][j] = lattice_->coset_leq(shifts[i].gamma, shifts[j].gamma).has_value();
  }

  Weight top_row_;
  std::unique_ptr<GTLattice> lattice_;
  std::unique_ptr<SeriesEngine> engine_;
  std::vector<BasisEntry> entries_;
  std::vector<std::vector<bool>> below_;
  std::vector<std::string> ambiguities_;
};

using RationalTable = std::vector<std::vector<Rational>>;

/// Gram matrix of the F basis under the pairing.
inline RationalTable gram_matrix(const RepresentationBasis& basis) {
  const std::size_t n = basis.size();
  RationalTable g(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      g[i][j] = pair(basis.entries()[i].F, basis.entries()[j].F);
      g[j][i] = g[i][j];
    }
  return g;
}

inline Rational determinant(const RationalTable& m) {
  const int n = static_cast<int>(m.size());
  std::vector<Rational> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : m) flat.insert(flat.end(), row.begin(), row.end());
  return RationalMatrix::determinant(std::move(flat), n);
}

/// C_delta^l = F^{l,0}_{delta - l.r}(1).
inline Rational coeff_C(const SeriesEngine& engine, const ExponentVector& delta, const MultiIndex& l) {
  const auto& lattice = engine.lattice();
  return engine.f_pair_value(lattice.add_r(delta, l, -1), l, lattice.zero_multi());
}

/// Horn-type finite sum for C_delta^l obtained by expanding the product of two
/// rising factorials into single ones:
/// (-1)^|l| sum_u sum_{0<=s<=u} (-1)^|u-s| J^{l+u+s}_{delta-(l+u)r}(1) / ((l+s)! s! (u-s)!).
inline Rational coeff_C_alt(const SeriesEngine& engine, const ExponentVector& delta, const MultiIndex& l) {
  const auto& lattice = engine.lattice();
  const ExponentVector base = lattice.add_r(delta, l, -1);
  Rational out = 0;
  for (const auto& u : lattice.feasible_descents(base)) {
    const ExponentVector at = lattice.add_r(base, u, -1);
    for_each_below(u, [&](const MultiIndex& s) {
      const MultiIndex ls = add(l, s);
      const MultiIndex us = subtract(u, s);
      Rational j = engine.j_value_at_ones(at, add(ls, u));
      if (j == 0) return;
      out += j * ratio(sign_of(total(l) + total(us)), factorial(ls) * factorial(s) * factorial(us));
    });
  }
  return out;
}

/// The same finite sum with uniform coefficients (-1)^{|l|+|u|} / (l+u+s)!.
/// Kept for comparison; it disagrees with coeff_C once second-order terms
/// contribute.
inline Rational coeff_C_uniform(const SeriesEngine& engine, const ExponentVector& delta, const MultiIndex& l) {
  const auto& lattice = engine.lattice();
  const ExponentVector base = lattice.add_r(delta, l, -1);
  Rational out = 0;
  for (const auto& u : lattice.feasible_descents(base)) {
    const ExponentVector at = lattice.add_r(base, u, -1);
    for_each_below(u, [&](const MultiIndex& s) {
      const MultiIndex order = add(add(l, u), s);
      Rational j = engine.j_value_at_ones(at, order);
      if (j != 0) out += j * ratio(sign_of(total(l) + total(u)), factorial(order));
    });
  }
  return out;
}

/// C and S coefficients for one entry: l runs over the feasible descents of
/// its shift vector.
struct EntryCoefficients {
  std::vector<MultiIndex> orders;  // orders[0] is zero
  std::vector<Rational> C;
  std::vector<Rational> S;
};

struct CoefficientTable {
  std::vector<EntryCoefficients> entries;
};

inline Rational coeff_S(const Rational& c_delta_l, const Rational& c_delta_0, const Rational& c_lower_0, bool zero_order) {
  if (c_delta_0 == 0) throw DegenerateMetric("C_delta^0 vanishes");
  if (zero_order) return 1 / c_delta_0;
  if (c_lower_0 == 0) throw DegenerateMetric("C^0 of a lower shift vanishes");
  return -c_delta_l / (c_delta_0 * c_lower_0);
}

inline CoefficientTable coefficient_table(const RepresentationBasis& basis) {
  const auto& engine = basis.engine();
  const auto& lattice = basis.lattice();
  CoefficientTable table;
  for (const auto& e : basis.entries()) {
    EntryCoefficients ec;
    const auto& delta = e.shift.gamma;
    ec.orders = lattice.feasible_descents(delta);
    if (ec.orders.empty() || ec.orders.front() != lattice.zero_multi())
      throw std::logic_error("shift " + delta.to_string() + " has no nonnegative point");
    for (const auto& l : ec.orders) ec.C.push_back(coeff_C(engine, delta, l));
    const Rational c0 = ec.C.front();
    if (c0 == 0) throw DegenerateMetric("C_delta^0 vanishes for diagram " + e.diagram.to_string());
    for (std::size_t i = 0; i < ec.orders.size(); ++i) {
      if (i == 0) {
        ec.S.push_back(coeff_S(ec.C[0], c0, c0, true));
        continue;
      }
      const Rational lower0 = coeff_C(engine, lattice.add_r(delta, ec.orders[i], -1), lattice.zero_multi());
      ec.S.push_back(coeff_S(ec.C[i], c0, lower0, false));
    }
    table.entries.push_back(std::move(ec));
  }
  return table;
}

/// G_delta = sum_l S_delta^l F_{delta - l.r}.
inline Polynomial gt_function(const RepresentationBasis& basis, const CoefficientTable& table, std::size_t index) {
  const auto& lattice = basis.lattice();
  const auto& engine = basis.engine();
  const auto& delta = basis.entries().at(index).shift.gamma;
  const auto& ec = table.entries.at(index);
  Polynomial out(lattice.dimension());
  for (std::size_t i = 0; i < ec.orders.size(); ++i) {
    if (ec.S[i] == 0) continue;
    out += engine.agkz_solution(lattice.add_r(delta, ec.orders[i], -1)) * ec.S[i];
  }
  return out;
}

inline std::vector<Polynomial> gt_functions(const RepresentationBasis& basis, const CoefficientTable& table) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < basis.size(); ++i) out.push_back(gt_function(basis, table, i));
  return out;
}

/// Gram-Schmidt without normalization along triangular_order(); the result
/// is indexed like basis.entries().
inline std::vector<Polynomial> lagrange_orthogonalize(const RepresentationBasis& basis) {
  const auto order = basis.triangular_order();
  std::vector<Polynomial> out(basis.size(), Polynomial(basis.lattice().dimension()));
  std::vector<std::size_t> done;
  std::vector<Rational> norms(basis.size());
  for (std::size_t i : order) {
    Polynomial w = basis.entries()[i].F;
    for (std::size_t j : done) {
      Rational c = pair(basis.entries()[i].F, out[j]);
      if (c != 0) w -= out[j] * (c / norms[j]);
    }
    norms[i] = pair(w, w);
    if (norms[i] == 0) throw DegenerateMetric("isotropic vector at diagram " + basis.entries()[i].diagram.to_string());
    out[i] = std::move(w);
    done.push_back(i);
  }
  return out;
}

/// Proportionality constant c with f = c g, if one exists.
inline std::optional<Rational> proportionality(const Polynomial& f, const Polynomial& g) {
  if (f.size() != g.size()) return std::nullopt;
  if (g.is_zero()) return f.is_zero() ? std::optional<Rational>(0) : std::nullopt;
  const Rational c = f.terms().begin()->second / g.terms().begin()->second;
  if (f == g * c) return c;
  return std::nullopt;
}

/// The orders s that contribute to sum_s (-1)^|s| / s! J^s_{gamma+v}(1) ...
/// with their coefficients. Finite only when every point of (gamma+v)+B has
/// all t_a < 0; otherwise throws std::domain_error.
inline std::vector<std::pair<MultiIndex, Rational>> canonical_coefficients(const SeriesEngine& engine,
                                                                           const ExponentVector& gamma) {
  const auto& lattice = engine.lattice();
  const ExponentVector shifted = gamma + lattice.v_sum();
  const auto& points = *lattice.nonneg_points_cached(shifted);
  std::vector<std::pair<MultiIndex, Rational>> out;
  if (points.empty()) return out;
  MultiIndex bound(lattice.basis_size(), 0);
  for (const auto& p : points)
    for (int a = 0; a < lattice.basis_size(); ++a) {
      if (p.t[a] >= 0)
        throw std::domain_error("canonical form of " + gamma.to_string() + " is an infinite series");
      bound[a] = std::max(bound[a], -p.t[a] - 1);
    }
  for_each_below(bound, [&](const MultiIndex& s) {
    Rational j = engine.j_value_at_ones(shifted, s);
    if (j != 0) out.emplace_back(s, j * ratio(sign_of(total(s)), factorial(s)));
  });
  return out;
}

/// True when canonical_form(gamma) is a finite polynomial.
inline bool canonical_form_terminates(const SeriesEngine& engine, const ExponentVector& gamma) {
  try {
    const auto& lattice = engine.lattice();
    for (const auto& [s, c] : canonical_coefficients(engine, gamma))
      if (!lattice.add_r(gamma, s).is_nonnegative()) return false;
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

/// A representative of gamma + B whose canonical form terminates: gamma
/// itself if possible, otherwise the first nonnegative point of the coset
/// that works. Returns nothing if none does.
inline std::optional<ExponentVector> terminating_representative(const SeriesEngine& engine,
                                                                const ExponentVector& gamma) {
  if (canonical_form_terminates(engine, gamma)) return gamma;
  for (const auto& p : *engine.lattice().nonneg_points_cached(gamma))
    if (canonical_form_terminates(engine, p.x)) return p.x;
  return std::nullopt;
}

/// sum_s (-1)^|s| / s! J^s_{gamma+v}(1) A^{gamma+s.r}, v the sum of all basis
/// vectors. Throws std::domain_error if a contributing exponent is negative.
inline Polynomial canonical_form(const SeriesEngine& engine, const ExponentVector& gamma) {
  const auto& lattice = engine.lattice();
  Polynomial out(lattice.dimension());
  for (const auto& [s, c] : canonical_coefficients(engine, gamma)) {
    ExponentVector e = lattice.add_r(gamma, s);
    if (!e.is_nonnegative()) throw std::domain_error("canonical form has the negative exponent " + e.to_string());
    out.add_term(e, c);
  }
  return out;
}

/// sum_s (-1)^|s| / s! J^s_{gamma+v}(1) F_{omega - gamma - s.r}: the action of
/// the Gamma-series of gamma on F_omega.
inline Polynomial gamma_action_expansion(const SeriesEngine& engine, const ExponentVector& gamma,
                                         const ExponentVector& omega) {
  const auto& lattice = engine.lattice();
  Polynomial out(lattice.dimension());
  for (const auto& [s, c] : canonical_coefficients(engine, gamma))
    out += engine.agkz_solution(omega - lattice.add_r(gamma, s)) * c;
  return out;
}

struct SummaryRow {
  GTDiagram diagram;
  Weight weight;
  Rational norm;  // <G,G>
};

inline std::vector<SummaryRow> summary_table(const RepresentationBasis& basis, const std::vector<Polynomial>& g) {
  std::vector<SummaryRow> out;
  for (std::size_t i = 0; i < basis.size(); ++i)
    out.push_back({basis.entries()[i].diagram, diagram_weight(basis.entries()[i].diagram), pair(g[i], g[i])});
  return out;
}

}  // namespace gtagkz
