#pragma once

// gl(n) generators as first-order operators in the minor variables, the GKZ
// and antisymmetrized GKZ operators, Pluecker generators, and the
// representation membership test.

#include <stdexcept>
#include <string>

#include "lattice.hpp"
#include "polyengine.hpp"

namespace gtagkz {

inline void check_generator_indices(int i, int j, int n) {
  if (i < 1 || j < 1 || i > n || j > n)
    throw std::invalid_argument("generator indices (" + std::to_string(i) + "," + std::to_string(j) +
                                ") out of range for n=" + std::to_string(n));
}

/// E_{i,j} = sum_X sign * A_{iX} d/dA_{jX}, X avoiding i and j. Replacing
/// column j by i in a sorted column list costs the parity of the number of
/// elements of X strictly between i and j.
inline Polynomial e_action(int i, int j, const Polynomial& f, const SubsetUniverse& universe) {
  const int n = universe.rank();
  check_generator_indices(i, j, n);
  if (f.variables() != universe.dimension()) throw std::invalid_argument("e_action: dimension mismatch");
  Polynomial out(f.variables());
  if (i == j) {
    for (const auto& [e, c] : f.terms()) {
      long count = 0;
      for (int x = 0; x < e.dimension(); ++x)
        if (universe.subset(x).contains(i)) count += e[x];
      if (count != 0) out.add_term(e, c * count);
    }
    return out;
  }
  const int lo = std::min(i, j), hi = std::max(i, j);
  for (int from = 0; from < universe.dimension(); ++from) {
    const SubsetIndex source = universe.subset(from);
    if (!source.contains(j) || source.contains(i)) continue;
    const SubsetIndex rest = source.without(j);
    int between = 0;
    for (int e : rest.elements())
      if (e > lo && e < hi) ++between;
    const int to = universe.index_of(rest.with(i));
    const long sign = (between % 2 == 0) ? 1 : -1;
    for (const auto& [e, c] : f.terms()) {
      if (e[from] == 0) continue;
      ExponentVector moved = e;
      moved[from] -= 1;
      moved[to] += 1;
      out.add_term(moved, c * (sign * e[from]));
    }
  }
  return out;
}

/// sum_X chi_p^q(X) A_X d/dA_X.
inline Polynomial homogeneity_apply(int p, int q, const Polynomial& f, const SubsetUniverse& universe) {
  check_chi_indices(p, q, universe.rank());
  Polynomial out(f.variables());
  for (const auto& [e, c] : f.terms()) {
    long weight = 0;
    for (int x = 0; x < e.dimension(); ++x)
      if (universe.subset(x).count_at_most(q) >= p) weight += e[x];
    if (weight != 0) out.add_term(e, c * weight);
  }
  return out;
}

inline const LatticeBasisVector& basis_vector(const GTLattice& lattice, int alpha) {
  if (alpha < 1 || alpha > lattice.basis_size())
    throw std::invalid_argument("lattice index " + std::to_string(alpha) + " out of range 1.." +
                                std::to_string(lattice.basis_size()));
  return lattice.basis()[alpha - 1];
}

/// d^2/dA^{v+} - d^2/dA^{v-}; alpha counts from 1.
inline Polynomial gkz_apply(const GTLattice& lattice, int alpha, const Polynomial& f) {
  const auto& b = basis_vector(lattice, alpha);
  return f.differentiate(b.v_plus) - f.differentiate(b.v_minus);
}

/// GKZ operator plus d^2/dA^{v0}.
inline Polynomial agkz_apply(const GTLattice& lattice, int alpha, const Polynomial& f) {
  const auto& b = basis_vector(lattice, alpha);
  return gkz_apply(lattice, alpha, f) + f.differentiate(b.v_zero);
}

/// A^{v+} - A^{v-} + A^{v0}.
inline Polynomial plucker_generator(const GTLattice& lattice, int alpha) {
  const auto& b = basis_vector(lattice, alpha);
  return Polynomial::monomial(b.v_plus) - Polynomial::monomial(b.v_minus) + Polynomial::monomial(b.v_zero);
}

/// Highest vector prod_i A_{1..i}^{m_i - m_{i+1}} / (m_i - m_{i+1})!.
inline Polynomial highest_vector(const Weight& top_row, const SubsetUniverse& universe) {
  const int n = universe.rank();
  if (top_row.size() != n) throw std::invalid_argument("highest_vector: weight length mismatch");
  ExponentVector e(universe.dimension());
  for (int i = 1; i <= n; ++i) {
    long next = (i < n) ? top_row[i] : 0;
    e[universe.index_of(initial_segment(i))] = top_row[i - 1] - next;
  }
  if (!e.is_nonnegative()) throw std::invalid_argument("highest_vector: weight is not dominant");
  return Polynomial::monomial(e, ratio(1, factorial(e)));
}

/// Every monomial has total degree m_i - m_{i+1} in the minors of order i.
inline bool membership_check(const Polynomial& f, const Weight& top_row, const SubsetUniverse& universe) {
  const int n = universe.rank();
  if (top_row.size() != n) throw std::invalid_argument("membership_check: weight length mismatch");
  for (const auto& [e, c] : f.terms()) {
    std::vector<long> by_order(n + 1, 0);
    for (int x = 0; x < e.dimension(); ++x) by_order[universe.subset(x).cardinality()] += e[x];
    for (int i = 1; i <= n; ++i) {
      long next = (i < n) ? top_row[i] : 0;
      if (by_order[i] != top_row[i - 1] - next) return false;
    }
  }
  return true;
}

}  // namespace gtagkz
