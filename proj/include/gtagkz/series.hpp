#pragma once

// Gamma-series, Horn-type J series, the alternating sums F that solve the
// antisymmetrized system, and the paired variants used by the scalar product.

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "lattice.hpp"
#include "polyengine.hpp"

namespace gtagkz {

/// prod_a (t_a+1)...(t_a+s_a).
inline Integer rising_product(const MultiIndex& t, const MultiIndex& s) {
  Integer out = 1;
  for (std::size_t a = 0; a < s.size(); ++a) {
    if (s[a] == 0) continue;
    out *= rising_from(t[a], s[a]);
    if (out == 0) break;
  }
  return out;
}

inline long sign_of(long total) { return (total % 2 == 0) ? 1 : -1; }

/// Builds series over a fixed lattice. Results for F are memoized; the
/// object may be shared between threads.
class SeriesEngine {
public:
  explicit SeriesEngine(const GTLattice& lattice) : lattice_(lattice) {}

  const GTLattice& lattice() const { return lattice_; }
  int variables() const { return lattice_.dimension(); }

  /// sum over nonnegative points x of (gamma + B) of A^x / x!.
  Polynomial gamma_series(const ExponentVector& gamma) const {
    return j_series(gamma, lattice_.zero_multi());
  }

  /// sum_t prod (t+1)...(t+s) / (gamma+tv)! A^(gamma+tv).
  Polynomial j_series(const ExponentVector& gamma, const MultiIndex& s) const {
    check_nonnegative(s, "j_series");
    Polynomial out(variables());
    for (const auto& p : *lattice_.nonneg_points_cached(gamma)) {
      Integer num = rising_product(p.t, s);
      if (num == 0) continue;
      out.add_term(p.x, ratio(num, factorial(p.x)));
    }
    return out;
  }

  /// J^s_gamma(1) without building the polynomial.
  Rational j_value_at_ones(const ExponentVector& gamma, const MultiIndex& s) const {
    check_nonnegative(s, "j_value_at_ones");
    Rational out = 0;
    for (const auto& p : *lattice_.nonneg_points_cached(gamma)) {
      Integer num = rising_product(p.t, s);
      if (num != 0) out += ratio(num, factorial(p.x));
    }
    return out;
  }

  /// F_gamma = sum_{s >= 0} (-1)^|s| / s! J^s_{gamma - s.r}.
  Polynomial agkz_solution(const ExponentVector& gamma) const {
    {
      std::lock_guard lock(mutex_);
      auto it = f_cache_.find(gamma);
      if (it != f_cache_.end()) return *it->second;
    }
    Polynomial out(variables());
    for (const auto& s : lattice_.feasible_descents(gamma)) {
      Polynomial term = j_series(lattice_.add_r(gamma, s, -1), s);
      out += term * ratio(sign_of(total(s)), factorial(s));
    }
    std::lock_guard lock(mutex_);
    f_cache_.try_emplace(gamma, std::make_shared<const Polynomial>(out));
    return out;
  }

  /// J^{a;b}_delta = sum_t (t+1)...(t+a) (t+1)...(t+b) / ((delta+tv)! a! b!) A^(delta+tv).
  Polynomial j_pair_series(const ExponentVector& delta, const MultiIndex& a, const MultiIndex& b) const {
    check_nonnegative(a, "j_pair_series");
    check_nonnegative(b, "j_pair_series");
    const Integer norm = factorial(a) * factorial(b);
    Polynomial out(variables());
    for (const auto& p : *lattice_.nonneg_points_cached(delta)) {
      Integer num = rising_product(p.t, a) * rising_product(p.t, b);
      if (num == 0) continue;
      out.add_term(p.x, ratio(num, factorial(p.x) * norm));
    }
    return out;
  }

  /// F^{l1,l2}_delta = sum_{u >= 0} (-1)^{|l1|+|l2|} J^{u+l1;u+l2}_{delta - u.r}.
  Polynomial f_pair_series(const ExponentVector& delta, const MultiIndex& l1, const MultiIndex& l2) const {
    check_pair_indices(l1, l2);
    const long sign = sign_of(total(l1) + total(l2));
    Polynomial out(variables());
    for (const auto& u : lattice_.feasible_descents(delta)) {
      MultiIndex a = u, b = u;
      for (std::size_t i = 0; i < u.size(); ++i) {
        a[i] += l1[i];
        b[i] += l2[i];
      }
      out += j_pair_series(lattice_.add_r(delta, u, -1), a, b) * Rational(sign);
    }
    return out;
  }

  /// evaluate_at_ones(f_pair_series(...)) computed directly.
  Rational f_pair_value(const ExponentVector& delta, const MultiIndex& l1, const MultiIndex& l2) const {
    check_pair_indices(l1, l2);
    const long sign = sign_of(total(l1) + total(l2));
    Rational out = 0;
    for (const auto& u : lattice_.feasible_descents(delta)) {
      MultiIndex a = u, b = u;
      for (std::size_t i = 0; i < u.size(); ++i) {
        a[i] += l1[i];
        b[i] += l2[i];
      }
      const Integer norm = factorial(a) * factorial(b);
      for (const auto& p : *lattice_.nonneg_points_cached(lattice_.add_r(delta, u, -1))) {
        Integer num = rising_product(p.t, a) * rising_product(p.t, b);
        if (num != 0) out += ratio(num * sign, factorial(p.x) * norm);
      }
    }
    return out;
  }

private:
  void check_nonnegative(const MultiIndex& s, const char* who) const {
    if (static_cast<int>(s.size()) != lattice_.basis_size())
      throw std::invalid_argument(std::string(who) + ": multi-index has length " + std::to_string(s.size()) +
                                  ", expected " + std::to_string(lattice_.basis_size()));
    if (!is_nonnegative(s)) throw std::invalid_argument(std::string(who) + ": negative order " + to_string(s));
  }
  void check_pair_indices(const MultiIndex& l1, const MultiIndex& l2) const {
    check_nonnegative(l1, "f_pair_series");
    check_nonnegative(l2, "f_pair_series");
    for (std::size_t i = 0; i < l1.size(); ++i)
      if (l1[i] != 0 && l2[i] != 0)
        throw std::invalid_argument("f_pair_series: min(l1,l2) must vanish, got " + to_string(l1) + " and " +
                                    to_string(l2));
  }

  const GTLattice& lattice_;
  mutable std::mutex mutex_;
  mutable std::map<ExponentVector, std::shared_ptr<const Polynomial>> f_cache_;
};

}  // namespace gtagkz
