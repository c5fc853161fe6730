#pragma once

// The lattice B of integer vectors killed by every counting functional, its
// fixed basis, shifted lattices attached to diagrams, the order generated by
// the r vectors, and enumeration of nonnegative points of a shifted lattice.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "combinatorics.hpp"
#include "exact.hpp"
#include "exponent.hpp"

namespace gtagkz {

/// v_{i,j,x,X} together with the split v = v+ - v-, the vector v0 and
/// r = v0 - v+. All index sets carry the prefix {1..i-1}.
struct LatticeBasisVector {
  int i = 0;
  int j = 0;
  int x = 0;
  SubsetIndex tail;  // X; every element exceeds x
  ExponentVector v, v_plus, v_minus, v_zero, r;

  std::string label() const {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(x) + ",{" + tail.to_string() + "})";
  }
};

/// Deterministic basis: for i < j and nonempty Y in {j+1..n} (canonical
/// order), x = min Y and X = Y \ {x}. Empty for n <= 2.
inline std::vector<LatticeBasisVector> lattice_basis(const SubsetUniverse& universe) {
  const int n = universe.rank();
  const int dim = universe.dimension();
  std::vector<LatticeBasisVector> out;
  for (int i = 1; i <= n - 2; ++i) {
    const SubsetIndex prefix = initial_segment(i - 1);
    for (int j = i + 1; j <= n - 1; ++j) {
      std::vector<SubsetIndex> tails;
      for (std::uint32_t m = 1; m < (1u << (n - j)); ++m) tails.emplace_back(m << j);
      std::sort(tails.begin(), tails.end());
      for (SubsetIndex y : tails) {
        LatticeBasisVector b;
        b.i = i;
        b.j = j;
        b.x = y.min_element();
        b.tail = y.without(b.x);
        const SubsetIndex base = prefix.unite(b.tail);
        auto e = [&](SubsetIndex s) { return ExponentVector::unit(dim, universe.index_of(s)); };
        const auto iX = e(base.with(i));
        const auto jX = e(base.with(j));
        const auto ixX = e(base.with(i).with(b.x));
        const auto jxX = e(base.with(j).with(b.x));
        const auto xX = e(base.with(b.x));
        const auto ijX = e(base.with(i).with(j));
        b.v = iX - jX - ixX + jxX;
        b.v_plus = iX + jxX;
        b.v_minus = jX + ixX;
        b.v_zero = xX + ijX;
        b.r = b.v_zero - b.v_plus;
        out.push_back(std::move(b));
      }
    }
  }
  return out;
}

inline std::vector<LatticeBasisVector> lattice_basis(int n) { return lattice_basis(SubsetUniverse(n)); }

/// sum_X chi(p,q,X) v_X.
inline long chi_apply(int p, int q, const ExponentVector& v, const SubsetUniverse& universe) {
  check_chi_indices(p, q, universe.rank());
  if (v.dimension() != universe.dimension())
    throw std::invalid_argument("chi_apply: vector has dimension " + std::to_string(v.dimension()) + ", expected " +
                                std::to_string(universe.dimension()));
  long out = 0;
  for (int c = 0; c < v.dimension(); ++c)
    if (universe.subset(c).count_at_most(q) >= p) out += v[c];
  return out;
}

struct ShiftVector {
  ExponentVector gamma;
  GTDiagram diagram;
};

/// A nonnegative point x = gamma + sum_a t_a v^a of a shifted lattice.
struct LatticePoint {
  ExponentVector x;
  MultiIndex t;
};

class AmbiguousMinimum : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// All lattice data for a fixed n. Immutable after construction apart from
/// the internal point cache, which is guarded by a mutex.
class GTLattice {
public:
  explicit GTLattice(int n) : universe_(n), basis_(lattice_basis(universe_)), pairs_(chi_pairs(n)) {
    build_chi_rows();
    build_coordinate_solver();
    build_descent_order();
  }

  GTLattice(const GTLattice&) = delete;
  GTLattice& operator=(const GTLattice&) = delete;

  int rank() const { return universe_.rank(); }
  int dimension() const { return universe_.dimension(); }
  int basis_size() const { return static_cast<int>(basis_.size()); }
  const SubsetUniverse& universe() const { return universe_; }
  const std::vector<LatticeBasisVector>& basis() const { return basis_; }
  const std::vector<std::pair<int, int>>& chi_index_pairs() const { return pairs_; }

  ExponentVector zero() const { return ExponentVector(dimension()); }
  MultiIndex zero_multi() const { return MultiIndex(basis_size(), 0); }

  long chi_apply(int p, int q, const ExponentVector& v) const { return gtagkz::chi_apply(p, q, v, universe_); }

  /// All counting-functional values, in chi_pairs order.
  std::vector<long> chi_image(const ExponentVector& v) const {
    check_dimension(v);
    std::vector<long> out(pairs_.size(), 0);
    for (int c = 0; c < dimension(); ++c) {
      if (v[c] == 0) continue;
      for (int row : rows_containing_[c]) out[row] += v[c];
    }
    return out;
  }

  /// The diagram m(p,q) = chi_p^q(v) read off a vector.
  GTDiagram diagram_of(const ExponentVector& v) const {
    auto image = chi_image(v);
    std::vector<std::vector<long>> rows(rank());
    for (int q = 1; q <= rank(); ++q)
      for (int p = 1; p <= q; ++p) rows[q - 1].push_back(image[chi_pair_index(p, q)]);
    return GTDiagram(std::move(rows));
  }

  bool in_lattice(const ExponentVector& v) const {
    for (long c : chi_image(v))
      if (c != 0) return false;
    return true;
  }

  bool same_coset(const ExponentVector& a, const ExponentVector& b) const { return chi_image(a) == chi_image(b); }

  /// gamma + sum_a s_a r^a.
  ExponentVector add_r(const ExponentVector& gamma, const MultiIndex& s, long sign = 1) const {
    check_multi(s);
    ExponentVector out = gamma;
    for (int a = 0; a < basis_size(); ++a)
      if (s[a] != 0) out += (sign * s[a]) * basis_[a].r;
    return out;
  }

  /// gamma + sum_a t_a v^a.
  ExponentVector add_v(const ExponentVector& gamma, const MultiIndex& t) const {
    check_multi(t);
    ExponentVector out = gamma;
    for (int a = 0; a < basis_size(); ++a)
      if (t[a] != 0) out += t[a] * basis_[a].v;
    return out;
  }

  /// sum_a v^a.
  ExponentVector v_sum() const { return add_v(zero(), MultiIndex(basis_size(), 1)); }

  /// Coordinates t of b in the basis. Throws if b is not in B.
  MultiIndex lattice_coordinates(const ExponentVector& b) const {
    check_dimension(b);
    MultiIndex t(basis_size(), 0);
    for (int a = 0; a < basis_size(); ++a) {
      Rational acc = 0;
      for (int c = 0; c < basis_size(); ++c) acc += inverse_[a][c] * b[pivot_rows_[c]];
      if (acc.get_den() != 1) throw std::invalid_argument("vector is not in the lattice: " + b.to_string());
      t[a] = acc.get_num().get_si();
    }
    if (add_v(zero(), t) != b) throw std::invalid_argument("vector is not in the lattice: " + b.to_string());
    return t;
  }

  /// Integer solution of chi_p^q(gamma) = m(p,q) supported on the staircase
  /// coordinates {1..p-1} u {q}; for n = 3 this is the classical gl3 shift.
  ShiftVector shift_from_diagram(const GTDiagram& d) const {
    if (d.rank() != rank()) throw std::invalid_argument("shift_from_diagram: diagram rank mismatch");
    const int n = rank();
    ExponentVector gamma(dimension());
    long higher_levels = 0;  // sum of coefficients already placed at levels > p
    for (int p = n; p >= 1; --p) {
      long level_total = 0;
      for (int q = p; q <= n; ++q) {
        long c = (q == p) ? d.m(p, p) - higher_levels : d.m(p, q) - d.m(p, q - 1);
        gamma[universe_.index_of(initial_segment(p - 1).with(q))] += c;
        level_total += c;
      }
      higher_levels += level_total;
    }
    for (int q = 1; q <= n; ++q)
      for (int p = 1; p <= q; ++p)
        if (chi_apply(p, q, gamma) != d.m(p, q))
          throw std::logic_error("shift_from_diagram: staircase solve failed for " + d.to_string());
    return ShiftVector{std::move(gamma), d};
  }

  /// Every s >= 0 with gamma + s.r = delta (mod B), in depth-first order.
  std::vector<MultiIndex> coset_leq_witnesses(const ExponentVector& gamma, const ExponentVector& delta) const {
    auto a = chi_image(gamma);
    auto b = chi_image(delta);
    std::vector<long> target(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) target[i] = b[i] - a[i];
    std::vector<MultiIndex> out;
    MultiIndex s(basis_size(), 0);
    std::vector<long> used(pairs_.size(), 0);  // sum_a s_a chi(r^a)
    search_r_combinations(0, s, used, [&](const std::vector<long>& img) { return img == target; },
                          [&](const std::vector<long>& img, int row) { return target[row] - img[row]; },
                          [&](const MultiIndex& found) {
                            out.push_back(found);
                            return true;
                          });
    return out;
  }

  /// A witness s >= 0 for gamma + B <= delta + B, or nothing.
  std::optional<MultiIndex> coset_leq(const ExponentVector& gamma, const ExponentVector& delta) const {
    auto all = coset_leq_witnesses(gamma, delta);
    if (all.empty()) return std::nullopt;
    return all.front();
  }

  /// Points of (gamma + B) with nonnegative coordinates, ordered by t.
  std::shared_ptr<const std::vector<LatticePoint>> nonneg_points_cached(const ExponentVector& gamma) const {
    check_dimension(gamma);
    {
      std::lock_guard lock(cache_mutex_);
      auto it = point_cache_.find(gamma);
      if (it != point_cache_.end()) return it->second;
    }
    auto computed = std::make_shared<const std::vector<LatticePoint>>(enumerate_points(gamma));
    std::lock_guard lock(cache_mutex_);
    return point_cache_.try_emplace(gamma, std::move(computed)).first->second;
  }

  std::vector<ExponentVector> nonneg_points(const ExponentVector& gamma) const {
    std::vector<ExponentVector> out;
    for (const auto& p : *nonneg_points_cached(gamma)) out.push_back(p.x);
    return out;
  }

  bool has_nonneg_point(const ExponentVector& gamma) const { return !nonneg_points_cached(gamma)->empty(); }

  /// Necessary conditions on the counting values of a vector for its shifted
  /// lattice to meet the nonnegative orthant: values are nonnegative and obey
  /// betweenness.
  bool admissible_image(const std::vector<long>& img) const {
    const int n = rank();
    for (long v : img)
      if (v < 0) return false;
    for (int q = 1; q < n; ++q)
      for (int p = 1; p <= q; ++p) {
        long here = img[chi_pair_index(p, q)];
        if (img[chi_pair_index(p, q + 1)] < here || here < img[chi_pair_index(p + 1, q + 1)]) return false;
      }
    return true;
  }

  /// Every s >= 0 such that (gamma - s.r) + B has a nonnegative point. Finite
  /// because each r^a strictly moves one counting value at the lowest level
  /// it touches.
  std::vector<MultiIndex> feasible_descents(const ExponentVector& gamma) const {
    const auto base = chi_image(gamma);
    std::vector<MultiIndex> out;
    MultiIndex s(basis_size(), 0);
    std::vector<long> used(pairs_.size(), 0);
    auto image_of = [&](const std::vector<long>& u) {
      std::vector<long> img(base.size());
      for (std::size_t i = 0; i < base.size(); ++i) img[i] = base[i] - u[i];
      return img;
    };
    search_r_combinations(
        0, s, used, [&](const std::vector<long>& u) { return admissible_image(image_of(u)); },
        [&](const std::vector<long>& u, int row) { return base[row] - u[row]; },
        [&](const MultiIndex& found) {
          if (has_nonneg_point(add_r(gamma, found, -1))) out.push_back(found);
          return true;
        });
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Counting values of r^a, in chi_pairs order.
  const std::vector<long>& r_image(int a) const { return r_images_.at(a); }

private:
  void check_dimension(const ExponentVector& v) const {
    if (v.dimension() != dimension())
      throw std::invalid_argument("vector dimension " + std::to_string(v.dimension()) + " does not match " +
                                  std::to_string(dimension()));
  }
  void check_multi(const MultiIndex& s) const {
    if (static_cast<int>(s.size()) != basis_size())
      throw std::invalid_argument("multi-index length " + std::to_string(s.size()) + " does not match k=" +
                                  std::to_string(basis_size()));
  }

  void build_chi_rows() {
    rows_containing_.assign(dimension(), {});
    for (int c = 0; c < dimension(); ++c)
      for (std::size_t row = 0; row < pairs_.size(); ++row)
        if (universe_.subset(c).count_at_most(pairs_[row].second) >= pairs_[row].first)
          rows_containing_[c].push_back(static_cast<int>(row));
    for (const auto& b : basis_) r_images_.push_back(chi_image(b.r));
  }

  // Picks k coordinates on which the basis matrix is invertible and stores the
  // inverse, so t can be recovered from any lattice vector.
  void build_coordinate_solver() {
    const int k = basis_size();
    const int dim = dimension();
    std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(k));
    for (int c = 0; c < dim; ++c)
      for (int a = 0; a < k; ++a) m[c][a] = basis_[a].v[c];
    // Row echelon on a copy to choose rows.
    auto work = m;
    std::vector<int> chosen;
    std::vector<bool> used(dim, false);
    for (int col = 0; col < k; ++col) {
      int pivot = -1;
      for (int row = 0; row < dim; ++row)
        if (!used[row] && work[row][col] != 0) {
          pivot = row;
          break;
        }
      if (pivot < 0) throw std::logic_error("lattice basis is not linearly independent");
      used[pivot] = true;
      chosen.push_back(pivot);
      for (int row = 0; row < dim; ++row) {
        if (row == pivot || work[row][col] == 0) continue;
        Rational f = work[row][col] / work[pivot][col];
        for (int c = col; c < k; ++c) work[row][c] -= f * work[pivot][c];
      }
    }
    pivot_rows_ = chosen;
    // Invert the k x k submatrix by Gauss-Jordan.
    std::vector<std::vector<Rational>> a(k, std::vector<Rational>(2 * k));
    for (int r = 0; r < k; ++r) {
      for (int c = 0; c < k; ++c) a[r][c] = m[chosen[r]][c];
      a[r][k + r] = 1;
    }
    for (int col = 0; col < k; ++col) {
      int pivot = col;
      while (pivot < k && a[pivot][col] == 0) ++pivot;
      if (pivot == k) throw std::logic_error("singular coordinate block");
      std::swap(a[pivot], a[col]);
      Rational inv = 1 / a[col][col];
      for (auto& x : a[col]) x *= inv;
      for (int r = 0; r < k; ++r) {
        if (r == col || a[r][col] == 0) continue;
        Rational f = a[r][col];
        for (int c = 0; c < 2 * k; ++c) a[r][c] -= f * a[col][c];
      }
    }
    inverse_.assign(k, std::vector<Rational>(k));
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) inverse_[r][c] = a[r][k + c];

    coords_of_.assign(k, {});
    entries_of_coordinate_.assign(dim, {});
    for (int a2 = 0; a2 < k; ++a2)
      for (int c = 0; c < dim; ++c)
        if (basis_[a2].v[c] != 0) {
          coords_of_[a2].push_back(c);
          entries_of_coordinate_[c].emplace_back(a2, basis_[a2].v[c]);
        }
  }

  // Search order for combinations of r vectors: highest level i first. Each
  // basis vector gets a pivot row on which its own r has a positive value and
  // every later vector in the order is nonnegative, which bounds s_a by the
  // remaining budget on that row.
  void build_descent_order() {
    const int k = basis_size();
    descent_order_.resize(k);
    std::iota(descent_order_.begin(), descent_order_.end(), 0);
    std::stable_sort(descent_order_.begin(), descent_order_.end(),
                     [&](int a, int b) { return basis_[a].i > basis_[b].i; });
    pivot_row_.assign(k, -1);
    for (int pos = 0; pos < k; ++pos) {
      const int a = descent_order_[pos];
      for (std::size_t row = 0; row < pairs_.size() && pivot_row_[a] < 0; ++row) {
        if (r_images_[a][row] <= 0) continue;
        bool ok = true;
        for (int later = pos + 1; later < k && ok; ++later)
          if (r_images_[descent_order_[later]][row] < 0) ok = false;
        if (ok) pivot_row_[a] = static_cast<int>(row);
      }
      if (pivot_row_[a] < 0) throw std::logic_error("no bounding row for r" + basis_[a].label());
    }
  }

  // Depth-first over s >= 0 in descent order. `budget(used,row)` is the
  // largest value still allowed for sum of the unfixed contributions on a
  // pivot row; `accept` filters leaves; `emit` receives them.
  template <class Accept, class Budget, class Emit>
  void search_r_combinations(int pos, MultiIndex& s, std::vector<long>& used, const Accept& accept,
                             const Budget& budget, const Emit& emit) const {
    if (pos == basis_size()) {
      if (accept(used)) emit(s);
      return;
    }
    const int a = descent_order_[pos];
    const int row = pivot_row_[a];
    const long per = r_images_[a][row];
    const long room = budget(used, row);
    if (room < 0) return;
    const long max_s = room / per;
    for (long value = 0; value <= max_s; ++value) {
      s[a] = value;
      search_r_combinations(pos + 1, s, used, accept, budget, emit);
      for (std::size_t i = 0; i < used.size(); ++i) used[i] += r_images_[a][i];
    }
    for (std::size_t i = 0; i < used.size(); ++i) used[i] -= (max_s + 1) * r_images_[a][i];
    s[a] = 0;
  }

  std::vector<LatticePoint> enumerate_points(const ExponentVector& gamma) const {
    const int k = basis_size();
    const int dim = dimension();
    std::vector<LatticePoint> out;
    for (int c = 0; c < dim; ++c)
      if (entries_of_coordinate_[c].empty() && gamma[c] < 0) return out;
    const long total = gamma.total();  // = chi_1^n, the common coordinate sum
    if (total < 0) return out;
    if (k == 0) {
      if (gamma.is_nonnegative()) out.push_back({gamma, {}});
      return out;
    }
    // Box for t from x_pivot in [0, total].
    std::vector<long> lo(k), hi(k);
    for (int a = 0; a < k; ++a) {
      Rational min_v = 0, max_v = 0, shift = 0;
      for (int c = 0; c < k; ++c) {
        const Rational& w = inverse_[a][c];
        if (w > 0) max_v += w * total;
        if (w < 0) min_v += w * total;
        shift += w * gamma[pivot_rows_[c]];
      }
      min_v -= shift;
      max_v -= shift;
      Integer f, cl;
      mpz_cdiv_q(cl.get_mpz_t(), min_v.get_num_mpz_t(), min_v.get_den_mpz_t());
      mpz_fdiv_q(f.get_mpz_t(), max_v.get_num_mpz_t(), max_v.get_den_mpz_t());
      lo[a] = cl.get_si();
      hi[a] = f.get_si();
      if (lo[a] > hi[a]) return out;
    }
    std::vector<long> partial(gamma.entries());
    std::vector<long> slack(dim, 0);  // max contribution of unfixed t
    for (int c = 0; c < dim; ++c)
      for (auto [a, coef] : entries_of_coordinate_[c]) slack[c] += std::max(coef * lo[a], coef * hi[a]);
    MultiIndex t(k, 0);

    auto dfs = [&](auto&& self, int a) -> void {
      if (a == k) {
        for (int c = 0; c < dim; ++c)
          if (partial[c] < 0) return;
        out.push_back({ExponentVector(partial), t});
        return;
      }
      long low = lo[a], high = hi[a];
      for (int c : coords_of_[a]) {
        long coef = basis_[a].v[c];
        long rest = slack[c] - std::max(coef * lo[a], coef * hi[a]);
        // partial + coef * t + rest >= 0
        long bound = -(partial[c] + rest);
        if (coef > 0) low = std::max(low, ceil_div(bound, coef));
        else high = std::min(high, floor_div(bound, coef));
      }
      for (int c : coords_of_[a]) slack[c] -= std::max(basis_[a].v[c] * lo[a], basis_[a].v[c] * hi[a]);
      for (long value = low; value <= high; ++value) {
        t[a] = value;
        for (int c : coords_of_[a]) partial[c] += basis_[a].v[c] * value;
        self(self, a + 1);
        for (int c : coords_of_[a]) partial[c] -= basis_[a].v[c] * value;
      }
      t[a] = 0;
      for (int c : coords_of_[a]) slack[c] += std::max(basis_[a].v[c] * lo[a], basis_[a].v[c] * hi[a]);
    };
    dfs(dfs, 0);
    return out;
  }

  static long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
  }
  static long ceil_div(long a, long b) { return -floor_div(-a, b); }

  SubsetUniverse universe_;
  std::vector<LatticeBasisVector> basis_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<std::vector<int>> rows_containing_;
  std::vector<std::vector<long>> r_images_;
  std::vector<int> pivot_rows_;
  std::vector<std::vector<Rational>> inverse_;
  std::vector<std::vector<int>> coords_of_;
  std::vector<std::vector<std::pair<int, long>>> entries_of_coordinate_;
  std::vector<int> descent_order_;
  std::vector<int> pivot_row_;

  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<ExponentVector, std::shared_ptr<const std::vector<LatticePoint>>, ExponentVectorHash>
      point_cache_;
};

/// Decides whether two representatives of one coset give the same results
/// downstream (used to accept ambiguous r-witnesses).
using RepresentativeEquivalence = std::function<bool(const ExponentVector&, const ExponentVector&)>;

/// Shift vectors for all diagrams of a representation, chosen so that
/// comparable diagrams differ exactly by nonnegative combinations of r.
/// Comparability classes are the connected components of the comparability
/// graph; each must have a unique minimum. When witnesses that lead to
/// different results exist, the call throws AmbiguousMinimum unless
/// `ambiguities` is given; then the witness with the fewest steps (first in
/// search order among those) is used and a diagnostic line is appended.
inline std::vector<ShiftVector> canonical_shifts(const GTLattice& lattice, const std::vector<GTDiagram>& diagrams,
                                                 const RepresentativeEquivalence& equivalent = {},
                                                 std::vector<std::string>* ambiguities = nullptr) {
  const std::size_t count = diagrams.size();
  std::vector<ShiftVector> base;
  base.reserve(count);
  for (const auto& d : diagrams) base.push_back(lattice.shift_from_diagram(d));

  std::vector<std::vector<bool>> below(count, std::vector<bool>(count, false));  // below[i][j]: i <= j
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j)
      if (i != j && diagram_weight(diagrams[i]) == diagram_weight(diagrams[j]))
        below[i][j] = lattice.coset_leq(base[i].gamma, base[j].gamma).has_value();

  std::vector<std::size_t> component(count);
  std::iota(component.begin(), component.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return component[x] == x ? x : component[x] = find(component[x]);
  };
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j)
      if (below[i][j]) component[find(i)] = find(j);

  std::vector<ShiftVector> out = base;
  std::map<std::size_t, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < count; ++i) classes[find(i)].push_back(i);
  for (const auto& [root, members] : classes) {
    if (members.size() == 1) continue;
    std::vector<std::size_t> minima;
    for (std::size_t i : members) {
      bool minimal = true;
      for (std::size_t j : members)
        if (below[j][i]) minimal = false;
      if (minimal) minima.push_back(i);
    }
    if (minima.size() != 1) {
      std::string msg = "comparability class has " + std::to_string(minima.size()) + " minimal diagrams:";
      for (std::size_t i : minima) msg += " [" + diagrams[i].to_string() + "]";
      throw AmbiguousMinimum(msg);
    }
    const std::size_t low = minima.front();
    for (std::size_t i : members) {
      if (i == low) continue;
      auto witnesses = lattice.coset_leq_witnesses(base[low].gamma, base[i].gamma);
      std::vector<ExponentVector> candidates;
      for (const auto& s : witnesses) candidates.push_back(lattice.add_r(base[low].gamma, s));
      std::size_t chosen = 0;
      for (std::size_t c = 1; c < witnesses.size(); ++c)
        if (total(witnesses[c]) < total(witnesses[chosen])) chosen = c;
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        if (c == chosen || candidates[c] == candidates[chosen]) continue;
        if (equivalent && equivalent(candidates[chosen], candidates[c])) continue;
        std::string msg = "diagram [" + diagrams[i].to_string() + "] is reached from [" + diagrams[low].to_string() +
                          "] by witnesses " + to_string(witnesses[chosen]) + " and " + to_string(witnesses[c]) +
                          " that give different results";
        if (!ambiguities) throw AmbiguousMinimum(msg);
        ambiguities->push_back(msg + "; using " + to_string(witnesses[chosen]));
      }
      out[i].gamma = candidates[chosen];
    }
  }
  return out;
}

inline ShiftVector canonical_shift(const GTLattice& lattice, const GTDiagram& d, const std::vector<GTDiagram>& context,
                                   const RepresentativeEquivalence& equivalent = {}) {
  auto it = std::find(context.begin(), context.end(), d);
  if (it == context.end()) throw std::invalid_argument("canonical_shift: diagram is not in the context");
  return canonical_shifts(lattice, context, equivalent)[static_cast<std::size_t>(it - context.begin())];
}

}  // namespace gtagkz
