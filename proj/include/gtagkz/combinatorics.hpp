#pragma once

// Subset indexing, counting functionals and Gelfand-Tsetlin diagrams.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gtagkz {

/// Largest rank handled. Coordinates are bitmasks over {1..n}.
inline constexpr int kMaxRank = 12;

/// A subset of {1..n}, stored as a bitmask (bit e-1 set when e is a member).
/// The empty subset is representable because it shows up as the tail X of a
/// lattice basis vector; minor variables are only indexed by nonempty ones.
class SubsetIndex {
public:
  constexpr SubsetIndex() = default;
  constexpr explicit SubsetIndex(std::uint32_t mask) : mask_(mask) {}

  static SubsetIndex from_elements(const std::vector<int>& elements) {
    std::uint32_t mask = 0;
    for (int e : elements) {
      if (e < 1 || e > kMaxRank) throw std::invalid_argument("subset element out of range: " + std::to_string(e));
      std::uint32_t bit = 1u << (e - 1);
      if (mask & bit) throw std::invalid_argument("repeated subset element: " + std::to_string(e));
      mask |= bit;
    }
    return SubsetIndex(mask);
  }

  /// Parses "1,3" (the JSON key format).
  static SubsetIndex parse(const std::string& text) {
    std::vector<int> elements;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t comma = text.find(',', pos);
      if (comma == std::string::npos) comma = text.size();
      std::string tok = text.substr(pos, comma - pos);
      if (tok.empty()) throw std::invalid_argument("malformed subset: '" + text + "'");
      std::size_t used = 0;
      int value = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("malformed subset: '" + text + "'");
      elements.push_back(value);
      pos = comma + 1;
    }
    if (elements.empty()) throw std::invalid_argument("empty subset string");
    if (!std::is_sorted(elements.begin(), elements.end()))
      throw std::invalid_argument("subset elements must be increasing: '" + text + "'");
    return from_elements(elements);
  }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr int cardinality() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int e) const { return e >= 1 && e <= 32 && ((mask_ >> (e - 1)) & 1u); }
  constexpr int max_element() const { return mask_ == 0 ? 0 : 32 - std::countl_zero(mask_); }
  constexpr int min_element() const { return mask_ == 0 ? 0 : std::countr_zero(mask_) + 1; }

  /// Number of members that are <= q.
  constexpr int count_at_most(int q) const {
    if (q <= 0) return 0;
    if (q >= 32) return cardinality();
    return std::popcount(mask_ & ((1u << q) - 1u));
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (int e = 1; e <= 32; ++e)
      if (contains(e)) out.push_back(e);
    return out;
  }

  SubsetIndex with(int e) const { return SubsetIndex(mask_ | (1u << (e - 1))); }
  SubsetIndex without(int e) const { return SubsetIndex(mask_ & ~(1u << (e - 1))); }
  SubsetIndex unite(SubsetIndex other) const { return SubsetIndex(mask_ | other.mask_); }
  bool is_subset_of(SubsetIndex other) const { return (mask_ & ~other.mask_) == 0; }

  std::string to_string() const {
    std::string out;
    for (int e : elements()) {
      if (!out.empty()) out += ',';
      out += std::to_string(e);
    }
    return out;
  }

  /// Canonical order: cardinality first, then lexicographic on the sorted elements.
  friend std::strong_ordering operator<=>(const SubsetIndex& a, const SubsetIndex& b) {
    if (auto c = a.cardinality() <=> b.cardinality(); c != 0) return c;
    // Same size: the smallest differing element decides.
    std::uint32_t diff = a.mask_ ^ b.mask_;
    if (diff == 0) return std::strong_ordering::equal;
    std::uint32_t lowest = diff & (~diff + 1u);
    return (a.mask_ & lowest) ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  friend bool operator==(const SubsetIndex&, const SubsetIndex&) = default;

private:
  std::uint32_t mask_ = 0;
};

/// {1..k} as a subset.
inline SubsetIndex initial_segment(int k) {
  return SubsetIndex(k <= 0 ? 0u : ((1u << k) - 1u));
}

/// All 2^n - 1 nonempty subsets of {1..n} in canonical order.
inline std::vector<SubsetIndex> enumerate_subsets(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_subsets: n must be >= 1");
  if (n > kMaxRank) throw std::invalid_argument("enumerate_subsets: n too large");
  std::vector<SubsetIndex> out;
  out.reserve((1u << n) - 1u);
  for (std::uint32_t m = 1; m < (1u << n); ++m) out.emplace_back(m);
  std::sort(out.begin(), out.end());
  return out;
}

/// The coordinate system of exponent vectors for a fixed n: subsets in
/// canonical order with a reverse lookup from mask to coordinate.
class SubsetUniverse {
public:
  explicit SubsetUniverse(int n) : n_(n), subsets_(enumerate_subsets(n)), index_(1u << n, -1) {
    for (std::size_t i = 0; i < subsets_.size(); ++i) index_[subsets_[i].mask()] = static_cast<int>(i);
  }

  int rank() const { return n_; }
  int dimension() const { return static_cast<int>(subsets_.size()); }
  const std::vector<SubsetIndex>& subsets() const { return subsets_; }
  const SubsetIndex& subset(int coordinate) const { return subsets_.at(coordinate); }

  int index_of(SubsetIndex s) const {
    if (s.empty() || s.mask() >= index_.size())
      throw std::invalid_argument("subset {" + s.to_string() + "} is not a coordinate for n=" + std::to_string(n_));
    return index_[s.mask()];
  }

private:
  int n_;
  std::vector<SubsetIndex> subsets_;
  std::vector<int> index_;
};

inline void check_chi_indices(int p, int q, int n) {
  if (p < 1 || q < p || q > n)
    throw std::invalid_argument("chi: need 1 <= p <= q <= n, got p=" + std::to_string(p) + " q=" +
                                std::to_string(q) + " n=" + std::to_string(n));
}

/// 1 iff X holds at least p indices that are <= q.
inline int chi(int p, int q, SubsetIndex x, int n = kMaxRank) {
  check_chi_indices(p, q, n);
  return x.count_at_most(q) >= p ? 1 : 0;
}

/// The (p,q) pairs with 1 <= p <= q <= n, ordered by q then p. Rows of the
/// counting-functional matrix use this order.
inline std::vector<std::pair<int, int>> chi_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int q = 1; q <= n; ++q)
    for (int p = 1; p <= q; ++p) out.emplace_back(p, q);
  return out;
}

inline int chi_pair_index(int p, int q) { return q * (q - 1) / 2 + (p - 1); }

struct Weight {
  std::vector<long> components;

  int size() const { return static_cast<int>(components.size()); }
  long operator[](int i) const { return components.at(i); }
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  std::string to_string() const {
    std::string out;
    for (long c : components) {
      if (!out.empty()) out += ',';
      out += std::to_string(c);
    }
    return out;
  }

  static Weight parse(const std::string& text) {
    Weight w;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      if (comma == std::string::npos) comma = text.size();
      std::string tok = text.substr(pos, comma - pos);
      std::size_t used = 0;
      if (tok.empty()) throw std::invalid_argument("malformed weight: '" + text + "'");
      long v = std::stol(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("malformed weight: '" + text + "'");
      w.components.push_back(v);
      pos = comma + 1;
    }
    return w;
  }
};

inline bool is_dominant(const Weight& w) {
  return std::is_sorted(w.components.rbegin(), w.components.rend());
}

/// Triangular array m(p,q), 1 <= p <= q <= n; row q has q entries and row n
/// is the top row. No betweenness is enforced on construction so that invalid
/// arrays can be represented and rejected downstream.
class GTDiagram {
public:
  GTDiagram() = default;

  /// rows[q-1] is row q (length q).
  explicit GTDiagram(std::vector<std::vector<long>> rows) : rows_(std::move(rows)) {
    for (std::size_t q = 0; q < rows_.size(); ++q)
      if (rows_[q].size() != q + 1) throw std::invalid_argument("GTDiagram: row " + std::to_string(q + 1) + " must have " + std::to_string(q + 1) + " entries");
  }

  /// Rows listed top-down, e.g. {{2,1,0},{2,1},{1}}.
  static GTDiagram from_top_down(std::vector<std::vector<long>> top_down) {
    std::reverse(top_down.begin(), top_down.end());
    return GTDiagram(std::move(top_down));
  }

  int rank() const { return static_cast<int>(rows_.size()); }
  long m(int p, int q) const { return rows_.at(q - 1).at(p - 1); }
  long& m(int p, int q) { return rows_.at(q - 1).at(p - 1); }
  const std::vector<long>& row(int q) const { return rows_.at(q - 1); }
  Weight top_row() const { return Weight{rows_.back()}; }

  bool satisfies_betweenness() const {
    for (int q = 1; q < rank(); ++q)
      for (int p = 1; p <= q; ++p)
        if (!(m(p, q + 1) >= m(p, q) && m(p, q) >= m(p + 1, q + 1))) return false;
    return true;
  }

  std::string to_string() const {
    std::string out;
    for (int q = rank(); q >= 1; --q) {
      if (q != rank()) out += ';';
      for (int p = 1; p <= q; ++p) {
        if (p > 1) out += ',';
        out += std::to_string(m(p, q));
      }
    }
    return out;
  }

  /// Lexicographic on rows from the top row down.
  friend bool operator<(const GTDiagram& a, const GTDiagram& b) {
    return std::lexicographical_compare(a.rows_.rbegin(), a.rows_.rend(), b.rows_.rbegin(), b.rows_.rend());
  }
  friend bool operator==(const GTDiagram&, const GTDiagram&) = default;

private:
  std::vector<std::vector<long>> rows_;
};

/// Splits a dominant weight into the normalized top row (last entry 0) and
/// the power of the full minor A_{1..n} that was factored out.
struct NormalizedTopRow {
  Weight top_row;
  long full_minor_power = 0;
};

inline NormalizedTopRow normalize_top_row(const Weight& w) {
  if (w.size() < 1) throw std::invalid_argument("weight must have at least one component");
  if (!is_dominant(w)) throw std::invalid_argument("weight " + w.to_string() + " is not dominant");
  NormalizedTopRow out;
  out.full_minor_power = w.components.back();
  for (long c : w.components) out.top_row.components.push_back(c - out.full_minor_power);
  return out;
}

/// Every diagram with the given top row, lexicographic by rows (top down).
inline std::vector<GTDiagram> enumerate_diagrams(const Weight& top_row) {
  const int n = top_row.size();
  if (n < 1 || n > kMaxRank) throw std::invalid_argument("enumerate_diagrams: bad rank");
  if (!is_dominant(top_row)) throw std::invalid_argument("enumerate_diagrams: top row " + top_row.to_string() + " is not dominant");
  if (top_row.components.back() != 0) throw std::invalid_argument("enumerate_diagrams: top row must end in 0");

  std::vector<std::vector<long>> rows(n);
  for (int q = 0; q < n; ++q) rows[q].assign(q + 1, 0);
  rows[n - 1] = top_row.components;
  std::vector<GTDiagram> out;

  // Fill row q entry p, walking rows downward and entries left to right.
  auto fill = [&](auto&& self, int q, int p) -> void {
    if (q == 0) {
      out.emplace_back(rows);
      return;
    }
    if (p > q) {
      self(self, q - 1, 1);
      return;
    }
    const auto& upper = rows[q];  // row q+1
    for (long v = upper[p - 1]; v >= upper[p]; --v) {
      rows[q - 1][p - 1] = v;
      self(self, q, p + 1);
    }
  };
  fill(fill, n - 1, 1);
  std::sort(out.begin(), out.end());
  return out;
}

/// Component i is (sum of row i) - (sum of row i-1).
inline Weight diagram_weight(const GTDiagram& d) {
  Weight w;
  long previous = 0;
  for (int q = 1; q <= d.rank(); ++q) {
    long sum = 0;
    for (long v : d.row(q)) sum += v;
    w.components.push_back(sum - previous);
    previous = sum;
  }
  return w;
}

}  // namespace gtagkz
