#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gtagkz {

/// Integer vector in Z^N indexed by the canonical subset order. Used for shift
/// vectors, lattice vectors and monomial exponents alike.
class ExponentVector {
public:
  ExponentVector() = default;
  explicit ExponentVector(int dimension) : e_(dimension, 0) {}
  explicit ExponentVector(std::vector<long> entries) : e_(std::move(entries)) {}

  static ExponentVector unit(int dimension, int coordinate) {
    ExponentVector v(dimension);
    v.e_.at(coordinate) = 1;
    return v;
  }

  int dimension() const { return static_cast<int>(e_.size()); }
  long operator[](int i) const { return e_[i]; }
  long& operator[](int i) { return e_[i]; }
  const std::vector<long>& entries() const { return e_; }

  bool is_zero() const {
    for (long x : e_)
      if (x != 0) return false;
    return true;
  }
  bool is_nonnegative() const {
    for (long x : e_)
      if (x < 0) return false;
    return true;
  }
  long total() const { return std::accumulate(e_.begin(), e_.end(), 0L); }

  ExponentVector& operator+=(const ExponentVector& o) {
    check(o);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
  }
  ExponentVector& operator-=(const ExponentVector& o) {
    check(o);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
  }
  ExponentVector& operator*=(long c) {
    for (long& x : e_) x *= c;
    return *this;
  }
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
  friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }
  friend ExponentVector operator*(long c, ExponentVector a) { return a *= c; }
  friend ExponentVector operator-(ExponentVector a) { return a *= -1; }

  /// Componentwise a >= b.
  bool dominates(const ExponentVector& b) const {
    check(b);
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] < b.e_[i]) return false;
    return true;
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(e_[i]);
    }
    return out + ")";
  }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

private:
  void check(const ExponentVector& o) const {
    if (o.e_.size() != e_.size())
      throw std::invalid_argument("exponent vector dimension mismatch: " + std::to_string(e_.size()) + " vs " +
                                  std::to_string(o.e_.size()));
  }
  std::vector<long> e_;
};

/// Nonnegative integer vector in Z^k indexed by lattice basis position; houses
/// the Pochhammer orders s, the shift multiplicities l, u, m.
using MultiIndex = std::vector<long>;

inline long total(const MultiIndex& s) { return std::accumulate(s.begin(), s.end(), 0L); }

inline bool is_nonnegative(const MultiIndex& s) {
  for (long x : s)
    if (x < 0) return false;
  return true;
}

inline std::string to_string(const MultiIndex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "]";
}

inline std::ostream& operator<<(std::ostream& os, const ExponentVector& v) { return os << v.to_string(); }

struct ExponentVectorHash {
  std::size_t operator()(const ExponentVector& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (long x : v.entries()) h = (h ^ static_cast<std::size_t>(x + 0x9e3779b9)) * 1099511628211ull;
    return h;
  }
};

}  // namespace gtagkz
