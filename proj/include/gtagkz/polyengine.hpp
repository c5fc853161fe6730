#pragma once

// Exact sparse polynomials in the minor variables A_X, the apolar pairing and
// evaluation at explicit matrices.

#include <gmpxx.h>

#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "combinatorics.hpp"
#include "exact.hpp"
#include "exponent.hpp"

namespace gtagkz {

class Polynomial {
public:
  using TermMap = std::map<ExponentVector, Rational>;

  Polynomial() = default;
  explicit Polynomial(int variables) : nvars_(variables) {}

  static Polynomial constant(int variables, const Rational& c) {
    Polynomial p(variables);
    p.add_term(ExponentVector(variables), c);
    return p;
  }
  static Polynomial monomial(const ExponentVector& exponent, const Rational& c = 1) {
    Polynomial p(exponent.dimension());
    p.add_term(exponent, c);
    return p;
  }
  static Polynomial variable(int variables, int coordinate) {
    return monomial(ExponentVector::unit(variables, coordinate));
  }

  int variables() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Accumulates c * A^e. Exponents must be nonnegative.
  void add_term(const ExponentVector& e, const Rational& c) {
    if (e.dimension() != nvars_) throw std::invalid_argument("term dimension mismatch");
    if (!e.is_nonnegative()) throw std::invalid_argument("negative exponent " + e.to_string());
    if (c == 0) return;
    Rational value = c;
    value.canonicalize();
    auto [it, inserted] = terms_.try_emplace(e, value);
    if (!inserted) {
      it->second += value;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check(b);
    Polynomial out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
  }

  /// d/dA_coordinate.
  Polynomial derivative(int coordinate) const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[coordinate] == 0) continue;
      ExponentVector lowered = e;
      lowered[coordinate] -= 1;
      out.add_term(lowered, c * e[coordinate]);
    }
    return out;
  }

  /// (d/dA)^u applied to this polynomial.
  Polynomial differentiate(const ExponentVector& u) const {
    if (u.dimension() != nvars_) throw std::invalid_argument("differentiate: dimension mismatch");
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
      if (!e.dominates(u)) continue;
      ExponentVector rest = e - u;
      out.add_term(rest, c * Rational(factorial(e) / factorial(rest)));
    }
    return out;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  void check(const Polynomial& o) const {
    if (o.nvars_ != nvars_)
      throw std::invalid_argument("polynomial variable count mismatch: " + std::to_string(nvars_) + " vs " +
                                  std::to_string(o.nvars_));
  }

  int nvars_ = 0;
  TermMap terms_;
};

enum class PolyOp { add, mul };

/// Ring operations by name.
inline Polynomial poly_arith(PolyOp op, const Polynomial& f, const Polynomial& g) {
  switch (op) {
    case PolyOp::add: return f + g;
    case PolyOp::mul: return f * g;
  }
  throw std::logic_error("unknown op");
}

inline Polynomial poly_scale(const Polynomial& f, const Rational& c) { return f * c; }

/// f(d/dA) applied to g.
inline Polynomial diff_apply(const Polynomial& f, const Polynomial& g) {
  if (f.variables() != g.variables()) throw std::invalid_argument("diff_apply: dimension mismatch");
  Polynomial out(g.variables());
  for (const auto& [u, cu] : f.terms())
    for (const auto& [w, cw] : g.terms()) {
      if (!w.dominates(u)) continue;
      ExponentVector rest = w - u;
      out.add_term(rest, cu * cw * Rational(factorial(w) / factorial(rest)));
    }
  return out;
}

/// <f,g> = f(d/dA) g at A = 0 = sum over common exponents u of f_u g_u u!.
inline Rational pair(const Polynomial& f, const Polynomial& g) {
  if (f.variables() != g.variables()) throw std::invalid_argument("pair: dimension mismatch");
  const auto& small = f.size() <= g.size() ? f : g;
  const auto& large = f.size() <= g.size() ? g : f;
  Rational out = 0;
  for (const auto& [u, cu] : small.terms()) {
    auto it = large.terms().find(u);
    if (it == large.terms().end()) continue;
    out += cu * it->second * Rational(factorial(u));
  }
  return out;
}

inline Rational evaluate_at_ones(const Polynomial& f) {
  Rational out = 0;
  for (const auto& [e, c] : f.terms()) out += c;
  return out;
}

/// Square matrix of exact rationals. Entry (r,c) is a_c^r: row r, column c.
class RationalMatrix {
public:
  RationalMatrix() = default;
  explicit RationalMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

  static RationalMatrix identity(int n) {
    RationalMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  /// "1,2;3,4" with rows separated by ';'.
  static RationalMatrix parse(const std::string& text) {
    std::vector<std::vector<Rational>> rows;
    std::stringstream rs(text);
    std::string row;
    while (std::getline(rs, row, ';')) {
      std::vector<Rational> entries;
      std::stringstream es(row);
      std::string entry;
      while (std::getline(es, entry, ',')) entries.push_back(parse_rational(entry));
      rows.push_back(std::move(entries));
    }
    RationalMatrix m(static_cast<int>(rows.size()));
    for (int r = 0; r < m.n_; ++r) {
      if (static_cast<int>(rows[r].size()) != m.n_) throw std::invalid_argument("matrix must be square");
      for (int c = 0; c < m.n_; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
  }

  /// Integer entries uniform in [lo, hi].
  template <class Rng>
  static RationalMatrix random_integer(int n, Rng& rng, long lo = -5, long hi = 5) {
    std::uniform_int_distribution<long> dist(lo, hi);
    RationalMatrix m(n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m.at(r, c) = dist(rng);
    return m;
  }

  int size() const { return n_; }
  Rational& at(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  const Rational& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }

  /// Determinant of rows {0..|cols|-1} and the given columns (0-based, in order).
  Rational leading_minor(const std::vector<int>& cols) const {
    const int k = static_cast<int>(cols.size());
    std::vector<Rational> m(static_cast<std::size_t>(k) * k);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) m[r * k + c] = at(r, cols[c]);
    return determinant(m, k);
  }

  Rational determinant() const { return determinant(a_, n_); }

  static Rational determinant(std::vector<Rational> m, int k) {
    Rational det = 1;
    for (int col = 0; col < k; ++col) {
      int pivot = -1;
      for (int r = col; r < k; ++r)
        if (m[r * k + col] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return 0;
      if (pivot != col) {
        for (int c = 0; c < k; ++c) std::swap(m[pivot * k + c], m[col * k + c]);
        det = -det;
      }
      det *= m[col * k + col];
      for (int r = col + 1; r < k; ++r) {
        if (m[r * k + col] == 0) continue;
        Rational factor = m[r * k + col] / m[col * k + col];
        for (int c = col; c < k; ++c) m[r * k + c] -= factor * m[col * k + c];
      }
    }
    return det;
  }

private:
  int n_ = 0;
  std::vector<Rational> a_;
};

/// Value of every minor variable at g: A_X := det(rows 1..|X|, columns X).
inline std::vector<Rational> minor_values(const RationalMatrix& g, const SubsetUniverse& universe) {
  if (g.size() != universe.rank()) throw std::invalid_argument("evaluate_minors: matrix size does not match n");
  std::vector<Rational> out;
  out.reserve(universe.dimension());
  for (const auto& x : universe.subsets()) {
    std::vector<int> cols;
    for (int e : x.elements()) cols.push_back(e - 1);
    out.push_back(g.leading_minor(cols));
  }
  return out;
}

inline Rational evaluate_at(const Polynomial& f, const std::vector<Rational>& values) {
  if (static_cast<int>(values.size()) != f.variables()) throw std::invalid_argument("evaluate: dimension mismatch");
  Rational out = 0;
  for (const auto& [e, c] : f.terms()) {
    Rational term = c;
    for (int i = 0; i < e.dimension(); ++i) {
      if (e[i] == 0) continue;
      Rational power;
      mpz_pow_ui(power.get_num_mpz_t(), values[i].get_num_mpz_t(), static_cast<unsigned long>(e[i]));
      mpz_pow_ui(power.get_den_mpz_t(), values[i].get_den_mpz_t(), static_cast<unsigned long>(e[i]));
      term *= power;
    }
    out += term;
  }
  return out;
}

inline Rational evaluate_minors(const Polynomial& f, const RationalMatrix& g, const SubsetUniverse& universe) {
  if (f.variables() != universe.dimension()) throw std::invalid_argument("evaluate_minors: polynomial does not match n");
  return evaluate_at(f, minor_values(g, universe));
}

/// Seeded nonsingular integer matrices with entries in [-5, 5].
inline std::vector<RationalMatrix> random_nonsingular_matrices(int n, int count, unsigned long seed) {
  std::mt19937_64 rng(seed);
  std::vector<RationalMatrix> out;
  while (static_cast<int>(out.size()) < count) {
    auto m = RationalMatrix::random_integer(n, rng);
    if (m.determinant() != 0) out.push_back(std::move(m));
  }
  return out;
}

// JSON: [{"exp": {"1,3": 2}, "coef": "p/q"}, ...] in canonical term order.

inline nlohmann::ordered_json to_json(const Polynomial& f, const SubsetUniverse& universe) {
  if (f.variables() != universe.dimension()) throw std::invalid_argument("to_json: polynomial does not match n");
  auto out = nlohmann::ordered_json::array();
  for (const auto& [e, c] : f.terms()) {
    nlohmann::ordered_json exp = nlohmann::ordered_json::object();
    for (int i = 0; i < e.dimension(); ++i)
      if (e[i] != 0) exp[universe.subset(i).to_string()] = e[i];
    out.push_back({{"exp", exp}, {"coef", c.get_str()}});
  }
  return out;
}

template <class Json>
Polynomial polynomial_from_json(const Json& j, const SubsetUniverse& universe) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array of terms");
  Polynomial out(universe.dimension());
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("exp") || !term.contains("coef"))
      throw std::invalid_argument("polynomial term needs 'exp' and 'coef'");
    ExponentVector e(universe.dimension());
    for (const auto& [key, power] : term.at("exp").items()) {
      if (!power.is_number_integer()) throw std::invalid_argument("exponent must be an integer");
      e[universe.index_of(SubsetIndex::parse(key))] += power.template get<long>();
    }
    out.add_term(e, parse_rational(term.at("coef").template get<std::string>()));
  }
  return out;
}

/// Human-readable form, e.g. "1/2*A[1]^2*A[2,3] - A[3]".
inline std::string to_text(const Polynomial& f, const SubsetUniverse& universe) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (int i = 0; i < e.dimension(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "A[" + universe.subset(i).to_string() + "]";
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace gtagkz
