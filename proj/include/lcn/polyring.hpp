#pragma once

// Exact sparse multivariate polynomials over arbitrary-precision integers,
// plus symbolic matrices (determinants, minors) built from them.

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"

namespace lcn {

using Integer = mpz_class;
using Rational = mpq_class;

// Exponent vector, one entry per ambient variable.
struct Monomial {
  std::vector<std::uint32_t> exps;

  std::uint32_t degree() const;
  bool operator==(const Monomial&) const = default;
};

// Graded lexicographic order, variable 0 most significant. Terms are stored
// and printed in this order, largest first.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

using TermMap = std::map<Monomial, Integer, GrlexGreater>;

enum class VarStyle {
  Names,    // use the stored variable names
  Letters,  // A, B, C, ... when there are at most 26 variables
};

class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> variables);

  static MultiPoly constant(std::vector<std::string> variables, const Integer& c);
  static MultiPoly variable(std::vector<std::string> variables, std::size_t index);

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t num_variables() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  // -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;

  // Accumulates c * x^m; a resulting zero coefficient removes the term.
  void add_term(const Monomial& m, const Integer& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Integer& c);
  MultiPoly operator-() const;

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Integer& c) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  Rational eval(const std::map<std::string, Rational>& point) const;
  Rational eval(std::span<const Rational> point) const;
  Integer eval(std::span<const Integer> point) const;
  std::complex<double> eval(std::span<const std::complex<double>> point) const;
  // Sum of |coefficient * monomial| at the point; the natural scale for
  // judging how close eval() is to zero.
  double abs_eval(std::span<const std::complex<double>> point) const;

  MultiPoly derivative(std::size_t var) const;

  // gcd of the coefficients (0 for the zero polynomial).
  Integer content() const;
  MultiPoly primitive_part() const;
  // Negated if needed so that the leading (grlex-first) term is positive.
  MultiPoly sign_normalized() const;

  // Rewrites into a new variable list: variable i of *this becomes variable
  // index_map[i] of new_variables.
  MultiPoly embed(std::vector<std::string> new_variables,
                  std::span<const std::size_t> index_map) const;

 private:
  void require_same_ring(const MultiPoly& o) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b);

// c0, c1, ..., c{k-1}
std::vector<std::string> coefficient_variables(std::size_t k);

// "A*D^2 + B^2*E - B*C*D"
std::string to_text(const MultiPoly& p, VarStyle style = VarStyle::Names);

// Inverse of to_text. Also accepts juxtaposition ("CEG-BFG+2AH^2") when
// variables are rendered as single letters.
MultiPoly parse_poly(std::string_view text, std::vector<std::string> variables,
                     VarStyle style = VarStyle::Letters);

// {"vars":[...], "terms":[{"coeff":"<decimal>","exps":[...]}]}
nlohmann::json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const nlohmann::json& j);

class PolyMatrix {
 public:
  PolyMatrix() : rows_(0), cols_(0) {}
  PolyMatrix(std::size_t rows, std::size_t cols, std::vector<std::string> variables);
  PolyMatrix(std::size_t rows, std::size_t cols, std::vector<MultiPoly> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<std::string>& variables() const { return vars_; }

  const MultiPoly& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  MultiPoly& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  PolyMatrix submatrix(std::span<const std::size_t> row_ids,
                       std::span<const std::size_t> col_ids) const;
  // Row-major values at a rational point.
  std::vector<Rational> evaluate(std::span<const Rational> point) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::string> vars_;
  std::vector<MultiPoly> entries_;
};

std::string to_text(const PolyMatrix& m, VarStyle style = VarStyle::Names);

// Exact determinant by Laplace expansion memoized over column subsets.
MultiPoly determinant(const PolyMatrix& m);

// Number of size x size submatrices; 0 when size exceeds a dimension.
std::size_t minor_count(std::size_t rows, std::size_t cols, std::size_t size);

// All nonzero size x size minors in lexicographic (row-set, col-set) order,
// sign-normalized and deduplicated. Empty when size exceeds a dimension.
std::vector<MultiPoly> minors(const PolyMatrix& m, std::size_t size);

// Rank of a dense rational matrix (row-major) by exact elimination.
std::size_t exact_rank(std::vector<Rational> entries, std::size_t rows, std::size_t cols);

}  // namespace lcn
