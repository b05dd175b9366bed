#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "conred/exact.hpp"

namespace conred {

/// Multivariate polynomial over Q in variables x1..x_{num_vars}, stored as a
/// sorted map from exponent vectors to nonzero coefficients (canonical form,
/// so equality is structural equality).
class Poly {
 public:
  Poly() = default;
  explicit Poly(int num_vars) : num_vars_(num_vars) {}
  Poly(int num_vars, const Rational& c);

  static Poly constant(int num_vars, const Rational& c) { return Poly(num_vars, c); }
  static Poly variable(int num_vars, int index);  // 0-based index
  static Poly monomial(int num_vars, std::vector<int> exps, const Rational& c);

  int num_vars() const { return num_vars_; }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // 0 for the zero polynomial
  int total_degree() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& s) const;
  bool operator==(const Poly& o) const { return num_vars_ == o.num_vars_ && terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly pow(int e) const;
  /// d/dx_{index} (0-based).
  Poly partial(int index) const;
  /// Sets each listed variable (0-based) to zero.
  Poly substitute_zero(const std::set<int>& vars) const;
  Rational eval(const std::vector<Rational>& point) const;
  /// Full substitution x_i := args[i]; the args share a common variable count.
  Poly compose(const std::vector<Poly>& args) const;
  /// True if no term uses variable `index`.
  bool independent_of(int index) const;
  /// Reinterprets the polynomial in a new variable set; `new_of_old[i]` is the
  /// new 0-based index of old variable i, or -1 if the variable must be absent.
  Poly rename_vars(int new_num_vars, const std::vector<int>& new_of_old) const;

  std::string str() const;

 private:
  void add_term(const std::vector<int>& exps, const Rational& c);

  int num_vars_ = 0;
  std::map<std::vector<int>, Rational> terms_;
};

/// Parses the scene-file syntax: variables x1..xN, integer or a/b rational
/// coefficients, operators + - * ^, parentheses. Exact; floats are rejected.
Poly parse_poly(const std::string& text, int num_vars);

}  // namespace conred
