#pragma once

#include <map>
#include <string>
#include <vector>

#include "stratsym/rational.hpp"

namespace stratsym {

/// Exponent vector; entry i is the power of the i-th variable of the
/// owning polynomial's variable list.
using Exponents = std::vector<int>;

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Each polynomial carries its own ordered variable list; binary
/// operations merge the lists (left operand order first, unseen right
/// variables appended). Zero coefficients are never stored.
class Poly {
 public:
  Poly() = default;

  static Poly zero();
  static Poly constant(const Scalar& c);
  static Poly variable(const std::string& name);
  /// Single term c * prod(vars[i]^exps[i]).
  static Poly term(const Scalar& c, const std::vector<std::string>& vars,
                   const Exponents& exps);

  /// Parses the plain-text grammar: sums of terms such as
  /// "3/2*u^2*w - v", with `^` for powers, exact rationals "p/q" and
  /// parenthesized subexpressions. Variables are ASCII identifiers.
  static Poly parse(const std::string& text);
  /// Same, but the result is aligned to `vars`; mentions of variables
  /// outside the list raise DomainError(UnknownVariable).
  static Poly parse(const std::string& text, const std::vector<std::string>& vars);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::map<Exponents, Scalar>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (the coefficient of the all-zero exponent vector).
  Scalar constant_value() const;
  /// Max total degree over stored terms; -1 for the zero polynomial.
  int total_degree() const;

  /// Re-expresses this polynomial over the variable list `vars`.
  /// Throws DomainError(UnknownVariable) if a used variable is missing.
  Poly aligned_to(const std::vector<std::string>& vars) const;

  Poly operator+(const Poly& rhs) const;
  Poly operator-(const Poly& rhs) const;
  Poly operator*(const Poly& rhs) const;
  Poly operator-() const;
  Poly operator*(const Scalar& c) const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);

  bool operator==(const Poly& rhs) const;
  bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

  Poly pow(int k) const;

  /// Formal partial derivative. The variable must occur in the
  /// polynomial's variable list (DomainError(UnknownVariable) otherwise).
  Poly partial(const std::string& var) const;

  /// Simultaneous substitution of polynomials for variables. Variables
  /// absent from the map are kept.
  Poly substitute(const std::map<std::string, Poly>& assignment) const;

  double eval(const std::map<std::string, double>& point) const;
  Scalar eval_exact(const std::map<std::string, Scalar>& point) const;

  std::string str() const;

 private:
  std::vector<std::string> vars_;
  std::map<Exponents, Scalar> terms_;

  void insert_term(const Exponents& e, const Scalar& c);
  static void align_pair(const Poly& a, const Poly& b, Poly& out_a, Poly& out_b);

  friend class AlgebraPresentation;
};

Poly operator*(const Scalar& c, const Poly& p);

/// Finitely generated commutative algebra presentation: named generators
/// with grading weights and principal polynomial relations, reduced by
/// leading-term division in graded-lex order.
class AlgebraPresentation {
 public:
  AlgebraPresentation() = default;
  /// `order_priority`, when nonempty, permutes the generators for the
  /// lexicographic tie-break of the monomial order; it decides which
  /// monomial of an equal-degree relation leads (e.g. "w^2 - u*v" with
  /// priority (w,u,v) rewrites w^2 -> u*v).
  AlgebraPresentation(std::vector<std::string> generators,
                      std::vector<Poly> relations,
                      std::vector<int> weights = {},
                      std::vector<std::string> order_priority = {});

  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Poly>& relations() const { return relations_; }
  const std::vector<int>& weights() const { return weights_; }
  std::vector<std::string> order_priority_names() const;

  /// Weighted total degree of an exponent vector.
  long weighted_degree(const Exponents& e) const;

  /// true if a ranks above b in the graded-lex order.
  bool monomial_greater(const Exponents& a, const Exponents& b) const;

  /// Normal form under multivariate division by the relations.
  /// Idempotent; throws DomainError(UnknownVariable) if `p` mentions a
  /// non-generator.
  Poly reduce(const Poly& p) const;

 private:
  std::vector<std::string> generators_;
  std::vector<int> weights_;
  std::vector<int> priority_;  // permutation of generator indices
  std::vector<Poly> relations_;

  struct LeadingData {
    Exponents exponents;
    Scalar coefficient;
  };
  std::vector<LeadingData> leading_;

  LeadingData leading_term(const Poly& p) const;
};

/// Monomials of `nvars` variables with total degree exactly `degree`,
/// enumerated deterministically.
std::vector<Exponents> monomials_of_degree(int nvars, int degree);

}  // namespace stratsym
