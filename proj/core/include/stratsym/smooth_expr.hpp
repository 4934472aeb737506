#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "stratsym/poly.hpp"
#include "stratsym/rational.hpp"

namespace stratsym {

/// Expression tree over a finitely generated function algebra, closed
/// under sums, products and composition with a fixed family of outer
/// smooth functions: exp, the flat step s(t) = exp(-1/t) (t > 0, else 0),
/// and a reciprocal guarded by a positive lower bound on |inner|.
///
/// Values are immutable and share subtrees; copying is cheap.
class SmoothExpr {
 public:
  enum class Kind { Generator, Constant, Sum, Product, Exp, SmoothStep, GuardedReciprocal };

  SmoothExpr() : SmoothExpr(constant(0)) {}

  static SmoothExpr generator(const std::string& name);
  static SmoothExpr constant(const Scalar& value);
  static SmoothExpr from_poly(const Poly& p);
  static SmoothExpr sum(std::vector<SmoothExpr> parts);
  static SmoothExpr product(std::vector<SmoothExpr> parts);
  static SmoothExpr exp_of(const SmoothExpr& inner);
  static SmoothExpr smooth_step(const SmoothExpr& inner);
  /// compose(guarded_reciprocal with bound, inner); callers assert
  /// |inner| >= bound > 0 on the working domain.
  static SmoothExpr guarded_reciprocal(const SmoothExpr& inner, const Scalar& bound);

  Kind kind() const;
  const std::string& generator_name() const;
  const Scalar& constant_value() const;
  const Scalar& guard_bound() const;
  const std::vector<SmoothExpr>& children() const;

  /// Recursive evaluation in double precision. exp/smooth_step are
  /// evaluated with std::exp; a guarded reciprocal whose contract fails
  /// at the point raises DomainError(GuardViolated).
  double eval(const std::map<std::string, double>& point) const;

  std::string str() const;

  friend SmoothExpr operator+(const SmoothExpr& a, const SmoothExpr& b);
  friend SmoothExpr operator*(const SmoothExpr& a, const SmoothExpr& b);
  friend SmoothExpr operator-(const SmoothExpr& a);

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
  explicit SmoothExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
};

/// 1/f as a smooth expression, valid on domains where |f| >= bound > 0.
/// Throws DomainError(NonpositiveBound) unless bound > 0.
SmoothExpr smooth_invert(const SmoothExpr& f, const Scalar& bound);

/// Two-sided normalized step n(t) = s(t) / (s(t) + s(1-t)): identically
/// 0 for t <= 0, identically 1 for t >= 1, strictly increasing between.
/// The denominator is bounded below by 2/e^2 > 1/4 everywhere, which is
/// the guard used for the reciprocal.
SmoothExpr normalized_step(const SmoothExpr& t);

}  // namespace stratsym
