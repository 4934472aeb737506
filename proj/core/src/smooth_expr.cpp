#include "stratsym/smooth_expr.hpp"

#include <cmath>
#include <sstream>

#include "stratsym/errors.hpp"

namespace stratsym {

struct SmoothExpr::Node {
  Kind kind;
  std::string name;                  // Generator
  Scalar value = 0;                  // Constant
  Scalar bound = 0;                  // GuardedReciprocal
  std::vector<SmoothExpr> children;  // Sum/Product/Exp/SmoothStep/GuardedReciprocal
};

SmoothExpr SmoothExpr::generator(const std::string& name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Generator;
  n->name = name;
  return SmoothExpr(std::move(n));
}

SmoothExpr SmoothExpr::constant(const Scalar& value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Constant;
  n->value = value;
  return SmoothExpr(std::move(n));
}

SmoothExpr SmoothExpr::from_poly(const Poly& p) {
  std::vector<SmoothExpr> terms;
  for (const auto& [e, c] : p.terms()) {
    std::vector<SmoothExpr> factors;
    factors.push_back(constant(c));
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) factors.push_back(generator(p.variables()[i]));
    terms.push_back(product(std::move(factors)));
  }
  if (terms.empty()) return constant(0);
  if (terms.size() == 1) return terms[0];
  return sum(std::move(terms));
}

SmoothExpr SmoothExpr::sum(std::vector<SmoothExpr> parts) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sum;
  n->children = std::move(parts);
  return SmoothExpr(std::move(n));
}

SmoothExpr SmoothExpr::product(std::vector<SmoothExpr> parts) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Product;
  n->children = std::move(parts);
  return SmoothExpr(std::move(n));
}

SmoothExpr SmoothExpr::exp_of(const SmoothExpr& inner) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Exp;
  n->children = {inner};
  return SmoothExpr(std::move(n));
}

SmoothExpr SmoothExpr::smooth_step(const SmoothExpr& inner) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::SmoothStep;
  n->children = {inner};
  return SmoothExpr(std::move(n));
}

SmoothExpr SmoothExpr::guarded_reciprocal(const SmoothExpr& inner, const Scalar& bound) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::GuardedReciprocal;
  n->bound = bound;
  n->children = {inner};
  return SmoothExpr(std::move(n));
}

SmoothExpr::Kind SmoothExpr::kind() const { return node_->kind; }
const std::string& SmoothExpr::generator_name() const { return node_->name; }
const Scalar& SmoothExpr::constant_value() const { return node_->value; }
const Scalar& SmoothExpr::guard_bound() const { return node_->bound; }
const std::vector<SmoothExpr>& SmoothExpr::children() const { return node_->children; }

SmoothExpr operator+(const SmoothExpr& a, const SmoothExpr& b) {
  return SmoothExpr::sum({a, b});
}

SmoothExpr operator*(const SmoothExpr& a, const SmoothExpr& b) {
  return SmoothExpr::product({a, b});
}

SmoothExpr operator-(const SmoothExpr& a) {
  return SmoothExpr::product({SmoothExpr::constant(-1), a});
}

double SmoothExpr::eval(const std::map<std::string, double>& point) const {
  switch (node_->kind) {
    case Kind::Generator: {
      auto it = point.find(node_->name);
      if (it == point.end())
        throw DomainError(ErrorKind::UnknownVariable,
                          "unbound generator '" + node_->name + "'");
      return it->second;
    }
    case Kind::Constant:
      return scalar_to_double(node_->value);
    case Kind::Sum: {
      double s = 0;
      for (const auto& c : node_->children) s += c.eval(point);
      return s;
    }
    case Kind::Product: {
      double p = 1;
      for (const auto& c : node_->children) p *= c.eval(point);
      return p;
    }
    case Kind::Exp:
      return std::exp(node_->children[0].eval(point));
    case Kind::SmoothStep: {
      double t = node_->children[0].eval(point);
      return t <= 0 ? 0.0 : std::exp(-1.0 / t);
    }
    case Kind::GuardedReciprocal: {
      double v = node_->children[0].eval(point);
      double b = scalar_to_double(node_->bound);
      if (std::abs(v) < b)
        throw DomainError(ErrorKind::GuardViolated,
                          "reciprocal guard violated: |" + std::to_string(v) +
                              "| < " + std::to_string(b));
      return 1.0 / v;
    }
  }
  return 0.0;
}

std::string SmoothExpr::str() const {
  std::ostringstream os;
  switch (node_->kind) {
    case Kind::Generator:
      os << node_->name;
      break;
    case Kind::Constant:
      os << scalar_to_string(node_->value);
      break;
    case Kind::Sum: {
      os << "(";
      for (std::size_t i = 0; i < node_->children.size(); ++i) {
        if (i) os << " + ";
        os << node_->children[i].str();
      }
      os << ")";
      break;
    }
    case Kind::Product: {
      os << "(";
      for (std::size_t i = 0; i < node_->children.size(); ++i) {
        if (i) os << "*";
        os << node_->children[i].str();
      }
      os << ")";
      break;
    }
    case Kind::Exp:
      os << "exp(" << node_->children[0].str() << ")";
      break;
    case Kind::SmoothStep:
      os << "step(" << node_->children[0].str() << ")";
      break;
    case Kind::GuardedReciprocal:
      os << "recip[" << scalar_to_string(node_->bound) << "]("
         << node_->children[0].str() << ")";
      break;
  }
  return os.str();
}

SmoothExpr smooth_invert(const SmoothExpr& f, const Scalar& bound) {
  if (bound <= 0)
    throw DomainError(ErrorKind::NonpositiveBound,
                      "reciprocal bound must be positive, got " + scalar_to_string(bound));
  return SmoothExpr::guarded_reciprocal(f, bound);
}

SmoothExpr normalized_step(const SmoothExpr& t) {
  SmoothExpr s_t = SmoothExpr::smooth_step(t);
  SmoothExpr s_1mt = SmoothExpr::smooth_step(SmoothExpr::constant(1) + (-t));
  // min_t s(t) + s(1-t) = 2/e^2 ~ 0.2707, so 1/4 is a valid guard.
  SmoothExpr denom = smooth_invert(s_t + s_1mt, Scalar(1, 4));
  return s_t * denom;
}

}  // namespace stratsym
