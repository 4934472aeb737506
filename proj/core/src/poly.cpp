#include "stratsym/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include "stratsym/errors.hpp"

namespace stratsym {

namespace {

int var_index(const std::vector<std::string>& vars, const std::string& name) {
  auto it = std::find(vars.begin(), vars.end(), name);
  return it == vars.end() ? -1 : static_cast<int>(it - vars.begin());
}

}  // namespace

Poly Poly::zero() { return Poly(); }

Poly Poly::constant(const Scalar& c) {
  Poly p;
  if (c != 0) p.terms_[{}] = c;
  return p;
}

Poly Poly::variable(const std::string& name) {
  Poly p;
  p.vars_ = {name};
  p.terms_[{1}] = 1;
  return p;
}

Poly Poly::term(const Scalar& c, const std::vector<std::string>& vars,
                const Exponents& exps) {
  Poly p;
  p.vars_ = vars;
  Exponents e = exps;
  e.resize(vars.size(), 0);
  if (c != 0) p.terms_[e] = c;
  return p;
}

void Poly::insert_term(const Exponents& e, const Scalar& c) {
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const Exponents& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Scalar Poly::constant_value() const {
  Exponents zero(vars_.size(), 0);
  auto it = terms_.find(zero);
  return it == terms_.end() ? Scalar(0) : it->second;
}

int Poly::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_)
    deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
  return deg;
}

Poly Poly::aligned_to(const std::vector<std::string>& vars) const {
  // Map old variable slots into the new list.
  std::vector<int> remap(vars_.size(), -1);
  for (std::size_t i = 0; i < vars_.size(); ++i)
    remap[i] = var_index(vars, vars_[i]);

  Poly out;
  out.vars_ = vars;
  for (const auto& [e, c] : terms_) {
    Exponents ne(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (remap[i] < 0)
        throw DomainError(ErrorKind::UnknownVariable,
                          "variable '" + vars_[i] + "' not in target context");
      ne[remap[i]] = e[i];
    }
    out.insert_term(ne, c);
  }
  return out;
}

void Poly::align_pair(const Poly& a, const Poly& b, Poly& out_a, Poly& out_b) {
  if (a.vars_ == b.vars_) {
    out_a = a;
    out_b = b;
    return;
  }
  std::vector<std::string> merged = a.vars_;
  for (const auto& v : b.vars_)
    if (var_index(merged, v) < 0) merged.push_back(v);
  out_a = a.aligned_to(merged);
  out_b = b.aligned_to(merged);
}

Poly Poly::operator+(const Poly& rhs) const {
  Poly a, b;
  align_pair(*this, rhs, a, b);
  for (const auto& [e, c] : b.terms_) a.insert_term(e, c);
  return a;
}

Poly Poly::operator-(const Poly& rhs) const { return *this + (-rhs); }

Poly& Poly::operator+=(const Poly& rhs) {
  *this = *this + rhs;
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  *this = *this - rhs;
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Poly Poly::operator*(const Scalar& s) const {
  Poly out;
  out.vars_ = vars_;
  if (s == 0) return out;
  for (const auto& [e, c] : terms_) out.terms_[e] = c * s;
  return out;
}

Poly operator*(const Scalar& c, const Poly& p) { return p * c; }

Poly Poly::operator*(const Poly& rhs) const {
  Poly a, b;
  align_pair(*this, rhs, a, b);
  Poly out;
  out.vars_ = a.vars_;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.insert_term(e, ca * cb);
    }
  }
  return out;
}

bool Poly::operator==(const Poly& rhs) const {
  Poly a, b;
  align_pair(*this, rhs, a, b);
  return a.terms_ == b.terms_;
}

Poly Poly::pow(int k) const {
  Poly out = Poly::constant(1);
  for (int i = 0; i < k; ++i) out = out * (*this);
  return out;
}

Poly Poly::partial(const std::string& var) const {
  int j = var_index(vars_, var);
  if (j < 0)
    throw DomainError(ErrorKind::UnknownVariable,
                      "cannot differentiate by unknown variable '" + var + "'");
  Poly out;
  out.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    if (e[j] == 0) continue;
    Exponents ne = e;
    ne[j] -= 1;
    out.insert_term(ne, c * e[j]);
  }
  return out;
}

Poly Poly::substitute(const std::map<std::string, Poly>& assignment) const {
  Poly out = Poly::zero();
  for (const auto& [e, c] : terms_) {
    Poly term = Poly::constant(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = assignment.find(vars_[i]);
      Poly base = it != assignment.end() ? it->second : Poly::variable(vars_[i]);
      term = term * base.pow(e[i]);
    }
    out += term;
  }
  return out;
}

double Poly::eval(const std::map<std::string, double>& point) const {
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = scalar_to_double(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = point.find(vars_[i]);
      if (it == point.end())
        throw DomainError(ErrorKind::UnknownVariable,
                          "unbound variable '" + vars_[i] + "' in evaluation");
      t *= std::pow(it->second, e[i]);
    }
    sum += t;
  }
  return sum;
}

Scalar Poly::eval_exact(const std::map<std::string, Scalar>& point) const {
  Scalar sum = 0;
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = point.find(vars_[i]);
      if (it == point.end())
        throw DomainError(ErrorKind::UnknownVariable,
                          "unbound variable '" + vars_[i] + "' in evaluation");
      t *= scalar_pow(it->second, e[i]);
    }
    sum += t;
  }
  return sum;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  // Descending by (total degree, reverse-lex) for stable, readable output.
  std::vector<const std::pair<const Exponents, Scalar>*> ordered;
  for (const auto& t : terms_) ordered.push_back(&t);
  std::sort(ordered.begin(), ordered.end(), [](const auto* a, const auto* b) {
    int da = std::accumulate(a->first.begin(), a->first.end(), 0);
    int db = std::accumulate(b->first.begin(), b->first.end(), 0);
    if (da != db) return da > db;
    return a->first > b->first;
  });

  std::ostringstream os;
  bool first = true;
  for (const auto* t : ordered) {
    Scalar c = t->second;
    bool negative = c < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    Scalar abs_c = negative ? Scalar(-c) : c;

    std::vector<std::string> factors;
    for (std::size_t i = 0; i < t->first.size(); ++i) {
      int p = t->first[i];
      if (p == 0) continue;
      factors.push_back(p == 1 ? vars_[i] : vars_[i] + "^" + std::to_string(p));
    }
    if (factors.empty()) {
      os << scalar_to_string(abs_c);
      continue;
    }
    bool wrote = false;
    if (abs_c != 1) {
      os << scalar_to_string(abs_c);
      wrote = true;
    }
    for (const auto& f : factors) {
      if (wrote) os << "*";
      os << f;
      wrote = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos;
    return true;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw DomainError(ErrorKind::ParseError,
                      what + " at position " + std::to_string(pos) + " in: " + text);
  }

  Poly parse_expr() {
    Poly acc = parse_term();
    for (;;) {
      if (accept('+')) {
        acc += parse_term();
      } else if (accept('-')) {
        acc -= parse_term();
      } else {
        return acc;
      }
    }
  }

  Poly parse_term() {
    Poly acc = parse_factor();
    while (accept('*')) acc = acc * parse_factor();
    return acc;
  }

  Poly parse_factor() {
    Poly base = parse_base();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) fail("expected exponent");
      base = base.pow(std::stoi(text.substr(start, pos - start)));
    }
    return base;
  }

  Poly parse_base() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      Poly inner = parse_expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos;
      return -parse_factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
    fail("unexpected character");
  }

  Poly parse_rational() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string num = text.substr(start, pos - start);
    std::string den;
    std::size_t save = pos;
    skip_ws();
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      skip_ws();
      std::size_t dstart = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == dstart) fail("expected denominator");
      den = text.substr(dstart, pos - dstart);
    } else {
      pos = save;
    }
    return Poly::constant(scalar_from_string(den.empty() ? num : num + "/" + den));
  }

  Poly parse_identifier() {
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return Poly::variable(text.substr(start, pos - start));
  }
};

}  // namespace

Poly Poly::parse(const std::string& text) {
  Parser p(text);
  Poly result = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return result;
}

Poly Poly::parse(const std::string& text, const std::vector<std::string>& vars) {
  return parse(text).aligned_to(vars);
}

// ---------------------------------------------------------------------------
// AlgebraPresentation

AlgebraPresentation::AlgebraPresentation(std::vector<std::string> generators,
                                         std::vector<Poly> relations,
                                         std::vector<int> weights,
                                         std::vector<std::string> order_priority)
    : generators_(std::move(generators)) {
  weights_ = weights.empty() ? std::vector<int>(generators_.size(), 1) : std::move(weights);
  if (weights_.size() != generators_.size())
    throw DomainError(ErrorKind::InvalidModel, "weight list length mismatch");

  if (order_priority.empty()) {
    priority_.resize(generators_.size());
    std::iota(priority_.begin(), priority_.end(), 0);
  } else {
    if (order_priority.size() != generators_.size())
      throw DomainError(ErrorKind::InvalidModel, "order priority must permute the generators");
    for (const auto& name : order_priority) {
      int idx = var_index(generators_, name);
      if (idx < 0)
        throw DomainError(ErrorKind::UnknownVariable,
                          "order priority names unknown generator '" + name + "'");
      priority_.push_back(idx);
    }
  }

  for (auto& rel : relations) relations_.push_back(rel.aligned_to(generators_));
  for (const auto& rel : relations_) {
    if (rel.is_zero())
      throw DomainError(ErrorKind::InvalidModel, "zero relation in presentation");
    leading_.push_back(leading_term(rel));
  }
}

std::vector<std::string> AlgebraPresentation::order_priority_names() const {
  std::vector<std::string> names;
  for (int idx : priority_) names.push_back(generators_[idx]);
  return names;
}

long AlgebraPresentation::weighted_degree(const Exponents& e) const {
  long d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += static_cast<long>(e[i]) * weights_[i];
  return d;
}

bool AlgebraPresentation::monomial_greater(const Exponents& a, const Exponents& b) const {
  long da = weighted_degree(a), db = weighted_degree(b);
  if (da != db) return da > db;
  for (int idx : priority_) {
    if (a[idx] != b[idx]) return a[idx] > b[idx];
  }
  return false;
}

AlgebraPresentation::LeadingData AlgebraPresentation::leading_term(const Poly& p) const {
  const Exponents* best = nullptr;
  for (const auto& [e, c] : p.terms()) {
    if (!best || monomial_greater(e, *best)) best = &e;
  }
  return {*best, p.terms().at(*best)};
}

Poly AlgebraPresentation::reduce(const Poly& p) const {
  Poly q = p.aligned_to(generators_);
  bool changed = true;
  while (changed && !q.is_zero()) {
    changed = false;
    // Scan terms in descending monomial order so reduction is deterministic.
    std::vector<const Exponents*> order;
    for (const auto& [e, c] : q.terms()) order.push_back(&e);
    std::sort(order.begin(), order.end(),
              [this](const Exponents* a, const Exponents* b) { return monomial_greater(*a, *b); });
    for (const Exponents* e : order) {
      for (std::size_t r = 0; r < relations_.size(); ++r) {
        const LeadingData& lt = leading_[r];
        bool divisible = true;
        for (std::size_t i = 0; i < e->size(); ++i) {
          if ((*e)[i] < lt.exponents[i]) {
            divisible = false;
            break;
          }
        }
        if (!divisible) continue;
        Exponents quotient(e->size());
        for (std::size_t i = 0; i < e->size(); ++i) quotient[i] = (*e)[i] - lt.exponents[i];
        Scalar factor = q.terms().at(*e) / lt.coefficient;
        Poly multiple = Poly::term(factor, generators_, quotient) * relations_[r];
        q -= multiple;
        changed = true;
        break;
      }
      if (changed) break;
    }
  }
  return q;
}

std::vector<Exponents> monomials_of_degree(int nvars, int degree) {
  std::vector<Exponents> out;
  if (degree < 0) return out;
  if (nvars == 0) {
    if (degree == 0) out.push_back({});
    return out;
  }
  Exponents current(nvars, 0);
  // Lexicographic enumeration of compositions of `degree` into nvars parts.
  std::function<void(int, int)> rec = [&](int slot, int remaining) {
    if (slot == nvars - 1) {
      current[slot] = remaining;
      out.push_back(current);
      return;
    }
    for (int take = remaining; take >= 0; --take) {
      current[slot] = take;
      rec(slot + 1, remaining - take);
    }
  };
  rec(0, degree);
  return out;
}

}  // namespace stratsym
