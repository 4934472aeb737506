#include "stratsym/form.hpp"

#include <algorithm>
#include <sstream>

#include "stratsym/errors.hpp"

namespace stratsym {

bool WedgeMonomial::operator<(const WedgeMonomial& rhs) const {
  if (indices.size() != rhs.indices.size()) return indices.size() < rhs.indices.size();
  return indices < rhs.indices;
}

int canonical_wedge(std::vector<int>& indices) {
  int sign = 1;
  // Insertion sort, counting transpositions.
  for (std::size_t i = 1; i < indices.size(); ++i) {
    for (std::size_t j = i; j > 0 && indices[j - 1] > indices[j]; --j) {
      std::swap(indices[j - 1], indices[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < indices.size(); ++i)
    if (indices[i - 1] == indices[i]) return 0;
  return sign;
}

void Form::check_coefficient(const Poly& coeff) const {
  if (chart_->kind() == ChartKind::ChevalleyEilenberg) {
    if (!coeff.is_constant())
      throw DomainError(ErrorKind::InvalidModel,
                        "Chevalley-Eilenberg forms take constant coefficients");
    return;
  }
  // Context variables that never occur with positive exponent are fine.
  const auto& names = chart_->names();
  for (std::size_t i = 0; i < coeff.variables().size(); ++i) {
    const std::string& v = coeff.variables()[i];
    if (std::find(names.begin(), names.end(), v) != names.end()) continue;
    for (const auto& [e, c] : coeff.terms()) {
      if (e[i] > 0)
        throw DomainError(ErrorKind::UnknownVariable,
                          "coefficient uses '" + v + "' which is not a chart coordinate");
    }
  }
}

void Form::insert(const WedgeMonomial& w, const Poly& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

Form Form::from_poly(ChartPtr chart, const Poly& p) {
  Form f(std::move(chart));
  f.check_coefficient(p);
  f.insert(WedgeMonomial{}, p);
  return f;
}

Form Form::from_scalar(ChartPtr chart, const Scalar& c) {
  return from_poly(std::move(chart), Poly::constant(c));
}

Form Form::basis_one_form(ChartPtr chart, int index) {
  if (index < 0 || index >= chart->dimension())
    throw DomainError(ErrorKind::DimensionMismatch, "basis 1-form index out of range");
  Form f(std::move(chart));
  f.insert(WedgeMonomial{{index}}, Poly::constant(1));
  return f;
}

Form Form::monomial(ChartPtr chart, const Poly& coefficient, WedgeMonomial wedge) {
  for (std::size_t i = 1; i < wedge.indices.size(); ++i)
    if (wedge.indices[i - 1] >= wedge.indices[i])
      throw DomainError(ErrorKind::InvalidModel, "wedge indices must strictly increase");
  if (!wedge.indices.empty() &&
      (wedge.indices.front() < 0 || wedge.indices.back() >= chart->dimension()))
    throw DomainError(ErrorKind::DimensionMismatch, "wedge index out of range");
  Form f(std::move(chart));
  f.check_coefficient(coefficient);
  f.insert(wedge, coefficient);
  return f;
}

bool Form::is_homogeneous() const {
  if (terms_.empty()) return true;
  int deg = terms_.begin()->first.degree();
  for (const auto& [w, c] : terms_)
    if (w.degree() != deg) return false;
  return true;
}

int Form::degree() const {
  if (terms_.empty()) return -1;
  if (!is_homogeneous())
    throw DomainError(ErrorKind::NonHomogeneous, "degree of a mixed-degree form");
  return terms_.begin()->first.degree();
}

std::map<int, Form> Form::homogeneous_parts() const {
  std::map<int, Form> parts;
  for (const auto& [w, c] : terms_) {
    auto it = parts.find(w.degree());
    if (it == parts.end()) it = parts.emplace(w.degree(), Form(chart_)).first;
    it->second.insert(w, c);
  }
  return parts;
}

Form Form::part(int degree) const {
  Form out(chart_);
  for (const auto& [w, c] : terms_)
    if (w.degree() == degree) out.insert(w, c);
  return out;
}

Poly Form::coefficient(const WedgeMonomial& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Poly::zero() : it->second;
}

Form Form::operator+(const Form& rhs) const {
  require_same_chart(*this, rhs);
  Form out = *this;
  for (const auto& [w, c] : rhs.terms_) out.insert(w, c);
  return out;
}

Form Form::operator-(const Form& rhs) const { return *this + (-rhs); }

Form Form::operator-() const {
  Form out(chart_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

Form Form::operator*(const Scalar& c) const {
  Form out(chart_);
  if (c == 0) return out;
  for (const auto& [w, p] : terms_) out.terms_.emplace(w, p * c);
  return out;
}

Form Form::operator*(const Poly& p) const {
  check_coefficient(p);
  Form out(chart_);
  for (const auto& [w, q] : terms_) out.insert(w, q * p);
  return out;
}

Form& Form::operator+=(const Form& rhs) {
  *this = *this + rhs;
  return *this;
}

Form& Form::operator-=(const Form& rhs) {
  *this = *this - rhs;
  return *this;
}

bool Form::operator==(const Form& rhs) const {
  require_same_chart(*this, rhs);
  if (terms_.size() != rhs.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = rhs.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (!(it->first == jt->first) || it->second != jt->second) return false;
  }
  return true;
}

std::string Form::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (w.indices.empty()) {
      os << "(" << c.str() << ")";
      continue;
    }
    bool trivial = c.is_constant() && c.constant_value() == 1;
    if (!trivial) os << "(" << c.str() << ")*";
    for (std::size_t i = 0; i < w.indices.size(); ++i) {
      if (i) os << "^";
      os << chart_->one_form_name(w.indices[i]);
    }
  }
  return os.str();
}

bool same_chart(const Form& a, const Form& b) {
  return a.chart() == b.chart() || *a.chart() == *b.chart();
}

void require_same_chart(const Form& a, const Form& b) {
  if (!same_chart(a, b))
    throw DomainError(ErrorKind::ChartMismatch, "forms live on different charts");
}

Form wedge(const Form& a, const Form& b) {
  require_same_chart(a, b);
  Form out(a.chart());
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      std::vector<int> merged = wa.indices;
      merged.insert(merged.end(), wb.indices.begin(), wb.indices.end());
      int sign = canonical_wedge(merged);
      if (sign == 0) continue;
      Poly coeff = ca * cb;
      if (sign < 0) coeff = -coeff;
      out.insert(WedgeMonomial{std::move(merged)}, coeff);
    }
  }
  return out;
}

Form d(const Form& a) {
  const ChartPtr& chart = a.chart();
  Form out(chart);
  if (chart->kind() == ChartKind::Coordinate) {
    // d(p dx_I) = sum_j (dp/dx_j) dx_j ^ dx_I.
    for (const auto& [w, p] : a.terms_) {
      Poly aligned = p.aligned_to(chart->names());
      for (int j = 0; j < chart->dimension(); ++j) {
        Poly dp = aligned.partial(chart->names()[j]);
        if (dp.is_zero()) continue;
        std::vector<int> merged;
        merged.push_back(j);
        merged.insert(merged.end(), w.indices.begin(), w.indices.end());
        int sign = canonical_wedge(merged);
        if (sign == 0) continue;
        if (sign < 0) dp = -dp;
        out.insert(WedgeMonomial{std::move(merged)}, dp);
      }
    }
    return out;
  }

  // CE chart: derivation extending d e^k = -sum_{i<j} c^k_{ij} e^i ^ e^j
  // over constant coefficients.
  for (const auto& [w, p] : a.terms_) {
    for (std::size_t pos = 0; pos < w.indices.size(); ++pos) {
      int k = w.indices[pos] + 1;  // structure constants are 1-based
      int slot_sign = pos % 2 == 0 ? 1 : -1;
      for (const auto& [key, c] : chart->structure_constants()) {
        if (std::get<0>(key) != k) continue;
        int i = std::get<1>(key) - 1, j = std::get<2>(key) - 1;
        std::vector<int> merged;
        for (std::size_t q = 0; q < w.indices.size(); ++q) {
          if (q == pos) {
            merged.push_back(i);
            merged.push_back(j);
          } else {
            merged.push_back(w.indices[q]);
          }
        }
        int sign = canonical_wedge(merged);
        if (sign == 0) continue;
        // -c from the differential convention, slot sign from the Leibniz rule.
        Scalar coeff = -c * sign * slot_sign;
        out.insert(WedgeMonomial{std::move(merged)}, p * coeff);
      }
    }
  }
  return out;
}

Form contract_bivector(const MatQ& bivector, const Form& a) {
  const ChartPtr& chart = a.chart();
  if (bivector.rows() != chart->dimension() || bivector.cols() != chart->dimension())
    throw DomainError(ErrorKind::DimensionMismatch,
                      "bivector matrix size does not match chart dimension");
  Form out(chart);
  for (const auto& [w, p] : a.terms_) {
    int k = w.degree();
    if (k < 2) continue;
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        const Scalar& g = bivector.at(w.indices[i], w.indices[j]);
        if (g == 0) continue;
        std::vector<int> rest;
        for (int q = 0; q < k; ++q)
          if (q != i && q != j) rest.push_back(w.indices[q]);
        // Positions are 1-based in the sign convention (-1)^{i+j+1}.
        int sign = ((i + 1) + (j + 1) + 1) % 2 == 0 ? 1 : -1;
        Poly coeff = p * (g * sign);
        out.insert(WedgeMonomial{std::move(rest)}, coeff);
      }
    }
  }
  return out;
}

std::vector<WedgeMonomial> wedge_basis(int dim, int degree) {
  std::vector<WedgeMonomial> out;
  if (degree < 0 || degree > dim) return out;
  std::vector<int> idx(degree);
  for (int i = 0; i < degree; ++i) idx[i] = i;
  for (;;) {
    out.push_back(WedgeMonomial{idx});
    int pos = degree - 1;
    while (pos >= 0 && idx[pos] == dim - degree + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int q = pos + 1; q < degree; ++q) idx[q] = idx[q - 1] + 1;
  }
  return out;
}

}  // namespace stratsym
