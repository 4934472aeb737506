#include "stratsym/symplectic.hpp"

#include <algorithm>

#include "stratsym/errors.hpp"

namespace stratsym {

namespace {

Form omega_as_form(const ChartPtr& chart, const MatQ& omega) {
  Form f = Form::zero(chart);
  for (int i = 0; i < chart->dimension(); ++i)
    for (int j = i + 1; j < chart->dimension(); ++j) {
      if (omega.at(i, j) == 0) continue;
      f += Form::monomial(chart, Poly::constant(omega.at(i, j)), WedgeMonomial{{i, j}});
    }
  return f;
}

}  // namespace

SymplecticModel::SymplecticModel(ChartPtr chart, MatQ omega)
    : chart_(std::move(chart)), omega_(std::move(omega)) {
  int dim = chart_->dimension();
  if (omega_.rows() != dim || omega_.cols() != dim)
    throw DomainError(ErrorKind::DimensionMismatch, "omega matrix size != chart dimension");
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (omega_.at(i, j) != -omega_.at(j, i))
        throw DomainError(ErrorKind::InvalidModel, "omega matrix must be antisymmetric");

  auto inv = omega_.inverse();
  if (!inv)
    throw DomainError(ErrorKind::InvalidModel, "omega matrix is degenerate");
  // {x_i, y_i} = +1 normalization: G = -omega^{-1} entrywise.
  bivector_ = *inv;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) bivector_.at(i, j) = -bivector_.at(i, j);

  omega_form_ = omega_as_form(chart_, omega_);
  if (chart_->kind() == ChartKind::ChevalleyEilenberg && !d(omega_form_).is_zero())
    throw DomainError(ErrorKind::InvalidModel, "omega form is not closed on this chart");

  int n = dim / 2;
  Form power = Form::from_scalar(chart_, 1);
  for (int i = 0; i < n; ++i) power = wedge(power, omega_form_);
  volume_ = power * (Scalar(1) / factorial(n));
  if (volume_.is_zero())
    throw DomainError(ErrorKind::InvalidModel, "volume form vanishes");
}

SymplecticModel SymplecticModel::standard(int n) {
  ChartPtr chart = make_coordinate_chart(darboux_names(n));
  MatQ omega(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    omega.at(2 * i, 2 * i + 1) = 1;
    omega.at(2 * i + 1, 2 * i) = -1;
  }
  return SymplecticModel(std::move(chart), std::move(omega));
}

// ---------------------------------------------------------------------------
// Poisson brackets

Poly poisson_bracket(const Poly& f, const Poly& g, const SymplecticModel& model) {
  if (model.chart()->kind() != ChartKind::Coordinate)
    throw DomainError(ErrorKind::ChartMismatch,
                      "coordinate Poisson bracket needs a coordinate chart");
  const auto& names = model.chart()->names();
  Poly fa = f.aligned_to(names);
  Poly ga = g.aligned_to(names);
  Poly out = Poly::zero();
  for (int i = 0; i < model.dimension(); ++i) {
    Poly dfi = fa.partial(names[i]);
    if (dfi.is_zero()) continue;
    for (int j = 0; j < model.dimension(); ++j) {
      const Scalar& gij = model.bivector().at(i, j);
      if (gij == 0) continue;
      Poly dgj = ga.partial(names[j]);
      if (dgj.is_zero()) continue;
      out += dfi * dgj * gij;
    }
  }
  return out;
}

PoissonPresentation::PoissonPresentation(AlgebraPresentation presentation,
                                         std::map<std::pair<int, int>, Poly> table)
    : presentation_(std::move(presentation)) {
  int n = static_cast<int>(presentation_.generators().size());
  for (const auto& [key, value] : table) {
    auto [i, j] = key;
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw DomainError(ErrorKind::InvalidModel, "bracket table index out of range");
    if (i == j && !value.is_zero())
      throw DomainError(ErrorKind::InvalidModel, "bracket of a generator with itself must vanish");
    if (i >= j) continue;
    table_[{i, j}] = value.aligned_to(presentation_.generators());
  }
  validate();
}

Poly PoissonPresentation::generator_bracket(int i, int j) const {
  if (i == j) return Poly::zero();
  bool flip = i > j;
  auto it = table_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
  if (it == table_.end()) return Poly::zero();
  return flip ? -it->second : it->second;
}

Poly poisson_bracket(const Poly& f, const Poly& g, const PoissonPresentation& pres) {
  const auto& gens = pres.presentation().generators();
  Poly fa = f.aligned_to(gens);
  Poly ga = g.aligned_to(gens);
  Poly out = Poly::zero();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Poly dfi = fa.partial(gens[i]);
    if (dfi.is_zero()) continue;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      Poly dgj = ga.partial(gens[j]);
      if (dgj.is_zero()) continue;
      Poly bracket = pres.generator_bracket(static_cast<int>(i), static_cast<int>(j));
      if (bracket.is_zero()) continue;
      out += dfi * dgj * bracket;
    }
  }
  return pres.presentation().reduce(out);
}

void PoissonPresentation::validate() const {
  const auto& gens = presentation_.generators();
  int n = static_cast<int>(gens.size());

  // Jacobi identity on all generator triples, exact after reduction.
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        Poly ga = Poly::variable(gens[a]);
        Poly gb = Poly::variable(gens[b]);
        Poly gc = Poly::variable(gens[c]);
        Poly jac = poisson_bracket(ga, poisson_bracket(gb, gc, *this), *this) +
                   poisson_bracket(gb, poisson_bracket(gc, ga, *this), *this) +
                   poisson_bracket(gc, poisson_bracket(ga, gb, *this), *this);
        if (!presentation_.reduce(jac).is_zero())
          throw DomainError(ErrorKind::JacobiViolation,
                            "bracket table violates the Jacobi identity on (" + gens[a] +
                                ", " + gens[b] + ", " + gens[c] + ")");
      }
    }
  }

  // The bracket must descend to the quotient: {relation, generator} = 0.
  for (const auto& rel : presentation_.relations()) {
    for (const auto& g : gens) {
      Poly br = poisson_bracket(rel, Poly::variable(g), *this);
      if (!presentation_.reduce(br).is_zero())
        throw DomainError(ErrorKind::InvalidModel,
                          "bracket of relation with generator '" + g +
                              "' does not reduce to zero");
    }
  }
}

// ---------------------------------------------------------------------------
// Koszul-Brylinski boundary

Form delta_formula(const Form& a, const SymplecticModel& model) {
  if (model.chart()->kind() != ChartKind::Coordinate)
    throw DomainError(ErrorKind::ChartMismatch,
                      "delta_formula expands over coordinate monomials; use "
                      "delta_commutator on Chevalley-Eilenberg charts");
  require_same_chart(a, Form::zero(model.chart()));
  const ChartPtr& chart = a.chart();
  const auto& names = chart->names();
  Form out = Form::zero(chart);

  for (const auto& [w, p] : a.terms()) {
    int k = w.degree();
    if (k == 0) continue;  // empty sums

    // First sum: (-1)^{i+1} {f0, f_i} df_1 ... ^df_i ... df_k.
    for (int i = 0; i < k; ++i) {
      Poly bracket = poisson_bracket(p, Poly::variable(names[w.indices[i]]), model);
      if (bracket.is_zero()) continue;
      std::vector<int> rest;
      for (int q = 0; q < k; ++q)
        if (q != i) rest.push_back(w.indices[q]);
      if (i % 2 == 1) bracket = -bracket;  // (-1)^{i+1} with 1-based i
      out += Form::monomial(chart, bracket, WedgeMonomial{std::move(rest)});
    }

    // Second sum: (-1)^{i+j} f0 d{f_i, f_j} ^ df_1 ... ^df_i ... ^df_j ... df_k.
    // The f's here are coordinates, so each bracket is constant; the sum
    // is retained verbatim and contributes nothing.
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        Poly bracket = poisson_bracket(Poly::variable(names[w.indices[i]]),
                                       Poly::variable(names[w.indices[j]]), model);
        Form db = d(Form::from_poly(chart, bracket));
        if (db.is_zero()) continue;
        std::vector<int> rest;
        for (int q = 0; q < k; ++q)
          if (q != i && q != j) rest.push_back(w.indices[q]);
        Form tail = Form::monomial(chart, p, WedgeMonomial{std::move(rest)});
        int sign = (i + j) % 2 == 0 ? 1 : -1;  // (-1)^{i+j} with 1-based indices
        out += wedge(db, tail) * Scalar(sign);
      }
    }
  }
  return out;
}

Form delta_commutator(const Form& a, const SymplecticModel& model) {
  require_same_chart(a, Form::zero(model.chart()));
  const MatQ& g = model.bivector();
  return contract_bivector(g, d(a)) - d(contract_bivector(g, a));
}

// ---------------------------------------------------------------------------
// Symplectic star

namespace {

/// Gram determinant G^k(e_B, e_I) = det(G[B_a, I_b]).
Scalar gram_pairing(const SymplecticModel& model, const std::vector<int>& b,
                    const std::vector<int>& i) {
  int k = static_cast<int>(b.size());
  if (k == 0) return 1;
  MatQ m(k, k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) m.at(r, c) = model.pairing(b[r], i[c]);
  return m.det();
}

/// Sign of the shuffle (B, complement(B)) relative to (0, ..., 2n-1).
int complement_sign(const std::vector<int>& b, int dim, std::vector<int>& complement) {
  complement.clear();
  std::vector<bool> used(dim, false);
  for (int x : b) used[x] = true;
  for (int x = 0; x < dim; ++x)
    if (!used[x]) complement.push_back(x);
  std::vector<int> merged = b;
  merged.insert(merged.end(), complement.begin(), complement.end());
  return canonical_wedge(merged);
}

}  // namespace

Form star(const Form& a, const SymplecticModel& model) {
  require_same_chart(a, Form::zero(model.chart()));
  if (!a.is_homogeneous())
    throw DomainError(ErrorKind::NonHomogeneous, "star of a mixed-degree form");
  const ChartPtr& chart = a.chart();
  Form out = Form::zero(chart);
  if (a.is_zero()) return out;

  int dim = chart->dimension();
  int k = a.degree();

  // vol = vol_coeff * e_top on the chart.
  WedgeMonomial top;
  for (int i = 0; i < dim; ++i) top.indices.push_back(i);
  Poly vol_poly = model.volume().coefficient(top);
  Scalar vol_coeff = vol_poly.constant_value();

  std::vector<int> complement;
  for (const auto& beta : wedge_basis(dim, k)) {
    // e_beta ^ star(a) = G^k(e_beta, a) vol pins the complement coefficient.
    Poly pair_sum = Poly::zero();
    for (const auto& [w, p] : a.terms()) {
      Scalar g = gram_pairing(model, beta.indices, w.indices);
      if (g == 0) continue;
      pair_sum += p * g;
    }
    if (pair_sum.is_zero()) continue;
    int sign = complement_sign(beta.indices, dim, complement);
    Scalar factor = sign > 0 ? vol_coeff : Scalar(-vol_coeff);
    out += Form::monomial(chart, pair_sum * factor, WedgeMonomial{complement});
  }
  return out;
}

Form L(const Form& a, const SymplecticModel& model) {
  require_same_chart(a, Form::zero(model.chart()));
  return wedge(model.omega_form(), a);
}

Form Lstar(const Form& a, const SymplecticModel& model) {
  require_same_chart(a, Form::zero(model.chart()));
  return contract_bivector(model.bivector(), a);
}

Form A(const Form& a, const SymplecticModel& model) {
  return Lstar(L(a, model), model) - L(Lstar(a, model), model);
}

}  // namespace stratsym
