#include "stratsym/homology.hpp"

#include <algorithm>
#include <functional>

#include "stratsym/errors.hpp"
#include "stratsym/parallel.hpp"

namespace stratsym {

namespace {

Form apply_operator(const SymplecticModel& model, OperatorTag op, const Form& a) {
  return op == OperatorTag::ExteriorD ? d(a) : delta_commutator(a, model);
}

PieceSelector target_piece(OperatorTag op, const PieceSelector& from) {
  PieceSelector to;
  if (op == OperatorTag::ExteriorD) {
    to.form_degree = from.form_degree + 1;
    to.total_degree = from.total_degree;
  } else {
    to.form_degree = from.form_degree - 1;
    if (from.total_degree) to.total_degree = *from.total_degree - 2;
  }
  return to;
}

PieceSelector source_piece(OperatorTag op, const PieceSelector& to) {
  PieceSelector from;
  if (op == OperatorTag::ExteriorD) {
    from.form_degree = to.form_degree - 1;
    from.total_degree = to.total_degree;
  } else {
    from.form_degree = to.form_degree + 1;
    if (to.total_degree) from.total_degree = *to.total_degree + 2;
  }
  return from;
}

}  // namespace

GradedPieceBasis graded_piece_basis(const ChartPtr& chart, const PieceSelector& selector) {
  GradedPieceBasis out;
  out.chart = chart;
  out.selector = selector;
  int k = selector.form_degree;
  if (k < 0 || k > chart->dimension()) return out;

  if (chart->kind() == ChartKind::ChevalleyEilenberg) {
    for (const auto& w : wedge_basis(chart->dimension(), k))
      out.basis.push_back(Form::monomial(chart, Poly::constant(1), w));
    return out;
  }

  if (!selector.total_degree)
    throw DomainError(ErrorKind::InvalidModel,
                      "coordinate chart pieces need a total degree");
  int poly_degree = *selector.total_degree - k;
  if (poly_degree < 0) return out;
  const auto& names = chart->names();
  for (const auto& w : wedge_basis(chart->dimension(), k)) {
    for (const auto& e : monomials_of_degree(chart->dimension(), poly_degree)) {
      out.basis.push_back(Form::monomial(chart, Poly::term(1, names, e), w));
    }
  }
  return out;
}

VecQ form_coordinates(const Form& form, const GradedPieceBasis& basis) {
  // Index the piece by (wedge monomial, coefficient monomial), with the
  // coefficient exponents aligned to the chart context.
  VecQ coords(basis.basis.size(), Scalar(0));
  const auto& names = basis.chart->names();
  std::map<std::pair<WedgeMonomial, Exponents>, int> index;
  for (std::size_t i = 0; i < basis.basis.size(); ++i) {
    const Form& b = basis.basis[i];
    const auto& [w, p] = *b.terms().begin();
    Poly aligned = p.aligned_to(names);
    index[{w, aligned.terms().begin()->first}] = static_cast<int>(i);
  }
  for (const auto& [w, p] : form.terms()) {
    Poly aligned = p.aligned_to(names);
    for (const auto& [e, c] : aligned.terms()) {
      auto it = index.find({w, e});
      if (it == index.end())
        throw DomainError(ErrorKind::InvalidModel,
                          "form does not lie in the selected graded piece");
      coords[it->second] = c;
    }
  }
  return coords;
}

MatQ operator_matrix(const SymplecticModel& model, OperatorTag op, const PieceSelector& from) {
  GradedPieceBasis source = graded_piece_basis(model.chart(), from);
  GradedPieceBasis target = graded_piece_basis(model.chart(), target_piece(op, from));
  MatQ m(static_cast<int>(target.basis.size()), static_cast<int>(source.basis.size()));
  for (std::size_t c = 0; c < source.basis.size(); ++c) {
    Form image = apply_operator(model, op, source.basis[c]);
    if (image.is_zero()) continue;
    VecQ col = form_coordinates(image, target);
    for (std::size_t r = 0; r < col.size(); ++r) m.at(static_cast<int>(r), static_cast<int>(c)) = col[r];
  }
  return m;
}

long BettiTable::euler_characteristic() const {
  long chi = 0;
  for (const auto& [k, r] : ranks) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(r);
  return chi;
}

std::vector<int> BettiTable::as_vector(int max_degree) const {
  std::vector<int> v;
  for (int k = 0; k <= max_degree; ++k) {
    auto it = ranks.find(k);
    v.push_back(it == ranks.end() ? 0 : it->second);
  }
  return v;
}

int homology_rank(const SymplecticModel& model, OperatorTag op, const PieceSelector& piece) {
  GradedPieceBasis here = graded_piece_basis(model.chart(), piece);
  if (here.basis.empty()) return 0;
  MatQ out = operator_matrix(model, op, piece);
  MatQ in = operator_matrix(model, op, source_piece(op, piece));
  int dim = static_cast<int>(here.basis.size());
  int rank_out = out.rank();
  int rank_in = in.rank();
  return dim - rank_out - rank_in;
}

BettiTable betti(const SymplecticModel& model, OperatorTag op,
                 std::optional<int> total_degree, int threads) {
  if (model.chart()->kind() == ChartKind::Coordinate && !total_degree)
    throw DomainError(ErrorKind::InvalidModel,
                      "coordinate chart Betti numbers need a total degree");
  BettiTable table;
  table.op = op;
  int top = model.dimension();
  std::function<int(int)> piece_rank = [&](int k) {
    PieceSelector sel;
    sel.form_degree = k;
    sel.total_degree = total_degree;
    return homology_rank(model, op, sel);
  };
  std::vector<int> ranks = parallel_map<int>(top + 1, piece_rank, threads);
  for (int k = 0; k <= top; ++k) table.ranks[k] = ranks[k];
  return table;
}

DualityReport hodge_duality_check(const SymplecticModel& model,
                                  std::optional<int> total_degree, int threads) {
  DualityReport report;
  int top = model.dimension();

  if (model.chart()->kind() == ChartKind::ChevalleyEilenberg) {
    BettiTable delta_table = betti(model, OperatorTag::BoundaryDelta, std::nullopt, threads);
    BettiTable d_table = betti(model, OperatorTag::ExteriorD, std::nullopt, threads);
    for (int k = 0; k <= top; ++k) {
      int lhs = delta_table.ranks.at(k);
      int rhs = d_table.ranks.at(top - k);
      report.ranks[k] = {lhs, rhs};
      if (lhs != rhs) report.holds = false;
    }
    return report;
  }

  if (!total_degree)
    throw DomainError(ErrorKind::InvalidModel, "coordinate duality check needs a total degree");
  // Star sends the piece (k, t) onto (2n-k, t + 2n - 2k).
  for (int k = 0; k <= top; ++k) {
    PieceSelector delta_piece{k, *total_degree};
    PieceSelector d_piece{top - k, *total_degree + top - 2 * k};
    int lhs = homology_rank(model, OperatorTag::BoundaryDelta, delta_piece);
    int rhs = homology_rank(model, OperatorTag::ExteriorD, d_piece);
    report.ranks[k] = {lhs, rhs};
    if (lhs != rhs) report.holds = false;
  }
  return report;
}

std::vector<Form> cohomology_basis(const SymplecticModel& model, int k) {
  if (model.chart()->kind() != ChartKind::ChevalleyEilenberg)
    throw DomainError(ErrorKind::InvalidModel, "cohomology bases are for CE charts");
  PieceSelector piece{k, std::nullopt};
  GradedPieceBasis here = graded_piece_basis(model.chart(), piece);
  if (here.basis.empty()) return {};

  MatQ out = operator_matrix(model, OperatorTag::ExteriorD, piece);
  std::vector<VecQ> cocycles = out.kernel_basis();

  MatQ in = operator_matrix(model, OperatorTag::ExteriorD, source_piece(OperatorTag::ExteriorD, piece));
  std::vector<VecQ> exact;
  for (int c = 0; c < in.cols(); ++c) {
    VecQ col(in.rows());
    for (int r = 0; r < in.rows(); ++r) col[r] = in.at(r, c);
    exact.push_back(std::move(col));
  }

  // Keep cocycles whose classes extend a basis of the image.
  std::vector<Form> classes;
  std::vector<VecQ> accumulated = exact;
  for (const auto& z : cocycles) {
    if (in_span(accumulated, z)) continue;
    accumulated.push_back(z);
    Form rep = Form::zero(model.chart());
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (z[i] == 0) continue;
      rep += here.basis[i] * z[i];
    }
    classes.push_back(std::move(rep));
  }
  return classes;
}

std::map<int, bool> hard_lefschetz_check(const SymplecticModel& model) {
  if (model.chart()->kind() != ChartKind::ChevalleyEilenberg)
    throw DomainError(ErrorKind::InvalidModel, "hard Lefschetz check runs on CE charts");
  int n = model.half_dimension();
  std::map<int, bool> verdicts;
  for (int k = 0; k <= n; ++k) {
    // Images of H^{n-k} classes under omega^k, modulo exact forms.
    std::vector<Form> lower = cohomology_basis(model, n - k);
    PieceSelector upper_piece{n + k, std::nullopt};
    GradedPieceBasis upper = graded_piece_basis(model.chart(), upper_piece);

    MatQ out_up = operator_matrix(model, OperatorTag::ExteriorD, upper_piece);
    int dim_ker = static_cast<int>(upper.basis.size()) - out_up.rank();

    MatQ in_up =
        operator_matrix(model, OperatorTag::ExteriorD, source_piece(OperatorTag::ExteriorD, upper_piece));
    std::vector<VecQ> spanned;
    for (int c = 0; c < in_up.cols(); ++c) {
      VecQ col(in_up.rows());
      for (int r = 0; r < in_up.rows(); ++r) col[r] = in_up.at(r, c);
      spanned.push_back(std::move(col));
    }
    for (const auto& z : lower) {
      Form image = z;
      for (int i = 0; i < k; ++i) image = L(image, model);
      spanned.push_back(form_coordinates(image, upper));
    }
    verdicts[k] = span_rank(spanned) == dim_ker;
  }
  return verdicts;
}

std::optional<Form> harmonic_representative_search(const SymplecticModel& model,
                                                   const Form& class_form) {
  if (model.chart()->kind() != ChartKind::ChevalleyEilenberg)
    throw DomainError(ErrorKind::InvalidModel, "harmonic search runs on CE charts");
  if (class_form.is_zero()) return Form::zero(model.chart());
  int k = class_form.degree();
  if (!d(class_form).is_zero())
    throw DomainError(ErrorKind::InvalidModel, "harmonic search needs a closed form");

  // Solve delta(z + d theta) = 0 for theta of degree k-1.
  PieceSelector theta_piece{k - 1, std::nullopt};
  GradedPieceBasis theta_basis = graded_piece_basis(model.chart(), theta_piece);
  PieceSelector target{k - 1, std::nullopt};
  GradedPieceBasis target_basis = graded_piece_basis(model.chart(), target);

  VecQ rhs = form_coordinates(delta_commutator(class_form, model), target_basis);
  for (auto& x : rhs) x = -x;

  if (theta_basis.basis.empty()) {
    bool already = true;
    for (const auto& x : rhs)
      if (x != 0) already = false;
    return already ? std::optional<Form>(class_form) : std::nullopt;
  }

  MatQ system(static_cast<int>(target_basis.basis.size()),
              static_cast<int>(theta_basis.basis.size()));
  for (std::size_t c = 0; c < theta_basis.basis.size(); ++c) {
    Form image = delta_commutator(d(theta_basis.basis[c]), model);
    if (image.is_zero()) continue;
    VecQ col = form_coordinates(image, target_basis);
    for (std::size_t r = 0; r < col.size(); ++r)
      system.at(static_cast<int>(r), static_cast<int>(c)) = col[r];
  }
  auto solution = MatQ::solve(system, rhs);
  if (!solution) return std::nullopt;

  Form theta = Form::zero(model.chart());
  for (std::size_t i = 0; i < solution->size(); ++i) {
    if ((*solution)[i] == 0) continue;
    theta += theta_basis.basis[i] * (*solution)[i];
  }
  return class_form + d(theta);
}

bool cavalcanti_check(const SymplecticModel& model, const PieceSelector& piece) {
  GradedPieceBasis here = graded_piece_basis(model.chart(), piece);
  if (here.basis.empty()) return true;

  auto columns = [](const MatQ& m) {
    std::vector<VecQ> cols;
    for (int c = 0; c < m.cols(); ++c) {
      VecQ col(m.rows());
      for (int r = 0; r < m.rows(); ++r) col[r] = m.at(r, c);
      cols.push_back(std::move(col));
    }
    return cols;
  };

  MatQ delta_in =
      operator_matrix(model, OperatorTag::BoundaryDelta, source_piece(OperatorTag::BoundaryDelta, piece));
  std::vector<VecQ> im_delta = columns(delta_in);

  MatQ d_in =
      operator_matrix(model, OperatorTag::ExteriorD, source_piece(OperatorTag::ExteriorD, piece));
  std::vector<VecQ> im_d = columns(d_in);

  MatQ d_out = operator_matrix(model, OperatorTag::ExteriorD, piece);
  std::vector<VecQ> ker_d = d_out.kernel_basis();

  std::vector<VecQ> lhs = intersect_spans(im_delta, ker_d);
  std::vector<VecQ> rhs = intersect_spans(im_d, im_delta);
  return same_span(lhs, rhs);
}

}  // namespace stratsym
