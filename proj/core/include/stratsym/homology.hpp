#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stratsym/lefschetz.hpp"
#include "stratsym/symplectic.hpp"

namespace stratsym {

enum class OperatorTag { ExteriorD, BoundaryDelta };

/// Finite graded piece of the form complex. CE charts are selected by
/// form degree alone; coordinate charts additionally fix the total
/// degree t = polynomial degree + form degree, which d preserves and
/// delta lowers by 2.
struct PieceSelector {
  int form_degree = 0;
  std::optional<int> total_degree;  // required on coordinate charts
};

struct GradedPieceBasis {
  ChartPtr chart;
  PieceSelector selector;
  std::vector<Form> basis;
};

GradedPieceBasis graded_piece_basis(const ChartPtr& chart, const PieceSelector& selector);

/// Coordinates of `form` in the monomial basis of its graded piece.
VecQ form_coordinates(const Form& form, const GradedPieceBasis& basis);

/// Exact matrix of d or delta from the selected piece into its target
/// piece (d: (k,t) -> (k+1,t); delta: (k,t) -> (k-1,t-2)).
MatQ operator_matrix(const SymplecticModel& model, OperatorTag op, const PieceSelector& from);

/// Homology ranks per degree for one operator, with the selector fixing
/// the total degree on coordinate charts.
struct BettiTable {
  OperatorTag op;
  std::map<int, int> ranks;  // form degree -> rank

  /// sum_k (-1)^k rank_k.
  long euler_characteristic() const;
  std::vector<int> as_vector(int max_degree) const;
};

/// rank ker / rank im at one graded piece, by exact elimination.
int homology_rank(const SymplecticModel& model, OperatorTag op, const PieceSelector& piece);

/// All degrees 0..2n (CE charts), or all degrees at the given total
/// degree (coordinate charts). Pieces are computed in parallel across
/// `threads` workers with deterministic output order.
BettiTable betti(const SymplecticModel& model, OperatorTag op,
                 std::optional<int> total_degree = std::nullopt, int threads = 1);

/// Verdict of rank H_k(delta) == rank H^{2n-k}(d) for every k, matching
/// graded pieces through the star grading shift on coordinate charts.
struct DualityReport {
  bool holds = true;
  std::map<int, std::pair<int, int>> ranks;  // k -> (rank H_k(delta), rank H^{2n-k}(d))
};
DualityReport hodge_duality_check(const SymplecticModel& model,
                                  std::optional<int> total_degree = std::nullopt,
                                  int threads = 1);

/// Cocycle representatives spanning H^k(d) on a CE chart.
std::vector<Form> cohomology_basis(const SymplecticModel& model, int k);

/// Surjectivity of cup product with [omega^k]: H^{n-k} -> H^{n+k},
/// per k = 0..n. CE charts.
std::map<int, bool> hard_lefschetz_check(const SymplecticModel& model);

/// Searches the affine space {class_form + d theta} for a delta-closed
/// representative; nullopt when the linear system is infeasible. The
/// input must be closed. CE charts.
std::optional<Form> harmonic_representative_search(const SymplecticModel& model,
                                                   const Form& class_form);

/// Exactness identity Im delta ∩ ker d == Im d ∩ Im delta on one finite
/// graded piece.
bool cavalcanti_check(const SymplecticModel& model, const PieceSelector& piece);

}  // namespace stratsym
