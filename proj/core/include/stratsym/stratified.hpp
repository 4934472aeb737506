#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stratsym/chart.hpp"
#include "stratsym/poly.hpp"
#include "stratsym/smooth_expr.hpp"

namespace stratsym {

struct StratumRecord {
  std::string id;
  int dimension = 0;
  bool is_regular = false;
};

/// Declared frontier relation lower < upper, carrying the geometric
/// closure witness as free text; the combinatorics are validated, the
/// geometry is recorded.
struct FrontierPair {
  std::string lower;
  std::string upper;
  std::string witness;
};

/// Coordinates of the local model R^n = R^{n-k} x R^{k-l} x R^l split
/// into normal x~, fiber y~ and base z~ directions.
struct FibrationSpec {
  int ambient = 0;  // n
  int normal = 0;   // n-k, variables x1..
  int fiber = 0;    // k-l, variables y1..
  int base = 0;     // l,   variables z1..

  static FibrationSpec make(int ambient, int submanifold_dim, int base_dim);
  std::vector<std::string> variable_names() const;
  std::string normal_name(int i) const { return "x" + std::to_string(i + 1); }
  std::string fiber_name(int i) const { return "y" + std::to_string(i + 1); }
  std::string base_name(int i) const { return "z" + std::to_string(i + 1); }
};

enum class PresentationKind { Embedded, Quotient, Resolvable };

struct SmoothPresentation {
  PresentationKind kind = PresentationKind::Embedded;
  /// Ambient dimension (embedded) or group action (quotient) as free
  /// text; constructions the sources carry out only abstractly (the
  /// resolution homotopy, orbit resolutions) stay documentation here.
  std::string description;
  std::vector<std::string> generators;
  /// Local model data for resolvable presentations.
  std::optional<FibrationSpec> fibration;
};

/// Finite poset of strata with depth, compactness flag and a
/// smooth-structure presentation. Depth of a stratum is the longest
/// strictly increasing chain starting there; depth of the model is the
/// maximum over strata.
class StratifiedModel {
 public:
  StratifiedModel() = default;
  /// Validates: distinct ids, dimensions >= 0, order antisymmetric
  /// (declared pairs plus transitive closure, no cycles), regular strata
  /// maximal.
  static StratifiedModel make(std::vector<StratumRecord> strata,
                              std::vector<FrontierPair> frontier, bool compact,
                              SmoothPresentation presentation = {},
                              std::vector<std::string> sample_coordinates = {},
                              std::map<std::string, ChartPtr> charts = {});

  const std::vector<StratumRecord>& strata() const { return strata_; }
  const std::vector<FrontierPair>& frontier() const { return frontier_; }
  const SmoothPresentation& presentation() const { return presentation_; }
  const std::vector<std::string>& sample_coordinates() const { return sample_coordinates_; }
  /// Optional chart attached to a regular stratum (nullptr if none).
  ChartPtr chart_of(const std::string& stratum_id) const;
  bool is_compact() const { return compact_; }

  bool below(const std::string& lower, const std::string& upper) const;
  int depth_of(const std::string& id) const;
  int depth() const;
  int dimension() const;

 private:
  std::vector<StratumRecord> strata_;
  std::vector<FrontierPair> frontier_;
  SmoothPresentation presentation_;
  std::vector<std::string> sample_coordinates_;
  std::map<std::string, ChartPtr> charts_;
  bool compact_ = false;
  std::map<std::pair<std::string, std::string>, bool> closure_;  // transitive closure

  void validate_and_close();
};

/// Cone over a compact model: one new apex stratum of dimension zero
/// below everything; depth rises by one. Requires the compact flag.
StratifiedModel cone(const StratifiedModel& m);

/// Product model: strata are pairs, the order is the product order,
/// depth adds.
StratifiedModel product(const StratifiedModel& a, const StratifiedModel& b);

/// Poset isomorphism (strata matched by dimension/regularity and order
/// structure). Backtracking; intended for the small shipped models.
bool poset_isomorphic(const StratifiedModel& a, const StratifiedModel& b);

// ---------------------------------------------------------------------------
// Fiber-constancy membership

/// Certificate g = x1 g_1 + ... + x_{n-k} g_{n-k} + c(z~).
struct MembershipCertificate {
  bool member = false;
  std::vector<Poly> normal_parts;
  Poly base_part;

  Poly reassemble(const FibrationSpec& spec) const;
};

/// Membership in the algebra of functions constant along fibers: true
/// iff the restriction g(x~=0) has zero y~-degree. On success the split
/// is computed by exact term sorting.
MembershipCertificate fiber_constancy_membership(const Poly& g, const FibrationSpec& spec);

struct CotangentGrowthReport {
  int requested = 0;
  int rank = 0;
  bool independent = false;
  int truncation_degree = 0;
};

/// Verifies by exact rank computation that x1*y1^m for m = 1..m_max stay
/// linearly independent in m_s / m_s^2 truncated at polynomial degree
/// m_max + 2, where m_s is the maximal ideal of the fiber-constant
/// algebra at the origin. Needs a fiber coordinate
/// (DomainError(NoFiberCoordinate) otherwise).
CotangentGrowthReport cotangent_growth_witness(const FibrationSpec& spec, int m_max);

// ---------------------------------------------------------------------------
// Bump functions and partitions of unity

/// Data for a bump on the local model B(eps) x cL(eps): the radius and
/// the two nonnegative radial selectors.
struct BumpSpec {
  Scalar epsilon = 1;
  SmoothExpr rho_B = SmoothExpr::constant(0);
  SmoothExpr rho_cL = SmoothExpr::constant(0);
};

struct BumpResult {
  /// The bump: 1 at the center, 0 once (rho_B + rho_cL)/2 >= 2 eps/5
  /// (hence outside the eps-neighborhood), values in [0, 1].
  SmoothExpr f;
  /// The auxiliary cutoff: 0 on (0, eps/5], 1 on [2eps/5, 3eps/5],
  /// 0 on [4eps/5, eps), strictly between on the transition bands.
  /// Single generator "a".
  SmoothExpr chi;
};

BumpResult bump_function(const BumpSpec& spec);

struct PartitionResult {
  std::vector<SmoothExpr> parts;
  double min_total = 0;  // min of sum g_i over the samples
};

/// Subordinate partition of unity f_i = g_i / sum_j g_j from bumps, with
/// the reciprocal guard bound taken from sampling. Raises
/// DomainError(CoverGap) when the bumps all vanish at a sample point.
PartitionResult partition_of_unity(const std::vector<BumpSpec>& cover,
                                   const std::vector<std::map<std::string, double>>& samples);

/// A witness function with f(x1) = 0 and f(x2) = 1, built as a bump
/// centered at x2 scaled to exclude x1. Points are generator-value maps
/// over the model's sample coordinates.
SmoothExpr separates_points(const StratifiedModel& model,
                            const std::map<std::string, double>& x1,
                            const std::map<std::string, double>& x2);

}  // namespace stratsym
