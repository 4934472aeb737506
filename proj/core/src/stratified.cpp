#include "stratsym/stratified.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

#include "stratsym/errors.hpp"
#include "stratsym/linalg.hpp"

namespace stratsym {

// ---------------------------------------------------------------------------
// StratifiedModel

StratifiedModel StratifiedModel::make(std::vector<StratumRecord> strata,
                                      std::vector<FrontierPair> frontier, bool compact,
                                      SmoothPresentation presentation,
                                      std::vector<std::string> sample_coordinates,
                                      std::map<std::string, ChartPtr> charts) {
  StratifiedModel m;
  m.strata_ = std::move(strata);
  m.frontier_ = std::move(frontier);
  m.compact_ = compact;
  m.presentation_ = std::move(presentation);
  m.sample_coordinates_ = std::move(sample_coordinates);
  m.charts_ = std::move(charts);
  m.validate_and_close();
  return m;
}

ChartPtr StratifiedModel::chart_of(const std::string& stratum_id) const {
  auto it = charts_.find(stratum_id);
  return it == charts_.end() ? nullptr : it->second;
}

void StratifiedModel::validate_and_close() {
  std::set<std::string> ids;
  for (const auto& s : strata_) {
    if (s.dimension < 0)
      throw DomainError(ErrorKind::InvalidModel, "stratum dimension must be nonnegative");
    if (!ids.insert(s.id).second)
      throw DomainError(ErrorKind::InvalidModel, "duplicate stratum id '" + s.id + "'");
  }
  for (const auto& p : frontier_) {
    if (!ids.count(p.lower) || !ids.count(p.upper))
      throw DomainError(ErrorKind::InvalidModel, "frontier pair names unknown stratum");
    if (p.lower == p.upper)
      throw DomainError(ErrorKind::InvalidModel, "frontier relation must be irreflexive");
    if (p.witness.empty())
      throw DomainError(ErrorKind::InvalidModel,
                        "frontier pair " + p.lower + " < " + p.upper + " lacks a closure witness");
  }
  for (const auto& [id, chart] : charts_) {
    if (!ids.count(id))
      throw DomainError(ErrorKind::InvalidModel, "chart attached to unknown stratum '" + id + "'");
    if (!chart)
      throw DomainError(ErrorKind::InvalidModel, "null chart attached to stratum '" + id + "'");
    for (const auto& s : strata_)
      if (s.id == id && !s.is_regular)
        throw DomainError(ErrorKind::InvalidModel,
                          "charts attach to regular strata only, got '" + id + "'");
  }

  // Transitive closure by iteration (models are small).
  closure_.clear();
  for (const auto& p : frontier_) closure_[{p.lower, p.upper}] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::pair<std::string, std::string>> extra;
    for (const auto& [ab, _] : closure_)
      for (const auto& [bc, __] : closure_)
        if (ab.second == bc.first && !closure_.count({ab.first, bc.second}))
          extra.push_back({ab.first, bc.second});
    for (const auto& e : extra) {
      closure_[e] = true;
      changed = true;
    }
  }
  for (const auto& [pair, _] : closure_) {
    if (pair.first == pair.second || closure_.count({pair.second, pair.first}))
      throw DomainError(ErrorKind::InvalidModel, "frontier order contains a cycle");
  }

  // Regular strata are maximal: nothing sits above them.
  for (const auto& s : strata_) {
    if (!s.is_regular) continue;
    for (const auto& [pair, _] : closure_)
      if (pair.first == s.id)
        throw DomainError(ErrorKind::InvalidModel,
                          "regular stratum '" + s.id + "' is not maximal");
  }
}

bool StratifiedModel::below(const std::string& lower, const std::string& upper) const {
  return closure_.count({lower, upper}) > 0;
}

int StratifiedModel::depth_of(const std::string& id) const {
  int best = 0;
  for (const auto& s : strata_) {
    if (s.id == id || !below(id, s.id)) continue;
    best = std::max(best, 1 + depth_of(s.id));
  }
  return best;
}

int StratifiedModel::depth() const {
  int best = 0;
  for (const auto& s : strata_) best = std::max(best, depth_of(s.id));
  return best;
}

int StratifiedModel::dimension() const {
  int best = 0;
  for (const auto& s : strata_) best = std::max(best, s.dimension);
  return best;
}

StratifiedModel cone(const StratifiedModel& m) {
  if (!m.is_compact())
    throw DomainError(ErrorKind::InvalidModel, "cone needs a compact link");
  std::set<std::string> ids;
  for (const auto& s : m.strata()) ids.insert(s.id);
  std::string apex = "apex";
  while (ids.count(apex)) apex += "'";

  std::vector<StratumRecord> strata;
  strata.push_back({apex, 0, false});
  for (const auto& s : m.strata())
    strata.push_back({s.id, s.dimension + 1, s.is_regular});  // S x (0, eps)

  std::vector<FrontierPair> frontier = m.frontier();
  for (const auto& s : m.strata())
    frontier.push_back({apex, s.id, "cone point lies in the closure of every cone level"});

  return StratifiedModel::make(std::move(strata), std::move(frontier), m.is_compact(),
                               m.presentation(), m.sample_coordinates());
}

StratifiedModel product(const StratifiedModel& a, const StratifiedModel& b) {
  std::vector<StratumRecord> strata;
  for (const auto& sa : a.strata())
    for (const auto& sb : b.strata())
      strata.push_back({"(" + sa.id + "," + sb.id + ")", sa.dimension + sb.dimension,
                        sa.is_regular && sb.is_regular});

  std::vector<FrontierPair> frontier;
  for (const auto& sa : a.strata()) {
    for (const auto& sb : b.strata()) {
      for (const auto& ta : a.strata()) {
        for (const auto& tb : b.strata()) {
          bool le_a = sa.id == ta.id || a.below(sa.id, ta.id);
          bool le_b = sb.id == tb.id || b.below(sb.id, tb.id);
          bool same = sa.id == ta.id && sb.id == tb.id;
          if (le_a && le_b && !same)
            frontier.push_back({"(" + sa.id + "," + sb.id + ")",
                                "(" + ta.id + "," + tb.id + ")", "product order"});
        }
      }
    }
  }
  return StratifiedModel::make(std::move(strata), std::move(frontier),
                               a.is_compact() && b.is_compact());
}

bool poset_isomorphic(const StratifiedModel& a, const StratifiedModel& b) {
  const auto& sa = a.strata();
  const auto& sb = b.strata();
  if (sa.size() != sb.size()) return false;
  std::vector<int> perm(sa.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> used(sb.size(), false);
  std::vector<int> assign(sa.size(), -1);

  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (i == sa.size()) return true;
    for (std::size_t j = 0; j < sb.size(); ++j) {
      if (used[j]) continue;
      if (a.depth_of(sa[i].id) != b.depth_of(sb[j].id)) continue;
      bool consistent = true;
      for (std::size_t prev = 0; prev < i && consistent; ++prev) {
        bool ord_a = a.below(sa[prev].id, sa[i].id);
        bool ord_b = b.below(sb[assign[prev]].id, sb[j].id);
        bool rev_a = a.below(sa[i].id, sa[prev].id);
        bool rev_b = b.below(sb[j].id, sb[assign[prev]].id);
        if (ord_a != ord_b || rev_a != rev_b) consistent = false;
      }
      if (!consistent) continue;
      used[j] = true;
      assign[i] = static_cast<int>(j);
      if (search(i + 1)) return true;
      used[j] = false;
      assign[i] = -1;
    }
    return false;
  };
  return search(0);
}

// ---------------------------------------------------------------------------
// Fibration model

FibrationSpec FibrationSpec::make(int ambient, int submanifold_dim, int base_dim) {
  FibrationSpec s;
  s.ambient = ambient;
  s.normal = ambient - submanifold_dim;
  s.fiber = submanifold_dim - base_dim;
  s.base = base_dim;
  if (s.normal < 0 || s.fiber < 0 || s.base < 0)
    throw DomainError(ErrorKind::InvalidModel, "fibration dimensions must be nested: l <= k <= n");
  return s;
}

std::vector<std::string> FibrationSpec::variable_names() const {
  std::vector<std::string> names;
  for (int i = 0; i < normal; ++i) names.push_back(normal_name(i));
  for (int i = 0; i < fiber; ++i) names.push_back(fiber_name(i));
  for (int i = 0; i < base; ++i) names.push_back(base_name(i));
  return names;
}

Poly MembershipCertificate::reassemble(const FibrationSpec& spec) const {
  Poly sum = base_part;
  for (int i = 0; i < static_cast<int>(normal_parts.size()); ++i)
    sum += Poly::variable(spec.normal_name(i)) * normal_parts[i];
  return sum;
}

MembershipCertificate fiber_constancy_membership(const Poly& g, const FibrationSpec& spec) {
  std::vector<std::string> names = spec.variable_names();
  Poly aligned = g.aligned_to(names);  // UnknownVariable on foreign variables

  MembershipCertificate cert;
  cert.normal_parts.assign(spec.normal, Poly::zero());
  cert.base_part = Poly::zero();

  bool member = true;
  for (const auto& [e, c] : aligned.terms()) {
    int first_normal = -1;
    for (int i = 0; i < spec.normal; ++i) {
      if (e[i] > 0) {
        first_normal = i;
        break;
      }
    }
    if (first_normal >= 0) {
      // Divide the term once by its first normal variable.
      Exponents reduced = e;
      reduced[first_normal] -= 1;
      cert.normal_parts[first_normal] += Poly::term(c, names, reduced);
      continue;
    }
    bool touches_fiber = false;
    for (int i = 0; i < spec.fiber; ++i)
      if (e[spec.normal + i] > 0) touches_fiber = true;
    if (touches_fiber) {
      member = false;
      continue;
    }
    cert.base_part += Poly::term(c, names, e);
  }

  cert.member = member;
  if (!member) {
    cert.normal_parts.assign(spec.normal, Poly::zero());
    cert.base_part = Poly::zero();
  }
  return cert;
}

CotangentGrowthReport cotangent_growth_witness(const FibrationSpec& spec, int m_max) {
  if (spec.fiber < 1)
    throw DomainError(ErrorKind::NoFiberCoordinate,
                      "cotangent growth witness needs a fiber coordinate");
  CotangentGrowthReport report;
  report.requested = m_max;
  report.truncation_degree = m_max + 2;

  int nvars = spec.ambient;
  int d_max = report.truncation_degree;

  // Index every monomial of degree <= d_max.
  std::map<Exponents, int> mono_index;
  std::vector<Exponents> monos;
  for (int deg = 0; deg <= d_max; ++deg) {
    for (const auto& e : monomials_of_degree(nvars, deg)) {
      mono_index[e] = static_cast<int>(monos.size());
      monos.push_back(e);
    }
  }

  auto in_ideal = [&](const Exponents& e) {
    // Monomial basis of m_s: anything with a normal variable, or a
    // nonconstant monomial in the base variables alone.
    int deg = std::accumulate(e.begin(), e.end(), 0);
    if (deg == 0) return false;
    for (int i = 0; i < spec.normal; ++i)
      if (e[i] > 0) return true;
    for (int i = 0; i < spec.fiber; ++i)
      if (e[spec.normal + i] > 0) return false;
    return true;
  };

  // Spanning monomials of m_s^2 up to the truncation degree.
  std::vector<Exponents> ideal_monos;
  for (const auto& e : monos)
    if (in_ideal(e)) ideal_monos.push_back(e);

  std::set<Exponents> square_set;
  for (const auto& e1 : ideal_monos) {
    for (const auto& e2 : ideal_monos) {
      Exponents prod(nvars);
      int deg = 0;
      for (int i = 0; i < nvars; ++i) {
        prod[i] = e1[i] + e2[i];
        deg += prod[i];
      }
      if (deg <= d_max) square_set.insert(prod);
    }
  }

  std::vector<VecQ> columns;
  auto unit_column = [&](const Exponents& e) {
    VecQ v(monos.size(), Scalar(0));
    v[mono_index.at(e)] = 1;
    return v;
  };
  for (const auto& e : square_set) columns.push_back(unit_column(e));
  int base_rank = span_rank(columns);

  // Witness vectors x1 * y1^m.
  for (int m = 1; m <= m_max; ++m) {
    Exponents e(nvars, 0);
    e[0] = 1;                // x1
    e[spec.normal] = m;      // y1^m
    columns.push_back(unit_column(e));
  }
  int full_rank = span_rank(columns);

  report.rank = full_rank - base_rank;
  report.independent = report.rank == m_max;
  return report;
}

// ---------------------------------------------------------------------------
// Bumps and partitions

BumpResult bump_function(const BumpSpec& spec) {
  if (spec.epsilon <= 0)
    throw DomainError(ErrorKind::NonpositiveBound, "bump radius must be positive");
  BumpResult out;

  // average = (rho_B + rho_cL) / 2, rescaled so the rising band of the
  // cutoff sits on [eps/5, 2eps/5].
  SmoothExpr avg =
      SmoothExpr::constant(Scalar(1, 2)) * (spec.rho_B + spec.rho_cL);
  SmoothExpr u = SmoothExpr::constant(5 / spec.epsilon) * avg +
                 SmoothExpr::constant(-1);
  // psi matches the glued cutoff construction: chi(avg) below the cap,
  // identically 1 past the plateau. f = 1 - psi.
  SmoothExpr psi = normalized_step(u);
  out.f = SmoothExpr::constant(1) + (-psi);

  SmoothExpr a = SmoothExpr::generator("a");
  SmoothExpr rising = normalized_step(SmoothExpr::constant(5 / spec.epsilon) * a +
                                      SmoothExpr::constant(-1));
  SmoothExpr falling = normalized_step(SmoothExpr::constant(4) +
                                       SmoothExpr::constant(-5 / spec.epsilon) * a);
  out.chi = rising * falling;
  return out;
}

PartitionResult partition_of_unity(const std::vector<BumpSpec>& cover,
                                   const std::vector<std::map<std::string, double>>& samples) {
  PartitionResult result;
  std::vector<SmoothExpr> bumps;
  for (const auto& spec : cover) bumps.push_back(bump_function(spec).f);

  SmoothExpr total = SmoothExpr::sum(bumps);
  double min_total = std::numeric_limits<double>::infinity();
  for (const auto& p : samples) {
    double s = total.eval(p);
    min_total = std::min(min_total, s);
    // Bumps evaluate to one-ulp noise on their zero plateau, so "sum is
    // zero" means "below the noise floor".
    if (s <= 1e-12)
      throw DomainError(ErrorKind::CoverGap, "cover leaves a sample point uncovered");
  }
  result.min_total = min_total;

  Scalar bound(min_total / 2);
  bound.canonicalize();
  SmoothExpr inverse_total = smooth_invert(total, bound);
  for (const auto& g : bumps) result.parts.push_back(g * inverse_total);
  return result;
}

SmoothExpr separates_points(const StratifiedModel& model,
                            const std::map<std::string, double>& x1,
                            const std::map<std::string, double>& x2) {
  if (x1 == x2)
    throw DomainError(ErrorKind::IdenticalPoints, "cannot separate a point from itself");
  const auto& coords = model.sample_coordinates();
  if (coords.empty())
    throw DomainError(ErrorKind::InvalidModel, "model has no sample coordinates");

  // Squared distance to x2 as the radial selector of a bump at x2.
  Poly dist2 = Poly::zero();
  for (const auto& name : coords) {
    auto it2 = x2.find(name);
    if (it2 == x2.end())
      throw DomainError(ErrorKind::UnknownVariable, "point misses coordinate '" + name + "'");
    Scalar center(it2->second);
    center.canonicalize();
    Poly diff = Poly::variable(name) - Poly::constant(center);
    dist2 += diff * diff;
  }

  double at_x1 = dist2.eval(x1);
  if (at_x1 <= 0)
    throw DomainError(ErrorKind::IdenticalPoints,
                      "points coincide on the model's sample coordinates");

  // f vanishes once dist2/2 >= 2 eps/5; pick eps so x1 sits past that.
  Scalar eps(at_x1 * 5.0 / 8.0);
  eps.canonicalize();
  BumpSpec spec;
  spec.epsilon = eps;
  spec.rho_B = SmoothExpr::constant(0);
  spec.rho_cL = SmoothExpr::from_poly(dist2);
  return bump_function(spec).f;
}

}  // namespace stratsym
