#include "gradedlc/structure.hpp"

#include <algorithm>
#include <sstream>

namespace gradedlc {

namespace {

void require_graded(const CMonomialIdeal& ideal) {
  if (ideal.base() != BaseRing::GradedPID) throw std::invalid_argument("structure classification needs base graded_pid");
}

}  // namespace

void YWindow::validate() const {
  if (lo > -1 || hi < 0) throw std::invalid_argument("Y-window must contain -1 and 0");
}

bool YProfile::stable() const {
  return std::all_of(stability_checks.begin(), stability_checks.end(),
                     [](const StabilityCheck& c) { return c.bijective; });
}

std::string StructureTriple::to_string() const {
  std::ostringstream os;
  os << '(' << s << ',' << v << ',' << r << ')';
  return os.str();
}

YProfile y_profile(DegreeCache& cache, std::size_t i, const MultiDegree& u, const YWindow& window) {
  const CMonomialIdeal& ideal = cache.ideal();
  require_graded(ideal);
  window.validate();
  if (u.size() != ideal.d()) throw DimensionError("y_profile takes the X-part of the degree only");
  const std::size_t y = ideal.y_var();

  YProfile p;
  p.u = u;
  for (std::int64_t j = window.lo; j <= window.hi; ++j) p.dims[j] = cache.dim(i, u.with_prefix(j));
  p.delta_minus = p.dims.at(-1);
  p.delta_plus = p.dims.at(0);
  p.rho = rank(cache.chain_map(i, u.with_prefix(-1), CellOperator::Multiply, y));

  for (std::int64_t j = 0; j < window.hi; ++j)
    p.stability_checks.push_back(
        {j, true, is_invertible(cache.chain_map(i, u.with_prefix(j), CellOperator::Multiply, y))});
  for (std::int64_t j = -1; j > window.lo; --j)
    p.stability_checks.push_back(
        {j, false, is_invertible(cache.chain_map(i, u.with_prefix(j), CellOperator::Differentiate, y))});
  return p;
}

YProfile y_profile(const CMonomialIdeal& ideal, std::size_t i, const MultiDegree& u, const YWindow& window) {
  DegreeCache cache(ideal);
  return y_profile(cache, i, u, window);
}

StructureTriple structure_triple(const YProfile& profile) {
  if (!profile.stable()) {
    for (const auto& c : profile.stability_checks)
      if (!c.bijective)
        throw StabilityError(std::string(c.multiply ? "Y" : "d/dY") + "-map at Y-degree " + std::to_string(c.j) +
                             " over X-degree " + profile.u.to_string() + " is not bijective");
  }
  if (profile.rho > std::min(profile.delta_minus, profile.delta_plus))
    throw std::logic_error("rank of Y exceeds the dimensions it connects");
  return {profile.delta_minus - profile.rho, profile.rho, profile.delta_plus - profile.rho};
}

StructureTriple structure_triple(const CMonomialIdeal& ideal, std::size_t i, const MultiDegree& u,
                                 const YWindow& window) {
  return structure_triple(y_profile(ideal, i, u, window));
}

BassTable bass_table(const StructureTriple& t) {
  BassTable b;
  b.mu0_maximal = t.s;
  b.mu1_maximal = t.r;
  b.mu0_zero = t.v + t.r;
  b.mu1_zero = 0;
  if (!t.zero()) {
    b.injdim = t.r > 0 ? 1 : 0;
    b.dim_supp = (t.v + t.r) > 0 ? 1 : 0;
  }
  return b;
}

std::size_t socle_dimension(DegreeCache& cache, std::size_t i, const MultiDegree& u) {
  require_graded(cache.ideal());
  const RationalMatrix y = cache.chain_map(i, u.with_prefix(-1), CellOperator::Multiply, cache.ideal().y_var());
  return kernel_basis(y).cols();
}

std::size_t q_fiber_dimension(const CMonomialIdeal& ideal, std::size_t i, const MultiDegree& u) {
  return cohomology(ideal.y_inverted(), i, u).dim;
}

std::vector<BlockStructure> structure_blocks(DegreeCache& cache, std::size_t i, const YWindow& window) {
  std::vector<BlockStructure> out;
  for (auto& p : enumerate_blocks(cache.ideal().d())) {
    YProfile profile = y_profile(cache, i, p.corner, window);
    const StructureTriple t = structure_triple(profile);
    out.push_back({std::move(p), std::move(profile), t, bass_table(t)});
  }
  return out;
}

bool meets_base_ring(const CMonomialIdeal& ideal) {
  return std::any_of(ideal.generators().begin(), ideal.generators().end(), [](const CMonomial& g) {
    return std::all_of(g.x_exps.begin(), g.x_exps.end(), [](std::uint32_t e) { return e == 0; });
  });
}

CheckReport check_nonfg(const CMonomialIdeal& ideal, std::size_t i, const std::vector<MultiDegree>& samples) {
  CheckReport report{"non-finite-generation", true, 0, {}};
  require_graded(ideal);
  if (!meets_base_ring(ideal)) {
    report.applicable = false;
    report.witness = "theorem not applicable: the ideal does not meet K[Y]";
    return report;
  }
  DegreeCache cache(ideal);
  for (const auto& u : samples) {
    const StructureTriple t = structure_triple(y_profile(cache, i, u));
    ++report.checked;
    if (!t.zero() && t.s + t.v == 0) {
      report.fail("component at " + u.to_string() + " is finitely generated: " + t.to_string());
      return report;
    }
  }
  report.witness = std::to_string(report.checked) + " components checked";
  return report;
}

CheckReport check_free_components(const CMonomialIdeal& ideal, std::size_t i, const std::vector<MultiDegree>& samples) {
  CheckReport report{"free-components", true, 0, {}};
  if (!ideal.usual_monomial()) {
    report.applicable = false;
    report.witness = "not applicable: some generator has a Y-power";
    return report;
  }
  const CMonomialIdeal graded = ideal.has_y() ? ideal : ideal.over_graded_pid();
  const CMonomialIdeal field = graded.y_inverted();
  DegreeCache cache(graded);
  DegreeCache field_cache(field);
  for (const auto& u : samples) {
    const StructureTriple t = structure_triple(y_profile(cache, i, u));
    const std::size_t r = field_cache.dim(i, u);
    ++report.checked;
    if (t != StructureTriple{0, 0, r}) {
      report.fail("component at " + u.to_string() + " is " + t.to_string() + ", expected (0,0," + std::to_string(r) +
                  ")");
      return report;
    }
  }
  report.witness = std::to_string(report.checked) + " components free of the expected rank";
  return report;
}

CheckReport check_structure_consistency(DegreeCache& cache, std::size_t i, const std::vector<MultiDegree>& samples,
                                        const YWindow& window) {
  CheckReport report{"structure-consistency", true, 0, {}};
  const CMonomialIdeal& ideal = cache.ideal();
  require_graded(ideal);
  DegreeCache fiber(ideal.y_inverted());
  std::map<std::string, StructureTriple> by_block;
  for (const auto& b : structure_blocks(cache, i, window)) by_block[b.pattern.membership_string()] = b.triple;

  for (const auto& u : samples) {
    ++report.checked;
    const StructureTriple t = structure_triple(y_profile(cache, i, u, window));
    const BassTable b = bass_table(t);
    const std::string at = " at " + u.to_string() + " " + t.to_string();
    if (b.mu0_maximal != t.s || b.mu1_maximal != t.r || b.mu0_zero != t.v + t.r || b.mu1_zero != 0)
      report.fail("Bass numbers disagree with the triple" + at);
    else if (!b.injdim_bounded())
      report.fail("injdim exceeds dim supp" + at);
    else if (socle_dimension(cache, i, u) != t.s)
      report.fail("socle dimension differs from s" + at);
    else if (fiber.dim(i, u) != t.v + t.r)
      report.fail("Q(A)-fiber dimension " + std::to_string(fiber.dim(i, u)) + " differs from v + r" + at);
    else if (by_block.at(block_of(u).membership_string()) != t)
      report.fail("triple differs from its block corner" + at);
    if (!report.passed) return report;
  }
  report.witness = std::to_string(report.checked) + " components consistent";
  return report;
}

}  // namespace gradedlc
