#include "gradedlc/rigidity.hpp"

#include <stdexcept>

namespace gradedlc {

void CheckReport::absorb(const CheckReport& other) {
  checked += other.checked;
  if (!other.passed) fail(other.name.empty() ? other.witness : other.name + ": " + other.witness);
}

std::size_t BlockTable::dim_at(const SignPattern& p) const {
  for (const auto& e : entries)
    if (e.pattern == p) return e.dim;
  throw std::out_of_range("sign pattern not in block table");
}

BlockTable block_table(DegreeCache& cache, std::size_t i, std::int64_t sample_radius) {
  const CMonomialIdeal& ideal = cache.ideal();
  BlockTable table;
  table.ideal_id = ideal.to_string();
  table.i = i;
  table.radius = sample_radius;
  for (auto& p : enumerate_blocks(ideal.num_vars())) {
    const std::size_t dim = cache.dim(i, p.corner);
    table.entries.push_back({std::move(p), dim});
  }
  for (const auto& u : box(ideal.num_vars(), sample_radius)) {
    const std::size_t dim = cache.dim(i, u);
    table.sample_log.emplace_back(u, dim);
    if (dim != table.dim_at(block_of(u))) table.mismatches.push_back(u);
  }
  return table;
}

BlockTable block_table(const CMonomialIdeal& ideal, std::size_t i, std::int64_t sample_radius) {
  DegreeCache cache(ideal);
  return block_table(cache, i, sample_radius);
}

CheckReport check_rigidity(DegreeCache& cache, std::size_t i, const std::vector<MultiDegree>& samples,
                           bool with_witness_maps) {
  CheckReport report{"rigidity", true, 0, {}};
  for (const auto& u : samples) {
    cache.ideal().check_degree(u);
    const SignPattern block = block_of(u);
    const std::size_t here = cache.dim(i, u);
    const std::size_t corner = cache.dim(i, block.corner);
    ++report.checked;
    if (here != corner) {
      report.fail("dim at " + u.to_string() + " is " + std::to_string(here) + " but corner " +
                  block.corner.to_string() + " has " + std::to_string(corner));
      return report;
    }
    if (!with_witness_maps || here == 0) continue;
    MultiDegree v = block.corner;
    for (std::size_t k = 0; k < u.size(); ++k) {
      const bool up = block.members[k];
      while (v[k] != u[k]) {
        const auto op = up ? CellOperator::Multiply : CellOperator::Differentiate;
        if (!is_invertible(cache.chain_map(i, v, op, k))) {
          report.fail(std::string(up ? "multiplication" : "differentiation") + " along axis " + std::to_string(k) +
                      " at " + v.to_string() + " is not invertible");
          return report;
        }
        v = v.shifted(k, up ? 1 : -1);
      }
    }
  }
  report.witness = std::to_string(report.checked) + " degrees match their corners";
  return report;
}

CheckReport check_rigidity(const CMonomialIdeal& ideal, std::size_t i, const std::vector<MultiDegree>& samples) {
  DegreeCache cache(ideal);
  return check_rigidity(cache, i, samples, true);
}

CheckReport check_straightness(DegreeCache& cache, std::size_t i, const std::vector<MultiDegree>& samples) {
  CheckReport report{"straightness", true, 0, {}};
  for (const auto& u : samples) {
    cache.ideal().check_degree(u);
    for (std::size_t k = 0; k < u.size(); ++k) {
      if (u[k] == -1) continue;
      ++report.checked;
      const RationalMatrix m = cache.chain_map(i, u, CellOperator::Multiply, k);
      if (!is_invertible(m)) {
        report.fail("multiplication along axis " + std::to_string(k) + " from " + u.to_string() + " is " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " and not bijective");
        return report;
      }
    }
  }
  report.witness = std::to_string(report.checked) + " multiplication maps bijective";
  return report;
}

CheckReport check_straightness(const CMonomialIdeal& ideal, std::size_t i, const std::vector<MultiDegree>& samples) {
  if (ideal.base() != BaseRing::Field) throw std::invalid_argument("straightness is checked over the field only");
  DegreeCache cache(ideal);
  return check_straightness(cache, i, samples);
}

CheckReport check_partial_isomorphisms(DegreeCache& cache, std::size_t i, const std::vector<MultiDegree>& samples) {
  CheckReport report{"partial-isomorphism", true, 0, {}};
  for (const auto& u : samples) {
    for (std::size_t k = 0; k < u.size(); ++k) {
      if (u[k] > -1) continue;
      ++report.checked;
      if (!is_invertible(cache.chain_map(i, u, CellOperator::Differentiate, k))) {
        report.fail("differentiation along axis " + std::to_string(k) + " from " + u.to_string() +
                    " is not bijective");
        return report;
      }
    }
  }
  report.witness = std::to_string(report.checked) + " differentiation maps bijective";
  return report;
}

std::size_t multiplicity_m0(const CMonomialIdeal& ideal, std::size_t i, const MultiDegree& u) {
  if (ideal.base() != BaseRing::Field) throw std::invalid_argument("multiplicity_m0 needs base field");
  return cohomology(ideal, i, u).dim;
}

CheckReport check_multiplicity_blocks(DegreeCache& cache, std::size_t i, const std::vector<MultiDegree>& samples) {
  CheckReport report{"multiplicity-m0", true, 0, {}};
  if (cache.ideal().base() != BaseRing::Field) throw std::invalid_argument("multiplicity_m0 needs base field");
  for (const auto& u : samples) {
    const SignPattern block = block_of(u);
    const std::size_t e_u = cache.dim(i, u);
    const std::size_t e_corner = cache.dim(i, block.corner);
    ++report.checked;
    if (e_u != e_corner) {
      report.fail("multiplicity " + std::to_string(e_u) + " at " + u.to_string() + " differs from " +
                  std::to_string(e_corner) + " at corner " + block.corner.to_string());
      return report;
    }
  }
  report.witness = std::to_string(report.checked) + " degrees with block-constant multiplicity";
  return report;
}

}  // namespace gradedlc
