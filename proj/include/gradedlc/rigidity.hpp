#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gradedlc/cech.hpp"
#include "gradedlc/lattice.hpp"

namespace gradedlc {

/// Outcome of one named verification. `witness` holds the first
/// counterexample on failure, or a short summary on success.
struct CheckReport {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::string witness;
  bool applicable = true;  // false when the checked statement's hypothesis fails

  std::string status() const { return !applicable ? "not-applicable" : passed ? "pass" : "fail"; }
  void fail(std::string why) {
    if (passed) witness = std::move(why);
    passed = false;
  }
  /// Folds another report into this one, keeping the first failure.
  void absorb(const CheckReport& other);
};

struct BlockEntry {
  SignPattern pattern;
  std::size_t dim = 0;
};

/// dim H^i at every block corner, plus the sampled degrees that were checked
/// against it. Over the graded PID the Y-degree is the first block axis.
struct BlockTable {
  std::string ideal_id;
  std::size_t i = 0;
  std::int64_t radius = 0;
  std::vector<BlockEntry> entries;
  std::vector<std::pair<MultiDegree, std::size_t>> sample_log;
  std::vector<MultiDegree> mismatches;

  std::size_t dim_at(const SignPattern& p) const;
  bool consistent() const { return mismatches.empty(); }
};

BlockTable block_table(const CMonomialIdeal& ideal, std::size_t i, std::int64_t sample_radius);
BlockTable block_table(DegreeCache& cache, std::size_t i, std::int64_t sample_radius);

/// For every sample: its dimension equals the corner's, and each single step
/// on a path from the corner (X-multiplication on nonnegative coordinates,
/// differentiation on negative ones) induces an isomorphism.
CheckReport check_rigidity(const CMonomialIdeal& ideal, std::size_t i, const std::vector<MultiDegree>& samples);
CheckReport check_rigidity(DegreeCache& cache, std::size_t i, const std::vector<MultiDegree>& samples,
                           bool with_witness_maps = true);

/// Every X-multiplication out of a sample, along an axis whose coordinate is
/// not -1, is bijective on H^i.
CheckReport check_straightness(const CMonomialIdeal& ideal, std::size_t i, const std::vector<MultiDegree>& samples);
CheckReport check_straightness(DegreeCache& cache, std::size_t i, const std::vector<MultiDegree>& samples);

/// Differentiation out of a sample along an axis with negative coordinate is bijective on H^i.
CheckReport check_partial_isomorphisms(DegreeCache& cache, std::size_t i, const std::vector<MultiDegree>& samples);

/// Multiplicity of H^i_u as a K[E_1..E_d]-module over the field. The module is
/// finite-dimensional, so its Bernstein dimension is 0 and the multiplicity is dim_K.
std::size_t multiplicity_m0(const CMonomialIdeal& ideal, std::size_t i, const MultiDegree& u);

/// multiplicity_m0 is constant on blocks and vanishes exactly where the block table does.
CheckReport check_multiplicity_blocks(DegreeCache& cache, std::size_t i, const std::vector<MultiDegree>& samples);

}  // namespace gradedlc
