#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "gradedlc/lattice.hpp"
#include "gradedlc/matrix.hpp"

namespace gradedlc {

/// The localization R[(prod_{j in sigma} g_j)^{-1}] of the Cech complex.
/// Both fields are bitmasks: generator indices and coordinate positions.
struct LocalizationCell {
  std::uint32_t sigma = 0;
  std::uint32_t support = 0;

  std::size_t size() const;
  std::vector<std::size_t> generators() const;
  /// The degree-u component is K * (monomial of degree u) or zero.
  bool active_at(const MultiDegree& u) const;
  bool operator==(const LocalizationCell&) const = default;
};

/// Degree-u piece of the Cech complex. levels[k] lists the active cells with
/// |sigma| = k; differentials[k] maps level k to level k+1 in the monomial
/// basis, so its entries lie in {-1, 0, 1}.
struct DegreeSlice {
  MultiDegree u;
  std::vector<std::vector<LocalizationCell>> levels;
  std::vector<RationalMatrix> differentials;

  std::size_t length() const { return levels.size() - 1; }
  std::size_t dim(std::size_t k) const { return k < levels.size() ? levels[k].size() : 0; }
  /// Position of the cell with the given sigma in level k, if active.
  std::optional<std::size_t> position(std::size_t k, std::uint32_t sigma) const;
};

/// Cell structure of the Cech complex of an ideal, shared by all of its slices.
class CechComplex {
 public:
  explicit CechComplex(const CMonomialIdeal& ideal);

  const CMonomialIdeal& ideal() const { return ideal_; }
  std::size_t length() const { return ideal_.num_generators(); }
  /// All cells with |sigma| = k in lexicographic order of their index lists.
  const std::vector<LocalizationCell>& cells(std::size_t k) const { return cells_[k]; }

  DegreeSlice slice(const MultiDegree& u) const;

 private:
  CMonomialIdeal ideal_;
  std::vector<std::vector<LocalizationCell>> cells_;
};

DegreeSlice build_slice(const CMonomialIdeal& ideal, const MultiDegree& u);

/// H^i at one degree: kernel of d^i, image of d^{i-1}, and representatives
/// (kernel vectors extending the image basis) spanning a complement.
struct CohomologyReport {
  std::size_t i = 0;
  MultiDegree u;
  std::size_t dim = 0;
  RationalMatrix kernel;
  RationalMatrix image;
  RationalMatrix representatives;
};

/// Slice plus lazily computed cohomology at every level.
class SliceCohomology {
 public:
  explicit SliceCohomology(DegreeSlice slice);

  const DegreeSlice& slice() const { return slice_; }
  const MultiDegree& u() const { return slice_.u; }
  std::size_t dim(std::size_t i) const;
  const CohomologyReport& report(std::size_t i) const;

 private:
  DegreeSlice slice_;
  std::vector<std::size_t> ranks_;  // rank of differentials[k]
  mutable std::vector<std::unique_ptr<CohomologyReport>> reports_;
};

CohomologyReport cohomology(const CMonomialIdeal& ideal, std::size_t i, const MultiDegree& u);

/// dim H^i_u for i = 0..t.
std::vector<std::size_t> cohomology_dims(const CMonomialIdeal& ideal, const MultiDegree& u);

enum class CellOperator {
  Multiply,      // u -> u + e_var
  Differentiate  // u -> u - e_var
};

/// Cochain map at level k between two slices. Multiplication sends the
/// spanning monomial to the spanning monomial; differentiation scales it by u_var.
RationalMatrix cell_map(const DegreeSlice& source, const DegreeSlice& target, std::size_t k, CellOperator op,
                        std::size_t var);

/// Matrix of the map on H^i induced by a cochain map, in representative bases.
RationalMatrix induced_map(const RationalMatrix& cochain_map, const CohomologyReport& source,
                           const CohomologyReport& target);

/// Memo of slice cohomology by degree for one ideal. Not thread-safe; give
/// each worker its own cache.
class DegreeCache {
 public:
  explicit DegreeCache(const CMonomialIdeal& ideal) : complex_(ideal) {}

  const CMonomialIdeal& ideal() const { return complex_.ideal(); }
  const CechComplex& complex() const { return complex_; }
  const SliceCohomology& at(const MultiDegree& u);
  std::size_t dim(std::size_t i, const MultiDegree& u);

  /// Map H^i_u -> H^i_{u + e_var} (Multiply) or H^i_u -> H^i_{u - e_var} (Differentiate).
  RationalMatrix chain_map(std::size_t i, const MultiDegree& u, CellOperator op, std::size_t var);

  void clear() { memo_.clear(); }
  /// Drops every memoized degree that is lexicographically below `bound`.
  void forget_below(const MultiDegree& bound) { memo_.erase(memo_.begin(), memo_.lower_bound(bound)); }

 private:
  CechComplex complex_;
  std::map<MultiDegree, std::unique_ptr<SliceCohomology>> memo_;
};

/// Map on H^i induced by multiplication with the variable at coordinate
/// position `var` (X_i, or Y over the graded PID).
RationalMatrix x_chain_map(const CMonomialIdeal& ideal, std::size_t i, const MultiDegree& u, std::size_t var);

/// Map on H^i induced by the derivation at coordinate position `var`
/// (d/dX_i, or d/dY over the graded PID).
RationalMatrix partial_chain_map(const CMonomialIdeal& ideal, std::size_t i, const MultiDegree& u, std::size_t var);

/// True iff X_var * d_var - u_var kills every level-i cochain of the slice, for every coordinate.
bool euler_action_check(const CMonomialIdeal& ideal, std::size_t i, const MultiDegree& u);
bool euler_action_check(DegreeCache& cache, std::size_t i, const MultiDegree& u);

}  // namespace gradedlc
