#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gradedlc/cech.hpp"
#include "gradedlc/lattice.hpp"
#include "gradedlc/rigidity.hpp"

namespace gradedlc {

// Components over the graded PID K[Y] model components over K[[Y]]. A graded
// component N = H^i_I(R)_u is a Z-graded K[Y]-module whose Y-degree pieces are
// constant for j <= -1 and for j >= 0, with Y bijective inside each range. Such
// a module is determined by Y: N_{-1} -> N_0 of rank rho, and splits as
//   K[Y^-1]Y^-1  (socle at j = -1)  -- the model of E(A/(Y)),  s = dim N_{-1} - rho
//   K[Y, Y^-1]                      -- the model of Q(A),      v = rho
//   K[Y]         (generator at j=0) -- the model of A,         r = dim N_0 - rho

/// Thrown when a Y-map that rigidity forces to be bijective is not.
class StabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Y-degrees sampled by y_profile; must straddle the -1 | 0 boundary.
struct YWindow {
  std::int64_t lo = -2;
  std::int64_t hi = 1;

  void validate() const;
};

struct StabilityCheck {
  std::int64_t j = 0;
  bool multiply = true;  // Y: j -> j+1 when true, d/dY: j -> j-1 otherwise
  bool bijective = false;
};

struct YProfile {
  MultiDegree u;  // X-part only
  std::map<std::int64_t, std::size_t> dims;
  std::size_t delta_minus = 0;
  std::size_t delta_plus = 0;
  std::size_t rho = 0;
  std::vector<StabilityCheck> stability_checks;

  bool stable() const;
};

struct StructureTriple {
  std::size_t s = 0;  // copies of E(A/(Y))
  std::size_t v = 0;  // copies of Q(A)
  std::size_t r = 0;  // copies of A

  bool operator==(const StructureTriple&) const = default;
  bool zero() const { return s == 0 && v == 0 && r == 0; }
  std::string to_string() const;
};

/// Bass numbers at the two primes (Y) and (0) of A, with injective dimension and
/// support dimension. Both dimensions are empty for the zero module.
struct BassTable {
  std::size_t mu0_maximal = 0;
  std::size_t mu1_maximal = 0;
  std::size_t mu0_zero = 0;
  std::size_t mu1_zero = 0;
  std::optional<int> injdim;
  std::optional<int> dim_supp;

  bool injdim_bounded() const { return !injdim || (dim_supp && *injdim <= *dim_supp); }
};

YProfile y_profile(DegreeCache& cache, std::size_t i, const MultiDegree& u, const YWindow& window = {});
YProfile y_profile(const CMonomialIdeal& ideal, std::size_t i, const MultiDegree& u, const YWindow& window = {});

/// Throws StabilityError unless the profile is stable.
StructureTriple structure_triple(const YProfile& profile);
StructureTriple structure_triple(const CMonomialIdeal& ideal, std::size_t i, const MultiDegree& u,
                                 const YWindow& window = {});

BassTable bass_table(const StructureTriple& t);

/// dim of the kernel of Y on H^i at (j = -1, u), via an explicit kernel basis.
std::size_t socle_dimension(DegreeCache& cache, std::size_t i, const MultiDegree& u);

/// dim_K H^i_u for the ideal with Y made a unit (the Q(A)-fiber).
std::size_t q_fiber_dimension(const CMonomialIdeal& ideal, std::size_t i, const MultiDegree& u);

struct BlockStructure {
  SignPattern pattern;  // over the X-coordinates
  YProfile profile;
  StructureTriple triple;
  BassTable bass;
};

/// One entry per X-block, evaluated at the block corner.
std::vector<BlockStructure> structure_blocks(DegreeCache& cache, std::size_t i, const YWindow& window = {});

/// Some generator is a pure power of Y (or the unit), i.e. I meets A.
bool meets_base_ring(const CMonomialIdeal& ideal);

/// Components of an ideal meeting A are not finitely generated: s + v >= 1 where nonzero.
CheckReport check_nonfg(const CMonomialIdeal& ideal, std::size_t i, const std::vector<MultiDegree>& samples);

/// For a usual monomial ideal every component is A^r with r the dimension over the field.
CheckReport check_free_components(const CMonomialIdeal& ideal, std::size_t i, const std::vector<MultiDegree>& samples);

/// Bass-number formulas, injdim <= dim supp, socle = s, the Q(A)-rank identity
/// v + r = q_fiber_dimension, and block constancy of (s, v, r).
CheckReport check_structure_consistency(DegreeCache& cache, std::size_t i, const std::vector<MultiDegree>& samples,
                                        const YWindow& window = {});

}  // namespace gradedlc
