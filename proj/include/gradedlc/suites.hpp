#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "gradedlc/lattice.hpp"
#include "gradedlc/rigidity.hpp"
#include "gradedlc/structure.hpp"
#include "gradedlc/weyl.hpp"

namespace gradedlc {

inline constexpr std::uint64_t kDefaultCorpusSeed = 42;
inline constexpr std::size_t kDefaultCorpusSize = 50;
inline constexpr std::uint64_t kDefaultWeylSeed = 7;

struct CorpusOptions {
  std::size_t max_d = 3;
  std::size_t max_generators = 5;
  std::uint32_t max_exponent = 3;
};

/// Deterministic random ideals. Even positions are over the field; odd
/// positions are over the graded PID, every other one of them with no Y-powers.
/// No generator is a unit.
std::vector<CMonomialIdeal> generate_corpus(std::uint64_t seed, std::size_t count, const CorpusOptions& options = {});

/// --jobs fallback: GRADEDLC_JOBS if set and positive, else 1.
unsigned default_jobs();

/// Runs body(k) for k in [0, n) on up to `jobs` threads.
template <class Body>
void parallel_for(std::size_t n, unsigned jobs, Body body) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t k = 0; k < n; ++k) body(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  for (unsigned w = 0; w < std::min<std::size_t>(jobs, n); ++w)
    workers.emplace_back([&] {
      for (std::size_t k = next++; k < n; k = next++) body(k);
    });
}

struct SuiteOptions {
  std::int64_t radius = 6;
  /// Box radius for chain-map witnesses, which need cohomology bases at every point.
  std::int64_t witness_radius = 6;
  YWindow window;
  unsigned jobs = 1;
  std::uint64_t seed = kDefaultWeylSeed;
  std::size_t weyl_instances = 1000;
};

/// For every 0 <= i <= t: dims on the radius box equal the corner dims, and
/// the corner-to-degree chain maps are isomorphisms on the witness box.
CheckReport rigidity_suite(const CMonomialIdeal& ideal, const SuiteOptions& options);
/// Field ideals only; X-multiplication bijective off coordinate -1.
CheckReport straightness_suite(const CMonomialIdeal& ideal, const SuiteOptions& options);
/// Euler action on every nonzero slice level in the witness box.
CheckReport eulerian_suite(const CMonomialIdeal& ideal, const SuiteOptions& options);
/// Field ideals only; multiplicity_m0 constant on blocks.
CheckReport multiplicity_suite(const CMonomialIdeal& ideal, const SuiteOptions& options);
/// Graded-PID ideals: Bass/socle/rank consistency, plus the free-component and
/// non-finite-generation statements where they apply.
std::vector<CheckReport> structure_suite(const CMonomialIdeal& ideal, const SuiteOptions& options);

/// Random inputs for the Weyl identity checks.
class WeylSampler {
 public:
  explicit WeylSampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  /// Numerator and denominator bounded by 100 in absolute value; never zero.
  Rational coefficient();
  WeylAlgebra algebra(std::size_t max_d = 3);
  /// Random element with exponents <= max_exp; homogeneous in the X-grading if requested.
  WeylElement element(WeylAlgebra algebra, std::size_t terms, std::uint32_t max_exp, bool homogeneous);
  EulerPolynomial euler_polynomial(std::size_t d, std::size_t max_degree);

 private:
  std::mt19937_64 rng_;
};

/// Runs each Weyl identity verifier on `weyl_instances` random inputs.
std::vector<CheckReport> weyl_suite(const SuiteOptions& options);

}  // namespace gradedlc
