#include "gradedlc/suites.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "gradedlc/cech.hpp"
#include "gradedlc/expr.hpp"

namespace gradedlc {

std::vector<CMonomialIdeal> generate_corpus(std::uint64_t seed, std::size_t count, const CorpusOptions& options) {
  std::mt19937_64 rng(seed);
  auto below = [&](std::uint64_t n) { return rng() % n; };
  std::vector<CMonomialIdeal> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const bool graded = k % 2 == 1;
    const bool usual = graded && k % 4 == 3;
    const std::size_t d = 1 + below(options.max_d);
    const std::size_t t = 1 + below(options.max_generators);
    std::vector<CMonomial> gens;
    for (std::size_t g = 0; g < t; ++g) {
      CMonomial m;
      do {  // units make the whole complex exact
        m.y_pow = (graded && !usual) ? static_cast<std::uint32_t>(below(options.max_exponent + 1)) : 0;
        m.x_exps.clear();
        for (std::size_t i = 0; i < d; ++i)
          m.x_exps.push_back(static_cast<std::uint32_t>(below(options.max_exponent + 1)));
      } while (m.y_pow == 0 && std::ranges::all_of(m.x_exps, [](std::uint32_t e) { return e == 0; }));
      gens.push_back(std::move(m));
    }
    out.emplace_back(d, graded ? BaseRing::GradedPID : BaseRing::Field, std::move(gens));
  }
  return out;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("GRADEDLC_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

namespace {

std::size_t pattern_index(const MultiDegree& u) {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < u.size(); ++k) idx = (idx << 1) | (u[k] >= 0 ? 1U : 0U);
  return idx;
}

std::string label(const CMonomialIdeal& ideal, std::size_t i) { return ideal.to_string() + ", i=" + std::to_string(i); }

}  // namespace

CheckReport rigidity_suite(const CMonomialIdeal& ideal, const SuiteOptions& options) {
  CheckReport report{"rigidity", true, 0, {}};
  const std::size_t t = ideal.num_generators();
  const std::size_t n = ideal.num_vars();
  const CechComplex complex(ideal);

  std::vector<std::vector<std::size_t>> corner_dims;
  for (const auto& p : enumerate_blocks(n)) {
    const SliceCohomology sc(complex.slice(p.corner));
    std::vector<std::size_t> dims;
    for (std::size_t i = 0; i <= t; ++i) dims.push_back(sc.dim(i));
    corner_dims.push_back(std::move(dims));
  }
  for (const auto& u : box(n, options.radius)) {
    const SliceCohomology sc(complex.slice(u));
    const auto& expected = corner_dims[pattern_index(u)];
    for (std::size_t i = 0; i <= t; ++i) {
      ++report.checked;
      if (sc.dim(i) != expected[i]) {
        report.fail(label(ideal, i) + ": dim " + std::to_string(sc.dim(i)) + " at " + u.to_string() + " but " +
                    std::to_string(expected[i]) + " at its corner");
        return report;
      }
    }
  }

  DegreeCache cache(ideal);
  const std::int64_t w = options.witness_radius;
  std::int64_t slab = -w;
  for (const auto& u : box(n, w)) {
    if (u[0] != slab) {
      // Maps out of u reach at most one step back along the first axis.
      slab = u[0];
      MultiDegree bound(std::vector<std::int64_t>(n, std::numeric_limits<std::int64_t>::min()));
      bound[0] = slab - 1;
      cache.forget_below(bound);
    }
    for (std::size_t i = 0; i <= t; ++i) {
      if (cache.dim(i, u) == 0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        const bool up = u[k] >= 0;
        if ((up && u[k] >= w) || (!up && u[k] <= -w)) continue;
        ++report.checked;
        const auto op = up ? CellOperator::Multiply : CellOperator::Differentiate;
        if (!is_invertible(cache.chain_map(i, u, op, k))) {
          report.fail(label(ideal, i) + ": " + (up ? "multiplication" : "differentiation") + " along axis " +
                      std::to_string(k) + " at " + u.to_string() + " is not an isomorphism");
          return report;
        }
      }
    }
  }
  report.witness = std::to_string(report.checked) + " dimension and chain-map checks";
  return report;
}

CheckReport straightness_suite(const CMonomialIdeal& ideal, const SuiteOptions& options) {
  CheckReport report{"straightness", true, 0, {}};
  if (ideal.base() != BaseRing::Field) {
    report.applicable = false;
    report.witness = "straightness is checked over the field only";
    return report;
  }
  DegreeCache cache(ideal);
  const auto samples = box(ideal.num_vars(), options.radius);
  for (std::size_t i = 0; i <= ideal.num_generators(); ++i) {
    CheckReport r = check_straightness(cache, i, samples);
    r.name = label(ideal, i);
    report.absorb(r);
    if (!report.passed) return report;
  }
  report.witness = std::to_string(report.checked) + " multiplication maps bijective";
  return report;
}

CheckReport eulerian_suite(const CMonomialIdeal& ideal, const SuiteOptions& options) {
  CheckReport report{"eulerian", true, 0, {}};
  const CechComplex complex(ideal);
  const std::size_t t = ideal.num_generators();
  for (const auto& u : box(ideal.num_vars(), options.radius)) {
    const DegreeSlice here = complex.slice(u);
    std::vector<DegreeSlice> below;
    for (std::size_t var = 0; var < u.size(); ++var) below.push_back(complex.slice(u.shifted(var, -1)));
    for (std::size_t i = 0; i <= t; ++i) {
      if (here.dim(i) == 0) continue;
      ++report.checked;
      for (std::size_t var = 0; var < u.size(); ++var) {
        const RationalMatrix e = cell_map(below[var], here, i, CellOperator::Multiply, var) *
                                 cell_map(here, below[var], i, CellOperator::Differentiate, var);
        RationalMatrix expected(here.dim(i), here.dim(i));
        for (std::size_t k = 0; k < here.dim(i); ++k) expected(k, k) = u[var];
        if (!(e - expected).is_zero()) {
          report.fail(label(ideal, i) + ": Euler operator along axis " + std::to_string(var) + " is not u_" +
                      std::to_string(var) + " at " + u.to_string());
          return report;
        }
      }
    }
  }
  report.witness = std::to_string(report.checked) + " nonzero slice levels are Eulerian with exponent 1";
  return report;
}

CheckReport multiplicity_suite(const CMonomialIdeal& ideal, const SuiteOptions& options) {
  CheckReport report{"multiplicity-m0", true, 0, {}};
  if (ideal.base() != BaseRing::Field) {
    report.applicable = false;
    report.witness = "multiplicity is computed over the field only";
    return report;
  }
  const CechComplex complex(ideal);
  const std::size_t t = ideal.num_generators();
  std::vector<std::vector<std::size_t>> corner;
  for (const auto& p : enumerate_blocks(ideal.num_vars())) {
    std::vector<std::size_t> e;
    for (std::size_t i = 0; i <= t; ++i) e.push_back(multiplicity_m0(ideal, i, p.corner));
    corner.push_back(std::move(e));
  }
  for (const auto& u : box(ideal.num_vars(), options.radius)) {
    for (std::size_t i = 0; i <= t; ++i) {
      ++report.checked;
      const std::size_t e = multiplicity_m0(ideal, i, u);
      if (e != corner[pattern_index(u)][i]) {
        report.fail(label(ideal, i) + ": multiplicity " + std::to_string(e) + " at " + u.to_string() +
                    " differs from its block corner");
        return report;
      }
    }
  }
  report.witness = std::to_string(report.checked) + " multiplicities constant on blocks";
  return report;
}

std::vector<CheckReport> structure_suite(const CMonomialIdeal& ideal, const SuiteOptions& options) {
  std::vector<CheckReport> out;
  if (ideal.base() != BaseRing::GradedPID) {
    CheckReport r{"structure", true, 0, "structure classification needs base graded_pid"};
    r.applicable = false;
    out.push_back(r);
    return out;
  }
  const auto samples = box(ideal.d(), options.radius);
  DegreeCache cache(ideal);
  CheckReport consistency{"structure-consistency", true, 0, {}};
  CheckReport free{"free-components", true, 0, {}};
  CheckReport nonfg{"non-finite-generation", true, 0, {}};
  free.applicable = ideal.usual_monomial();
  nonfg.applicable = meets_base_ring(ideal);
  for (std::size_t i = 0; i <= ideal.num_generators(); ++i) {
    CheckReport r = check_structure_consistency(cache, i, samples, options.window);
    r.name = label(ideal, i);
    consistency.absorb(r);
    if (free.applicable) {
      CheckReport f = check_free_components(ideal, i, samples);
      f.name = label(ideal, i);
      free.absorb(f);
    }
    if (nonfg.applicable) {
      CheckReport f = check_nonfg(ideal, i, samples);
      f.name = label(ideal, i);
      nonfg.absorb(f);
    }
  }
  consistency.witness = consistency.passed ? std::to_string(consistency.checked) + " components consistent" : consistency.witness;
  if (free.applicable && free.passed) free.witness = std::to_string(free.checked) + " components free of the expected rank";
  if (!free.applicable) free.witness = "not applicable: some generator has a Y-power";
  if (nonfg.applicable && nonfg.passed) nonfg.witness = std::to_string(nonfg.checked) + " components not finitely generated";
  if (!nonfg.applicable) nonfg.witness = "theorem not applicable: the ideal does not meet K[Y]";
  out.push_back(consistency);
  out.push_back(free);
  out.push_back(nonfg);
  return out;
}

Rational WeylSampler::coefficient() {
  std::int64_t num = between(-100, 99);
  if (num >= 0) ++num;
  const std::int64_t den = between(1, 100);
  Rational q(static_cast<long>(num), static_cast<unsigned long>(den));
  q.canonicalize();
  return q;
}

WeylAlgebra WeylSampler::algebra(std::size_t max_d) {
  WeylAlgebra a;
  a.d = 1 + below(max_d);
  a.with_base = below(2) == 1;
  return a;
}

WeylElement WeylSampler::element(WeylAlgebra algebra, std::size_t terms, std::uint32_t max_exp, bool homogeneous) {
  const auto m = static_cast<std::int64_t>(max_exp);
  std::vector<std::int64_t> target(algebra.d);
  for (auto& t : target) t = between(-m, m);
  WeylElement e(algebra);
  for (std::size_t k = 0; k < terms; ++k) {
    WeylMonomial mono(algebra.d);
    for (std::size_t i = 0; i < algebra.d; ++i) {
      if (homogeneous) {
        const std::int64_t dx = between(std::max<std::int64_t>(0, -target[i]), std::min(m, m - target[i]));
        mono.dx[i] = static_cast<std::uint32_t>(dx);
        mono.x[i] = static_cast<std::uint32_t>(dx + target[i]);
      } else {
        mono.x[i] = static_cast<std::uint32_t>(below(max_exp + 1));
        mono.dx[i] = static_cast<std::uint32_t>(below(max_exp + 1));
      }
    }
    if (algebra.with_base) {
      mono.y = static_cast<std::uint32_t>(below(max_exp + 1));
      mono.dy = static_cast<std::uint32_t>(below(max_exp + 1));
    }
    e.add_term(mono, coefficient());
  }
  return e;
}

EulerPolynomial WeylSampler::euler_polynomial(std::size_t d, std::size_t max_degree) {
  EulerPolynomial f;
  f.d = d;
  const std::size_t terms = 1 + below(4);
  for (std::size_t k = 0; k < terms; ++k) {
    std::vector<std::uint32_t> e(d, 0);
    const std::size_t deg = below(max_degree + 1);
    for (std::size_t s = 0; s < deg; ++s) ++e[below(d)];
    f.coeffs[e] += coefficient();
  }
  return f;
}

std::vector<CheckReport> weyl_suite(const SuiteOptions& options) {
  WeylSampler rng(options.seed);
  const std::size_t n = options.weyl_instances;
  std::vector<CheckReport> out;
  auto run = [&](const std::string& name, auto&& one) {
    CheckReport r{name, true, 0, {}};
    for (std::size_t k = 0; k < n; ++k) {
      ++r.checked;
      std::string why;
      if (!one(why)) {
        r.fail(why);
        break;
      }
    }
    if (r.passed) r.witness = std::to_string(r.checked) + " random instances";
    out.push_back(r);
  };

  run("X-e", [&](std::string& why) {
    const WeylAlgebra a = rng.algebra();
    const std::size_t i = 1 + rng.below(a.d);
    const auto j = static_cast<unsigned>(rng.below(7));
    why = "i=" + std::to_string(i) + " j=" + std::to_string(j);
    return verify_X_e(a, i, j);
  });
  run("partial-e", [&](std::string& why) {
    const WeylAlgebra a = rng.algebra();
    const std::size_t i = 1 + rng.below(a.d);
    const auto j = static_cast<unsigned>(rng.below(7));
    why = "i=" + std::to_string(i) + " j=" + std::to_string(j);
    return verify_partial_e(a, i, j);
  });
  for (ShiftKind kind : {ShiftKind::Multiply, ShiftKind::Differentiate}) {
    run(kind == ShiftKind::Multiply ? "e-X-multi" : "e-partial-multi", [&](std::string& why) {
      const WeylAlgebra a = rng.algebra();
      std::vector<std::uint32_t> w(a.d);
      for (auto& x : w) x = static_cast<std::uint32_t>(rng.below(7));
      const std::size_t i = 1 + rng.below(a.d);
      const auto u = static_cast<unsigned>(rng.below(7));
      why = "i=" + std::to_string(i) + " u=" + std::to_string(u);
      return verify_e_shift_multi(a, w, i, u, kind);
    });
  }
  run("rel-D0", [&](std::string& why) {
    const WeylAlgebra a = rng.algebra();
    std::vector<std::int64_t> deg(a.d);
    for (auto& x : deg) x = rng.between(-6, 6);
    const EulerPolynomial f = rng.euler_polynomial(a.d, 3);
    why = "a=" + MultiDegree(deg).to_string();
    return verify_D0_factorization(a, deg, f).ok();
  });
  run("deg_inc", [&](std::string& why) {
    const WeylAlgebra a = rng.algebra();
    const WeylElement p = rng.element(a, 1 + rng.below(3), 6, true);
    const WeylElement q = rng.element(a, 1 + rng.below(3), 6, true);
    why = "p=" + to_string(p) + " q=" + to_string(q);
    return verify_filtration_inclusion(p, q);
  });
  run("polynomialRing", [&](std::string& why) {
    const WeylAlgebra a = rng.algebra();
    const WeylElement p = rng.element(a, 1 + rng.below(3), 6, false);
    const WeylElement q = rng.element(a, 1 + rng.below(3), 6, false);
    why = "p=" + to_string(p) + " q=" + to_string(q);
    return verify_gr_commutativity(p, q);
  });
  return out;
}

}  // namespace gradedlc
