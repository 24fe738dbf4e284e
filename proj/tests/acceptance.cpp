// Acceptance run: one PASS/FAIL line per criterion. With no arguments every
// criterion runs; otherwise only the listed numbers. Exit status is 0 iff every
// selected criterion passed.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gradedlc/cech.hpp"
#include "gradedlc/rigidity.hpp"
#include "gradedlc/structure.hpp"
#include "gradedlc/suites.hpp"
#include "gradedlc/weyl.hpp"
#include "oracle/brute_cech.hpp"
#include "oracle/poly_action.hpp"

using namespace gradedlc;

namespace {

constexpr double kStructureLimitSeconds = 1.0;
constexpr double kRigidityLimitSeconds = 60.0;
constexpr double kWeylLimitSeconds = 30.0;
constexpr std::size_t kWeylInstances = 1000;
constexpr std::int64_t kRadius = 6;

struct Outcome {
  bool passed = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fixed(double x, int digits = 2) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << x;
  return os.str();
}

const std::vector<CMonomialIdeal>& corpus() {
  static const std::vector<CMonomialIdeal> c = generate_corpus(kDefaultCorpusSeed, kDefaultCorpusSize);
  return c;
}

SuiteOptions suite_options() {
  SuiteOptions o;
  o.radius = kRadius;
  o.jobs = default_jobs();
  return o;
}

// Runs `suite` over the corpus ideals selected by `keep` and folds the reports.
Outcome corpus_suite(const std::function<bool(const CMonomialIdeal&)>& keep,
                     const std::function<CheckReport(const CMonomialIdeal&)>& suite, const std::string& what) {
  std::vector<const CMonomialIdeal*> selected;
  for (const auto& ideal : corpus())
    if (keep(ideal)) selected.push_back(&ideal);
  std::vector<CheckReport> reports(selected.size());
  parallel_for(selected.size(), suite_options().jobs, [&](std::size_t k) { reports[k] = suite(*selected[k]); });
  CheckReport total{what, true, 0, {}};
  std::size_t applicable = 0;
  for (const auto& r : reports) {
    if (!r.applicable) continue;
    ++applicable;
    total.absorb(r);
  }
  Outcome out;
  out.passed = total.passed && applicable > 0;
  out.detail = std::to_string(applicable) + " ideals, " + std::to_string(total.checked) + " checks";
  if (!total.passed) out.detail += "; first failure: " + total.witness;
  if (applicable == 0) out.detail += "; no ideal in the corpus satisfies the hypothesis";
  return out;
}

std::string triple_list(const std::vector<BlockStructure>& blocks) {
  std::string s;
  for (const auto& b : blocks) {
    if (!s.empty()) s += ", ";
    s += "U=" + b.pattern.membership_string() + " " + b.triple.to_string();
  }
  return s;
}

Outcome criterion1() {
  const auto start = Clock::now();
  const CMonomialIdeal ideal(1, BaseRing::GradedPID, {{1, {1}}});
  DegreeCache cache(ideal);
  const auto blocks = structure_blocks(cache, 1);
  const double t = seconds_since(start);
  StructureTriple nonneg, neg;
  for (const auto& b : blocks) (b.pattern.members[0] ? nonneg : neg) = b.triple;
  Outcome out;
  out.passed = nonneg == StructureTriple{1, 0, 0} && neg == StructureTriple{1, 0, 1} && t < kStructureLimitSeconds;
  out.detail = "expected U={1} (1,0,0) and U={} (1,0,1); computed " + triple_list(blocks) + "; " + fixed(t, 4) + " s";
  return out;
}

Outcome criterion2() {
  const auto start = Clock::now();
  const CMonomialIdeal ideal(2, BaseRing::GradedPID, {{1, {1, 0}}, {0, {0, 1}}});
  DegreeCache cache(ideal);
  const auto blocks = structure_blocks(cache, 2);
  const double t = seconds_since(start);
  bool ok = true;
  std::size_t nonzero = 0;
  for (const auto& b : blocks) {
    if (b.triple.zero()) continue;
    ++nonzero;
    ok = ok && b.triple.v >= 1;
  }
  Outcome out;
  out.passed = ok && nonzero > 0 && t < kStructureLimitSeconds;
  out.detail = "expected v >= 1 on every nonzero block; computed " + triple_list(blocks) + "; " + fixed(t, 4) + " s";
  return out;
}

// Informational companion to criterion 2: the non-finite-generation statement
// itself (s + v >= 1 on nonzero blocks) for the same ideal.
std::string criterion2_info() {
  const CMonomialIdeal ideal(2, BaseRing::GradedPID, {{1, {1, 0}}, {0, {0, 1}}});
  DegreeCache cache(ideal);
  bool ok = true;
  for (const auto& b : structure_blocks(cache, 2))
    if (!b.triple.zero()) ok = ok && b.triple.s + b.triple.v >= 1;
  return std::string("s + v >= 1 on every nonzero block: ") + (ok ? "yes" : "no");
}

Outcome criterion3() {
  const auto start = Clock::now();
  bool bounds = true;
  for (const auto& ideal : corpus()) {
    bounds = bounds && ideal.d() <= 3 && ideal.num_generators() <= 5;
    for (const auto& g : ideal.generators()) {
      bounds = bounds && g.y_pow <= 3;
      for (auto e : g.x_exps) bounds = bounds && e <= 3;
    }
  }
  const SuiteOptions opts = suite_options();
  Outcome out = corpus_suite([](const CMonomialIdeal&) { return true; },
                             [&](const CMonomialIdeal& i) { return rigidity_suite(i, opts); }, "rigidity");
  const double t = seconds_since(start);
  out.passed = out.passed && bounds && corpus().size() >= 50 && t < kRigidityLimitSeconds;
  out.detail += "; radius " + std::to_string(kRadius) + ", chain-map witnesses within radius " +
                std::to_string(opts.witness_radius) + "; " + fixed(t) + " s (limit " + fixed(kRigidityLimitSeconds, 0) +
                " s)";
  if (!bounds) out.detail += "; corpus violates its size bounds";
  return out;
}

Outcome criterion4() {
  const SuiteOptions opts = suite_options();
  return corpus_suite([](const CMonomialIdeal& i) { return i.base() == BaseRing::Field; },
                      [&](const CMonomialIdeal& i) { return straightness_suite(i, opts); }, "straightness");
}

Outcome criterion5() {
  const SuiteOptions opts = suite_options();
  return corpus_suite([](const CMonomialIdeal&) { return true; },
                      [&](const CMonomialIdeal& i) { return eulerian_suite(i, opts); }, "eulerian");
}

Outcome criterion6() {
  const SuiteOptions opts = suite_options();
  return corpus_suite([](const CMonomialIdeal& i) { return i.base() == BaseRing::GradedPID && i.usual_monomial(); },
                      [&](const CMonomialIdeal& i) { return structure_suite(i, opts)[1]; }, "free-components");
}

// Each identity family is re-sampled here and both of its sides are acted out
// factor by factor on random polynomials, independently of the rewriter.
class WeylOracleRun {
 public:
  WeylOracleRun() : sampler_(kDefaultWeylSeed + 1000), rng_(kDefaultWeylSeed + 2000) {}

  CheckReport run(const std::string& name, const std::function<bool(std::string&)>& one) {
    CheckReport r{name, true, 0, {}};
    for (std::size_t k = 0; k < kWeylInstances; ++k) {
      ++r.checked;
      std::string why;
      if (!one(why)) {
        r.fail(name + ": " + why);
        break;
      }
    }
    return r;
  }

  std::vector<CheckReport> all() {
    using oracle::Composite;
    std::vector<CheckReport> out;
    out.push_back(run("X-e", [&](std::string& why) {
      const WeylAlgebra a = sampler_.algebra();
      const std::size_t i = 1 + sampler_.below(a.d);
      const auto j = static_cast<unsigned>(sampler_.below(7));
      why = "i=" + std::to_string(i) + " j=" + std::to_string(j);
      const Composite xj = oracle::single(oracle::x_power(a, i, j));
      const Composite lhs = oracle::compose(xj, oracle::single(euler(a, i)));
      const Composite rhs = oracle::compose(oracle::euler_power(a, i, -static_cast<long>(j), 1), xj);
      return verify_X_e(a, i, j) && same(lhs, rhs, a) &&
             same(oracle::single(oracle::x_power(a, i, j) * euler(a, i)), lhs, a);
    }));
    out.push_back(run("partial-e", [&](std::string& why) {
      const WeylAlgebra a = sampler_.algebra();
      const std::size_t i = 1 + sampler_.below(a.d);
      const auto j = static_cast<unsigned>(sampler_.below(7));
      why = "i=" + std::to_string(i) + " j=" + std::to_string(j);
      const Composite dj = oracle::single(oracle::d_power(a, i, j));
      const Composite lhs = oracle::compose(oracle::single(euler(a, i)), dj);
      const Composite rhs = oracle::compose(dj, oracle::euler_power(a, i, -static_cast<long>(j), 1));
      return verify_partial_e(a, i, j) && same(lhs, rhs, a) &&
             same(oracle::single(euler(a, i) * oracle::d_power(a, i, j)), lhs, a);
    }));
    for (ShiftKind kind : {ShiftKind::Multiply, ShiftKind::Differentiate}) {
      const bool mul = kind == ShiftKind::Multiply;
      out.push_back(run(mul ? "e-X-multi" : "e-partial-multi", [&, mul, kind](std::string& why) {
        const WeylAlgebra a = sampler_.algebra();
        std::vector<std::uint32_t> w(a.d);
        for (auto& x : w) x = static_cast<std::uint32_t>(sampler_.below(7));
        const std::size_t i = 1 + sampler_.below(a.d);
        const auto u = static_cast<unsigned>(sampler_.below(7));
        why = "i=" + std::to_string(i) + " u=" + std::to_string(u);
        const Composite shift =
            oracle::single(mul ? oracle::x_power(a, i, u) : oracle::d_power(a, i, u));
        Composite plain = oracle::single(WeylElement::constant(a, 1));
        Composite shifted = plain;
        for (std::size_t k = 1; k <= a.d; ++k) {
          plain = oracle::compose(plain, oracle::euler_power(a, k, 0, w[k - 1]));
          const long c = k == i ? (mul ? static_cast<long>(u) : -static_cast<long>(u)) : 0;
          shifted = oracle::compose(shifted, oracle::euler_power(a, k, c, w[k - 1]));
        }
        return verify_e_shift_multi(a, w, i, u, kind) &&
               same(oracle::compose(plain, shift), oracle::compose(shift, shifted), a);
      }));
    }
    out.push_back(run("rel-D0", [&](std::string& why) {
      const WeylAlgebra a = sampler_.algebra();
      std::vector<std::int64_t> deg(a.d);
      for (auto& x : deg) x = sampler_.between(-6, 6);
      const EulerPolynomial f = sampler_.euler_polynomial(a.d, 3);
      why = "a=" + MultiDegree(deg).to_string();
      std::vector<long> none(a.d, 0), left(a.d, 0), right(a.d, 0);
      for (std::size_t k = 0; k < a.d; ++k) {
        if (deg[k] > 0) left[k] = -deg[k];
        if (deg[k] < 0) right[k] = deg[k];
      }
      const Composite plus = oracle::single(x_a_plus(a, deg));
      const Composite minus = oracle::single(x_a_minus(a, deg));
      Composite xa = oracle::single(WeylElement::constant(a, 1));
      for (std::size_t k = 1; k <= a.d; ++k) {
        const auto e = static_cast<std::uint32_t>(deg[k - 1] >= 0 ? deg[k - 1] : -deg[k - 1]);
        xa = oracle::compose(xa, oracle::single(deg[k - 1] >= 0 ? oracle::x_power(a, k, e) : oracle::d_power(a, k, e)));
      }
      const Composite lhs = oracle::compose(oracle::compose(plus, euler_composite(a, f, none)), minus);
      return verify_D0_factorization(a, deg, f).ok() &&
             same(lhs, oracle::compose(euler_composite(a, f, left), xa), a) &&
             same(lhs, oracle::compose(xa, euler_composite(a, f, right)), a);
    }));
    out.push_back(run("deg_inc", [&](std::string& why) {
      const WeylAlgebra a = sampler_.algebra();
      const WeylElement p = sampler_.element(a, 1 + sampler_.below(3), 6, true);
      const WeylElement q = sampler_.element(a, 1 + sampler_.below(3), 6, true);
      why = "p=" + std::to_string(p.terms().size()) + " terms";
      return verify_filtration_inclusion(p, q) &&
             same(oracle::single(p * q), oracle::compose(oracle::single(p), oracle::single(q)), a);
    }));
    out.push_back(run("polynomialRing", [&](std::string& why) {
      const WeylAlgebra a = sampler_.algebra();
      const WeylElement p = sampler_.element(a, 1 + sampler_.below(3), 6, false);
      const WeylElement q = sampler_.element(a, 1 + sampler_.below(3), 6, false);
      why = "p=" + std::to_string(p.terms().size()) + " terms";
      return verify_gr_commutativity(p, q) &&
             same(oracle::single(p * q), oracle::compose(oracle::single(p), oracle::single(q)), a) &&
             same(oracle::single(q * p), oracle::compose(oracle::single(q), oracle::single(p)), a);
    }));
    return out;
  }

 private:
  bool same(const oracle::Composite& l, const oracle::Composite& r, const WeylAlgebra& a) {
    return oracle::same_action(l, r, a, rng_, 2, 6);
  }

  // f(E_1 + c_1, ..., E_d + c_d) as a sum of products of shifted Euler factors.
  static oracle::Composite euler_composite(const WeylAlgebra& a, const EulerPolynomial& f, const std::vector<long>& c) {
    oracle::Composite out;
    for (const auto& [e, coef] : f.coeffs) {
      oracle::Composite term = oracle::single(WeylElement::constant(a, 1));
      for (std::size_t k = 1; k <= a.d; ++k) term = oracle::compose(term, oracle::euler_power(a, k, c[k - 1], e[k - 1]));
      for (auto& p : term.products) p.coef *= coef;
      out.products.insert(out.products.end(), term.products.begin(), term.products.end());
    }
    return out;
  }

  WeylSampler sampler_;
  std::mt19937_64 rng_;
};

Outcome criterion7() {
  const auto start = Clock::now();
  SuiteOptions opts = suite_options();
  opts.weyl_instances = kWeylInstances;
  CheckReport total{"weyl", true, 0, {}};
  std::size_t families = 0;
  for (const auto& r : weyl_suite(opts)) {
    total.absorb(r);
    families += r.checked >= kWeylInstances ? 1 : 0;
  }
  const double suite_time = seconds_since(start);
  CheckReport cross{"oracle", true, 0, {}};
  for (const auto& r : WeylOracleRun().all()) cross.absorb(r);
  const double t = seconds_since(start);
  Outcome out;
  out.passed = total.passed && cross.passed && families == 7 && t < kWeylLimitSeconds;
  out.detail = std::to_string(families) + " identity families x " + std::to_string(kWeylInstances) +
               " instances, plus " + std::to_string(cross.checked) + " instances acted out on polynomials; suite " +
               fixed(suite_time) + " s, total " + fixed(t) + " s (limit " + fixed(kWeylLimitSeconds, 0) + " s)";
  if (!total.passed) out.detail += "; suite failure: " + total.witness;
  if (!cross.passed) out.detail += "; oracle failure: " + cross.witness;
  return out;
}

Outcome criterion8() {
  const SuiteOptions opts = suite_options();
  return corpus_suite([](const CMonomialIdeal& i) { return i.base() == BaseRing::GradedPID; },
                      [&](const CMonomialIdeal& i) { return structure_suite(i, opts)[0]; }, "bass");
}

// Every monomial with exponents up to `max_x` (and Y-power up to `max_y`).
std::vector<CMonomial> monomials(std::size_t d, std::uint32_t max_y, std::uint32_t max_x) {
  std::vector<CMonomial> out;
  const std::size_t n = d + 1;
  std::vector<std::uint32_t> e(n, 0);
  while (true) {
    out.push_back({e[0], std::vector<std::uint32_t>(e.begin() + 1, e.end())});
    std::size_t k = 0;
    while (k < n) {
      const std::uint32_t cap = k == 0 ? max_y : max_x;
      if (e[k] < cap) {
        ++e[k];
        break;
      }
      e[k] = 0;
      ++k;
    }
    if (k == n) break;
  }
  return out;
}

// All nonempty subsets of at most `max_size` elements, in index order.
std::vector<std::vector<CMonomial>> subsets(const std::vector<CMonomial>& items, std::size_t max_size) {
  std::vector<std::vector<CMonomial>> out;
  std::vector<CMonomial> current;
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    for (std::size_t k = from; k < items.size(); ++k) {
      current.push_back(items[k]);
      out.push_back(current);
      if (current.size() < max_size) extend(k + 1);
      current.pop_back();
    }
  };
  extend(0);
  return out;
}

Outcome criterion9() {
  const auto start = Clock::now();
  struct Family {
    std::size_t d;
    BaseRing base;
    std::uint32_t max_y, max_x;
  };
  const std::vector<Family> families = {{1, BaseRing::Field, 0, 3},
                                        {2, BaseRing::Field, 0, 2},
                                        {1, BaseRing::GradedPID, 2, 2},
                                        {2, BaseRing::GradedPID, 1, 1}};
  const std::int64_t radius = 3;
  std::size_t ideals = 0, comparisons = 0;
  std::string failure;
  for (const auto& fam : families) {
    const auto monos = monomials(fam.d, fam.max_y, fam.max_x);
    for (const auto& gens : subsets(monos, 3)) {
      if (!failure.empty()) break;
      const CMonomialIdeal ideal(fam.d, fam.base, gens);
      ++ideals;
      const CechComplex complex(ideal);
      for (const auto& u : box(ideal.num_vars(), radius)) {
        const SliceCohomology sc(complex.slice(u));
        const auto expected = oracle::brute_dims(ideal, u);
        for (std::size_t i = 0; i < expected.size() && failure.empty(); ++i) {
          ++comparisons;
          if (sc.dim(i) != expected[i])
            failure = ideal.to_string() + " H^" + std::to_string(i) + " at " + u.to_string() + ": engine " +
                      std::to_string(sc.dim(i)) + ", brute force " + std::to_string(expected[i]);
        }
        if (!failure.empty()) break;
      }
    }
  }
  Outcome out;
  out.passed = failure.empty();
  out.detail = std::to_string(ideals) + " ideals (t <= 3; field d=1 exps <= 3, field d=2 exps <= 2, graded d=1 exps <= 2, "
               "graded d=2 exps <= 1), " + std::to_string(comparisons) + " dimensions within radius " +
               std::to_string(radius) + "; " + fixed(seconds_since(start)) + " s";
  if (!failure.empty()) out.detail += "; mismatch: " + failure;
  return out;
}

Outcome criterion10() {
  const SuiteOptions opts = suite_options();
  return corpus_suite([](const CMonomialIdeal& i) { return i.base() == BaseRing::Field; },
                      [&](const CMonomialIdeal& i) { return multiplicity_suite(i, opts); }, "multiplicity");
}

struct Criterion {
  int id;
  const char* title;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "(YX), i=1: block triples (1,0,0) and (1,0,1), < 1 s", criterion1},
    {2, "(YX1, X2), i=2: v >= 1 on every nonzero block, < 1 s", criterion2},
    {3, "rigidity over the seeded corpus, radius 6, < 60 s", criterion3},
    {4, "straightness over the field corpus", criterion4},
    {5, "Eulerian action with exponent 1 over the corpus", criterion5},
    {6, "usual monomial ideals over K[Y] have free components of the field rank", criterion6},
    {7, "Weyl identities on 1000 random instances each, with action oracle, < 30 s", criterion7},
    {8, "Bass numbers, injdim <= dim supp and socle over the graded corpus", criterion8},
    {9, "engine equals the brute-force slice complex for d <= 2, t <= 3", criterion9},
    {10, "m=0 multiplicity constant on blocks over the field corpus", criterion10},
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> selected;
  for (int k = 1; k < argc; ++k) {
    char* end = nullptr;
    const long id = std::strtol(argv[k], &end, 10);
    if (*end != '\0' || id < 1 || id > 10) {
      std::cerr << "usage: acceptance [criterion numbers 1..10]\n";
      return 2;
    }
    selected.insert(static_cast<int>(id));
  }
  int failed = 0;
  for (const auto& c : kCriteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    const Outcome o = c.run();
    std::cout << (o.passed ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << "\n      " << o.detail
              << '\n';
    if (c.id == 2) std::cout << "      info: " << criterion2_info() << '\n';
    std::cout.flush();
    failed += o.passed ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
