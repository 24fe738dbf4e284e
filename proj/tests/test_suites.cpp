#include <doctest.h>

#include "gradedlc/io.hpp"
#include "gradedlc/suites.hpp"
#include "support.hpp"

using namespace gradedlc;
using namespace testing_support;

TEST_CASE("corpus generation is deterministic and within bounds") {
  const auto a = generate_corpus(42, 50);
  const auto b = generate_corpus(42, 50);
  REQUIRE(a.size() == 50);
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(ideal_hash(a[k]) == ideal_hash(b[k]));
    CHECK(a[k].d() >= 1);
    CHECK(a[k].d() <= 3);
    CHECK(a[k].num_generators() <= 5);
    CHECK(a[k].base() == (k % 2 == 0 ? BaseRing::Field : BaseRing::GradedPID));
    if (k % 4 == 3) CHECK(a[k].usual_monomial());
    for (const auto& g : a[k].generators()) {
      CHECK(g.y_pow <= 3);
      bool unit = g.y_pow == 0;
      for (auto e : g.x_exps) {
        CHECK(e <= 3);
        unit = unit && e == 0;
      }
      CHECK_FALSE(unit);
    }
  }
  CHECK(ideal_hash(generate_corpus(43, 1)[0]) != ideal_hash(a[0]));
}

TEST_CASE("suites on small ideals") {
  SuiteOptions opts;
  opts.radius = 3;
  opts.witness_radius = 2;
  const auto m = field_ideal({{1, 0}, {0, 1}});
  CHECK(rigidity_suite(m, opts).passed);
  CHECK(straightness_suite(m, opts).passed);
  CHECK(eulerian_suite(m, opts).passed);
  CHECK(multiplicity_suite(m, opts).passed);
  CHECK(structure_suite(m, opts).front().status() == "not-applicable");

  const auto y = pid_ideal({{1, {1, 0}}, {0, {0, 1}}, {2, {0, 0}}});
  CHECK(rigidity_suite(y, opts).passed);
  CHECK(straightness_suite(y, opts).status() == "not-applicable");
  CHECK(multiplicity_suite(y, opts).status() == "not-applicable");
  const auto s = structure_suite(y, opts);
  REQUIRE(s.size() == 3);
  CHECK(s[0].status() == "pass");
  CHECK(s[1].status() == "not-applicable");
  CHECK(s[2].status() == "pass");
}

TEST_CASE("weyl suite on a few instances") {
  SuiteOptions opts;
  opts.weyl_instances = 30;
  const auto reports = weyl_suite(opts);
  CHECK(reports.size() == 7);
  for (const auto& r : reports) {
    CAPTURE(r.name);
    CHECK(r.passed);
    CHECK(r.checked == 30);
  }
}

TEST_CASE("parallel_for visits every index once") {
  std::vector<int> hits(100, 0);
  parallel_for(hits.size(), 4, [&](std::size_t k) { hits[k] += 1; });
  for (int h : hits) CHECK(h == 1);
}

TEST_CASE("WeylSampler coefficients stay in range") {
  WeylSampler s(1);
  for (int k = 0; k < 1000; ++k) {
    const Rational q = s.coefficient();
    CHECK(q != 0);
    CHECK(abs(q.get_num()) <= 100);
    CHECK(q.get_den() <= 100);
  }
}
