#include <doctest.h>

#include "daggerlab/fixtures.hpp"
#include "daggerlab/serialize.hpp"
#include "daggerlab/suite.hpp"

using namespace daggerlab;

namespace {
const Tolerance kTol{};
}

TEST_CASE("complex entries round-trip as [re, im] pairs") {
  Mor m(Backend::FHilb, 1, 2);
  m.set(0, 0, cplx(1.5, -2.25));
  m.set(0, 1, cplx(0.0, 1e-17));
  const json j = mor_to_json(m);
  CHECK(j["entries"][0][0][0] == 1.5);
  CHECK(j["entries"][0][0][1] == -2.25);
  const Mor back = mor_from_json(j, Backend::FHilb);
  CHECK(approx_eq(back, m, Tolerance{0.0}).pass);  // lossless
}

TEST_CASE("monoid files round-trip bit-exactly") {
  for (const auto& [name, g] : battery_groupoids()) {
    for (Backend b : {Backend::Rel, Backend::FHilb}) {
      const FrobMonoid m = b == Backend::Rel ? groupoid_to_frobenius_rel(g)
                                             : groupoid_to_frobenius_fhilb(g);
      const json j = monoid_to_json(m);
      const json j2 = monoid_to_json(monoid_from_json(j));
      CHECK(j == j2);
      CHECK(j.dump() == j2.dump());
    }
  }
  const json p = monoid_to_json(pants_monoid(2));
  CHECK(p == monoid_to_json(monoid_from_json(p)));
}

TEST_CASE("groupoid files round-trip") {
  for (const auto& [name, g] : battery_groupoids()) {
    CAPTURE(name);
    const json j = groupoid_to_json(g);
    const FiniteGroupoid back = groupoid_from_json(j);
    CHECK(groupoid_to_json(back) == j);
    CHECK(groupoid_isomorphic(back, g, 16));
  }
}

TEST_CASE("em_algebra and kleisli files round-trip") {
  Rng rng(41);
  const EMAlgebra alg = pvm_algebra(rng, 3, 2, kTol);
  const json j = em_algebra_to_json(alg);
  const EMAlgebra back = em_algebra_from_json(j, kTol);
  CHECK(em_algebra_to_json(back) == j);

  const TensorMonad t(
      groupoid_to_frobenius_fhilb(group_groupoid(cyclic_group(2))), kTol);
  const KleisliMor f = random_kleisli(rng, t, 2, 3);
  const json jk = kleisli_to_json(f);
  const KleisliMor fk = kleisli_from_json(jk, kTol);
  CHECK(kleisli_to_json(fk) == jk);
}

TEST_CASE("malformed JSON raises ParseError") {
  CHECK_THROWS_AS((void)parse_json("{\"kind\": "), ParseError);
  CHECK_THROWS_AS((void)load_json_file("/nonexistent/file.json"), ParseError);
}

TEST_CASE("schema violations raise SchemaError") {
  CHECK_THROWS_AS((void)kind_of(parse_json("{}")), SchemaError);
  CHECK_THROWS_AS((void)kind_of(parse_json("{\"kind\": \"widget\"}")),
                  SchemaError);
  CHECK_THROWS_AS(
      (void)monoid_from_json(parse_json(
          R"({"kind":"monoid","backend":"fhilb","dim":2})")),
      SchemaError);
  // Rel entries must be 0/1 integers
  CHECK_THROWS_AS(
      (void)monoid_from_json(parse_json(
          R"({"kind":"monoid","backend":"rel","dim":1,
              "mult":{"dom":1,"cod":1,"entries":[[2]]},
              "unit":{"dom":1,"cod":1,"entries":[[1]]}})")),
      SchemaError);
  // FHilb entries must be [re, im] pairs
  CHECK_THROWS_AS(
      (void)monoid_from_json(parse_json(
          R"({"kind":"monoid","backend":"fhilb","dim":1,
              "mult":{"dom":1,"cod":1,"entries":[[1]]},
              "unit":{"dom":1,"cod":1,"entries":[[[1,0]]]}})")),
      SchemaError);
  // mult shape must match dim
  CHECK_THROWS_AS(
      (void)monoid_from_json(parse_json(
          R"({"kind":"monoid","backend":"rel","dim":2,
              "mult":{"dom":2,"cod":2,"entries":[[1,0],[0,1]]},
              "unit":{"dom":1,"cod":2,"entries":[[1],[0]]}})")),
      SchemaError);
  // groupoid referencing an unknown object
  CHECK_THROWS_AS(
      (void)groupoid_from_json(parse_json(
          R"({"kind":"groupoid","objects":["A"],
              "morphisms":[{"name":"f","dom":"A","cod":"B"}],
              "compose":[],"inverse":{"f":"f"}})")),
      SchemaError);
}

TEST_CASE("suite reports are deterministic given input, seed, and eps") {
  const SuiteReport a = run_groupoid_suite(group_groupoid(cyclic_group(3)),
                                           kTol, "z3");
  const SuiteReport b = run_groupoid_suite(group_groupoid(cyclic_group(3)),
                                           kTol, "z3");
  CHECK(suite_report_to_json(a).dump() == suite_report_to_json(b).dump());

  const SuiteReport p1 = run_paper_suite(kTol, 99);
  const SuiteReport p2 = run_paper_suite(kTol, 99);
  CHECK(suite_report_to_json(p1).dump() == suite_report_to_json(p2).dump());
}

TEST_CASE("structure constructors reject malformed shapes") {
  CHECK_THROWS_AS(FrobMonoid(Backend::FHilb, 2,
                             Mor::zero(Backend::FHilb, 2, 3),
                             Mor::zero(Backend::FHilb, 2, 1)),
                  DimensionMismatch);
  CHECK_THROWS_AS(FrobMonoid(Backend::Rel, 2, Mor::zero(Backend::FHilb, 2, 4),
                             Mor::zero(Backend::Rel, 2, 1)),
                  BackendMismatch);
  const TensorMonad t(
      groupoid_to_frobenius_fhilb(group_groupoid(cyclic_group(2))), kTol);
  CHECK_THROWS_AS(EMAlgebra(t, 3, Mor::zero(Backend::FHilb, 3, 5)),
                  DimensionMismatch);
  CHECK_THROWS_AS(KleisliMor(t, 2, 2, Mor::zero(Backend::FHilb, 3, 2)),
                  DimensionMismatch);
}

TEST_CASE("monoid suite dispatch covers frobenius and closure batteries") {
  const FrobMonoid z2 =
      groupoid_to_frobenius_fhilb(group_groupoid(cyclic_group(2)));
  const SuiteReport fr = run_monoid_suite(z2, kTol, "z2", "frobenius");
  CHECK(fr.overall());
  CHECK(fr.laws.size() == 6);
  const SuiteReport cl = run_monoid_suite(z2, kTol, "z2", "closure");
  CHECK(cl.overall());
  CHECK(cl.laws.size() == 4);
  const SuiteReport all = run_monoid_suite(z2, kTol, "z2", "all");
  CHECK(all.laws.size() == 10);
  CHECK_THROWS_AS((void)run_monoid_suite(z2, kTol, "z2", "bogus"), BadParams);
}

TEST_CASE("em suite names the failing FEM law on a non-FEM algebra") {
  Rng rng(43);
  const EMAlgebra alg = idempotent_system_algebra(rng, 4, 2, false, kTol);
  const SuiteReport rep = run_em_suite(alg, kTol, "oblique_em");
  CHECK_FALSE(rep.overall());
  bool fem_failed = false;
  bool em_ok = true;
  for (const auto& r : rep.laws) {
    if (r.law == "fem") fem_failed = !r.pass;
    if (r.law == "em_unit" || r.law == "em_assoc") em_ok = em_ok && r.pass;
  }
  CHECK(em_ok);
  CHECK(fem_failed);
}

TEST_CASE("em suite adds measurement checks for discrete monoids") {
  Rng rng(42);
  const EMAlgebra alg = pvm_algebra(rng, 4, 2, kTol);
  const SuiteReport rep = run_em_suite(alg, kTol, "pvm");
  CHECK(rep.overall());
  bool has_measurement = false;
  for (const auto& r : rep.laws) {
    if (r.law == "measurement_projections") has_measurement = r.pass;
  }
  CHECK(has_measurement);
}
