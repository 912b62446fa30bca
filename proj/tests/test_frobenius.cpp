#include <doctest.h>

#include "daggerlab/fixtures.hpp"
#include "daggerlab/frobenius.hpp"
#include "daggerlab/groupoid.hpp"

using namespace daggerlab;

namespace {

const Tolerance kTol{};

FrobMonoid trivial_monoid(Backend b) {
  return FrobMonoid(b, 1, Mor::from_rows(b, {{1}}), Mor::from_rows(b, {{1}}));
}

FrobMonoid z2_fhilb() {
  return groupoid_to_frobenius_fhilb(group_groupoid(cyclic_group(2)));
}

FrobMonoid conjugated(const FrobMonoid& m, const Mor& u) {
  return FrobMonoid(m.backend, m.n, u * m.mult * tensor(dagger(u), dagger(u)),
                    u * m.unit);
}

}  // namespace

TEST_CASE("trivial monoid passes the whole battery") {
  for (Backend b : {Backend::FHilb, Backend::Rel}) {
    const FrobMonoid m = trivial_monoid(b);
    CHECK(all_pass(frobenius_battery(m, kTol)));
    CHECK(check_special(m, kTol).pass);
    CHECK(check_commutative(m, kTol).pass);
  }
}

TEST_CASE("Z2 group algebra is a dagger Frobenius monoid") {
  const FrobMonoid m = z2_fhilb();
  CHECK(m.unit.at(0, 0) == cplx(1.0));  // identity is the first basis vector
  CHECK(m.unit.at(1, 0) == cplx(0.0));
  CHECK(all_pass(check_monoid(m, kTol)));
  CHECK(check_frobenius(m, kTol).pass);
}

TEST_CASE("scaling the unit breaks the unit laws with residual 1") {
  const FrobMonoid m = z2_fhilb();
  const FrobMonoid scaled(m.backend, m.n, m.mult, scale(2.0, m.unit));
  const auto reports = check_monoid(scaled, kTol);
  CHECK(reports[0].pass);  // associativity is unaffected
  CHECK_FALSE(reports[1].pass);
  CHECK(reports[1].residual == doctest::Approx(1.0));
  CHECK_FALSE(reports[2].pass);
  CHECK(reports[2].residual == doctest::Approx(1.0));
}

TEST_CASE("the square-zero monoid passes monoid laws but no Frobenius form") {
  for (Backend b : {Backend::FHilb, Backend::Rel}) {
    const FrobMonoid m = non_frobenius_monoid(b);
    CHECK(all_pass(check_monoid(m, kTol)));
    CHECK_FALSE(check_frobenius(m, kTol).pass);
    CHECK_FALSE(check_frobenius_alt(m, kTol).pass);
    CHECK_FALSE(check_extended_frobenius(m, kTol).pass);
  }
}

TEST_CASE("specialness and commutativity verdicts") {
  const FiniteGroupoid z2 = group_groupoid(cyclic_group(2));
  const FrobMonoid z2_rel = groupoid_to_frobenius_rel(z2);
  CHECK(check_special(z2_rel, kTol).pass);
  CHECK(check_commutative(z2_rel, kTol).pass);

  const FiniteGroupoid s3 = group_groupoid(symmetric_group_3());
  CHECK_FALSE(check_commutative(groupoid_to_frobenius_fhilb(s3), kTol).pass);
  CHECK_FALSE(check_commutative(groupoid_to_frobenius_rel(s3), kTol).pass);

  // group algebras in FHilb are special only up to the group order
  const FrobMonoid z2_f = z2_fhilb();
  const LawReport special = check_special(z2_f, kTol);
  CHECK_FALSE(special.pass);
  CHECK(special.residual == doctest::Approx(1.0));
}

TEST_CASE("battery: monoid + frobenius implies the equivalent forms") {
  for (const auto& [name, g] : battery_groupoids()) {
    for (Backend b : {Backend::Rel, Backend::FHilb}) {
      const FrobMonoid m = b == Backend::Rel ? groupoid_to_frobenius_rel(g)
                                             : groupoid_to_frobenius_fhilb(g);
      CAPTURE(name);
      REQUIRE(all_pass(check_monoid(m, kTol)));
      REQUIRE(check_frobenius(m, kTol).pass);
      CHECK(check_frobenius_alt(m, kTol).pass);
      CHECK(check_extended_frobenius(m, kTol).pass);
    }
  }
}

TEST_CASE("dagger of the structure maps is a comonoid") {
  for (const auto& [name, g] : battery_groupoids()) {
    const FrobMonoid m = groupoid_to_frobenius_fhilb(g);
    CAPTURE(name);
    const Mor comult = dagger(m.mult);
    const Mor counit = dagger(m.unit);
    const Mor id = Mor::identity(m.backend, m.n);
    CHECK(law_eq("coassoc", tensor(comult, id) * comult,
                 tensor(id, comult) * comult, kTol)
              .pass);
    CHECK(law_eq("counit_left", tensor(counit, id) * comult, id, kTol).pass);
    CHECK(law_eq("counit_right", tensor(id, counit) * comult, id, kTol).pass);
  }
}

TEST_CASE("unitary conjugation preserves every law verdict") {
  Rng rng(11);
  const std::vector<FrobMonoid> fixtures = {
      z2_fhilb(), groupoid_to_frobenius_fhilb(group_groupoid(cyclic_group(3))),
      non_frobenius_monoid(Backend::FHilb)};
  for (const FrobMonoid& m : fixtures) {
    const Mor u = random_unitary(rng, m.n);
    const FrobMonoid c = conjugated(m, u);
    const Tolerance loose{1e-8};  // conjugation stacks a few rounding steps
    CHECK(all_pass(check_monoid(m, loose)) ==
          all_pass(check_monoid(c, loose)));
    CHECK(check_frobenius(m, loose).pass == check_frobenius(c, loose).pass);
    CHECK(check_frobenius_alt(m, loose).pass ==
          check_frobenius_alt(c, loose).pass);
    CHECK(check_extended_frobenius(m, loose).pass ==
          check_extended_frobenius(c, loose).pass);
    CHECK(check_special(m, loose).pass == check_special(c, loose).pass);
    CHECK(check_commutative(m, loose).pass ==
          check_commutative(c, loose).pass);
  }
}

TEST_CASE("homomorphism checks on the Z4 -> Z2 induced map") {
  const FrobMonoid z4 =
      groupoid_to_frobenius_fhilb(group_groupoid(cyclic_group(4)));
  const FrobMonoid z2 = z2_fhilb();
  const Mor f =
      Mor::from_rows(Backend::FHilb, {{1, 0, 1, 0}, {0, 1, 0, 1}});
  CHECK(all_pass(is_monoid_hom(f, z4, z2, kTol)));
  CHECK_FALSE(all_pass(is_comonoid_hom(f, z4, z2, kTol)));

  const Mor id = Mor::identity(Backend::FHilb, 2);
  CHECK(all_pass(is_monoid_hom(id, z2, z2, kTol)));
  CHECK(all_pass(is_comonoid_hom(id, z2, z2, kTol)));
}

TEST_CASE("frobenius_hom_inverse on identity and automorphisms") {
  const FrobMonoid z2 = z2_fhilb();
  const Mor id2 = Mor::identity(Backend::FHilb, 2);
  CHECK(approx_eq(frobenius_hom_inverse(id2, z2, z2, kTol), id2, kTol).pass);

  // the nontrivial automorphism of Z3 swaps the non-identity elements
  const FrobMonoid z3 =
      groupoid_to_frobenius_fhilb(group_groupoid(cyclic_group(3)));
  const Mor f =
      Mor::from_rows(Backend::FHilb, {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}});
  REQUIRE(all_pass(is_monoid_hom(f, z3, z3, kTol)));
  REQUIRE(all_pass(is_comonoid_hom(f, z3, z3, kTol)));
  const Mor g = frobenius_hom_inverse(f, z3, z3, kTol);
  CHECK(approx_eq(g, f, kTol).pass);  // the swap is its own inverse
  CHECK(approx_eq(g * f, Mor::identity(Backend::FHilb, 3), kTol).pass);
}

TEST_CASE("frobenius_hom_inverse rejects the zero map") {
  const FrobMonoid z2 = z2_fhilb();
  CHECK_THROWS_AS((void)frobenius_hom_inverse(Mor::zero(Backend::FHilb, 2, 2),
                                              z2, z2, kTol),
                  NotInverse);
}
