#pragma once

#include <vector>

#include "daggerlab/mor.hpp"

namespace daggerlab {

/// A candidate monoid on an n-dimensional object: a multiplication
/// n*n -> n and a unit 1 -> n. Only shapes are enforced here; the
/// algebraic laws are what the check_* functions verify. The comonoid
/// half is always dagger(mult) / dagger(unit).
struct FrobMonoid {
  Backend backend;
  int n = 0;
  Mor mult;
  Mor unit;

  FrobMonoid(Backend b, int dim, Mor m, Mor u);
};

/// Associativity and the two unit laws.
std::vector<LawReport> check_monoid(const FrobMonoid& m, Tolerance tol);

/// (id (x) mult) o (dagger(mult) (x) id) = (mult (x) id) o (id (x) dagger(mult)).
LawReport check_frobenius(const FrobMonoid& m, Tolerance tol);

/// Equivalent form: dagger(mult) = (id (x) mult) o ((dagger(mult) o unit) (x) id).
LawReport check_frobenius_alt(const FrobMonoid& m, Tolerance tol);

/// dagger(mult) o mult = (mult (x) id) o (id (x) dagger(mult)).
LawReport check_extended_frobenius(const FrobMonoid& m, Tolerance tol);

/// mult o dagger(mult) = id.
LawReport check_special(const FrobMonoid& m, Tolerance tol);

/// mult o swap = mult.
LawReport check_commutative(const FrobMonoid& m, Tolerance tol);

/// The full dagger-Frobenius-monoid battery: monoid laws, the Frobenius
/// law, its equivalent form, and the extended law.
std::vector<LawReport> frobenius_battery(const FrobMonoid& m, Tolerance tol);

/// f o unit = unit and f o mult = mult o (f (x) f).
std::vector<LawReport> is_monoid_hom(const Mor& f, const FrobMonoid& m,
                                     const FrobMonoid& n, Tolerance tol);

/// The dual conditions on dagger(mult) / dagger(unit).
std::vector<LawReport> is_comonoid_hom(const Mor& f, const FrobMonoid& m,
                                       const FrobMonoid& n, Tolerance tol);

/// Inverse of a monoid-and-comonoid homomorphism f between dagger
/// Frobenius monoids, built as the cap/cup composite through f.
/// Throws NotInverse when the result fails to invert f, which signals
/// a precondition violation.
Mor frobenius_hom_inverse(const Mor& f, const FrobMonoid& m,
                          const FrobMonoid& n,
                          Tolerance tol = Tolerance{});

}  // namespace daggerlab
