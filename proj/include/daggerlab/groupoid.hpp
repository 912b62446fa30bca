#pragma once

#include <string>
#include <vector>

#include "daggerlab/frobenius.hpp"
#include "daggerlab/mor.hpp"

namespace daggerlab {

struct GroupoidMor {
  std::string name;
  int dom = 0;  // object index
  int cod = 0;  // object index
};

/// A finite groupoid as tables: a partial composition compose[f][g]
/// (the index of f o g, or -1 when cod(g) != dom(f)) and a total
/// inverse map.
struct FiniteGroupoid {
  std::vector<std::string> objects;
  std::vector<GroupoidMor> morphisms;
  std::vector<std::vector<int>> compose;
  std::vector<int> inverse;

  int size() const { return static_cast<int>(morphisms.size()); }
  /// Index of f o g, or -1 when undefined.
  int compose_at(int f, int g) const { return compose[f][g]; }
  /// Index of the identity on the given object, or -1 if absent.
  int identity_on(int object) const;
};

/// Exhaustive check of the groupoid axioms: composability matches
/// dom/cod, associativity, identities per object, inverse laws.
std::vector<LawReport> validate_groupoid(const FiniteGroupoid& g);

/// Dagger Frobenius monoid in Rel on the morphism set: mult relates
/// ((f,g), f o g) when defined, unit marks the identities.
FrobMonoid groupoid_to_frobenius_rel(const FiniteGroupoid& g);

/// Dagger Frobenius monoid in FHilb on the free Hilbert space over the
/// morphisms: mult(e_f (x) e_g) = e_{f o g} or 0, unit = sum of
/// identity basis vectors.
FrobMonoid groupoid_to_frobenius_fhilb(const FiniteGroupoid& g);

/// Extract a groupoid from a dagger Frobenius monoid in Rel. Every
/// uniqueness step of the extraction is checked; a violation raises
/// NotGroupoidForm.
FiniteGroupoid rel_frobenius_to_groupoid(const FrobMonoid& m);

/// Brute-force isomorphism search (objects + morphisms preserving
/// dom/cod/compose), intended for small groupoids. Throws TooLarge
/// above max_morphisms.
bool groupoid_isomorphic(const FiniteGroupoid& g, const FiniteGroupoid& h,
                         int max_morphisms = 16);

/// True iff for all composable pairs both orders compose and agree;
/// equivalent to commutativity of the groupoid algebra.
bool groupoid_commutative(const FiniteGroupoid& g);

}  // namespace daggerlab
