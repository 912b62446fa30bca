#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "daggerlab/algebra.hpp"
#include "daggerlab/groupoid.hpp"

namespace daggerlab {

/// Multiplication table of a finite group. Element 0 is the identity.
struct GroupTable {
  std::string name;
  std::vector<std::vector<int>> mult;

  int order() const { return static_cast<int>(mult.size()); }
  int inverse(int x) const;
};

GroupTable trivial_group();
GroupTable cyclic_group(int k);
GroupTable product_group(const GroupTable& a, const GroupTable& b);
GroupTable klein_four_group();
GroupTable symmetric_group_3();

/// A group as a one-object groupoid.
FiniteGroupoid group_groupoid(const GroupTable& g);

FiniteGroupoid trivial_groupoid();
/// k objects, identities only.
FiniteGroupoid discrete_groupoid(int k);
/// Two objects with two parallel isomorphisms between them (hom-sets of
/// size two everywhere; eight morphisms).
FiniteGroupoid two_object_two_iso_groupoid();
FiniteGroupoid disjoint_union(const FiniteGroupoid& a,
                              const FiniteGroupoid& b);

struct NamedGroupoid {
  std::string name;
  FiniteGroupoid groupoid;
};

/// The fixture battery: trivial, Z2, Z3, Z4, Z2xZ2, S3, discrete-k for
/// k <= 4, the two-object two-isomorphism groupoid, and two disjoint
/// unions.
std::vector<NamedGroupoid> battery_groupoids();

/// The one-object members of the battery (with the trivial group first).
std::vector<NamedGroupoid> battery_groups();

/// Fixed two-dimensional monoid (the algebra generated by a square-zero
/// element) that passes the monoid laws but fails the Frobenius law.
FrobMonoid non_frobenius_monoid(Backend b);

/// Deterministic seeded generator for all randomized checks.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double gauss() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }
  int below(int n) {
    return static_cast<int>(engine_() % static_cast<std::uint64_t>(n));
  }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

/// Complex Gaussian entries (FHilb) or density-0.4 coin flips (Rel).
Mor random_mor(Rng& rng, Backend b, int cod, int dom);

/// Orthonormalization of a random complex matrix.
Mor random_unitary(Rng& rng, int n);

/// Unitary and self-adjoint: a random unitary conjugate of a random
/// diagonal sign matrix.
Mor random_self_adjoint_unitary(Rng& rng, int n);

/// Matrix inverse via Gauss-Jordan elimination; FHilb only.
Mor invert(const Mor& m);

/// FEM algebra over the discrete-k groupoid algebra built from a random
/// projection-valued measure on an m-dimensional carrier.
EMAlgebra pvm_algebra(Rng& rng, int m, int k, Tolerance tol = Tolerance{});

/// EM algebra over discrete-k from a complete system of idempotents:
/// orthogonal (hence FEM) when self_adjoint, oblique otherwise.
EMAlgebra idempotent_system_algebra(Rng& rng, int m, int k,
                                    bool self_adjoint,
                                    Tolerance tol = Tolerance{});

KleisliMor random_kleisli(Rng& rng, const TensorMonad& t, int dom, int cod);

}  // namespace daggerlab
