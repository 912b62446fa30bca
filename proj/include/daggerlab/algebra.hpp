#pragma once

#include <vector>

#include "daggerlab/frobenius.hpp"
#include "daggerlab/groupoid.hpp"
#include "daggerlab/mor.hpp"

namespace daggerlab {

/// The monad T = - (x) B for a monoid B. Whether B satisfies the
/// Frobenius battery and commutativity is determined once at
/// construction; operations that need those properties consult the
/// cached verdicts.
class TensorMonad {
 public:
  explicit TensorMonad(FrobMonoid b, Tolerance tol = Tolerance{});

  const FrobMonoid& monoid() const { return monoid_; }
  Backend backend() const { return monoid_.backend; }
  int n() const { return monoid_.n; }
  bool frobenius_ok() const { return frobenius_ok_; }
  bool commutative_ok() const { return commutative_ok_; }

 private:
  FrobMonoid monoid_;
  bool frobenius_ok_;
  bool commutative_ok_;
};

/// eta_A = id_m (x) unit : m -> m*n.
Mor monad_unit(const TensorMonad& t, int m);
/// mu_A = id_m (x) mult : m*n^2 -> m*n.
Mor monad_mult(const TensorMonad& t, int m);

/// T(mu_A) o dagger(mu_{T(A)}) = mu_{T(A)} o T(dagger(mu_A)) at object
/// dimension m.
LawReport check_monad_frobenius(const TensorMonad& t, int m, Tolerance tol);

/// Standard monad laws at object dimension m.
std::vector<LawReport> check_monad_laws(const TensorMonad& t, int m,
                                        Tolerance tol);

/// An Eilenberg-Moore algebra candidate: action m*n -> m.
struct EMAlgebra {
  TensorMonad monad;
  int carrier = 0;
  Mor action;

  EMAlgebra(TensorMonad t, int m, Mor a);
};

/// Free algebra mu_A on carrier m*n.
EMAlgebra free_algebra(const TensorMonad& t, int m);

/// a o eta = id and a o mu = a o T(a).
std::vector<LawReport> check_em(const EMAlgebra& alg, Tolerance tol);

/// Frobenius law for the algebra:
/// (id_m (x) mult) o (dagger(a) (x) id_n) = (a (x) id_n) o (id_m (x) dagger(mult)).
LawReport check_fem(const EMAlgebra& alg, Tolerance tol);

/// Self-adjointness of the induced coalgebra:
/// (a (x) id_n) o (id_m (x) (dagger(mult) o unit)) = dagger(a).
LawReport check_self_adjoint_coalgebra(const EMAlgebra& alg, Tolerance tol);

/// The n x n matrix algebra as a dagger Frobenius monoid under the
/// normalized trace inner product; basis sqrt(n) E_ij at flat index i*n+j.
FrobMonoid pants_monoid(int n);

/// EM-algebra mult o (id (x) U) on pants(n), where U is conjugation by
/// the unitary u. FEM holds precisely when conjugation by u is
/// self-adjoint.
EMAlgebra pants_conjugation_algebra(int n, const Mor& u,
                                    Tolerance tol = Tolerance{});

/// A morphism in the Kleisli category of T: dom -> T(cod), stored as
/// the underlying body dom -> cod*n.
struct KleisliMor {
  TensorMonad monad;
  int dom = 0;
  int cod = 0;
  Mor body;

  KleisliMor(TensorMonad t, int d, int c, Mor b);
};

KleisliMor kleisli_identity(const TensorMonad& t, int m);
KleisliMor kleisli_compose(const KleisliMor& g, const KleisliMor& f);
/// body(dagger f) = (dagger(body) (x) id_n) o dagger(mu) o eta at the
/// codomain. Requires the Frobenius battery on B.
KleisliMor kleisli_dagger(const KleisliMor& f);

/// Projections indexed by the objects of a discrete groupoid.
struct Measurement {
  std::vector<Mor> projections;
};

/// For B a discrete groupoid algebra: P_G = action o (id_m (x) e_G).
/// Requires the algebra to pass EM and FEM: otherwise the P_G are not
/// orthogonal projections, and the call fails with NotFEM.
Measurement extract_measurement(const EMAlgebra& alg,
                                Tolerance tol = Tolerance{});

/// A functor from a groupoid into the backend: block dimensions per
/// object and one block matrix per morphism.
struct Representation {
  FiniteGroupoid groupoid;
  Backend backend = Backend::FHilb;
  std::vector<int> block_dims;  // per object
  std::vector<Mor> maps;        // per morphism, cod-block x dom-block
};

/// A representation extracted from an algebra, together with the
/// isometry from block coordinates back into the original carrier.
struct ExtractedRepresentation {
  Representation rep;
  Mor basis;  // carrier x (sum of block dims), columns = block bases
};

/// Decompose an EM+FEM algebra over the algebra of g into a unitary
/// representation of g. The monoid of alg must be the groupoid algebra
/// of g in the algebra's backend.
ExtractedRepresentation algebra_to_representation(const EMAlgebra& alg,
                                                  const FiniteGroupoid& g,
                                                  Tolerance tol = Tolerance{});

/// Reassemble the action of a unitary representation, in block-direct-sum
/// coordinates ordered by object. Throws NotUnitaryRep when the input is
/// not functorial with unitary images.
EMAlgebra representation_to_algebra(const Representation& rep,
                                    Tolerance tol = Tolerance{});

/// b o T(f) = f o a, for f : carrier(a) -> carrier(b).
LawReport is_algebra_hom(const Mor& f, const EMAlgebra& a, const EMAlgebra& b,
                         Tolerance tol);

}  // namespace daggerlab
