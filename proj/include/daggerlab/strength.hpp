#pragma once

#include <vector>

#include "daggerlab/algebra.hpp"
#include "daggerlab/groupoid.hpp"
#include "daggerlab/mor.hpp"

namespace daggerlab {

/// st_{A,B} : A (x) T(B) -> T(A (x) B). Under flattened row-major
/// indexing this is the identity permutation; it is materialized so the
/// strength laws run through the same matrix machinery as every other
/// law.
Mor strength_map(const TensorMonad& t, int m, int k);

/// st'_{A,B} : T(A) (x) B -> T(A (x) B), built from swaps and st.
Mor costrength_map(const TensorMonad& t, int m, int k);

/// Strength laws (functor laws, monad compatibility, unitarity) at all
/// sampled dimension tuples drawn from dims.
std::vector<LawReport> check_strength_laws(const TensorMonad& t,
                                           const std::vector<int>& dims,
                                           Tolerance tol);

/// The monoid structure on T(I), computed from mu_I, eta_I and the
/// materialized strength/unitor maps. Equals the inducing monoid
/// entrywise.
FrobMonoid extract_unit_monoid(const TensorMonad& t);

/// The counit candidate T(rho) o st : A (x) T(I) -> T(A): unitarity and
/// compatibility with eta, mu and their daggers at object dimension m.
std::vector<LawReport> check_counit_iso(const TensorMonad& t, int m,
                                        Tolerance tol);

/// dst_{A,B} against dst'_{A,B} at object dimensions (m, k).
LawReport check_commutativity(const TensorMonad& t, int m, int k,
                              Tolerance tol);

/// Kleisli tensor f (x)_T g = dst o (f (x) g). Requires B to pass the
/// Frobenius battery and be commutative; otherwise the Kleisli dagger
/// does not respect this tensor and the call refuses with
/// NotCommutative.
KleisliMor kleisli_tensor(const KleisliMor& f, const KleisliMor& g);

/// For a nontrivial group in Rel: unit (x) unit differs from
/// dagger(mult) o unit. PASS means the two sides differ, i.e. the
/// counterexample manifests. A trivial group raises TrivialGroup.
LawReport check_remark_counterexample(const FiniteGroupoid& group);

/// Cup I -> A (x) A and cap A (x) A -> I over the standard self-dual
/// basis, satisfying the snake equations.
struct DualityData {
  int n = 0;
  Mor cup;
  Mor cap;
};

DualityData standard_duality(int n, Backend backend);

/// Snake equations for a DualityData pair.
std::vector<LawReport> check_duality(const DualityData& d, Tolerance tol);

/// The canonical map i : A -> A* with entries i[j][k] =
/// (dagger(unit) o mult)(e_j (x) e_k), A* identified with A via the
/// standard self-dual basis.
Mor dual_involution(const FrobMonoid& m);

/// The endohom object A (x) A* as a monoid: composition via cap, unit
/// the cup.
FrobMonoid endohom_monoid(int n, Backend backend);

/// Curried multiplication A -> [A,A] as an (n^2 x n) matrix.
Mor cayley_embedding(const FrobMonoid& m);

/// Four predicates that agree for a monoid: the Frobenius law, the
/// involution of i, the involutivity of the Cayley embedding, and the
/// duality between ev and the i-decorated cup.
std::vector<LawReport> check_closure_equivalences(const FrobMonoid& m,
                                                  Tolerance tol);

}  // namespace daggerlab
