#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "daggerlab/serialize.hpp"

namespace daggerlab {

/// Aggregated outcome of a batch of law checks on one structure (or on
/// the whole fixture battery, for the paper suite).
struct SuiteReport {
  std::string structure;
  double eps = 1e-9;
  std::uint64_t seed = 0;
  std::vector<LawReport> laws;

  bool overall() const { return all_pass(laws); }
};

json suite_report_to_json(const SuiteReport& r);
std::string suite_report_summary(const SuiteReport& r);

/// Monoid suites: "frobenius" (monoid laws + the three Frobenius forms),
/// "closure" (the four closure predicates), or "all".
SuiteReport run_monoid_suite(const FrobMonoid& m, Tolerance tol,
                             const std::string& id,
                             const std::string& suite = "frobenius");

/// Groupoid axioms, both constructions with their Frobenius batteries,
/// and the Rel round trip.
SuiteReport run_groupoid_suite(const FiniteGroupoid& g, Tolerance tol,
                               const std::string& id);

/// EM/FEM/coalgebra laws, plus measurement extraction when the monoid is
/// a discrete groupoid algebra and the algebra passes EM and FEM.
SuiteReport run_em_suite(const EMAlgebra& a, Tolerance tol,
                         const std::string& id);

/// Kleisli body shape and dagger involution.
SuiteReport run_kleisli_suite(const KleisliMor& f, Tolerance tol,
                              const std::string& id);

/// Every acceptance criterion as one batch; names are keyed by the
/// statement under test.
SuiteReport run_paper_suite(Tolerance tol, std::uint64_t seed = 20260801);

}  // namespace daggerlab
