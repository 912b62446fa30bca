#include "daggerlab/frobenius.hpp"

namespace daggerlab {

FrobMonoid::FrobMonoid(Backend b, int dim, Mor m, Mor u)
    : backend(b), n(dim), mult(std::move(m)), unit(std::move(u)) {
  if (mult.backend() != b || unit.backend() != b) {
    throw BackendMismatch("monoid structure maps have the wrong backend");
  }
  if (mult.cod() != n || mult.dom() != n * n) {
    throw DimensionMismatch("mult must be an (n x n^2) matrix");
  }
  if (unit.cod() != n || unit.dom() != 1) {
    throw DimensionMismatch("unit must be an (n x 1) matrix");
  }
}

std::vector<LawReport> check_monoid(const FrobMonoid& m, Tolerance tol) {
  const Mor id = Mor::identity(m.backend, m.n);
  std::vector<LawReport> out;
  out.push_back(law_eq("associativity", m.mult * tensor(m.mult, id),
                       m.mult * tensor(id, m.mult), tol));
  out.push_back(law_eq("unit_left", m.mult * tensor(m.unit, id), id, tol));
  out.push_back(law_eq("unit_right", m.mult * tensor(id, m.unit), id, tol));
  return out;
}

LawReport check_frobenius(const FrobMonoid& m, Tolerance tol) {
  const Mor id = Mor::identity(m.backend, m.n);
  const Mor comult = dagger(m.mult);
  return law_eq("frobenius", tensor(id, m.mult) * tensor(comult, id),
                tensor(m.mult, id) * tensor(id, comult), tol);
}

LawReport check_frobenius_alt(const FrobMonoid& m, Tolerance tol) {
  const Mor id = Mor::identity(m.backend, m.n);
  const Mor comult = dagger(m.mult);
  const Mor cup = comult * m.unit;
  return law_eq("frobenius_alt", comult,
                tensor(id, m.mult) * tensor(cup, id), tol);
}

LawReport check_extended_frobenius(const FrobMonoid& m, Tolerance tol) {
  const Mor id = Mor::identity(m.backend, m.n);
  const Mor comult = dagger(m.mult);
  return law_eq("frobenius_extended", comult * m.mult,
                tensor(m.mult, id) * tensor(id, comult), tol);
}

LawReport check_special(const FrobMonoid& m, Tolerance tol) {
  return law_eq("special", m.mult * dagger(m.mult),
                Mor::identity(m.backend, m.n), tol);
}

LawReport check_commutative(const FrobMonoid& m, Tolerance tol) {
  return law_eq("commutative", m.mult * Mor::swap(m.backend, m.n, m.n),
                m.mult, tol);
}

std::vector<LawReport> frobenius_battery(const FrobMonoid& m, Tolerance tol) {
  std::vector<LawReport> out = check_monoid(m, tol);
  out.push_back(check_frobenius(m, tol));
  out.push_back(check_frobenius_alt(m, tol));
  out.push_back(check_extended_frobenius(m, tol));
  return out;
}

std::vector<LawReport> is_monoid_hom(const Mor& f, const FrobMonoid& m,
                                     const FrobMonoid& n, Tolerance tol) {
  if (f.dom() != m.n || f.cod() != n.n) {
    throw DimensionMismatch("homomorphism candidate has the wrong shape");
  }
  std::vector<LawReport> out;
  out.push_back(law_eq("monoid_hom_unit", f * m.unit, n.unit, tol));
  out.push_back(
      law_eq("monoid_hom_mult", f * m.mult, n.mult * tensor(f, f), tol));
  return out;
}

std::vector<LawReport> is_comonoid_hom(const Mor& f, const FrobMonoid& m,
                                       const FrobMonoid& n, Tolerance tol) {
  if (f.dom() != m.n || f.cod() != n.n) {
    throw DimensionMismatch("homomorphism candidate has the wrong shape");
  }
  std::vector<LawReport> out;
  out.push_back(law_eq("comonoid_hom_counit", dagger(n.unit) * f,
                       dagger(m.unit), tol));
  out.push_back(law_eq("comonoid_hom_comult", dagger(n.mult) * f,
                       tensor(f, f) * dagger(m.mult), tol));
  return out;
}

Mor frobenius_hom_inverse(const Mor& f, const FrobMonoid& m,
                          const FrobMonoid& n, Tolerance tol) {
  if (f.dom() != m.n || f.cod() != n.n) {
    throw DimensionMismatch("homomorphism candidate has the wrong shape");
  }
  const Backend b = m.backend;
  const Mor id_m = Mor::identity(b, m.n);
  const Mor id_n = Mor::identity(b, n.n);
  // g = (cap_N (x) id_M) o (id_N (x) f (x) id_M) o (id_N (x) cup_M)
  // with cap_N = dagger(unit_N) o mult_N and cup_M = dagger(mult_M) o unit_M.
  const Mor cap_n = dagger(n.unit) * n.mult;
  const Mor cup_m = dagger(m.mult) * m.unit;
  const Mor g = tensor(cap_n, id_m) * tensor(id_n, tensor(f, id_m)) *
                tensor(id_n, cup_m);
  if (!law_eq("left_inverse", g * f, id_m, tol).pass ||
      !law_eq("right_inverse", f * g, id_n, tol).pass) {
    throw NotInverse(
        "constructed candidate does not invert f; "
        "f is not a monoid+comonoid homomorphism between dagger "
        "Frobenius monoids");
  }
  return g;
}

}  // namespace daggerlab
