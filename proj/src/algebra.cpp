#include "daggerlab/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace daggerlab {

TensorMonad::TensorMonad(FrobMonoid b, Tolerance tol)
    : monoid_(std::move(b)),
      frobenius_ok_(all_pass(frobenius_battery(monoid_, tol))),
      commutative_ok_(check_commutative(monoid_, tol).pass) {}

Mor monad_unit(const TensorMonad& t, int m) {
  return tensor(Mor::identity(t.backend(), m), t.monoid().unit);
}

Mor monad_mult(const TensorMonad& t, int m) {
  return tensor(Mor::identity(t.backend(), m), t.monoid().mult);
}

std::vector<LawReport> check_monad_laws(const TensorMonad& t, int m,
                                        Tolerance tol) {
  const Backend b = t.backend();
  const int n = t.n();
  const Mor mu = monad_mult(t, m);
  const Mor eta = monad_unit(t, m);
  const Mor id_tn = Mor::identity(b, m * n);
  const std::string tag = "(" + std::to_string(m) + ")";
  std::vector<LawReport> out;
  out.push_back(law_eq("monad_unit_left" + tag,
                       mu * tensor(eta, Mor::identity(b, n)), id_tn, tol));
  out.push_back(law_eq("monad_unit_right" + tag, mu * monad_unit(t, m * n),
                       id_tn, tol));
  out.push_back(law_eq("monad_assoc" + tag, mu * monad_mult(t, m * n),
                       mu * tensor(mu, Mor::identity(b, n)), tol));
  return out;
}

LawReport check_monad_frobenius(const TensorMonad& t, int m, Tolerance tol) {
  const Backend b = t.backend();
  const int n = t.n();
  const Mor mu = monad_mult(t, m);            // T^2(A) -> T(A)
  const Mor mu_t = monad_mult(t, m * n);      // T^2(T(A)) -> T(T(A))
  const Mor id_n = Mor::identity(b, n);
  return law_eq("monad_frobenius(" + std::to_string(m) + ")",
                tensor(mu, id_n) * dagger(mu_t),
                mu_t * tensor(dagger(mu), id_n), tol);
}

EMAlgebra::EMAlgebra(TensorMonad t, int m, Mor a)
    : monad(std::move(t)), carrier(m), action(std::move(a)) {
  if (action.backend() != monad.backend()) {
    throw BackendMismatch("action has the wrong backend");
  }
  if (action.cod() != carrier || action.dom() != carrier * monad.n()) {
    throw DimensionMismatch("action must be an (m x m*n) matrix");
  }
}

EMAlgebra free_algebra(const TensorMonad& t, int m) {
  return EMAlgebra(t, m * t.n(), monad_mult(t, m));
}

std::vector<LawReport> check_em(const EMAlgebra& alg, Tolerance tol) {
  const Backend b = alg.monad.backend();
  const int n = alg.monad.n();
  const Mor id_m = Mor::identity(b, alg.carrier);
  const Mor id_n = Mor::identity(b, n);
  std::vector<LawReport> out;
  out.push_back(law_eq("em_unit",
                       alg.action * tensor(id_m, alg.monad.monoid().unit),
                       id_m, tol));
  out.push_back(law_eq("em_assoc",
                       alg.action * tensor(id_m, alg.monad.monoid().mult),
                       alg.action * tensor(alg.action, id_n), tol));
  return out;
}

LawReport check_fem(const EMAlgebra& alg, Tolerance tol) {
  const Backend b = alg.monad.backend();
  const int n = alg.monad.n();
  const Mor id_m = Mor::identity(b, alg.carrier);
  const Mor id_n = Mor::identity(b, n);
  const Mor& mult = alg.monad.monoid().mult;
  return law_eq("fem",
                tensor(id_m, mult) * tensor(dagger(alg.action), id_n),
                tensor(alg.action, id_n) * tensor(id_m, dagger(mult)), tol);
}

LawReport check_self_adjoint_coalgebra(const EMAlgebra& alg, Tolerance tol) {
  const Backend b = alg.monad.backend();
  const int n = alg.monad.n();
  const Mor id_m = Mor::identity(b, alg.carrier);
  const Mor id_n = Mor::identity(b, n);
  const FrobMonoid& mon = alg.monad.monoid();
  const Mor cup = dagger(mon.mult) * mon.unit;
  return law_eq("self_adjoint_coalgebra",
                tensor(alg.action, id_n) * tensor(id_m, cup),
                dagger(alg.action), tol);
}

FrobMonoid pants_monoid(int n) {
  if (n < 1) throw BadParams("pants_monoid requires n >= 1");
  const int dim = n * n;
  const double root = std::sqrt(static_cast<double>(n));
  Mor mult(Backend::FHilb, dim, dim * dim);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int l = 0; l < n; ++l) {
        // b_ij * b_jl = sqrt(n) b_il
        const int left = i * n + j;
        const int right = j * n + l;
        mult.set(i * n + l, left * dim + right, cplx(root));
      }
    }
  }
  Mor unit(Backend::FHilb, dim, 1);
  for (int i = 0; i < n; ++i) unit.set(i * n + i, 0, cplx(1.0 / root));
  return FrobMonoid(Backend::FHilb, dim, mult, unit);
}

EMAlgebra pants_conjugation_algebra(int n, const Mor& u, Tolerance tol) {
  if (u.backend() != Backend::FHilb || u.dom() != n || u.cod() != n) {
    throw DimensionMismatch("u must be an n x n FHilb matrix");
  }
  const Mor id_n = Mor::identity(Backend::FHilb, n);
  if (!law_eq("", dagger(u) * u, id_n, tol).pass ||
      !law_eq("", u * dagger(u), id_n, tol).pass) {
    throw NotUnitary("conjugating matrix is not unitary");
  }
  const FrobMonoid pants = pants_monoid(n);
  // Conjugation a -> u^dag a u on the b_ij basis is dagger(u) (x)
  // transpose(u) under row-major flattening.
  const Mor conj_map = tensor(dagger(u), transpose(u));
  TensorMonad monad(pants, tol);
  const Mor action =
      pants.mult * tensor(Mor::identity(Backend::FHilb, pants.n), conj_map);
  return EMAlgebra(std::move(monad), pants.n, action);
}

KleisliMor::KleisliMor(TensorMonad t, int d, int c, Mor b)
    : monad(std::move(t)), dom(d), cod(c), body(std::move(b)) {
  if (body.backend() != monad.backend()) {
    throw BackendMismatch("body has the wrong backend");
  }
  if (body.dom() != dom || body.cod() != cod * monad.n()) {
    throw DimensionMismatch("body must be a (cod*n x dom) matrix");
  }
}

KleisliMor kleisli_identity(const TensorMonad& t, int m) {
  return KleisliMor(t, m, m, monad_unit(t, m));
}

KleisliMor kleisli_compose(const KleisliMor& g, const KleisliMor& f) {
  if (g.monad.backend() != f.monad.backend() || g.monad.n() != f.monad.n()) {
    throw BackendMismatch("kleisli_compose: mismatched monads");
  }
  if (g.dom != f.cod) {
    throw DimensionMismatch("kleisli_compose: dom(g) != cod(f)");
  }
  const TensorMonad& t = f.monad;
  const Mor body = monad_mult(t, g.cod) *
                   tensor(g.body, Mor::identity(t.backend(), t.n())) * f.body;
  return KleisliMor(t, f.dom, g.cod, body);
}

KleisliMor kleisli_dagger(const KleisliMor& f) {
  const TensorMonad& t = f.monad;
  if (!t.frobenius_ok()) {
    throw NotFrobenius(
        "kleisli_dagger requires the inducing monoid to pass the "
        "Frobenius battery");
  }
  const Mor body = tensor(dagger(f.body), Mor::identity(t.backend(), t.n())) *
                   dagger(monad_mult(t, f.cod)) * monad_unit(t, f.cod);
  return KleisliMor(t, f.cod, f.dom, body);
}

namespace {

bool is_discrete_groupoid_algebra(const FrobMonoid& m, Tolerance tol) {
  const int n = m.n;
  Mor mult(m.backend, n, n * n);
  for (int g = 0; g < n; ++g) mult.set(g, g * n + g, cplx(1.0));
  Mor unit(m.backend, n, 1);
  for (int g = 0; g < n; ++g) unit.set(g, 0, cplx(1.0));
  return approx_eq(m.mult, mult, tol).pass && approx_eq(m.unit, unit, tol).pass;
}

Mor basis_column(Backend b, int n, int g) {
  Mor e(b, n, 1);
  e.set(g, 0, cplx(1.0));
  return e;
}

}  // namespace

Measurement extract_measurement(const EMAlgebra& alg, Tolerance tol) {
  const FrobMonoid& mon = alg.monad.monoid();
  if (!is_discrete_groupoid_algebra(mon, tol)) {
    throw InvalidGroupoid(
        "extract_measurement requires the monoid of a discrete groupoid");
  }
  if (!all_pass(check_em(alg, tol)) || !check_fem(alg, tol).pass) {
    throw NotFEM("algebra fails the EM or FEM laws");
  }
  const Backend b = alg.monad.backend();
  const int m = alg.carrier;
  const Mor id_m = Mor::identity(b, m);
  Measurement out;
  Mor sum = Mor::zero(b, m, m);
  for (int g = 0; g < mon.n; ++g) {
    const Mor p = alg.action * tensor(id_m, basis_column(b, mon.n, g));
    if (!law_eq("", p, dagger(p), tol).pass ||
        !law_eq("", p * p, p, tol).pass) {
      throw NotFEM("extracted map is not an orthogonal projection");
    }
    sum = add(sum, p);
    out.projections.push_back(p);
  }
  if (!law_eq("", sum, id_m, tol).pass) {
    throw NotFEM("extracted projections do not sum to the identity");
  }
  return out;
}

namespace {

// Orthonormal basis of the range of a self-adjoint idempotent, as
// columns. For Rel the projection must be a partial identity and the
// basis is its set of indicator columns.
Mor projection_range_basis(const Mor& p, Tolerance tol) {
  const int m = p.cod();
  if (p.backend() == Backend::Rel) {
    std::vector<int> members;
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < m; ++c) {
        const bool on = p.rel_at(r, c);
        if (r == c && on) members.push_back(r);
        if (r != c && on) {
          throw NotFEM("Rel block projection is not a partial identity");
        }
      }
    }
    Mor basis(Backend::Rel, m, static_cast<int>(members.size()));
    for (int c = 0; c < static_cast<int>(members.size()); ++c) {
      basis.set(members[c], c, cplx(1.0));
    }
    return basis;
  }

  double trace = 0.0;
  for (int i = 0; i < m; ++i) trace += p.at(i, i).real();
  const int rank = static_cast<int>(std::lround(trace));
  const double keep_threshold = std::max(1e-6, 1e3 * tol.eps);

  std::vector<std::vector<cplx>> basis;
  for (int c = 0; c < m && static_cast<int>(basis.size()) < rank; ++c) {
    std::vector<cplx> v(m);
    for (int r = 0; r < m; ++r) v[r] = p.at(r, c);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) {
        cplx overlap(0.0);
        for (int r = 0; r < m; ++r) overlap += std::conj(q[r]) * v[r];
        for (int r = 0; r < m; ++r) v[r] -= overlap * q[r];
      }
    }
    double norm = 0.0;
    for (const auto& x : v) norm += std::norm(x);
    norm = std::sqrt(norm);
    if (norm > keep_threshold) {
      for (auto& x : v) x /= norm;
      basis.push_back(std::move(v));
    }
  }
  if (static_cast<int>(basis.size()) != rank) {
    throw NotFEM("projection rank does not match its trace");
  }
  Mor out(Backend::FHilb, m, rank);
  for (int c = 0; c < rank; ++c) {
    for (int r = 0; r < m; ++r) out.set(r, c, basis[c][r]);
  }
  return out;
}

}  // namespace

ExtractedRepresentation algebra_to_representation(const EMAlgebra& alg,
                                                  const FiniteGroupoid& g,
                                                  Tolerance tol) {
  const Backend b = alg.monad.backend();
  const FrobMonoid expected = b == Backend::Rel
                                  ? groupoid_to_frobenius_rel(g)
                                  : groupoid_to_frobenius_fhilb(g);
  if (!approx_eq(alg.monad.monoid().mult, expected.mult, tol).pass ||
      !approx_eq(alg.monad.monoid().unit, expected.unit, tol).pass) {
    throw BadParams("algebra is not over the algebra of the given groupoid");
  }
  if (!all_pass(check_em(alg, tol)) || !check_fem(alg, tol).pass) {
    throw NotFEM("algebra fails the EM or FEM laws");
  }
  const int m = alg.carrier;
  const int n = alg.monad.n();
  const Mor id_m = Mor::identity(b, m);
  const int nobj = static_cast<int>(g.objects.size());

  Representation rep;
  rep.groupoid = g;
  rep.backend = b;
  std::vector<Mor> bases;
  int total = 0;
  for (int obj = 0; obj < nobj; ++obj) {
    const int e = g.identity_on(obj);
    const Mor p = alg.action * tensor(id_m, basis_column(b, n, e));
    Mor basis = projection_range_basis(p, tol);
    rep.block_dims.push_back(basis.dom());
    total += basis.dom();
    bases.push_back(std::move(basis));
  }
  if (total != m) {
    throw NotFEM("block projections do not decompose the carrier");
  }
  Mor big(b, m, m);
  {
    int offset = 0;
    for (const Mor& basis : bases) {
      for (int c = 0; c < basis.dom(); ++c) {
        for (int r = 0; r < m; ++r) big.set(r, offset + c, basis.at(r, c));
      }
      offset += basis.dom();
    }
  }
  if (!law_eq("", dagger(big) * big, Mor::identity(b, m), tol).pass) {
    throw NotFEM("block bases are not orthonormal across blocks");
  }

  // With mult(e_f (x) e_g) = e_{f o g}, acting by e_g maps the cod(g)
  // block into the dom(g) block; the covariant functor therefore
  // restricts the action of the inverse.
  for (int f = 0; f < g.size(); ++f) {
    const Mor map =
        alg.action * tensor(id_m, basis_column(b, n, g.inverse[f]));
    const Mor block = dagger(bases[g.morphisms[f].cod]) * map *
                      bases[g.morphisms[f].dom];
    rep.maps.push_back(block);
  }
  return ExtractedRepresentation{std::move(rep), std::move(big)};
}

EMAlgebra representation_to_algebra(const Representation& rep,
                                    Tolerance tol) {
  const FiniteGroupoid& g = rep.groupoid;
  const Backend b = rep.backend;
  const int nobj = static_cast<int>(g.objects.size());
  if (static_cast<int>(rep.block_dims.size()) != nobj ||
      static_cast<int>(rep.maps.size()) != g.size()) {
    throw DimensionMismatch("representation tables have the wrong size");
  }
  for (int f = 0; f < g.size(); ++f) {
    const Mor& map = rep.maps[f];
    if (map.dom() != rep.block_dims[g.morphisms[f].dom] ||
        map.cod() != rep.block_dims[g.morphisms[f].cod]) {
      throw DimensionMismatch("representation map has the wrong block shape");
    }
  }
  // Functoriality, identities, and unitarity of every image.
  for (int obj = 0; obj < nobj; ++obj) {
    const int e = g.identity_on(obj);
    if (!law_eq("", rep.maps[e], Mor::identity(b, rep.block_dims[obj]), tol)
             .pass) {
      throw NotUnitaryRep("identity morphism does not map to the identity");
    }
  }
  for (int f = 0; f < g.size(); ++f) {
    for (int k = 0; k < g.size(); ++k) {
      const int fk = g.compose_at(f, k);
      if (fk < 0) continue;
      if (!law_eq("", rep.maps[fk], rep.maps[f] * rep.maps[k], tol).pass) {
        throw NotUnitaryRep("representation is not functorial");
      }
    }
  }
  for (int f = 0; f < g.size(); ++f) {
    const Mor& map = rep.maps[f];
    const Mor id_dom = Mor::identity(b, map.dom());
    const Mor id_cod = Mor::identity(b, map.cod());
    if (!law_eq("", dagger(map) * map, id_dom, tol).pass ||
        !law_eq("", map * dagger(map), id_cod, tol).pass) {
      throw NotUnitaryRep("representation image is not unitary");
    }
  }

  std::vector<int> offsets(nobj, 0);
  int m = 0;
  for (int obj = 0; obj < nobj; ++obj) {
    offsets[obj] = m;
    m += rep.block_dims[obj];
  }
  const int n = g.size();
  Mor action(b, m, m * n);
  // action(v (x) e_f) embeds rho(inverse(f)) applied to the cod(f)
  // component of v into the dom(f) block, mirroring the extraction.
  for (int f = 0; f < n; ++f) {
    const int dom_obj = g.morphisms[f].dom;
    const int cod_obj = g.morphisms[f].cod;
    const Mor& map = rep.maps[g.inverse[f]];  // cod(f) block -> dom(f) block
    for (int c = 0; c < map.dom(); ++c) {
      const int col = (offsets[cod_obj] + c) * n + f;
      for (int r = 0; r < map.cod(); ++r) {
        action.set(offsets[dom_obj] + r, col, map.at(r, c));
      }
    }
  }
  const FrobMonoid monoid = b == Backend::Rel ? groupoid_to_frobenius_rel(g)
                                              : groupoid_to_frobenius_fhilb(g);
  return EMAlgebra(TensorMonad(monoid, tol), m, action);
}

LawReport is_algebra_hom(const Mor& f, const EMAlgebra& a, const EMAlgebra& b,
                         Tolerance tol) {
  const int n = a.monad.n();
  return law_eq("algebra_hom",
                b.action * tensor(f, Mor::identity(f.backend(), n)),
                f * a.action, tol);
}

}  // namespace daggerlab
