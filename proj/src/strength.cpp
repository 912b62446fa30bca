#include "daggerlab/strength.hpp"

#include <string>

namespace daggerlab {

Mor strength_map(const TensorMonad& t, int m, int k) {
  return Mor::identity(t.backend(), m * k * t.n());
}

Mor costrength_map(const TensorMonad& t, int m, int k) {
  const Backend b = t.backend();
  const int n = t.n();
  // T(swap(k,m)) o st_{B,A} o swap(T(A),B)
  return compose(tensor(Mor::swap(b, k, m), Mor::identity(b, n)),
                 compose(strength_map(t, k, m), Mor::swap(b, m * n, k)));
}

std::vector<LawReport> check_strength_laws(const TensorMonad& t,
                                           const std::vector<int>& dims,
                                           Tolerance tol) {
  const Backend b = t.backend();
  const int n = t.n();
  std::vector<LawReport> out;
  auto dim_tag = [](std::initializer_list<int> ds) {
    std::string s = "(";
    bool first = true;
    for (int d : ds) {
      if (!first) s += ",";
      s += std::to_string(d);
      first = false;
    }
    return s + ")";
  };

  for (int m : dims) {
    for (int k : dims) {
      const Mor st = strength_map(t, m, k);
      // unitarity
      {
        LawReport r1 = law_eq("", st * dagger(st),
                              Mor::identity(b, m * k * n), tol);
        LawReport r2 = law_eq("", dagger(st) * st,
                              Mor::identity(b, m * k * n), tol);
        LawReport rep;
        rep.law = "st_unitary" + dim_tag({m, k});
        rep.residual = std::max(r1.residual, r2.residual);
        rep.pass = r1.pass && r2.pass;
        out.push_back(rep);
      }
      // st o (id (x) eta) = eta
      out.push_back(law_eq(
          "st_eta" + dim_tag({m, k}),
          st * tensor(Mor::identity(b, m), monad_unit(t, k)),
          monad_unit(t, m * k), tol));
      // st o (id (x) mu) = mu o T(st) o st
      out.push_back(law_eq(
          "st_mu" + dim_tag({m, k}),
          st * tensor(Mor::identity(b, m), monad_mult(t, k)),
          monad_mult(t, m * k) *
              tensor(st, Mor::identity(b, n)) *
              strength_map(t, m, k * n),
          tol));
    }
  }
  // T(lambda) o st_{I,A} = lambda (lambda is the identity here)
  for (int m : dims) {
    out.push_back(law_eq("st_lambda" + dim_tag({m}),
                         strength_map(t, 1, m),
                         Mor::identity(b, m * n), tol));
  }
  // st o alpha = T(alpha) o st o (id (x) st)
  for (int m : dims) {
    for (int k : dims) {
      for (int l : dims) {
        const Mor alpha = Mor::identity(b, m * k * l * n);
        out.push_back(law_eq(
            "st_alpha" + dim_tag({m, k, l}),
            strength_map(t, m * k, l) * alpha,
            compose(alpha,
                    compose(strength_map(t, m, k * l),
                            tensor(Mor::identity(b, m),
                                   strength_map(t, k, l)))),
            tol));
      }
    }
  }
  return out;
}

FrobMonoid extract_unit_monoid(const TensorMonad& t) {
  if (!t.frobenius_ok()) {
    throw NotFrobenius("inducing monoid fails the Frobenius battery");
  }
  const Backend b = t.backend();
  const int n = t.n();
  // mult on T(I): T(I) (x) T(I) --st--> T(T(I) (x) I) --T(rho)--> T^2(I)
  // --mu_I--> T(I).
  const Mor st = strength_map(t, n, 1);
  const Mor t_rho = Mor::identity(b, n * n);
  const Mor mult = monad_mult(t, 1) * t_rho * st;
  const Mor unit = monad_unit(t, 1);
  return FrobMonoid(b, n, mult, unit);
}

std::vector<LawReport> check_counit_iso(const TensorMonad& t, int m,
                                        Tolerance tol) {
  const Backend b = t.backend();
  const int n = t.n();
  std::vector<LawReport> out;
  const std::string tag = "(" + std::to_string(m) + ")";
  // c = T(rho_A) o st_{A,I} : A (x) T(I) -> T(A)
  const Mor c = Mor::identity(b, m * n) * strength_map(t, m, 1);
  const Mor id_m = Mor::identity(b, m);
  const Mor id_n = Mor::identity(b, n);
  {
    LawReport r1 = law_eq("", c * dagger(c), Mor::identity(b, m * n), tol);
    LawReport r2 = law_eq("", dagger(c) * c, Mor::identity(b, m * n), tol);
    LawReport rep;
    rep.law = "counit_unitary" + tag;
    rep.residual = std::max(r1.residual, r2.residual);
    rep.pass = r1.pass && r2.pass;
    out.push_back(rep);
  }
  out.push_back(law_eq("counit_eta" + tag,
                       c * tensor(id_m, monad_unit(t, 1)),
                       monad_unit(t, m), tol));
  out.push_back(law_eq("counit_eta_dag" + tag,
                       dagger(monad_unit(t, m)) * c,
                       tensor(id_m, dagger(monad_unit(t, 1))), tol));
  out.push_back(law_eq("counit_mu" + tag,
                       c * tensor(id_m, monad_mult(t, 1)),
                       monad_mult(t, m) * tensor(c, id_n), tol));
  out.push_back(law_eq("counit_mu_dag" + tag,
                       dagger(monad_mult(t, m)) * c,
                       tensor(c, id_n) * tensor(id_m, dagger(monad_mult(t, 1))),
                       tol));
  return out;
}

namespace {

Mor double_strength(const TensorMonad& t, int m, int k) {
  // dst = mu_{A(x)B} o T(st'_{A,B}) o st_{T(A),B}
  const int n = t.n();
  return monad_mult(t, m * k) *
         tensor(costrength_map(t, m, k), Mor::identity(t.backend(), n)) *
         strength_map(t, m * n, k);
}

Mor double_strength_prime(const TensorMonad& t, int m, int k) {
  // dst' = mu_{A(x)B} o T(st_{A,B}) o st'_{A,T(B)}
  const int n = t.n();
  return monad_mult(t, m * k) *
         tensor(strength_map(t, m, k), Mor::identity(t.backend(), n)) *
         costrength_map(t, m, k * n);
}

}  // namespace

LawReport check_commutativity(const TensorMonad& t, int m, int k,
                              Tolerance tol) {
  return law_eq("dst_commutativity(" + std::to_string(m) + "," +
                    std::to_string(k) + ")",
                double_strength(t, m, k), double_strength_prime(t, m, k),
                tol);
}

KleisliMor kleisli_tensor(const KleisliMor& f, const KleisliMor& g) {
  if (f.monad.backend() != g.monad.backend() ||
      f.monad.n() != g.monad.n()) {
    throw BackendMismatch("kleisli_tensor: mismatched monads");
  }
  const TensorMonad& t = f.monad;
  if (!t.frobenius_ok()) {
    throw NotFrobenius("inducing monoid fails the Frobenius battery");
  }
  if (!t.commutative_ok()) {
    throw NotCommutative(
        "kleisli_tensor requires a commutative monoid: the dagger does "
        "not respect the tensor otherwise");
  }
  const Mor body =
      double_strength(t, f.cod, g.cod) * tensor(f.body, g.body);
  return KleisliMor(t, f.dom * g.dom, f.cod * g.cod, body);
}

LawReport check_remark_counterexample(const FiniteGroupoid& group) {
  if (group.objects.size() != 1) {
    throw BadParams("expected a one-object groupoid (a group)");
  }
  const FrobMonoid b = groupoid_to_frobenius_rel(group);
  const Mor lhs = tensor(b.unit, b.unit);
  const Mor rhs = dagger(b.mult) * b.unit;
  LawReport diff = approx_eq(lhs, rhs, Tolerance{});
  if (diff.pass) {
    throw TrivialGroup(
        "unit (x) unit equals dagger(mult) o unit: the group is trivial "
        "and there is no counterexample");
  }
  LawReport rep;
  rep.law = "remark_counterexample_sides_differ";
  rep.residual = diff.residual;  // number of entries witnessing the gap
  rep.pass = true;
  return rep;
}

DualityData standard_duality(int n, Backend backend) {
  Mor cup(backend, n * n, 1);
  for (int i = 0; i < n; ++i) cup.set(i * n + i, 0, cplx(1.0));
  return DualityData{n, cup, dagger(cup)};
}

std::vector<LawReport> check_duality(const DualityData& d, Tolerance tol) {
  const Backend b = d.cup.backend();
  const Mor id = Mor::identity(b, d.n);
  std::vector<LawReport> out;
  out.push_back(law_eq("snake_left", tensor(d.cap, id) * tensor(id, d.cup),
                       id, tol));
  out.push_back(law_eq("snake_right", tensor(id, d.cap) * tensor(d.cup, id),
                       id, tol));
  return out;
}

Mor dual_involution(const FrobMonoid& m) {
  const Mor form = dagger(m.unit) * m.mult;  // 1 x n^2
  Mor i(m.backend, m.n, m.n);
  for (int j = 0; j < m.n; ++j) {
    for (int k = 0; k < m.n; ++k) {
      i.set(j, k, form.at(0, j * m.n + k));
    }
  }
  return i;
}

FrobMonoid endohom_monoid(int n, Backend backend) {
  const DualityData d = standard_duality(n, backend);
  const Mor id = Mor::identity(backend, n);
  const Mor mult = tensor(tensor(id, d.cap), id);
  return FrobMonoid(backend, n * n, mult, d.cup);
}

Mor cayley_embedding(const FrobMonoid& m) {
  // R(e_j) = mult(e_j (x) -) as an element of A (x) A*.
  Mor r(m.backend, m.n * m.n, m.n);
  for (int row = 0; row < m.n; ++row) {
    for (int k = 0; k < m.n; ++k) {
      for (int j = 0; j < m.n; ++j) {
        r.set(row * m.n + k, j, m.mult.at(row, j * m.n + k));
      }
    }
  }
  return r;
}

std::vector<LawReport> check_closure_equivalences(const FrobMonoid& m,
                                                  Tolerance tol) {
  std::vector<LawReport> out;
  out.push_back(check_frobenius(m, tol));
  out.back().law = "closure_frobenius";

  const Mor i = dual_involution(m);
  out.push_back(law_eq("closure_i_involution", conjugate(i) * i,
                       Mor::identity(m.backend, m.n), tol));

  // Cayley square: i_{[A,A]} o R = R_* o i, with R_* the dual of
  // dagger(R) along the standard duality, i.e. the entrywise conjugate.
  const Mor r = cayley_embedding(m);
  const Mor i_hom = dual_involution(endohom_monoid(m.n, m.backend));
  out.push_back(
      law_eq("closure_cayley_involutive", i_hom * r, conjugate(r) * i, tol));

  // ev together with (id (x) i) o dagger(mult) o unit forms a duality.
  const DualityData std_d = standard_duality(m.n, m.backend);
  const Mor c13 =
      tensor(Mor::identity(m.backend, m.n), i) * (dagger(m.mult) * m.unit);
  const DualityData cand{m.n, c13, std_d.cap};
  const std::vector<LawReport> snakes = check_duality(cand, tol);
  LawReport rep;
  rep.law = "closure_ev_duality";
  rep.residual = std::max(snakes[0].residual, snakes[1].residual);
  rep.pass = snakes[0].pass && snakes[1].pass;
  out.push_back(rep);
  return out;
}

}  // namespace daggerlab
