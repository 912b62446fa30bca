#include "daggerlab/fixtures.hpp"

#include <cmath>
#include <stdexcept>

namespace daggerlab {

int GroupTable::inverse(int x) const {
  for (int y = 0; y < order(); ++y) {
    if (mult[x][y] == 0) return y;
  }
  throw BadParams("table has no inverse for element " + std::to_string(x));
}

GroupTable trivial_group() { return GroupTable{"trivial", {{0}}}; }

GroupTable cyclic_group(int k) {
  if (k < 1) throw BadParams("cyclic_group requires k >= 1");
  GroupTable g;
  g.name = "z" + std::to_string(k);
  g.mult.assign(k, std::vector<int>(k, 0));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) g.mult[i][j] = (i + j) % k;
  }
  return g;
}

GroupTable product_group(const GroupTable& a, const GroupTable& b) {
  const int na = a.order();
  const int nb = b.order();
  GroupTable g;
  g.name = a.name + "x" + b.name;
  g.mult.assign(na * nb, std::vector<int>(na * nb, 0));
  for (int i1 = 0; i1 < na; ++i1) {
    for (int j1 = 0; j1 < nb; ++j1) {
      for (int i2 = 0; i2 < na; ++i2) {
        for (int j2 = 0; j2 < nb; ++j2) {
          g.mult[i1 * nb + j1][i2 * nb + j2] =
              a.mult[i1][i2] * nb + b.mult[j1][j2];
        }
      }
    }
  }
  return g;
}

GroupTable klein_four_group() {
  GroupTable g = product_group(cyclic_group(2), cyclic_group(2));
  g.name = "z2xz2";
  return g;
}

GroupTable symmetric_group_3() {
  // Permutations of {0,1,2} as images (p[0], p[1], p[2]); identity first.
  const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                           {0, 2, 1}, {1, 0, 2}, {2, 1, 0}};
  auto index_of = [&](const int p[3]) {
    for (int i = 0; i < 6; ++i) {
      if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) {
        return i;
      }
    }
    throw std::logic_error("not a permutation");
  };
  GroupTable g;
  g.name = "s3";
  g.mult.assign(6, std::vector<int>(6, 0));
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      int comp[3];  // i after j
      for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
      g.mult[i][j] = index_of(comp);
    }
  }
  return g;
}

FiniteGroupoid group_groupoid(const GroupTable& g) {
  FiniteGroupoid out;
  out.objects = {"*"};
  const int k = g.order();
  for (int x = 0; x < k; ++x) {
    out.morphisms.push_back(GroupoidMor{"g" + std::to_string(x), 0, 0});
  }
  out.compose = g.mult;
  out.inverse.resize(k);
  for (int x = 0; x < k; ++x) out.inverse[x] = g.inverse(x);
  return out;
}

FiniteGroupoid trivial_groupoid() { return group_groupoid(trivial_group()); }

FiniteGroupoid discrete_groupoid(int k) {
  if (k < 1) throw BadParams("discrete_groupoid requires k >= 1");
  FiniteGroupoid out;
  out.compose.assign(k, std::vector<int>(k, -1));
  out.inverse.resize(k);
  for (int a = 0; a < k; ++a) {
    out.objects.push_back("o" + std::to_string(a));
    out.morphisms.push_back(GroupoidMor{"id" + std::to_string(a), a, a});
    out.compose[a][a] = a;
    out.inverse[a] = a;
  }
  return out;
}

FiniteGroupoid two_object_two_iso_groupoid() {
  FiniteGroupoid out;
  out.objects = {"A", "B"};
  auto index = [](int x, int y, int s) { return (x * 2 + y) * 2 + s; };
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int s = 0; s < 2; ++s) {
        out.morphisms.push_back(GroupoidMor{
            "f" + std::to_string(x) + std::to_string(y) + std::to_string(s),
            x, y});
      }
    }
  }
  out.compose.assign(8, std::vector<int>(8, -1));
  out.inverse.assign(8, -1);
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int z = 0; z < 2; ++z) {
        for (int s = 0; s < 2; ++s) {
          for (int t = 0; t < 2; ++t) {
            out.compose[index(y, z, s)][index(x, y, t)] =
                index(x, z, s ^ t);
          }
        }
      }
    }
  }
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int s = 0; s < 2; ++s) {
        out.inverse[index(x, y, s)] = index(y, x, s);
      }
    }
  }
  return out;
}

FiniteGroupoid disjoint_union(const FiniteGroupoid& a,
                              const FiniteGroupoid& b) {
  FiniteGroupoid out;
  for (const auto& o : a.objects) out.objects.push_back("l." + o);
  for (const auto& o : b.objects) out.objects.push_back("r." + o);
  const int shift_obj = static_cast<int>(a.objects.size());
  const int shift = a.size();
  for (const auto& m : a.morphisms) {
    out.morphisms.push_back(GroupoidMor{"l." + m.name, m.dom, m.cod});
  }
  for (const auto& m : b.morphisms) {
    out.morphisms.push_back(
        GroupoidMor{"r." + m.name, m.dom + shift_obj, m.cod + shift_obj});
  }
  const int n = out.size();
  out.compose.assign(n, std::vector<int>(n, -1));
  out.inverse.assign(n, -1);
  for (int f = 0; f < a.size(); ++f) {
    for (int g = 0; g < a.size(); ++g) out.compose[f][g] = a.compose_at(f, g);
    out.inverse[f] = a.inverse[f];
  }
  for (int f = 0; f < b.size(); ++f) {
    for (int g = 0; g < b.size(); ++g) {
      const int h = b.compose_at(f, g);
      out.compose[shift + f][shift + g] = h < 0 ? -1 : shift + h;
    }
    out.inverse[shift + f] = shift + b.inverse[f];
  }
  return out;
}

std::vector<NamedGroupoid> battery_groupoids() {
  std::vector<NamedGroupoid> out;
  out.push_back({"trivial", trivial_groupoid()});
  out.push_back({"z2", group_groupoid(cyclic_group(2))});
  out.push_back({"z3", group_groupoid(cyclic_group(3))});
  out.push_back({"z4", group_groupoid(cyclic_group(4))});
  out.push_back({"z2xz2", group_groupoid(klein_four_group())});
  out.push_back({"s3", group_groupoid(symmetric_group_3())});
  out.push_back({"discrete2", discrete_groupoid(2)});
  out.push_back({"discrete3", discrete_groupoid(3)});
  out.push_back({"discrete4", discrete_groupoid(4)});
  out.push_back({"two_object_two_iso", two_object_two_iso_groupoid()});
  out.push_back({"s3+discrete2", disjoint_union(group_groupoid(
                                                    symmetric_group_3()),
                                                discrete_groupoid(2))});
  out.push_back({"z2+z3", disjoint_union(group_groupoid(cyclic_group(2)),
                                         group_groupoid(cyclic_group(3)))});
  return out;
}

std::vector<NamedGroupoid> battery_groups() {
  std::vector<NamedGroupoid> out;
  out.push_back({"trivial", trivial_groupoid()});
  out.push_back({"z2", group_groupoid(cyclic_group(2))});
  out.push_back({"z3", group_groupoid(cyclic_group(3))});
  out.push_back({"z4", group_groupoid(cyclic_group(4))});
  out.push_back({"z2xz2", group_groupoid(klein_four_group())});
  out.push_back({"s3", group_groupoid(symmetric_group_3())});
  return out;
}

FrobMonoid non_frobenius_monoid(Backend b) {
  Mor mult = Mor::from_rows(b, {{1, 0, 0, 0}, {0, 1, 1, 0}});
  Mor unit = Mor::from_rows(b, {{1}, {0}});
  return FrobMonoid(b, 2, mult, unit);
}

Mor random_mor(Rng& rng, Backend b, int cod, int dom) {
  Mor out(b, cod, dom);
  for (int r = 0; r < cod; ++r) {
    for (int c = 0; c < dom; ++c) {
      if (b == Backend::Rel) {
        out.set(r, c, rng.uniform() < 0.4 ? cplx(1.0) : cplx(0.0));
      } else {
        out.set(r, c, cplx(rng.gauss(), rng.gauss()));
      }
    }
  }
  return out;
}

Mor random_unitary(Rng& rng, int n) {
  // Gram-Schmidt on the columns of a Gaussian matrix; rerun on the
  // (measure-zero) degenerate draws.
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<std::vector<cplx>> cols(n, std::vector<cplx>(n));
    for (auto& col : cols) {
      for (auto& v : col) v = cplx(rng.gauss(), rng.gauss());
    }
    bool ok = true;
    for (int c = 0; c < n && ok; ++c) {
      for (int pass = 0; pass < 2; ++pass) {
        for (int q = 0; q < c; ++q) {
          cplx overlap(0.0);
          for (int r = 0; r < n; ++r) {
            overlap += std::conj(cols[q][r]) * cols[c][r];
          }
          for (int r = 0; r < n; ++r) cols[c][r] -= overlap * cols[q][r];
        }
      }
      double norm = 0.0;
      for (const auto& v : cols[c]) norm += std::norm(v);
      norm = std::sqrt(norm);
      if (norm < 1e-8) {
        ok = false;
        break;
      }
      for (auto& v : cols[c]) v /= norm;
    }
    if (!ok) continue;
    Mor out(Backend::FHilb, n, n);
    for (int c = 0; c < n; ++c) {
      for (int r = 0; r < n; ++r) out.set(r, c, cols[c][r]);
    }
    return out;
  }
  throw std::logic_error("random_unitary failed to orthonormalize");
}

Mor random_self_adjoint_unitary(Rng& rng, int n) {
  const Mor u = random_unitary(rng, n);
  Mor signs(Backend::FHilb, n, n);
  bool has_minus = false;
  for (int i = 0; i < n; ++i) {
    const bool minus = rng.uniform() < 0.5;
    has_minus = has_minus || minus;
    signs.set(i, i, minus ? cplx(-1.0) : cplx(1.0));
  }
  if (!has_minus) signs.set(0, 0, cplx(-1.0));  // avoid the identity
  return u * signs * dagger(u);
}

Mor invert(const Mor& m) {
  if (m.backend() != Backend::FHilb || m.dom() != m.cod()) {
    throw DimensionMismatch("invert requires a square FHilb matrix");
  }
  const int n = m.dom();
  std::vector<std::vector<cplx>> a(n, std::vector<cplx>(2 * n, cplx(0.0)));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) a[r][c] = m.at(r, c);
    a[r][n + r] = cplx(1.0);
  }
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (std::abs(a[pivot][col]) < 1e-12) {
      throw BadParams("matrix is singular");
    }
    std::swap(a[pivot], a[col]);
    const cplx p = a[col][col];
    for (auto& v : a[col]) v /= p;
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const cplx factor = a[r][col];
      if (factor == cplx(0.0)) continue;
      for (int c = 0; c < 2 * n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  Mor out(Backend::FHilb, n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) out.set(r, c, a[r][n + c]);
  }
  return out;
}

namespace {

// Random assignment of m carrier dimensions to k groups.
std::vector<int> random_partition(Rng& rng, int m, int k) {
  std::vector<int> group_of(m);
  for (int j = 0; j < m; ++j) group_of[j] = rng.below(k);
  return group_of;
}

FrobMonoid discrete_algebra(int k, Backend b) {
  Mor mult(b, k, k * k);
  Mor unit(b, k, 1);
  for (int g = 0; g < k; ++g) {
    mult.set(g, g * k + g, cplx(1.0));
    unit.set(g, 0, cplx(1.0));
  }
  return FrobMonoid(b, k, mult, unit);
}

EMAlgebra idempotents_to_algebra(const std::vector<Mor>& ps, int m, int k,
                                 Tolerance tol) {
  Mor action(Backend::FHilb, m, m * k);
  for (int g = 0; g < k; ++g) {
    for (int j = 0; j < m; ++j) {
      for (int r = 0; r < m; ++r) {
        action.set(r, j * k + g, ps[g].at(r, j));
      }
    }
  }
  return EMAlgebra(TensorMonad(discrete_algebra(k, Backend::FHilb), tol), m,
                   action);
}

}  // namespace

EMAlgebra pvm_algebra(Rng& rng, int m, int k, Tolerance tol) {
  return idempotent_system_algebra(rng, m, k, true, tol);
}

EMAlgebra idempotent_system_algebra(Rng& rng, int m, int k, bool self_adjoint,
                                    Tolerance tol) {
  const std::vector<int> group_of = random_partition(rng, m, k);
  const Mor u = random_unitary(rng, m);
  Mor s = u;
  Mor s_inv = dagger(u);
  if (!self_adjoint) {
    // S = U D W with a mild diagonal stretch keeps S⁻¹ cheap and exact.
    Mor d(Backend::FHilb, m, m);
    Mor d_inv(Backend::FHilb, m, m);
    for (int i = 0; i < m; ++i) {
      const double v = 0.5 + 1.5 * rng.uniform();
      d.set(i, i, cplx(v));
      d_inv.set(i, i, cplx(1.0 / v));
    }
    const Mor w = random_unitary(rng, m);
    s = u * d * w;
    s_inv = dagger(w) * d_inv * dagger(u);
  }
  std::vector<Mor> ps;
  for (int g = 0; g < k; ++g) {
    Mor q(Backend::FHilb, m, m);
    for (int j = 0; j < m; ++j) {
      if (group_of[j] == g) q.set(j, j, cplx(1.0));
    }
    ps.push_back(s * q * s_inv);
  }
  return idempotents_to_algebra(ps, m, k, tol);
}

KleisliMor random_kleisli(Rng& rng, const TensorMonad& t, int dom, int cod) {
  return KleisliMor(t, dom, cod,
                    random_mor(rng, t.backend(), cod * t.n(), dom));
}

}  // namespace daggerlab
