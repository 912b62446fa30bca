#include "daggerlab/groupoid.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace daggerlab {

int FiniteGroupoid::identity_on(int object) const {
  for (int e = 0; e < size(); ++e) {
    const auto& me = morphisms[e];
    if (me.dom != object || me.cod != object) continue;
    bool is_id = true;
    for (int f = 0; f < size() && is_id; ++f) {
      if (morphisms[f].cod == object && compose[e][f] != f) is_id = false;
      if (morphisms[f].dom == object && compose[f][e] != f) is_id = false;
    }
    if (is_id) return e;
  }
  return -1;
}

std::vector<LawReport> validate_groupoid(const FiniteGroupoid& g) {
  std::vector<LawReport> out;
  const int n = g.size();
  const int nobj = static_cast<int>(g.objects.size());

  auto count_report = [](std::string law, long long violations) {
    LawReport rep;
    rep.law = std::move(law);
    rep.residual = static_cast<double>(violations);
    rep.pass = violations == 0;
    return rep;
  };

  long long shape = 0;
  if (static_cast<int>(g.compose.size()) != n ||
      static_cast<int>(g.inverse.size()) != n) {
    ++shape;
  }
  for (const auto& row : g.compose) {
    if (static_cast<int>(row.size()) != n) ++shape;
  }
  for (const auto& m : g.morphisms) {
    if (m.dom < 0 || m.dom >= nobj || m.cod < 0 || m.cod >= nobj) ++shape;
  }
  for (int v : g.inverse) {
    if (v < 0 || v >= n) ++shape;
  }
  out.push_back(count_report("table_shape", shape));
  if (shape != 0) return out;  // the remaining checks would index out of range

  // compose(f, g) defined iff cod(g) = dom(f), with dom/cod of the result
  // matching.
  long long comp = 0;
  for (int f = 0; f < n; ++f) {
    for (int gg = 0; gg < n; ++gg) {
      const int h = g.compose_at(f, gg);
      const bool composable = g.morphisms[gg].cod == g.morphisms[f].dom;
      if (composable != (h >= 0)) {
        ++comp;
      } else if (h >= 0) {
        if (h >= n || g.morphisms[h].dom != g.morphisms[gg].dom ||
            g.morphisms[h].cod != g.morphisms[f].cod) {
          ++comp;
        }
      }
    }
  }
  out.push_back(count_report("compose_defined_iff_matching", comp));

  long long assoc = 0;
  for (int f = 0; f < n; ++f) {
    for (int gg = 0; gg < n; ++gg) {
      const int fg = g.compose_at(f, gg);
      if (fg < 0) continue;
      for (int h = 0; h < n; ++h) {
        const int gh = g.compose_at(gg, h);
        if (gh < 0) continue;
        if (g.compose_at(fg, h) != g.compose_at(f, gh)) ++assoc;
      }
    }
  }
  out.push_back(count_report("associativity", assoc));

  long long ident = 0;
  std::vector<int> ids(nobj, -1);
  for (int a = 0; a < nobj; ++a) {
    ids[a] = g.identity_on(a);
    if (ids[a] < 0) ++ident;
  }
  out.push_back(count_report("identity", ident));

  long long inv = 0;
  if (ident == 0) {
    for (int f = 0; f < n; ++f) {
      const int fi = g.inverse[f];
      if (g.morphisms[fi].dom != g.morphisms[f].cod ||
          g.morphisms[fi].cod != g.morphisms[f].dom ||
          g.compose_at(fi, f) != ids[g.morphisms[f].dom] ||
          g.compose_at(f, fi) != ids[g.morphisms[f].cod]) {
        ++inv;
      }
    }
  } else {
    inv = n;  // no identities to compare against
  }
  out.push_back(count_report("inverse", inv));
  return out;
}

namespace {

void require_valid(const FiniteGroupoid& g) {
  if (!all_pass(validate_groupoid(g))) {
    throw InvalidGroupoid("groupoid axioms fail");
  }
}

FrobMonoid groupoid_monoid(const FiniteGroupoid& g, Backend backend) {
  require_valid(g);
  const int n = g.size();
  Mor mult(backend, n, n * n);
  for (int f = 0; f < n; ++f) {
    for (int gg = 0; gg < n; ++gg) {
      const int h = g.compose_at(f, gg);
      if (h >= 0) mult.set(h, f * n + gg, cplx(1.0));
    }
  }
  Mor unit(backend, n, 1);
  for (int a = 0; a < static_cast<int>(g.objects.size()); ++a) {
    unit.set(g.identity_on(a), 0, cplx(1.0));
  }
  return FrobMonoid(backend, n, mult, unit);
}

}  // namespace

FrobMonoid groupoid_to_frobenius_rel(const FiniteGroupoid& g) {
  return groupoid_monoid(g, Backend::Rel);
}

FrobMonoid groupoid_to_frobenius_fhilb(const FiniteGroupoid& g) {
  return groupoid_monoid(g, Backend::FHilb);
}

FiniteGroupoid rel_frobenius_to_groupoid(const FrobMonoid& m) {
  if (m.backend != Backend::Rel) {
    throw NotGroupoidForm("extraction is defined for the Rel backend only");
  }
  const int n = m.n;
  auto mult_has = [&](int out, int f, int g) {
    return m.mult.rel_at(out, f * n + g);
  };

  // (a) unit elements become objects.
  std::vector<int> units;
  std::vector<int> object_of(n, -1);  // element -> object index, for units
  for (int x = 0; x < n; ++x) {
    if (m.unit.rel_at(x, 0)) {
      object_of[x] = static_cast<int>(units.size());
      units.push_back(x);
    }
  }
  if (units.empty()) throw NotGroupoidForm("unit relation is empty");

  auto unique_unit = [&](auto&& pred, const char* what) {
    int found = -1;
    for (int e : units) {
      if (pred(e)) {
        if (found >= 0) {
          throw NotGroupoidForm(std::string("multiple candidates for ") +
                                what);
        }
        found = e;
      }
    }
    if (found < 0) {
      throw NotGroupoidForm(std::string("no candidate for ") + what);
    }
    return found;
  };

  // (b) dom/cod per element via the unit elements absorbed on each side.
  std::vector<int> dom_unit(n), cod_unit(n);
  for (int x = 0; x < n; ++x) {
    dom_unit[x] = unique_unit(
        [&](int e) { return mult_has(x, x, e); }, "dom(x)");
    cod_unit[x] = unique_unit(
        [&](int e) { return mult_has(x, e, x); }, "cod(x)");
  }

  FiniteGroupoid g;
  for (int e : units) g.objects.push_back("u" + std::to_string(e));
  g.morphisms.resize(n);
  for (int x = 0; x < n; ++x) {
    g.morphisms[x] = GroupoidMor{"m" + std::to_string(x),
                                 object_of[dom_unit[x]],
                                 object_of[cod_unit[x]]};
  }

  // (c) composition must be single-valued on composable pairs.
  g.compose.assign(n, std::vector<int>(n, -1));
  for (int f = 0; f < n; ++f) {
    for (int gg = 0; gg < n; ++gg) {
      if (cod_unit[gg] != dom_unit[f]) continue;
      int found = -1;
      for (int h = 0; h < n; ++h) {
        if (mult_has(h, f, gg)) {
          if (found >= 0) {
            throw NotGroupoidForm("composition is not single-valued");
          }
          found = h;
        }
      }
      if (found < 0) {
        throw NotGroupoidForm("composable pair has no composite");
      }
      g.compose[f][gg] = found;
    }
  }

  // (d) inverses: the unique y with compose(y, x) = id on dom(x).
  g.inverse.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    int found = -1;
    for (int y = 0; y < n; ++y) {
      if (dom_unit[y] != cod_unit[x] || cod_unit[y] != dom_unit[x]) continue;
      if (g.compose[y][x] == dom_unit[x]) {
        if (found >= 0) throw NotGroupoidForm("inverse is not unique");
        found = y;
      }
    }
    if (found < 0) throw NotGroupoidForm("element has no inverse");
    g.inverse[x] = found;
  }

  if (!all_pass(validate_groupoid(g))) {
    throw NotGroupoidForm("extracted tables do not satisfy groupoid axioms");
  }
  // The rebuilt monoid must reproduce the input exactly, or the input
  // carried relations not explained by any groupoid.
  const FrobMonoid rebuilt = groupoid_to_frobenius_rel(g);
  if (!approx_eq(rebuilt.mult, m.mult, Tolerance{}).pass ||
      !approx_eq(rebuilt.unit, m.unit, Tolerance{}).pass) {
    throw NotGroupoidForm("monoid is not the algebra of any groupoid");
  }
  return g;
}

namespace {

struct IsoSearch {
  const FiniteGroupoid& g;
  const FiniteGroupoid& h;
  std::vector<int> obj_map;          // g object -> h object
  std::vector<int> mor_map;          // g morphism -> h morphism (-1 unset)
  std::vector<bool> used;            // h morphism already taken

  bool compatible(int f, int image) const {
    const auto& mf = g.morphisms[f];
    const auto& mi = h.morphisms[image];
    if (obj_map[mf.dom] != mi.dom || obj_map[mf.cod] != mi.cod) return false;
    // compose consistency against everything already assigned
    for (int other = 0; other < g.size(); ++other) {
      const int io = mor_map[other];
      if (io < 0) continue;
      const int fo = g.compose_at(f, other);
      const int hfo = h.compose_at(image, io);
      if ((fo < 0) != (hfo < 0)) return false;
      if (fo >= 0 && mor_map[fo] >= 0 && mor_map[fo] != hfo) return false;
      const int of = g.compose_at(other, f);
      const int hof = h.compose_at(io, image);
      if ((of < 0) != (hof < 0)) return false;
      if (of >= 0 && mor_map[of] >= 0 && mor_map[of] != hof) return false;
    }
    const int ff = g.compose_at(f, f);
    const int hff = h.compose_at(image, image);
    if ((ff < 0) != (hff < 0)) return false;
    if (ff >= 0 && mor_map[ff] >= 0 && mor_map[ff] != hff) return false;
    return true;
  }

  bool assign(int f) {
    if (f == g.size()) return true;
    for (int image = 0; image < h.size(); ++image) {
      if (used[image] || !compatible(f, image)) continue;
      mor_map[f] = image;
      used[image] = true;
      if (assign(f + 1)) return true;
      mor_map[f] = -1;
      used[image] = false;
    }
    return false;
  }
};

}  // namespace

bool groupoid_isomorphic(const FiniteGroupoid& g, const FiniteGroupoid& h,
                         int max_morphisms) {
  if (g.size() > max_morphisms || h.size() > max_morphisms) {
    throw TooLarge("isomorphism search bound exceeded");
  }
  if (g.objects.size() != h.objects.size() || g.size() != h.size()) {
    return false;
  }
  const int nobj = static_cast<int>(g.objects.size());

  // Degree profile per object: counts of morphisms per (out, in, endo).
  auto profile = [](const FiniteGroupoid& k, int obj) {
    int out = 0, in = 0, endo = 0;
    for (const auto& m : k.morphisms) {
      if (m.dom == obj) ++out;
      if (m.cod == obj) ++in;
      if (m.dom == obj && m.cod == obj) ++endo;
    }
    return std::array<int, 3>{out, in, endo};
  };

  std::vector<int> perm(nobj);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool degrees_ok = true;
    for (int a = 0; a < nobj && degrees_ok; ++a) {
      if (profile(g, a) != profile(h, perm[a])) degrees_ok = false;
    }
    if (!degrees_ok) continue;
    IsoSearch s{g, h, perm, std::vector<int>(g.size(), -1),
                std::vector<bool>(g.size(), false)};
    if (s.assign(0)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool groupoid_commutative(const FiniteGroupoid& g) {
  for (int f = 0; f < g.size(); ++f) {
    for (int k = 0; k < g.size(); ++k) {
      const int fk = g.compose_at(f, k);
      const int kf = g.compose_at(k, f);
      if ((fk < 0) != (kf < 0)) return false;
      if (fk >= 0 && fk != kf) return false;
    }
  }
  return true;
}

}  // namespace daggerlab
