#include "daggerlab/mor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace daggerlab {

std::string to_string(Backend b) {
  return b == Backend::FHilb ? "fhilb" : "rel";
}

namespace {

void require_same_backend(const Mor& f, const Mor& g) {
  if (f.backend() != g.backend()) {
    throw BackendMismatch("backend mismatch: " + to_string(f.backend()) +
                          " vs " + to_string(g.backend()));
  }
}

bool is_bool01(cplx v) { return v == cplx(0.0) || v == cplx(1.0); }

}  // namespace

Mor::Mor(Backend b, int cod, int dom) : backend_(b), dom_(dom), cod_(cod) {
  if (dom < 0 || cod < 0) {
    throw DimensionMismatch("negative dimension");
  }
  entries_.assign(static_cast<std::size_t>(dom) * static_cast<std::size_t>(cod),
                  cplx(0.0));
}

Mor Mor::identity(Backend b, int n) {
  Mor m(b, n, n);
  for (int i = 0; i < n; ++i) m.entries_[m.idx(i, i)] = cplx(1.0);
  return m;
}

Mor Mor::zero(Backend b, int cod, int dom) { return Mor(b, cod, dom); }

Mor Mor::from_rows(Backend b, const std::vector<std::vector<cplx>>& rows) {
  const int cod = static_cast<int>(rows.size());
  const int dom = cod == 0 ? 0 : static_cast<int>(rows[0].size());
  Mor m(b, cod, dom);
  for (int r = 0; r < cod; ++r) {
    if (static_cast<int>(rows[r].size()) != dom) {
      throw DimensionMismatch("ragged rows");
    }
    for (int c = 0; c < dom; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Mor Mor::swap(Backend b, int m, int n) {
  Mor s(b, m * n, m * n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      s.entries_[s.idx(j * m + i, i * n + j)] = cplx(1.0);
    }
  }
  return s;
}

void Mor::set(int r, int c, cplx v) {
  if (r < 0 || r >= cod_ || c < 0 || c >= dom_) {
    throw DimensionMismatch("entry index out of range");
  }
  if (backend_ == Backend::Rel && !is_bool01(v)) {
    throw BackendMismatch("Rel entries must be 0 or 1");
  }
  entries_[idx(r, c)] = v;
}

Mor compose(const Mor& g, const Mor& f) {
  require_same_backend(g, f);
  if (g.dom() != f.cod()) {
    throw DimensionMismatch("compose: dom(g)=" + std::to_string(g.dom()) +
                            " != cod(f)=" + std::to_string(f.cod()));
  }
  Mor out(g.backend(), g.cod(), f.dom());
  const int inner = g.dom();
  const int cols = f.dom();
  // ikj order: accumulate rows of f into rows of out.
  for (int r = 0; r < g.cod(); ++r) {
    cplx* orow = out.entries_.data() + out.idx(r, 0);
    for (int k = 0; k < inner; ++k) {
      const cplx gv = g.entries_[g.idx(r, k)];
      if (gv == cplx(0.0)) continue;
      const cplx* frow = f.entries_.data() + f.idx(k, 0);
      for (int c = 0; c < cols; ++c) orow[c] += gv * frow[c];
    }
  }
  if (out.backend() == Backend::Rel) {
    for (auto& v : out.entries_) v = (v == cplx(0.0)) ? cplx(0.0) : cplx(1.0);
  }
  return out;
}

Mor dagger(const Mor& f) {
  Mor out(f.backend(), f.dom(), f.cod());
  for (int r = 0; r < f.cod(); ++r) {
    for (int c = 0; c < f.dom(); ++c) {
      out.entries_[out.idx(c, r)] = std::conj(f.entries_[f.idx(r, c)]);
    }
  }
  return out;
}

Mor transpose(const Mor& f) {
  Mor out(f.backend(), f.dom(), f.cod());
  for (int r = 0; r < f.cod(); ++r) {
    for (int c = 0; c < f.dom(); ++c) {
      out.entries_[out.idx(c, r)] = f.entries_[f.idx(r, c)];
    }
  }
  return out;
}

Mor conjugate(const Mor& f) {
  Mor out = f;
  for (auto& v : out.entries_) v = std::conj(v);
  return out;
}

Mor tensor(const Mor& f, const Mor& g) {
  require_same_backend(f, g);
  Mor out(f.backend(), f.cod() * g.cod(), f.dom() * g.dom());
  for (int r1 = 0; r1 < f.cod(); ++r1) {
    for (int c1 = 0; c1 < f.dom(); ++c1) {
      const cplx fv = f.entries_[f.idx(r1, c1)];
      if (fv == cplx(0.0)) continue;
      for (int r2 = 0; r2 < g.cod(); ++r2) {
        const int orow = r1 * g.cod() + r2;
        for (int c2 = 0; c2 < g.dom(); ++c2) {
          out.entries_[out.idx(orow, c1 * g.dom() + c2)] =
              fv * g.entries_[g.idx(r2, c2)];
        }
      }
    }
  }
  return out;
}

Mor scale(cplx s, const Mor& f) {
  if (f.backend() == Backend::Rel) {
    throw BackendMismatch("scale is only defined for FHilb");
  }
  Mor out = f;
  for (auto& v : out.entries_) v *= s;
  return out;
}

Mor add(const Mor& f, const Mor& g) {
  require_same_backend(f, g);
  if (f.dom() != g.dom() || f.cod() != g.cod()) {
    throw DimensionMismatch("add: shapes disagree");
  }
  Mor out = f;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) {
    out.entries_[i] += g.entries_[i];
  }
  if (out.backend() == Backend::Rel) {
    for (auto& v : out.entries_) v = (v == cplx(0.0)) ? cplx(0.0) : cplx(1.0);
  }
  return out;
}

LawReport approx_eq(const Mor& f, const Mor& g, Tolerance tol) {
  require_same_backend(f, g);
  if (f.dom() != g.dom() || f.cod() != g.cod()) {
    throw DimensionMismatch("approx_eq: shapes disagree");
  }
  LawReport rep;
  rep.law = "approx_eq";
  if (f.backend() == Backend::Rel) {
    long long mismatches = 0;
    for (int r = 0; r < f.cod(); ++r) {
      for (int c = 0; c < f.dom(); ++c) {
        if (f.rel_at(r, c) != g.rel_at(r, c)) ++mismatches;
      }
    }
    rep.residual = static_cast<double>(mismatches);
    rep.pass = mismatches == 0;
  } else {
    double worst = 0.0;
    for (int r = 0; r < f.cod(); ++r) {
      for (int c = 0; c < f.dom(); ++c) {
        worst = std::max(worst, std::abs(f.at(r, c) - g.at(r, c)));
      }
    }
    rep.residual = worst;
    rep.pass = worst <= tol.eps;
  }
  return rep;
}

LawReport law_eq(std::string law, const Mor& lhs, const Mor& rhs,
                 Tolerance tol) {
  LawReport rep = approx_eq(lhs, rhs, tol);
  rep.law = std::move(law);
  return rep;
}

bool all_pass(const std::vector<LawReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const LawReport& r) { return r.pass; });
}

}  // namespace daggerlab
