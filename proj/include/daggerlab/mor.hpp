#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace daggerlab {

/// The two concrete models: finite-dimensional complex matrices and
/// finite boolean relations.
enum class Backend { FHilb, Rel };

std::string to_string(Backend b);

using cplx = std::complex<double>;

/// Absolute entrywise tolerance for FHilb comparisons. Rel comparisons
/// are exact and ignore it.
struct Tolerance {
  double eps = 1e-9;
};

/// Outcome of one law check. For FHilb the residual is the maximum
/// absolute entrywise difference; for Rel it is the number of
/// mismatched entries and pass requires exactly zero.
struct LawReport {
  std::string law;
  double residual = 0.0;
  bool pass = false;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};
class BackendMismatch : public Error {
 public:
  using Error::Error;
};
class NotInverse : public Error {
 public:
  using Error::Error;
};
class InvalidGroupoid : public Error {
 public:
  using Error::Error;
};
class NotGroupoidForm : public Error {
 public:
  using Error::Error;
};
class TooLarge : public Error {
 public:
  using Error::Error;
};
class NotUnitary : public Error {
 public:
  using Error::Error;
};
class NotFEM : public Error {
 public:
  using Error::Error;
};
class NotFrobenius : public Error {
 public:
  using Error::Error;
};
class NotCommutative : public Error {
 public:
  using Error::Error;
};
class NotUnitaryRep : public Error {
 public:
  using Error::Error;
};
class TrivialGroup : public Error {
 public:
  using Error::Error;
};
class ParseError : public Error {
 public:
  using Error::Error;
};
class SchemaError : public Error {
 public:
  using Error::Error;
};
class BadParams : public Error {
 public:
  using Error::Error;
};

/// A morphism between finite-dimensional objects: a cod x dom matrix
/// over the backend's scalars, acting on column vectors. Rel entries
/// are kept at exactly 0 or 1; composition there is OR-of-ANDs.
class Mor {
 public:
  Mor(Backend b, int cod, int dom);

  static Mor identity(Backend b, int n);
  static Mor zero(Backend b, int cod, int dom);
  static Mor from_rows(Backend b,
                       const std::vector<std::vector<cplx>>& rows);
  /// Permutation A (x) B -> B (x) A on flattened indices: i*n+j -> j*m+i.
  static Mor swap(Backend b, int m, int n);

  Backend backend() const { return backend_; }
  int dom() const { return dom_; }
  int cod() const { return cod_; }

  cplx at(int r, int c) const { return entries_[idx(r, c)]; }
  void set(int r, int c, cplx v);
  bool rel_at(int r, int c) const { return entries_[idx(r, c)] != 0.0; }

  std::span<const cplx> data() const { return entries_; }

 private:
  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(dom_) +
           static_cast<std::size_t>(c);
  }

  Backend backend_;
  int dom_;
  int cod_;
  std::vector<cplx> entries_;

  friend Mor compose(const Mor& g, const Mor& f);
  friend Mor tensor(const Mor& f, const Mor& g);
  friend Mor dagger(const Mor& f);
  friend Mor transpose(const Mor& f);
  friend Mor conjugate(const Mor& f);
  friend Mor scale(cplx s, const Mor& f);
  friend Mor add(const Mor& f, const Mor& g);
};

Mor compose(const Mor& g, const Mor& f);
Mor dagger(const Mor& f);
Mor tensor(const Mor& f, const Mor& g);
Mor transpose(const Mor& f);
Mor conjugate(const Mor& f);
/// FHilb only.
Mor scale(cplx s, const Mor& f);
/// Entrywise sum; boolean OR for Rel.
Mor add(const Mor& f, const Mor& g);

inline Mor operator*(const Mor& g, const Mor& f) { return compose(g, f); }

/// Residual between two parallel morphisms, packaged as a report.
LawReport approx_eq(const Mor& f, const Mor& g, Tolerance tol);

/// approx_eq with an explicit law name.
LawReport law_eq(std::string law, const Mor& lhs, const Mor& rhs,
                 Tolerance tol);

bool all_pass(const std::vector<LawReport>& reports);

}  // namespace daggerlab
