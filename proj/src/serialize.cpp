#include "daggerlab/serialize.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace daggerlab {

namespace {

Backend backend_from_json(const json& j) {
  if (!j.contains("backend") || !j["backend"].is_string()) {
    throw SchemaError("missing or non-string \"backend\" field");
  }
  const std::string b = j["backend"].get<std::string>();
  if (b == "fhilb") return Backend::FHilb;
  if (b == "rel") return Backend::Rel;
  throw SchemaError("unknown backend \"" + b + "\"");
}

const json& require(const json& j, const char* field) {
  if (!j.contains(field)) {
    throw SchemaError(std::string("missing field \"") + field + "\"");
  }
  return j[field];
}

int require_dim(const json& j, const char* field) {
  const json& v = require(j, field);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw SchemaError(std::string("field \"") + field +
                      "\" must be a positive integer");
  }
  return v.get<int>();
}

cplx entry_from_json(const json& e, Backend b) {
  if (b == Backend::Rel) {
    if (!e.is_number_integer()) {
      throw SchemaError("Rel entries must be 0/1 integers");
    }
    const long long v = e.get<long long>();
    if (v != 0 && v != 1) {
      throw SchemaError("Rel entries must be 0/1 integers");
    }
    return cplx(static_cast<double>(v));
  }
  if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
      !e[1].is_number()) {
    throw SchemaError("FHilb entries must be [re, im] pairs");
  }
  return cplx(e[0].get<double>(), e[1].get<double>());
}

}  // namespace

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

StructureKind kind_of(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw SchemaError("missing or non-string \"kind\" field");
  }
  const std::string k = j["kind"].get<std::string>();
  if (k == "monoid") return StructureKind::Monoid;
  if (k == "groupoid") return StructureKind::Groupoid;
  if (k == "em_algebra") return StructureKind::EmAlgebra;
  if (k == "kleisli_morphism") return StructureKind::KleisliMorphism;
  throw SchemaError("unknown kind \"" + k + "\"");
}

json mor_to_json(const Mor& m) {
  json rows = json::array();
  for (int r = 0; r < m.cod(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.dom(); ++c) {
      if (m.backend() == Backend::Rel) {
        row.push_back(m.rel_at(r, c) ? 1 : 0);
      } else {
        const cplx v = m.at(r, c);
        row.push_back(json::array({v.real(), v.imag()}));
      }
    }
    rows.push_back(std::move(row));
  }
  json out;
  out["dom"] = m.dom();
  out["cod"] = m.cod();
  out["entries"] = std::move(rows);
  return out;
}

Mor mor_from_json(const json& j, Backend b) {
  const int dom = require_dim(j, "dom");
  const int cod = require_dim(j, "cod");
  const json& rows = require(j, "entries");
  if (!rows.is_array() || static_cast<int>(rows.size()) != cod) {
    throw SchemaError("entries must have exactly cod rows");
  }
  Mor m(b, cod, dom);
  for (int r = 0; r < cod; ++r) {
    const json& row = rows[r];
    if (!row.is_array() || static_cast<int>(row.size()) != dom) {
      throw SchemaError("entries row has the wrong length");
    }
    for (int c = 0; c < dom; ++c) m.set(r, c, entry_from_json(row[c], b));
  }
  return m;
}

json monoid_to_json(const FrobMonoid& m) {
  json out;
  out["kind"] = "monoid";
  out["backend"] = to_string(m.backend);
  out["dim"] = m.n;
  out["mult"] = mor_to_json(m.mult);
  out["unit"] = mor_to_json(m.unit);
  return out;
}

FrobMonoid monoid_from_json(const json& j) {
  const Backend b = backend_from_json(j);
  const int n = require_dim(j, "dim");
  try {
    return FrobMonoid(b, n, mor_from_json(require(j, "mult"), b),
                      mor_from_json(require(j, "unit"), b));
  } catch (const DimensionMismatch& e) {
    throw SchemaError(std::string("inconsistent dimensions: ") + e.what());
  }
}

json groupoid_to_json(const FiniteGroupoid& g) {
  json out;
  out["kind"] = "groupoid";
  out["objects"] = g.objects;
  json mors = json::array();
  for (const auto& m : g.morphisms) {
    json jm;
    jm["name"] = m.name;
    jm["dom"] = g.objects[m.dom];
    jm["cod"] = g.objects[m.cod];
    mors.push_back(std::move(jm));
  }
  out["morphisms"] = std::move(mors);
  json comp = json::array();
  for (int f = 0; f < g.size(); ++f) {
    for (int k = 0; k < g.size(); ++k) {
      const int h = g.compose_at(f, k);
      if (h >= 0) {
        comp.push_back(json::array({g.morphisms[f].name, g.morphisms[k].name,
                                    g.morphisms[h].name}));
      }
    }
  }
  out["compose"] = std::move(comp);
  json inv;
  for (int f = 0; f < g.size(); ++f) {
    inv[g.morphisms[f].name] = g.morphisms[g.inverse[f]].name;
  }
  out["inverse"] = std::move(inv);
  return out;
}

FiniteGroupoid groupoid_from_json(const json& j) {
  FiniteGroupoid g;
  const json& objects = require(j, "objects");
  if (!objects.is_array()) throw SchemaError("objects must be an array");
  std::map<std::string, int> obj_index;
  for (const auto& o : objects) {
    if (!o.is_string()) throw SchemaError("object labels must be strings");
    const std::string label = o.get<std::string>();
    if (obj_index.count(label)) {
      throw SchemaError("duplicate object label \"" + label + "\"");
    }
    obj_index[label] = static_cast<int>(g.objects.size());
    g.objects.push_back(label);
  }
  const json& mors = require(j, "morphisms");
  if (!mors.is_array()) throw SchemaError("morphisms must be an array");
  std::map<std::string, int> mor_index;
  for (const auto& m : mors) {
    if (!m.is_object()) throw SchemaError("morphisms must be objects");
    const json& name = require(m, "name");
    const json& dom = require(m, "dom");
    const json& cod = require(m, "cod");
    if (!name.is_string() || !dom.is_string() || !cod.is_string()) {
      throw SchemaError("morphism fields must be strings");
    }
    if (!obj_index.count(dom.get<std::string>()) ||
        !obj_index.count(cod.get<std::string>())) {
      throw SchemaError("morphism references an unknown object");
    }
    if (mor_index.count(name.get<std::string>())) {
      throw SchemaError("duplicate morphism name");
    }
    mor_index[name.get<std::string>()] =
        static_cast<int>(g.morphisms.size());
    g.morphisms.push_back(GroupoidMor{name.get<std::string>(),
                                      obj_index[dom.get<std::string>()],
                                      obj_index[cod.get<std::string>()]});
  }
  const int n = g.size();
  auto lookup = [&](const json& name) {
    if (!name.is_string() || !mor_index.count(name.get<std::string>())) {
      throw SchemaError("reference to unknown morphism");
    }
    return mor_index[name.get<std::string>()];
  };
  g.compose.assign(n, std::vector<int>(n, -1));
  const json& comp = require(j, "compose");
  if (!comp.is_array()) throw SchemaError("compose must be an array");
  for (const auto& entry : comp) {
    if (!entry.is_array() || entry.size() != 3) {
      throw SchemaError("compose entries must be [f, g, result] triples");
    }
    const int f = lookup(entry[0]);
    const int k = lookup(entry[1]);
    if (g.compose[f][k] >= 0) {
      throw SchemaError("duplicate compose entry");
    }
    g.compose[f][k] = lookup(entry[2]);
  }
  g.inverse.assign(n, -1);
  const json& inv = require(j, "inverse");
  if (!inv.is_object()) throw SchemaError("inverse must be an object");
  for (auto it = inv.begin(); it != inv.end(); ++it) {
    if (!mor_index.count(it.key())) {
      throw SchemaError("inverse references an unknown morphism");
    }
    g.inverse[mor_index[it.key()]] = lookup(it.value());
  }
  for (int f = 0; f < n; ++f) {
    if (g.inverse[f] < 0) {
      throw SchemaError("inverse table is not total");
    }
  }
  return g;
}

json em_algebra_to_json(const EMAlgebra& a) {
  json out;
  out["kind"] = "em_algebra";
  out["backend"] = to_string(a.monad.backend());
  json mon;
  mon["dim"] = a.monad.n();
  mon["mult"] = mor_to_json(a.monad.monoid().mult);
  mon["unit"] = mor_to_json(a.monad.monoid().unit);
  out["monoid"] = std::move(mon);
  out["carrier"] = a.carrier;
  out["action"] = mor_to_json(a.action);
  return out;
}

EMAlgebra em_algebra_from_json(const json& j, Tolerance tol) {
  const Backend b = backend_from_json(j);
  const json& mon = require(j, "monoid");
  const int n = require_dim(mon, "dim");
  const int carrier = require_dim(j, "carrier");
  try {
    FrobMonoid monoid(b, n, mor_from_json(require(mon, "mult"), b),
                      mor_from_json(require(mon, "unit"), b));
    return EMAlgebra(TensorMonad(std::move(monoid), tol), carrier,
                     mor_from_json(require(j, "action"), b));
  } catch (const DimensionMismatch& e) {
    throw SchemaError(std::string("inconsistent dimensions: ") + e.what());
  }
}

json kleisli_to_json(const KleisliMor& f) {
  json out;
  out["kind"] = "kleisli_morphism";
  out["backend"] = to_string(f.monad.backend());
  json mon;
  mon["dim"] = f.monad.n();
  mon["mult"] = mor_to_json(f.monad.monoid().mult);
  mon["unit"] = mor_to_json(f.monad.monoid().unit);
  out["monoid"] = std::move(mon);
  out["dom"] = f.dom;
  out["cod"] = f.cod;
  out["body"] = mor_to_json(f.body);
  return out;
}

KleisliMor kleisli_from_json(const json& j, Tolerance tol) {
  const Backend b = backend_from_json(j);
  const json& mon = require(j, "monoid");
  const int n = require_dim(mon, "dim");
  const int dom = require_dim(j, "dom");
  const int cod = require_dim(j, "cod");
  try {
    FrobMonoid monoid(b, n, mor_from_json(require(mon, "mult"), b),
                      mor_from_json(require(mon, "unit"), b));
    return KleisliMor(TensorMonad(std::move(monoid), tol), dom, cod,
                      mor_from_json(require(j, "body"), b));
  } catch (const DimensionMismatch& e) {
    throw SchemaError(std::string("inconsistent dimensions: ") + e.what());
  }
}

}  // namespace daggerlab
