#pragma once

#include <string>

#include <json.hpp>

#include "daggerlab/algebra.hpp"
#include "daggerlab/frobenius.hpp"
#include "daggerlab/groupoid.hpp"
#include "daggerlab/mor.hpp"

namespace daggerlab {

// Field order is part of the canonical output, hence ordered_json. FHilb
// entries serialize as [re, im] pairs; Rel entries as 0/1 integers.
using json = nlohmann::ordered_json;

enum class StructureKind { Monoid, Groupoid, EmAlgebra, KleisliMorphism };

/// Parse text into JSON; malformed input raises ParseError.
json parse_json(const std::string& text);
/// Read and parse a file; missing file raises ParseError.
json load_json_file(const std::string& path);

/// The "kind" dispatch field; unknown or missing values raise SchemaError.
StructureKind kind_of(const json& j);

json mor_to_json(const Mor& m);
Mor mor_from_json(const json& j, Backend b);

json monoid_to_json(const FrobMonoid& m);
FrobMonoid monoid_from_json(const json& j);

json groupoid_to_json(const FiniteGroupoid& g);
FiniteGroupoid groupoid_from_json(const json& j);

json em_algebra_to_json(const EMAlgebra& a);
EMAlgebra em_algebra_from_json(const json& j, Tolerance tol = Tolerance{});

json kleisli_to_json(const KleisliMor& f);
KleisliMor kleisli_from_json(const json& j, Tolerance tol = Tolerance{});

}  // namespace daggerlab
