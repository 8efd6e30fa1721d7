#pragma once

#include <string>

#include <json.hpp>

#include "cdk/homtool.hpp"
#include "cdk/structure.hpp"
#include "cdk/zdiv.hpp"

namespace cdk {

using Json = nlohmann::json;

// {"level": n, "coeffs": ["p/q", ...]} with exactly 2^n entries.
Json element_to_json(const Element& x);
Element element_from_json(const Json& j);

// {"m": m, "n": n, "matrix": [[...], ...]} column-major by source basis index.
Json monomorphism_to_json(const Monomorphism& map);
Monomorphism monomorphism_from_json(const Json& j);

Json classification_to_json(const MonoType& t);

Json subalgebra_to_json(const Subalgebra& sub);

// One JSON-lines record for the zero-divisor atlas.
Json pair_to_json(const ZeroDivisorPair& p, std::size_t ann_dim);

// CSV helpers for the structure table: "i,j,sign,k" rows in lexicographic
// (i,j) order, or a human-readable grid with entries like "-e3".
std::string table_to_csv(const StructureTable& t);
std::string table_to_grid(const StructureTable& t);

}  // namespace cdk
