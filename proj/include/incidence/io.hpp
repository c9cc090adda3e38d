#pragma once

// JSON documents for posets, functions, linear maps, systems and
// decomposition reports. Keys are emitted sorted and scalars as strings, so
// equal values always serialize to identical bytes.

#include <optional>
#include <string>

#include "json.hpp"

#include "incidence/automorphisms.hpp"
#include "incidence/derivations.hpp"

namespace incidence::io {

using Json = nlohmann::json;

/// Throws ParseError when the file cannot be read or is not valid JSON.
Json read_json_file(const std::string& path);
/// Writes dump(doc) to `path`; throws ParseError on I/O failure.
void write_json_file(const std::string& path, const Json& doc);
/// Two-space indented text with a trailing newline.
std::string dump(const Json& doc);

/// {"elements": [...], "covers": [[x, y], ...]} with the cover pairs of the order.
Json poset_to_json(const Poset& poset);
/// An inline poset object or a generator spec string such as "chain:3".
PosetPtr poset_from_json(const Json& doc);

/// The "field" key of a document, or `fallback` when absent.
FieldSpec field_of(const Json& doc, const FieldSpec& fallback);

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const FieldSpec& field);

/// [["x", "y", "c"], ...] over the nonzero entries.
Json entries_to_json(const IncidenceFunction& f);
IncidenceFunction entries_from_json(const Json& j, const PosetPtr& poset, const FieldSpec& field);

/// {"poset", "field", "entries"}.
Json function_to_json(const IncidenceFunction& f);
IncidenceFunction function_from_json(const Json& doc, const FieldSpec& fallback = {});

/// {"poset", "field", "images": {"[x,y]": [{"interval": [s, t], "coeff": c}, ...]}}.
Json coalgebra_map_to_json(const CoalgebraEndomap& phi);
CoalgebraEndomap coalgebra_map_from_json(const Json& doc, const FieldSpec& fallback = {});

/// {"poset", "field", "images": {"(x,y)": [["s", "t", "c"], ...]}}.
Json algebra_map_to_json(const AlgebraEndomap& psi);
AlgebraEndomap algebra_map_from_json(const Json& doc, const FieldSpec& fallback = {});

/// {"values": [["x", "y", "c"], ...]} over every strict pair.
Json mult_system_to_json(const MultiplicativeSystem& sys);
MultiplicativeSystem mult_system_from_json(const Json& j, const PosetPtr& poset,
                                           const FieldSpec& field);
Json additive_system_to_json(const AdditiveSystem& sys);
AdditiveSystem additive_system_from_json(const Json& j, const PosetPtr& poset,
                                         const FieldSpec& field);

/// {"map": {"x": "tau x", ...}}.
Json order_to_json(const Poset& poset, const PosetAutomorphism& tau);
PosetAutomorphism order_from_json(const Json& j, const Poset& poset);

/// {"poset", "field", "inner_unit": {"entries"}, "mult_system": {"values"}, "order": {"map"}}.
Json aut_report_to_json(const AutDecomposition& parts);
AutDecomposition aut_report_from_json(const Json& doc, const FieldSpec& fallback = {});

/// {"poset", "field", "inner_part": {"entries"}, "additive_system": {"values"}}.
Json der_report_to_json(const DerDecomposition& parts);
DerDecomposition der_report_from_json(const Json& doc, const FieldSpec& fallback = {});

}  // namespace incidence::io
