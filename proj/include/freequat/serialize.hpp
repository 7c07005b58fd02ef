// Lossless JSON serialization for certificates, reports, and documents.
// Every number travels as an exact rational/quadratic string such as
// "3/2+1/2*sqrt(7)" — never a float — so a parsed document reconstructs
// the original values bit for bit, and re-serializing a parsed document
// reproduces the same text (keys keep their insertion order).

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "freequat/arcs.hpp"
#include "freequat/mobius.hpp"
#include "freequat/numbers.hpp"
#include "freequat/oracle.hpp"
#include "freequat/pingpong.hpp"
#include "freequat/semigroup.hpp"

namespace freequat {

// Insertion-ordered JSON so dumped documents are canonical.
using Json = nlohmann::ordered_json;

// --- Exact number strings ----------------------------------------------

// Inverse of to_string(Rational): "n", "-n", "n/m".  Throws InputError
// on anything else.
Rational parse_rational(const std::string& text);

// Inverse of to_string(QuadElem): "0", "a", "c*sqrt(d)", "a+c*sqrt(d)",
// "a-sqrt(d)", ... with a, c rational strings and the coefficient
// omitted when its absolute value is 1.  The sqrt argument must equal
// d.value (InputError otherwise).
QuadElem parse_quad(const std::string& text, SquareFreeD d);

// Inverse of to_string(ExtPoint): "inf" or a QuadElem string.
ExtPoint parse_point(const std::string& text, SquareFreeD d);

// --- Arcs ----------------------------------------------------------------

// "empty" | "full" | {lo, hi, lo_closed, hi_closed}.
Json arc_to_json(const Arc& a);
Arc arc_from_json(const Json& j, SquareFreeD d);

// Array of arc values (empty array = empty set).
Json arcset_to_json(const ArcSet& s);
ArcSet arcset_from_json(const Json& j, SquareFreeD d);

// --- Certificate payloads ------------------------------------------------

// {name, unit, power, map:{m11,m12,m21,m22}}; unit is null for
// generators that do not come from a quaternion unit.
Json generator_to_json(const GeneratorDesc& g);
Json generators_to_json(const std::vector<GeneratorDesc>& gens);

// {slots: [{plus: [...], minus: [...]} ...]}.
Json table_to_json(const PingPongTable& table);
PingPongTable table_from_json(const Json& j, SquareFreeD d);

// {generators, table, conditions: [{id, description, lhs_arc, rhs_arc,
// verdict, boundary_only, witness?}], verdict}.
Json certificate_to_json(const Certificate& cert);

// {generators, invariant_set, base_point, conditions: [{id, description,
// lhs_arc: null, rhs_arc: null, verdict, witness?}], verdict}.
Json semigroup_certificate_to_json(const SemigroupCertificate& cert);

// Same condition shape over {generators, set1, set2, conditions,
// verdict}.
Json positive_certificate_to_json(const PositiveCertificate& cert);

// --- Oracle reports --------------------------------------------------------

Json group_report_to_json(const GroupWordReport& report);
Json semigroup_report_to_json(const SemigroupWordReport& report);

// --- Documents -------------------------------------------------------------

// {schema_version: 1, command, inputs, certificate, oracle, timing_ms}.
// `certificate` and `oracle` may be null when a command produces none.
Json make_document(const std::string& command, Json inputs,
                   Json certificate, Json oracle, std::int64_t timing_ms);

// Two-space indentation and a trailing newline.
std::string dump_document(const Json& doc);

// Parse JSON text (InputError on malformed input).  Key order is
// preserved, so dump_document(parse_document(s)) == s for any s that
// dump_document produced.
Json parse_document(const std::string& text);

}  // namespace freequat
