#include "freequat/serialize.hpp"

#include <regex>

#include "freequat/errors.hpp"

namespace freequat {

namespace {

Json point_to_json(const ExtPoint& p) { return to_string(p); }

Json condition_core(const std::string& id,
                    const std::string& description) {
    Json j;
    j["id"] = id;
    j["description"] = description;
    return j;
}

} // namespace

Rational parse_rational(const std::string& text) {
    static const std::regex grammar("-?[0-9]+(/[0-9]+)?");
    if (!std::regex_match(text, grammar))
        throw InputError("not an exact rational: \"" + text + "\"");
    Rational value;
    if (value.set_str(text, 10) != 0)
        throw InputError("not an exact rational: \"" + text + "\"");
    if (value.get_den() == 0)
        throw DivisionByZero("zero denominator in \"" + text + "\"");
    value.canonicalize();
    return value;
}

QuadElem parse_quad(const std::string& text, SquareFreeD d) {
    // Grammar produced by to_string: a plain rational, or
    // [rational sign][|coef|*]sqrt(n).  Scanned structurally rather than by
    // one regex: greedy matching cannot split "5/12*sqrt(15)" correctly.
    static const std::string marker = "sqrt(";
    const std::size_t at = text.find(marker);
    if (at == std::string::npos)
        return QuadElem::rational(parse_rational(text), d);

    if (text.back() != ')')
        throw InputError("not an exact quadratic: \"" + text + "\"");
    const std::string arg = text.substr(at + marker.size(),
                                        text.size() - at - marker.size() - 1);
    static const std::regex digits("[0-9]+");
    if (!std::regex_match(arg, digits))
        throw InputError("not an exact quadratic: \"" + text + "\"");
    unsigned long n = 0;
    try {
        n = std::stoul(arg);
    } catch (const std::exception&) {
        throw InputError("sqrt argument out of range in \"" + text + "\"");
    }
    if (n != d.value)
        throw InputError("quadratic \"" + text + "\" lives in sqrt(" + arg +
                         "), expected sqrt(" + std::to_string(d.value) + ")");

    const std::string prefix = text.substr(0, at);
    Rational a(0);
    Rational b(1);
    if (prefix.empty()) {
        // "sqrt(n)"
    } else if (prefix == "-") {
        b = -b;
    } else if (prefix.back() == '*') {
        // "[rational sign]|coef|*sqrt(n)"; the unsigned coefficient runs
        // back to the last sign, and anything before that sign is the
        // rational part (whose own leading '-' sits at index 0).
        const std::string head = prefix.substr(0, prefix.size() - 1);
        const std::size_t sep = head.find_last_of("+-");
        if (sep == std::string::npos || sep == 0) {
            b = parse_rational(head);
        } else {
            a = parse_rational(head.substr(0, sep));
            b = parse_rational(head.substr(sep + 1));
            if (head[sep] == '-') b = -b;
        }
    } else if (prefix.back() == '+' || prefix.back() == '-') {
        // "rational sign sqrt(n)" with an implicit coefficient of one.
        a = parse_rational(prefix.substr(0, prefix.size() - 1));
        if (prefix.back() == '-') b = -b;
    } else {
        throw InputError("not an exact quadratic: \"" + text + "\"");
    }
    return QuadElem(a, b, d);
}

ExtPoint parse_point(const std::string& text, SquareFreeD d) {
    if (text == "inf") return ExtPoint::infinity();
    return ExtPoint::finite(parse_quad(text, d));
}

Json arc_to_json(const Arc& a) {
    if (a.is_empty()) return "empty";
    if (a.is_full()) return "full";
    Json j;
    j["lo"] = to_string(a.lo());
    j["hi"] = to_string(a.hi());
    j["lo_closed"] = a.lo_closed();
    j["hi_closed"] = a.hi_closed();
    return j;
}

Arc arc_from_json(const Json& j, SquareFreeD d) {
    if (j.is_string()) {
        const std::string tag = j.get<std::string>();
        if (tag == "empty") return Arc::empty();
        if (tag == "full") return Arc::full();
        throw InputError("unknown arc tag: \"" + tag + "\"");
    }
    if (!j.is_object() || !j.contains("lo") || !j.contains("hi") ||
        !j.contains("lo_closed") || !j.contains("hi_closed") ||
        !j["lo"].is_string() || !j["hi"].is_string() ||
        !j["lo_closed"].is_boolean() || !j["hi_closed"].is_boolean())
        throw InputError(
            "an arc needs string lo, hi and boolean lo_closed, hi_closed");
    return Arc::span(parse_point(j["lo"].get<std::string>(), d),
                     parse_point(j["hi"].get<std::string>(), d),
                     j["lo_closed"].get<bool>(), j["hi_closed"].get<bool>());
}

Json arcset_to_json(const ArcSet& s) {
    Json j = Json::array();
    for (const Arc& a : s.arcs()) j.push_back(arc_to_json(a));
    return j;
}

ArcSet arcset_from_json(const Json& j, SquareFreeD d) {
    if (!j.is_array()) throw InputError("an arc set must be an array");
    std::vector<Arc> arcs;
    for (const Json& item : j) arcs.push_back(arc_from_json(item, d));
    return ArcSet(std::move(arcs));
}

Json generator_to_json(const GeneratorDesc& g) {
    Json j;
    j["name"] = g.name;
    j["unit"] = g.unit ? Json(to_string(*g.unit)) : Json(nullptr);
    j["power"] = g.power;
    Json map;
    map["m11"] = to_string(g.map.m11());
    map["m12"] = to_string(g.map.m12());
    map["m21"] = to_string(g.map.m21());
    map["m22"] = to_string(g.map.m22());
    j["map"] = std::move(map);
    return j;
}

Json generators_to_json(const std::vector<GeneratorDesc>& gens) {
    Json j = Json::array();
    for (const GeneratorDesc& g : gens) j.push_back(generator_to_json(g));
    return j;
}

Json table_to_json(const PingPongTable& table) {
    Json slots = Json::array();
    for (const TableSlot& slot : table.slots()) {
        Json s;
        s["plus"] = arcset_to_json(slot.plus);
        s["minus"] = arcset_to_json(slot.minus);
        slots.push_back(std::move(s));
    }
    Json j;
    j["slots"] = std::move(slots);
    return j;
}

PingPongTable table_from_json(const Json& j, SquareFreeD d) {
    if (!j.is_object() || !j.contains("slots") || !j["slots"].is_array())
        throw InputError("a table needs a slots array");
    std::vector<TableSlot> slots;
    for (const Json& s : j["slots"]) {
        if (!s.is_object() || !s.contains("plus") || !s.contains("minus"))
            throw InputError("each table slot needs plus and minus sets");
        slots.push_back(TableSlot{arcset_from_json(s["plus"], d),
                                  arcset_from_json(s["minus"], d)});
    }
    return PingPongTable(std::move(slots));
}

Json certificate_to_json(const Certificate& cert) {
    Json conditions = Json::array();
    for (const ConditionResult& c : cert.conditions) {
        Json j = condition_core(c.id, c.description);
        j["lhs_arc"] = arcset_to_json(c.lhs);
        j["rhs_arc"] = arcset_to_json(c.rhs);
        j["verdict"] = c.pass;
        j["boundary_only"] = c.boundary_only;
        if (c.witness) j["witness"] = point_to_json(*c.witness);
        conditions.push_back(std::move(j));
    }
    Json j;
    j["generators"] = generators_to_json(cert.generators);
    j["table"] = table_to_json(cert.table);
    j["conditions"] = std::move(conditions);
    j["verdict"] = cert.overall;
    return j;
}

namespace {

Json simple_conditions_to_json(const std::vector<SemigroupCondition>& conds) {
    Json conditions = Json::array();
    for (const SemigroupCondition& c : conds) {
        Json j = condition_core(c.id, c.description);
        j["lhs_arc"] = nullptr;
        j["rhs_arc"] = nullptr;
        j["verdict"] = c.pass;
        if (c.witness) j["witness"] = point_to_json(*c.witness);
        conditions.push_back(std::move(j));
    }
    return conditions;
}

} // namespace

Json semigroup_certificate_to_json(const SemigroupCertificate& cert) {
    Json j;
    j["generators"] = generators_to_json(cert.generators);
    j["invariant_set"] = arc_to_json(cert.invariant_set);
    j["base_point"] = point_to_json(cert.base_point);
    j["conditions"] = simple_conditions_to_json(cert.conditions);
    j["verdict"] = cert.overall;
    return j;
}

Json positive_certificate_to_json(const PositiveCertificate& cert) {
    Json j;
    j["generators"] = generators_to_json(cert.generators);
    j["set1"] = arc_to_json(cert.set1);
    j["set2"] = arc_to_json(cert.set2);
    j["conditions"] = simple_conditions_to_json(cert.conditions);
    j["verdict"] = cert.overall;
    return j;
}

Json group_report_to_json(const GroupWordReport& report) {
    Json j;
    j["kind"] = "group-words";
    j["max_length"] = report.max_length;
    j["words_checked"] = report.words_checked;
    j["degenerate"] = report.degenerate;
    if (report.degenerate) j["degenerate_reason"] = report.degenerate_reason;
    j["trivial_word"] =
        report.trivial_word ? Json(*report.trivial_word) : Json(nullptr);
    Json torsion = Json::array();
    for (const Word& w : report.torsion_words) torsion.push_back(w);
    j["torsion_words"] = std::move(torsion);
    return j;
}

Json semigroup_report_to_json(const SemigroupWordReport& report) {
    Json j;
    j["kind"] = "positive-words";
    j["max_length"] = report.max_length;
    j["words_checked"] = report.words_checked;
    if (report.collision) {
        Json pair;
        pair["first"] = report.collision->first;
        pair["second"] = report.collision->second;
        j["collision"] = std::move(pair);
    } else {
        j["collision"] = nullptr;
    }
    return j;
}

Json make_document(const std::string& command, Json inputs, Json certificate,
                   Json oracle, std::int64_t timing_ms) {
    Json doc;
    doc["schema_version"] = 1;
    doc["command"] = command;
    doc["inputs"] = std::move(inputs);
    doc["certificate"] = std::move(certificate);
    doc["oracle"] = std::move(oracle);
    doc["timing_ms"] = timing_ms;
    return doc;
}

std::string dump_document(const Json& doc) { return doc.dump(2) + "\n"; }

Json parse_document(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed JSON document: ") + e.what());
    }
}

}  // namespace freequat
