#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nccdim/curve.hpp"
#include "nccdim/divisor.hpp"
#include "nccdim/error.hpp"
#include "nccdim/hn.hpp"
#include "nccdim/kclass.hpp"
#include "nccdim/quiver.hpp"
#include "nccdim/stability.hpp"

namespace nccdim::io {

// Insertion-ordered JSON keeps every emitted report byte-stable.
using json = nlohmann::ordered_json;

inline json to_json(const Rational& r) { return r.to_string(); }

inline Rational rational_from_json(const json& j, const char* where) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw ValidationError(where, "rational as integer or \"p/q\" string", "unexpected JSON value");
}

inline json to_json(const CurveSignature& sig) {
    json j;
    j["genus"] = sig.genus();
    j["orders"] = sig.orders();
    return j;
}

inline CurveSignature signature_from_json(const json& j, std::vector<std::string>* warnings = nullptr) {
    if (!j.is_object() || !j.contains("genus") || !j.contains("orders"))
        throw ValidationError("signature_from_json", "object with genus and orders",
                              "malformed curve signature");
    if (!j["genus"].is_number_integer() || !j["orders"].is_array())
        throw ValidationError("signature_from_json", "integer genus and integer array orders",
                              "malformed curve signature");
    std::vector<int> orders;
    for (const auto& o : j["orders"]) {
        if (!o.is_number_integer())
            throw ValidationError("signature_from_json", "integer orders", "non-integer order");
        orders.push_back(o.get<int>());
    }
    return CurveSignature::make(j["genus"].get<int>(), std::move(orders), warnings);
}

inline json to_json(const DimensionReport& r) {
    json j;
    j["hdim"] = r.hdim;
    j["rdim"] = r.rdim;
    j["ddim"] = r.ddim;
    j["sdim"] = to_json(r.sdim);
    j["gldim"] = to_json(r.gldim);
    return j;
}

inline json to_json(const WeilDivisor& d) {
    json stacky = json::object();
    json smooth = json::object();
    for (const auto& [p, c] : d.coefficients()) {
        if (p.kind == PointId::Kind::Stacky)
            stacky[std::to_string(p.index)] = c;
        else
            smooth[p.label] = c;
    }
    json j;
    j["stacky"] = stacky;
    j["smooth"] = smooth;
    return j;
}

inline WeilDivisor divisor_from_json(const json& j) {
    if (!j.is_object())
        throw ValidationError("divisor_from_json", "object with stacky/smooth maps",
                              "malformed divisor");
    WeilDivisor d;
    if (j.contains("stacky")) {
        for (const auto& [key, value] : j["stacky"].items()) {
            int index = 0;
            try {
                index = std::stoi(key);
            } catch (const std::exception&) {
                throw ValidationError("divisor_from_json", "stacky keys are integer indices",
                                      "bad stacky key \"" + key + "\"");
            }
            if (!value.is_number_integer())
                throw ValidationError("divisor_from_json", "integer coefficients",
                                      "non-integer coefficient");
            d.add(PointId::stacky(index), value.get<std::int64_t>());
        }
    }
    if (j.contains("smooth")) {
        for (const auto& [key, value] : j["smooth"].items()) {
            if (!value.is_number_integer())
                throw ValidationError("divisor_from_json", "integer coefficients",
                                      "non-integer coefficient");
            d.add(PointId::smooth(key), value.get<std::int64_t>());
        }
    }
    return d;
}

inline json to_json(const KClass& a) {
    json j;
    j["rank"] = a.rank;
    j["degree"] = to_json(a.degree);
    j["locals"] = a.locals;
    return j;
}

inline KClass kclass_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rank") || !j.contains("degree") || !j.contains("locals"))
        throw ValidationError("kclass_from_json", "object with rank, degree, locals",
                              "malformed K-class");
    KClass a;
    if (!j["rank"].is_number_integer())
        throw ValidationError("kclass_from_json", "integer rank", "non-integer rank");
    a.rank = j["rank"].get<std::int64_t>();
    a.degree = rational_from_json(j["degree"], "kclass_from_json");
    if (!j["locals"].is_array())
        throw ValidationError("kclass_from_json", "locals as array of integer arrays",
                              "malformed locals");
    for (const auto& row : j["locals"]) {
        if (!row.is_array())
            throw ValidationError("kclass_from_json", "locals as array of integer arrays",
                                  "malformed locals");
        std::vector<std::int64_t> v;
        for (const auto& m : row) {
            if (!m.is_number_integer())
                throw ValidationError("kclass_from_json", "integer multiplicities",
                                      "non-integer multiplicity");
            v.push_back(m.get<std::int64_t>());
        }
        a.locals.push_back(std::move(v));
    }
    return a;
}

inline json to_json(const CRVector& v) {
    json j;
    j["rank"] = v.rank;
    j["coarse_degree"] = v.coarse_degree;
    j["locals"] = v.locals;
    return j;
}

inline json to_json(const FilteredObject& f) {
    json pieces = json::array();
    for (const auto& piece : f.pieces) pieces.push_back(to_json(piece));
    json j;
    j["pieces"] = pieces;
    return j;
}

inline FilteredObject filtered_from_json(const json& j) {
    if (!j.is_object() || !j.contains("pieces") || !j["pieces"].is_array())
        throw ValidationError("filtered_from_json", "object with a pieces array",
                              "malformed filtered object");
    FilteredObject f;
    for (const auto& piece : j["pieces"]) f.pieces.push_back(kclass_from_json(piece));
    return f;
}

inline json to_json(const Quiver& q) {
    json arrows = json::array();
    for (const auto& [s, t] : q.arrows) arrows.push_back(json::array({s, t}));
    json j;
    j["vertices"] = q.vertex_count;
    j["arrows"] = arrows;
    return j;
}

inline Quiver quiver_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows"))
        throw ValidationError("quiver_from_json", "object with vertices and arrows",
                              "malformed quiver");
    if (!j["vertices"].is_number_integer() || !j["arrows"].is_array())
        throw ValidationError("quiver_from_json", "integer vertices and arrow array",
                              "malformed quiver");
    Quiver q;
    q.vertex_count = j["vertices"].get<int>();
    for (const auto& a : j["arrows"]) {
        if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer())
            throw ValidationError("quiver_from_json", "arrows as [source, target] pairs",
                                  "malformed arrow");
        q.arrows.emplace_back(a[0].get<int>(), a[1].get<int>());
    }
    return q;
}

inline json to_json(const QuiverClassification& c) {
    json j;
    switch (c.kind) {
        case QuiverKind::Dynkin:
            j["kind"] = "dynkin";
            j["type"] = c.type->name();
            j["coxeter"] = *c.coxeter;
            break;
        case QuiverKind::Extended:
            j["kind"] = "extended";
            break;
        case QuiverKind::Wild:
            j["kind"] = "wild";
            break;
    }
    j["is_a1"] = c.is_a1;
    return j;
}

inline json to_json(const NegativeFamily& f) {
    json j;
    j["family"] = f.name();
    j["triple"] = f.triple;
    return j;
}

inline json to_json(const SupportReport& rep) {
    json j;
    j["checked"] = rep.checked;
    j["min_ratio"] = to_json(rep.min_ratio);
    j["ok"] = rep.ok;
    return j;
}

// Fixed 12-digit decimal rendering for genuinely real quantities.
inline std::string real12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12f", x);
    return std::string(buf);
}

} // namespace nccdim::io
