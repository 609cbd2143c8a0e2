/**
 * @file serialization.hpp
 * @brief Canonical JSON documents for Hopf algebras and comodules.
 *
 * Scalars are strings ("-3/4", "5"), never JSON numbers. Keys are emitted in
 * a fixed order, so serialize(parse(serialize(h))) is byte-identical.
 *
 *   {"field": {"type": "Q"} | {"type": "Fp", "p": 7},
 *    "dim": n, "basis": [labels],
 *    "unit": [n], "mult": [i][j] -> [n], "counit": [n],
 *    "comult": [k] -> [n*n], "antipode": [k] -> [n]}
 *
 * mult[i][j] is e_i e_j, comult[k] is Delta(e_k) with e_a (x) e_b at a*n + b,
 * antipode[k] is S(e_k).
 */
#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "hopfint/comodule.hpp"

namespace hopfint {

using ojson = nlohmann::ordered_json;

inline ojson field_to_json(const Field& f) {
    ojson j;
    if (f.is_rational()) {
        j["type"] = "Q";
    } else {
        j["type"] = "Fp";
        j["p"] = f.modulus();
    }
    return j;
}

inline Field field_from_json(const ojson& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "Q") return Field::rationals();
    if (type == "Fp") return Field::prime(j.at("p").get<std::uint64_t>());
    throw invalid_input("unknown field type '" + type + "'");
}

inline ojson vector_to_json(std::span<const Scalar> v) {
    ojson a = ojson::array();
    for (const auto& s : v) a.push_back(s.to_string());
    return a;
}

inline Vector vector_from_json(const Field& f, const ojson& j, std::size_t expected, const std::string& what) {
    if (!j.is_array() || j.size() != expected)
        throw invalid_input(what + ": expected an array of " + std::to_string(expected) + " scalars");
    Vector v;
    v.reserve(expected);
    for (const auto& e : j) {
        if (!e.is_string()) throw invalid_input(what + ": scalars must be JSON strings");
        v.push_back(Scalar::parse(f, e.get<std::string>()));
    }
    return v;
}

inline ojson hopf_to_json(const HopfAlgebraData& h) {
    const std::size_t n = h.dim();
    ojson doc;
    doc["field"] = field_to_json(h.field());
    doc["dim"] = n;
    doc["basis"] = h.labels();
    doc["unit"] = vector_to_json(h.unit());
    ojson mult = ojson::array();
    for (std::size_t i = 0; i < n; ++i) {
        ojson row = ojson::array();
        for (std::size_t j = 0; j < n; ++j) row.push_back(vector_to_json(h.mult().column(i * n + j)));
        mult.push_back(std::move(row));
    }
    doc["mult"] = std::move(mult);
    doc["counit"] = vector_to_json(h.counit());
    ojson comult = ojson::array();
    for (std::size_t k = 0; k < n; ++k) comult.push_back(vector_to_json(h.comult().column(k)));
    doc["comult"] = std::move(comult);
    ojson antipode = ojson::array();
    for (std::size_t k = 0; k < n; ++k) antipode.push_back(vector_to_json(h.antipode().column(k)));
    doc["antipode"] = std::move(antipode);
    return doc;
}

/// Structural parse only; run verify_hopf on the result before using it.
inline HopfAlgebraData hopf_from_json(const ojson& doc) {
    try {
        const Field f = field_from_json(doc.at("field"));
        const std::size_t n = doc.at("dim").get<std::size_t>();
        if (n == 0) throw invalid_input("dim must be positive");
        const auto& basis = doc.at("basis");
        if (!basis.is_array() || basis.size() != n) throw invalid_input("basis: expected " + std::to_string(n) + " labels");
        std::vector<std::string> labels;
        for (const auto& b : basis) labels.push_back(b.get<std::string>());
        Vector unit = vector_from_json(f, doc.at("unit"), n, "unit");
        Vector counit = vector_from_json(f, doc.at("counit"), n, "counit");
        const auto& mj = doc.at("mult");
        if (!mj.is_array() || mj.size() != n) throw invalid_input("mult: expected " + std::to_string(n) + " rows");
        Matrix mult(f, n, n * n);
        for (std::size_t i = 0; i < n; ++i) {
            if (!mj[i].is_array() || mj[i].size() != n) throw invalid_input("mult: row has wrong length");
            for (std::size_t j = 0; j < n; ++j)
                mult.set_column(i * n + j, vector_from_json(f, mj[i][j], n, "mult"));
        }
        const auto& cj = doc.at("comult");
        if (!cj.is_array() || cj.size() != n) throw invalid_input("comult: expected " + std::to_string(n) + " entries");
        Matrix comult(f, n * n, n);
        for (std::size_t k = 0; k < n; ++k) comult.set_column(k, vector_from_json(f, cj[k], n * n, "comult"));
        const auto& sj = doc.at("antipode");
        if (!sj.is_array() || sj.size() != n) throw invalid_input("antipode: expected " + std::to_string(n) + " entries");
        Matrix antipode(f, n, n);
        for (std::size_t k = 0; k < n; ++k) antipode.set_column(k, vector_from_json(f, sj[k], n, "antipode"));
        return HopfAlgebraData(f, std::move(labels), std::move(mult), std::move(unit), std::move(comult),
                               std::move(counit), std::move(antipode));
    } catch (const nlohmann::json::exception& e) {
        throw invalid_input(std::string("malformed Hopf algebra document: ") + e.what());
    }
}

inline std::string serialize(const HopfAlgebraData& h) { return hopf_to_json(h).dump(2) + "\n"; }

inline HopfAlgebraData parse_hopf(const std::string& text) {
    ojson doc;
    try {
        doc = ojson::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw invalid_input(std::string("invalid JSON: ") + e.what());
    }
    return hopf_from_json(doc);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw invalid_input("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline HopfAlgebraData load_hopf(const std::string& path) { return parse_hopf(read_file(path)); }

/// {"field", "parent_dim", "dim", "coaction": [j] -> rho(f_j) of length dim * parent_dim}
inline ojson comodule_to_json(const Comodule& m) {
    ojson doc;
    doc["field"] = field_to_json(m.field());
    doc["parent_dim"] = m.hopf().dim();
    doc["dim"] = m.dim();
    ojson rho = ojson::array();
    for (std::size_t j = 0; j < m.dim(); ++j) rho.push_back(vector_to_json(m.coaction().column(j)));
    doc["coaction"] = std::move(rho);
    return doc;
}

inline Comodule comodule_from_json(const HopfPtr& h, const ojson& doc) {
    try {
        const Field f = field_from_json(doc.at("field"));
        if (!(f == h->field())) throw invalid_input("comodule field differs from its Hopf algebra");
        if (doc.at("parent_dim").get<std::size_t>() != h->dim()) throw invalid_input("parent dimension mismatch");
        const std::size_t d = doc.at("dim").get<std::size_t>();
        const auto& rj = doc.at("coaction");
        if (!rj.is_array() || rj.size() != d) throw invalid_input("coaction: expected " + std::to_string(d) + " entries");
        Matrix rho(f, d * h->dim(), d);
        for (std::size_t j = 0; j < d; ++j) rho.set_column(j, vector_from_json(f, rj[j], d * h->dim(), "coaction"));
        return Comodule(h, d, std::move(rho));
    } catch (const nlohmann::json::exception& e) {
        throw invalid_input(std::string("malformed comodule document: ") + e.what());
    }
}

} // namespace hopfint
