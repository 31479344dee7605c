// Structured-text (JSON) documents for code specifications and enumeration
// results. Field order is fixed so identical runs emit identical bytes.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "pmwd/concat.hpp"
#include "pmwd/construct.hpp"
#include "pmwd/crc.hpp"
#include "pmwd/enumerate.hpp"
#include "pmwd/polar.hpp"

namespace pmwd {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolkitVersion = "0.1.0";

// CodeSpec document: construction pw | ga | explicit, with enough fields to
// rebuild the same information set.
struct CodeSpecDoc {
    std::string construction; // "pw" | "ga" | "explicit"
    int n = 0;
    uint32_t k = 0;
    std::optional<double> design_snr_db;
    std::optional<std::vector<uint32_t>> info_set_a;

    CodeSpec realize() const {
        if (construction == "pw")
            return construct_pw(n, k);
        if (construction == "ga") {
            if (!design_snr_db)
                throw std::invalid_argument("CodeSpecDoc: ga needs design_snr_db");
            const double rate = double(k) / double(uint32_t(1) << n);
            return construct_ga(n, k, *design_snr_db, rate);
        }
        if (construction == "explicit") {
            if (!info_set_a)
                throw std::invalid_argument("CodeSpecDoc: explicit needs info_set_A");
            return CodeSpec::from_info_set_A(n, *info_set_a);
        }
        throw std::invalid_argument("CodeSpecDoc: unknown construction '" + construction + "'");
    }

    Json to_json() const {
        Json doc;
        doc["n"] = n;
        doc["construction"] = construction;
        doc["K"] = k;
        if (design_snr_db)
            doc["design_snr_db"] = *design_snr_db;
        if (info_set_a)
            doc["info_set_A"] = *info_set_a;
        return doc;
    }

    static CodeSpecDoc from_json(const Json& doc) {
        CodeSpecDoc out;
        out.n = doc.at("n").get<int>();
        out.construction = doc.at("construction").get<std::string>();
        out.k = doc.at("K").get<uint32_t>();
        if (doc.contains("design_snr_db"))
            out.design_snr_db = doc.at("design_snr_db").get<double>();
        if (doc.contains("info_set_A"))
            out.info_set_a = doc.at("info_set_A").get<std::vector<uint32_t>>();
        return out;
    }
};

// ConcatSpec document: the inner CodeSpec document plus crc_hex, k_p and the
// mapping ("ascending" or an explicit index list).
struct ConcatSpecDoc {
    CodeSpecDoc inner;
    std::string crc_hex;
    int k_p = 0;
    std::optional<std::vector<uint32_t>> mapping; // absent = ascending

    ConcatSpec realize() const {
        const CrcPolynomial poly = CrcPolynomial::parse_hex(crc_hex);
        if (poly.degree != k_p)
            throw std::invalid_argument("ConcatSpecDoc: k_p disagrees with crc_hex degree");
        return make_concat(inner.realize(), poly, mapping.value_or(std::vector<uint32_t>{}));
    }

    Json to_json() const {
        Json doc = inner.to_json();
        doc["crc_hex"] = crc_hex;
        doc["k_p"] = k_p;
        doc["mapping"] = mapping ? Json(*mapping) : Json("ascending");
        return doc;
    }

    static ConcatSpecDoc from_json(const Json& doc) {
        ConcatSpecDoc out;
        out.inner = CodeSpecDoc::from_json(doc);
        out.crc_hex = doc.at("crc_hex").get<std::string>();
        out.k_p = doc.at("k_p").get<int>();
        if (doc.contains("mapping") && doc.at("mapping").is_array())
            out.mapping = doc.at("mapping").get<std::vector<uint32_t>>();
        return out;
    }
};

// Every CLI payload embeds its manifest: the command, the fully resolved
// parameters and the toolkit version.
inline Json run_manifest(const std::string& command, Json params) {
    Json manifest;
    manifest["command"] = command;
    manifest["version"] = kToolkitVersion;
    manifest["params"] = std::move(params);
    return manifest;
}

inline Json mwd_record(const CodeSpecDoc& doc, const MwdResult& result,
                       const std::string& method, const std::string& mode,
                       double elapsed_ms) {
    const uint32_t big_n = uint32_t(1) << doc.n;
    Json record;
    record["n"] = doc.n;
    record["K"] = doc.k;
    record["construction"] = doc.construction;
    record["method"] = method;
    record["d_min"] = result.d_min;
    record["a_dmin"] = result.a_dmin;
    record["avn"] = result.avn;
    record["avn_per_nlog2n"] = double(result.avn) / (double(big_n) * doc.n);
    record["mode"] = mode;
    record["elapsed_ms"] = elapsed_ms;
    record["flags"] = result.flags;
    return record;
}

} // namespace pmwd
