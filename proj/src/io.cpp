#include "grcone/io.hpp"

#include "grcone/errors.hpp"

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace grcone::io {

namespace {

void expect_object(const json& node, const std::string& what) {
    if (!node.is_object())
        throw ValidationError(what + " must be a JSON object");
}

void reject_unknown_fields(const json& doc, const std::string& kind,
                           std::initializer_list<const char*> allowed) {
    for (const auto& item : doc.items()) {
        bool known = false;
        for (const char* name : allowed)
            known = known || item.key() == name;
        if (!known)
            throw ValidationError("unknown field \"" + item.key() + "\" in " + kind +
                                  " document");
    }
}

const json& require_field(const json& doc, const std::string& kind, const char* name) {
    auto it = doc.find(name);
    if (it == doc.end())
        throw ValidationError(kind + " document is missing field \"" + name + "\"");
    return *it;
}

int to_bounded_int(const Int& value, const std::string& field) {
    static const Int lo = std::numeric_limits<int>::min();
    static const Int hi = std::numeric_limits<int>::max();
    if (value < lo || value > hi)
        throw ValidationError("field \"" + field + "\": value " + value.str() +
                              " does not fit a machine integer");
    return value.convert_to<int>();
}

int int_field(const json& doc, const std::string& kind, const char* name) {
    return to_bounded_int(json_to_int(require_field(doc, kind, name), name), name);
}

std::vector<Int> parse_int_array(const json& node, const std::string& field) {
    if (!node.is_array())
        throw ValidationError("field \"" + field + "\": expected an array of integers");
    std::vector<Int> values;
    values.reserve(node.size());
    for (std::size_t i = 0; i < node.size(); ++i)
        values.push_back(json_to_int(node[i], field + "[" + std::to_string(i) + "]"));
    return values;
}

HNType parse_blocks(const json& node) {
    if (!node.is_array())
        throw ValidationError("field \"blocks\": expected an array of [rank, degree] pairs");
    std::vector<HNBlock> blocks;
    blocks.reserve(node.size());
    for (std::size_t i = 0; i < node.size(); ++i) {
        const std::string at = "blocks[" + std::to_string(i) + "]";
        const json& entry = node[i];
        if (!entry.is_array() || entry.size() != 2)
            throw ValidationError("field \"" + at + "\": expected a [rank, degree] pair");
        const int rank = to_bounded_int(json_to_int(entry[0], at + ".rank"), at + ".rank");
        blocks.push_back(HNBlock{rank, json_to_int(entry[1], at + ".degree")});
    }
    return HNType(std::move(blocks));
}

json blocks_to_json(const HNType& hn) {
    json out = json::array();
    for (const HNBlock& b : hn.blocks())
        out.push_back(json::array({json(b.rank), int_to_json(b.degree)}));
    return out;
}

json exponents_to_json(const SplitBundle& e) {
    json out = json::array();
    for (const Int& a : e.exponents())
        out.push_back(int_to_json(a));
    return out;
}

bool bool_field(const json& doc, const std::string& kind, const char* name) {
    const json& node = require_field(doc, kind, name);
    if (!node.is_boolean())
        throw ValidationError("field \"" + std::string(name) + "\": expected a boolean");
    return node.get<bool>();
}

} // namespace

std::string InputDocument::kind() const {
    if (is_cover())
        return "cover";
    const BundleDescriptor& b = std::get<BundleDescriptor>(value_);
    if (b.is_char_zero())
        return "char0_hn";
    if (b.is_split())
        return "split";
    return "strong_hn";
}

const BundleDescriptor& InputDocument::bundle() const {
    if (!is_bundle())
        throw ValidationError("expected a bundle document, got a cover document");
    return std::get<BundleDescriptor>(value_);
}

const CoverModel& InputDocument::cover() const {
    if (!is_cover())
        throw ValidationError("expected a cover document, got a " + kind() + " document");
    return std::get<CoverModel>(value_);
}

InputDocument parse_input(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_input(doc);
}

InputDocument parse_input(const json& doc) {
    expect_object(doc, "input document");
    const json& kind_node = require_field(doc, "input", "kind");
    if (!kind_node.is_string())
        throw ValidationError("field \"kind\": expected a string");
    const std::string kind = kind_node.get<std::string>();

    if (kind == "char0_hn") {
        reject_unknown_fields(doc, kind, {"kind", "characteristic", "blocks"});
        if (auto it = doc.find("characteristic"); it != doc.end()) {
            if (json_to_int(*it, "characteristic") != 0)
                throw ValidationError(
                    "field \"characteristic\": char0_hn documents must have characteristic 0");
        }
        return InputDocument(
            BundleDescriptor::char_zero(parse_blocks(require_field(doc, kind, "blocks"))));
    }
    if (kind == "split") {
        reject_unknown_fields(doc, kind, {"kind", "characteristic", "exponents"});
        const Int chi = json_to_int(require_field(doc, kind, "characteristic"), "characteristic");
        SplitBundle bundle(
            parse_int_array(require_field(doc, kind, "exponents"), "exponents"));
        return InputDocument(BundleDescriptor::split(std::move(bundle), chi));
    }
    if (kind == "strong_hn") {
        reject_unknown_fields(doc, kind, {"kind", "characteristic", "delta", "blocks"});
        const Int chi = json_to_int(require_field(doc, kind, "characteristic"), "characteristic");
        const int delta = int_field(doc, kind, "delta");
        return InputDocument(BundleDescriptor::strong(
            StrongHNData(chi, delta, parse_blocks(require_field(doc, kind, "blocks")))));
    }
    if (kind == "cover") {
        reject_unknown_fields(doc, kind, {"kind", "cover_degree", "l_degree", "exponents"});
        const Int cover_degree = json_to_int(require_field(doc, kind, "cover_degree"), "cover_degree");
        const Int l_degree = json_to_int(require_field(doc, kind, "l_degree"), "l_degree");
        SplitBundle exponents(
            parse_int_array(require_field(doc, kind, "exponents"), "exponents"));
        return InputDocument(CoverModel(cover_degree, l_degree, std::move(exponents)));
    }
    throw ValidationError("field \"kind\": unknown document kind \"" + kind + "\"");
}

EffectivityCertificate parse_certificate(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_certificate(doc);
}

EffectivityCertificate parse_certificate(const json& doc) {
    expect_object(doc, "certificate document");
    const std::string kind = "certificate";
    reject_unknown_fields(doc, kind,
                          {"kind", "r", "ell", "n", "selected_exponents", "tilde_l_degree",
                           "total_map_degree", "checks"});
    if (auto it = doc.find("kind"); it != doc.end()) {
        if (!it->is_string() || it->get<std::string>() != "certificate")
            throw ValidationError("field \"kind\": expected \"certificate\"");
    }

    EffectivityCertificate cert;
    cert.r = int_field(doc, kind, "r");
    cert.ell = int_field(doc, kind, "ell");
    cert.n = int_field(doc, kind, "n");
    cert.selected_exponents = parse_int_array(
        require_field(doc, kind, "selected_exponents"), "selected_exponents");
    cert.tilde_l_degree = json_to_int(require_field(doc, kind, "tilde_l_degree"), "tilde_l_degree");
    cert.total_map_degree =
        json_to_int(require_field(doc, kind, "total_map_degree"), "total_map_degree");

    const json& checks = require_field(doc, kind, "checks");
    expect_object(checks, "field \"checks\"");
    reject_unknown_fields(checks, "checks",
                          {"summand_ok", "degree_identity_ok", "pullback_identity_ok"});
    cert.checks.summand_ok = bool_field(checks, "checks", "summand_ok");
    cert.checks.degree_identity_ok = bool_field(checks, "checks", "degree_identity_ok");
    cert.checks.pullback_identity_ok = bool_field(checks, "checks", "pullback_identity_ok");
    return cert;
}

json to_json(const BundleDescriptor& b) {
    json doc;
    if (b.is_char_zero()) {
        doc["kind"] = "char0_hn";
        doc["characteristic"] = 0;
        doc["blocks"] = blocks_to_json(b.as_char_zero().hn);
    } else if (b.is_split()) {
        doc["kind"] = "split";
        doc["characteristic"] = int_to_json(b.as_split().characteristic);
        doc["exponents"] = exponents_to_json(b.as_split().bundle);
    } else {
        const StrongHNData& d = b.as_strong().data;
        doc["kind"] = "strong_hn";
        doc["characteristic"] = int_to_json(d.characteristic());
        doc["delta"] = d.delta();
        doc["blocks"] = blocks_to_json(d.hn());
    }
    return doc;
}

json to_json(const CoverModel& c) {
    json doc;
    doc["kind"] = "cover";
    doc["cover_degree"] = int_to_json(c.cover_degree());
    doc["l_degree"] = int_to_json(c.l_degree());
    doc["exponents"] = exponents_to_json(c.exponents());
    return doc;
}

json to_json(const OracleReport& report) {
    json doc;
    doc["kind"] = "oracle_report";
    doc["r"] = report.r;
    doc["lambda_formula"] = format_rational(report.lambda_formula);
    doc["lambda_oracle"] = format_rational(report.lambda_oracle);
    doc["h0_at_boundary"] = int_to_json(report.h0_at_boundary);
    doc["h0_beyond_boundary"] = int_to_json(report.h0_beyond_boundary);
    doc["verdict"] = report.verdict;
    return doc;
}

json to_json(const EffectivityCertificate& cert) {
    json doc;
    doc["kind"] = "certificate";
    doc["r"] = cert.r;
    doc["ell"] = cert.ell;
    doc["n"] = cert.n;
    json selected = json::array();
    for (const Int& a : cert.selected_exponents)
        selected.push_back(int_to_json(a));
    doc["selected_exponents"] = std::move(selected);
    doc["tilde_l_degree"] = int_to_json(cert.tilde_l_degree);
    doc["total_map_degree"] = int_to_json(cert.total_map_degree);
    doc["checks"] = {{"summand_ok", cert.checks.summand_ok},
                     {"degree_identity_ok", cert.checks.degree_identity_ok},
                     {"pullback_identity_ok", cert.checks.pullback_identity_ok}};
    return doc;
}

json lambda_document(int r, const Rational& value) {
    json doc;
    doc["kind"] = "lambda";
    doc["r"] = r;
    doc["lambda"] = format_rational(value);
    return doc;
}

json cone_document(const Cone2D& c, int r) {
    json doc;
    doc["kind"] = "cone";
    doc["r"] = r;
    doc["rays"] = json::array({json::array({int_to_json(c.ray_a().eta()), int_to_json(c.ray_a().fiber())}),
                               json::array({int_to_json(c.ray_b().eta()), int_to_json(c.ray_b().fiber())})});
    return doc;
}

json verification_document(bool valid) {
    json doc;
    doc["kind"] = "verification";
    doc["valid"] = valid;
    return doc;
}

std::string dump_document(const json& doc) {
    return doc.dump(2) + "\n";
}

json int_to_json(const Int& value) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (value >= lo && value <= hi)
        return json(value.convert_to<std::int64_t>());
    return json(value.str());
}

Int json_to_int(const json& node, const std::string& field) {
    if (node.is_number_integer() || node.is_number_unsigned()) {
        if (node.is_number_unsigned())
            return Int(node.get<std::uint64_t>());
        return Int(node.get<std::int64_t>());
    }
    if (node.is_string()) {
        const std::string text = node.get<std::string>();
        try {
            return parse_integer(text);
        } catch (const ParseError&) {
            throw ValidationError("field \"" + field + "\": not a decimal integer: \"" + text +
                                  "\"");
        }
    }
    throw ValidationError("field \"" + field + "\": expected an integer or decimal string");
}

Rational json_to_rational(const json& node, const std::string& field) {
    if (node.is_string()) {
        const std::string text = node.get<std::string>();
        try {
            return parse_rational(text);
        } catch (const ParseError&) {
            throw ValidationError("field \"" + field + "\": not a rational: \"" + text + "\"");
        }
    }
    return Rational(json_to_int(node, field));
}

} // namespace grcone::io
