#pragma once

#include "grcone/bundle.hpp"
#include "grcone/certificate.hpp"
#include "grcone/cone.hpp"
#include "grcone/numeric.hpp"
#include "grcone/oracle.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace grcone::io {

using json = nlohmann::json;

/// A parsed and fully validated input document: one bundle presentation or
/// one cover model.
class InputDocument {
  public:
    explicit InputDocument(BundleDescriptor bundle) : value_(std::move(bundle)) {}
    explicit InputDocument(CoverModel cover) : value_(std::move(cover)) {}

    bool is_bundle() const { return std::holds_alternative<BundleDescriptor>(value_); }
    bool is_cover() const { return std::holds_alternative<CoverModel>(value_); }

    /// "char0_hn" | "split" | "strong_hn" | "cover"
    std::string kind() const;

    const BundleDescriptor& bundle() const;
    const CoverModel& cover() const;

  private:
    std::variant<BundleDescriptor, CoverModel> value_;
};

/// Parses an input document, enforcing every structural invariant; throws
/// ParseError for malformed text and ValidationError with the offending
/// field for invariant violations.
InputDocument parse_input(const std::string& text);
InputDocument parse_input(const json& doc);
inline InputDocument parse_input(const char* text) { return parse_input(std::string(text)); }

EffectivityCertificate parse_certificate(const std::string& text);
EffectivityCertificate parse_certificate(const json& doc);
inline EffectivityCertificate parse_certificate(const char* text) {
    return parse_certificate(std::string(text));
}

json to_json(const BundleDescriptor& b);
json to_json(const CoverModel& c);
json to_json(const OracleReport& report);
json to_json(const EffectivityCertificate& cert);
json lambda_document(int r, const Rational& value);
json cone_document(const Cone2D& c, int r);
json verification_document(bool valid);

/// Canonical serialization: two-space indent, sorted keys, trailing newline.
/// Byte-identical for equal documents.
std::string dump_document(const json& doc);

// Integer values are emitted as JSON numbers while they fit 64 bits and as
// decimal strings beyond; both forms parse back. Rationals are always
// strings, "p/q" or "n".
json int_to_json(const Int& value);
Int json_to_int(const json& node, const std::string& field);
Rational json_to_rational(const json& node, const std::string& field);

} // namespace grcone::io
