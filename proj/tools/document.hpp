#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "genusfield/classify.hpp"
#include "genusfield/genus.hpp"
#include "genusfield/verify.hpp"

namespace genusfield::cli {

using Json = nlohmann::ordered_json;

/// Bumped on any change to the shape of emitted documents (see schema/output.v1.json).
inline constexpr std::string_view kSchemaVersion = "1";

/// "5", "1+8*sqrt(-1)", "-3+4*sqrt(-2)", "13-8*sqrt(2)".
std::string display(const genus::GeneratorElement& g);

/// Inverse of display(). Throws DomainError on malformed text.
genus::GeneratorElement parse_display(std::string_view text);

/// "Q(zeta_{2^m}, sqrt(d), sqrt(g1), ...)" with m and d substituted.
std::string field_description(const genus::GenusField& g);

struct InputEcho {
    std::int64_t d = 0;
    int m = 3;
    std::optional<std::vector<std::int64_t>> primes;
};

Json input_json(const InputEcho& in);
Json signature_json(const classify::CaseSignature& sig);
Json generator_json(const genus::Generator& g);
Json verification_json(const verify::VerificationReport& rep);

/// Full compute/verify document.
Json genus_document(std::string_view command, const InputEcho& in, const genus::GenusField& g,
                    const verify::VerificationReport* rep);

/// classify document (signature only, no representations solved).
Json classify_document(const InputEcho& in, const classify::CaseSignature& sig, std::vector<std::string> notes);

/// Error document; `sig` is present when classification got that far.
Json error_document(std::string_view command, const InputEcho& in, const classify::CaseSignature* sig,
                    std::string_view kind, int exit_code, std::string_view message, std::vector<std::string> notes);

/// Byte-stable serialization: two-space indent, insertion-ordered keys, trailing newline.
std::string to_json_text(const Json& doc);

/// One "path: value" line per leaf; carries exactly the fields of the JSON form.
std::string to_text(const Json& doc);

}  // namespace genusfield::cli
