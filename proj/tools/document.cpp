#include "document.hpp"

#include <charconv>
#include <sstream>

#include "genusfield/errors.hpp"

namespace genusfield::cli {

namespace {

using genus::ElementKind;

std::string_view radical(ElementKind k) {
    switch (k) {
        case ElementKind::Gaussian: return "sqrt(-1)";
        case ElementKind::SqrtMinus2: return "sqrt(-2)";
        case ElementKind::Sqrt2: return "sqrt(2)";
        case ElementKind::RationalPrime: break;
    }
    return "";
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    std::int64_t v = 0;
    const auto* first = s.data();
    if (!s.empty() && s.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || first == s.data() + s.size())
        throw DomainError("malformed element display '" + std::string(whole) + "'");
    return v;
}

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

// Numbers, booleans and nulls print inline; strings may contain ", " and get one line each.
bool inline_array(const Json& arr) {
    for (const auto& e : arr)
        if (e.is_structured() || e.is_string()) return false;
    return true;
}

void flatten(const Json& v, const std::string& path, std::ostringstream& out) {
    if (v.is_object()) {
        if (v.empty()) out << path << ": {}\n";
        for (const auto& [key, child] : v.items()) flatten(child, path.empty() ? key : path + "." + key, out);
    } else if (v.is_array() && !inline_array(v)) {
        for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "[" + std::to_string(i) + "]", out);
    } else if (v.is_array()) {
        out << path << ": [";
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar_text(v[i]);
        out << "]\n";
    } else {
        out << path << ": " << scalar_text(v) << "\n";
    }
}

}  // namespace

std::string display(const genus::GeneratorElement& g) {
    if (g.kind == ElementKind::RationalPrime) return std::to_string(g.a);
    std::string s = std::to_string(g.a);
    s += g.b < 0 ? "-" : "+";
    s += std::to_string(g.b < 0 ? -g.b : g.b);
    s += "*";
    s += radical(g.kind);
    return s;
}

genus::GeneratorElement parse_display(std::string_view text) {
    const auto star = text.find('*');
    if (star == std::string_view::npos) return genus::GeneratorElement::prime(parse_int(text, text));
    const std::string_view rad = text.substr(star + 1);
    ElementKind kind{};
    if (rad == "sqrt(-1)")
        kind = ElementKind::Gaussian;
    else if (rad == "sqrt(-2)")
        kind = ElementKind::SqrtMinus2;
    else if (rad == "sqrt(2)")
        kind = ElementKind::Sqrt2;
    else
        throw DomainError("unknown radical in '" + std::string(text) + "'");
    const std::string_view lin = text.substr(0, star);
    const auto sign = lin.find_first_of("+-", 1);
    if (sign == std::string_view::npos) throw DomainError("malformed element display '" + std::string(text) + "'");
    return {kind, parse_int(lin.substr(0, sign), text), parse_int(lin.substr(sign), text)};
}

std::string field_description(const genus::GenusField& g) {
    std::string s = "Q(zeta_{2^" + std::to_string(g.m) + "}, sqrt(" + std::to_string(g.d) + ")";
    for (const auto& gen : g.generators) s += ", sqrt(" + display(gen.element) + ")";
    return s + ")";
}

Json input_json(const InputEcho& in) {
    Json j;
    j["d"] = in.d;
    j["m"] = in.m;
    j["factored_primes"] = in.primes ? Json(*in.primes) : Json(nullptr);
    return j;
}

Json signature_json(const classify::CaseSignature& sig) {
    Json j;
    j["r"] = sig.r;
    j["s"] = sig.s;
    j["t"] = sig.t;
    j["n"] = sig.n();
    j["case_id"] = sig.covered() ? Json(sig.case_id) : Json("NotCovered");
    const auto branch = sig.covered() ? sig.branch() : std::nullopt;
    j["sub_branch"] = branch ? Json(classify::to_string(*branch)) : Json(nullptr);
    Json signs = Json::array();
    for (auto s : sig.quartic_signs) signs.push_back(arith::to_int(s));
    j["quartic_signs"] = signs;
    return j;
}

Json generator_json(const genus::Generator& g) {
    Json j;
    j["label"] = g.label;
    j["kind"] = genus::to_string(g.element.kind);
    j["coords"] = g.element.kind == ElementKind::RationalPrime ? Json::array({g.element.a})
                                                               : Json::array({g.element.a, g.element.b});
    j["display"] = display(g.element);
    return j;
}

Json verification_json(const verify::VerificationReport& rep) {
    Json gens = Json::array();
    for (const auto& c : rep.generators) {
        Json g;
        g["label"] = c.label;
        g["norm"] = c.norm;
        g["norm_ok"] = c.norm_ok;
        g["ideal_square_ok"] = c.ideal_square_ok;
        g["square_mod4_ok"] = c.square_mod4_ok;
        gens.push_back(std::move(g));
    }
    Json ind;
    ind["ok"] = rep.independence.independent;
    ind["gf2_rank"] = rep.independence.rank;
    ind["generator_count"] = rep.independence.generator_count;
    ind["characters"] = rep.independence.characters;
    Json j;
    j["generators"] = std::move(gens);
    j["independence"] = std::move(ind);
    j["subset_oracle"] = rep.subset_oracle ? Json(*rep.subset_oracle) : Json(nullptr);
    j["count_matches_rank"] = rep.count_matches_rank;
    j["overall"] = rep.overall;
    return j;
}

Json genus_document(std::string_view command, const InputEcho& in, const genus::GenusField& g,
                    const verify::VerificationReport* rep) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["input"] = input_json(in);
    j["signature"] = signature_json(g.signature);
    Json gens = Json::array();
    for (const auto& gen : g.generators) gens.push_back(generator_json(gen));
    j["generators"] = std::move(gens);
    j["expected_rank"] = g.expected_rank;
    j["field_description"] = field_description(g);
    j["verification"] = rep ? verification_json(*rep) : Json(nullptr);
    j["notes"] = g.notes;
    return j;
}

Json classify_document(const InputEcho& in, const classify::CaseSignature& sig, std::vector<std::string> notes) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "classify";
    j["input"] = input_json(in);
    j["signature"] = signature_json(sig);
    j["notes"] = std::move(notes);
    return j;
}

Json error_document(std::string_view command, const InputEcho& in, const classify::CaseSignature* sig,
                    std::string_view kind, int exit_code, std::string_view message, std::vector<std::string> notes) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["input"] = input_json(in);
    j["signature"] = sig ? signature_json(*sig) : Json(nullptr);
    Json err;
    err["kind"] = kind;
    err["exit_code"] = exit_code;
    err["message"] = message;
    j["error"] = std::move(err);
    j["notes"] = std::move(notes);
    return j;
}

std::string to_json_text(const Json& doc) {
    return doc.dump(2) + "\n";
}

std::string to_text(const Json& doc) {
    std::ostringstream out;
    flatten(doc, "", out);
    return out.str();
}

}  // namespace genusfield::cli
