#include "commands.hpp"

#include <atomic>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "genusfield/errors.hpp"
#include "genusfield/genus.hpp"

namespace genusfield::cli {

namespace {

struct Failure {
    std::string kind;
    int exit_code;
};

void reject_degenerate(std::int64_t d) {
    if (d == std::numeric_limits<std::int64_t>::min()) throw DomainError("d out of range");
    const std::int64_t a = d < 0 ? -d : d;
    if (a <= 2) throw Degenerate("d = " + std::to_string(d) + " is degenerate");
    if (a % 2 == 0) throw Degenerate("d = " + std::to_string(d) + " is even; 2 is outside the supported prime classes");
}

arith::Factorization factor_input(std::int64_t d, const std::optional<std::vector<std::int64_t>>& primes,
                                  const Settings& s) {
    reject_degenerate(d);
    return primes ? arith::from_primes(d, *primes) : arith::factor_squarefree(d, s.search.factor);
}

arith::Factorization positive(arith::Factorization f) {
    f.value = f.abs_value();
    return f;
}

std::string not_covered_note(const classify::CaseSignature& sig) {
    return "signature (r=" + std::to_string(sig.r) + ", s=" + std::to_string(sig.s) + ", t=" + std::to_string(sig.t) +
           ") is outside the covered case list 1-15; r=0 with (s=1, t>=2) or (s>=2, t=1) has no construction";
}

// Runs `body`, translating library errors into an error document.
template <class Body>
Outcome guarded(std::string_view command, InputEcho& in, const classify::CaseSignature*& sig, Body&& body) {
    const auto fail = [&](std::string kind, int code, const std::string& msg, std::vector<std::string> notes) {
        Outcome o;
        o.exit_code = code;
        o.status = kind;
        o.document = error_document(command, in, sig, kind, code, msg, std::move(notes));
        return o;
    };
    try {
        return body();
    } catch (const UnsupportedPrime& e) {
        return fail("UnsupportedPrime", kUnsupportedPrime, e.what(), {});
    } catch (const NotCovered& e) {
        std::vector<std::string> notes;
        if (sig) notes.push_back(not_covered_note(*sig));
        return fail("NotCovered", kNotCovered, e.what(), std::move(notes));
    } catch (const NotSquareFree& e) {
        return fail("NotSquareFree", kDegenerate, e.what(), {});
    } catch (const Degenerate& e) {
        return fail("Degenerate", kDegenerate, e.what(), {});
    } catch (const std::exception& e) {
        return fail("InternalError", kInternalError, e.what(), {});
    }
}

std::vector<std::int64_t> parse_prime_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw DomainError("--primes: '" + item + "' is not an integer");
        }
    }
    return out;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw DomainError("--range expects A:B");
    try {
        return {std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
    } catch (const std::logic_error&) {
        throw DomainError("--range expects integers A:B, got '" + text + "'");
    }
}

std::string render(const Json& doc, Format f) {
    return f == Format::Json ? to_json_text(doc) : to_text(doc);
}

}  // namespace

Settings load_config(const std::string& path, Settings base) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open config file " + path);
    const Json cfg = Json::parse(in);
    for (const auto& [key, value] : cfg.items()) {
        if (key == "m")
            base.m = value.get<int>();
        else if (key == "format")
            base.format = value.get<std::string>() == "json" ? Format::Json : Format::Text;
        else if (key == "jobs")
            base.jobs = value.get<int>();
        else if (key == "trial_division_limit")
            base.search.factor.trial_division_limit = value.get<std::uint64_t>();
        else if (key == "exhaustive_limit")
            base.search.exhaustive_limit = value.get<std::int64_t>();
        else if (key == "pell_bound_factor")
            base.search.pell_bound_factor = value.get<double>();
        else if (key == "max_characters")
            base.characters.max_characters = value.get<int>();
        else
            throw DomainError("unknown config key '" + key + "'");
    }
    return base;
}

Outcome compute(std::int64_t d, const std::optional<std::vector<std::int64_t>>& primes, bool with_verify,
                const Settings& s) {
    const std::string_view command = with_verify ? "verify" : "compute";
    InputEcho in{d, s.m, std::nullopt};
    classify::CaseSignature sig_storage;
    const classify::CaseSignature* sig = nullptr;
    return guarded(command, in, sig, [&] {
        const auto f = factor_input(d, primes, s);
        in.primes = f.primes;
        sig_storage = classify::make_signature(positive(f));
        sig = &sig_storage;
        const auto g = genus::construct(f, s.m, s.search);
        Outcome o;
        o.case_id = g.case_id();
        if (with_verify) {
            const auto rep = verify::full_report(g, positive(f), s.characters);
            o.verified = rep.overall;
            o.document = genus_document(command, in, g, &rep);
            if (!rep.overall) {
                o.exit_code = kVerificationFailed;
                o.status = "VerificationFailed";
            }
        } else {
            o.document = genus_document(command, in, g, nullptr);
        }
        return o;
    });
}

Outcome verify_command(std::int64_t d, const std::optional<std::vector<std::int64_t>>& primes, const Settings& s) {
    return compute(d, primes, true, s);
}

Outcome classify_command(std::int64_t d, const std::optional<std::vector<std::int64_t>>& primes, const Settings& s) {
    InputEcho in{d, s.m, std::nullopt};
    const classify::CaseSignature* sig = nullptr;
    classify::CaseSignature sig_storage;
    return guarded("classify", in, sig, [&] {
        const auto f = factor_input(d, primes, s);
        in.primes = f.primes;
        sig_storage = classify::make_signature(positive(f));
        sig = &sig_storage;
        Outcome o;
        std::vector<std::string> notes;
        if (!sig_storage.covered()) {
            notes.push_back(not_covered_note(sig_storage));
            o.exit_code = kNotCovered;
            o.status = "NotCovered";
        } else {
            o.case_id = sig_storage.case_id;
        }
        o.document = classify_document(in, sig_storage, std::move(notes));
        return o;
    });
}

BatchResult batch(std::int64_t first, std::int64_t last, bool with_verify, bool only_supported, const Settings& s) {
    BatchResult result;
    const std::int64_t count = last >= first ? last - first + 1 : 0;
    std::vector<Outcome> all(static_cast<std::size_t>(count));
    std::atomic<std::int64_t> next{0};
    const auto worker = [&] {
        for (std::int64_t i = next++; i < count; i = next++)
            all[static_cast<std::size_t>(i)] = compute(first + i, std::nullopt, with_verify, s);
    };
    const int jobs = std::max(1, s.jobs);
    {
        std::vector<std::jthread> pool;
        for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
        worker();
    }

    std::map<std::string, int> by_status;
    std::array<int, 16> by_case{};
    int checked = 0, passed = 0;
    for (auto& o : all) {
        ++by_status[o.status];
        if (o.case_id) ++by_case[static_cast<std::size_t>(*o.case_id)];
        if (o.verified) {
            ++checked;
            passed += *o.verified ? 1 : 0;
        }
        const bool supported = o.status == "ok" || o.status == "NotCovered" || o.status == "VerificationFailed";
        if (!only_supported || supported) result.documents.push_back(std::move(o));
    }

    Json summary;
    summary["range"] = Json::array({first, last});
    summary["m"] = s.m;
    summary["scanned"] = count;
    summary["documents"] = result.documents.size();
    Json cases;
    for (int c = 1; c <= 15; ++c) cases[std::to_string(c)] = by_case[static_cast<std::size_t>(c)];
    summary["by_case"] = std::move(cases);
    const auto tally = [&](const char* k) { return by_status.count(k) ? by_status[k] : 0; };
    summary["not_covered"] = tally("NotCovered");
    summary["unsupported_prime"] = tally("UnsupportedPrime");
    summary["not_square_free"] = tally("NotSquareFree");
    summary["degenerate"] = tally("Degenerate");
    summary["internal_error"] = tally("InternalError");
    if (with_verify) {
        Json v;
        v["checked"] = checked;
        v["passed"] = passed;
        v["pass_rate"] = checked ? static_cast<double>(passed) / checked : 1.0;
        summary["verification"] = std::move(v);
    } else {
        summary["verification"] = nullptr;
    }
    result.summary = Json{{"schema_version", kSchemaVersion}, {"summary", std::move(summary)}};
    return result;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hilbert genus fields of Q(zeta_{2^m}, sqrt(d))", "genusfield"};
    app.require_subcommand(1);

    std::int64_t d = 0;
    int m = 3;
    std::string format = "text";
    std::string primes_text, range_text, config_path, out_path;
    bool with_verify = false, only_supported = false;
    int jobs = 1;

    const auto common = [&](CLI::App* sub, bool needs_d) {
        auto* opt_d = sub->add_option("--d", d, "square-free integer d");
        if (needs_d) opt_d->required();
        sub->add_option("--m", m, "cyclotomic level m >= 3")->check(CLI::Range(3, 1 << 20));
        sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--config", config_path, "JSON config file with search bounds");
        sub->add_option("--out", out_path, "write output to FILE instead of stdout");
    };
    auto* c_compute = app.add_subcommand("compute", "construct the genus field generators");
    common(c_compute, true);
    c_compute->add_flag("--verify", with_verify, "also run the verification report");
    c_compute->add_option("--primes", primes_text, "pre-verified factorization p1,p2,...");
    auto* c_classify = app.add_subcommand("classify", "classify the prime divisors of d");
    common(c_classify, true);
    c_classify->add_option("--primes", primes_text, "pre-verified factorization p1,p2,...");
    auto* c_verify = app.add_subcommand("verify", "construct and verify");
    common(c_verify, true);
    c_verify->add_option("--primes", primes_text, "pre-verified factorization p1,p2,...");
    auto* c_batch = app.add_subcommand("batch", "scan a range of d");
    common(c_batch, false);
    c_batch->add_option("--range", range_text, "inclusive range A:B")->required();
    c_batch->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    c_batch->add_flag("--only-supported", only_supported, "emit documents only for supported square-free d");
    c_batch->add_flag("--verify", with_verify, "verify every construction");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        Settings s;
        if (!config_path.empty()) s = load_config(config_path, s);
        for (auto* sub : app.get_subcommands()) {
            if (sub->count("--m")) s.m = m;
            if (sub->count("--format")) s.format = format == "json" ? Format::Json : Format::Text;
            if (sub->get_option_no_throw("--jobs") && sub->count("--jobs")) s.jobs = jobs;
        }
        if (s.m < 3) throw DomainError("m must be >= 3");
        const std::optional<std::vector<std::int64_t>> primes =
            primes_text.empty() ? std::nullopt : std::optional(parse_prime_list(primes_text));

        std::ofstream file;
        if (!out_path.empty()) {
            file.open(out_path);
            if (!file) throw DomainError("cannot open output file " + out_path);
        }
        std::ostream& sink = out_path.empty() ? out : file;

        if (c_batch->parsed()) {
            const auto [a, b] = parse_range(range_text);
            const auto res = batch(a, b, with_verify, only_supported, s);
            for (const auto& o : res.documents) {
                if (s.format == Format::Json)
                    sink << o.document.dump() << "\n";
                else
                    sink << to_text(o.document) << "---\n";
            }
            sink << (s.format == Format::Json ? res.summary.dump() + "\n" : to_text(res.summary));
            return kOk;
        }

        Outcome o;
        if (c_classify->parsed())
            o = classify_command(d, primes, s);
        else if (c_verify->parsed())
            o = verify_command(d, primes, s);
        else
            o = compute(d, primes, with_verify, s);
        sink << render(o.document, s.format);
        return o.exit_code;
    } catch (const std::exception& e) {
        err << "genusfield: " << e.what() << "\n";
        return kInternalError;
    }
}

}  // namespace genusfield::cli
