#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "commands.hpp"
#include "document.hpp"
#include "genusfield/errors.hpp"
#include "genusfield/genus.hpp"

using namespace genusfield;
using namespace genusfield::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "genusfield");
    std::vector<const char*> argv;
    for (auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

const std::filesystem::path kGolden = GENUSFIELD_GOLDEN_DIR;

// Independent flattening of a JSON document into (path, value) leaves.
void leaves(const Json& v, const std::string& path, std::multiset<std::string>& out) {
    if (v.is_object()) {
        for (const auto& [k, c] : v.items()) leaves(c, path.empty() ? k : path + "." + k, out);
    } else if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i) leaves(v[i], path + "[" + std::to_string(i) + "]", out);
    } else {
        out.insert(path + "=" + (v.is_string() ? v.get<std::string>() : v.dump()));
    }
}

// Reads the text rendering back into the same (path, value) leaves.
std::multiset<std::string> text_leaves(const std::string& text) {
    std::multiset<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto sep = line.find(": ");
        REQUIRE(sep != std::string::npos);
        const std::string path = line.substr(0, sep);
        std::string value = line.substr(sep + 2);
        if (value.size() >= 2 && value.front() == '[' && value.back() == ']') {
            value = value.substr(1, value.size() - 2);
            std::size_t i = 0, start = 0;
            while (!value.empty() && start <= value.size()) {
                const auto comma = value.find(", ", start);
                const auto item = value.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
                out.insert(path + "[" + std::to_string(i++) + "]=" + item);
                if (comma == std::string::npos) break;
                start = comma + 2;
            }
        } else if (value != "{}") {
            out.insert(path + "=" + value);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("golden documents are byte-exact") {
    const std::vector<std::pair<std::vector<std::string>, std::string>> cases{
        {{"compute", "--d", "65", "--format", "json"}, "compute_65.json"},
        {{"compute", "--d", "33", "--format", "json"}, "compute_33.json"},
        {{"compute", "--d", "41", "--format", "json"}, "compute_41.json"},
        {{"compute", "--d", "615", "--format", "json"}, "compute_615.json"},
        {{"compute", "--d", "15", "--format", "json"}, "compute_15.json"},
        {{"compute", "--d", "5", "--format", "json"}, "compute_5.json"},
        {{"compute", "--d", "195", "--format", "json"}, "compute_195.json"},
        {{"compute", "--d", "105", "--format", "json"}, "compute_105.json"},
        {{"classify", "--d", "165", "--format", "json"}, "classify_165.json"},
        {{"verify", "--d", "615", "--format", "json"}, "verify_615.json"},
        {{"compute", "--d", "65"}, "compute_65.txt"},
    };
    for (const auto& [args, file] : cases) {
        CAPTURE(file);
        CHECK(run(args).out == slurp(kGolden / file));
    }
}

TEST_CASE("exit codes") {
    CHECK(run({"compute", "--d", "65"}).code == kOk);
    CHECK(run({"compute", "--d", "5", "--m", "4"}).code == kOk);
    CHECK(run({"compute", "--d", "105"}).code == kUnsupportedPrime);
    CHECK(run({"compute", "--d", "165"}).code == kNotCovered);
    CHECK(run({"compute", "--d", "195"}).code == kNotCovered);
    CHECK(run({"classify", "--d", "165"}).code == kNotCovered);
    CHECK(run({"compute", "--d", "45"}).code == kDegenerate);
    CHECK(run({"compute", "--d", "1"}).code == kDegenerate);
    CHECK(run({"compute", "--d", "0"}).code == kDegenerate);
    CHECK(run({"compute", "--d", "-1"}).code == kDegenerate);
    CHECK(run({"verify", "--d", "41"}).code == kOk);
    CHECK(run({"verify", "--d", "15"}).code == kOk);
    CHECK(run({"verify", "--d", "65"}).code == kOk);
    CHECK(run({"verify", "--d", "615"}).code == kVerificationFailed);
    CHECK(run({"compute", "--d", "615", "--verify"}).code == kVerificationFailed);
    CHECK(run({"compute", "--d", "615", "--m", "2"}).code != kOk);
    CHECK(run({"compute"}).code != kOk);
    CHECK(run({"frobnicate", "--d", "5"}).code != kOk);
}

TEST_CASE("compute examples") {
    auto doc = Json::parse(run({"compute", "--d", "65", "--m", "3", "--format", "json"}).out);
    CHECK(doc["signature"]["case_id"] == 1);
    CHECK(doc["expected_rank"] == 2);
    CHECK(doc["generators"][1]["display"] == "1+8*sqrt(-1)");
    CHECK(doc["verification"].is_null());

    doc = Json::parse(run({"compute", "--d", "5", "--m", "4", "--format", "json"}).out);
    CHECK(doc["signature"]["case_id"] == 14);
    CHECK(doc["generators"].empty());
    CHECK(doc["notes"][0].get<std::string>().find("E = L") != std::string::npos);
    CHECK(doc["field_description"] == "Q(zeta_{2^4}, sqrt(5))");

    doc = Json::parse(run({"compute", "--d", "105", "--format", "json"}).out);
    CHECK(doc["error"]["kind"] == "UnsupportedPrime");
    CHECK(doc["error"]["exit_code"] == 2);
}

TEST_CASE("verify examples") {
    auto doc = Json::parse(run({"verify", "--d", "615", "--format", "json"}).out);
    CHECK(doc["verification"]["generators"].size() == 5);
    CHECK(doc["verification"]["count_matches_rank"] == true);
    CHECK(doc["verification"]["independence"]["ok"] == false);

    doc = Json::parse(run({"verify", "--d", "15", "--format", "json"}).out);
    CHECK(doc["verification"]["overall"] == true);
    CHECK(doc["notes"][0].get<std::string>().find("case 13: sqrt(3) equivalent") == 0);
}

TEST_CASE("classify examples") {
    auto doc = Json::parse(run({"classify", "--d", "615", "--format", "json"}).out);
    CHECK(doc["signature"]["r"] == 1);
    CHECK(doc["signature"]["s"] == 1);
    CHECK(doc["signature"]["t"] == 1);
    CHECK(doc["signature"]["case_id"] == 10);
    CHECK_FALSE(doc.contains("generators"));

    doc = Json::parse(run({"classify", "--d", "165", "--format", "json"}).out);
    CHECK(doc["signature"]["case_id"] == "NotCovered");
    CHECK(doc["notes"][0].get<std::string>().find("case list 1-15") != std::string::npos);

    doc = Json::parse(run({"classify", "--d", "41", "--format", "json"}).out);
    CHECK(doc["signature"]["case_id"] == 15);
    CHECK(doc["signature"]["quartic_signs"] == Json::array({-1}));
}

TEST_CASE("text and JSON carry the same fields") {
    for (const std::string cmd : {"compute", "verify", "classify"})
        for (int d : {65, 33, 41, 615, 15, 5, 165, 105, 45, 1, 3 * 11 * 19, 41 * 73, -65}) {
            CAPTURE(cmd);
            CAPTURE(d);
            const auto text = run({cmd, "--d", std::to_string(d)});
            const auto json = run({cmd, "--d", std::to_string(d), "--format", "json"});
            CHECK(text.code == json.code);
            std::multiset<std::string> expected;
            leaves(Json::parse(json.out), "", expected);
            CHECK(text_leaves(text.out) == expected);
        }
}

TEST_CASE("JSON output is byte-stable") {
    for (int i = 0; i < 3; ++i)
        CHECK(run({"verify", "--d", "615", "--format", "json"}).out == run({"verify", "--d", "615", "--format", "json"}).out);
}

TEST_CASE("display strings round-trip") {
    for (std::int64_t d = 3; d < 6000; d += 2) {
        try {
            for (const auto& g : genus::construct(d).generators) {
                const auto text = display(g.element);
                REQUIRE(parse_display(text) == g.element);
            }
        } catch (const Error&) {
        }
    }
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> coord(-1'000'000'000, 1'000'000'000);
    for (auto kind : {genus::ElementKind::Gaussian, genus::ElementKind::Sqrt2, genus::ElementKind::SqrtMinus2})
        for (int i = 0; i < 2000; ++i) {
            const genus::GeneratorElement e{kind, coord(rng), coord(rng)};
            REQUIRE(parse_display(display(e)) == e);
        }
    CHECK(display({genus::ElementKind::SqrtMinus2, -3, 4}) == "-3+4*sqrt(-2)");
    CHECK(display({genus::ElementKind::Sqrt2, 13, -8}) == "13-8*sqrt(2)");
    CHECK_THROWS_AS(parse_display("3+4*sqrt(5)"), DomainError);
    CHECK_THROWS_AS(parse_display("x"), DomainError);
}

TEST_CASE("batch examples") {
    Settings s;
    auto res = batch(2, 100, false, false, s);
    std::set<std::int64_t> ok;
    for (const auto& o : res.documents)
        if (o.exit_code == kOk) ok.insert(o.document["input"]["d"].get<std::int64_t>());
    for (std::int64_t d : {5, 13, 15, 33, 41, 65}) CHECK(ok.count(d));
    CHECK(res.summary["summary"]["scanned"] == 99);

    res = batch(2, 10, false, true, s);
    std::vector<std::int64_t> ds;
    for (const auto& o : res.documents) ds.push_back(o.document["input"]["d"].get<std::int64_t>());
    CHECK(ds == std::vector<std::int64_t>{3, 5});

    res = batch(10, 5, false, false, s);
    CHECK(res.documents.empty());
    CHECK(res.summary["summary"]["scanned"] == 0);
    const auto empty = run({"batch", "--range", "10:5", "--format", "json"});
    CHECK(empty.code == kOk);
    CHECK(Json::parse(empty.out)["summary"]["documents"] == 0);
}

TEST_CASE("batch summary counts") {
    Settings s;
    const auto res = batch(1, 2000, true, true, s);
    const auto& sum = res.summary["summary"];
    int by_case = 0;
    for (const auto& [k, v] : sum["by_case"].items()) by_case += v.get<int>();
    CHECK(by_case + sum["not_covered"].get<int>() == static_cast<int>(res.documents.size()));
    CHECK(sum["scanned"].get<int>() == by_case + sum["not_covered"].get<int>() + sum["unsupported_prime"].get<int>() +
                                           sum["not_square_free"].get<int>() + sum["degenerate"].get<int>() +
                                           sum["internal_error"].get<int>());
    CHECK(sum["internal_error"] == 0);
    CHECK(sum["verification"]["checked"] == by_case);
}

TEST_CASE("batch with --jobs matches the serial run") {
    Settings one;
    Settings many;
    many.jobs = 6;
    const auto a = batch(1, 4000, true, false, one);
    const auto b = batch(1, 4000, true, false, many);
    REQUIRE(a.documents.size() == b.documents.size());
    for (std::size_t i = 0; i < a.documents.size(); ++i) REQUIRE(a.documents[i].document == b.documents[i].document);
    CHECK(a.summary == b.summary);
    CHECK(run({"batch", "--range", "1:500", "--jobs", "4", "--format", "json"}).out ==
          run({"batch", "--range", "1:500", "--format", "json"}).out);
}

TEST_CASE("outputs at different m differ only in m and the field description") {
    for (int d : {65, 33, 41, 615, 15, 5, 3 * 11 * 19, 41 * 73}) {
        auto base = Json::parse(run({"verify", "--d", std::to_string(d), "--format", "json"}).out);
        for (int m : {4, 8}) {
            auto other = Json::parse(run({"verify", "--d", std::to_string(d), "--m", std::to_string(m), "--format", "json"}).out);
            CHECK(other["input"]["m"] == m);
            other["input"]["m"] = 3;
            auto desc = other["field_description"].get<std::string>();
            const std::string tag = "zeta_{2^" + std::to_string(m) + "}";
            desc.replace(desc.find(tag), tag.size(), "zeta_{2^3}");
            other["field_description"] = desc;
            CHECK(other == base);
        }
    }
}

TEST_CASE("--primes supplies the factorization") {
    CHECK(run({"compute", "--d", "615", "--primes", "41,3,5", "--format", "json"}).out ==
          run({"compute", "--d", "615", "--format", "json"}).out);
    CHECK(run({"compute", "--d", "615", "--primes", "3,5"}).code == kInternalError);
    CHECK(run({"compute", "--d", "615", "--primes", "3,x,41"}).code == kInternalError);
}

TEST_CASE("config file and --out") {
    const auto dir = std::filesystem::temp_directory_path() / "genusfield_cli_test";
    std::filesystem::create_directories(dir);
    const auto cfg = dir / "cfg.json";
    std::ofstream(cfg) << R"({"m": 5, "format": "json", "pell_bound_factor": 4.0})";
    auto r = run({"compute", "--d", "41", "--config", cfg.string()});
    CHECK(r.code == kOk);
    auto doc = Json::parse(r.out);
    CHECK(doc["input"]["m"] == 5);
    // Flags override the file.
    doc = Json::parse(run({"compute", "--d", "41", "--config", cfg.string(), "--m", "6"}).out);
    CHECK(doc["input"]["m"] == 6);

    std::ofstream(cfg) << R"({"colour": "blue"})";
    r = run({"compute", "--d", "41", "--config", cfg.string()});
    CHECK(r.code == kInternalError);
    CHECK(r.err.find("colour") != std::string::npos);

    const auto out = dir / "out.json";
    r = run({"compute", "--d", "65", "--format", "json", "--out", out.string()});
    CHECK(r.code == kOk);
    CHECK(r.out.empty());
    CHECK(slurp(out) == slurp(kGolden / "compute_65.json"));
    std::filesystem::remove_all(dir);
}
