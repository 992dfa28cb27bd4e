#include "doctest.h"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "eisen/cli/cli.hpp"
#include "eisen/tower/pi_tower.hpp"

using namespace eisen;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    Run r;
    r.code = cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::vector<std::string> flat_coeffs(const std::string& json) {
    const auto doc = nlohmann::json::parse(json);
    std::vector<std::string> out;
    for (const auto& c : doc.at("coefficients")) out.push_back(c.at("base_coeffs").at(0).get<std::string>());
    return out;
}

}  // namespace

TEST_CASE("minpoly-num documents") {
    const Run small = run({"minpoly-num", "--p", "3", "--m", "1", "--i", "1"});
    CHECK(small.code == cli::kPass);
    CHECK(flat_coeffs(small.out) == std::vector<std::string>{"-3", "9", "-6", "1"});

    const Run golden = run({"minpoly-num", "--p", "5", "--m", "1", "--i", "2"});
    REQUIRE(golden.code == cli::kPass);
    const auto c = flat_coeffs(golden.out);
    REQUIRE(c.size() == 26);
    CHECK(c[0] == "-5");
    CHECK(c[1] == "2500");
    CHECK(c[24] == "-100");
    CHECK(c[25] == "1");
    const auto doc = nlohmann::json::parse(golden.out);
    CHECK(nlohmann::ordered_json::parse(golden.out).begin().key() == "p");
    CHECK(doc.at("coefficients").at(3).at("j") == 3);
}

TEST_CASE("minpoly-num round-trips through a re-parser") {
    for (auto [p, m, i] : std::vector<std::tuple<unsigned long, unsigned, unsigned>>{{3, 2, 1}, {3, 1, 2}, {5, 2, 1}}) {
        const Run r = run({"minpoly-num", "--p", std::to_string(p), "--m", std::to_string(m), "--i", std::to_string(i)});
        REQUIRE(r.code == cli::kPass);
        const auto doc = nlohmann::json::parse(r.out);
        const RelMinPoly poly = minpoly_rel({p, m, i, 0});
        REQUIRE(doc.at("coefficients").size() == poly.coeffs.size());
        for (std::size_t j = 0; j < poly.coeffs.size(); ++j) {
            const auto& entry = doc.at("coefficients").at(j);
            CHECK(entry.at("j") == j);
            BaseElt parsed;
            for (const auto& s : entry.at("base_coeffs")) parsed.push_back(parse_rational(s.get<std::string>()));
            CHECK(parsed == poly.coeffs[j]);
        }
    }
}

TEST_CASE("verify exit codes") {
    CHECK(run({"verify", "eis13", "--p", "3", "--n", "2"}).code == cli::kPass);
    CHECK(run({"verify", "car11", "--r", "3", "--f", "Y", "--m", "1"}).code == cli::kPass);
    CHECK(run({"verify", "th11", "--p", "5", "--m", "1", "--i", "2"}).code == cli::kPass);
    CHECK(run({"verify", "nosuch"}).code == cli::kUsage);
    CHECK(run({"verify", "th11", "--p", "4"}).code == cli::kUsage);
    CHECK(run({"verify", "th11"}).code == cli::kUsage);
    CHECK(run({"verify", "car11", "--r", "6"}).code == cli::kUsage);
    CHECK(run({"verify", "car11", "--r", "3", "--f", "Y^2+2"}).code == cli::kUsage);  // reducible
    CHECK(run({"verify", "corbu", "--r", "3", "--f", "Y^2+1"}).code == cli::kUsage);
    const Run refused = run({"verify", "th11", "--p", "7", "--m", "2", "--i", "2"});
    CHECK(refused.code == cli::kCapRefused);
    CHECK(refused.out.empty());
    CHECK(refused.err.find("cap") != std::string::npos);
    CHECK(run({"verify", "th11", "--p", "7", "--m", "1", "--i", "2", "--cap", "10"}).code == cli::kCapRefused);
    CHECK(run({"nbound", "--pmax", "1000000"}).code == cli::kCapRefused);
    CHECK(run({"strace", "--p", "53", "--nmax", "2", "--strategy", "direct"}).code == cli::kCapRefused);
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"--help"}).code == cli::kPass);
}

TEST_CASE("every suite name is accepted") {
    for (const auto& s : cli::suite_names()) {
        const bool ff = s == "th11a" || s == "th11a-cong" || s == "cordiff2" || s == "lem10a" || s == "car11" ||
                        s == "corbu" || s == "conj-car12" || s == "disc";
        std::vector<std::string> args = {"verify", s, ff ? "--r" : "--p", "3"};
        if (s == "lem10" || s == "lem10a") args.insert(args.end(), {"--n", "2"});
        INFO(s);
        CHECK(run(args).code == cli::kPass);
    }
}

TEST_CASE("f accepts codes and Y-expressions") {
    const Run a = run({"verify", "lem10a", "--r", "3", "--f", "1,0,1", "--n", "2"});
    const Run b = run({"verify", "lem10a", "--r", "3", "--f", "Y^2 + 1", "--n", "2"});
    const Run c = run({"verify", "lem10a", "--p", "3", "--rho", "1", "--f", "1*Y^2+1", "--n", "2"});
    CHECK(a.code == cli::kPass);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    CHECK(run({"verify", "lem10a", "--r", "9", "--f", "Y", "--n", "2"}).code == cli::kPass);
    CHECK(run({"verify", "lem10a", "--r", "3", "--f", "Y^", "--n", "2"}).code == cli::kUsage);
    CHECK(run({"verify", "lem10a", "--r", "3", "--f", "3*Y", "--n", "2"}).code == cli::kUsage);
}

TEST_CASE("conjecture output is labelled experimental") {
    const Run text = run({"verify", "conj-car12", "--r", "3", "--f", "Y", "--m", "2", "--i", "2"});
    CHECK(text.code == cli::kPass);
    CHECK(text.out.find("EXPERIMENTAL") != std::string::npos);
    CHECK(text.out.find("MISMATCH") == std::string::npos);
    const Run json = run({"verify", "conj-car12", "--r", "3", "--m", "1", "--i", "2", "--format", "json"});
    const auto doc = nlohmann::json::parse(json.out);
    CHECK(doc.at("experimental") == true);
    CHECK(doc.at("verdicts").size() == 9);
}

TEST_CASE("strace and nbound tables") {
    const Run s11 = run({"strace", "--p", "11", "--nmax", "4"});
    CHECK(s11.code == cli::kPass);
    CHECK(s11.out.rfind("p,n,s_n,N0_reached,N_upper\n", 0) == 0);
    CHECK(s11.out.find("\n11,2,3,1,3\n") != std::string::npos);
    const Run s3 = run({"strace", "--p", "3", "--nmax", "3"});
    CHECK(s3.out == "p,n,s_n,N0_reached,N_upper\n3,0,0,0,\n3,1,1,1,\n3,2,1,1,\n3,3,1,1,\n");
    const Run nb = run({"nbound", "--pmax", "41"});
    CHECK(nb.out.find("\n41,12\n") != std::string::npos);
    CHECK(nb.out.find("\n11,3\n") != std::string::npos);
    CHECK(nb.out.find("\n23,7\n") != std::string::npos);
    CHECK(nb.out.rfind("p,N_upper\n5,", 0) == 0);
}

TEST_CASE("output is byte-identical across worker counts") {
    const std::vector<std::vector<std::string>> commands = {
        {"strace", "--p", "13", "--nmax", "4", "--strategy", "direct"},
        {"strace", "--p", "13", "--nmax", "4", "--strategy", "mitm"},
        {"strace", "--p", "7", "--nmax", "3", "--format", "json"},
        {"minpoly-num", "--p", "3", "--m", "2", "--i", "1"},
        {"verify", "th11", "--p", "3", "--m", "1", "--i", "2"},
        {"nbound", "--pmax", "60"},
    };
    for (auto args : commands) {
        auto one = args, four = args;
        one.insert(one.end(), {"--workers", "1"});
        four.insert(four.end(), {"--workers", "4"});
        const Run a = run(one), b = run(one), c = run(four);
        CHECK(a.code == cli::kPass);
        CHECK(a.out == b.out);
        CHECK(a.out == c.out);
    }
}

TEST_CASE("worker count from the environment") {
    ::setenv("EISEN_WORKERS", "3", 1);
    const Run env = run({"strace", "--p", "13", "--nmax", "3"});
    ::setenv("EISEN_WORKERS", "zero", 1);
    const Run bad = run({"strace", "--p", "13", "--nmax", "3"});
    ::unsetenv("EISEN_WORKERS");
    CHECK(env.code == cli::kPass);
    CHECK(env.out == run({"strace", "--p", "13", "--nmax", "3"}).out);
    CHECK(bad.code == cli::kUsage);
}

TEST_CASE("--output writes the document to a file") {
    const std::string path = "eisen_cli_output_test.csv";
    const Run r = run({"nbound", "--pmax", "13", "--output", path});
    CHECK(r.code == cli::kPass);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream contents;
    contents << in.rdbuf();
    CHECK(contents.str() == "p,N_upper\n5,1\n7,1\n11,3\n13,3\n");
    std::remove(path.c_str());
}
