#include "scalcurv/scalcurv.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

using namespace scalcurv;

#ifndef SCALCURV_CLI_PATH
#error "SCALCURV_CLI_PATH must point at the built CLI"
#endif
#ifndef SCALCURV_MANIFEST_DIR
#error "SCALCURV_MANIFEST_DIR must point at the sample manifests"
#endif

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args, bool merge_stderr = false) {
    std::string cmd = std::string(SCALCURV_CLI_PATH) + " " + args +
                      (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    std::size_t n;
    while ((n = ::fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
    int status = ::pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string sample(const char* file) {
    return std::string(SCALCURV_MANIFEST_DIR) + "/" + file;
}

struct ScratchFile {
    std::filesystem::path path;

    ScratchFile(const char* tag, const std::string& text) {
        path = std::filesystem::temp_directory_path() /
               (std::string("scalcurv_cli_") + tag + "_" + std::to_string(::getpid()) +
                ".json");
        std::ofstream out(path);
        out << text;
    }
    ~ScratchFile() {
        std::error_code ec;
        std::filesystem::remove(path, ec);
    }
    std::string str() const { return path.string(); }
};

}  // namespace

TEST_CASE("coeffs prints the polynomial table in partition order") {
    CliResult r = run_cli("coeffs ahat 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "p1^2: 7/5760\np2: -1/1440\n");

    CHECK(run_cli("coeffs l 1").output == "p1: 1/3\n");
    CHECK(run_cli("coeffs l 2").output == "p1^2: -1/45\np2: 7/45\n");
}

TEST_CASE("identical invocations produce byte-identical output") {
    for (const char* args : {"coeffs ahat 3", "report paper", "catalog-list"}) {
        CliResult a = run_cli(args);
        CliResult b = run_cli(args);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.output == b.output);
    }
}

TEST_CASE("machine coeffs round-trips") {
    CliResult r = run_cli("--machine coeffs ahat 2");
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j.at("series") == "ahat");
    CHECK(j.at("weight") == 2);
    CHECK(Rational::parse(j.at("terms").at("[1,1]").get<std::string>()) ==
          Rational(7, 5760));
    CHECK(Rational::parse(j.at("terms").at("[2]").get<std::string>()) ==
          Rational(-1, 1440));
}

TEST_CASE("genus of catalog entries") {
    CHECK(run_cli("genus ahat catalog:K3").output == "-2\n");
    CHECK(run_cli("genus ahat catalog:Bott").output == "1\n");
    CHECK(run_cli("genus l catalog:HP2").output == "1\n");
    CHECK(run_cli("genus ahat catalog:S7").output == "0\n");

    CliResult machine = run_cli("--machine genus l catalog:K3");
    nlohmann::json j = nlohmann::json::parse(machine.output);
    CHECK(j.at("manifold") == "K3");
    CHECK(j.at("value") == "16");
}

TEST_CASE("t-term, s, and tilde-s over the sample manifests") {
    CHECK(run_cli("t-term " + sample("cylinder_s7.json")).output == "0\n");
    CHECK(run_cli("t-term " + sample("e8_dim8.json")).output == "1/28\n");
    CHECK(run_cli("t-term " + sample("block_with_classes.json")).output == "-1\n");
    CHECK(run_cli("s " + sample("e8_dim8.json")).output == "1/28\n");
    CHECK(run_cli("tilde-s " + sample("e8_dim8.json") + " catalog:K3").output == "-1/14\n");
    CHECK(run_cli("tilde-s " + sample("e8_dim8.json") + " catalog:Bott").output == "1/28\n");
}

TEST_CASE("approx flag appends a marked decimal") {
    CliResult r = run_cli("--approx t-term " + sample("e8_dim8.json"));
    CHECK(r.output == "1/28 ~ 0.035714\n");
}

TEST_CASE("machine tilde-s carries the factorization") {
    CliResult r = run_cli("--machine tilde-s " + sample("e8_dim8.json") + " catalog:K3");
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    Rational value = Rational::parse(j.at("value").get<std::string>());
    Rational ahat = Rational::parse(j.at("ahat_factor").get<std::string>());
    Rational t = Rational::parse(j.at("t_term").get<std::string>());
    CHECK(value == Rational(-1, 14));
    CHECK(value == ahat * t);
}

TEST_CASE("rel-index warns on non-integer values but still reports them") {
    std::string args = sample("e8_dim8.json") + " " + sample("cylinder_s7.json") +
                       " catalog:Bott";
    CliResult plain = run_cli("rel-index " + args);
    CHECK(plain.exit_code == 0);
    CHECK(plain.output == "1/28\n");

    CliResult merged = run_cli("rel-index " + args, true);
    CHECK(merged.output.find("warning: relative index") != std::string::npos);

    CliResult machine = run_cli("--machine rel-index " + args);
    nlohmann::json j = nlohmann::json::parse(machine.output);
    CHECK(j.at("value") == "1/28");
    CHECK(j.at("is_integer") == false);
}

TEST_CASE("family lists the connected-sum invariants") {
    std::string args = "--base " + sample("cylinder_s7.json") + " --block " +
                       sample("e8_dim8.json") + " --n catalog:K3 --count 3";
    CliResult r = run_cli("family " + args);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "0, -1/14, -1/7\n");

    CliResult machine = run_cli("--machine family " + args);
    nlohmann::json j = nlohmann::json::parse(machine.output);
    REQUIRE(j.at("values").size() == 3);
    CHECK(j.at("values")[2].at("value") == "-1/7");

    std::string zero_block = "--base " + sample("cylinder_s7.json") + " --block " +
                             sample("cylinder_s7.json") + " --n catalog:K3 --count 3";
    CliResult err = run_cli("family " + zero_block, true);
    CHECK(err.exit_code == 1);
    CHECK(err.output.find("family does not separate components") != std::string::npos);
}

TEST_CASE("bp-order and thm04") {
    CHECK(run_cli("bp-order 2").output == "28\n");
    CHECK(run_cli("bp-order 3").output == "992\n");
    CHECK(run_cli("thm04 --n 2 --j 1 --q 0 --factor K3").output == "-2\n");
    CHECK(run_cli("thm04 --n 2 --j 1 --q 0 --factor Bott").output == "1\n");
    CHECK(run_cli("thm04 --n 2 --j 0 --q -3 --factor K3").output == "3/14\n");

    nlohmann::json j =
        nlohmann::json::parse(run_cli("--machine bp-order 4").output);
    CHECK(j.at("order") == "8128");
}

TEST_CASE("catalog-list names every built-in entry") {
    CliResult r = run_cli("catalog-list");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("K3 (dimension 4, signature 16)") != std::string::npos);
    CHECK(r.output.find("Bott (dimension 8, signature -224)") != std::string::npos);
    CHECK(r.output.find("S<n> is available for every n >= 1\n") != std::string::npos);

    nlohmann::json j = nlohmann::json::parse(run_cli("--machine catalog-list").output);
    CHECK(j.size() == builtin_catalog().size());
}

TEST_CASE("validate reports clause failures through the exit code") {
    CliResult pass = run_cli("validate catalog:S7");
    CHECK(pass.exit_code == 0);
    CHECK(pass.output == "PASS\n");

    CliResult fail = run_cli("validate catalog:K3");
    CHECK(fail.exit_code == 1);
    CHECK(fail.output.find("FAIL: ") == 0);
    CHECK(fail.output.find("dimension must be congruent to 3 modulo 4") != std::string::npos);

    CliResult product_pass = run_cli("validate catalog:S7 catalog:K3");
    CHECK(product_pass.exit_code == 0);
    CHECK(product_pass.output.find("PASS") == 0);
    CHECK(product_pass.output.find("warning: H^1(") != std::string::npos);

    nlohmann::json j = nlohmann::json::parse(
        run_cli("--machine validate catalog:S7 catalog:S4").output);
    CHECK(j.at("passed") == false);
    bool found = false;
    for (const auto& f : j.at("failures"))
        found = found || f.get<std::string>().find("nonzero Ahat genus") != std::string::npos;
    CHECK(found);
}

TEST_CASE("product prints the full characteristic record") {
    CliResult r = run_cli("product catalog:K3 catalog:K3");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "name: K3 x K3\n"
          "dimension: 8\n"
          "signature: 256\n"
          "pontrjagin numbers:\n"
          "  [1,1]: 4608\n"
          "  [2]: 2304\n"
          "is_spin: true\n"
          "rational_pontrjagin_classes_vanish: false\n"
          "admits_psc: false\n");

    CliResult machine = run_cli("--machine product catalog:K3 catalog:K3");
    CharacteristicData back =
        parse_manifold_manifest(nlohmann::json::parse(machine.output));
    CHECK(back == product(catalog("K3"), catalog("K3")));
}

TEST_CASE("override-psc requires a psc factor") {
    CliResult ok = run_cli("--machine product catalog:S4 catalog:K3 --override-psc");
    CHECK(ok.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(ok.output);
    CHECK(j.at("admits_psc") == true);

    CliResult noted = run_cli("product catalog:S4 catalog:K3 --override-psc", true);
    CHECK(noted.output.find("note: admits_psc set by override") != std::string::npos);

    CliResult refused = run_cli("product catalog:K3 catalog:K3 --override-psc", true);
    CHECK(refused.exit_code == 1);
    CHECK(refused.output.find("neither factor admits psc") != std::string::npos);

    CliResult plain = run_cli("--machine product catalog:S4 catalog:K3");
    CHECK(nlohmann::json::parse(plain.output).at("admits_psc") == false);
}

TEST_CASE("validation failures exit with code 1") {
    ScratchFile no_psc("nopsc",
                       "{\"name\": \"no psc\", \"dimension\": 8,"
                       " \"boundary\": \"catalog:S7\", \"psc_extension\": false}");
    CliResult s = run_cli("s " + no_psc.str(), true);
    CHECK(s.exit_code == 1);
    CHECK(s.output.find("error: analytic s-invariant path not implemented") !=
          std::string::npos);

    CliResult tilde = run_cli("tilde-s " + sample("e8_dim8.json") + " catalog:S4", true);
    CHECK(tilde.exit_code == 1);
    CHECK(tilde.output.find("second factor must have nonzero Ahat genus") !=
          std::string::npos);

    ScratchFile bad_boundary("badbdy",
                             "{\"name\": \"over K3xS3\", \"dimension\": 8,"
                             " \"boundary\": {\"name\": \"b\", \"dimension\": 7,"
                             " \"is_spin\": true}, \"psc_extension\": true}");
    CliResult t = run_cli("t-term " + bad_boundary.str(), true);
    CHECK(t.exit_code == 1);
    CHECK(t.output.find("must have vanishing real Pontrjagin classes") !=
          std::string::npos);
}

TEST_CASE("input errors exit with code 2") {
    struct Case {
        const char* label;
        std::string args;
        const char* expect;
    };
    ScratchFile bad_json("badjson", "{ oops");
    ScratchFile unknown_field("unknownfield",
                              "{\"name\": \"x\", \"dimension\": 7, \"color\": \"blue\"}");
    ScratchFile bad_key("badkey",
                        "{\"name\": \"x\", \"dimension\": 12,"
                        " \"pontrjagin_numbers\": {\"[1,2]\": \"1\"}}");
    const Case cases[] = {
        {"missing file", "t-term /nonexistent/w.json", "cannot open file"},
        {"bad json", "genus ahat " + bad_json.str(), "JSON parse error"},
        {"unknown field", "genus ahat " + unknown_field.str(), "unknown field 'color'"},
        {"bad partition key", "genus ahat " + bad_key.str(), "invalid partition key"},
        {"unknown catalog", "genus ahat catalog:Nope", "unknown catalog entry 'Nope'"},
        {"zero weight", "coeffs ahat 0", "error"},
        {"unknown series", "coeffs fred 2", "unknown series 'fred'"},
        {"thm04 n too small", "thm04 --n 1 --j 0 --q 0 --factor K3", "must be >= 2"},
        {"bp-order n too small", "bp-order 1", "must be >= 2"},
        {"unknown report", "report nonsense", "unknown report"},
        {"family count zero",
         "family --base " + sample("cylinder_s7.json") + " --block " +
             sample("e8_dim8.json") + " --n catalog:K3 --count 0",
         "count must be positive"},
    };
    for (const Case& c : cases) {
        INFO(c.label);
        CliResult r = run_cli(c.args, true);
        CHECK(r.exit_code == 2);
        CHECK(r.output.find(c.expect) != std::string::npos);
    }
}

TEST_CASE("usage errors exit with code 2, help with 0") {
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("coeffs ahat").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("coeffs --help").exit_code == 0);
}

TEST_CASE("report paper passes and prints one line per check") {
    CliResult r = run_cli("report paper");
    CHECK(r.exit_code == 0);
    std::size_t pass_lines = 0, pos = 0;
    while ((pos = r.output.find("PASS  ", pos)) != std::string::npos) {
        ++pass_lines;
        pos += 6;
    }
    CHECK(pass_lines == 9);
    CHECK(r.output.find("FAIL") == std::string::npos);
    CHECK(r.output.find("all checks passed\n") != std::string::npos);

    nlohmann::json j = nlohmann::json::parse(run_cli("--machine report paper").output);
    REQUIRE(j.size() == 9);
    for (const auto& c : j) CHECK(c.at("passed") == true);
}
