#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "hbsum/sweep.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs the tool through the shell; env_prefix may set variables, e.g.
// "HBSUM_MAX_DEGREE=3".
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix.empty() ? std::string() : env_prefix + " ";
    cmd += std::string(HBSUM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/hbsum_cli_") + name;
    std::ofstream out(path);
    REQUIRE(out.good());
    out << content;
    return path;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("eval prints exact values") {
    RunResult r = run_cli("eval --sum dedekind --a 1 --c 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1/18\n");

    r = run_cli("eval --sum s5 --a 1 --c 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0\n");

    r = run_cli("eval --sum S --a 1 --c 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1\n");

    r = run_cli("eval --sum S35pq --p 1 --q 1 --a 1 --b 1 --c 2 --x 0 --y 0 --z 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "-1/2\n");

    // The alternating order-(1,1) sum telescopes to zero here; the matching
    // minus-a-half value belongs to the S35 family above.
    r = run_cli("eval --sum Spq --p 1 --q 1 --a 1 --b 1 --c 2 --x 0 --y 0 --z 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0\n");

    r = run_cli("eval --sum hwz --p 2 --q 3 --a 3 --b 4 --c 5 --x 1/2 --y 1/3 --z 1/4");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2591/810000\n");

    r = run_cli("eval --sum Spq-bar --p 1 --q 1 --a 1 --b 1 --c 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "-1\n");
}

TEST_CASE("eval flags shifts defaulting to zero") {
    RunResult with = run_cli("eval --sum S2pq --p 1 --q 1 --a 1 --b 1 --c 2 --x 0 --y 0 --z 0");
    RunResult without = run_cli("eval --sum S2pq --p 1 --q 1 --a 1 --b 1 --c 2");
    CHECK(with.exit_code == 0);
    CHECK(without.exit_code == 0);
    CHECK(with.out == without.out);
    CHECK(with.out == "1/4\n");
}

TEST_CASE("eval usage and precondition exits") {
    CHECK(run_cli("eval --sum nope --a 1 --c 2").exit_code == 2);
    CHECK(run_cli("eval --sum dedekind --a 1").exit_code == 2);
    CHECK(run_cli("eval --sum dedekind --a 1 --c 0").exit_code == 3);
    CHECK(run_cli("eval --sum Spq --p 1 --q 1 --a 0 --b 1 --c 2").exit_code == 3);
    CHECK(run_cli("eval --sum dedekind --a 1/2 --c 3").exit_code == 2);
    CHECK(run_cli("eval --sum hwz --p 2 --q 2 --a 1 --b 1 --c 2 --x 1.5").exit_code == 2);
    CHECK(run_cli("eval").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("degree cap applies to eval tables") {
    RunResult capped = run_cli("eval --sum hwz --p 5 --q 5 --a 1 --b 1 --c 2",
                               "HBSUM_MAX_DEGREE=3");
    CHECK(capped.exit_code == 3);

    RunResult roomy = run_cli("eval --sum hwz --p 5 --q 5 --a 1 --b 1 --c 2",
                              "HBSUM_MAX_DEGREE=10");
    RunResult free_run = run_cli("eval --sum hwz --p 5 --q 5 --a 1 --b 1 --c 2");
    CHECK(roomy.exit_code == 0);
    CHECK(free_run.exit_code == 0);
    CHECK(roomy.out == free_run.out);
}

TEST_CASE("check reports verdicts with contract exit codes") {
    RunResult r = run_cli("check --identity hb-5 --a 3 --c 5");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "applicable true"));
    CHECK(contains(r.out, "residual 0"));
    CHECK(contains(r.out, "verdict pass"));

    r = run_cli("check --identity hb-5 --a 2 --c 5");
    CHECK(r.exit_code == 3);
    CHECK(contains(r.out, "applicable false"));
    CHECK(contains(r.out, "verdict not-applicable"));

    r = run_cli("check --identity eq-0 --p 3 --q 2 --X 1/7 --Y 2/7");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "verdict pass"));

    CHECK(run_cli("check --identity nope --a 1 --c 2").exit_code == 2);
    CHECK(run_cli("check --identity hb-5 --a 3").exit_code == 2);
    CHECK(run_cli("check --identity rp-S --p 3 --q 3 --a 1 --b 1 --c 2 --x 0 --y 0 --z 0",
                  "HBSUM_MAX_DEGREE=2")
              .exit_code == 3);
}

TEST_CASE("sweep with an explicit small config") {
    std::string cfg = write_temp("small.json", R"({
        "identities": ["classical-dedekind", "hb-0"],
        "modulus_max": 6,
        "order_max": 1,
        "shift_denominators": [1],
        "samples_per_identity": "exhaustive",
        "seed": 7
    })");
    std::string out = "/tmp/hbsum_cli_small_report.json";
    RunResult r = run_cli("sweep --config " + cfg + " --out " + out);
    CHECK(r.exit_code == 0);

    nlohmann::json j = nlohmann::json::parse(read_file(out));
    CHECK(j.contains("version"));
    CHECK(j.contains("config"));
    CHECK(j.contains("results"));
    CHECK(j["pass"] == true);
    REQUIRE(j["results"].size() == 2);
    CHECK(j["results"][0]["id"] == "classical-dedekind");
    CHECK(j["results"][0]["points_applicable"].get<long>() > 0);
    CHECK(j["results"][0]["failures"].empty());
    CHECK(j["results"][1]["id"] == "hb-0");
    CHECK(j["config"]["seed"] == 7);
}

TEST_CASE("sweep rejects malformed configs") {
    CHECK(run_cli("sweep --config " + write_temp("broken.json", "not json")).exit_code == 2);
    CHECK(run_cli("sweep --config " +
                  write_temp("unknown_id.json", R"({"identities": ["nope"]})"))
              .exit_code == 2);
    CHECK(run_cli("sweep --config " + write_temp("odd_d.json", R"({"d_values": [3]})"))
              .exit_code == 2);
    CHECK(run_cli("sweep --config /tmp/hbsum_cli_does_not_exist.json").exit_code == 2);
}

TEST_CASE("default sweep passes and is byte-deterministic") {
    std::string out1 = "/tmp/hbsum_cli_default1.json";
    std::string out2 = "/tmp/hbsum_cli_default2.json";
    CHECK(run_cli("sweep --out " + out1).exit_code == 0);
    CHECK(run_cli("sweep --out " + out2).exit_code == 0);
    std::string first = read_file(out1);
    CHECK(first == read_file(out2));

    // The bundled config file matches the built-in defaults.
    std::string bundled = std::string(HBSUM_SOURCE_DIR) + "/configs/default_sweep.json";
    std::string out3 = "/tmp/hbsum_cli_default3.json";
    CHECK(run_cli("sweep --config " + bundled + " --out " + out3).exit_code == 0);
    CHECK(first == read_file(out3));

    nlohmann::json j = nlohmann::json::parse(first);
    CHECK(j["pass"] == true);
    CHECK(j["results"].size() == 35);
    for (const auto& res : j["results"]) CHECK(res["failures"].empty());
}

TEST_CASE("sweep text format summarizes per identity") {
    std::string cfg = write_temp("text.json", R"({
        "identities": ["classical-dedekind"],
        "modulus_max": 4,
        "shift_denominators": [1],
        "samples_per_identity": "exhaustive"
    })");
    RunResult r = run_cli("sweep --format text --config " + cfg);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "classical-dedekind:"));
    CHECK(contains(r.out, "0 failures"));
    CHECK(r.out.rfind("pass\n") == r.out.size() - 5);
}

TEST_CASE("series reports the branch and residual coefficients") {
    RunResult r = run_cli("series --a 1 --b 1 --c 1 --d 2 --degree 4");
    CHECK(r.exit_code == 1);  // ambiguous parity never satisfies the check
    CHECK(contains(r.out, "branch ambiguous"));
    CHECK(contains(r.out, "residual zero"));

    r = run_cli("series --a 1 --b 1 --c 1 --d 2 --x 1/3 --degree 4");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "branch non-member"));
    CHECK(contains(r.out, "rhs 0"));
    CHECK(contains(r.out, "residual zero"));

    r = run_cli("series --a 1 --b 1 --c 2 --d 2 --degree 3");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.out, "branch member"));
    CHECK(contains(r.out, "parity even"));
    CHECK(contains(r.out, "rhs -1/4"));
    CHECK(contains(r.out, "0 0 -1/4"));

    CHECK(run_cli("series --a 1 --b 1 --c 1 --d 3").exit_code == 3);
    CHECK(run_cli("series --a 1 --b 1 --c 1 --d 2 --theorem nope").exit_code == 2);
    CHECK(run_cli("series --a 1 --b 1 --c 1 --d 2 --degree 6", "HBSUM_MAX_DEGREE=3").exit_code ==
          3);
}

TEST_CASE("sweep covering series points flags the reciprocity gap") {
    std::string cfg = write_temp("omega.json", R"({
        "identities": ["classical-dedekind"],
        "modulus_max": 2,
        "order_max": 1,
        "shift_denominators": [1, 2],
        "samples_per_identity": "exhaustive",
        "series_degree": 2,
        "d_values": [2]
    })");
    std::string out = "/tmp/hbsum_cli_omega_report.json";
    RunResult r = run_cli("sweep --config " + cfg + " --out " + out);
    CHECK(r.exit_code == 1);

    nlohmann::json j = nlohmann::json::parse(read_file(out));
    CHECK(j["pass"] == false);
    REQUIRE(j["results"].size() == 2);
    const auto& omega = j["results"][1];
    CHECK(omega["id"] == "omega-g-rp");
    CHECK(omega["indeterminate"].get<long>() > 0);
    CHECK(omega["failures"].size() > 0);
    const auto& f = omega["failures"][0];
    CHECK(f.contains("params"));
    CHECK(f.contains("residual"));
    CHECK(f["params"].contains("d"));
}

TEST_CASE("parse_campaign_config round-trips through the report") {
    hbsum::CampaignConfig cfg = hbsum::parse_campaign_config(R"({
        "identities": ["hb-0", "hb-5"],
        "modulus_max": 9,
        "order_max": 2,
        "shift_denominators": [1, 4],
        "samples_per_identity": 11,
        "seed": 99,
        "series_degree": 3,
        "d_values": [2, 4]
    })");
    CHECK(cfg.identities.size() == 2);
    CHECK(cfg.bounds.modulus_max == 9);
    CHECK(cfg.bounds.order_max == 2);
    CHECK(cfg.bounds.shift_denominators == std::vector<long>{1, 4});
    REQUIRE(cfg.samples_per_identity.has_value());
    CHECK(*cfg.samples_per_identity == 11);
    CHECK(cfg.seed == 99);
    CHECK(cfg.series_degree == 3);
    CHECK(cfg.d_values == std::vector<long>{2, 4});
    CHECK(hbsum::campaign_table_degree(cfg) == 4);

    CHECK_THROWS_AS(hbsum::parse_campaign_config("{"), std::runtime_error);
    CHECK_THROWS_AS(hbsum::parse_campaign_config(R"({"modulus_max": 0})"), std::runtime_error);
    CHECK_THROWS_AS(hbsum::parse_campaign_config(R"({"shift_denominators": []})"),
                    std::runtime_error);
    CHECK_THROWS_AS(hbsum::parse_campaign_config(R"({"samples_per_identity": 0})"),
                    std::runtime_error);
    CHECK_THROWS_AS(hbsum::parse_campaign_config(R"({"identities": "some"})"),
                    std::runtime_error);
}

TEST_CASE("default-config constant matches the exhaustive flag semantics") {
    hbsum::CampaignConfig cfg = hbsum::parse_campaign_config(R"({
        "samples_per_identity": "exhaustive"
    })");
    CHECK_FALSE(cfg.samples_per_identity.has_value());
    CHECK(cfg.identities.empty());
    CHECK(cfg.d_values.empty());
}
