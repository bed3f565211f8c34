#include <catch2/catch_amalgamated.hpp>

#include <string>

#include <json.hpp>

#include "test_support.hpp"

using nlohmann::json;
using testsupport::run_cli;

TEST_CASE("ring info reports dimensions and parameters", "[cli]") {
    auto res = run_cli("ring info --fermat --d 5 --vars 2");
    REQUIRE(res.exit_code == 0);
    auto r = json::parse(res.out);
    CHECK(r["command"] == "ring info");
    CHECK(r["params"]["d"] == 5);
    CHECK(r["params"]["vars"] == 2);
    CHECK(r["field_mode"]["kind"] == "rational");
    CHECK(r["results"]["socle_degree"] == 6);
    CHECK(r["results"]["smooth"] == true);
    CHECK(r["results"]["dims"] == json::array({1, 2, 3, 4, 3, 2, 1}));
    CHECK(r["probabilistic"] == false);
}

TEST_CASE("table subcommand reproduces the closed form", "[cli]") {
    auto res = run_cli("yukawa table --d 5 --n 4");
    REQUIRE(res.exit_code == 0);
    auto r = json::parse(res.out);
    CHECK(r["results"]["1"] == 2);
    CHECK(r["results"]["2"] == 1);
    CHECK(r["results"]["3"] == 1);
    for (const auto& c : r["checks"]) CHECK(c["pass"] == true);
}

TEST_CASE("eigen rank vector of the binary quintic", "[cli]") {
    auto res = run_cli("hodge eigen --d 5 --base-vars 2 --i 1");
    REQUIRE(res.exit_code == 0);
    auto r = json::parse(res.out);
    CHECK(r["results"] == json::array({3, 0}));

    auto all = run_cli("hodge eigen --d 5 --base-vars 2 --all");
    REQUIRE(all.exit_code == 0);
    auto ra = json::parse(all.out);
    CHECK(ra["results"]["1"] == json::array({3, 0}));
    CHECK(ra["results"]["4"] == json::array({0, 3}));
}

TEST_CASE("singular input exits with the certificate code", "[cli]") {
    auto res = run_cli("ring info --form \"x0^2*x1\"");
    CHECK(res.exit_code == 3);
}

TEST_CASE("usage problems exit with code one", "[cli]") {
    CHECK(run_cli("ring info").exit_code == 1);                       // no selector
    CHECK(run_cli("ring info --fermat --d 5").exit_code == 1);        // missing --vars
    CHECK(run_cli("verify nosuchsuite --d 4 --n 3").exit_code == 1);  // unknown suite
    CHECK(run_cli("ring info --fermat --d 5 --vars 2 --csv").exit_code == 1);
    CHECK(run_cli("hodge eigen --d 5 --base-vars 2 --i 9").exit_code == 1);
    CHECK(run_cli("ring info --form \"x0^2 + x1^3\"").exit_code == 1);  // parse error
}

TEST_CASE("failed verification exits with code two", "[cli]") {
    auto res = run_cli("verify hilbert --form \"x0^2*x1\"");
    CHECK(res.exit_code == 2);
    auto r = json::parse(res.out);
    CHECK(r["results"]["failed"] == 1);
    CHECK(r["checks"][0]["name"] == "smoothness_certificate");

    // strict growth fails on any cubic surface: dims 1, 3, 3, 1
    auto cubic = run_cli("verify hilbert --fermat --d 3 --vars 3");
    CHECK(cubic.exit_code == 2);
    auto rc = json::parse(cubic.out);
    bool found = false;
    for (const auto& c : rc["checks"])
        if (c["name"] == "strict_growth_deg_2") {
            found = true;
            CHECK(c["pass"] == false);
        } else {
            CHECK(c["pass"] == true);
        }
    CHECK(found);
}

TEST_CASE("degree cap exits with the limit code", "[cli]") {
    CHECK(run_cli("ring info --fermat --d 12 --vars 8").exit_code == 4);
    CHECK(run_cli("ring info --fermat --d 12 --vars 8 --max-degree 100").exit_code == 0);
}

TEST_CASE("verification suites pass end to end", "[cli]") {
    for (const char* cmd :
         {"verify macaulay --fermat --d 4 --vars 3", "verify hilbert --random --d 4 --vars 3 --seed 1",
          "verify koszul --fermat --d 4 --vars 3", "verify tower --fermat --d 4 --vars 3",
          "verify lemma18 --fermat --d 4 --vars 3", "verify prop64 --d 5 --n 2",
          "verify theorem65 --d 5 --n 4"}) {
        auto res = run_cli(cmd);
        INFO(cmd);
        REQUIRE(res.exit_code == 0);
        auto r = json::parse(res.out);
        CHECK(r["results"]["failed"] == 0);
        CHECK(r["checks"].size() == r["results"]["total"].get<std::size_t>());
    }
}

TEST_CASE("output is byte-identical across runs", "[cli]") {
    for (const char* cmd :
         {"ring info --random --d 4 --vars 3 --seed 9", "yukawa profile --fermat --d 5 --vars 3",
          "verify macaulay --fermat --d 4 --vars 3"}) {
        auto a = run_cli(cmd);
        auto b = run_cli(cmd);
        INFO(cmd);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("csv rendering for tables and profiles", "[cli]") {
    auto table = run_cli("yukawa table --d 5 --n 4 --csv");
    REQUIRE(table.exit_code == 0);
    CHECK(table.out.find("level,computed,closed_form,match,base") == 0);
    CHECK(table.out.find("1,2,2,true") != std::string::npos);
    CHECK(table.out.find("3,1,1,true") != std::string::npos);

    auto prof = run_cli("yukawa profile --fermat --d 4 --vars 3 --csv");
    REQUIRE(prof.exit_code == 0);
    CHECK(prof.out.find("mu,length") == 0);
    CHECK(prof.out.find("\n0,1\n") != std::string::npos);
    CHECK(prof.out.find("\n6,0") != std::string::npos);
}

TEST_CASE("tower length request matches the table entry", "[cli]") {
    auto res = run_cli("yukawa length --tower --d 5 --n 4 --levels 3");
    REQUIRE(res.exit_code == 0);
    auto r = json::parse(res.out);
    CHECK(r["results"]["length"] == 1);
    CHECK(r["results"]["dim_V"] == 2);
    CHECK(r["results"]["hypothesis_ok"] == true);

    auto plain = run_cli("yukawa length --fermat --d 5 --vars 5");
    REQUIRE(plain.exit_code == 0);
    auto rp = json::parse(plain.out);
    CHECK(rp["results"]["length"] == 3);
    CHECK(rp["results"]["mu"] == 0);
}

TEST_CASE("prime field mode is honoured and flagged", "[cli]") {
    auto res = run_cli("ring info --random --d 4 --vars 3 --seed 1 --field prime");
    REQUIRE(res.exit_code == 0);
    auto r = json::parse(res.out);
    CHECK(r["field_mode"]["kind"] == "prime");
    CHECK(r["field_mode"]["p"] == 2147483647);
    CHECK(r["probabilistic"] == true);
    CHECK(r["results"]["dims"] == json::array({1, 3, 6, 7, 6, 3, 1}));

    // monomial Jacobian ideals stay exact in prime mode
    auto fer = run_cli("ring info --fermat --d 4 --vars 3 --field prime:1048583");
    REQUIRE(fer.exit_code == 0);
    auto rf = json::parse(fer.out);
    CHECK(rf["field_mode"]["p"] == 1048583);
    CHECK(rf["probabilistic"] == false);

    CHECK(run_cli("ring info --fermat --d 4 --vars 3 --field prime:6").exit_code == 1);
    CHECK(run_cli("ring info --fermat --d 4 --vars 3 --field nonsense").exit_code == 1);
}

TEST_CASE("hodge subcommands agree with the library values", "[cli]") {
    auto prim = run_cli("hodge primitive --fermat --d 5 --vars 5");
    REQUIRE(prim.exit_code == 0);
    auto rp = json::parse(prim.out);
    CHECK(rp["results"]["h"] == json::array({1, 101, 101, 1}));

    auto dia = run_cli("hodge diamond --fermat --d 4 --vars 4");
    REQUIRE(dia.exit_code == 0);
    auto rd = json::parse(dia.out);
    CHECK(rd["results"]["middle"] == json::array({1, 20, 1}));
}
