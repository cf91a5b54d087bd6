#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "amp/distance.hpp"
#include "amp/stability.hpp"

#include <json.hpp>

using namespace amp;
using nlohmann::json;

TEST_CASE("every catalog entry passes a short run") {
    for (const std::string& id : catalog_ids()) {
        CheckReport rep = run_check(id, /*seed=*/11, /*samples=*/40);
        INFO(id, ": max slack ", rep.max_slack);
        CHECK(rep.passed);
        CHECK(rep.failures == 0);
    }
}

TEST_CASE("catalog runs are deterministic per seed") {
    for (const char* id : {"LIP", "WASS", "AXIOMS"}) {
        CheckReport a = run_check(id, 99, 25);
        CheckReport b = run_check(id, 99, 25);
        CHECK(a.to_json() == b.to_json());
    }
    CheckReport serial = run_check("HILB-INT", 5, 24, 1);
    CheckReport parallel = run_check("HILB-INT", 5, 24, 4);
    CHECK(serial.to_json() == parallel.to_json());
}

TEST_CASE("unknown ids are rejected") {
    CHECK_THROWS_AS(run_check("NOPE", 1, 1), std::invalid_argument);
}

TEST_CASE("witness replay reproduces recorded values") {
    // hand-built witnesses in the documented format
    json w;
    w["sample"] = 0;
    w["inputs"] = {{"spec", "p1"}, {"a", "0\t3\n"}, {"b", "4\t5\n"}};
    auto [lhs, rhs] = replay_witness("LIP", w.dump());
    CHECK(lhs == 2);  // |3 - 1|
    CHECK(rhs == 4);  // d_{rho_1}

    json w2;
    w2["inputs"] = {{"p", 1}, {"q", 2}, {"a", "0\t3\n"}, {"b", "4\t5\n"}};
    auto [l2, r2] = replay_witness("PNORM", w2.dump());
    CHECK(approx_le(l2, r2));

    json w3;
    w3["inputs"] = {{"seed", 424242}};
    auto first = replay_witness("AXIOMS", w3.dump());
    auto second = replay_witness("AXIOMS", w3.dump());
    CHECK(first == second);
}

TEST_CASE("counterexamples reproduce the recorded violations") {
    auto reports = run_counterexamples();
    REQUIRE(reports.size() == 5);
    for (const auto& rep : reports) {
        INFO(rep.id, " extra=", rep.extra);
        CHECK(rep.inverted);
        CHECK(rep.passed);
    }

    // pinned witness values, bit-identical across reruns
    auto again = run_counterexamples();
    for (std::size_t i = 0; i < reports.size(); ++i)
        CHECK(reports[i].to_json() == again[i].to_json());

    json rank = json::parse(reports[0].extra);
    CHECK(rank["rank_B"] == 1);
    CHECK(rank["rank_A"] == 0);
    CHECK(rank["rank_C"] == 0);

    json sigma = json::parse(reports[1].extra);
    CHECK(sigma["sub"] == 2.0);
    CHECK(sigma["mid"] == 1.0);

    json ctau = json::parse(reports[2].extra);
    CHECK(ctau["c_A"] == 0.0);
    CHECK(ctau["c_B"] == 0.0);
    CHECK(ctau["c_C"] == 2.0);

    json minamp = json::parse(reports[3].extra);
    CHECK(minamp["gamma_B"] == 1.0);

    json disc = json::parse(reports[4].extra);
    CHECK(disc["c"] == json::array({1.0, 1.0, 1.0}));
    CHECK(disc["shift"] == json::array({1.0, 0.5, 0.25}));
}

TEST_CASE("reports serialize to well-formed json") {
    CheckReport rep = run_check("MAG", 3, 10);
    json j = json::parse(rep.to_json());
    CHECK(j["id"] == "MAG");
    CHECK(j["samples"] == 10);
    CHECK(j.contains("witnesses"));
    CHECK(j.contains("max_slack"));
}

TEST_CASE("HILB-INT on the disjoint pair: 1.5 <= 4 * 4") {
    Barcode a = {{0, 3}}, b = {{4, 5}};
    double lhs = interleaving_1param(a, b);
    double rhs = path_metric_1param(AmplitudeSpec::PNorm(1), a, b, CostFunction::Sum()).value;
    CHECK(lhs == 1.5);
    CHECK(rhs == 4.0);
    CHECK(lhs <= 4 * rhs);
}
