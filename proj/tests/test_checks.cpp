#include <rotrem/checks.hpp>
#include <rotrem/error.hpp>

#include <doctest.h>

using namespace rotrem;

TEST_CASE("marked cell simulation") {
    const auto v = checks::simulate_marked_cell(3, 1, 0, 4);
    REQUIRE(v.size() == 4);
    CHECK(v[0] == std::pair<std::uint64_t, std::uint32_t>{1, 0});
    CHECK(v[1] == std::pair<std::uint64_t, std::uint32_t>{1, 1});
    CHECK(v[2] == std::pair<std::uint64_t, std::uint32_t>{1, 2});
    CHECK(v[3] == std::pair<std::uint64_t, std::uint32_t>{2, 0});
    CHECK(checks::simulate_marked_cell(3, 1, 0, 0).empty());
}

TEST_CASE("classic J_2 and binomials") {
    CHECK(checks::classic_j2(1) == 1);
    CHECK(checks::classic_j2(10) == 5);
    CHECK(checks::classic_j2(16) == 1);
    CHECK(checks::classic_j2(41) == 19);
    CHECK(checks::binomial(0, 0) == 1);
    CHECK(checks::binomial(9, 4) == 126);
    CHECK(checks::binomial(4, 9) == 0);
    CHECK(checks::binomial(60, 30) == 118264581564861424ULL);
}

TEST_CASE("suite names follow criterion order") {
    const auto &names = checks::suite_names();
    REQUIRE(names.size() == 11);
    CHECK(names.front() == "triangle");
    CHECK(names.back() == "aperiodicity");
    const checks::SuiteConfig cfg;
    const auto r = checks::run_suite("negabinary", cfg);
    REQUIRE(r.size() == 1);
    CHECK(r[0].id == 8);
    CHECK(r[0].name == "negabinary");
    CHECK(r[0].passed);
    CHECK(r[0].cases > 0);
}

TEST_CASE("unknown suite") {
    bool threw = false;
    try {
        checks::run_suite("nope", {});
    } catch (const Error &e) {
        threw = e.kind() == ErrorKind::invalid_argument;
    }
    CHECK(threw);
}

TEST_CASE("a suite is deterministic for a fixed seed") {
    checks::SuiteConfig cfg;
    cfg.seed = 12345;
    const auto a = checks::run_criterion(3, cfg);
    const auto b = checks::run_criterion(3, cfg);
    CHECK(a.passed);
    CHECK(a.cases == b.cases);
    CHECK(a.detail == b.detail);
}
