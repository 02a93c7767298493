#include <doctest.h>

#include <emlab/identities.hpp>
#include <emlab/qseries.hpp>
#include <emlab/stats.hpp>

using namespace emlab;

TEST_CASE("registry catalog") {
    CHECK(registry().size() >= 35);
    CHECK(find_record("carlitz") != nullptr);
    CHECK(find_record("derangement_count") != nullptr);
    CHECK(find_record("fmaj_dist") != nullptr);
    CHECK(find_record("nonsense") == nullptr);
    // ids are unique
    for (const auto& a : registry()) {
        int seen = 0;
        for (const auto& b : registry())
            if (a.id == b.id) ++seen;
        CHECK(seen == 1);
    }
    // every default grid row validates against the declared ranges
    for (const auto& rec : registry()) {
        for (const auto& row : rec.default_grid) {
            for (const auto& spec : rec.params) {
                REQUIRE(row.count(spec.name) == 1);
                CHECK(row.at(spec.name) >= spec.min);
                CHECK(row.at(spec.name) <= spec.max);
            }
        }
    }
}

TEST_CASE("verify worked examples") {
    auto rep = verify("carlitz", {{"n", 2}}, {{"M", 3}});
    CHECK(rep.pass);
    CHECK(rep.truncations.at("M") == 3);

    auto der = verify("derangement_count", {{"n", 2}, {"r", 2}});
    CHECK(der.pass);  // both sides count 5 elements

    CHECK(verify("fmaj_dist", {{"n", 1}, {"r", 3}}).pass);
}

TEST_CASE("verify rejects bad input") {
    CHECK_THROWS_AS(verify("nonsense", {}), ParameterError);
    CHECK_THROWS_AS(verify("carlitz", {}), ParameterError);                   // missing n
    CHECK_THROWS_AS(verify("carlitz", {{"n", 2}, {"r", 1}}), ParameterError); // undeclared r
    CHECK_THROWS_AS(verify("carlitz", {{"n", 99}}), ParameterError);          // out of range
    CHECK_THROWS_AS(verify("carlitz", {{"n", 2}}, {{"N", 3}}), ParameterError);
    CHECK_THROWS_AS(verify("gamma_colored_involutions", {{"n", 2}, {"r", 3}}),
                    ParameterError);  // odd r
}

TEST_CASE("mismatch reports carry the first differing coefficient") {
    // the registered unshifted product form diverges for r >= 2
    auto rep = verify("ldes_lmaj", {{"n", 1}, {"r", 2}}, {{"M", 2}});
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.mismatch.has_value());
    CHECK(rep.mismatch->lhs == "1");
    CHECK(rep.mismatch->rhs == "0");
    auto j = rep.to_json();
    CHECK(j["pass"] == false);
    CHECK(j["mismatch"]["lhs"] == "1");
    // the r = 1 degenerate case holds
    CHECK(verify("ldes_lmaj", {{"n", 3}, {"r", 1}}, {{"M", 4}}).pass);
}

TEST_CASE("the q-shifted length-order product form verifies exactly") {
    // denominator (x;q)_{n+1} * prod_{i=1..n} (1 + x q^i [r-1]_{qx}) makes the
    // (ldes, lmaj) series identity hold on the grid where the registered
    // unshifted form fails
    using Kind = StatisticId::Kind;
    VarSet vars{"q", "x"};
    for (unsigned r = 1; r <= 3; ++r) {
        for (unsigned n = 1; n <= 4; ++n) {
            Poly num = distribution(
                n, r, Subset::all,
                {{StatisticId::make(Kind::ldes), "x"}, {StatisticId::make(Kind::lmaj), "q"}},
                vars);
            std::vector<Poly> denoms;
            for (unsigned i = 0; i <= n; ++i)
                denoms.push_back(Poly::constant(vars, 1) -
                                 Poly::monomial(vars, 1, {{"x", 1}, {"q", i}}));
            Poly bracket(vars);
            for (unsigned u = 0; u + 2 <= r; ++u)
                bracket += Poly::monomial(vars, 1, {{"q", u}, {"x", u}});
            for (unsigned i = 1; i <= n; ++i)
                denoms.push_back(Poly::constant(vars, 1) +
                                 bracket * Poly::monomial(vars, 1, {{"x", 1}, {"q", i}}));
            Poly series = expand_rational(num, denoms, "x", 4);
            for (unsigned m = 0; m <= 4; ++m)
                CHECK(series.coefficient_of("x", m) == q_analogue(m + 1, vars, "q").pow(n));
        }
    }
}

TEST_CASE("verify_all aggregates and sorts") {
    std::vector<GridEntry> grid = {
        {"fmaj_dist", {{"n", 2}, {"r", 2}}, {}},
        {"carlitz", {{"n", 2}}, {{"M", 3}}},
        {"carlitz", {{"n", 1}}, {{"M", 3}}},
        {"macmahon", {{"n", 99}}, {}},  // out of validity: reported, not thrown
    };
    auto reports = verify_all(&grid, 2);
    REQUIRE(reports.size() == 4);
    CHECK(reports[0].id == "carlitz");
    CHECK(reports[0].params.at("n") == 1);
    CHECK(reports[1].params.at("n") == 2);
    CHECK(reports[2].id == "fmaj_dist");
    CHECK(reports[3].id == "macmahon");
    CHECK(reports[0].pass);
    CHECK(reports[1].pass);
    CHECK(reports[2].pass);
    CHECK_FALSE(reports[3].pass);
    CHECK(reports[3].error.has_value());

    // determinism regardless of worker count
    auto serial = verify_all(&grid, 1);
    REQUIRE(serial.size() == reports.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].id == reports[i].id);
        CHECK(serial[i].pass == reports[i].pass);
    }
}

TEST_CASE("report json schema") {
    auto rep = verify("carlitz", {{"n", 2}}, {{"M", 3}});
    auto j = rep.to_json();
    CHECK(j.at("id") == "carlitz");
    CHECK(j.at("params").at("n") == 2);
    CHECK(j.at("truncations").at("M") == 3);
    CHECK(j.at("pass") == true);
    CHECK_FALSE(j.contains("mismatch"));
}
