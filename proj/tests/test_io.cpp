#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "crankforge/io.hpp"

using namespace crankforge;

TEST_CASE("rational strings") {
    CHECK(rational_to_string(make_rational(3, 2)) == "3/2");
    CHECK(rational_to_string(Rational(5)) == "5");
    CHECK(rational_to_string(make_rational(-4, 6)) == "-2/3");
    CHECK(rational_from_string("7/12") == make_rational(7, 12));
    CHECK(rational_from_string("-9") == Rational(-9));
    CHECK_THROWS_AS(rational_from_string("1.5"), std::invalid_argument);
}

TEST_CASE("series json round trip") {
    std::mt19937_64 rng(611);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 12);
    for (int round = 0; round < 5; ++round) {
        Series s(25);
        for (long n = 0; n <= 25; ++n) s.set_coeff(n, make_rational(num(rng), den(rng)));
        const nlohmann::json j = to_json(s);
        CHECK(j["trunc_order"] == 25);
        const Series back = series_from_json(j);
        CHECK(back.order() == s.order());
        CHECK(back == s);
    }
    CHECK_THROWS_AS(series_from_json(nlohmann::json{{"trunc_order", 3}, {"coeffs", {"1"}}}),
                    std::invalid_argument);
}

TEST_CASE("overpartition tokens") {
    Overpartition o;
    o.entries = {{3, true}, {2, false}, {1, false}};
    const nlohmann::json j = to_json(o);
    CHECK(j == nlohmann::json::array({"3o", "2", "1"}));
}

TEST_CASE("table csv") {
    const CrankTable t = crank_table_bruteforce(1, 1);
    std::ostringstream os;
    write_table_csv(os, t);
    CHECK(os.str() == "k,n,m,count\n1,0,0,1\n1,1,-1,1\n1,1,1,1\n");
}

TEST_CASE("moments csv") {
    const MomentSeries m = moment_series(1, 2, 3);
    std::ostringstream os;
    write_moments_csv(os, m);
    CHECK(os.str() == "k,ell,n,value\n1,2,0,0\n1,2,1,2\n1,2,2,10\n1,2,3,28\n");
}

TEST_CASE("certificate json") {
    const MembershipCertificate cert = certify_membership(1, 1, 0, 1, 60);
    const nlohmann::json j = to_json(cert);
    CHECK(j["schema"] == 1);
    CHECK(j["constant_term"] == "0");
    CHECK(j["residual_order"] == 60);
    CHECK(j["coordinates"].contains("E2(q)"));
}

TEST_CASE("representation json keys") {
    const Representation rep = find_representation(1, 2, 80);
    const nlohmann::json j = to_json(rep);
    CHECK(j["alpha"]["(2,0)"] == 6);
    CHECK(j["alpha"]["(0,1)"] == 1);
}
