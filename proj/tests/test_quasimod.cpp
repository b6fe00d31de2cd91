#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "crankforge/quasimod.hpp"

using namespace crankforge;

TEST_CASE("bernoulli numbers") {
    const BernoulliCache cache(12);
    CHECK(cache.value(0) == 1);
    CHECK(cache.value(1) == make_rational(-1, 2));
    CHECK(cache.value(2) == make_rational(1, 6));
    CHECK(cache.value(3) == 0);
    CHECK(cache.value(4) == make_rational(-1, 30));
    CHECK(cache.value(6) == make_rational(1, 42));
    CHECK(cache.value(12) == make_rational(-691, 2730));
    for (unsigned long j = 3; j <= 11; j += 2) CHECK(cache.value(j) == 0);

    // Defining recurrence: sum_j C(n+1, j) B_j = 0 for n >= 1.
    const BernoulliCache big(20);
    for (unsigned long n = 1; n <= 20; ++n) {
        Rational acc(0);
        for (unsigned long j = 0; j <= n; ++j) acc += Rational(binomial(n + 1, j)) * big.value(j);
        CHECK(acc == 0);
    }
}

TEST_CASE("eisenstein expansions") {
    const Series e2 = eisenstein(2, 1, 2);
    CHECK(e2[0] == 1);
    CHECK(e2[1] == -24);
    CHECK(e2[2] == -72);

    const Series e4 = eisenstein(4, 1, 2);
    CHECK(e4[1] == 240);
    CHECK(e4[2] == 2160);

    const Series e6q2 = eisenstein(6, 2, 4);
    CHECK(e6q2[0] == 1);
    CHECK(e6q2[1] == 0);
    CHECK(e6q2[2] == -504);
    CHECK(e6q2[4] == -16632);

    // Leading coefficient is -2w/B_w: -24, 240, -504, 480.
    const long expected[] = {-24, 240, -504, 480};
    for (long w = 2, i = 0; w <= 8; w += 2, ++i) CHECK(eisenstein(w, 1, 1)[1] == expected[i]);

    CHECK_THROWS_AS(eisenstein(3, 1, 5), std::invalid_argument);
    CHECK_THROWS_AS(eisenstein(0, 1, 5), std::invalid_argument);
}

TEST_CASE("e2 derivative identity") {
    CHECK(verify_e2_derivative(200));
    CHECK(verify_e2_derivative(0));

    // Negative control: perturbing one coefficient must break equality.
    const long N = 50;
    const Series e2 = eisenstein(2, 1, N);
    Series e4 = eisenstein(4, 1, N);
    e4.set_coeff(7, e4[7] + 1);
    CHECK(delta_q(e2) != (e2 * e2 - e4) * make_rational(1, 12));
}

TEST_CASE("serre derivative lands in the modular span") {
    const long N = 60;
    const Series e4 = eisenstein(4, 1, N);
    const Series e6 = eisenstein(6, 1, N);
    CHECK(serre_derivative(e4, 2) == e6 * Rational(-4));
    CHECK(serre_derivative(e6, 3) == e4 * e4 * Rational(-6));
    CHECK(serre_derivative(Series::one(N), 0).is_zero());

    // Same facts through the solver, one-dimensional spans.
    QMonomial e6_mono;
    e6_mono.eis[1] = {0, 0, 1};
    const auto res = solve_in_span(serre_derivative(e4, 2), {e6_mono}, N);
    REQUIRE(std::holds_alternative<MembershipCertificate>(res));
    CHECK(std::get<MembershipCertificate>(res).coordinates[0] == -4);
}

TEST_CASE("spanning sets") {
    const auto base = spanning_set(1, 1);
    REQUIRE(base.size() == 2);
    CHECK(base[0].name() == "1");
    CHECK(base[1].name() == "E2(q)");

    const auto level2 = spanning_set(2, 1);
    REQUIRE(level2.size() == 3);
    CHECK(level2[1].name() == "E2(q)");
    CHECK(level2[2].name() == "E2(q^2)");

    // Audited by generation: 8 monomials of weight <= 4 at level 2.
    const auto big = spanning_set(2, 2);
    REQUIRE(big.size() == 8);
    std::vector<std::string> names;
    for (const auto& m : big) names.push_back(m.name());
    const std::vector<std::string> expected{"1",          "E2(q)",         "E2(q^2)",
                                            "E4(q)",      "E2(q)*E2(q^2)", "E2(q)^2",
                                            "E4(q^2)",    "E2(q^2)^2"};
    CHECK(names == expected);
    CHECK(spanning_set(2, 2) == big);  // deterministic

    const auto with_phi = spanning_set(2, 1, true);
    CHECK(with_phi.size() == 5);  // adds Phi1(q), Phi1(q^2)

    // Weights are consistent.
    for (const auto& m : spanning_set(6, 2)) CHECK(m.weight() <= 4);
}

TEST_CASE("solver certificates") {
    const long N = 80;

    // Phi1 = (1 - E2)/24.
    const auto span = spanning_set(1, 1);
    const auto res = solve_in_span(phi(1, 1, N), span, N);
    REQUIRE(std::holds_alternative<MembershipCertificate>(res));
    const auto& cert = std::get<MembershipCertificate>(res);
    CHECK(cert.coordinates[0] == make_rational(1, 24));
    CHECK(cert.coordinates[1] == make_rational(-1, 24));
    CHECK(!cert.first_mismatch_with(phi(1, 1, N), N).has_value());

    // Zero target, all-zero certificate.
    const auto zero_res = solve_in_span(Series(N), span, N);
    REQUIRE(std::holds_alternative<MembershipCertificate>(zero_res));
    for (const auto& c : std::get<MembershipCertificate>(zero_res).coordinates) CHECK(c == 0);
}

TEST_CASE("second moment over 2 Pbar is Phi1(q^k)") {
    const long N = 200;
    const Series target =
        moment_series(1, 2, N).series * overpartition_gf(N).inverse() * make_rational(1, 2);
    QMonomial phi1;
    phi1.phis[{1, 1}] = 1;
    const auto res = solve_in_span(target, {phi1}, N);
    REQUIRE(std::holds_alternative<MembershipCertificate>(res));
    const auto& cert = std::get<MembershipCertificate>(res);
    CHECK(cert.coordinates[0] == 1);
    CHECK(cert.residual_order == N);
    CHECK(!cert.first_mismatch_with(target, N).has_value());
}

TEST_CASE("solver recovers random integer combinations") {
    // spanning_set(1, 3) expands to algebraically independent monomials, so
    // coordinates are unique and must be recovered exactly.
    const long N = 80;
    const auto span = spanning_set(1, 3);
    std::mt19937_64 rng(517);
    std::uniform_int_distribution<long> coef(-20, 20);
    for (int round = 0; round < 5; ++round) {
        std::vector<Rational> coords;
        Series target(N);
        for (const auto& mono : span) {
            const Rational c(coef(rng));
            coords.push_back(c);
            target = target + mono.expand(N) * c;
        }
        const auto res = solve_in_span(target, span, N);
        REQUIRE(std::holds_alternative<MembershipCertificate>(res));
        CHECK(std::get<MembershipCertificate>(res).coordinates == coords);
    }
}

TEST_CASE("solver reproduces targets on dependent spans") {
    // At level 2 the weight-4 products satisfy a linear relation, so exact
    // coordinate recovery is not guaranteed; the combination still must
    // reproduce the target.
    const long N = 70;
    const auto span = spanning_set(2, 2);
    const Series target = eisenstein(2, 2, N) * eisenstein(2, 2, N) * Rational(3) -
                          eisenstein(4, 1, N) * Rational(2);
    const auto res = solve_in_span(target, span, N);
    REQUIRE(std::holds_alternative<MembershipCertificate>(res));
    CHECK(!std::get<MembershipCertificate>(res).first_mismatch_with(target, N).has_value());
}

TEST_CASE("solver failure reports the first failing order") {
    const long N = 60;
    // Phi1(q^3) is not spanned at level 2; rows 0..2 are consistent, row 3 is not.
    const auto res = solve_in_span(phi(1, 3, N), spanning_set(2, 1), N);
    REQUIRE(std::holds_alternative<SolveFailure>(res));
    CHECK(std::get<SolveFailure>(res).first_failing_order == 3);

    CHECK_THROWS_AS(solve_in_span(Series(10), spanning_set(2, 2), 10), InsufficientTruncation);
}

TEST_CASE("representation exponents") {
    CHECK(moment_rep_exponents(1) == std::vector<std::vector<unsigned>>{{1}});
    CHECK(moment_rep_exponents(2) == std::vector<std::vector<unsigned>>{{2, 0}, {0, 1}});
    CHECK(moment_rep_exponents(3) ==
          std::vector<std::vector<unsigned>>{{3, 0, 0}, {1, 1, 0}, {0, 0, 1}});
}

TEST_CASE("find_representation") {
    for (long k = 1; k <= 3; ++k) {
        const Representation rep = find_representation(k, 1, 60);
        REQUIRE(rep.alpha.size() == 1);
        CHECK(rep.alpha[0].second == 1);
    }

    const Representation j2 = find_representation(1, 2, 80);
    REQUIRE(j2.alpha.size() == 2);
    CHECK(j2.alpha[0].second == 6);  // Phi1^2
    CHECK(j2.alpha[1].second == 1);  // Phi3

    const Representation j3 = find_representation(2, 3, 100);
    REQUIRE(j3.alpha.size() == 3);
    CHECK(j3.alpha[0].second == 60);  // Phi1^3
    CHECK(j3.alpha[1].second == 30);  // Phi1 Phi3
    CHECK(j3.alpha[2].second == 1);   // Phi5

    // Fourth and sixth moments against brute-force tables.
    const long M = 14;
    const CrankTable brute1 = crank_table_bruteforce(1, M);
    const Series m4 = moment_series(1, 4, M).series;
    for (long n = 0; n <= M; ++n) CHECK(m4[n] == Rational(brute1.moment(4, n)));
    Series combo4(M);
    for (const auto& [exps, alpha] : j2.alpha)
        combo4 = combo4 + phi_monomial(exps, 1).expand(M) * Rational(alpha);
    CHECK(overpartition_gf(M) * combo4 * Rational(2) == m4);

    const CrankTable brute2 = crank_table_bruteforce(2, M);
    const Series m6 = moment_series(2, 6, M).series;
    for (long n = 0; n <= M; ++n) CHECK(m6[n] == Rational(brute2.moment(6, n)));
    Series combo6(M);
    for (const auto& [exps, alpha] : j3.alpha)
        combo6 = combo6 + phi_monomial(exps, 2).expand(M) * Rational(alpha);
    CHECK(overpartition_gf(M) * combo6 * Rational(2) == m6);
}

TEST_CASE("certify_membership") {
    const long N = 200;
    const MembershipCertificate cert = certify_membership(2, 1, 1, 2, N);
    CHECK(cert.constant_term() == 0);
    const Series target =
        delta_q(moment_series(2, 2, N).series) * overpartition_gf(N).inverse();
    CHECK(!cert.first_mismatch_with(target, N).has_value());
    CHECK(cert.residual_order == N);

    CHECK_THROWS_AS(certify_membership(1, 2, 3, 2, N), std::invalid_argument);
    CHECK_THROWS_AS(certify_membership(1, 0, 0, 1, N), std::invalid_argument);
}

TEST_CASE("certificates with phi generators included") {
    const long N = 80;
    const MembershipCertificate cert = certify_membership(1, 1, 0, 1, N, true);
    CHECK(cert.constant_term() == 0);
    const Series target =
        moment_series(1, 2, N).series * overpartition_gf(N).inverse();
    CHECK(!cert.first_mismatch_with(target, N).has_value());
}

TEST_CASE("delta_q closure of the level-1 span") {
    const long N = 80;
    const auto next = spanning_set(1, 2);
    for (const QMonomial& mono : spanning_set(1, 1)) {
        const auto res = solve_in_span(delta_q(mono.expand(N)), next, N);
        CHECK(std::holds_alternative<MembershipCertificate>(res));
    }
}
