#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "psl2/bigseries.hpp"
#include "psl2/errors.hpp"

using namespace psl2;

namespace {

TruncSeries geometric(std::size_t order) {
    TruncSeries g(order);
    for (std::size_t n = 0; n <= order; ++n) {
        g[n] = 1;
    }
    return g;
}

ExactRat random_rat(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 5);
    return make_rat(num(rng), den(rng));
}

TruncSeries random_series(std::size_t order, std::mt19937& rng, const ExactRat& constant) {
    TruncSeries f(order);
    f[0] = constant;
    for (std::size_t n = 1; n <= order; ++n) {
        f[n] = random_rat(rng);
    }
    return f;
}

} // namespace

TEST_CASE("add") {
    const TruncSeries a(2, {1, 1});
    const TruncSeries b(2, {1, -1});
    CHECK(a + b == TruncSeries(2, {2}));
    CHECK(a + TruncSeries(2) == a);
    CHECK(TruncSeries::monomial(3, 1) + TruncSeries::monomial(3, 2) == TruncSeries(3, {0, 1, 1}));
    CHECK_THROWS_AS(a + TruncSeries(3), UsageError);
}

TEST_CASE("mul") {
    CHECK(TruncSeries(2, {1, 1}) * TruncSeries(2, {1, -1}) == TruncSeries(2, {1, 0, -1}));
    const TruncSeries f(4, {3, make_rat(1, 2), 0, 7});
    CHECK(f * TruncSeries::one(4) == f);
    CHECK(geometric(5) * TruncSeries(5, {1, -1}) == TruncSeries::one(5));
    CHECK_THROWS_AS(f * TruncSeries::one(5), UsageError);
}

TEST_CASE("exp") {
    CHECK(series_exp(TruncSeries(6)) == TruncSeries::one(6));
    const auto e = series_exp(TruncSeries(4, {0, 1, make_rat(1, 2)}));
    CHECK(e == TruncSeries(4, {1, 1, 1, make_rat(2, 3), make_rat(5, 12)}));
    // Coefficients are involution counts over n!.
    const auto inv = series_exp(TruncSeries(8, {0, 1, make_rat(1, 2)}));
    for (std::size_t n = 0; n <= 8; ++n) {
        CHECK(inv[n] * ExactRat(factorial(n)) == ExactRat(oracle::count_order_dividing(n, 2)));
    }
    CHECK(series_exp(series_log(TruncSeries(7, {1, 1}))) == TruncSeries(7, {1, 1}));
    CHECK_THROWS_AS(series_exp(TruncSeries::one(3)), DomainError);
}

TEST_CASE("log") {
    CHECK(series_log(TruncSeries::one(5)).is_zero());
    CHECK(series_log(geometric(4)) == TruncSeries(4, {0, 1, make_rat(1, 2), make_rat(1, 3), make_rat(1, 4)}));
    const auto t3 = TruncSeries::monomial(9, 3);
    CHECK(series_log(series_exp(t3)) == t3);
    CHECK_THROWS_AS(series_log(TruncSeries(3, {2, 1})), DomainError);
    CHECK_THROWS_AS(series_log(TruncSeries(3)), DomainError);
}

TEST_CASE("substitute_power") {
    CHECK(substitute_power(TruncSeries::monomial(5, 1), 3) == TruncSeries::monomial(5, 3));
    const TruncSeries f(4, {1, 2, 3, 4, 5});
    CHECK(substitute_power(f, 1) == f);
    CHECK(substitute_power(TruncSeries(4, {1, 1, 1}), 2) == TruncSeries(4, {1, 0, 1, 0, 1}));
    CHECK_THROWS_AS(substitute_power(f, 0), UsageError);
}

TEST_CASE("euler_operator") {
    CHECK(euler_operator(TruncSeries::one(4)).is_zero());
    CHECK(euler_operator(TruncSeries(4, {0, 1, 1})) == TruncSeries(4, {0, 1, 2}));
}

TEST_CASE("moebius_log_transform") {
    CHECK(moebius_log_transform(geometric(10)) == TruncSeries::monomial(10, 1));
    CHECK(moebius_log_transform(TruncSeries::one(6)).is_zero());
    // Types of (involution, order-3 permutation) pairs and their connected part.
    const TruncSeries all_types(7, {1, 1, 2, 4, 7, 10, 24, 37});
    CHECK(moebius_log_transform(all_types) == TruncSeries(7, {0, 1, 1, 2, 2, 1, 8, 6}));
    CHECK(exp_sum_transform(TruncSeries(7, {0, 1, 1, 2, 2, 1, 8, 6})) == all_types);
    CHECK_THROWS_AS(moebius_log_transform(TruncSeries(3, {0, 1})), DomainError);
}

TEST_CASE("exp_sum_transform") {
    CHECK(exp_sum_transform(TruncSeries::monomial(12, 1)) == geometric(12));
    // Integer partitions: Euler transform of t/(1-t).
    const auto p = exp_sum_transform(geometric(10) - TruncSeries::one(10));
    CHECK(p == TruncSeries(10, {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42}));
    CHECK_THROWS_AS(exp_sum_transform(TruncSeries::one(3)), DomainError);
}

TEST_CASE("euler_phi and moebius_mu") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(6) == 2);
    CHECK(euler_phi(9) == 6);
    CHECK(moebius_mu(1) == 1);
    CHECK(moebius_mu(4) == 0);
    CHECK(moebius_mu(6) == 1);
    CHECK_THROWS_AS(euler_phi(0), DomainError);
    CHECK_THROWS_AS(moebius_mu(0), DomainError);
}

TEST_CASE("divisor sums of phi and mu up to 10^4") {
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        std::uint64_t phi_sum = 0;
        long mu_sum = 0;
        for (std::uint64_t d = 1; d * d <= n; ++d) {
            if (n % d != 0) {
                continue;
            }
            phi_sum += euler_phi(d);
            mu_sum += moebius_mu(d);
            if (d * d != n) {
                phi_sum += euler_phi(n / d);
                mu_sum += moebius_mu(n / d);
            }
        }
        REQUIRE(phi_sum == n);
        REQUIRE(mu_sum == (n == 1 ? 1 : 0));
    }
    for (std::uint64_t n = 1; n <= 300; ++n) {
        std::uint64_t coprime = 0;
        for (std::uint64_t k = 1; k <= n; ++k) {
            coprime += std::gcd(k, n) == 1;
        }
        REQUIRE(euler_phi(n) == coprime);
    }
}

TEST_CASE("exact normalization") {
    const TruncSeries f(2, {make_rat(2, 4), make_rat(-3, 9)});
    CHECK(f[0].get_den() == 2);
    CHECK(f[1] == make_rat(-1, 3));
    CHECK_THROWS_AS(make_rat(1, 0), DomainError);
    CHECK(TruncSeries(3, {1, 2}).is_integral());
    CHECK_FALSE(f.is_integral());
    CHECK_THROWS_AS(f.integer_coeffs(), InvariantError);
    CHECK_THROWS_AS(TruncSeries(1, {1, 2, 3}), UsageError);
    CHECK(TruncSeries(5, {1, 2, 3}).truncated(1) == TruncSeries(1, {1, 2}));
}

TEST_CASE("property: exp/log round-trip") {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<std::size_t> order_dist(1, 64);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t order = trial < 4 ? 64 : order_dist(rng) / 2 + 1;
        const auto f = random_series(order, rng, 0);
        REQUIRE(series_log(series_exp(f)) == f);
        const auto g = random_series(order, rng, 1);
        REQUIRE(series_exp(series_log(g)) == g);
    }
}

TEST_CASE("property: exp turns sums into products") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t order = 1 + trial % 24;
        const auto f = random_series(order, rng, 0);
        const auto g = random_series(order, rng, 0);
        REQUIRE(series_exp(f + g) == series_exp(f) * series_exp(g));
    }
}

TEST_CASE("property: Euler and inverse Euler transforms round-trip") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<std::size_t> order_dist(1, 64);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t order = trial < 4 ? 64 : order_dist(rng);
        const auto g = random_series(order, rng, 1);
        REQUIRE(exp_sum_transform(moebius_log_transform(g)) == g);
        const auto f = random_series(order, rng, 0);
        REQUIRE(moebius_log_transform(exp_sum_transform(f)) == f);
    }
}

TEST_CASE("property: Euler operator is a derivation") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t order = 1 + trial % 64;
        const auto f = random_series(order, rng, random_rat(rng));
        const auto g = random_series(order, rng, random_rat(rng));
        REQUIRE(euler_operator(f * g) == euler_operator(f) * g + f * euler_operator(g));
        // t d/dt log g = (t g') / g
        const auto h = random_series(order, rng, 1);
        REQUIRE(euler_operator(series_log(h)) * h == euler_operator(h));
    }
}

TEST_CASE("property: integer series stay integral under the Euler transform") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> coef(0, 9);
    for (int trial = 0; trial < 100; ++trial) {
        TruncSeries f(40);
        for (std::size_t n = 1; n <= 40; ++n) {
            f[n] = coef(rng);
        }
        REQUIRE(exp_sum_transform(f).is_integral());
    }
}
