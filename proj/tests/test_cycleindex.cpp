#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "psl2/cycleindex.hpp"
#include "psl2/errors.hpp"

using namespace psl2;

namespace {

using Parts = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

PartitionType type(Parts parts) { return PartitionType::from_parts(std::move(parts)); }

struct Term {
    long numerator;  // over 7! = 5040
    Parts parts;
};

// Weight-7 homogeneous parts, as printed with common denominator 5040.
const std::vector<Parts> kWeight7 = {
    {{1, 7}},         {{1, 5}, {2, 1}}, {{1, 4}, {3, 1}}, {{1, 3}, {2, 2}}, {{1, 3}, {4, 1}},
    {{1, 2}, {2, 1}, {3, 1}}, {{1, 2}, {5, 1}}, {{1, 1}, {2, 3}}, {{1, 1}, {2, 1}, {4, 1}}, {{1, 1}, {3, 2}},
    {{1, 1}, {6, 1}}, {{2, 2}, {3, 1}}, {{2, 1}, {5, 1}}, {{3, 1}, {4, 1}}, {{7, 1}},
};
const std::vector<long> kS2Weight7 = {232, 1092, 700, 2520, 1680, 1680, 1008, 2100, 2520, 1120, 1680, 1260, 1008, 840, 720};
const std::vector<long> kS3Weight7 = {351, 441, 1890, 315, 630, 1260, 504, 945, 630, 2520, 2520, 630, 504, 1260, 720};
const std::vector<long> kProductWeight7 = {81432, 22932, 18900, 7560, 5040, 5040, 1008,
                                           18900, 2520,  10080, 5040, 3780, 1008, 2520, 720};

void check_weight7(const DenseCycleIndex& z, const std::vector<long>& numerators) {
    REQUIRE(numerators.size() == kWeight7.size());
    for (std::size_t i = 0; i < kWeight7.size(); ++i) {
        const auto t = type(kWeight7[i]);
        INFO(t.monomial());
        CHECK(z.coefficient(t) == make_rat(numerators[i], 5040));
    }
}

} // namespace

TEST_CASE("PartitionType") {
    const std::uint32_t perm[] = {1, 0, 3, 4, 2, 5};
    const auto t = PartitionType::of_permutation(perm);
    CHECK(t == type({{1, 1}, {2, 1}, {3, 1}}));
    CHECK(t.weight() == 6);
    CHECK(t.count(2) == 1);
    CHECK(t.count(4) == 0);
    CHECK(t.centralizer_order() == 6);
    CHECK(t.monomial() == "x1 x2 x3");
    CHECK(type({{2, 3}}).centralizer_order() == 48);
    CHECK(PartitionType().monomial() == "1");
    const std::uint32_t counts[] = {2, 0, 1, 0};
    CHECK(PartitionType::from_counts(counts) == type({{1, 2}, {3, 1}}));
    CHECK(partitions_of(10).size() == 42);
    CHECK(partitions_of(0).size() == 1);
    // Class sizes n!/z sum to n!.
    for (std::uint32_t n = 1; n <= 9; ++n) {
        ExactInt total = 0;
        for (const auto& p : partitions_of(n)) {
            total += factorial(n) / p.centralizer_order();
        }
        CHECK(total == factorial(n));
    }
}

TEST_CASE("cycle species") {
    const auto zc = zc_dense(6);
    CHECK(zc.coefficient(type({{1, 1}})) == 1);
    CHECK(zc.coefficient(type({{2, 1}})) == make_rat(1, 2));
    // Two cyclic orders on three points, both fixed by the identity.
    CHECK(zc.coefficient(type({{1, 3}})) == make_rat(1, 3));
    for (std::uint32_t w = 1; w <= 6; ++w) {
        for (const auto& t : partitions_of(w)) {
            INFO(t.monomial());
            CHECK(zc.fixed_points(t) == ExactRat(oracle::cyclic_orders_fixed(t)));
        }
    }
}

TEST_CASE("cycles of fixed length") {
    const auto z3 = zcn_dense(3);
    CHECK(z3.coefficient(type({{1, 3}})) == make_rat(1, 3));
    CHECK(z3.coefficient(type({{3, 1}})) == make_rat(2, 3));
    CHECK(z3.terms().size() == 2);
    const auto z1 = zcn_dense(1);
    CHECK(z1.terms().size() == 1);
    CHECK(z1.coefficient(type({{1, 1}})) == 1);
    const auto z4 = zcn_dense(4);
    CHECK(z4.coefficient(type({{1, 4}})) == make_rat(1, 4));
    CHECK(z4.coefficient(type({{2, 2}})) == make_rat(1, 4));
    CHECK(z4.coefficient(type({{4, 1}})) == make_rat(2, 4));
    for (std::uint32_t n = 1; n <= 7; ++n) {
        const auto z = zcn_dense(n);
        for (const auto& t : partitions_of(n)) {
            INFO(n << " " << t.monomial());
            CHECK(z.fixed_points(t) == ExactRat(oracle::cyclic_orders_fixed(t)));
        }
    }
}

TEST_CASE("permutations of order 2 and 3 at weight 3") {
    const auto z2 = dense_from_factored(zs_order_n_factored(2, 3), 3);
    CHECK(z2.coefficient(type({{1, 3}})) == make_rat(4, 6));
    CHECK(z2.coefficient(type({{1, 1}, {2, 1}})) == make_rat(6, 6));
    CHECK(z2.coefficient(type({{3, 1}})) == make_rat(2, 6));
    const auto z3 = dense_from_factored(zs_order_n_factored(3, 3), 3);
    CHECK(z3.coefficient(type({{1, 3}})) == make_rat(3, 6));
    CHECK(z3.coefficient(type({{1, 1}, {2, 1}})) == make_rat(3, 6));
    CHECK(z3.coefficient(type({{3, 1}})) == make_rat(6, 6));
    CHECK(z2.coefficient(PartitionType()) == 1);
}

TEST_CASE("weight-7 tables of Z_S2, Z_S3 and their Hadamard product") {
    const auto z2 = zs_order_n_factored(2, 7);
    const auto z3 = zs_order_n_factored(3, 7);
    check_weight7(dense_from_factored(z2, 7), kS2Weight7);
    check_weight7(dense_from_factored(z3, 7), kS3Weight7);
    check_weight7(dense_from_factored(hadamard_factored(z2, z3), 7), kProductWeight7);
    check_weight7(hadamard_dense(zs_prime_dense(2, 7), zs_prime_dense(3, 7)), kProductWeight7);
}

TEST_CASE("Hadamard product coefficients") {
    const auto h = dense_from_factored(hadamard_factored(zs_order_n_factored(2, 7), zs_order_n_factored(3, 7)), 7);
    CHECK(h.coefficient(type({{1, 4}})) == make_rat(90, 24));
    CHECK(h.coefficient(type({{2, 3}})) == make_rat(2700, 720));
    CHECK(h.coefficient(type({{7, 1}})) == make_rat(720, 5040));
    CHECK_THROWS_AS(hadamard_factored(zs_order_n_factored(2, 7), zs_order_n_factored(3, 8)), UsageError);
    CHECK_THROWS_AS(hadamard_dense(zs_prime_dense(2, 4), zs_prime_dense(3, 5)), UsageError);
}

TEST_CASE("all permutations") {
    const auto zs = zs_full_factored(12);
    CHECK(zs.a(1, 2) == 2);
    CHECK(zs.a(2, 1) == 2);
    const auto d = dense_from_factored(zs, 6);
    CHECK(d.coefficient(type({{1, 2}})) == 1);
    CHECK(d.coefficient(type({{2, 1}})) == 1);
    CHECK(condense_types(zs).truncated(6) == TruncSeries(6, {1, 1, 2, 3, 5, 7, 11}));
    // Permutations up to conjugacy: partition numbers.
    CHECK(condense_types(zs)[12] == 77);
}

TEST_CASE("sets are the Hadamard unit") {
    const auto ens = ens_factored(10);
    for (const auto& z : {zs_order_n_factored(2, 10), zs_order_n_factored(3, 10), zs_full_factored(10)}) {
        CHECK(hadamard_factored(ens, z) == z);
    }
    CHECK(condense_types(ens) == TruncSeries(10, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}));
    const auto e = condense_labelled(ens);
    for (std::size_t n = 0; n <= 10; ++n) {
        CHECK(e[n] == ExactRat(1) / ExactRat(factorial(n)));
    }
}

TEST_CASE("condensation") {
    const auto z2 = zs_order_n_factored(2, 10);
    const auto z3 = zs_order_n_factored(3, 10);
    CHECK(condense_types(hadamard_factored(z2, z3)).truncated(7) == TruncSeries(7, {1, 1, 2, 4, 7, 10, 24, 37}));
    // Conjugacy classes of involutions are their cycle types.
    const auto types2 = condense_types(z2);
    for (std::size_t n = 0; n <= 7; ++n) {
        std::set<PartitionType> seen;
        for (const auto& p : oracle::all_perms(n)) {
            if (oracle::power_is_identity(p, 2)) {
                seen.insert(PartitionType::of_permutation(p));
            }
        }
        CHECK(types2[n] == ExactRat(static_cast<unsigned long>(seen.size())));
    }
    CHECK(types2.truncated(3) == TruncSeries(3, {1, 1, 2, 2}));
    CHECK(condense_labelled(z2) == series_exp(TruncSeries(10, {0, 1, make_rat(1, 2)})));
    CHECK(condense_labelled(z3) == series_exp(TruncSeries(10, {0, 1, 0, make_rat(1, 3)})));
    CHECK(condense_types(dense_from_factored(hadamard_factored(z2, z3), 10)) ==
          condense_types(hadamard_factored(z2, z3)));
}

TEST_CASE("fixed_order_p_commuting") {
    CHECK(fixed_order_p_commuting(2, type({{1, 4}})) == 10);
    CHECK(fixed_order_p_commuting(3, type({{1, 4}})) == 9);
    CHECK(fixed_order_p_commuting(2, type({{5, 1}})) == 1);
    CHECK(fixed_order_p_commuting(2, PartitionType()) == 1);
    CHECK_THROWS_AS(fixed_order_p_commuting(4, type({{1, 2}})), UsageError);
}

TEST_CASE("fixed-point counts match brute force up to weight 7") {
    for (std::uint32_t p : {2u, 3u}) {
        for (std::uint32_t w = 1; w <= 7; ++w) {
            for (const auto& t : partitions_of(w)) {
                INFO("p=" << p << " " << t.monomial());
                CHECK(fixed_order_p_commuting(p, t) == oracle::commuting_of_order_dividing(p, t));
            }
        }
    }
}

TEST_CASE("composite orders match brute force") {
    for (std::uint32_t order : {1u, 4u, 6u}) {
        const auto d = dense_from_factored(zs_order_n_factored(order, 6), 6);
        for (std::uint32_t w = 1; w <= 6; ++w) {
            for (const auto& t : partitions_of(w)) {
                INFO("order=" << order << " " << t.monomial());
                CHECK(d.fixed_points(t) == ExactRat(oracle::commuting_of_order_dividing(order, t)));
            }
        }
    }
}

TEST_CASE("prime recurrence agrees with the product of exponentials") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        CHECK(zs_order_n_factored(p, 60) == zs_order_n_factored_generic(p, 60));
    }
    for (std::uint32_t p : {2u, 3u, 5u}) {
        CHECK(dense_from_factored(zs_order_n_factored(p, 10), 10) == zs_prime_dense(p, 10));
    }
}

TEST_CASE("separability: Hadamard commutes with expansion") {
    const std::uint32_t w = 10;
    const std::vector<FactoredCycleIndex> zs = {zs_order_n_factored(2, w), zs_order_n_factored(3, w), zs_full_factored(w)};
    for (const auto& a : zs) {
        for (const auto& b : zs) {
            CHECK(hadamard_dense(dense_from_factored(a, w), dense_from_factored(b, w)) ==
                  dense_from_factored(hadamard_factored(a, b), w));
        }
    }
}

TEST_CASE("factored storage") {
    FactoredCycleIndex z(6);
    CHECK(z.a(2, 0) == 1);
    CHECK(z.factor(2).size() == 4);
    CHECK_THROWS_AS(z.set_a(2, 0, 2), UsageError);
    CHECK_THROWS_AS(z.set_a(7, 1, 1), UsageError);
    z.set_a(2, 1, 2);
    CHECK(z.factor_series(2) == TruncSeries(3, {1, 1}));
    CHECK(dense_from_factored(z, 6).coefficient(type({{2, 1}})) == 1);
    CHECK_THROWS_AS(dense_from_factored(z, 7), UsageError);
    CHECK_THROWS_AS(zs_prime_dense(2, kDenseWeightCap + 1), ResourceError);
}
