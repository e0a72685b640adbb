#pragma once

// Cycle index series in the variables x_1, x_2, ... (x_k of weight k).
//
// Two representations:
//  - DenseCycleIndex: one coefficient per cycle type, feasible only at small
//    weight (the number of terms grows like the partition numbers).
//  - FactoredCycleIndex: a separable series prod_k (sum_n a_{k,n} x_k^n / (k^n n!)),
//    O(N log N) numbers at weight N. This is the production representation.
//
// Coefficient conventions: a dense term stores the full coefficient
// a_type / z_type where z_type = prod_k k^{m_k} m_k! is the centralizer order;
// a_type is the number of structures fixed by a relabeling of that type.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "psl2/bigseries.hpp"

namespace psl2 {

/// Cycle type of a permutation: (length, multiplicity) pairs sorted by length,
/// with zero multiplicities dropped so equal types compare equal.
class PartitionType {
public:
    PartitionType() = default;
    // counts[k-1] = number of k-cycles; trailing zeros allowed.
    static PartitionType from_counts(std::span<const std::uint32_t> counts);
    static PartitionType from_parts(std::vector<std::pair<std::uint32_t, std::uint32_t>> parts);
    // Cycle type of a permutation given as an image array.
    static PartitionType of_permutation(std::span<const std::uint32_t> perm);

    std::uint32_t weight() const noexcept;
    std::uint32_t count(std::uint32_t length) const noexcept;
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& parts() const noexcept { return parts_; }
    // counts[k-1] for k = 1..weight.
    std::vector<std::uint32_t> counts() const;

    // prod_k k^{m_k} m_k!
    ExactInt centralizer_order() const;

    // e.g. "x1^2 x3"; "1" for the empty type.
    std::string monomial() const;

    auto operator<=>(const PartitionType&) const = default;

private:
    std::vector<std::pair<std::uint32_t, std::uint32_t>> parts_;
};

// All cycle types of the given weight, in a fixed deterministic order.
std::vector<PartitionType> partitions_of(std::uint32_t weight);

class DenseCycleIndex {
public:
    explicit DenseCycleIndex(std::uint32_t max_weight);

    std::uint32_t max_weight() const noexcept { return max_weight_; }
    const std::map<PartitionType, ExactRat>& terms() const noexcept { return terms_; }

    // Full coefficient of the monomial (0 when absent).
    ExactRat coefficient(const PartitionType& type) const;
    // Fixed-point count a_type = coefficient * z_type.
    ExactRat fixed_points(const PartitionType& type) const;

    // Adds to the coefficient; zero results are erased.
    void add(const PartitionType& type, const ExactRat& value);

    friend bool operator==(const DenseCycleIndex&, const DenseCycleIndex&) = default;

private:
    std::uint32_t max_weight_;
    std::map<PartitionType, ExactRat> terms_;
};

class FactoredCycleIndex {
public:
    // All factors equal to 1 (a_{k,n} = 0 for n >= 1).
    explicit FactoredCycleIndex(std::uint32_t max_weight);

    std::uint32_t max_weight() const noexcept { return max_weight_; }

    // a_{k,n} for 1 <= k <= max_weight, 0 <= n <= max_weight / k.
    const ExactRat& a(std::uint32_t k, std::uint32_t n) const;
    void set_a(std::uint32_t k, std::uint32_t n, ExactRat value);
    // a_{k,0..max_weight/k}
    std::span<const ExactRat> factor(std::uint32_t k) const;

    // Factor for x_k as a series in x_k (coefficient a_{k,n} / (k^n n!)),
    // truncated at max_weight / k.
    TruncSeries factor_series(std::uint32_t k) const;

    friend bool operator==(const FactoredCycleIndex&, const FactoredCycleIndex&) = default;

private:
    std::uint32_t max_weight_;
    std::vector<std::vector<ExactRat>> factors_;
};

inline constexpr std::uint32_t kDenseWeightCap = 24;

// Cycle species, Z_C = sum phi(r) x_r^s / (r s).
DenseCycleIndex zc_dense(std::uint32_t max_weight);
// Cycles of length n: sum_{rs=n} phi(r) x_r^s / n.
DenseCycleIndex zcn_dense(std::uint32_t n);

// Permutations with sigma^n = id, in factored form. Prime n uses the two-term
// recurrence m c_m = a c_{m-1} + p b c_{m-p} of exp(a x + b x^p); other n use
// zs_order_n_factored_generic.
FactoredCycleIndex zs_order_n_factored(std::uint32_t n, std::uint32_t max_weight);
// Product over rs | n, r | k of exp(phi(r) x_k^s / (k s)), each factor expanded
// by series_exp.
FactoredCycleIndex zs_order_n_factored_generic(std::uint32_t n, std::uint32_t max_weight);
// All permutations: a_{k,m} = k^m m!.
FactoredCycleIndex zs_full_factored(std::uint32_t max_weight);
// Sets: a_{k,m} = 1. Unit of the Hadamard product.
FactoredCycleIndex ens_factored(std::uint32_t max_weight);

// Dense Z_{S_p} for prime p built term by term from fixed_order_p_commuting.
DenseCycleIndex zs_prime_dense(std::uint32_t p, std::uint32_t max_weight);

FactoredCycleIndex hadamard_factored(const FactoredCycleIndex& z1, const FactoredCycleIndex& z2);
DenseCycleIndex hadamard_dense(const DenseCycleIndex& z1, const DenseCycleIndex& z2);

DenseCycleIndex dense_from_factored(const FactoredCycleIndex& z, std::uint32_t max_weight);

// Types generating series Z(t, t^2, t^3, ...).
TruncSeries condense_types(const FactoredCycleIndex& z);
TruncSeries condense_types(const DenseCycleIndex& z);
// Labelled exponential generating series Z(t, 0, 0, ...).
TruncSeries condense_labelled(const FactoredCycleIndex& z);

// Number of tau with tau^p = id commuting with a fixed permutation of the
// given cycle type (p prime).
ExactInt fixed_order_p_commuting(std::uint32_t p, const PartitionType& sigma_type);

bool is_prime(std::uint64_t n);

} // namespace psl2
