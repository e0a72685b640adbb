#include "psl2/cycleindex.hpp"

#include <algorithm>
#include <functional>

#include "psl2/errors.hpp"

namespace psl2 {

PartitionType PartitionType::from_counts(std::span<const std::uint32_t> counts) {
    PartitionType t;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] != 0) {
            t.parts_.emplace_back(static_cast<std::uint32_t>(i + 1), counts[i]);
        }
    }
    return t;
}

PartitionType PartitionType::from_parts(std::vector<std::pair<std::uint32_t, std::uint32_t>> parts) {
    std::sort(parts.begin(), parts.end());
    PartitionType t;
    for (const auto& [len, cnt] : parts) {
        if (len == 0) {
            throw UsageError("cycle length must be positive");
        }
        if (cnt == 0) {
            continue;
        }
        if (!t.parts_.empty() && t.parts_.back().first == len) {
            t.parts_.back().second += cnt;
        } else {
            t.parts_.emplace_back(len, cnt);
        }
    }
    return t;
}

PartitionType PartitionType::of_permutation(std::span<const std::uint32_t> perm) {
    std::vector<bool> seen(perm.size(), false);
    std::map<std::uint32_t, std::uint32_t> lengths;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) {
            continue;
        }
        std::uint32_t len = 0;
        for (std::size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        ++lengths[len];
    }
    return from_parts({lengths.begin(), lengths.end()});
}

std::uint32_t PartitionType::weight() const noexcept {
    std::uint32_t w = 0;
    for (const auto& [len, cnt] : parts_) {
        w += len * cnt;
    }
    return w;
}

std::uint32_t PartitionType::count(std::uint32_t length) const noexcept {
    for (const auto& [len, cnt] : parts_) {
        if (len == length) {
            return cnt;
        }
    }
    return 0;
}

std::vector<std::uint32_t> PartitionType::counts() const {
    std::vector<std::uint32_t> c(weight(), 0);
    for (const auto& [len, cnt] : parts_) {
        c[len - 1] = cnt;
    }
    return c;
}

ExactInt PartitionType::centralizer_order() const {
    ExactInt z = 1;
    for (const auto& [len, cnt] : parts_) {
        ExactInt pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), len, cnt);
        z *= pw * factorial(cnt);
    }
    return z;
}

std::string PartitionType::monomial() const {
    if (parts_.empty()) {
        return "1";
    }
    std::string s;
    for (const auto& [len, cnt] : parts_) {
        if (!s.empty()) {
            s += ' ';
        }
        s += "x" + std::to_string(len);
        if (cnt > 1) {
            s += "^" + std::to_string(cnt);
        }
    }
    return s;
}

std::vector<PartitionType> partitions_of(std::uint32_t weight) {
    std::vector<PartitionType> out;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> parts;
    // Largest remaining cycle length first; multiplicities descend.
    std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t remaining, std::uint32_t max_len) {
        if (remaining == 0) {
            out.push_back(PartitionType::from_parts(parts));
            return;
        }
        for (std::uint32_t len = std::min(remaining, max_len); len >= 1; --len) {
            for (std::uint32_t cnt = remaining / len; cnt >= 1; --cnt) {
                parts.emplace_back(len, cnt);
                rec(remaining - len * cnt, len - 1);
                parts.pop_back();
            }
        }
    };
    rec(weight, weight);
    return out;
}

// ---------------------------------------------------------------------------

DenseCycleIndex::DenseCycleIndex(std::uint32_t max_weight) : max_weight_(max_weight) {}

ExactRat DenseCycleIndex::coefficient(const PartitionType& type) const {
    auto it = terms_.find(type);
    return it == terms_.end() ? ExactRat(0) : it->second;
}

ExactRat DenseCycleIndex::fixed_points(const PartitionType& type) const {
    return coefficient(type) * ExactRat(type.centralizer_order());
}

void DenseCycleIndex::add(const PartitionType& type, const ExactRat& value) {
    if (type.weight() > max_weight_) {
        throw UsageError("term weight exceeds max_weight");
    }
    if (sgn(value) == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(type, value);
    if (!inserted) {
        it->second += value;
        if (sgn(it->second) == 0) {
            terms_.erase(it);
        }
    }
}

FactoredCycleIndex::FactoredCycleIndex(std::uint32_t max_weight) : max_weight_(max_weight) {
    factors_.reserve(max_weight);
    for (std::uint32_t k = 1; k <= max_weight; ++k) {
        std::vector<ExactRat> f(max_weight / k + 1);
        f[0] = 1;
        factors_.push_back(std::move(f));
    }
}

const ExactRat& FactoredCycleIndex::a(std::uint32_t k, std::uint32_t n) const {
    if (k == 0 || k > max_weight_) {
        throw UsageError("variable index out of range");
    }
    return factors_[k - 1].at(n);
}

void FactoredCycleIndex::set_a(std::uint32_t k, std::uint32_t n, ExactRat value) {
    if (k == 0 || k > max_weight_) {
        throw UsageError("variable index out of range");
    }
    if (n == 0 && value != 1) {
        throw UsageError("a_{k,0} must be 1");
    }
    factors_[k - 1].at(n) = std::move(value);
}

std::span<const ExactRat> FactoredCycleIndex::factor(std::uint32_t k) const {
    if (k == 0 || k > max_weight_) {
        throw UsageError("variable index out of range");
    }
    return factors_[k - 1];
}

namespace {

// k^n n!
ExactInt automorphism_weight(std::uint32_t k, std::uint32_t n) {
    ExactInt pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), k, n);
    return pw * factorial(n);
}

} // namespace

TruncSeries FactoredCycleIndex::factor_series(std::uint32_t k) const {
    const auto f = factor(k);
    TruncSeries s(f.size() - 1);
    for (std::uint32_t n = 0; n < f.size(); ++n) {
        s[n] = f[n] / ExactRat(automorphism_weight(k, n));
    }
    return s;
}

// ---------------------------------------------------------------------------

DenseCycleIndex zc_dense(std::uint32_t max_weight) {
    DenseCycleIndex z(max_weight);
    for (std::uint32_t r = 1; r <= max_weight; ++r) {
        for (std::uint32_t s = 1; r * s <= max_weight; ++s) {
            z.add(PartitionType::from_parts({{r, s}}),
                  make_rat(ExactInt(static_cast<unsigned long>(euler_phi(r))), ExactInt(r * s)));
        }
    }
    return z;
}

DenseCycleIndex zcn_dense(std::uint32_t n) {
    if (n == 0) {
        throw UsageError("cycle length must be positive");
    }
    DenseCycleIndex z(n);
    for (std::uint32_t r = 1; r <= n; ++r) {
        if (n % r == 0) {
            z.add(PartitionType::from_parts({{r, n / r}}),
                  make_rat(ExactInt(static_cast<unsigned long>(euler_phi(r))), ExactInt(n)));
        }
    }
    return z;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

FactoredCycleIndex zs_order_n_factored_generic(std::uint32_t n, std::uint32_t max_weight) {
    if (n == 0) {
        throw UsageError("permutation order must be positive");
    }
    FactoredCycleIndex z(max_weight);
    for (std::uint32_t k = 1; k <= max_weight; ++k) {
        const std::uint32_t len = max_weight / k;
        TruncSeries factor = TruncSeries::one(len);
        for (std::uint32_t r = 1; r <= n; ++r) {
            if (k % r != 0) {
                continue;
            }
            for (std::uint32_t s = 1; r * s <= n; ++s) {
                if (n % (r * s) != 0 || s > len) {
                    continue;
                }
                const auto term = TruncSeries::monomial(
                    len, s, make_rat(ExactInt(static_cast<unsigned long>(euler_phi(r))), ExactInt(k * s)));
                factor = factor * series_exp(term);
            }
        }
        for (std::uint32_t m = 1; m <= len; ++m) {
            z.set_a(k, m, factor[m] * ExactRat(automorphism_weight(k, m)));
        }
    }
    return z;
}

FactoredCycleIndex zs_order_n_factored(std::uint32_t n, std::uint32_t max_weight) {
    if (!is_prime(n)) {
        return zs_order_n_factored_generic(n, max_weight);
    }
    const std::uint32_t p = n;
    FactoredCycleIndex z(max_weight);
    for (std::uint32_t k = 1; k <= max_weight; ++k) {
        // exp(chi x / k + x^p / (p k)) has coefficients c_m with
        // m c_m = (chi/k) c_{m-1} + (1/k) c_{m-p}. In terms of the fixed-point
        // counts A_m = k^m m! c_m this is the integer recurrence
        // A_m = chi A_{m-1} + k^{p-1} (m-1)!/(m-p)! A_{m-p}.
        const std::uint32_t chi = (k % p == 0) ? p : 1;
        const std::uint32_t len = max_weight / k;
        ExactInt kp;
        mpz_ui_pow_ui(kp.get_mpz_t(), k, p - 1);
        std::vector<ExactInt> A(len + 1);
        A[0] = 1;
        for (std::uint32_t m = 1; m <= len; ++m) {
            A[m] = A[m - 1] * chi;
            if (m >= p) {
                ExactInt falling = 1;
                for (std::uint32_t j = m - p + 1; j <= m - 1; ++j) {
                    falling *= j;
                }
                A[m] += kp * falling * A[m - p];
            }
            z.set_a(k, m, ExactRat(A[m]));
        }
    }
    return z;
}

FactoredCycleIndex zs_full_factored(std::uint32_t max_weight) {
    FactoredCycleIndex z(max_weight);
    for (std::uint32_t k = 1; k <= max_weight; ++k) {
        for (std::uint32_t m = 1; m <= max_weight / k; ++m) {
            z.set_a(k, m, ExactRat(automorphism_weight(k, m)));
        }
    }
    return z;
}

FactoredCycleIndex ens_factored(std::uint32_t max_weight) {
    FactoredCycleIndex z(max_weight);
    for (std::uint32_t k = 1; k <= max_weight; ++k) {
        for (std::uint32_t m = 1; m <= max_weight / k; ++m) {
            z.set_a(k, m, ExactRat(1));
        }
    }
    return z;
}

ExactInt fixed_order_p_commuting(std::uint32_t p, const PartitionType& sigma_type) {
    if (!is_prime(p)) {
        throw UsageError("fixed_order_p_commuting requires a prime order");
    }
    ExactRat total = 1;
    for (const auto& [k, sk] : sigma_type.parts()) {
        const ExactRat chi = (k % p == 0) ? p : 1;
        const ExactRat lead = ExactRat(automorphism_weight(k, sk));
        ExactRat sum = 0;
        for (std::uint32_t n2 = 0; p * n2 <= sk; ++n2) {
            const std::uint32_t n1 = sk - p * n2;
            ExactInt den;
            ExactInt kpow;
            ExactInt ppow;
            mpz_ui_pow_ui(kpow.get_mpz_t(), k, n1 + n2);
            mpz_ui_pow_ui(ppow.get_mpz_t(), p, n2);
            den = factorial(n1) * factorial(n2) * kpow * ppow;
            ExactRat chipow;
            mpq_set_ui(chipow.get_mpq_t(), 1, 1);
            for (std::uint32_t i = 0; i < n1; ++i) {
                chipow *= chi;
            }
            sum += chipow / ExactRat(den);
        }
        total *= lead * sum;
    }
    if (total.get_den() != 1 || sgn(total) < 0) {
        throw InvariantError("fixed-point count is not a nonnegative integer");
    }
    return total.get_num();
}

DenseCycleIndex zs_prime_dense(std::uint32_t p, std::uint32_t max_weight) {
    if (max_weight > kDenseWeightCap) {
        throw ResourceError("dense cycle index capped at weight " + std::to_string(kDenseWeightCap));
    }
    DenseCycleIndex z(max_weight);
    for (std::uint32_t w = 0; w <= max_weight; ++w) {
        for (const auto& type : partitions_of(w)) {
            z.add(type, make_rat(fixed_order_p_commuting(p, type), type.centralizer_order()));
        }
    }
    return z;
}

FactoredCycleIndex hadamard_factored(const FactoredCycleIndex& z1, const FactoredCycleIndex& z2) {
    if (z1.max_weight() != z2.max_weight()) {
        throw UsageError("Hadamard product requires equal max_weight");
    }
    FactoredCycleIndex r(z1.max_weight());
    for (std::uint32_t k = 1; k <= z1.max_weight(); ++k) {
        const auto f1 = z1.factor(k);
        const auto f2 = z2.factor(k);
        for (std::uint32_t n = 1; n < f1.size(); ++n) {
            r.set_a(k, n, f1[n] * f2[n]);
        }
    }
    return r;
}

DenseCycleIndex hadamard_dense(const DenseCycleIndex& z1, const DenseCycleIndex& z2) {
    if (z1.max_weight() != z2.max_weight()) {
        throw UsageError("Hadamard product requires equal max_weight");
    }
    DenseCycleIndex r(z1.max_weight());
    for (const auto& [type, c1] : z1.terms()) {
        auto it = z2.terms().find(type);
        if (it == z2.terms().end()) {
            continue;
        }
        r.add(type, c1 * it->second * ExactRat(type.centralizer_order()));
    }
    return r;
}

DenseCycleIndex dense_from_factored(const FactoredCycleIndex& z, std::uint32_t max_weight) {
    if (max_weight > z.max_weight()) {
        throw UsageError("requested weight exceeds the factored series' max_weight");
    }
    if (max_weight > kDenseWeightCap) {
        throw ResourceError("dense cycle index capped at weight " + std::to_string(kDenseWeightCap));
    }
    DenseCycleIndex r(max_weight);
    for (std::uint32_t w = 0; w <= max_weight; ++w) {
        for (const auto& type : partitions_of(w)) {
            ExactRat c = 1;
            for (const auto& [k, m] : type.parts()) {
                c *= z.a(k, m) / ExactRat(automorphism_weight(k, m));
            }
            r.add(type, c);
        }
    }
    return r;
}

TruncSeries condense_types(const FactoredCycleIndex& z) {
    const std::uint32_t order = z.max_weight();
    TruncSeries acc = TruncSeries::one(order);
    for (std::uint32_t k = 1; k <= order; ++k) {
        const TruncSeries f = z.factor_series(k);
        // acc *= f(t^k); f(t^k) is sparse so multiply directly.
        TruncSeries next(order);
        for (std::uint32_t n = 0; n <= f.order(); ++n) {
            if (sgn(f[n]) == 0) {
                continue;
            }
            const std::uint32_t shift = n * k;
            for (std::uint32_t i = 0; i + shift <= order; ++i) {
                if (sgn(acc[i]) != 0) {
                    next[i + shift] += acc[i] * f[n];
                }
            }
        }
        acc = std::move(next);
    }
    return acc;
}

TruncSeries condense_types(const DenseCycleIndex& z) {
    TruncSeries s(z.max_weight());
    for (const auto& [type, c] : z.terms()) {
        s[type.weight()] += c;
    }
    return s;
}

TruncSeries condense_labelled(const FactoredCycleIndex& z) {
    if (z.max_weight() == 0) {
        return TruncSeries::one(0);
    }
    return z.factor_series(1);
}

} // namespace psl2
