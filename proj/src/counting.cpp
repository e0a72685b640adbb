#include "psl2/counting.hpp"

#include <algorithm>
#include <sstream>

#include "psl2/cycleindex.hpp"
#include "psl2/errors.hpp"

namespace psl2 {

namespace {

// sum over n1 + p n2 = n of 1 / (n1! n2! p^n2)
ExactRat order_p_egf_coefficient(std::size_t n, std::size_t p) {
    ExactRat sum = 0;
    for (std::size_t n2 = 0; p * n2 <= n; ++n2) {
        const std::size_t n1 = n - p * n2;
        ExactInt ppow;
        mpz_ui_pow_ui(ppow.get_mpz_t(), p, n2);
        sum += ExactRat(1) / ExactRat(factorial(n1) * factorial(n2) * ppow);
    }
    return sum;
}

ExactInt poly(std::initializer_list<long> coeffs_high_to_low, long n) {
    ExactInt v = 0;
    for (long c : coeffs_high_to_low) {
        v = v * n + c;
    }
    return v;
}

// sum_r mu(r)/r sum_k log F_k(t^{rk}) where F_k is the condensed x_k factor.
TruncSeries connected_types_from_factored(const FactoredCycleIndex& z) {
    const std::size_t order = z.max_weight();
    TruncSeries result(order);
    for (std::uint32_t k = 1; k <= order; ++k) {
        const TruncSeries log_k = series_log(z.factor_series(k));
        for (std::size_t r = 1; r * k <= order; ++r) {
            const int mu = moebius_mu(r);
            if (mu == 0) {
                continue;
            }
            const ExactRat w(mu, static_cast<unsigned long>(r));
            for (std::size_t j = 1; j * r * k <= order; ++j) {
                if (sgn(log_k[j]) != 0) {
                    result[j * r * k] += w * log_k[j];
                }
            }
        }
    }
    return result;
}

FactoredCycleIndex trivalent_pairs_factored(std::size_t order) {
    const auto w = static_cast<std::uint32_t>(order);
    const auto z2 = zs_order_n_factored(2, w);
    const auto z3 = zs_order_n_factored(3, w);
    // The factored coefficients are fixed-point counts, hence integers.
    for (std::uint32_t k = 1; k <= w; ++k) {
        for (const auto& c : z2.factor(k)) {
            if (c.get_den() != 1) {
                throw InvariantError("non-integral fixed-point count in Z_S2");
            }
        }
        for (const auto& c : z3.factor(k)) {
            if (c.get_den() != 1) {
                throw InvariantError("non-integral fixed-point count in Z_S3");
            }
        }
    }
    return hadamard_factored(z2, z3);
}

} // namespace

ExactInt order_p_permutation_count(std::size_t n, std::size_t p) {
    std::vector<ExactInt> I(n + 1);
    I[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        I[m] = I[m - 1];
        if (m >= p) {
            ExactInt falling = 1;
            for (std::size_t j = m - p + 1; j <= m - 1; ++j) {
                falling *= static_cast<unsigned long>(j);
            }
            I[m] += falling * I[m - p];
        }
    }
    return I[n];
}

TruncSeries d3star_closed_form(std::size_t order) {
    TruncSeries s(order);
    for (std::size_t n = 0; n <= order; ++n) {
        s[n] = ExactRat(factorial(n)) * order_p_egf_coefficient(n, 2) * order_p_egf_coefficient(n, 3);
    }
    return s;
}

TruncSeries d3star_recurrence(std::size_t order) {
    if (order < 5) {
        throw UsageError("the recurrence needs order >= 5 (six seeds)");
    }
    TruncSeries a(order);
    a[0] = 1;
    a[1] = 1;
    a[2] = 1;
    a[3] = 2;
    a[4] = ExactRat(15, 4);
    a[5] = ExactRat(91, 20);
    for (std::size_t m = 6; m <= order; ++m) {
        const long n = static_cast<long>(m) - 6;
        ExactRat rhs = ExactRat(poly({1, 18, 121, 373, 511, 242}, n)) * a[m - 6];
        rhs += ExactRat(poly({3, 15, 18}, n)) * a[m - 5];
        rhs += ExactRat(poly({2, 33, 205, 566, 582}, n)) * a[m - 4];
        rhs += ExactRat(poly({3, 52, 333, 938, 982}, n)) * a[m - 3];
        rhs += ExactRat(poly({1, 12, 53, 85}, n)) * a[m - 2];
        rhs += ExactRat(poly({1, 9, 20, 1}, n)) * a[m - 1];
        a[m] = rhs / ExactRat(poly({1, 18, 119, 343, 366}, n));
    }
    return a;
}

TruncSeries pointed_series(std::size_t order) {
    const std::size_t work = std::max<std::size_t>(order, 5);
    const TruncSeries p = euler_operator(series_log(d3star_recurrence(work)));
    return p.truncated(order);
}

TruncSeries disconnected_types_dense(std::size_t order) {
    if (order > kDenseOrderCap) {
        throw ResourceError("dense method capped at order " + std::to_string(kDenseOrderCap));
    }
    const auto w = static_cast<std::uint32_t>(order);
    return condense_types(hadamard_dense(zs_prime_dense(2, w), zs_prime_dense(3, w)));
}

TruncSeries unpointed_series_dense(std::size_t order) {
    return moebius_log_transform(disconnected_types_dense(order));
}

TruncSeries disconnected_types_fast(std::size_t order) { return condense_types(trivalent_pairs_factored(order)); }

TruncSeries unpointed_series_fast(std::size_t order) {
    return connected_types_from_factored(trivalent_pairs_factored(order));
}

TruncSeries general_series(std::size_t order, bool pointed) {
    if (pointed) {
        // Labelled (involution, permutation) pairs: I2(n) n!, EGF coefficient I2(n).
        TruncSeries star(order);
        for (std::size_t n = 0; n <= order; ++n) {
            star[n] = ExactRat(order_p_permutation_count(n, 2));
        }
        return euler_operator(series_log(star));
    }
    const auto w = static_cast<std::uint32_t>(order);
    return connected_types_from_factored(hadamard_factored(zs_order_n_factored(2, w), zs_full_factored(w)));
}

SeriesBundle compute_bundle(std::size_t order) {
    SeriesBundle b;
    b.order = order;
    const std::size_t work = std::max<std::size_t>(order, 5);
    b.d3_star_egf = d3star_recurrence(work).truncated(order);
    b.d3_labelled_log = series_log(b.d3_star_egf);
    b.pointed_types = euler_operator(b.d3_labelled_log);
    const auto h = trivalent_pairs_factored(order);
    b.disconnected_types = condense_types(h);
    b.unpointed_types = connected_types_from_factored(h);
    return b;
}

std::vector<ExactInt> ordinary_coefficients(const TruncSeries& s) { return s.integer_coeffs(1); }

std::string table_string(const TruncSeries& s) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t n = 0; n <= s.order(); ++n) {
        if (sgn(s[n]) == 0) {
            continue;
        }
        const ExactRat& c = s[n];
        if (!first) {
            os << (sgn(c) < 0 ? " - " : " + ");
        } else if (sgn(c) < 0) {
            os << "-";
        }
        const ExactRat mag = abs(c);
        if (n == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) {
                os << mag.get_str() << "*";
            }
            os << "t";
            if (n > 1) {
                os << "^" << n;
            }
        }
        first = false;
    }
    if (first) {
        os << "0";
    }
    return os.str();
}

} // namespace psl2
