#pragma once

// Exact truncated power series in one variable t, with the transforms used by
// the species calculus (exp, log, t -> t^k, Euler operator, Euler and
// inverse Euler transforms) and a few arithmetic functions.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace psl2 {

using ExactInt = mpz_class;
using ExactRat = mpq_class;

// Builds num/den in lowest terms. Throws DomainError on a zero denominator.
ExactRat make_rat(const ExactInt& num, const ExactInt& den);

std::string to_string(const ExactInt& v);
std::string to_string(const ExactRat& v);

/// Power series c_0 + c_1 t + ... + c_N t^N with N the (inclusive) truncation
/// order. Binary operations require equal orders; there is no implicit
/// re-truncation.
class TruncSeries {
public:
    explicit TruncSeries(std::size_t order);
    TruncSeries(std::size_t order, std::vector<ExactRat> coeffs);
    TruncSeries(std::size_t order, std::initializer_list<ExactRat> coeffs);

    static TruncSeries one(std::size_t order);
    // c * t^degree; zero when degree > order.
    static TruncSeries monomial(std::size_t order, std::size_t degree, const ExactRat& c = 1);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    std::span<const ExactRat> coeffs() const noexcept { return coeffs_; }

    const ExactRat& operator[](std::size_t n) const { return coeffs_.at(n); }
    ExactRat& operator[](std::size_t n) { return coeffs_.at(n); }

    // Same series seen at a lower (or equal) truncation order.
    TruncSeries truncated(std::size_t order) const;

    bool is_zero() const;
    // True when every coefficient is an integer.
    bool is_integral() const;
    // Coefficients first..order as integers; throws InvariantError if any is not.
    std::vector<ExactInt> integer_coeffs(std::size_t first = 0) const;

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<ExactRat> coeffs_;
};

TruncSeries series_add(const TruncSeries& f, const TruncSeries& g);
TruncSeries series_sub(const TruncSeries& f, const TruncSeries& g);
TruncSeries series_mul(const TruncSeries& f, const TruncSeries& g);
TruncSeries series_scale(const TruncSeries& f, const ExactRat& c);

inline TruncSeries operator+(const TruncSeries& f, const TruncSeries& g) { return series_add(f, g); }
inline TruncSeries operator-(const TruncSeries& f, const TruncSeries& g) { return series_sub(f, g); }
inline TruncSeries operator*(const TruncSeries& f, const TruncSeries& g) { return series_mul(f, g); }

// exp(f) via n g_n = sum_k k f_k g_{n-k}. Requires f_0 == 0.
TruncSeries series_exp(const TruncSeries& f);
// log(f) via n g_n = n f_n - sum_{k<n} k g_k f_{n-k}. Requires f_0 == 1.
TruncSeries series_log(const TruncSeries& f);

// f(t^k) at the same order. Requires k >= 1.
TruncSeries substitute_power(const TruncSeries& f, std::size_t k);

// t d/dt: c_n -> n c_n.
TruncSeries euler_operator(const TruncSeries& f);

// Connected-types series from all-structures types series:
// sum_{n>=1} mu(n)/n log g(t^n). Requires g_0 == 1.
TruncSeries moebius_log_transform(const TruncSeries& g);

// Euler transform exp(sum_{n>=1} f(t^n)/n). Requires f_0 == 0.
TruncSeries exp_sum_transform(const TruncSeries& f);

std::uint64_t euler_phi(std::uint64_t n);
int moebius_mu(std::uint64_t n);

ExactInt factorial(std::size_t n);

} // namespace psl2
