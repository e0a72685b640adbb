#include "psl2/bigseries.hpp"

#include <utility>

#include "psl2/errors.hpp"

namespace psl2 {

ExactRat make_rat(const ExactInt& num, const ExactInt& den) {
    if (den == 0) {
        throw DomainError("zero denominator");
    }
    ExactRat r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const ExactInt& v) { return v.get_str(); }

std::string to_string(const ExactRat& v) { return v.get_str(); }

TruncSeries::TruncSeries(std::size_t order) : coeffs_(order + 1) {}

TruncSeries::TruncSeries(std::size_t order, std::vector<ExactRat> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() > order + 1) {
        throw UsageError("more coefficients than the truncation order allows");
    }
    coeffs_.resize(order + 1);
}

TruncSeries::TruncSeries(std::size_t order, std::initializer_list<ExactRat> coeffs)
    : TruncSeries(order, std::vector<ExactRat>(coeffs)) {}

TruncSeries TruncSeries::one(std::size_t order) { return monomial(order, 0); }

TruncSeries TruncSeries::monomial(std::size_t order, std::size_t degree, const ExactRat& c) {
    TruncSeries s(order);
    if (degree <= order) {
        s.coeffs_[degree] = c;
    }
    return s;
}

TruncSeries TruncSeries::truncated(std::size_t order) const {
    if (order > this->order()) {
        throw UsageError("cannot raise the truncation order");
    }
    return TruncSeries(order, std::vector<ExactRat>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
}

bool TruncSeries::is_zero() const {
    for (const auto& c : coeffs_) {
        if (sgn(c) != 0) {
            return false;
        }
    }
    return true;
}

bool TruncSeries::is_integral() const {
    for (const auto& c : coeffs_) {
        if (c.get_den() != 1) {
            return false;
        }
    }
    return true;
}

std::vector<ExactInt> TruncSeries::integer_coeffs(std::size_t first) const {
    std::vector<ExactInt> out;
    for (std::size_t n = first; n < coeffs_.size(); ++n) {
        if (coeffs_[n].get_den() != 1) {
            throw InvariantError("coefficient of t^" + std::to_string(n) + " is not an integer: " + to_string(coeffs_[n]));
        }
        out.push_back(coeffs_[n].get_num());
    }
    return out;
}

namespace {

void require_same_order(const TruncSeries& f, const TruncSeries& g) {
    if (f.order() != g.order()) {
        throw UsageError("truncation order mismatch: " + std::to_string(f.order()) + " vs " + std::to_string(g.order()));
    }
}

} // namespace

TruncSeries series_add(const TruncSeries& f, const TruncSeries& g) {
    require_same_order(f, g);
    TruncSeries r(f.order());
    for (std::size_t n = 0; n <= f.order(); ++n) {
        r[n] = f[n] + g[n];
    }
    return r;
}

TruncSeries series_sub(const TruncSeries& f, const TruncSeries& g) {
    require_same_order(f, g);
    TruncSeries r(f.order());
    for (std::size_t n = 0; n <= f.order(); ++n) {
        r[n] = f[n] - g[n];
    }
    return r;
}

TruncSeries series_mul(const TruncSeries& f, const TruncSeries& g) {
    require_same_order(f, g);
    const std::size_t order = f.order();
    TruncSeries r(order);
    for (std::size_t i = 0; i <= order; ++i) {
        if (sgn(f[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j <= order; ++j) {
            if (sgn(g[j]) != 0) {
                r[i + j] += f[i] * g[j];
            }
        }
    }
    return r;
}

TruncSeries series_scale(const TruncSeries& f, const ExactRat& c) {
    TruncSeries r(f.order());
    for (std::size_t n = 0; n <= f.order(); ++n) {
        r[n] = f[n] * c;
    }
    return r;
}

TruncSeries series_exp(const TruncSeries& f) {
    if (sgn(f[0]) != 0) {
        throw DomainError("exp requires a zero constant term");
    }
    const std::size_t order = f.order();
    // k f_k, kept sparse: exp is mostly applied to short polynomials.
    std::vector<std::pair<std::size_t, ExactRat>> df;
    for (std::size_t k = 1; k <= order; ++k) {
        if (sgn(f[k]) != 0) {
            df.emplace_back(k, f[k] * k);
        }
    }
    TruncSeries g(order);
    g[0] = 1;
    ExactRat acc;
    for (std::size_t n = 1; n <= order; ++n) {
        acc = 0;
        for (const auto& [k, kf] : df) {
            if (k > n) {
                break;
            }
            acc += kf * g[n - k];
        }
        g[n] = acc / n;
    }
    return g;
}

TruncSeries series_log(const TruncSeries& f) {
    if (f[0] != 1) {
        throw DomainError("log requires constant term 1");
    }
    const std::size_t order = f.order();
    std::vector<std::size_t> support;
    for (std::size_t k = 1; k <= order; ++k) {
        if (sgn(f[k]) != 0) {
            support.push_back(k);
        }
    }
    // k g_k, so the inner loop is one multiply-add per term.
    std::vector<ExactRat> kg(order + 1);
    TruncSeries g(order);
    ExactRat acc;
    for (std::size_t n = 1; n <= order; ++n) {
        acc = f[n] * n;
        for (std::size_t j : support) {
            if (j >= n) {
                break;
            }
            if (sgn(kg[n - j]) != 0) {
                acc -= kg[n - j] * f[j];
            }
        }
        kg[n] = acc;
        g[n] = acc / n;
    }
    return g;
}

TruncSeries substitute_power(const TruncSeries& f, std::size_t k) {
    if (k == 0) {
        throw UsageError("substitute_power requires k >= 1");
    }
    const std::size_t order = f.order();
    TruncSeries r(order);
    for (std::size_t n = 0; n * k <= order; ++n) {
        r[n * k] = f[n];
    }
    return r;
}

TruncSeries euler_operator(const TruncSeries& f) {
    TruncSeries r(f.order());
    for (std::size_t n = 1; n <= f.order(); ++n) {
        r[n] = f[n] * n;
    }
    return r;
}

TruncSeries moebius_log_transform(const TruncSeries& g) {
    if (g[0] != 1) {
        throw DomainError("inverse Euler transform requires constant term 1");
    }
    const std::size_t order = g.order();
    const TruncSeries lg = series_log(g);
    TruncSeries r(order);
    for (std::size_t n = 1; n <= order; ++n) {
        const int mu = moebius_mu(n);
        if (mu == 0) {
            continue;
        }
        const ExactRat w(mu, static_cast<unsigned long>(n));
        for (std::size_t j = 1; j * n <= order; ++j) {
            if (sgn(lg[j]) != 0) {
                r[j * n] += w * lg[j];
            }
        }
    }
    return r;
}

TruncSeries exp_sum_transform(const TruncSeries& f) {
    if (sgn(f[0]) != 0) {
        throw DomainError("Euler transform requires a zero constant term");
    }
    const std::size_t order = f.order();
    TruncSeries s(order);
    for (std::size_t n = 1; n <= order; ++n) {
        const ExactRat w(1, static_cast<unsigned long>(n));
        for (std::size_t j = 1; j * n <= order; ++j) {
            if (sgn(f[j]) != 0) {
                s[j * n] += w * f[j];
            }
        }
    }
    return series_exp(s);
}

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) {
        throw DomainError("euler_phi(0) is undefined");
    }
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) {
                n /= p;
            }
            result -= result / p;
        }
    }
    if (n > 1) {
        result -= result / n;
    }
    return result;
}

int moebius_mu(std::uint64_t n) {
    if (n == 0) {
        throw DomainError("moebius_mu(0) is undefined");
    }
    int mu = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) {
                return 0;
            }
            mu = -mu;
        }
    }
    if (n > 1) {
        mu = -mu;
    }
    return mu;
}

ExactInt factorial(std::size_t n) {
    ExactInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

} // namespace psl2
