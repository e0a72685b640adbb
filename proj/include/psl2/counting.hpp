#pragma once

// Generating series counting finite-index subgroups of PSL2(Z) (trivalent
// diagrams) and of Z * Z/2Z (general diagrams) by index.
//
//   pointed   : subgroups of index n            (coefficient of t^n)
//   unpointed : conjugacy classes of subgroups  (coefficient of t^n)

#include <cstddef>
#include <vector>

#include "psl2/bigseries.hpp"

namespace psl2 {

inline constexpr std::size_t kDenseOrderCap = 24;

struct SeriesBundle {
    std::size_t order = 0;
    TruncSeries d3_star_egf{0};       // a*_n = I2(n) I3(n) / n!
    TruncSeries d3_labelled_log{0};   // log of d3_star_egf
    TruncSeries pointed_types{0};     // euler_operator(d3_labelled_log)
    TruncSeries unpointed_types{0};   // connected types
    TruncSeries disconnected_types{0};
};

// a*_n = sum over n1+2n2 = n, n3+3n4 = n of n!/(n1! n2! n3! n4! 2^n2 3^n4).
TruncSeries d3star_closed_form(std::size_t order);
// Same series from the six-term linear recurrence with polynomial
// coefficients, seeded with a*_0..a*_5 = 1, 1, 1, 2, 15/4, 91/20.
TruncSeries d3star_recurrence(std::size_t order);

TruncSeries pointed_series(std::size_t order);

// Dense cycle-index route (order <= kDenseOrderCap).
TruncSeries disconnected_types_dense(std::size_t order);
TruncSeries unpointed_series_dense(std::size_t order);

// Separable (factored) route; per k a univariate log in t^k.
TruncSeries disconnected_types_fast(std::size_t order);
TruncSeries unpointed_series_fast(std::size_t order);

// Z * Z/2Z: Z_{S_3} replaced by Z_S and I3(n) by n!.
TruncSeries general_series(std::size_t order, bool pointed);

SeriesBundle compute_bundle(std::size_t order);

// Coefficients 1..order as integers (InvariantError otherwise).
std::vector<ExactInt> ordinary_coefficients(const TruncSeries& s);
// "t + t^2 + 4 t^3 + ..." up to the truncation order.
std::string table_string(const TruncSeries& s);

// Number of permutations sigma of n points with sigma^p = id, by the
// recurrence I(n) = I(n-1) + (n-1)...(n-p+1) I(n-p) (p prime).
ExactInt order_p_permutation_count(std::size_t n, std::size_t p);

} // namespace psl2
