#pragma once

// Brute-force reference computations shared by the test binaries. Everything
// here enumerates permutations directly and is only usable at small sizes.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "psl2/bigseries.hpp"
#include "psl2/cycleindex.hpp"
#include "psl2/diagram.hpp"

namespace oracle {

using Perm = std::vector<std::uint32_t>;

inline Perm identity(std::size_t n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0u);
    return p;
}

inline std::vector<Perm> all_perms(std::size_t n) {
    std::vector<Perm> out;
    Perm p = identity(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline bool power_is_identity(const Perm& p, std::uint32_t k) {
    for (std::uint32_t a = 0; a < p.size(); ++a) {
        std::uint32_t b = a;
        for (std::uint32_t i = 0; i < k; ++i) {
            b = p[b];
        }
        if (b != a) {
            return false;
        }
    }
    return true;
}

inline bool commute(const Perm& x, const Perm& y) {
    for (std::uint32_t a = 0; a < x.size(); ++a) {
        if (x[y[a]] != y[x[a]]) {
            return false;
        }
    }
    return true;
}

inline bool is_single_cycle(const Perm& p) {
    std::uint32_t a = 0;
    std::size_t len = 0;
    do {
        a = p[a];
        ++len;
    } while (a != 0);
    return len == p.size();
}

// A permutation of the given cycle type, cycles laid out consecutively.
inline Perm representative(const psl2::PartitionType& type) {
    Perm sigma(type.weight());
    std::uint32_t pos = 0;
    for (const auto& [len, cnt] : type.parts()) {
        for (std::uint32_t c = 0; c < cnt; ++c) {
            for (std::uint32_t i = 0; i < len; ++i) {
                sigma[pos + i] = pos + (i + 1) % len;
            }
            pos += len;
        }
    }
    return sigma;
}

// tau with tau^order = id and tau sigma = sigma tau.
inline long commuting_of_order_dividing(std::uint32_t order, const psl2::PartitionType& type) {
    const Perm sigma = representative(type);
    long count = 0;
    for (const auto& tau : all_perms(type.weight())) {
        if (power_is_identity(tau, order) && commute(tau, sigma)) {
            ++count;
        }
    }
    return count;
}

// Single n-cycles c with sigma c sigma^-1 = c: fixed points of the
// relabeling sigma on cyclic orders.
inline long cyclic_orders_fixed(const psl2::PartitionType& type) {
    const Perm sigma = representative(type);
    long count = 0;
    for (const auto& c : all_perms(type.weight())) {
        if (is_single_cycle(c) && commute(c, sigma)) {
            ++count;
        }
    }
    return count;
}

// Permutations of n points with p^order = id.
inline long count_order_dividing(std::size_t n, std::uint32_t order) {
    long count = 0;
    for (const auto& p : all_perms(n)) {
        if (power_is_identity(p, order)) {
            ++count;
        }
    }
    return count;
}

// Does some bijection phi with phi(base1) = base2 intertwine both generators?
inline bool isomorphic_by_search(const psl2::Diagram& d1, const psl2::Diagram& d2) {
    if (d1.size() != d2.size()) {
        return false;
    }
    for (const auto& phi : all_perms(d1.size())) {
        bool ok = true;
        for (psl2::Arc a = 0; a < d1.size() && ok; ++a) {
            ok = phi[d1.rot(a)] == d2.rot(phi[a]) && phi[d1.inv(a)] == d2.inv(phi[a]);
        }
        if (ok) {
            return true;
        }
    }
    return false;
}

inline Perm random_perm(std::size_t n, std::mt19937& rng) {
    Perm p = identity(n);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

} // namespace oracle
