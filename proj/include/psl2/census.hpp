#pragma once

// Exhaustive enumeration of connected diagrams of a given size: the
// independent ground truth the generating series are checked against.

#include <cstddef>
#include <functional>
#include <vector>

#include "psl2/bigseries.hpp"
#include "psl2/diagram.hpp"

namespace psl2 {

struct CensusReport {
    std::size_t size = 0;
    Flavor flavor = Flavor::trivalent;
    ExactInt labelled_connected;  // a_n: connected structures on {0..n-1}
    ExactInt pointed_classes;     // subgroups of index n
    ExactInt unpointed_classes;   // conjugacy classes of such subgroups
    std::size_t normal_classes = 0;
    // Canonical forms, sorted by canonical code.
    std::vector<Diagram> class_representatives;
};

inline constexpr std::size_t kCensusCapTrivalent = 22;
inline constexpr std::size_t kCensusCapGeneral = 11;
inline constexpr std::size_t kNaiveCapTrivalent = 7;
inline constexpr std::size_t kNaiveCapGeneral = 6;

std::size_t census_cap(Flavor flavor);

// Visits every connected pointed diagram of size n exactly once up to pointed
// isomorphism, each in its breadth-first canonical labelling with base 0.
// Built by backtracking over rotation orbits and involution pairings in
// discovery order. Throws ResourceError past census_cap.
void for_each_pointed(std::size_t n, Flavor flavor, const std::function<void(const Diagram&)>& visit);

// Backtracking census. labelled_connected is assembled as sum n!/|Aut| over
// the unpointed classes.
CensusReport enumerate_size(std::size_t n, Flavor flavor = Flavor::trivalent);

// Filters all (inv, rot) permutation pairs; only for validating the
// backtracking enumerator.
CensusReport enumerate_size_naive(std::size_t n, Flavor flavor = Flavor::trivalent);

std::vector<Diagram> enumerate_normal(std::size_t n, Flavor flavor = Flavor::trivalent);

// Small brute-force counts used as oracles.
ExactInt count_permutations_of_order_dividing(std::size_t n, std::size_t order);

} // namespace psl2
