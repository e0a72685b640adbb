#include "psl2/census.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "psl2/errors.hpp"

namespace psl2 {

namespace {

constexpr Arc kUnset = static_cast<Arc>(-1);

// Partial diagram built in breadth-first discovery order. Arcs [0, count)
// are labelled; arcs below the cursor have all their images defined.
class PointedBuilder {
public:
    PointedBuilder(std::size_t n, Flavor flavor, const std::function<void(const Diagram&)>& visit)
        : n_(n), flavor_(flavor), visit_(visit), rot_(n, kUnset), rot_inv_(n, kUnset), inv_(n, kUnset) {}

    void run() {
        count_ = 1;
        process(0);
    }

private:
    void process(Arc a) {
        if (a == count_) {
            if (count_ == n_) {
                visit_(Diagram(rot_, inv_, flavor_));
            }
            return;
        }
        if (rot_[a] != kUnset) {
            after_rot(a);
        } else if (flavor_ == Flavor::trivalent) {
            branch_rot_trivalent(a);
        } else {
            branch_rot_general(a);
        }
    }

    // Candidates for an image: labelled arcs accepted by `free`, then a new arc.
    template <typename Free, typename Use>
    void for_each_target(Free free, Use use) {
        const std::size_t labelled = count_;
        for (Arc x = 0; x < labelled; ++x) {
            if (free(x)) {
                use(x);
            }
        }
        if (count_ < n_) {
            const Arc fresh = static_cast<Arc>(count_++);
            use(fresh);
            --count_;
        }
    }

    void set_rot(Arc x, Arc y) {
        rot_[x] = y;
        rot_inv_[y] = x;
    }

    void clear_rot(Arc x) {
        rot_inv_[rot_[x]] = kUnset;
        rot_[x] = kUnset;
    }

    void branch_rot_trivalent(Arc a) {
        // Fixed point: a vertex of degree one.
        set_rot(a, a);
        after_rot(a);
        clear_rot(a);
        // Three-cycle a -> b -> c -> a.
        for_each_target([&](Arc x) { return x != a && rot_[x] == kUnset; },
                        [&](Arc b) {
                            for_each_target([&](Arc x) { return x != a && x != b && rot_[x] == kUnset; },
                                            [&](Arc c) {
                                                set_rot(a, b);
                                                set_rot(b, c);
                                                set_rot(c, a);
                                                after_rot(a);
                                                clear_rot(c);
                                                clear_rot(b);
                                                clear_rot(a);
                                            });
                        });
    }

    void branch_rot_general(Arc a) {
        for_each_target([&](Arc x) { return rot_inv_[x] == kUnset; },
                        [&](Arc b) {
                            set_rot(a, b);
                            after_rot(a);
                            clear_rot(a);
                        });
    }

    void after_rot(Arc a) {
        if (rot_inv_[a] != kUnset) {
            branch_inv(a);
            return;
        }
        // Only reachable for general diagrams: rot^-1(a) still open.
        for_each_target([&](Arc x) { return rot_[x] == kUnset; },
                        [&](Arc b) {
                            set_rot(b, a);
                            branch_inv(a);
                            clear_rot(b);
                        });
    }

    void branch_inv(Arc a) {
        if (inv_[a] != kUnset) {
            process(a + 1);
            return;
        }
        for_each_target([&](Arc x) { return inv_[x] == kUnset; },
                        [&](Arc b) {
                            inv_[a] = b;
                            inv_[b] = a;
                            process(a + 1);
                            inv_[b] = kUnset;
                            inv_[a] = kUnset;
                        });
    }

    std::size_t n_;
    Flavor flavor_;
    const std::function<void(const Diagram&)>& visit_;
    std::vector<Arc> rot_;
    std::vector<Arc> rot_inv_;
    std::vector<Arc> inv_;
    std::size_t count_ = 0;
};

void check_cap(std::size_t n, std::size_t cap) {
    if (n == 0) {
        throw UsageError("census size must be at least 1");
    }
    if (n > cap) {
        throw ResourceError("census size " + std::to_string(n) + " exceeds the cap of " + std::to_string(cap));
    }
}

CensusReport assemble(std::size_t n, Flavor flavor, const std::map<CanonicalCode, Diagram>& classes) {
    CensusReport r;
    r.size = n;
    r.flavor = flavor;
    r.unpointed_classes = static_cast<unsigned long>(classes.size());
    const ExactInt nfact = factorial(n);
    r.labelled_connected = 0;
    for (const auto& [code, d] : classes) {
        const std::size_t aut = automorphism_order(d);
        r.labelled_connected += nfact / static_cast<unsigned long>(aut);
        if (aut == n) {
            ++r.normal_classes;
        }
        r.class_representatives.push_back(d);
    }
    return r;
}

} // namespace

std::size_t census_cap(Flavor flavor) {
    return flavor == Flavor::trivalent ? kCensusCapTrivalent : kCensusCapGeneral;
}

void for_each_pointed(std::size_t n, Flavor flavor, const std::function<void(const Diagram&)>& visit) {
    check_cap(n, census_cap(flavor));
    PointedBuilder(n, flavor, visit).run();
}

CensusReport enumerate_size(std::size_t n, Flavor flavor) {
    std::map<CanonicalCode, Diagram> classes;
    ExactInt pointed = 0;
    for_each_pointed(n, flavor, [&](const Diagram& d) {
        ++pointed;
        auto code = canonical_code(d);
        if (classes.find(code) == classes.end()) {
            classes.emplace(std::move(code), canonical_form(d));
        }
    });
    CensusReport r = assemble(n, flavor, classes);
    r.pointed_classes = pointed;
    if (r.labelled_connected != pointed * factorial(n - 1)) {
        throw InvariantError("census at size " + std::to_string(n) + ": pointed classes disagree with sum n!/|Aut|");
    }
    return r;
}

namespace {

std::vector<std::vector<Arc>> permutations_with_order_dividing(std::size_t n, std::size_t order) {
    std::vector<Arc> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<Arc>> out;
    do {
        bool ok = true;
        for (Arc a = 0; a < n && ok; ++a) {
            Arc b = a;
            for (std::size_t k = 0; k < order; ++k) {
                b = p[b];
            }
            ok = (b == a);
        }
        if (ok) {
            out.push_back(p);
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<std::vector<Arc>> all_permutations(std::size_t n) {
    std::vector<Arc> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<Arc>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace

ExactInt count_permutations_of_order_dividing(std::size_t n, std::size_t order) {
    if (n > 10) {
        throw ResourceError("brute-force permutation count capped at n = 10");
    }
    return static_cast<unsigned long>(permutations_with_order_dividing(n, order).size());
}

CensusReport enumerate_size_naive(std::size_t n, Flavor flavor) {
    check_cap(n, flavor == Flavor::trivalent ? kNaiveCapTrivalent : kNaiveCapGeneral);
    const auto involutions = permutations_with_order_dividing(n, 2);
    const auto rotations = flavor == Flavor::trivalent ? permutations_with_order_dividing(n, 3) : all_permutations(n);
    std::set<std::vector<std::uint32_t>> pointed;
    std::map<CanonicalCode, Diagram> classes;
    ExactInt labelled = 0;
    for (const auto& inv : involutions) {
        for (const auto& rot : rotations) {
            Diagram d(rot, inv, flavor);
            if (!is_connected(d)) {
                continue;
            }
            ++labelled;
            for (Arc a = 0; a < n; ++a) {
                pointed.insert(pointed_code(d, a));
            }
            auto code = canonical_code(d);
            if (classes.find(code) == classes.end()) {
                classes.emplace(std::move(code), canonical_form(d));
            }
        }
    }
    CensusReport r = assemble(n, flavor, classes);
    // Direct count instead of sum n!/|Aut|.
    r.labelled_connected = labelled;
    r.pointed_classes = static_cast<unsigned long>(pointed.size());
    return r;
}

std::vector<Diagram> enumerate_normal(std::size_t n, Flavor flavor) {
    std::vector<Diagram> out;
    for (const auto& d : enumerate_size(n, flavor).class_representatives) {
        if (is_normal(d)) {
            out.push_back(d);
        }
    }
    return out;
}

} // namespace psl2
