#pragma once

// Diagrams: a finite set of arcs with a rotation permutation (the Z action,
// a -> a+1) and an involution (a -> a^-1). Vertices are rotation orbits, edges
// are involution orbits; an inv-fixed arc is a folded edge. A diagram is
// trivalent when rot^3 = id, and then encodes a PSL2(Z)-set; in general it
// encodes a set with an action of Z * Z/2Z.
//
// A connected pointed diagram corresponds to a finite-index subgroup (the
// stabilizer of the base arc); the number of arcs is the index.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace psl2 {

using Arc = std::uint32_t;
using ArcMap = std::vector<Arc>;

enum class Flavor { trivalent, general };

class Diagram {
public:
    // Validates that rot and inv are permutations of 0..n-1, that inv is an
    // involution and, with Flavor::trivalent, that rot^3 = id. n >= 1.
    Diagram(std::vector<Arc> rot, std::vector<Arc> inv, Flavor flavor = Flavor::general);

    std::size_t size() const noexcept { return rot_.size(); }
    Flavor flavor() const noexcept { return flavor_; }
    // rot^3 == id, independent of the declared flavor.
    bool satisfies_trivalence() const;

    Arc rot(Arc a) const { return rot_[a]; }
    Arc rot_inv(Arc a) const { return rot_inv_[a]; }
    Arc inv(Arc a) const { return inv_[a]; }

    std::span<const Arc> rot_images() const noexcept { return rot_; }
    std::span<const Arc> inv_images() const noexcept { return inv_; }

    // Relabel: arc a becomes relabel[a].
    Diagram relabeled(std::span<const Arc> relabel) const;

    std::size_t vertex_count() const;  // rotation orbits
    std::size_t edge_count() const;    // involution orbits

    friend bool operator==(const Diagram& a, const Diagram& b) { return a.rot_ == b.rot_ && a.inv_ == b.inv_; }

private:
    std::vector<Arc> rot_;
    std::vector<Arc> rot_inv_;
    std::vector<Arc> inv_;
    Flavor flavor_;
};

Diagram make_diagram(std::size_t n, std::vector<Arc> rot, std::vector<Arc> inv, bool require_trivalent);

// Single-vertex diagrams used as landmarks.
Diagram terminal_diagram();  // one arc, whole group

bool is_connected(const Diagram& d);

class PointedDiagram {
public:
    // Requires base < d.size() and d connected.
    PointedDiagram(Diagram d, Arc base);

    const Diagram& diagram() const noexcept { return d_; }
    Arc base() const noexcept { return base_; }

private:
    Diagram d_;
    Arc base_;
};

// Words in the generators, applied left to right:
// 'r' = rot, 'R' = rot^-1, 'i' = inv.
using Word = std::string;
Arc apply_word(const Diagram& d, Arc a, std::string_view word);
Word inverse_word(std::string_view word);

// g fixes src.base but moves dst.base: an element of Fix(src) not in Fix(dst).
struct CriticalPair {
    Arc src_arc;             // arc reached by two routes
    Arc image;               // image already assigned
    Arc conflicting_image;   // image forced by the second route
    Word word;
};

struct MorphismResult {
    std::optional<ArcMap> map;              // set when a morphism exists
    std::optional<CriticalPair> obstruction;  // set otherwise

    explicit operator bool() const noexcept { return map.has_value(); }
};

// Closure of (src.base, dst.base) under (a, b) -> (rot a, rot b) and
// (a, b) -> (inv a, inv b); fails on the first pair of closure elements
// sharing a source arc with different targets.
MorphismResult find_pointed_morphism(const PointedDiagram& src, const PointedDiagram& dst);
bool pointed_morphism_exists(const PointedDiagram& src, const PointedDiagram& dst);

// Checks m(rot a) == rot m(a), m(inv a) == inv m(a) and m(src.base) == dst.base.
bool is_pointed_morphism(const PointedDiagram& src, const PointedDiagram& dst, std::span<const Arc> map);

bool pointed_isomorphic(const PointedDiagram& p1, const PointedDiagram& p2);

/// Complete isomorphism invariant of a connected diagram: the
/// lexicographically least serialization (n, rot', inv') over all
/// breadth-first relabelings started at each arc, generators visited in the
/// order [rot, rot^-1, inv] (rot^-1 = rot^2 for trivalent diagrams).
struct CanonicalCode {
    std::vector<std::uint32_t> words;
    auto operator<=>(const CanonicalCode&) const = default;
};

// BFS relabeling from base; relabel[a] is the new label of a.
ArcMap bfs_relabeling(const Diagram& d, Arc base);
// Serialization of the relabeled pointed diagram (n, rot', inv').
std::vector<std::uint32_t> pointed_code(const Diagram& d, Arc base);

CanonicalCode canonical_code(const Diagram& d);
// The relabeled diagram whose serialization is the canonical code.
Diagram canonical_form(const Diagram& d);

// Self-maps of (d, 0) -> (d, a) that are isomorphisms, one per such a.
std::vector<ArcMap> automorphisms(const Diagram& d);
std::size_t automorphism_order(const Diagram& d);
bool is_normal(const Diagram& d);

// Subgroup of p_big contained in subgroup of p_small.
bool subgroup_includes(const PointedDiagram& p_big, const PointedDiagram& p_small);
bool conjugate_subgroups(const PointedDiagram& p1, const PointedDiagram& p2);

// Barycentric subdivision with its two-colouring: black vertices are the
// rotation orbits, white vertices the involution orbits, one edge per arc.
struct BicoloredGraph {
    std::size_t black_count = 0;
    std::size_t white_count = 0;
    // edges[a] = (black vertex of a, white vertex of a)
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    // White vertices have degree 1 or 2; every edge joins black to white.
    bool is_clean() const;
    std::string to_dot(std::string_view name = "diagram") const;
};

BicoloredGraph barycentric_export(const Diagram& d);

// Text format: "n=<int>; rot=[...]; inv=[...]" with an optional "; base=<int>".
// Whitespace-insensitive; keys in this order.
struct ParsedDiagram {
    Diagram diagram;
    std::optional<Arc> base;
};

ParsedDiagram parse_diagram(std::string_view text);
std::string format_diagram(const Diagram& d, std::optional<Arc> base = std::nullopt);

} // namespace psl2
