#include "psl2/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

#include "psl2/errors.hpp"

namespace psl2 {

namespace {

constexpr Arc kUnset = static_cast<Arc>(-1);

void require_permutation(std::span<const Arc> p, const char* what) {
    std::vector<bool> hit(p.size(), false);
    for (Arc x : p) {
        if (x >= p.size() || hit[x]) {
            throw DomainError(std::string(what) + " is not a permutation");
        }
        hit[x] = true;
    }
}

} // namespace

Diagram::Diagram(std::vector<Arc> rot, std::vector<Arc> inv, Flavor flavor)
    : rot_(std::move(rot)), inv_(std::move(inv)), flavor_(flavor) {
    if (rot_.empty()) {
        throw DomainError("a diagram needs at least one arc");
    }
    if (rot_.size() != inv_.size()) {
        throw DomainError("rot and inv have different lengths");
    }
    require_permutation(rot_, "rot");
    require_permutation(inv_, "inv");
    for (Arc a = 0; a < inv_.size(); ++a) {
        if (inv_[inv_[a]] != a) {
            throw DomainError("inv is not an involution");
        }
    }
    if (flavor_ == Flavor::trivalent && !satisfies_trivalence()) {
        throw DomainError("rot^3 != id in a trivalent diagram");
    }
    rot_inv_.resize(rot_.size());
    for (Arc a = 0; a < rot_.size(); ++a) {
        rot_inv_[rot_[a]] = a;
    }
}

bool Diagram::satisfies_trivalence() const {
    for (Arc a = 0; a < rot_.size(); ++a) {
        if (rot_[rot_[rot_[a]]] != a) {
            return false;
        }
    }
    return true;
}

Diagram Diagram::relabeled(std::span<const Arc> relabel) const {
    require_permutation(relabel, "relabeling");
    if (relabel.size() != size()) {
        throw UsageError("relabeling has the wrong size");
    }
    std::vector<Arc> rot(size());
    std::vector<Arc> inv(size());
    for (Arc a = 0; a < size(); ++a) {
        rot[relabel[a]] = relabel[rot_[a]];
        inv[relabel[a]] = relabel[inv_[a]];
    }
    return Diagram(std::move(rot), std::move(inv), flavor_);
}

namespace {

std::size_t orbit_count(std::span<const Arc> perm) {
    std::vector<bool> seen(perm.size(), false);
    std::size_t orbits = 0;
    for (Arc a = 0; a < perm.size(); ++a) {
        if (seen[a]) {
            continue;
        }
        ++orbits;
        for (Arc b = a; !seen[b]; b = perm[b]) {
            seen[b] = true;
        }
    }
    return orbits;
}

} // namespace

std::size_t Diagram::vertex_count() const { return orbit_count(rot_); }

std::size_t Diagram::edge_count() const { return orbit_count(inv_); }

Diagram make_diagram(std::size_t n, std::vector<Arc> rot, std::vector<Arc> inv, bool require_trivalent) {
    if (rot.size() != n || inv.size() != n) {
        throw DomainError("image arrays must have n entries");
    }
    return Diagram(std::move(rot), std::move(inv), require_trivalent ? Flavor::trivalent : Flavor::general);
}

Diagram terminal_diagram() { return Diagram({0}, {0}, Flavor::trivalent); }

bool is_connected(const Diagram& d) {
    const std::size_t n = d.size();
    std::vector<bool> seen(n, false);
    std::vector<Arc> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const Arc a = stack.back();
        stack.pop_back();
        for (Arc b : {d.rot(a), d.inv(a)}) {
            if (!seen[b]) {
                seen[b] = true;
                ++reached;
                stack.push_back(b);
            }
        }
    }
    return reached == n;
}

PointedDiagram::PointedDiagram(Diagram d, Arc base) : d_(std::move(d)), base_(base) {
    if (base_ >= d_.size()) {
        throw DomainError("base arc out of range");
    }
    if (!is_connected(d_)) {
        throw DomainError("pointed diagrams must be connected");
    }
}

Arc apply_word(const Diagram& d, Arc a, std::string_view word) {
    for (char c : word) {
        switch (c) {
        case 'r': a = d.rot(a); break;
        case 'R': a = d.rot_inv(a); break;
        case 'i': a = d.inv(a); break;
        default: throw UsageError(std::string("unknown generator letter '") + c + "'");
        }
    }
    return a;
}

Word inverse_word(std::string_view word) {
    Word w(word.rbegin(), word.rend());
    for (char& c : w) {
        if (c == 'r') {
            c = 'R';
        } else if (c == 'R') {
            c = 'r';
        }
    }
    return w;
}

MorphismResult find_pointed_morphism(const PointedDiagram& src, const PointedDiagram& dst) {
    const Diagram& s = src.diagram();
    const Diagram& t = dst.diagram();
    ArcMap m(s.size(), kUnset);
    std::vector<Word> route(s.size());
    std::deque<Arc> queue;
    m[src.base()] = dst.base();
    queue.push_back(src.base());
    while (!queue.empty()) {
        const Arc a = queue.front();
        queue.pop_front();
        for (char g : {'r', 'i'}) {
            const Arc b = g == 'r' ? s.rot(a) : s.inv(a);
            const Arc image = g == 'r' ? t.rot(m[a]) : t.inv(m[a]);
            if (m[b] == kUnset) {
                m[b] = image;
                route[b] = route[a] + g;
                queue.push_back(b);
            } else if (m[b] != image) {
                MorphismResult r;
                r.obstruction = CriticalPair{b, m[b], image, route[a] + g + inverse_word(route[b])};
                return r;
            }
        }
    }
    MorphismResult r;
    r.map = std::move(m);
    return r;
}

bool pointed_morphism_exists(const PointedDiagram& src, const PointedDiagram& dst) {
    return static_cast<bool>(find_pointed_morphism(src, dst));
}

bool is_pointed_morphism(const PointedDiagram& src, const PointedDiagram& dst, std::span<const Arc> map) {
    const Diagram& s = src.diagram();
    const Diagram& t = dst.diagram();
    if (map.size() != s.size() || map[src.base()] != dst.base()) {
        return false;
    }
    for (Arc a = 0; a < s.size(); ++a) {
        if (map[a] >= t.size()) {
            return false;
        }
        if (map[s.rot(a)] != t.rot(map[a]) || map[s.inv(a)] != t.inv(map[a])) {
            return false;
        }
    }
    return true;
}

bool pointed_isomorphic(const PointedDiagram& p1, const PointedDiagram& p2) {
    // Between connected diagrams of equal size a pointed morphism is onto,
    // hence bijective.
    return p1.diagram().size() == p2.diagram().size() && pointed_morphism_exists(p1, p2);
}

ArcMap bfs_relabeling(const Diagram& d, Arc base) {
    const std::size_t n = d.size();
    ArcMap label(n, kUnset);
    std::vector<Arc> order;
    order.reserve(n);
    label[base] = 0;
    order.push_back(base);
    for (std::size_t head = 0; head < order.size(); ++head) {
        const Arc a = order[head];
        for (Arc b : {d.rot(a), d.rot_inv(a), d.inv(a)}) {
            if (label[b] == kUnset) {
                label[b] = static_cast<Arc>(order.size());
                order.push_back(b);
            }
        }
    }
    if (order.size() != n) {
        throw DomainError("diagram is not connected");
    }
    return label;
}

std::vector<std::uint32_t> pointed_code(const Diagram& d, Arc base) {
    const ArcMap label = bfs_relabeling(d, base);
    const std::size_t n = d.size();
    std::vector<std::uint32_t> code(2 * n + 1);
    code[0] = static_cast<std::uint32_t>(n);
    for (Arc a = 0; a < n; ++a) {
        code[1 + label[a]] = label[d.rot(a)];
        code[1 + n + label[a]] = label[d.inv(a)];
    }
    return code;
}

namespace {

Arc canonical_base(const Diagram& d, std::vector<std::uint32_t>* best_out) {
    if (!is_connected(d)) {
        throw DomainError("canonical code requires a connected diagram");
    }
    std::vector<std::uint32_t> best;
    Arc best_base = 0;
    for (Arc a = 0; a < d.size(); ++a) {
        auto code = pointed_code(d, a);
        if (a == 0 || code < best) {
            best = std::move(code);
            best_base = a;
        }
    }
    if (best_out != nullptr) {
        *best_out = std::move(best);
    }
    return best_base;
}

} // namespace

CanonicalCode canonical_code(const Diagram& d) {
    CanonicalCode c;
    canonical_base(d, &c.words);
    return c;
}

Diagram canonical_form(const Diagram& d) {
    const Arc base = canonical_base(d, nullptr);
    return d.relabeled(bfs_relabeling(d, base));
}

std::vector<ArcMap> automorphisms(const Diagram& d) {
    const PointedDiagram origin(d, 0);
    std::vector<ArcMap> out;
    for (Arc a = 0; a < d.size(); ++a) {
        auto r = find_pointed_morphism(origin, PointedDiagram(d, a));
        if (r) {
            out.push_back(std::move(*r.map));
        }
    }
    return out;
}

std::size_t automorphism_order(const Diagram& d) {
    const PointedDiagram origin(d, 0);
    std::size_t count = 0;
    for (Arc a = 0; a < d.size(); ++a) {
        if (pointed_isomorphic(origin, PointedDiagram(d, a))) {
            ++count;
        }
    }
    return count;
}

bool is_normal(const Diagram& d) {
    const PointedDiagram origin(d, 0);
    for (Arc a = 1; a < d.size(); ++a) {
        if (!pointed_morphism_exists(origin, PointedDiagram(d, a))) {
            return false;
        }
    }
    return true;
}

bool subgroup_includes(const PointedDiagram& p_big, const PointedDiagram& p_small) {
    return pointed_morphism_exists(p_big, p_small);
}

bool conjugate_subgroups(const PointedDiagram& p1, const PointedDiagram& p2) {
    return canonical_code(p1.diagram()) == canonical_code(p2.diagram());
}

// ---------------------------------------------------------------------------

bool BicoloredGraph::is_clean() const {
    std::vector<std::size_t> white_degree(white_count, 0);
    std::vector<std::size_t> black_degree(black_count, 0);
    for (const auto& [b, w] : edges) {
        if (b >= black_count || w >= white_count) {
            return false;
        }
        ++white_degree[w];
        ++black_degree[b];
    }
    for (std::size_t deg : white_degree) {
        if (deg != 1 && deg != 2) {
            return false;
        }
    }
    // No isolated black vertex.
    return std::all_of(black_degree.begin(), black_degree.end(), [](std::size_t deg) { return deg > 0; });
}

std::string BicoloredGraph::to_dot(std::string_view name) const {
    std::ostringstream os;
    os << "graph \"" << name << "\" {\n";
    for (std::size_t b = 0; b < black_count; ++b) {
        os << "  b" << b << " [shape=circle, style=filled, fillcolor=black, label=\"\", width=0.2];\n";
    }
    for (std::size_t w = 0; w < white_count; ++w) {
        os << "  w" << w << " [shape=circle, style=solid, label=\"\", width=0.2];\n";
    }
    for (std::size_t a = 0; a < edges.size(); ++a) {
        os << "  b" << edges[a].first << " -- w" << edges[a].second << " [label=\"" << a << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

BicoloredGraph barycentric_export(const Diagram& d) {
    const std::size_t n = d.size();
    std::vector<std::size_t> black(n, static_cast<std::size_t>(-1));
    std::vector<std::size_t> white(n, static_cast<std::size_t>(-1));
    BicoloredGraph g;
    for (Arc a = 0; a < n; ++a) {
        if (black[a] == static_cast<std::size_t>(-1)) {
            for (Arc b = a; black[b] == static_cast<std::size_t>(-1); b = d.rot(b)) {
                black[b] = g.black_count;
            }
            ++g.black_count;
        }
        if (white[a] == static_cast<std::size_t>(-1)) {
            white[a] = g.white_count;
            white[d.inv(a)] = g.white_count;
            ++g.white_count;
        }
    }
    g.edges.reserve(n);
    for (Arc a = 0; a < n; ++a) {
        g.edges.emplace_back(black[a], white[a]);
    }
    return g;
}

// ---------------------------------------------------------------------------

namespace {

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            advance();
        }
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) {
            fail(std::string("expected '") + c + "'");
        }
        advance();
    }

    std::string word() {
        skip_ws();
        std::string w;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            w += text_[pos_];
            advance();
        }
        if (w.empty()) {
            fail("expected a key");
        }
        return w;
    }

    std::uint64_t integer() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            fail("expected a non-negative integer");
        }
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            if (v > 0xffffffffULL) {
                fail("integer too large");
            }
            advance();
        }
        return v;
    }

    std::vector<Arc> list() {
        expect('[');
        std::vector<Arc> out;
        if (peek(']')) {
            advance();
            return out;
        }
        while (true) {
            out.push_back(static_cast<Arc>(integer()));
            if (peek(',')) {
                advance();
                continue;
            }
            expect(']');
            return out;
        }
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column_); }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

} // namespace

ParsedDiagram parse_diagram(std::string_view text) {
    Lexer lx(text);
    auto key = [&](const char* expected) {
        const std::string k = lx.word();
        if (k != expected) {
            lx.fail(std::string("expected key '") + expected + "', found '" + k + "'");
        }
        lx.expect('=');
    };
    key("n");
    const auto n = lx.integer();
    lx.expect(';');
    key("rot");
    auto rot = lx.list();
    lx.expect(';');
    key("inv");
    auto inv = lx.list();
    std::optional<Arc> base;
    if (lx.peek(';')) {
        lx.advance();
        if (!lx.at_end()) {
            key("base");
            base = static_cast<Arc>(lx.integer());
            if (lx.peek(';')) {
                lx.advance();
            }
        }
    }
    if (!lx.at_end()) {
        lx.fail("unexpected trailing input");
    }
    if (rot.size() != n || inv.size() != n) {
        lx.fail("rot and inv must list exactly n images");
    }
    Diagram probe(rot, inv, Flavor::general);
    const Flavor flavor = probe.satisfies_trivalence() ? Flavor::trivalent : Flavor::general;
    Diagram d(std::move(rot), std::move(inv), flavor);
    if (base && *base >= d.size()) {
        throw DomainError("base arc out of range");
    }
    return {std::move(d), base};
}

std::string format_diagram(const Diagram& d, std::optional<Arc> base) {
    std::ostringstream os;
    auto list = [&](std::span<const Arc> xs) {
        os << '[';
        for (std::size_t i = 0; i < xs.size(); ++i) {
            os << (i ? "," : "") << xs[i];
        }
        os << ']';
    };
    os << "n=" << d.size() << "; rot=";
    list(d.rot_images());
    os << "; inv=";
    list(d.inv_images());
    if (base) {
        os << "; base=" << *base;
    }
    return os.str();
}

} // namespace psl2
