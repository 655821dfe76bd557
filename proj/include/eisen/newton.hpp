#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <eisen/polynomial.hpp>

namespace eisen {

/// One plotted point (i, alpha_i): power i whose coefficient has p-adic
/// valuation alpha_i. Zero coefficients produce no vertex.
struct diagram_vertex {
    int index;
    std::int64_t val;
    friend bool operator==(const diagram_vertex&, const diagram_vertex&) = default;
};

/// One edge of the lower hull. lattice_points counts integer-coordinate
/// points on the closed segment; the segment is simple when the endpoints are
/// the only ones.
struct diagram_segment {
    diagram_vertex start;
    diagram_vertex end;
    rational slope;
    std::int64_t lattice_points;
    bool simple;
    friend bool operator==(const diagram_segment&, const diagram_segment&) = default;
};

struct newton_diagram {
    integer prime;
    std::vector<diagram_vertex> vertices;   // all plotted points, ascending by index
    std::vector<diagram_segment> segments;  // hull chain, slopes strictly increasing
};

namespace detail {

inline std::int64_t segment_gcd(const diagram_vertex& a, const diagram_vertex& b) {
    const std::int64_t dx = b.index - a.index;
    const std::int64_t dy = b.val >= a.val ? b.val - a.val : a.val - b.val;
    return std::gcd(dx, dy);
}

/// v on or above the line through segment endpoints a, b (a.index < b.index).
inline bool on_or_above(const diagram_vertex& a, const diagram_vertex& b,
                        const diagram_vertex& v) {
    return integer(v.val - a.val) * (b.index - a.index) >=
           integer(b.val - a.val) * (v.index - a.index);
}

}  // namespace detail

inline diagram_segment make_segment(const diagram_vertex& a, const diagram_vertex& b) {
    if (a.index >= b.index) throw std::logic_error("segment endpoints out of order");
    const std::int64_t g = detail::segment_gcd(a, b);
    return diagram_segment{a, b, rational(integer(b.val - a.val), integer(b.index - a.index)),
                           g + 1, g == 1};
}

/// Endpoints are the only integer-coordinate points on the closed segment,
/// i.e. gcd(delta index, |delta val|) = 1.
inline bool is_simple(const diagram_segment& s) {
    return detail::segment_gcd(s.start, s.end) == 1;
}

/// All integer-coordinate points on the closed segment, left to right.
inline std::vector<diagram_vertex> lattice_points_on(const diagram_segment& s) {
    const std::int64_t g = detail::segment_gcd(s.start, s.end);
    const std::int64_t dx = (s.end.index - s.start.index) / g;
    const std::int64_t dy = (s.end.val - s.start.val) / g;
    std::vector<diagram_vertex> pts;
    pts.reserve(static_cast<std::size_t>(g) + 1);
    for (std::int64_t k = 0; k <= g; ++k)
        pts.push_back({static_cast<int>(s.start.index + k * dx), s.start.val + k * dy});
    return pts;
}

/// Plot the vertex set of f with respect to p: one (i, alpha_i) per nonzero
/// coefficient. Needs degree >= 1 and a nonzero constant term.
inline std::vector<diagram_vertex> build_vertices(const polynomial& f, const integer& p) {
    if (f.is_zero()) throw zero_polynomial_error();
    if (f.degree() < 1)
        throw degree_too_small_error("a constant polynomial has no Newton diagram");
    if (f.constant() == 0) throw zero_constant_term_error();
    std::vector<diagram_vertex> verts;
    for (int i = 0; i <= f.degree(); ++i) {
        const integer& a = f.coefficient(static_cast<std::size_t>(i));
        if (a == 0) continue;
        verts.push_back({i, static_cast<std::int64_t>(p_adic_valuation(a, p).value())});
    }
    return verts;
}

/// Lower convex hull of the vertex set, built by the greedy rule: from the
/// current hull vertex, the next one is the vertex of minimal slope, taking
/// the largest index among ties. Collinear interior vertices therefore never
/// become segment endpoints. The chain is validated before returning.
inline std::vector<diagram_segment> lower_hull(const std::vector<diagram_vertex>& verts) {
    if (verts.size() < 2) throw std::logic_error("hull needs at least two vertices");
    std::vector<diagram_segment> chain;
    std::size_t cur = 0;
    while (cur + 1 < verts.size()) {
        std::size_t best = cur + 1;
        rational best_slope(integer(verts[best].val - verts[cur].val),
                            integer(verts[best].index - verts[cur].index));
        for (std::size_t j = cur + 2; j < verts.size(); ++j) {
            rational slope(integer(verts[j].val - verts[cur].val),
                           integer(verts[j].index - verts[cur].index));
            if (slope < best_slope || (slope == best_slope && verts[j].index > verts[best].index)) {
                best = j;
                best_slope = slope;
            }
        }
        chain.push_back(make_segment(verts[cur], verts[best]));
        cur = best;
    }

    // chain invariants are cheap to confirm and a violation is always a bug
    if (chain.empty()) throw std::logic_error("diagram must have at least one segment");
    if (!(chain.front().start == verts.front() && chain.back().end == verts.back()))
        throw std::logic_error("hull chain does not span the vertex range");
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (!(chain[i].slope < chain[i + 1].slope))
            throw std::logic_error("hull slopes must strictly increase");
    for (const auto& seg : chain)
        for (const auto& v : verts)
            if (!detail::on_or_above(seg.start, seg.end, v))
                throw std::logic_error("vertex below hull segment");
    return chain;
}

/// The Newton diagram of f with respect to p: vertex set plus lower hull from
/// the initial vertex (0, alpha_0) to the terminal vertex (n, alpha_n).
inline newton_diagram build_diagram(const polynomial& f, const integer& p) {
    newton_diagram d;
    d.prime = p;
    d.vertices = build_vertices(f, p);
    d.segments = lower_hull(d.vertices);
    return d;
}

}  // namespace eisen
