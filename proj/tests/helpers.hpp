#pragma once

// Test-only support: deterministic generators, an independent naive hull
// construction, and a subprocess runner. Nothing here is part of the library.

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <eisen/criteria.hpp>
#include <eisen/newton.hpp>
#include <eisen/polynomial.hpp>

namespace testutil {

using eisen::diagram_segment;
using eisen::diagram_vertex;
using eisen::integer;
using eisen::polynomial;

using rng_t = std::mt19937_64;

inline long rand_long(rng_t& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// Random polynomial of exact degree with coefficients in [-bound, bound].
inline polynomial rand_poly(rng_t& rng, int degree, long bound, bool nonzero_constant) {
    std::vector<integer> c(static_cast<std::size_t>(degree) + 1);
    for (auto& v : c) v = rand_long(rng, -bound, bound);
    while (c.back() == 0) c.back() = rand_long(rng, -bound, bound);
    if (nonzero_constant)
        while (c.front() == 0) c.front() = rand_long(rng, -bound, bound);
    return polynomial(std::move(c));
}

/// Instance of the power-k hypothesis set: p does not divide a_n, p^k divides
/// every other coefficient, p^(k+1) does not divide a_0.
inline polynomial rand_power_instance(rng_t& rng, const integer& p, unsigned k, int degree,
                                      long unit_bound) {
    const integer pk = eisen::int_pow(p, k);
    std::vector<integer> c(static_cast<std::size_t>(degree) + 1);
    c.back() = rand_long(rng, 1, unit_bound);
    while (eisen::divides(p, c.back())) c.back() = rand_long(rng, 1, unit_bound);
    for (int j = 1; j < degree; ++j)
        c[static_cast<std::size_t>(j)] = pk * rand_long(rng, -unit_bound, unit_bound);
    integer u = rand_long(rng, 1, unit_bound);
    while (u == 0 || eisen::divides(p, u)) u = rand_long(rng, 1, unit_bound);
    if (rand_long(rng, 0, 1)) u = -u;
    c.front() = pk * u;
    return polynomial(std::move(c));
}

inline polynomial rand_eisenstein(rng_t& rng, const integer& p, int degree, long unit_bound) {
    return rand_power_instance(rng, p, 1, degree, unit_bound);
}

namespace hull_detail {

inline bool strictly_below(const diagram_vertex& a, const diagram_vertex& b,
                           const diagram_vertex& v) {
    return integer(v.val - a.val) * (b.index - a.index) <
           integer(b.val - a.val) * (v.index - a.index);
}

inline bool on_line(const diagram_vertex& a, const diagram_vertex& b, const diagram_vertex& v) {
    return integer(v.val - a.val) * (b.index - a.index) ==
           integer(b.val - a.val) * (v.index - a.index);
}

}  // namespace hull_detail

/// Independent lower-hull construction by the global characterization: a pair
/// (u, w) is a chain edge iff no vertex lies strictly below its line and u, w
/// are the extreme on-line vertices. Quadratic in the vertex count per pair.
inline std::vector<diagram_segment> naive_lower_hull(const std::vector<diagram_vertex>& verts) {
    std::vector<diagram_segment> edges;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            const diagram_vertex &u = verts[i], &w = verts[j];
            bool ok = true;
            int min_on = u.index, max_on = u.index;
            for (const auto& v : verts) {
                if (hull_detail::strictly_below(u, w, v)) {
                    ok = false;
                    break;
                }
                if (hull_detail::on_line(u, w, v)) {
                    min_on = std::min(min_on, v.index);
                    max_on = std::max(max_on, v.index);
                }
            }
            if (ok && u.index == min_on && w.index == max_on)
                edges.push_back(eisen::make_segment(u, w));
        }
    }
    std::sort(edges.begin(), edges.end(), [](const diagram_segment& a, const diagram_segment& b) {
        return a.start.index < b.start.index;
    });
    if (edges.empty()) throw std::logic_error("naive hull found no edges");
    if (!(edges.front().start == verts.front() && edges.back().end == verts.back()))
        throw std::logic_error("naive hull does not span the vertex range");
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        if (!(edges[i].end == edges[i + 1].start))
            throw std::logic_error("naive hull edges do not chain");
    return edges;
}

/// Random vertex configuration: indices include 0 and a maximum, valuations
/// bounded; suitable input for both hull constructions.
inline std::vector<diagram_vertex> rand_vertices(rng_t& rng, int max_index, int max_val) {
    const int n = static_cast<int>(rand_long(rng, 1, max_index));
    std::vector<diagram_vertex> verts;
    verts.push_back({0, rand_long(rng, 0, max_val)});
    for (int i = 1; i < n; ++i)
        if (rand_long(rng, 0, 2) != 0)  // keep roughly two thirds of interior indices
            verts.push_back({i, rand_long(rng, 0, max_val)});
    verts.push_back({n, rand_long(rng, 0, max_val)});
    return verts;
}

struct command_result {
    int exit_code;
    std::string output;  // stdout and stderr merged
};

inline command_result run_command(const std::string& cmd) {
    const std::string full = cmd + " 2>&1";
    FILE* pipe = popen(full.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    const int code = status >= 0 && WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

}  // namespace testutil
