#include "hmap/index.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hmap/union_find.hpp"

namespace hmap {

const char* to_string(OrbitKind kind) {
    switch (kind) {
        case OrbitKind::edge: return "edge";
        case OrbitKind::vertex: return "vertex";
        case OrbitKind::face: return "face";
    }
    return "?";
}

MapStats derive_stats(std::size_t nd, std::size_t ne, std::size_t nv, std::size_t nf, std::size_t nc) {
    MapStats s{nd, ne, nv, nf, nc};
    s.ec = static_cast<std::int64_t>(nv + ne + nf) - static_cast<std::int64_t>(nd);
    if (s.ec % 2 != 0)
        throw InvariantViolation("odd Euler characteristic " + std::to_string(s.ec) + " on a hypermap");
    s.genus = static_cast<std::int64_t>(nc) - s.ec / 2;
    s.planar = s.genus == 0;
    return s;
}

HypermapIndex::HypermapIndex(const FreeMap& m) {
    if (const auto v = check_hypermap(m); !v)
        throw PreconditionError("not a hypermap: constructor " + std::to_string(v.position) + ": " +
                                describe(v.failed));

    darts_ = m.darts();
    std::sort(darts_.begin(), darts_.end());
    const std::size_t n = darts_.size();
    sparse_ = n > 0 && darts_.back() > 4 * n + 64;
    if (sparse_) {
        slot_.reserve(n);
        for (std::uint32_t i = 0; i < n; ++i) slot_.emplace(darts_[i], i);
    } else {
        direct_.assign(n == 0 ? 0 : darts_.back() + 1, npos);
        for (std::uint32_t i = 0; i < n; ++i) direct_[darts_[i]] = i;
    }

    for (int k = 0; k < 2; ++k) {
        next_[k].assign(n, npos);
        prev_[k].assign(n, npos);
    }
    // Under the hypermap invariant no link is ever overwritten, so the
    // order of application does not matter.
    for (const auto& c : m.trace()) {
        if (c.kind != Constructor::Kind::link) continue;
        const int k = to_int(c.dim);
        const std::uint32_t x = slot(c.x), y = slot(c.y);
        next_[k][x] = y;
        prev_[k][y] = x;
    }

    for (int k = 0; k < 2; ++k) {
        top_[k].assign(n, npos);
        bottom_[k].assign(n, npos);
        cnext_[k] = next_[k];
        cprev_[k] = prev_[k];
        std::vector<std::uint32_t> chain;
        for (std::uint32_t b = 0; b < n; ++b) {
            if (prev_[k][b] != npos) continue;
            chain.clear();
            for (std::uint32_t z = b; z != npos; z = next_[k][z]) chain.push_back(z);
            const std::uint32_t t = chain.back();
            for (const auto z : chain) {
                bottom_[k][z] = b;
                top_[k][z] = t;
            }
            cnext_[k][t] = b;
            cprev_[k][b] = t;
        }
    }

    fnext_.resize(n);
    fprev_.resize(n);
    for (std::uint32_t z = 0; z < n; ++z) {
        fnext_[z] = cprev_[1][cprev_[0][z]];
        fprev_[z] = cnext_[0][cnext_[1][z]];
    }

    const std::array<const Table*, 3> perms{&cnext_[0], &cnext_[1], &fnext_};
    std::array<std::size_t, 3> orbit_count{};
    for (int kind = 0; kind < 3; ++kind) {
        const Table& f = *perms[kind];
        orbit_rep_[kind].assign(n, npos);
        period_[kind].assign(n, 0);
        for (std::uint32_t z = 0; z < n; ++z) {
            if (orbit_rep_[kind][z] != npos) continue;
            // darts_ is sorted, so the first unvisited slot is the orbit minimum.
            std::uint32_t len = 0;
            for (std::uint32_t w = z; orbit_rep_[kind][w] == npos; w = f[w], ++len) orbit_rep_[kind][w] = z;
            for (std::uint32_t w = z, i = 0; i < len; w = f[w], ++i) period_[kind][w] = len;
            ++orbit_count[kind];
        }
    }

    UnionFind uf(n);
    for (int k = 0; k < 2; ++k)
        for (std::uint32_t z = 0; z < n; ++z)
            if (next_[k][z] != npos) uf.unite(z, next_[k][z]);
    std::vector<std::uint32_t> min_of_root(n, npos);
    for (std::uint32_t z = 0; z < n; ++z) {
        auto& r = min_of_root[uf.find(z)];
        if (r == npos) r = z;
    }
    component_rep_.resize(n);
    for (std::uint32_t z = 0; z < n; ++z) component_rep_[z] = min_of_root[uf.find(z)];

    stats_ = derive_stats(n, orbit_count[0], orbit_count[1], orbit_count[2], uf.sets());
}

Dart HypermapIndex::step(OrbitKind kind, Dart z) const {
    switch (kind) {
        case OrbitKind::edge: return closure_next(Dim::zero, z);
        case OrbitKind::vertex: return closure_next(Dim::one, z);
        case OrbitKind::face: return face_next(z);
    }
    return nil;
}

Dart HypermapIndex::step_back(OrbitKind kind, Dart z) const {
    switch (kind) {
        case OrbitKind::edge: return closure_prev(Dim::zero, z);
        case OrbitKind::vertex: return closure_prev(Dim::one, z);
        case OrbitKind::face: return face_prev(z);
    }
    return nil;
}

std::uint32_t HypermapIndex::period(OrbitKind kind, Dart z) const {
    const std::uint32_t s = slot(z);
    return s == npos ? 0 : period_[static_cast<int>(kind)][s];
}

}  // namespace hmap
