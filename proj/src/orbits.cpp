#include "hmap/orbits.hpp"

#include <string>

namespace hmap {

namespace {

Dart reference_step(const FreeMap& m, OrbitKind kind, Dart z) {
    switch (kind) {
        case OrbitKind::edge: return closure_next(m, Dim::zero, z);
        case OrbitKind::vertex: return closure_next(m, Dim::one, z);
        case OrbitKind::face: return face_next(m, z);
    }
    return nil;
}

}  // namespace

Orbit orbit(const HypermapIndex& m, OrbitKind kind, Dart z) {
    if (!m.has_dart(z)) throw PreconditionError("dart " + std::to_string(z) + " does not exist");
    return orbit_of([&](Dart w) { return m.step(kind, w); }, z, m.size());
}

Orbit orbit(const FreeMap& m, OrbitKind kind, Dart z) {
    if (!has_dart(m, z)) throw PreconditionError("dart " + std::to_string(z) + " does not exist");
    return orbit_of([&](Dart w) { return reference_step(m, kind, w); }, z, m.size());
}

std::vector<Orbit> all_orbits(const HypermapIndex& m, OrbitKind kind) {
    std::vector<Orbit> out;
    for (const Dart z : m.darts())
        if (m.orbit_rep(kind, z) == z) out.push_back(orbit(m, kind, z));
    return out;
}

bool same_orbit(const FreeMap& m, OrbitKind kind, Dart z, Dart t) {
    if (!has_dart(m, z) || !has_dart(m, t)) return false;
    Dart w = z;
    for (std::size_t i = 0, n = m.size(); i <= n; ++i) {
        if (w == t) return true;
        w = reference_step(m, kind, w);
        if (w == z || w == nil) return false;
    }
    return false;
}

ComponentRelation::ComponentRelation(const FreeMap& m) {
    for (const auto& c : m.trace())
        if (c.kind == Constructor::Kind::insert) slot_.emplace(c.x, static_cast<std::uint32_t>(slot_.size()));
    const std::size_t n = slot_.size();
    const std::size_t words = (n + 63) / 64;
    rows_.assign(n, std::vector<std::uint64_t>(words, 0));

    auto set = [&](std::uint32_t a, std::uint32_t b) { rows_[a][b / 64] |= std::uint64_t{1} << (b % 64); };
    auto merge_into = [&](std::uint32_t a, const std::vector<std::uint64_t>& other) {
        for (std::size_t w = 0; w < words; ++w) rows_[a][w] |= other[w];
    };

    for (const auto& c : m.trace()) {
        if (c.kind == Constructor::Kind::insert) {
            const std::uint32_t x = slot_.at(c.x);
            set(x, x);
            continue;
        }
        const std::uint32_t x = slot(c.x), y = slot(c.y);
        if (x == UINT32_MAX || y == UINT32_MAX) continue;  // nothing relates to an absent dart
        const auto row_x = rows_[x];
        const auto row_y = rows_[y];
        // z ~ x and y ~ t  ==>  z ~ t ; z ~ y and x ~ t  ==>  z ~ t
        for (std::uint32_t z = 0; z < n; ++z) {
            const bool zx = (row_x[z / 64] >> (z % 64)) & 1u;
            const bool zy = (row_y[z / 64] >> (z % 64)) & 1u;
            if (zx) merge_into(z, row_y);
            if (zy) merge_into(z, row_x);
        }
    }
}

std::uint32_t ComponentRelation::slot(Dart z) const {
    const auto it = slot_.find(z);
    return it == slot_.end() ? UINT32_MAX : it->second;
}

bool ComponentRelation::operator()(Dart z, Dart t) const {
    const std::uint32_t a = slot(z), b = slot(t);
    if (a == UINT32_MAX || b == UINT32_MAX) return false;
    return test(a, b);
}

std::size_t ComponentRelation::classes() const {
    std::size_t count = 0;
    const auto n = static_cast<std::uint32_t>(rows_.size());
    for (std::uint32_t z = 0; z < n; ++z) {
        bool is_first = true;
        for (std::uint32_t w = 0; w < z && is_first; ++w) is_first = !test(w, z);
        count += is_first && test(z, z);
    }
    return count;
}

}  // namespace hmap
