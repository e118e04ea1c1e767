#include "hmap/characteristics.hpp"

#include <unordered_map>

#include "hmap/io.hpp"

namespace hmap {

MapStats counts(const FreeMap& m) { return HypermapIndex(m).stats(); }

namespace {

// Closures and the component relation of a growing prefix, over dense slots.
class Replay {
public:
    explicit Replay(std::size_t capacity)
        : words_((capacity + 63) / 64), related_(capacity, std::vector<std::uint64_t>(words_, 0)) {
        for (auto& t : cnext_) t.reserve(capacity);
        for (auto& t : cprev_) t.reserve(capacity);
    }

    std::uint32_t insert(Dart x) {
        const auto s = static_cast<std::uint32_t>(slot_.size());
        slot_.emplace(x, s);
        for (int k = 0; k < 2; ++k) {
            cnext_[k].push_back(s);
            cprev_[k].push_back(s);
        }
        related_[s][s / 64] |= std::uint64_t{1} << (s % 64);
        return s;
    }

    std::uint32_t slot(Dart z) const { return slot_.at(z); }

    bool connected(std::uint32_t a, std::uint32_t b) const { return (related_[a][b / 64] >> (b % 64)) & 1u; }

    bool same_face(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t w = a;
        do {
            if (w == b) return true;
            w = cprev_[1][cprev_[0][w]];
        } while (w != a);
        return false;
    }

    std::uint32_t cnext(Dim k, std::uint32_t z) const { return cnext_[to_int(k)][z]; }
    std::uint32_t cprev(Dim k, std::uint32_t z) const { return cprev_[to_int(k)][z]; }

    void link(Dim k, std::uint32_t x, std::uint32_t y) {
        auto& cn = cnext_[to_int(k)];
        auto& cp = cprev_[to_int(k)];
        const std::uint32_t b = cn[x];  // bottom of x's chain
        const std::uint32_t t = cp[y];  // top of y's chain
        cn[x] = y;
        cp[y] = x;
        cn[t] = b;
        cp[b] = t;

        const auto row_x = related_[x];
        const auto row_y = related_[y];
        for (std::uint32_t z = 0; z < related_.size(); ++z) {
            if ((row_x[z / 64] >> (z % 64)) & 1u)
                for (std::size_t w = 0; w < words_; ++w) related_[z][w] |= row_y[w];
            if ((row_y[z / 64] >> (z % 64)) & 1u)
                for (std::size_t w = 0; w < words_; ++w) related_[z][w] |= row_x[w];
        }
    }

private:
    std::size_t words_;
    std::unordered_map<Dart, std::uint32_t> slot_;
    std::vector<std::uint32_t> cnext_[2], cprev_[2];
    std::vector<std::vector<std::uint64_t>> related_;
};

}  // namespace

MapStats counts_by_recurrence(const FreeMap& m) {
    if (const auto v = check_hypermap(m); !v)
        throw PreconditionError(std::string("not a hypermap: ") + describe(v.failed));

    std::int64_t nd = 0, ne = 0, nv = 0, nf = 0, nc = 0;
    Replay state(m.darts().size());
    for (const auto& c : m.trace()) {
        if (c.kind == Constructor::Kind::insert) {
            state.insert(c.x);
            ++nd, ++ne, ++nv, ++nf, ++nc;
            continue;
        }
        const std::uint32_t x = state.slot(c.x), y = state.slot(c.y);
        const bool splits = c.dim == Dim::zero ? state.same_face(state.cprev(Dim::one, x), y)
                                               : state.same_face(x, state.cnext(Dim::zero, y));
        if (!state.connected(x, y)) --nc;
        (c.dim == Dim::zero ? ne : nv) -= 1;
        nf += splits ? 1 : -1;
        state.link(c.dim, x, y);
    }
    return derive_stats(static_cast<std::size_t>(nd), static_cast<std::size_t>(ne), static_cast<std::size_t>(nv),
                        static_cast<std::size_t>(nf), static_cast<std::size_t>(nc));
}

TheoremReport check_genus_theorem(const FreeMap& m) {
    TheoremReport r;
    try {
        r.stats = HypermapIndex(m).stats();
    } catch (const InvariantViolation& e) {
        r.pass = false;
        r.failures.emplace_back(e.what());
        r.witness = serialize_map(m);
        return r;
    }
    const auto& s = r.stats;
    if (s.genus < 0) r.failures.push_back("genus=" + std::to_string(s.genus) + " is negative");
    if (2 * static_cast<std::int64_t>(s.nc) < s.ec)
        r.failures.push_back("2*nc=" + std::to_string(2 * s.nc) + " < ec=" + std::to_string(s.ec));
    r.pass = r.failures.empty();
    if (!r.pass) r.witness = serialize_map(m);
    return r;
}

TheoremReport check_euler_formula(const FreeMap& m) {
    TheoremReport r;
    const HypermapIndex index(m);
    r.stats = index.stats();
    const auto& s = r.stats;
    if (!s.planar) throw PreconditionError("Euler formula check needs a planar map");
    if (s.ec / 2 != static_cast<std::int64_t>(s.nc))
        r.failures.push_back("ec/2=" + std::to_string(s.ec / 2) + " != nc=" + std::to_string(s.nc));
    if (s.nc == 1 && s.nd > 0) {
        const auto chi = static_cast<std::int64_t>(s.nv + s.ne + s.nf) - static_cast<std::int64_t>(s.nd);
        if (chi != 2) r.failures.push_back("connected planar map has v+e+f-d=" + std::to_string(chi));
    }
    r.pass = r.failures.empty();
    if (!r.pass) r.witness = serialize_map(m);
    return r;
}

}  // namespace hmap
