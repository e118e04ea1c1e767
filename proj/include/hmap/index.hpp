#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "hmap/fmap.hpp"

namespace hmap {

/// Which permutation an orbit is taken under.
enum class OrbitKind : std::uint8_t {
    edge,    // closure at dimension zero
    vertex,  // closure at dimension one
    face,    // face permutation
};

const char* to_string(OrbitKind kind);

/// Cell counts and the quantities derived from them.
struct MapStats {
    std::size_t nd = 0;
    std::size_t ne = 0;
    std::size_t nv = 0;
    std::size_t nf = 0;
    std::size_t nc = 0;
    std::int64_t ec = 0;
    std::int64_t genus = 0;
    bool planar = true;

    friend bool operator==(const MapStats&, const MapStats&) = default;
};

/// An internal invariant that the hypermap theory guarantees did not hold.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Fills ec, genus and planar from the five counts. Throws
/// InvariantViolation if the Euler characteristic comes out odd.
MapStats derive_stats(std::size_t nd, std::size_t ne, std::size_t nv, std::size_t nf, std::size_t nc);

/// Immutable compiled snapshot of a hypermap term.
///
/// Construction rejects terms failing check_hypermap(). Every query has the
/// same answer as the corresponding free function on the source FreeMap,
/// in O(1) instead of a walk over the term. Darts are addressed by id;
/// absent darts and nil map to nil.
class HypermapIndex {
public:
    HypermapIndex() = default;
    explicit HypermapIndex(const FreeMap& m);

    /// Existing darts in ascending order.
    std::span<const Dart> darts() const { return darts_; }
    std::size_t size() const { return darts_.size(); }

    bool has_dart(Dart z) const { return slot(z) != npos; }

    Dart next(Dim k, Dart z) const { return at(next_[to_int(k)], z); }
    Dart prev(Dim k, Dart z) const { return at(prev_[to_int(k)], z); }
    bool has_next(Dim k, Dart z) const { return next(k, z) != nil; }
    bool has_prev(Dim k, Dart z) const { return prev(k, z) != nil; }
    Dart top(Dim k, Dart z) const { return at(top_[to_int(k)], z); }
    Dart bottom(Dim k, Dart z) const { return at(bottom_[to_int(k)], z); }
    Dart closure_next(Dim k, Dart z) const { return at(cnext_[to_int(k)], z); }
    Dart closure_prev(Dim k, Dart z) const { return at(cprev_[to_int(k)], z); }

    Dart face_next(Dart z) const { return at(fnext_, z); }
    Dart face_prev(Dart z) const { return at(fprev_, z); }
    Dart face_next_open(Dart z) const { return prev(Dim::one, prev(Dim::zero, z)); }
    Dart face_prev_open(Dart z) const { return next(Dim::zero, next(Dim::one, z)); }

    /// Successor of z under the permutation selected by kind.
    Dart step(OrbitKind kind, Dart z) const;
    Dart step_back(OrbitKind kind, Dart z) const;

    /// Minimum dart of z's orbit / component; nil for absent darts.
    Dart orbit_rep(OrbitKind kind, Dart z) const { return at(orbit_rep_[static_cast<int>(kind)], z); }
    Dart component_rep(Dart z) const { return at(component_rep_, z); }

    std::uint32_t period(OrbitKind kind, Dart z) const;

    const MapStats& stats() const { return stats_; }

private:
    static constexpr std::uint32_t npos = UINT32_MAX;
    using Table = std::vector<std::uint32_t>;

    std::uint32_t slot(Dart z) const {
        if (!sparse_) return z < direct_.size() ? direct_[z] : npos;
        const auto it = slot_.find(z);
        return it == slot_.end() ? npos : it->second;
    }

    Dart at(const Table& t, Dart z) const {
        const std::uint32_t s = slot(z);
        if (s == npos || t[s] == npos) return nil;
        return darts_[t[s]];
    }

    std::vector<Dart> darts_;
    // Dense ids use direct_; sparse ones fall back to the hash map.
    bool sparse_ = false;
    Table direct_;
    std::unordered_map<Dart, std::uint32_t> slot_;
    std::array<Table, 2> next_, prev_, top_, bottom_, cnext_, cprev_;
    Table fnext_, fprev_;
    std::array<Table, 3> orbit_rep_;
    std::array<std::vector<std::uint32_t>, 3> period_;
    Table component_rep_;
    MapStats stats_;
};

}  // namespace hmap
