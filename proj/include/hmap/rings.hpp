#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hmap/fmap.hpp"
#include "hmap/index.hpp"

namespace hmap {

/// A double-link, named by the dart x its open zero-link starts from.
///
/// The flag picks the face the item stands for: with y = next(zero, x)
/// and x0 = bottom(zero, x), a set flag means the face of y, a clear flag
/// the face of x0. The link itself then leads from that face to the face
/// of the other dart.
struct RingItem {
    Dart x = nil;
    bool flag = false;

    friend bool operator==(const RingItem&, const RingItem&) = default;
};

/// Candidate ring, in break order.
using RingList = std::vector<RingItem>;

/// Dart standing for the face identified by the item. Throws
/// PreconditionError when item.x has no zero-successor.
Dart face_rep(const HypermapIndex& m, RingItem item);

/// Whether the face identified by b is the face reached through a's
/// double-link. Throws PreconditionError when either dart lacks a
/// zero-successor.
bool adjacent_faces(const HypermapIndex& m, RingItem a, RingItem b);

// The four ring conditions. They are total predicates: a missing
// zero-successor makes any face test involving it false.

/// Every item has a zero-successor and no two items share an edge.
bool ring_unicity(const HypermapIndex& m, std::span<const RingItem> l);
/// Each item's face is adjacent to the next item's face.
bool ring_continuity(const HypermapIndex& m, std::span<const RingItem> l);
/// The last face is adjacent to the first; a single item must link its
/// face to itself.
bool ring_circularity(const HypermapIndex& m, std::span<const RingItem> l);
/// No two items identify the same face.
bool ring_simplicity(const HypermapIndex& m, std::span<const RingItem> l);

enum class RingCondition { nonempty, unicity, continuity, circularity, simplicity };

const char* to_string(RingCondition c);

struct RingDiagnostics {
    bool nonempty = false;
    bool unicity = false;
    bool continuity = false;
    bool circularity = false;
    bool simplicity = false;

    /// First failing condition and the offending item indices; second is
    /// unset for conditions about a single item.
    std::optional<RingCondition> failed;
    std::size_t first = 0;
    std::optional<std::size_t> second;

    bool valid() const { return !failed.has_value(); }
    explicit operator bool() const { return valid(); }
    std::string message() const;
};

RingDiagnostics ring_check(const HypermapIndex& m, std::span<const RingItem> l);
inline RingDiagnostics ring_check(const FreeMap& m, std::span<const RingItem> l) {
    return ring_check(HypermapIndex(m), l);
}

/// Breaks the zero-link out of each item's dart, first item first. Throws
/// PreconditionError naming the item whose dart has no zero-link left.
FreeMap break_along(const FreeMap& m, std::span<const RingItem> l);

}  // namespace hmap
