#include "hmap/rings.hpp"

#include "hmap/orbits.hpp"

namespace hmap {

namespace {

struct Ends {
    Dart y;   // next(zero, x), nil when absent
    Dart x0;  // bottom(zero, x)
};

Ends ends(const HypermapIndex& m, RingItem it) { return {m.next(Dim::zero, it.x), m.bottom(Dim::zero, it.x)}; }

Dart rep_of(const HypermapIndex& m, RingItem it) {
    const Ends e = ends(m, it);
    if (e.y == nil) return nil;
    return it.flag ? e.y : e.x0;
}

// Face adjacency, nil-propagating.
bool adjacent(const HypermapIndex& m, RingItem a, RingItem b) {
    const Ends ea = ends(m, a), eb = ends(m, b);
    if (a.flag) return same_face(m, ea.x0, b.flag ? eb.y : eb.x0);
    return same_face(m, ea.y, b.flag ? eb.y : eb.x0);
}

bool distinct_faces(const HypermapIndex& m, RingItem a, RingItem b) {
    return !same_face(m, rep_of(m, a), rep_of(m, b));
}

void require_link(const HypermapIndex& m, RingItem it) {
    if (!m.has_next(Dim::zero, it.x))
        throw PreconditionError("dart " + std::to_string(it.x) + " has no zero-successor");
}

struct Where {
    bool ok = true;
    std::size_t first = 0;
    std::optional<std::size_t> second;
};

Where check_unicity(const HypermapIndex& m, std::span<const RingItem> l) {
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (!m.has_next(Dim::zero, l[i].x)) return {false, i, std::nullopt};
        for (std::size_t j = i + 1; j < l.size(); ++j)
            if (same_edge(m, l[i].x, l[j].x)) return {false, i, j};
    }
    return {};
}

Where check_continuity(const HypermapIndex& m, std::span<const RingItem> l) {
    for (std::size_t i = 0; i + 1 < l.size(); ++i)
        if (!adjacent(m, l[i], l[i + 1])) return {false, i, i + 1};
    return {};
}

Where check_circularity(const HypermapIndex& m, std::span<const RingItem> l) {
    if (l.empty()) return {};
    if (l.size() == 1) {
        const Ends e = ends(m, l[0]);
        return same_face(m, e.y, e.x0) ? Where{} : Where{false, 0, std::nullopt};
    }
    const std::size_t last = l.size() - 1;
    return adjacent(m, l[last], l[0]) ? Where{} : Where{false, last, 0};
}

Where check_simplicity(const HypermapIndex& m, std::span<const RingItem> l) {
    for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = i + 1; j < l.size(); ++j)
            if (!distinct_faces(m, l[i], l[j])) return {false, i, j};
    return {};
}

}  // namespace

Dart face_rep(const HypermapIndex& m, RingItem item) {
    require_link(m, item);
    return rep_of(m, item);
}

bool adjacent_faces(const HypermapIndex& m, RingItem a, RingItem b) {
    require_link(m, a);
    require_link(m, b);
    return adjacent(m, a, b);
}

bool ring_unicity(const HypermapIndex& m, std::span<const RingItem> l) { return check_unicity(m, l).ok; }
bool ring_continuity(const HypermapIndex& m, std::span<const RingItem> l) { return check_continuity(m, l).ok; }
bool ring_circularity(const HypermapIndex& m, std::span<const RingItem> l) { return check_circularity(m, l).ok; }
bool ring_simplicity(const HypermapIndex& m, std::span<const RingItem> l) { return check_simplicity(m, l).ok; }

const char* to_string(RingCondition c) {
    switch (c) {
        case RingCondition::nonempty: return "nonempty";
        case RingCondition::unicity: return "unicity";
        case RingCondition::continuity: return "continuity";
        case RingCondition::circularity: return "circularity";
        case RingCondition::simplicity: return "simplicity";
    }
    return "?";
}

std::string RingDiagnostics::message() const {
    if (!failed) return "valid ring";
    std::string s = std::string("ring fails ") + to_string(*failed);
    if (*failed == RingCondition::nonempty) return s + ": empty list";
    s += " at item " + std::to_string(first);
    if (second) s += " and item " + std::to_string(*second);
    return s;
}

RingDiagnostics ring_check(const HypermapIndex& m, std::span<const RingItem> l) {
    RingDiagnostics d;
    d.nonempty = !l.empty();
    const Where w0 = check_unicity(m, l);
    const Where w1 = check_continuity(m, l);
    const Where w2 = check_circularity(m, l);
    const Where w3 = check_simplicity(m, l);
    d.unicity = w0.ok;
    d.continuity = w1.ok;
    d.circularity = w2.ok;
    d.simplicity = w3.ok;

    if (!d.nonempty) {
        d.failed = RingCondition::nonempty;
        return d;
    }
    const std::pair<RingCondition, const Where*> order[] = {
        {RingCondition::unicity, &w0},
        {RingCondition::continuity, &w1},
        {RingCondition::circularity, &w2},
        {RingCondition::simplicity, &w3},
    };
    for (const auto& [cond, where] : order) {
        if (where->ok) continue;
        d.failed = cond;
        d.first = where->first;
        d.second = where->second;
        break;
    }
    return d;
}

FreeMap break_along(const FreeMap& m, std::span<const RingItem> l) {
    FreeMap out = m;
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (!has_next(out, Dim::zero, l[i].x))
            throw PreconditionError("ring item " + std::to_string(i) + " (dart " + std::to_string(l[i].x) +
                                    ") has no zero-link at break time");
        out = unlink_next(out, Dim::zero, l[i].x);
    }
    return out;
}

}  // namespace hmap
