#include "hmap/fmap.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace hmap {

FreeMap FreeMap::inserted(Dart x) const& { return FreeMap(*this).inserted(x); }

FreeMap FreeMap::inserted(Dart x) && {
    trace_.push_back(Constructor::insertion(x));
    return std::move(*this);
}

FreeMap FreeMap::linked(Dim k, Dart x, Dart y) const& { return FreeMap(*this).linked(k, x, y); }

FreeMap FreeMap::linked(Dim k, Dart x, Dart y) && {
    trace_.push_back(Constructor::linking(k, x, y));
    return std::move(*this);
}

std::vector<Dart> FreeMap::darts() const {
    std::vector<Dart> out;
    for (const auto& c : trace_)
        if (c.kind == Constructor::Kind::insert) out.push_back(c.x);
    return out;
}

bool has_dart(const FreeMap& m, Dart z) {
    if (z == nil) return false;
    const auto t = m.trace();
    return std::any_of(t.rbegin(), t.rend(), [z](const Constructor& c) {
        return c.kind == Constructor::Kind::insert && c.x == z;
    });
}

Dart next(const FreeMap& m, Dim k, Dart z) {
    if (z == nil) return nil;
    const auto t = m.trace();
    for (auto it = t.rbegin(); it != t.rend(); ++it)
        if (it->kind == Constructor::Kind::link && it->dim == k && it->x == z) return it->y;
    return nil;
}

Dart prev(const FreeMap& m, Dim k, Dart z) {
    if (z == nil) return nil;
    const auto t = m.trace();
    for (auto it = t.rbegin(); it != t.rend(); ++it)
        if (it->kind == Constructor::Kind::link && it->dim == k && it->y == z) return it->x;
    return nil;
}

bool has_next(const FreeMap& m, Dim k, Dart z) { return next(m, k, z) != nil; }
bool has_prev(const FreeMap& m, Dim k, Dart z) { return prev(m, k, z) != nil; }

namespace {

// Upper bound on the length of any chain of links in m.
std::size_t chain_bound(const FreeMap& m) { return m.size() + 1; }

template <class Step>
Dart walk_to_end(const FreeMap& m, Dart z, Step step) {
    if (!has_dart(m, z)) return nil;
    Dart w = z;
    for (std::size_t i = 0, n = chain_bound(m); i < n; ++i) {
        const Dart s = step(w);
        if (s == nil) return w;
        w = s;
    }
    return nil;  // cyclic chain, only in ill-formed terms
}

}  // namespace

Dart top(const FreeMap& m, Dim k, Dart z) {
    return walk_to_end(m, z, [&](Dart w) { return next(m, k, w); });
}

Dart bottom(const FreeMap& m, Dim k, Dart z) {
    return walk_to_end(m, z, [&](Dart w) { return prev(m, k, w); });
}

Dart closure_next(const FreeMap& m, Dim k, Dart z) {
    const Dart s = next(m, k, z);
    if (s != nil) return s;
    return has_dart(m, z) ? bottom(m, k, z) : nil;
}

Dart closure_prev(const FreeMap& m, Dim k, Dart z) {
    const Dart p = prev(m, k, z);
    if (p != nil) return p;
    return has_dart(m, z) ? top(m, k, z) : nil;
}

Dart face_next_open(const FreeMap& m, Dart z) { return prev(m, Dim::one, prev(m, Dim::zero, z)); }
Dart face_prev_open(const FreeMap& m, Dart z) { return next(m, Dim::zero, next(m, Dim::one, z)); }

Dart face_next(const FreeMap& m, Dart z) {
    return closure_prev(m, Dim::one, closure_prev(m, Dim::zero, z));
}

Dart face_prev(const FreeMap& m, Dart z) {
    return closure_next(m, Dim::zero, closure_next(m, Dim::one, z));
}

const char* describe(Conjunct c) {
    switch (c) {
        case Conjunct::none: return "ok";
        case Conjunct::dart_is_nil: return "dart is nil";
        case Conjunct::dart_exists: return "dart already exists";
        case Conjunct::x_missing: return "source dart does not exist";
        case Conjunct::y_missing: return "target dart does not exist";
        case Conjunct::x_has_next: return "source dart already has a successor";
        case Conjunct::y_has_prev: return "target dart already has a predecessor";
        case Conjunct::closes_orbit: return "link would close the orbit (closure equality)";
    }
    return "?";
}

Conjunct insert_violation(const FreeMap& m, Dart x) {
    if (x == nil) return Conjunct::dart_is_nil;
    if (has_dart(m, x)) return Conjunct::dart_exists;
    return Conjunct::none;
}

Conjunct link_violation(const FreeMap& m, Dim k, Dart x, Dart y) {
    if (!has_dart(m, x)) return Conjunct::x_missing;
    if (!has_dart(m, y)) return Conjunct::y_missing;
    if (has_next(m, k, x)) return Conjunct::x_has_next;
    if (has_prev(m, k, y)) return Conjunct::y_has_prev;
    if (closure_next(m, k, x) == y) return Conjunct::closes_orbit;
    return Conjunct::none;
}

HypermapVerdict check_hypermap(const FreeMap& m) {
    std::unordered_set<Dart> present;
    std::unordered_map<Dart, Dart> succ[2];
    std::unordered_map<Dart, Dart> pred[2];

    const auto t = m.trace();
    for (std::size_t i = 0; i < t.size(); ++i) {
        const Constructor& c = t[i];
        auto fail = [i](Conjunct why) { return HypermapVerdict{false, i, why}; };
        if (c.kind == Constructor::Kind::insert) {
            if (c.x == nil) return fail(Conjunct::dart_is_nil);
            if (!present.insert(c.x).second) return fail(Conjunct::dart_exists);
            continue;
        }
        const int k = to_int(c.dim);
        if (!present.count(c.x)) return fail(Conjunct::x_missing);
        if (!present.count(c.y)) return fail(Conjunct::y_missing);
        if (succ[k].count(c.x)) return fail(Conjunct::x_has_next);
        if (pred[k].count(c.y)) return fail(Conjunct::y_has_prev);
        // x is a top, so its closure image is the bottom of its chain.
        Dart b = c.x;
        for (auto it = pred[k].find(b); it != pred[k].end(); it = pred[k].find(b)) b = it->second;
        if (b == c.y) return fail(Conjunct::closes_orbit);
        succ[k].emplace(c.x, c.y);
        pred[k].emplace(c.y, c.x);
    }
    return {};
}

FreeMap insert_dart(const FreeMap& m, Dart x) {
    if (const auto v = check_hypermap(m); !v)
        throw PreconditionError(std::string("input is not a hypermap: ") + describe(v.failed));
    if (const auto why = insert_violation(m, x); why != Conjunct::none)
        throw PreconditionError(std::string("insert precondition: ") + describe(why));
    return m.inserted(x);
}

FreeMap link(const FreeMap& m, Dim k, Dart x, Dart y) {
    if (const auto v = check_hypermap(m); !v)
        throw PreconditionError(std::string("input is not a hypermap: ") + describe(v.failed));
    if (const auto why = link_violation(m, k, x, y); why != Conjunct::none)
        throw PreconditionError(std::string("link precondition: ") + describe(why));
    return m.linked(k, x, y);
}

namespace {

template <class Match>
FreeMap remove_latest(const FreeMap& m, Match match) {
    const auto t = m.trace();
    for (std::size_t i = t.size(); i-- > 0;) {
        if (!match(t[i])) continue;
        std::vector<Constructor> out(t.begin(), t.end());
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
        return FreeMap(std::move(out));
    }
    return m;
}

}  // namespace

FreeMap unlink_next(const FreeMap& m, Dim k, Dart x) {
    return remove_latest(m, [&](const Constructor& c) {
        return c.kind == Constructor::Kind::link && c.dim == k && c.x == x;
    });
}

FreeMap unlink_prev(const FreeMap& m, Dim k, Dart y) {
    return remove_latest(m, [&](const Constructor& c) {
        return c.kind == Constructor::Kind::link && c.dim == k && c.y == y;
    });
}

FreeMap remove_dart(const FreeMap& m, Dart x) {
    return remove_latest(m, [&](const Constructor& c) {
        return c.kind == Constructor::Kind::insert && c.x == x;
    });
}

Edited checked_unlink_next(const FreeMap& m, Dim k, Dart x) {
    if (!has_next(m, k, x))
        return {m, "dart " + std::to_string(x) + " has no " + std::to_string(to_int(k)) + "-link to break"};
    return {unlink_next(m, k, x), std::nullopt};
}

Edited checked_unlink_prev(const FreeMap& m, Dim k, Dart y) {
    if (!has_prev(m, k, y))
        return {m, "dart " + std::to_string(y) + " has no incoming " + std::to_string(to_int(k)) +
                       "-link to break"};
    return {unlink_prev(m, k, y), std::nullopt};
}

Edited checked_remove_dart(const FreeMap& m, Dart x) {
    if (!has_dart(m, x)) return {m, "dart " + std::to_string(x) + " does not exist"};
    for (Dim k : {Dim::zero, Dim::one})
        if (has_next(m, k, x) || has_prev(m, k, x))
            throw PreconditionError("dart " + std::to_string(x) + " still carries links");
    return {remove_dart(m, x), std::nullopt};
}

}  // namespace hmap
