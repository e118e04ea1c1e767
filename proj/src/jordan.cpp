#include "hmap/jordan.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include "hmap/criteria.hpp"
#include "hmap/io.hpp"
#include "hmap/orbits.hpp"

namespace hmap {

JordanOutcome jordan_check(const FreeMap& m, std::span<const RingItem> l) {
    if (const auto v = check_hypermap(m); !v)
        throw PreconditionError(std::string("hypermap precondition: ") + describe(v.failed));
    const HypermapIndex before(m);
    if (!before.stats().planar) throw PreconditionError("planarity precondition: map is not planar");
    if (const auto d = ring_check(before, l); !d) throw PreconditionError("ring precondition: " + d.message());

    JordanOutcome out;
    out.nc_before = before.stats().nc;
    out.nc_after = HypermapIndex(break_along(m, l)).stats().nc;
    out.delta = static_cast<std::int64_t>(out.nc_after) - static_cast<std::int64_t>(out.nc_before);
    out.pass = out.delta == 1;
    if (!out.pass) out.witness = Witness{serialize_map(m), serialize_ring(RingList(l.begin(), l.end()))};
    return out;
}

bool first_break_keeps_face_split(const HypermapIndex& m, std::span<const RingItem> l) {
    if (l.empty()) return true;
    const Dart x = l.front().x;
    return !same_face(m, m.next(Dim::zero, x), m.bottom(Dim::zero, x));
}

RingDiagnostics tail_after_first_break(const FreeMap& m, std::span<const RingItem> l) {
    if (l.empty()) throw PreconditionError("empty ring has no first link");
    const FreeMap m1 = unlink_next(m, Dim::zero, l.front().x);
    return ring_check(HypermapIndex(m1), l.subspan(1));
}

// Generation ---------------------------------------------------------------

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

std::uint64_t Rng::operator()() { return engine_(); }

std::uint64_t Rng::below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r;
    do r = (*this)();
    while (r >= limit);
    return r % n;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t i) {
    // splitmix64 finalizer over the pair
    std::uint64_t z = seed + (i + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

namespace {

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v) {
    return v[rng.below(v.size())];
}

// std::shuffle's sequence is library-specific; this one is not.
template <class T>
void shuffle(Rng& rng, std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

FreeMap with_darts(std::size_t n) {
    FreeMap m;
    for (Dart z = 1; z <= n; ++z) m = std::move(m).inserted(z);
    return m;
}

std::vector<Dart> open_ends(const HypermapIndex& m, Dim k, bool want_top) {
    std::vector<Dart> out;
    for (const Dart z : m.darts())
        if (want_top ? !m.has_next(k, z) : !m.has_prev(k, z)) out.push_back(z);
    return out;
}

bool linkable(const HypermapIndex& m, Dim k, Dart x, Dart y) {
    return m.has_dart(x) && m.has_dart(y) && !m.has_next(k, x) && !m.has_prev(k, y) && m.closure_next(k, x) != y;
}

// Draws one link candidate. Returns nil in x when the move has no candidate.
std::pair<Dart, Dart> propose(const HypermapIndex& m, Rng& rng, Dim k, bool inside) {
    const auto tops = open_ends(m, k, true);
    if (tops.empty()) return {nil, nil};
    const Dart x = pick(rng, tops);
    std::vector<Dart> ys;
    if (!inside) {
        for (const Dart y : open_ends(m, k, false))
            if (!same_component(m, x, y)) ys.push_back(y);
    } else if (k == Dim::zero) {
        for (const Dart y : orbit(m, OrbitKind::face, m.closure_prev(Dim::one, x)).members)
            if (linkable(m, k, x, y)) ys.push_back(y);
    } else {
        for (const Dart w : orbit(m, OrbitKind::face, x).members) {
            const Dart y = m.closure_prev(Dim::zero, w);
            if (linkable(m, k, x, y)) ys.push_back(y);
        }
    }
    if (ys.empty()) return {nil, nil};
    return {x, pick(rng, ys)};
}

}  // namespace

FreeMap generate_planar(std::uint64_t seed, std::size_t n_darts, std::size_t n_links, const GenOptions& opt) {
    if (n_links > 2 * n_darts)
        throw PreconditionError("cannot place " + std::to_string(n_links) + " links on " + std::to_string(n_darts) +
                                " darts");
    const unsigned total = opt.cross_component + opt.inside_face + opt.dim_one;
    if (total == 0) throw PreconditionError("all link move weights are zero");

    Rng rng(seed);
    FreeMap m = with_darts(n_darts);
    HypermapIndex index(m);
    std::size_t placed = 0;
    for (std::size_t attempt = 0, budget = n_links * opt.attempts_per_link; placed < n_links && attempt < budget;
         ++attempt) {
        const auto move = rng.below(total);
        Dim k = Dim::zero;
        bool inside;
        if (move < opt.cross_component) {
            inside = false;
        } else if (move < opt.cross_component + opt.inside_face) {
            inside = true;
        } else {
            k = Dim::one;
            inside = rng.chance(1, 2);
        }
        const auto [x, y] = propose(index, rng, k, inside);
        if (x == nil || !linkable(index, k, x, y) || !planar_after_link(index, k, x, y)) continue;
        m = std::move(m).linked(k, x, y);
        index = HypermapIndex(m);
        ++placed;
    }
    return m;
}

FreeMap generate_hypermap(std::uint64_t seed, std::size_t n_darts, std::size_t n_links) {
    if (n_links > 2 * n_darts)
        throw PreconditionError("cannot place " + std::to_string(n_links) + " links on " + std::to_string(n_darts) +
                                " darts");
    Rng rng(seed);
    FreeMap m = with_darts(n_darts);
    HypermapIndex index(m);
    std::size_t placed = 0;
    for (std::size_t attempt = 0, budget = n_links * 24; placed < n_links && attempt < budget; ++attempt) {
        const Dim k = rng.chance(1, 2) ? Dim::zero : Dim::one;
        const auto tops = open_ends(index, k, true);
        const auto bottoms = open_ends(index, k, false);
        if (tops.empty()) continue;
        const Dart x = pick(rng, tops), y = pick(rng, bottoms);
        if (!linkable(index, k, x, y)) continue;
        m = std::move(m).linked(k, x, y);
        index = HypermapIndex(m);
        ++placed;
    }
    return m;
}

// Ring search --------------------------------------------------------------

namespace {

struct FaceLink {
    Dart x;       // dart whose zero-link this is
    Dart edge;    // edge representative
    Dart face_y;  // face of next(zero, x)
    Dart face_b;  // face of bottom(zero, x)
};

class RingSearch {
public:
    RingSearch(const HypermapIndex& m, std::size_t max_len, std::uint64_t seed)
        : m_(m), max_len_(max_len), rng_(seed) {
        for (const Dart x : m.darts()) {
            if (!m.has_next(Dim::zero, x)) continue;
            links_.push_back({x, m.orbit_rep(OrbitKind::edge, x), m.orbit_rep(OrbitKind::face, m.next(Dim::zero, x)),
                              m.orbit_rep(OrbitKind::face, m.bottom(Dim::zero, x))});
        }
        shuffle(rng_, links_);
    }

    std::optional<RingList> run() {
        if (max_len_ == 0 || links_.empty()) return std::nullopt;
        std::vector<Dart> starts;
        for (const auto& f : all_orbits(m_, OrbitKind::face)) starts.push_back(f.representative);
        shuffle(rng_, starts);
        // Half the seeds look for rings of two or more links first; the
        // single-link rings would otherwise crowd them out.
        if (rng_.chance(1, 2)) {
            allow_loops_ = false;
            if (search_from(starts)) return path_;
            allow_loops_ = true;
        }
        if (search_from(starts)) return path_;
        return std::nullopt;
    }

private:
    static constexpr std::size_t expansion_budget = 200000;

    bool search_from(const std::vector<Dart>& starts) {
        for (const Dart s : starts) {
            start_ = s;
            path_.clear();
            used_edges_.clear();
            visited_ = {s};
            if (extend(s)) return true;
        }
        return false;
    }

    bool extend(Dart face) {
        if (++expansions_ > expansion_budget) return false;
        for (const auto& link : links_) {
            if (link.face_y != face && link.face_b != face) continue;
            if (std::find(used_edges_.begin(), used_edges_.end(), link.edge) != used_edges_.end()) continue;
            const bool loop = link.face_y == link.face_b;
            if (loop && (!allow_loops_ || !path_.empty())) continue;  // a loop only forms a ring on its own
            const Dart to = loop ? face : (link.face_y == face ? link.face_b : link.face_y);
            // The item stands for the face the step leaves.
            const RingItem item{link.x, link.face_y == face};
            path_.push_back(item);
            if (to == start_) {
                if (ring_check(m_, path_)) return true;
            } else if (path_.size() < max_len_ &&
                       std::find(visited_.begin(), visited_.end(), to) == visited_.end()) {
                used_edges_.push_back(link.edge);
                visited_.push_back(to);
                if (extend(to)) return true;
                visited_.pop_back();
                used_edges_.pop_back();
            }
            path_.pop_back();
        }
        return false;
    }

    const HypermapIndex& m_;
    std::size_t max_len_;
    Rng rng_;
    std::vector<FaceLink> links_;
    Dart start_ = nil;
    RingList path_;
    std::vector<Dart> used_edges_;
    std::vector<Dart> visited_;
    std::size_t expansions_ = 0;
    bool allow_loops_ = true;
};

}  // namespace

std::optional<RingList> find_ring(const HypermapIndex& m, std::size_t max_len, std::uint64_t seed) {
    return RingSearch(m, max_len, seed).run();
}

// Fuzzing ------------------------------------------------------------------

namespace {

struct TrialResult {
    bool found = false;
    bool multi = false;
    bool jordan_failed = false;
    bool split_failed = false;
    bool tail_failed = false;
    bool error = false;
    std::string what;
    Witness witness;
};

TrialResult run_trial(const FuzzConfig& cfg, std::size_t t) {
    TrialResult r;
    const std::uint64_t s = derive_seed(cfg.seed, t);
    Rng rng(s);
    const std::size_t n = 1 + rng.below(std::max<std::size_t>(cfg.size_bound, 1));
    const std::size_t links = rng.below(3 * n / 2 + 1);
    FreeMap m;
    RingList ring;
    try {
        m = generate_planar(rng(), n, links);
        const HypermapIndex index(m);
        auto found = find_ring(index, cfg.max_ring, rng());
        if (!found) return r;
        ring = std::move(*found);
        r.found = true;
        r.multi = ring.size() >= 2;

        std::vector<std::string> problems;
        if (const auto j = jordan_check(m, ring); !j.pass) {
            r.jordan_failed = true;
            problems.push_back("component count went " + std::to_string(j.nc_before) + " -> " +
                               std::to_string(j.nc_after));
        }
        if (r.multi) {
            if (!first_break_keeps_face_split(index, ring) || break_disconnects(m, ring.front().x)) {
                r.split_failed = true;
                problems.push_back("first link of a multi-item ring joins one face");
            }
            if (const auto d = tail_after_first_break(m, ring);
                !(d.unicity && d.continuity && d.circularity && d.simplicity)) {
                r.tail_failed = true;
                problems.push_back("tail after first break: " + d.message());
            }
        }
        for (const auto& p : problems) r.what += (r.what.empty() ? "" : "; ") + p;
    } catch (const std::exception& e) {
        r.error = true;
        r.what = e.what();
    }
    if (r.jordan_failed || r.split_failed || r.tail_failed || r.error)
        r.witness = Witness{serialize_map(m), serialize_ring(ring)};
    return r;
}

void persist(const std::filesystem::path& dir, const FuzzFailure& f) {
    std::filesystem::create_directories(dir);
    const std::string stem = "trial-" + std::to_string(f.trial);
    std::ofstream(dir / (stem + ".hmap")) << f.witness.map_text;
    std::ofstream(dir / (stem + ".ring")) << f.witness.ring_text;
    std::ofstream(dir / (stem + ".txt")) << f.what << '\n';
}

}  // namespace

FuzzReport fuzz_jordan(const FuzzConfig& cfg) {
    std::vector<TrialResult> results(cfg.trials);
    std::atomic<std::size_t> next_trial{0};
    auto worker = [&] {
        for (std::size_t t = next_trial++; t < cfg.trials; t = next_trial++) results[t] = run_trial(cfg, t);
    };
    unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(cfg.trials, 1)));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    }

    FuzzReport rep;
    rep.trials = cfg.trials;
    for (std::size_t t = 0; t < results.size(); ++t) {
        auto& r = results[t];
        rep.rings_found += r.found;
        rep.multi_item_rings += r.multi;
        rep.jordan_failures += r.jordan_failed;
        rep.face_split_failures += r.split_failed;
        rep.tail_failures += r.tail_failed;
        rep.errors += r.error;
        if (r.jordan_failed || r.split_failed || r.tail_failed || r.error)
            rep.failures.push_back({t, std::move(r.what), std::move(r.witness)});
    }
    if (cfg.witness_dir)
        for (const auto& f : rep.failures) persist(*cfg.witness_dir, f);
    return rep;
}

std::string format_report(const FuzzReport& r) {
    std::ostringstream os;
    os << "trials=" << r.trials << '\n'
       << "rings_found=" << r.rings_found << '\n'
       << "multi_item_rings=" << r.multi_item_rings << '\n'
       << "jordan_failures=" << r.jordan_failures << '\n'
       << "face_split_failures=" << r.face_split_failures << '\n'
       << "tail_failures=" << r.tail_failures << '\n'
       << "errors=" << r.errors << '\n';
    for (const auto& f : r.failures) os << "failure trial=" << f.trial << ": " << f.what << '\n';
    return os.str();
}

}  // namespace hmap
