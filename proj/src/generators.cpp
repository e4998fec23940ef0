#include "dyngraph/generators.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "dyngraph/adjacency.hpp"
#include "dyngraph/error.hpp"
#include "dyngraph/level_buckets.hpp"
#include "dyngraph/matching.hpp"

namespace dyngraph {

namespace {

std::size_t pair_count(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

EdgeKey random_pair(Rng& rng, std::size_t n) {
    for (;;) {
        const auto a = static_cast<VertexId>(rng.below(n));
        const auto b = static_cast<VertexId>(rng.below(n));
        if (a != b) {
            return normalize_edge(a, b);
        }
    }
}

std::vector<EdgeKey> complete_graph(std::size_t n) {
    std::vector<EdgeKey> out;
    out.reserve(pair_count(n));
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            out.push_back({u, v});
        }
    }
    return out;
}

} // namespace

std::vector<EdgeKey> gen_er(std::size_t n, std::size_t m, std::uint64_t seed) {
    const std::size_t pairs = pair_count(n);
    if (m > pairs) {
        throw InvalidInput("cannot place " + std::to_string(m) + " edges on " + std::to_string(n) + " vertices");
    }
    Rng rng(seed);
    if (2 * m > pairs) {
        // Dense: a partial shuffle of all pairs.
        auto all = complete_graph(n);
        for (std::size_t i = 0; i < m; ++i) {
            std::swap(all[i], all[i + rng.below(all.size() - i)]);
        }
        all.resize(m);
        return all;
    }
    std::unordered_set<EdgeKey, EdgeKeyHash> seen;
    seen.reserve(m);
    std::vector<EdgeKey> out;
    out.reserve(m);
    while (out.size() < m) {
        const EdgeKey e = random_pair(rng, n);
        if (seen.insert(e).second) {
            out.push_back(e);
        }
    }
    return out;
}

// ----------------------------------------------------------------------- RHG

namespace {

struct HyperbolicPoints {
    std::vector<double> cosh_r, sinh_r, cos_t, sin_t;
};

HyperbolicPoints place(const std::vector<double>& radial_u, const std::vector<double>& angle, double alpha,
                       double radius) {
    HyperbolicPoints p;
    const std::size_t n = radial_u.size();
    p.cosh_r.resize(n);
    p.sinh_r.resize(n);
    p.cos_t.resize(n);
    p.sin_t.resize(n);
    const double spread = std::cosh(alpha * radius) - 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        // Inverse CDF of the radial density.
        const double r = std::acosh(1.0 + spread * radial_u[i]) / alpha;
        p.cosh_r[i] = std::cosh(r);
        p.sinh_r[i] = std::sinh(r);
        p.cos_t[i] = std::cos(angle[i]);
        p.sin_t[i] = std::sin(angle[i]);
    }
    return p;
}

template <class F>
void for_each_close_pair(const HyperbolicPoints& p, double radius, F&& f) {
    const double limit = std::cosh(radius);
    const std::size_t n = p.cosh_r.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double cos_dt = p.cos_t[i] * p.cos_t[j] + p.sin_t[i] * p.sin_t[j];
            const double cosh_d = p.cosh_r[i] * p.cosh_r[j] - p.sinh_r[i] * p.sinh_r[j] * cos_dt;
            if (cosh_d < limit) {
                f(static_cast<VertexId>(i), static_cast<VertexId>(j));
            }
        }
    }
}

} // namespace

std::vector<EdgeKey> gen_rhg(std::size_t n, double avg_deg, double gamma, std::uint64_t seed) {
    if (!(gamma > 2.0) || !(avg_deg >= 1.0)) {
        throw InvalidInput("hyperbolic generator needs gamma > 2 and avg_deg >= 1");
    }
    if (n < 2) {
        return {};
    }
    const double target = std::min(avg_deg, static_cast<double>(n - 1));
    if (target >= static_cast<double>(n - 1)) {
        return complete_graph(n);
    }
    const double alpha = (gamma - 1.0) / 2.0;
    Rng rng(seed);
    std::vector<double> radial_u(n);
    std::vector<double> angle(n);
    for (std::size_t i = 0; i < n; ++i) {
        radial_u[i] = rng.open_unit();
        angle[i] = 2.0 * std::numbers::pi * rng.open_unit();
    }
    auto average_degree = [&](double radius) {
        std::size_t m = 0;
        for_each_close_pair(place(radial_u, angle, alpha, radius), radius, [&](VertexId, VertexId) { ++m; });
        return 2.0 * static_cast<double>(m) / static_cast<double>(n);
    };

    // The average degree falls as the disk grows; bracket the target, then
    // bisect on the radius.
    double lo = 1e-3;
    double hi = 2.0 * std::log(static_cast<double>(n)) + 1.0;
    while (average_degree(hi) > target && hi < 400.0) {
        hi *= 2.0;
    }
    double best = hi;
    double best_err = std::abs(average_degree(hi) - target);
    for (int iter = 0; iter < 40 && best_err > 1e-9; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double deg = average_degree(mid);
        if (std::abs(deg - target) < best_err) {
            best_err = std::abs(deg - target);
            best = mid;
        }
        (deg > target ? lo : hi) = mid;
    }
    if (best_err > 0.25 * target) {
        throw InvalidInput("hyperbolic radius calibration missed average degree " + std::to_string(avg_deg));
    }
    std::vector<EdgeKey> out;
    for_each_close_pair(place(radial_u, angle, alpha, best), best, [&](VertexId a, VertexId b) { out.push_back({a, b}); });
    return out;
}

// ------------------------------------------------------------ random updates

UpdateSequence random_update_sequence(std::size_t n, std::vector<EdgeKey> edges, double rho, std::uint64_t seed) {
    if (!(rho >= 0.0 && rho <= 1.0)) {
        throw InvalidInput("deletion rate must lie in [0,1]");
    }
    Rng rng(seed);
    std::shuffle(edges.begin(), edges.end(), rng.engine());
    UpdateSequence seq;
    seq.n = n;
    std::vector<EdgeKey> present;
    const double p_insert = 1.0 / (1.0 + rho);
    std::size_t next = 0;
    while (next < edges.size()) {
        if (rng.bernoulli(p_insert)) {
            present.push_back(edges[next]);
            seq.ops.push_back({UpdateKind::Insert, edges[next++]});
        } else if (!present.empty()) {
            const std::size_t i = rng.below(present.size());
            seq.ops.push_back({UpdateKind::Delete, present[i]});
            present[i] = present.back();
            present.pop_back();
        }
    }
    compute_delta_bound(seq);
    return seq;
}

// ------------------------------------------------------------------ clashing

ClashingSequence clashing_sequence(ColoringAlgorithm& target, std::size_t count, std::uint64_t seed,
                                   std::size_t max_draws) {
    const std::size_t n = target.vertex_count();
    const std::size_t delta = target.delta();
    if (max_draws == 0) {
        max_draws = 1'000'000 + 1000 * (delta + 1);
    }
    Rng rng(seed);
    HashedAdjacency adj(n);
    ClashingSequence out;
    out.seq.n = n;
    out.seq.delta_bound = delta;
    const auto& xi = target.colors();
    while (out.seq.ops.size() < count) {
        bool found = false;
        for (std::size_t draw = 0; draw < max_draws && n >= 2; ++draw) {
            const EdgeKey e = random_pair(rng, n);
            if (xi[e.u] == xi[e.v] && adj.degree(e.u) < delta && adj.degree(e.v) < delta && !adj.contains(e.u, e.v)) {
                adj.add_edge(e);
                const UpdateOp op{UpdateKind::Insert, e};
                out.seq.ops.push_back(op);
                target.apply(op);
                found = true;
                break;
            }
        }
        if (!found) {
            out.truncated = true;
            break;
        }
    }
    return out;
}

// -------------------------------------------------------------- equal degree

UpdateSequence EqualDegreeInstance::combined() const {
    UpdateSequence seq = initial;
    seq.ops.insert(seq.ops.end(), dynamic.ops.begin(), dynamic.ops.end());
    seq.setup_ops = initial.ops.size();
    seq.delta_bound = std::max(initial.delta_bound, dynamic.delta_bound);
    return seq;
}

EqualDegreeInstance equal_degree_sequence(std::size_t n, std::size_t delta, std::size_t updates, std::uint64_t seed) {
    if (delta < 2 || n < 2) {
        throw InvalidInput("equal-degree instances need delta >= 2 and n >= 2");
    }
    Rng rng(seed);
    EqualDegreeInstance inst;
    inst.initial.n = inst.dynamic.n = n;
    inst.initial.delta_bound = inst.dynamic.delta_bound = delta;

    // Phase 1: random edges among vertices that still have room.
    const std::size_t cap = delta - 1;
    const double goal = 0.99 * static_cast<double>(cap) * static_cast<double>(n);
    HashedAdjacency base(n);
    IndexedSet open;
    for (VertexId v = 0; v < n; ++v) {
        open.insert(v);
    }
    std::size_t degree_sum = 0;
    std::size_t misses = 0;
    while (static_cast<double>(degree_sum) < goal && open.size() >= 2) {
        const VertexId a = open.sample(rng);
        const VertexId b = open.sample(rng);
        if (a == b || base.contains(a, b)) {
            // A stall means the open vertices are (nearly) pairwise adjacent.
            if (++misses > 64 * open.size() * open.size() + 1024) {
                break;
            }
            continue;
        }
        misses = 0;
        const EdgeKey e = normalize_edge(a, b);
        base.add_edge(e);
        inst.initial.ops.push_back({UpdateKind::Insert, e});
        degree_sum += 2;
        for (VertexId x : {a, b}) {
            if (base.degree(x) >= cap) {
                open.erase(x);
            }
        }
    }
    inst.initial_avg_degree = static_cast<double>(degree_sum) / static_cast<double>(n);

    // Phase 2: toggle a maximum-degree-1 overlay.
    std::vector<VertexId> overlay(n, kNoVertex);
    const std::size_t max_attempts = 64 * n + 1024;
    while (inst.dynamic.ops.size() < updates) {
        const auto v = static_cast<VertexId>(rng.below(n));
        if (overlay[v] != kNoVertex) {
            const VertexId u = overlay[v];
            inst.dynamic.ops.push_back({UpdateKind::Delete, normalize_edge(u, v)});
            overlay[u] = overlay[v] = kNoVertex;
            continue;
        }
        for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
            const auto u = static_cast<VertexId>(rng.below(n));
            if (u != v && overlay[u] == kNoVertex && !base.contains(u, v)) {
                inst.dynamic.ops.push_back({UpdateKind::Insert, normalize_edge(u, v)});
                overlay[u] = v;
                overlay[v] = u;
                break;
            }
        }
    }
    return inst;
}

// ------------------------------------------------------------ sliding window

UpdateSequence sliding_window_sequence(std::size_t n, std::vector<EdgeKey> edges, std::size_t phi, double eta,
                                       std::uint64_t seed) {
    if (phi < 1 || !(eta >= 0.0 && eta <= 1.0)) {
        throw InvalidInput("sliding window needs phi >= 1 and eta in [0,1]");
    }
    Rng rng(seed);
    std::shuffle(edges.begin(), edges.end(), rng.engine());
    TrivialMatch coupled(n, 0, derive_seed(seed, 1));
    const auto& partner = coupled.partners();

    std::uint64_t clock = 0;
    std::unordered_map<EdgeKey, std::uint64_t, EdgeKeyHash> born;
    std::map<std::uint64_t, EdgeKey> live;
    std::set<std::pair<std::uint64_t, EdgeKey>> matched_live;

    UpdateSequence seq;
    seq.n = n;
    auto emit = [&](const UpdateOp& op) {
        // Only matching edges at the endpoints and at their partners change.
        VertexId touched[4] = {op.edge.u, op.edge.v, partner[op.edge.u], partner[op.edge.v]};
        auto sync = [&](bool add) {
            for (VertexId x : touched) {
                if (x == kNoVertex || partner[x] == kNoVertex) {
                    continue;
                }
                const auto it = born.find(normalize_edge(x, partner[x]));
                if (it == born.end()) {
                    continue;
                }
                if (add) {
                    matched_live.insert({it->second, it->first});
                } else {
                    matched_live.erase({it->second, it->first});
                }
            }
        };
        sync(false);
        if (op.kind == UpdateKind::Insert) {
            born.emplace(op.edge, clock);
            live.emplace(clock++, op.edge);
        }
        coupled.apply(op);
        if (op.kind == UpdateKind::Delete) {
            const auto it = born.find(op.edge);
            live.erase(it->second);
            born.erase(it);
        }
        sync(true);
        seq.ops.push_back(op);
    };

    for (const EdgeKey& e : edges) {
        if (live.size() >= phi) {
            const bool targeted = rng.bernoulli(eta);
            const EdgeKey victim =
                targeted && !matched_live.empty() ? matched_live.begin()->second : live.begin()->second;
            emit({UpdateKind::Delete, victim});
        }
        emit({UpdateKind::Insert, e});
    }
    compute_delta_bound(seq);
    return seq;
}

// ------------------------------------------------------------ temporal files

TemporalFile parse_temporal_file(std::istream& in) {
    TemporalFile out;
    std::unordered_map<std::string, VertexId> ids;
    std::unordered_set<EdgeKey, EdgeKeyHash> present;
    auto id_of = [&](const std::string& label) {
        const auto [it, fresh] = ids.emplace(label, static_cast<VertexId>(out.labels.size()));
        if (fresh) {
            out.labels.push_back(label);
        }
        return it->second;
    };
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '%' || line[first] == '#') {
            continue;
        }
        std::istringstream fields(line);
        std::string src;
        std::string dst;
        std::string weight_text;
        fields >> src >> dst >> weight_text;
        double weight = 0.0;
        std::size_t used = 0;
        try {
            weight = std::stod(weight_text, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (dst.empty() || used == 0 || used != weight_text.size()) {
            throw InvalidInput("temporal file line " + std::to_string(line_no) + ": expected `src dst weight timestamp`");
        }
        if (src == dst) {
            ++out.dropped_self_loop;
            continue;
        }
        if (weight == 0.0) {
            ++out.dropped_zero_weight;
            continue;
        }
        const bool insert = weight > 0.0;
        const auto known_src = ids.find(src);
        const auto known_dst = ids.find(dst);
        if (!insert && (known_src == ids.end() || known_dst == ids.end())) {
            ++out.dropped_absent;
            continue;
        }
        // Ids follow first appearance, source before destination.
        const VertexId a = id_of(src);
        const VertexId b = id_of(dst);
        const EdgeKey e = normalize_edge(a, b);
        if (insert ? !present.insert(e).second : present.erase(e) == 0) {
            ++(insert ? out.dropped_duplicate : out.dropped_absent);
            continue;
        }
        out.seq.ops.push_back({insert ? UpdateKind::Insert : UpdateKind::Delete, e});
    }
    out.seq.n = out.labels.size();
    compute_delta_bound(out.seq);
    return out;
}

} // namespace dyngraph
