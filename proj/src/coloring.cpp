#include "dyngraph/coloring.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "dyngraph/error.hpp"

namespace dyngraph {

namespace {

// Rejection sampling gives up after this many draws per palette color and
// enumerates the admissible colors instead.
constexpr std::size_t kDrawsPerColor = 8;

std::string vertex_msg(std::string_view what, VertexId v) {
    return std::string(what) + " at vertex " + std::to_string(v);
}

} // namespace

// ---------------------------------------------------------------- RecurseCol

RecurseCol::RecurseCol(std::size_t n, std::size_t delta, std::uint64_t seed, const AlgorithmOptions& options)
    : ColoringAlgorithm(n, delta, seed), adj_(n), cascade_cap_(options.cascade_cap) {}

void RecurseCol::apply(const UpdateOp& op) {
    const auto [u, v] = op.edge;
    if (op.kind == UpdateKind::Delete) {
        adj_.remove_edge(op.edge);
        return;
    }
    adj_.add_edge(op.edge);
    if (xi_[u] == xi_[v]) {
        cascade(rng_.below(2) == 0 ? u : v);
    }
}

void RecurseCol::cascade(VertexId start) {
    xi_[start] = random_color();
    ++counters_.recolors;
    stack_.clear();
    stack_.push_back({start, 0});
    while (!stack_.empty()) {
        Frame& top = stack_.back();
        const auto nbrs = adj_.neighbors(top.vertex);
        if (top.next == nbrs.size()) {
            stack_.pop_back();
            continue;
        }
        const VertexId w = nbrs[top.next++];
        if (xi_[w] != xi_[top.vertex]) {
            continue;
        }
        xi_[w] = random_color();
        ++counters_.recolors;
        stack_.push_back({w, 0});
        counters_.max_cascade_depth = std::max<std::uint64_t>(counters_.max_cascade_depth, stack_.size());
        if (stack_.size() > cascade_cap_) {
            throw CascadeError("non-terminating cascade: recursion depth exceeded " + std::to_string(cascade_cap_));
        }
    }
}

// ------------------------------------------------------------------ CountCol

CountCol::CountCol(std::size_t n, std::size_t delta, std::uint64_t seed, const AlgorithmOptions& options)
    : ColoringAlgorithm(n, delta, seed), adj_(n) {
    check_count_budget(options);
    counts_.assign(n * (delta + 1), 0);
}

void CountCol::apply(const UpdateOp& op) {
    const auto [u, v] = op.edge;
    if (op.kind == UpdateKind::Delete) {
        adj_.remove_edge(op.edge);
        --counts_[slot(u, xi_[v])];
        --counts_[slot(v, xi_[u])];
        return;
    }
    adj_.add_edge(op.edge);
    ++counts_[slot(u, xi_[v])];
    ++counts_[slot(v, xi_[u])];
    if (xi_[u] == xi_[v]) {
        recolor(rng_.below(2) == 0 ? u : v);
    }
}

void CountCol::recolor(VertexId v) {
    // deg(v) <= Delta < palette size, so a free color exists.
    Color c = random_color();
    while (counts_[slot(v, c)] != 0) {
        c = random_color();
    }
    const Color old = xi_[v];
    xi_[v] = c;
    ++counters_.recolors;
    counters_.max_cascade_depth = std::max<std::uint64_t>(counters_.max_cascade_depth, 1);
    for (VertexId w : adj_.neighbors(v)) {
        --counts_[slot(w, old)];
        ++counts_[slot(w, c)];
    }
}

std::string CountCol::audit() const {
    std::vector<std::uint32_t> fresh(delta_ + 1);
    for (VertexId v = 0; v < n_; ++v) {
        std::fill(fresh.begin(), fresh.end(), 0);
        for (VertexId w : adj_.neighbors(v)) {
            ++fresh[xi_[w]];
        }
        for (Color c = 0; c <= delta_; ++c) {
            if (fresh[c] != counts_[slot(v, c)]) {
                return vertex_msg("color count mismatch for color " + std::to_string(c), v);
            }
        }
    }
    return {};
}

// ------------------------------------------------------------------ RandRCol

RandRCol::RandRCol(std::size_t n, std::size_t delta, std::uint64_t seed, const AlgorithmOptions& options)
    : ColoringAlgorithm(n, delta, seed), cascade_cap_(options.cascade_cap), rank_(n), higher_(n), lower_(n) {
    check_count_budget(options);
    hi_counts_.assign(n * (delta + 1), 0);
    lo_counts_.assign(n * (delta + 1), 0);
    std::unordered_set<double> used;
    for (auto& r : rank_) {
        do {
            r = rng_.open_unit();
        } while (!used.insert(r).second);
    }
}

void RandRCol::apply(const UpdateOp& op) {
    VertexId lo = op.edge.u;
    VertexId hi = op.edge.v;
    if (rank_[lo] > rank_[hi]) {
        std::swap(lo, hi);
    }
    if (op.kind == UpdateKind::Delete) {
        higher_[lo].erase(hi);
        lower_[hi].erase(lo);
        --hi_counts_[slot(lo, xi_[hi])];
        --lo_counts_[slot(hi, xi_[lo])];
        return;
    }
    higher_[lo].insert(hi);
    lower_[hi].insert(lo);
    ++hi_counts_[slot(lo, xi_[hi])];
    ++lo_counts_[slot(hi, xi_[lo])];
    if (xi_[lo] == xi_[hi]) {
        recolor(hi);
    }
}

Color RandRCol::draw_admissible(VertexId v) {
    const std::size_t palette = delta_ + 1;
    for (std::size_t draw = 0; draw < kDrawsPerColor * palette; ++draw) {
        const Color c = random_color();
        if (admissible(v, c)) {
            return c;
        }
    }
    std::vector<Color> options;
    for (Color c = 0; c < palette; ++c) {
        if (admissible(v, c)) {
            options.push_back(c);
        }
    }
    // A color unused by all neighbors always exists since deg(v) <= Delta.
    return options[rng_.below(options.size())];
}

void RandRCol::assign(VertexId v, Color c) {
    const Color old = xi_[v];
    ++counters_.recolors;
    if (old == c) {
        return;
    }
    xi_[v] = c;
    for (VertexId w : higher_[v].items()) {
        --lo_counts_[slot(w, old)];
        ++lo_counts_[slot(w, c)];
    }
    for (VertexId w : lower_[v].items()) {
        --hi_counts_[slot(w, old)];
        ++hi_counts_[slot(w, c)];
    }
}

void RandRCol::recolor(VertexId v) {
    std::size_t depth = 0;
    while (true) {
        ++depth;
        counters_.max_cascade_depth = std::max<std::uint64_t>(counters_.max_cascade_depth, depth);
        if (depth > cascade_cap_) {
            throw CascadeError("randr-col recoloring chain exceeded " + std::to_string(cascade_cap_));
        }
        const Color c = draw_admissible(v);
        assign(v, c);
        if (lo_counts_[slot(v, c)] == 0) {
            return;
        }
        // Exactly one lower-rank neighbor holds c; it is recolored next and
        // has strictly smaller rank, so the chain terminates.
        VertexId next = kNoVertex;
        for (VertexId w : lower_[v].items()) {
            if (xi_[w] == c) {
                next = w;
                break;
            }
        }
        v = next;
    }
}

std::string RandRCol::audit() const {
    std::vector<std::uint32_t> hi(delta_ + 1);
    std::vector<std::uint32_t> lo(delta_ + 1);
    for (VertexId v = 0; v < n_; ++v) {
        std::fill(hi.begin(), hi.end(), 0);
        std::fill(lo.begin(), lo.end(), 0);
        for (VertexId w : higher_[v].items()) {
            if (!(rank_[w] > rank_[v])) {
                return vertex_msg("H contains a lower-rank neighbor", v);
            }
            if (!lower_[w].contains(v)) {
                return vertex_msg("H/L asymmetry", v);
            }
            ++hi[xi_[w]];
        }
        for (VertexId w : lower_[v].items()) {
            if (!(rank_[w] < rank_[v])) {
                return vertex_msg("L contains a higher-rank neighbor", v);
            }
            if (!higher_[w].contains(v)) {
                return vertex_msg("L/H asymmetry", v);
            }
            ++lo[xi_[w]];
        }
        for (Color c = 0; c <= delta_; ++c) {
            if (hi[c] != hi_counts_[slot(v, c)] || lo[c] != lo_counts_[slot(v, c)]) {
                return vertex_msg("H/L color count mismatch for color " + std::to_string(c), v);
            }
        }
    }
    return {};
}

// ------------------------------------------------------------------- HierCol

HierCol::HierCol(std::size_t n, std::size_t delta, std::uint64_t seed, const AlgorithmOptions& options)
    : ColoringAlgorithm(n, delta, seed), cascade_cap_(options.cascade_cap), level_(n, -1), stamp_(n, 0) {
    check_count_budget(options);
    // Highest level needed: the first l >= 0 with 3^(l+2) > Delta. A vertex
    // never has more than Delta neighbors, so that level always qualifies.
    std::size_t t = 3;
    thresholds_.push_back(t);
    while (t <= delta) {
        t *= 3;
        thresholds_.push_back(t);
    }
    if (thresholds_.size() < 2) {
        thresholds_.push_back(t * 3);
    }
    max_level_ = static_cast<int>(thresholds_.size()) - 2;
    buckets_.assign(n, LevelBuckets(max_level_));
    counts_.assign(n * (delta + 1), 0);
}

void HierCol::apply(const UpdateOp& op) {
    const auto [u, v] = op.edge;
    if (op.kind == UpdateKind::Delete) {
        buckets_[u].erase(v);
        buckets_[v].erase(u);
        --counts_[slot(u, xi_[v])];
        --counts_[slot(v, xi_[u])];
        return;
    }
    buckets_[u].insert(v, level_[v]);
    buckets_[v].insert(u, level_[u]);
    ++counts_[slot(u, xi_[v])];
    ++counts_[slot(v, xi_[u])];
    if (xi_[u] == xi_[v]) {
        // The more recently recolored endpoint moves; never-recolored ties
        // go to the smaller id.
        recolor(stamp_[v] > stamp_[u] ? v : u);
    }
}

int HierCol::target_level(VertexId v) const {
    const LevelBuckets& b = buckets_[v];
    std::size_t at_most = 0;
    for (int l = -1; l <= max_level_; ++l) {
        at_most += b.bucket(l).size();
        if (at_most < threshold(l)) {
            return l;
        }
    }
    return max_level_;
}

void HierCol::set_level(VertexId v, int l) {
    if (level_[v] == l) {
        return;
    }
    level_[v] = l;
    ++counters_.level_changes;
    buckets_[v].for_each([&](VertexId w) { buckets_[w].move(v, l); });
}

VertexId HierCol::lower_holder(VertexId v, Color c) const {
    const LevelBuckets& b = buckets_[v];
    for (int l = -1; l < level_[v]; ++l) {
        for (VertexId w : b.bucket(l)) {
            if (xi_[w] == c) {
                return w;
            }
        }
    }
    return kNoVertex;
}

void HierCol::assign(VertexId v, Color c) {
    const Color old = xi_[v];
    ++counters_.recolors;
    stamp_[v] = ++clock_;
    if (old == c) {
        return;
    }
    xi_[v] = c;
    buckets_[v].for_each([&](VertexId w) {
        --counts_[slot(w, old)];
        ++counts_[slot(w, c)];
    });
}

void HierCol::recolor(VertexId v) {
    const std::size_t palette = delta_ + 1;
    std::size_t depth = 0;
    while (v != kNoVertex) {
        ++depth;
        counters_.max_cascade_depth = std::max<std::uint64_t>(counters_.max_cascade_depth, depth);
        if (depth > cascade_cap_) {
            throw CascadeError("hier-col recoloring chain exceeded " + std::to_string(cascade_cap_));
        }
        set_level(v, target_level(v));

        // Admissible: unused by every neighbor, or (above level -1) used by
        // exactly one neighbor of strictly lower level.
        const auto holder_of = [&](Color c) -> std::pair<bool, VertexId> {
            const std::uint32_t k = counts_[slot(v, c)];
            if (k == 0) {
                return {true, kNoVertex};
            }
            if (k == 1 && level_[v] >= 0) {
                const VertexId w = lower_holder(v, c);
                return {w != kNoVertex, w};
            }
            return {false, kNoVertex};
        };

        Color chosen = 0;
        VertexId next = kNoVertex;
        bool found = false;
        for (std::size_t draw = 0; draw < kDrawsPerColor * palette && !found; ++draw) {
            const Color c = random_color();
            const auto [ok, w] = holder_of(c);
            if (ok) {
                chosen = c;
                next = w;
                found = true;
            }
        }
        if (!found) {
            std::vector<std::pair<Color, VertexId>> options;
            for (Color c = 0; c < palette; ++c) {
                const auto [ok, w] = holder_of(c);
                if (ok) {
                    options.emplace_back(c, w);
                }
            }
            std::tie(chosen, next) = options[rng_.below(options.size())];
        }
        assign(v, chosen);
        v = next;
    }
}

std::string HierCol::audit() const {
    std::vector<std::uint32_t> fresh(delta_ + 1);
    for (VertexId v = 0; v < n_; ++v) {
        std::fill(fresh.begin(), fresh.end(), 0);
        std::string problem;
        buckets_[v].for_each([&](VertexId w) {
            ++fresh[xi_[w]];
            if (problem.empty() && buckets_[v].level_of(w) != level_[w]) {
                problem = vertex_msg("stale level record of neighbor " + std::to_string(w), v);
            }
            if (problem.empty() && !buckets_[w].contains(v)) {
                problem = vertex_msg("asymmetric neighborhood", v);
            }
        });
        if (!problem.empty()) {
            return problem;
        }
        for (Color c = 0; c <= delta_; ++c) {
            if (fresh[c] != counts_[slot(v, c)]) {
                return vertex_msg("color count mismatch for color " + std::to_string(c), v);
            }
        }
    }
    return {};
}

} // namespace dyngraph
