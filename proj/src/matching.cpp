#include "dyngraph/matching.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "dyngraph/error.hpp"

namespace dyngraph {

// --------------------------------------------------------------- RepairQueue

void RepairQueue::push(VertexId v, double priority) {
    heap_.push_back({priority, v});
    std::push_heap(heap_.begin(), heap_.end(), std::greater<>{});
}

RepairQueue::Entry RepairQueue::pop() {
    std::pop_heap(heap_.begin(), heap_.end(), std::greater<>{});
    const Entry top = heap_.back();
    heap_.pop_back();
    return top;
}

// ------------------------------------------------------------------ RankPool

double RankPool::draw(Rng& rng) {
    double r = rng.open_unit();
    while (!live_.insert(r).second) {
        r = rng.open_unit();
    }
    return r;
}

void RankPool::claim(double rank) {
    if (!(rank > 0.0 && rank < 1.0)) {
        throw InvalidInput("edge rank must lie in (0,1)");
    }
    if (!live_.insert(rank).second) {
        throw InvalidInput("edge rank " + std::to_string(rank) + " already in use");
    }
}

namespace {

/// Bookkeeping shared by both repair loops: iteration bound, pop order and
/// push order checks.
class RepairRun {
public:
    RepairRun(std::size_t edges, std::size_t initial, RepairStats& stats) : bound_(edges + initial), stats_(stats) {
        stats_.last_bound = bound_;
        ++stats_.runs;
    }
    ~RepairRun() {
        stats_.last_iterations = iterations_;
        stats_.max_iterations = std::max(stats_.max_iterations, iterations_);
    }

    void popped(double priority) {
        if (++iterations_ > bound_) {
            throw InvariantViolation("partner repair exceeded its bound of " + std::to_string(bound_) + " iterations");
        }
        if (priority < current_) {
            throw InvariantViolation("partner repair popped priorities out of order");
        }
        current_ = priority;
    }

    void pushed(double priority) const {
        if (!(priority > current_)) {
            throw InvariantViolation("partner repair enqueued a priority not above the current one");
        }
    }

private:
    std::size_t bound_;
    std::size_t iterations_ = 0;
    double current_ = -kUnmatchedRank;
    RepairStats& stats_;
};

} // namespace

// -------------------------------------------------------------- TrivialMatch

TrivialMatch::TrivialMatch(std::size_t n, std::size_t delta, std::uint64_t seed, const AlgorithmOptions&)
    : MatchingAlgorithm(n, delta, seed), adj_(n, neighbor_reserve(n, delta)) {}

void TrivialMatch::apply(const UpdateOp& op) {
    const auto [u, v] = op.edge;
    if (op.kind == UpdateKind::Insert) {
        adj_.add_edge(op.edge);
        if (!matched(u) && !matched(v)) {
            partner_[u] = v;
            partner_[v] = u;
        }
        return;
    }
    adj_.remove_edge(op.edge);
    if (partner_[u] == v) {
        partner_[u] = kNoVertex;
        partner_[v] = kNoVertex;
        rematch(u);
        rematch(v);
    }
}

void TrivialMatch::rematch(VertexId v) {
    if (matched(v)) {
        return;
    }
    for (VertexId w : adj_.neighbors(v)) {
        ++counters_.partner_search_steps;
        if (!matched(w)) {
            partner_[v] = w;
            partner_[w] = v;
            return;
        }
    }
}

// ------------------------------------------------------------- HierMatchBase

HierMatchBase::HierMatchBase(std::size_t n, std::size_t delta, std::uint64_t seed, int max_level, bool lazy)
    : MatchingAlgorithm(n, delta, seed),
      max_level_(max_level),
      lazy_(lazy),
      level_(n, -1),
      buckets_(n, LevelBuckets(max_level)) {}

void HierMatchBase::apply(const UpdateOp& op) {
    const auto [u, v] = op.edge;
    if (op.kind == UpdateKind::Insert) {
        buckets_[u].insert(v, level_[v]);
        buckets_[v].insert(u, level_[u]);
        if (!matched(u) && !matched(v)) {
            match(u, v, 0);
        }
        return;
    }
    buckets_[u].erase(v);
    buckets_[v].erase(u);
    if (partner_[u] != v) {
        return;
    }
    partner_[u] = kNoVertex;
    partner_[v] = kNoVertex;
    pending_.push_back({v, max_level_});
    pending_.push_back({u, max_level_});
    settle_all();
}

void HierMatchBase::set_level(VertexId v, int l) {
    if (level_[v] == l) {
        return;
    }
    level_[v] = l;
    ++counters_.level_changes;
    if (!lazy_ || l == -1) {
        buckets_[v].for_each([&](VertexId w) { buckets_[w].move(v, l); });
    }
}

void HierMatchBase::match(VertexId a, VertexId b, int l) {
    partner_[a] = b;
    partner_[b] = a;
    set_level(a, l);
    set_level(b, l);
}

void HierMatchBase::settle_all() {
    while (!pending_.empty()) {
        const Pending p = pending_.back();
        pending_.pop_back();
        settle(p.vertex, p.cap);
    }
}

VertexId HierMatchBase::find_free_neighbor(VertexId v) {
    LevelBuckets& b = buckets_[v];
    std::size_t i = 0;
    while (i < b.bucket(-1).size()) {
        const VertexId w = b.bucket(-1)[i];
        ++counters_.partner_search_steps;
        if (!matched(w)) {
            return w;
        }
        if (level_[w] != -1) {
            // Stale lazy record; the swap-removal refills slot i.
            b.move(w, level_[w]);
            continue;
        }
        ++i;
    }
    return kNoVertex;
}

void HierMatchBase::settle(VertexId v, int cap) {
    if (matched(v)) {
        return;
    }
    const int l = steal_level(v, cap);
    if (l >= 1) {
        set_level(v, l);
        LevelBuckets& b = buckets_[v];
        while (b.count_below(l) > 0) {
            const VertexId w = b.sample_below(l, rng_);
            ++counters_.partner_search_steps;
            if (level_[w] >= l) {
                b.move(w, level_[w]);
                continue;
            }
            const VertexId evicted = partner_[w];
            if (evicted != kNoVertex) {
                partner_[evicted] = kNoVertex;
                // The evicted vertex may only settle strictly below l, so
                // every stealing chain descends and terminates.
                pending_.push_back({evicted, l - 1});
            }
            match(v, w, l);
            return;
        }
    }
    const VertexId w = find_free_neighbor(v);
    if (w != kNoVertex) {
        match(v, w, 0);
        return;
    }
    set_level(v, -1);
}

std::string HierMatchBase::audit() const {
    for (VertexId v = 0; v < n_; ++v) {
        const VertexId p = partner_[v];
        if ((p == kNoVertex) != (level_[v] == -1)) {
            return "level -1 must coincide with being free at vertex " + std::to_string(v);
        }
        if (p != kNoVertex && (partner_[p] != v || level_[p] != level_[v])) {
            return "matched partners disagree at vertex " + std::to_string(v);
        }
        std::string problem;
        buckets_[v].for_each([&](VertexId w) {
            if (!problem.empty()) {
                return;
            }
            if (!buckets_[w].contains(v)) {
                problem = "asymmetric neighborhood at vertex " + std::to_string(v);
            } else if (!lazy_ && buckets_[v].level_of(w) != level_[w]) {
                problem = "stale level record at vertex " + std::to_string(v);
            } else if (level_[w] == -1 && buckets_[v].level_of(w) != -1) {
                problem = "free neighbor " + std::to_string(w) + " not recorded at level -1 by " + std::to_string(v);
            }
        });
        if (!problem.empty()) {
            return problem;
        }
    }
    return {};
}

Hier1Match::Hier1Match(std::size_t n, std::size_t delta, std::uint64_t seed, const AlgorithmOptions& options)
    : HierMatchBase(n, delta, seed, 1, false),
      threshold_(options.hier1_threshold != 0
                     ? options.hier1_threshold
                     : static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))))) {}

int Hier1Match::steal_level(VertexId v, int cap) const {
    return cap >= 1 && neighbors(v).count_below(1) >= threshold_ ? 1 : 0;
}

namespace {

int log2_levels(std::size_t n) {
    int levels = 0;
    while ((std::size_t{1} << levels) < n) {
        ++levels;
    }
    return std::max(levels - 1, 1);
}

} // namespace

Hier2Match::Hier2Match(std::size_t n, std::size_t delta, std::uint64_t seed, const AlgorithmOptions&)
    : HierMatchBase(n, delta, seed, log2_levels(n), true) {}

int Hier2Match::steal_level(VertexId v, int cap) const {
    for (int l = std::min(cap, max_level()); l >= 1; --l) {
        if (neighbors(v).count_below(l) >= (std::size_t{2} << l)) {
            return l;
        }
    }
    return 0;
}

// --------------------------------------------------------------- RandR1Match

RandR1Match::RandR1Match(std::size_t n, std::size_t delta, std::uint64_t seed, const AlgorithmOptions&)
    : MatchingAlgorithm(n, delta, seed), k_(n, kUnmatchedRank), index_(n) {}

void RandR1Match::apply(const UpdateOp& op) {
    if (op.kind == UpdateKind::Insert) {
        insert(op.edge, pool_.draw(rng_));
    } else {
        remove(op.edge);
    }
}

void RandR1Match::insert_with_rank(const EdgeKey& e, double rank) {
    pool_.claim(rank);
    insert(e, rank);
}

void RandR1Match::reset_vertex(VertexId x, RepairQueue& queue) {
    queue.push(x, k_[x]);
    ++counters_.queue_pushes;
    partner_[x] = kNoVertex;
    k_[x] = kUnmatchedRank;
}

void RandR1Match::insert(const EdgeKey& e, double rank) {
    const auto [u, v] = e;
    const double elim = std::min({rank, k_[u], k_[v]});
    edges_.emplace(e, EdgeData{rank, elim});
    index_[u].emplace(elim, v);
    index_[v].emplace(elim, u);
    counters_.index_updates += 2;
    queue_.clear();
    if (rank < std::min(k_[u], k_[v])) {
        const VertexId pu = partner_[u];
        const VertexId pv = partner_[v];
        if (pv != kNoVertex) {
            reset_vertex(pv, queue_);
        }
        if (pu != kNoVertex) {
            reset_vertex(pu, queue_);
        }
        partner_[u] = v;
        partner_[v] = u;
        k_[u] = k_[v] = rank;
        refresh(u);
        refresh(v);
        if (pu != kNoVertex) {
            refresh(pu);
        }
        if (pv != kNoVertex) {
            refresh(pv);
        }
    }
    repair(queue_);
}

void RandR1Match::remove(const EdgeKey& e) {
    const auto [u, v] = e;
    const auto it = edges_.find(e);
    const EdgeData data = it->second;
    edges_.erase(it);
    pool_.release(data.rank);
    index_[u].erase({data.eliminator, v});
    index_[v].erase({data.eliminator, u});
    counters_.index_updates += 2;
    queue_.clear();
    if (partner_[u] == v) {
        queue_.push(u, data.rank);
        queue_.push(v, data.rank);
        counters_.queue_pushes += 2;
        partner_[u] = partner_[v] = kNoVertex;
        k_[u] = k_[v] = kUnmatchedRank;
        refresh(u);
        refresh(v);
    }
    repair(queue_);
}

void RandR1Match::refresh(VertexId x) {
    scratch_.clear();
    for (const auto& entry : index_[x]) {
        scratch_.push_back(entry.second);
    }
    for (VertexId y : scratch_) {
        EdgeData& d = edges_.find(normalize_edge(x, y))->second;
        const double elim = std::min({d.rank, k_[x], k_[y]});
        if (elim == d.eliminator) {
            continue;
        }
        index_[x].erase({d.eliminator, y});
        index_[x].emplace(elim, y);
        index_[y].erase({d.eliminator, x});
        index_[y].emplace(elim, x);
        d.eliminator = elim;
        counters_.index_updates += 2;
    }
}

void RandR1Match::repair(RepairQueue& queue) {
    RepairRun run(edges_.size(), queue.size(), stats_);
    while (!queue.empty()) {
        const auto [rv, v] = queue.pop();
        run.popped(rv);
        ++counters_.partner_search_steps;
        // Uncovered incident edges have eliminator rank equal to their own
        // rank, so the first such entry above rv is the lowest-rank one.
        VertexId mate = kNoVertex;
        double mate_rank = 0.0;
        const Index& idx = index_[v];
        for (auto it = idx.upper_bound({rv, kNoVertex}); it != idx.end() && it->first < k_[v]; ++it) {
            ++counters_.partner_search_steps;
            const VertexId w = it->second;
            const double rank = edges_.find(normalize_edge(v, w))->second.rank;
            if (it->first == rank && rank < k_[w]) {
                mate = w;
                mate_rank = rank;
                break;
            }
        }
        if (mate == kNoVertex) {
            continue;
        }
        const VertexId x = partner_[mate];
        const VertexId y = partner_[v];
        if (x != kNoVertex) {
            run.pushed(k_[mate]);
            reset_vertex(x, queue);
        }
        if (y != kNoVertex) {
            run.pushed(k_[v]);
            reset_vertex(y, queue);
        }
        partner_[v] = mate;
        partner_[mate] = v;
        k_[v] = k_[mate] = mate_rank;
        refresh(v);
        refresh(mate);
        if (x != kNoVertex) {
            refresh(x);
        }
        if (y != kNoVertex) {
            refresh(y);
        }
    }
}

std::vector<std::pair<EdgeKey, double>> RandR1Match::edge_ranks() const {
    std::vector<std::pair<EdgeKey, double>> out;
    out.reserve(edges_.size());
    for (const auto& [e, d] : edges_) {
        out.emplace_back(e, d.rank);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string RandR1Match::audit() const {
    std::size_t entries = 0;
    for (VertexId v = 0; v < n_; ++v) {
        entries += index_[v].size();
        const VertexId p = partner_[v];
        if (p == kNoVertex ? k_[v] != kUnmatchedRank
                           : (partner_[p] != v || k_[v] != edges_.at(normalize_edge(v, p)).rank)) {
            return "vertex rank inconsistent at vertex " + std::to_string(v);
        }
    }
    if (entries != 2 * edges_.size()) {
        return "eliminator index size mismatch";
    }
    for (const auto& [e, d] : edges_) {
        if (d.eliminator != std::min({d.rank, k_[e.u], k_[e.v]})) {
            return "stale eliminator rank on edge " + to_string(e);
        }
        if (!index_[e.u].count({d.eliminator, e.v}) || !index_[e.v].count({d.eliminator, e.u})) {
            return "eliminator index missing edge " + to_string(e);
        }
        const bool in_matching = partner_[e.u] == e.v;
        if (in_matching ? d.eliminator != d.rank : !(d.eliminator < d.rank)) {
            return "eliminator rank violates the cover condition on edge " + to_string(e);
        }
    }
    return {};
}

// --------------------------------------------------------------- RandR2Match

RandR2Match::RandR2Match(std::size_t n, std::size_t delta, std::uint64_t seed, const AlgorithmOptions&)
    : MatchingAlgorithm(n, delta, seed), k_(n, kUnmatchedRank), adj_(n, neighbor_reserve(n, delta)) {
    // The edge count never exceeds n·delta/2; reserving that much up front
    // (capped) avoids rehashing while the graph grows.
    const std::size_t expected = std::min<std::size_t>(n * delta / 2, std::size_t{1} << 22);
    ranks_.reserve(expected);
    pool_.reserve(expected);
}

void RandR2Match::apply(const UpdateOp& op) {
    if (op.kind == UpdateKind::Insert) {
        insert(op.edge);
    } else {
        remove(op.edge);
    }
}

void RandR2Match::insert(const EdgeKey& e) { link(e, pool_.draw(rng_)); }

void RandR2Match::evict_partner(VertexId x, RepairQueue& queue, double floor) {
    const VertexId p = partner_[x];
    if (p == kNoVertex) {
        return;
    }
    if (!(k_[x] > floor)) {
        throw InvariantViolation("partner repair enqueued a priority not above the current one");
    }
    queue.push(p, k_[x]);
    ++counters_.queue_pushes;
    partner_[p] = kNoVertex;
    k_[p] = kUnmatchedRank;
}

void RandR2Match::insert_with_rank(const EdgeKey& e, double rank) {
    pool_.claim(rank);
    link(e, rank);
}

void RandR2Match::link(const EdgeKey& e, double rank) {
    const auto [u, v] = e;
    ranks_.emplace(e, rank);
    adj_.insert(v, rank, u);
    adj_.insert(u, rank, v);
    queue_.clear();
    if (rank < std::min(k_[v], k_[u])) {
        evict_partner(v, queue_, -kUnmatchedRank);
        evict_partner(u, queue_, -kUnmatchedRank);
        k_[u] = k_[v] = rank;
        partner_[u] = v;
        partner_[v] = u;
    }
    find_new_partners(queue_);
}

void RandR2Match::remove(const EdgeKey& e) {
    const auto [u, v] = e;
    const auto it = ranks_.find(e);
    const double rank = it->second;
    ranks_.erase(it);
    pool_.release(rank);
    adj_.remove(v, rank, u);
    adj_.remove(u, rank, v);
    queue_.clear();
    if (partner_[v] == u) {
        queue_.push(u, rank);
        queue_.push(v, rank);
        counters_.queue_pushes += 2;
        k_[u] = k_[v] = kUnmatchedRank;
        partner_[u] = partner_[v] = kNoVertex;
    }
    find_new_partners(queue_);
}

void RandR2Match::find_new_partners(RepairQueue& queue) {
    RepairRun run(ranks_.size(), queue.size(), stats_);
    while (!queue.empty()) {
        const auto [rv, v] = queue.pop();
        run.popped(rv);
        ++counters_.partner_search_steps;
        if (!(rv < k_[v])) {
            continue;
        }
        const auto nbrs = adj_.compact(v);
        auto it = std::upper_bound(nbrs.begin(), nbrs.end(), rv,
                                   [](double r, const RankedNeighbor& x) { return r < x.rank; });
        for (; it != nbrs.end() && it->rank < k_[v]; ++it) {
            ++counters_.partner_search_steps;
            const VertexId w = it->vertex;
            const double rank = it->rank;
            if (rank < k_[w]) {
                evict_partner(w, queue, rv);
                evict_partner(v, queue, rv);
                partner_[v] = w;
                partner_[w] = v;
                k_[v] = rank;
                k_[w] = rank;
                break;
            }
        }
    }
}

std::vector<std::pair<EdgeKey, double>> RandR2Match::edge_ranks() const {
    std::vector<std::pair<EdgeKey, double>> out(ranks_.begin(), ranks_.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::string RandR2Match::audit() const {
    std::vector<std::size_t> degree(n_, 0);
    for (const auto& [e, r] : ranks_) {
        ++degree[e.u];
        ++degree[e.v];
    }
    for (VertexId v = 0; v < n_; ++v) {
        if (adj_.degree(v) != degree[v]) {
            return "ranked adjacency degree mismatch at vertex " + std::to_string(v);
        }
        const VertexId p = partner_[v];
        if (p == kNoVertex ? k_[v] != kUnmatchedRank
                           : (partner_[p] != v || k_[v] != ranks_.at(normalize_edge(v, p)))) {
            return "vertex rank inconsistent at vertex " + std::to_string(v);
        }
    }
    return {};
}

} // namespace dyngraph
