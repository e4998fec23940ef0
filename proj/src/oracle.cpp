#include "dyngraph/oracle.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "dyngraph/error.hpp"
#include "dyngraph/matching.hpp"

namespace dyngraph {

namespace {

std::vector<std::size_t> rank_order(const Snapshot& s) {
    if (s.ranks.size() != s.edges.size()) {
        throw InvalidInput("snapshot has no rank for every edge");
    }
    std::vector<std::size_t> order(s.edges.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return s.ranks[a] < s.ranks[b]; });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (s.ranks[order[i - 1]] == s.ranks[order[i]]) {
            throw InvalidInput("duplicate edge rank " + std::to_string(s.ranks[order[i]]));
        }
    }
    return order;
}

void check_vertex(const Snapshot& s, VertexId v) {
    if (v >= s.n) {
        throw InvalidInput("vertex " + std::to_string(v) + " out of range");
    }
}

/// Partner array of a validated matching.
std::vector<VertexId> partner_array(const Snapshot& s) {
    if (!s.matching) {
        throw InvalidInput("snapshot has no matching");
    }
    std::unordered_set<EdgeKey, EdgeKeyHash> edge_set(s.edges.begin(), s.edges.end());
    std::vector<VertexId> partner(s.n, kNoVertex);
    for (const EdgeKey& e : *s.matching) {
        if (!edge_set.count(e)) {
            throw InvalidInput("matching edge " + to_string(e) + " is not a graph edge");
        }
        if (partner[e.u] != kNoVertex || partner[e.v] != kNoVertex) {
            throw InvalidInput("matching edges share a vertex at " + to_string(e));
        }
        partner[e.u] = e.v;
        partner[e.v] = e.u;
    }
    return partner;
}

} // namespace

std::vector<EdgeKey> greedy_lfmm(const Snapshot& s) {
    std::vector<bool> taken(s.n, false);
    std::vector<EdgeKey> out;
    for (std::size_t i : rank_order(s)) {
        const EdgeKey& e = s.edges[i];
        check_vertex(s, e.v);
        if (!taken[e.u] && !taken[e.v]) {
            taken[e.u] = taken[e.v] = true;
            out.push_back(e);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_proper_coloring(const Snapshot& s, std::size_t delta) {
    if (!s.colors || s.colors->size() != s.n) {
        throw InvalidInput("snapshot has no color for every vertex");
    }
    const auto& xi = *s.colors;
    for (VertexId v = 0; v < s.n; ++v) {
        if (xi[v] > delta) {
            throw InvalidInput("color " + std::to_string(xi[v]) + " of vertex " + std::to_string(v) +
                               " outside palette");
        }
    }
    for (const EdgeKey& e : s.edges) {
        check_vertex(s, e.v);
        if (xi[e.u] == xi[e.v]) {
            return false;
        }
    }
    return true;
}

bool is_maximal_matching(const Snapshot& s) {
    const auto partner = partner_array(s);
    return std::all_of(s.edges.begin(), s.edges.end(),
                       [&](const EdgeKey& e) { return partner[e.u] != kNoVertex || partner[e.v] != kNoVertex; });
}

bool is_lfmm(const Snapshot& s) {
    const auto partner = partner_array(s);
    std::unordered_map<EdgeKey, double, EdgeKeyHash> rank_of;
    rank_order(s);
    for (std::size_t i = 0; i < s.edges.size(); ++i) {
        rank_of.emplace(s.edges[i], s.ranks[i]);
    }
    auto matched_rank = [&](VertexId x) {
        return partner[x] == kNoVertex ? kUnmatchedRank : rank_of.at(normalize_edge(x, partner[x]));
    };
    bool covered = true;
    for (std::size_t i = 0; i < s.edges.size() && covered; ++i) {
        const EdgeKey& e = s.edges[i];
        if (partner[e.u] == e.v) {
            continue;
        }
        covered = std::min(matched_rank(e.u), matched_rank(e.v)) < s.ranks[i];
    }
    auto sorted = *s.matching;
    std::sort(sorted.begin(), sorted.end());
    if (covered != (sorted == greedy_lfmm(s))) {
        throw InvariantViolation("cover condition and greedy construction disagree");
    }
    return covered;
}

void write_snapshot(std::ostream& out, const Snapshot& s) {
    out << "n " << s.n << '\n';
    for (const EdgeKey& e : s.edges) {
        out << "i " << e.u << ' ' << e.v << '\n';
    }
    char buf[32];
    for (std::size_t i = 0; i < s.ranks.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", s.ranks[i]);
        out << "r " << s.edges[i].u << ' ' << s.edges[i].v << ' ' << buf << '\n';
    }
    if (s.matching) {
        for (const EdgeKey& e : *s.matching) {
            out << "m " << e.u << ' ' << e.v << '\n';
        }
    }
    if (s.colors) {
        for (VertexId v = 0; v < s.colors->size(); ++v) {
            out << "c " << v << ' ' << (*s.colors)[v] << '\n';
        }
    }
}

Snapshot read_snapshot(std::istream& in) {
    Snapshot s;
    bool have_n = false;
    std::unordered_map<EdgeKey, std::size_t, EdgeKeyHash> index;
    std::unordered_map<EdgeKey, double, EdgeKeyHash> ranks;
    std::string line;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& what) {
        throw InvalidInput("snapshot line " + std::to_string(line_no) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream fields(line);
        std::string tag;
        fields >> tag;
        if (tag == "n") {
            if (have_n || !(fields >> s.n)) {
                fail("bad header");
            }
            have_n = true;
            continue;
        }
        if (!have_n) {
            fail("record before the `n` header");
        }
        std::uint64_t a = 0;
        std::uint64_t b = 0;
        if (!(fields >> a >> b)) {
            fail("expected two integers");
        }
        if (tag == "c") {
            if (a >= s.n) {
                fail("vertex out of range");
            }
            if (!s.colors) {
                s.colors.emplace(s.n, 0);
            }
            (*s.colors)[a] = static_cast<Color>(b);
            continue;
        }
        if (a >= s.n || b >= s.n || a == b) {
            fail("invalid edge");
        }
        const EdgeKey e = normalize_edge(static_cast<VertexId>(a), static_cast<VertexId>(b));
        if (tag == "i") {
            if (!index.emplace(e, s.edges.size()).second) {
                fail("duplicate edge");
            }
            s.edges.push_back(e);
        } else if (tag == "r") {
            double r = 0.0;
            if (!(fields >> r) || !index.count(e)) {
                fail("rank needs a listed edge and a value");
            }
            ranks[e] = r;
        } else if (tag == "m") {
            if (!s.matching) {
                s.matching.emplace();
            }
            s.matching->push_back(e);
        } else {
            fail("unknown record `" + tag + "`");
        }
    }
    if (!have_n) {
        throw InvalidInput("snapshot has no `n` header");
    }
    if (!ranks.empty()) {
        if (ranks.size() != s.edges.size()) {
            throw InvalidInput("snapshot ranks only some edges");
        }
        s.ranks.reserve(s.edges.size());
        for (const EdgeKey& e : s.edges) {
            s.ranks.push_back(ranks.at(e));
        }
    }
    return s;
}

Snapshot snapshot_of(const ColoringAlgorithm& alg, const std::vector<EdgeKey>& edges) {
    Snapshot s;
    s.n = alg.vertex_count();
    s.edges = edges;
    s.colors = alg.colors();
    return s;
}

Snapshot snapshot_of(const MatchingAlgorithm& alg, const std::vector<EdgeKey>& edges) {
    Snapshot s;
    s.n = alg.vertex_count();
    s.edges = edges;
    std::sort(s.edges.begin(), s.edges.end());
    s.matching = alg.matching();
    if (alg.rank_based()) {
        const auto ranked = alg.edge_ranks();
        if (ranked.size() != s.edges.size()) {
            throw InvariantViolation("algorithm ranks a different edge set");
        }
        for (std::size_t i = 0; i < ranked.size(); ++i) {
            if (ranked[i].first != s.edges[i]) {
                throw InvariantViolation("algorithm ranks a different edge set");
            }
            s.ranks.push_back(ranked[i].second);
        }
    }
    return s;
}

// --------------------------------------------------------------- ShadowGraph

void ShadowGraph::apply(const UpdateOp& op) {
    const bool ok = op.kind == UpdateKind::Insert ? adj_.add_edge(op.edge) : adj_.remove_edge(op.edge);
    if (!ok) {
        throw InvalidInput("update " + to_string(op.edge) + " does not fit the current graph");
    }
}

std::vector<EdgeKey> ShadowGraph::edges() const {
    std::vector<EdgeKey> out;
    for (VertexId v = 0; v < adj_.vertex_count(); ++v) {
        for (VertexId w : adj_.neighbors(v)) {
            if (v < w) {
                out.push_back({v, w});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ------------------------------------------------------------- ColoringWatch

ColoringWatch::ColoringWatch(std::size_t n, std::size_t delta, const std::vector<Color>& initial)
    : delta_(delta), graph_(n), last_(initial) {}

void ColoringWatch::record(const UpdateOp& op) {
    graph_.apply(op);
    if (op.kind == UpdateKind::Insert) {
        inserted_.push_back(op.edge);
    }
}

std::string ColoringWatch::check(const std::vector<Color>& colors) {
    std::string problem;
    for (const EdgeKey& e : inserted_) {
        if (graph_.contains(e) && colors[e.u] == colors[e.v]) {
            problem = "monochromatic edge " + to_string(e);
            break;
        }
    }
    inserted_.clear();
    for (VertexId v = 0; v < colors.size(); ++v) {
        if (colors[v] == last_[v]) {
            continue;
        }
        last_[v] = colors[v];
        if (!problem.empty()) {
            continue;
        }
        if (colors[v] > delta_) {
            problem = "color of vertex " + std::to_string(v) + " outside palette";
            continue;
        }
        for (VertexId w : graph_.adjacency().neighbors(v)) {
            if (colors[w] == colors[v]) {
                problem = "monochromatic edge " + to_string(normalize_edge(v, w));
                break;
            }
        }
    }
    return problem;
}

std::string ColoringWatch::full_check(const std::vector<Color>& colors) const {
    Snapshot s;
    s.n = colors.size();
    s.edges = graph_.edges();
    s.colors = colors;
    return is_proper_coloring(s, delta_) ? std::string{} : "coloring is not proper";
}

// ------------------------------------------------------------- MatchingWatch

MatchingWatch::MatchingWatch(std::size_t n) : graph_(n), last_(n, kNoVertex) {}

std::string MatchingWatch::check_vertex(VertexId x, const std::vector<VertexId>& partners) const {
    const VertexId p = partners[x];
    if (p != kNoVertex) {
        if (p >= partners.size() || partners[p] != x) {
            return "partner map not symmetric at vertex " + std::to_string(x);
        }
        if (!graph_.contains(normalize_edge(x, p))) {
            return "matching edge " + to_string(normalize_edge(x, p)) + " is not in the graph";
        }
        return {};
    }
    for (VertexId w : graph_.adjacency().neighbors(x)) {
        if (partners[w] == kNoVertex) {
            return "edge " + to_string(normalize_edge(x, w)) + " has both endpoints free";
        }
    }
    return {};
}

void MatchingWatch::record(const UpdateOp& op) {
    graph_.apply(op);
    touched_.push_back(op.edge.u);
    touched_.push_back(op.edge.v);
}

std::string MatchingWatch::check(const std::vector<VertexId>& partners) {
    for (VertexId v = 0; v < partners.size(); ++v) {
        if (partners[v] != last_[v]) {
            touched_.push_back(v);
            last_[v] = partners[v];
        }
    }
    std::string problem;
    for (VertexId x : touched_) {
        problem = check_vertex(x, partners);
        if (!problem.empty()) {
            break;
        }
    }
    touched_.clear();
    return problem;
}

std::string MatchingWatch::full_check(const std::vector<VertexId>& partners) const {
    for (VertexId v = 0; v < partners.size(); ++v) {
        if (partners[v] != kNoVertex && (partners[v] >= partners.size() || partners[partners[v]] != v)) {
            return "partner map not symmetric at vertex " + std::to_string(v);
        }
    }
    Snapshot s;
    s.n = partners.size();
    s.edges = graph_.edges();
    s.matching.emplace();
    for (VertexId v = 0; v < partners.size(); ++v) {
        if (partners[v] != kNoVertex && v < partners[v]) {
            s.matching->push_back({v, partners[v]});
        }
    }
    try {
        return is_maximal_matching(s) ? std::string{} : "matching is not maximal";
    } catch (const InvalidInput& e) {
        return e.what();
    }
}

} // namespace dyngraph
