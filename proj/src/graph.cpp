#include "dyngraph/graph.hpp"

#include <algorithm>
#include <unordered_set>

#include "dyngraph/error.hpp"

namespace dyngraph {

EdgeKey normalize_edge(VertexId a, VertexId b) {
    if (a == b) {
        throw InvalidInput("self-loop at vertex " + std::to_string(a));
    }
    return a < b ? EdgeKey{a, b} : EdgeKey{b, a};
}

std::string to_string(const EdgeKey& e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

ValidationResult validate_sequence(const UpdateSequence& seq) {
    std::unordered_set<EdgeKey, EdgeKeyHash> present;
    std::vector<std::size_t> degree(seq.n, 0);
    ValidationResult result;
    if (seq.setup_ops > seq.ops.size()) {
        throw InvalidInput("setup prefix longer than the sequence");
    }
    for (std::size_t i = 0; i < seq.ops.size(); ++i) {
        const auto& op = seq.ops[i];
        const auto where = [&] { return "op " + std::to_string(i) + " " + to_string(op.edge) + ": "; };
        if (op.edge.u >= op.edge.v) {
            throw InvalidInput(where() + "edge not canonical");
        }
        if (op.edge.v >= seq.n) {
            throw InvalidInput(where() + "vertex out of range");
        }
        if (op.kind == UpdateKind::Insert) {
            if (!present.insert(op.edge).second) {
                throw InvalidInput(where() + "duplicate insert");
            }
            const std::size_t d = std::max(++degree[op.edge.u], ++degree[op.edge.v]);
            result.max_degree = std::max(result.max_degree, d);
        } else {
            if (present.erase(op.edge) == 0) {
                throw InvalidInput(where() + "delete of absent edge");
            }
            --degree[op.edge.u];
            --degree[op.edge.v];
        }
    }
    if (seq.delta_bound != 0 && result.max_degree > seq.delta_bound) {
        throw InvalidInput("max degree " + std::to_string(result.max_degree) + " exceeds bound " +
                           std::to_string(seq.delta_bound));
    }
    result.final_edge_count = present.size();
    return result;
}

void compute_delta_bound(UpdateSequence& seq) {
    seq.delta_bound = 0;
    seq.delta_bound = validate_sequence(seq).max_degree;
}

} // namespace dyngraph
