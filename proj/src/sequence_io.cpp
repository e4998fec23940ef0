#include "dyngraph/sequence_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "dyngraph/error.hpp"

namespace dyngraph {

void write_sequence(std::ostream& out, const UpdateSequence& seq) {
    out << "n " << seq.n << '\n';
    if (seq.delta_bound != 0) {
        out << "# delta " << seq.delta_bound << '\n';
    }
    if (seq.setup_ops != 0) {
        out << "# setup " << seq.setup_ops << '\n';
    }
    for (const UpdateOp& op : seq.ops) {
        out << (op.kind == UpdateKind::Insert ? "i " : "d ") << op.edge.u << ' ' << op.edge.v << '\n';
    }
}

UpdateSequence read_sequence(std::istream& in) {
    UpdateSequence seq;
    bool have_n = false;
    bool have_delta = false;
    std::string line;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& what) {
        throw InvalidInput("sequence line " + std::to_string(line_no) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        std::istringstream fields(line);
        std::string tag;
        if (!(fields >> tag)) {
            continue;
        }
        if (tag[0] == '#') {
            std::string key;
            std::size_t value = 0;
            if (tag == "#" && fields >> key >> value) {
                if (key == "delta") {
                    seq.delta_bound = value;
                    have_delta = true;
                } else if (key == "setup") {
                    seq.setup_ops = value;
                }
            }
            continue;
        }
        if (tag == "n") {
            if (have_n || !(fields >> seq.n)) {
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
        std::string rest;
        if ((tag != "i" && tag != "d") || !(fields >> a >> b) || (fields >> rest)) {
            fail("expected `i <u> <v>` or `d <u> <v>`");
        }
        if (a >= seq.n || b >= seq.n || a == b) {
            fail("invalid edge " + std::to_string(a) + " " + std::to_string(b));
        }
        const EdgeKey e = normalize_edge(static_cast<VertexId>(a), static_cast<VertexId>(b));
        seq.ops.push_back({tag == "i" ? UpdateKind::Insert : UpdateKind::Delete, e});
    }
    if (!have_n) {
        throw InvalidInput("sequence has no `n` header");
    }
    if (have_delta) {
        validate_sequence(seq);
    } else {
        compute_delta_bound(seq);
    }
    return seq;
}

void save_sequence(const std::string& path, const UpdateSequence& seq) {
    std::ofstream out(path);
    if (!out) {
        throw InvalidInput("cannot write " + path);
    }
    write_sequence(out, seq);
}

UpdateSequence load_sequence(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open " + path);
    }
    return read_sequence(in);
}

} // namespace dyngraph
