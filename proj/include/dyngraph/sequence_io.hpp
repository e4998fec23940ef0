#pragma once

#include <iosfwd>
#include <string>

#include "dyngraph/graph.hpp"

namespace dyngraph {

/// Text format: a header `n <count>`, then one `i <u> <v>` or `d <u> <v>`
/// record per line. Lines starting with `#` are comments, except that
/// `# delta <D>` and `# setup <k>` carry the sequence's degree bound and
/// setup prefix length. Reading validates the sequence and fills in
/// delta_bound when no `# delta` line is present.
void write_sequence(std::ostream& out, const UpdateSequence& seq);
UpdateSequence read_sequence(std::istream& in);

void save_sequence(const std::string& path, const UpdateSequence& seq);
UpdateSequence load_sequence(const std::string& path);

} // namespace dyngraph
