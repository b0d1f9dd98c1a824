#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "simtap/types.hpp"

namespace simtap {

struct ParseOptions {
    // Accept (and ignore) a leading transaction-id column.
    bool with_tid = false;
};

// Parses the temporal transaction format: one transaction per line,
//
//   slot_label<TAB>item[,item...]
//
// (with an extra leading tid<TAB> field when with_tid is set). Lines that are
// blank or start with '#' are skipped. Slots appear in order of first
// appearance; item ids in order of first appearance. Duplicate items within a
// line are deduplicated (transactions are sets). LF and CRLF both accepted.
//
// Throws ParseError (with line number) on malformed lines, EmptyDatabaseError
// when no data line is present.
TemporalDatabase parse_database(std::istream& in, const ParseOptions& opts = {});
TemporalDatabase parse_database(std::string_view text, const ParseOptions& opts = {});

// Convenience: open + parse; throws Error when the file cannot be opened.
TemporalDatabase load_database_file(const std::string& path, const ParseOptions& opts = {});

// Inverse of parse_database: emits the same format (items in id order, no
// tid column). parse_database(serialize_database(db)) == db.
std::string serialize_database(const TemporalDatabase& db);

// Parses a comma-separated reference sequence of exactly slot_count values,
// each in [0,1]. Throws ArityError / RangeError / ParseError.
ReferenceSequence parse_reference(std::string_view text, std::size_t slot_count);

}  // namespace simtap
