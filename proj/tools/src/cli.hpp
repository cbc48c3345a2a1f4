#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "bellpoly/sequence.hpp"

namespace bellpoly::cli {

/// Runs one command. Exit status: 0 on success, 1 for domain errors from
/// the library, 2 for bad arguments or unreadable input. Errors are written
/// to `err` as {"code": ..., "message": ...}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// {"start": int, "terms": ["p/q", ...]}, canonicalized.
Sequence parse_sequence_json(std::string_view text);
Sequence parse_sequence_file(const std::string& path);
std::string sequence_to_json(const Sequence& s);

/// `ones`, `factorial` or `geometric:r`, sampled on [start, last].
Sequence named_sequence(std::string_view name, std::int64_t start, std::int64_t last);

}  // namespace bellpoly::cli
