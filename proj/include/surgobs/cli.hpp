#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "surgobs/cfk.hpp"

namespace surgobs::cli {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { table, json };

// Parses "A..B" or "A"; throws UsageError unless 1 <= A <= B.
std::pair<long, long> parse_k_range(std::string_view text);

// Complex expressions:
//   expr   := factor ('*' factor)*
//   factor := 'T2' <odd n> | 'unknot' | 'mirror' '(' expr ')'
//           | 'shift' '(' expr ',' <p/q> ')' | '(' expr ')' | '@' <path>
// `@path` loads a complex file, relative paths resolved against `base`.
cfk::BifilteredComplex parse_complex_expr(std::string_view text,
                                          const std::filesystem::path& base = {});

// Runs the command line (args excludes the program name). Exit codes: 0 on
// success, 1 on input errors, 2 when an invariant is indeterminate.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace surgobs::cli
