#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "agwb/cayley_table.hpp"

namespace agwb {

  // Text format: the order n on the first line, then n lines of n
  // space-separated entries, row a holding a*0 ... a*(n-1). Lines whose first
  // non-blank character is '#' are comments.
  //
  // Throws ParseError with 1-based line and column on malformed input.
  CayleyTable parse_table(std::string_view text);

  // Parses a stream of consecutive tables (as written by `agwb enumerate
  // --emit`). Blank lines between records are skipped.
  std::vector<CayleyTable> parse_tables(std::string_view text);

  // Writes the table followed by a newline. Each line of `comment`, if any, is
  // emitted first prefixed by "# ".
  std::string serialize_table(CayleyTable const& t,
                              std::string_view   comment = {});

  CayleyTable read_table_file(std::string const& path);

}  // namespace agwb
