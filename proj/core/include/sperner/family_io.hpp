#pragma once

// Family file formats.
//
// Text (sperner-v1):
//   sperner-v1
//   n=<int>
//   <one line per set: ascending comma-separated indices, or "-" for the empty set>
// Lines starting with '#' are metadata; the parser keeps them verbatim and
// otherwise ignores them. The JSON mirror is {"version":1,"n":N,"sets":[[...],...]}.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sperner/family.hpp"

namespace sperner {

struct ParsedFamily {
  Family family;
  std::vector<std::string> comments;  // '#' lines, in file order, including the '#'
};

// Accepts either format; JSON is detected by a leading '{'. Throws ParseError.
ParsedFamily parse_family(std::string_view text);
ParsedFamily parse_family_text(std::string_view text);
ParsedFamily parse_family_json(std::string_view text);

// Comments are written after the n= line; each must start with '#'.
void write_family_text(std::ostream& out, const Family& f, const std::vector<std::string>& comments = {});
std::string format_family_text(const Family& f, const std::vector<std::string>& comments = {});
std::string format_family_json(const Family& f);

// Parses one element-list line ("-" or "0,3,5").
SetWord parse_set_line(std::string_view line, std::size_t n, std::size_t line_no);

ParsedFamily read_family_file(const std::string& path);
void write_family_file(const std::string& path, const Family& f, bool json = false,
                       const std::vector<std::string>& comments = {});

}  // namespace sperner
