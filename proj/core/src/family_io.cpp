#include "sperner/family_io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "sperner/errors.hpp"

namespace sperner {

namespace {

constexpr std::string_view kHeader = "sperner-v1";

std::string_view trim_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

std::size_t parse_uint(std::string_view text, std::size_t line_no) {
  std::size_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(text) + "'");
  }
  return value;
}

SetWord from_indices(const std::vector<std::size_t>& indices, std::size_t n, std::size_t line_no) {
  SetWord s;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= n) {
      throw ParseError(line_no, "element " + std::to_string(indices[i]) + " out of range for n=" + std::to_string(n));
    }
    if (i > 0 && indices[i] <= indices[i - 1]) throw ParseError(line_no, "element list must be strictly ascending");
    s = s.with(static_cast<unsigned>(indices[i]));
  }
  return s;
}

std::size_t parse_n(std::size_t n, std::size_t line_no) {
  if (n > kCapacity) throw ParseError(line_no, "n=" + std::to_string(n) + " exceeds capacity");
  return n;
}

Family build(std::size_t n, std::vector<SetWord> sets, const std::vector<std::size_t>& lines) {
  Family f(GroundSet(n), sets);
  if (f.size() != sets.size()) {
    // Report the first repeated set.
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (sets[i] == sets[j]) throw ParseError(lines[i], "duplicate set {" + to_string(sets[i]) + "}");
      }
    }
  }
  return f;
}

}  // namespace

SetWord parse_set_line(std::string_view line, std::size_t n, std::size_t line_no) {
  if (line == "-") return SetWord{};
  std::vector<std::size_t> indices;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    indices.push_back(parse_uint(line.substr(start, comma - start), line_no));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return from_indices(indices, n, line_no);
}

ParsedFamily parse_family_text(std::string_view text) {
  ParsedFamily out;
  std::size_t line_no = 0;
  int stage = 0;  // 0: expect header, 1: expect n=, 2: sets
  std::size_t n = 0;
  std::vector<SetWord> sets;
  std::vector<std::size_t> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim_cr(text.substr(pos, end - pos));
    const bool last = end == text.size();
    pos = end + 1;
    ++line_no;
    if (line.empty()) {
      if (last) break;
      throw ParseError(line_no, "empty line");
    }
    if (line.front() == '#') {
      out.comments.emplace_back(line);
      continue;
    }
    if (stage == 0) {
      if (line != kHeader) throw ParseError(line_no, "expected header 'sperner-v1'");
      stage = 1;
    } else if (stage == 1) {
      if (line.substr(0, 2) != "n=") throw ParseError(line_no, "expected 'n=<int>'");
      n = parse_n(parse_uint(line.substr(2), line_no), line_no);
      stage = 2;
    } else {
      sets.push_back(parse_set_line(line, n, line_no));
      lines.push_back(line_no);
    }
    if (last) break;
  }
  if (stage == 0) throw ParseError(line_no, "missing header");
  if (stage == 1) throw ParseError(line_no, "missing 'n=' line");
  out.family = build(n, std::move(sets), lines);
  return out;
}

ParsedFamily parse_family_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(1, std::string("invalid JSON: ") + e.what());
  }
  try {
    if (doc.at("version").get<int>() != 1) throw ParseError(1, "unsupported version");
    const std::size_t n = parse_n(doc.at("n").get<std::size_t>(), 1);
    std::vector<SetWord> sets;
    std::vector<std::size_t> lines;
    for (const auto& entry : doc.at("sets")) {
      sets.push_back(from_indices(entry.get<std::vector<std::size_t>>(), n, sets.size() + 1));
      lines.push_back(sets.size());
    }
    return {build(n, std::move(sets), lines), {}};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, std::string("malformed family JSON: ") + e.what());
  }
}

ParsedFamily parse_family(std::string_view text) {
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_family_json(text);
  return parse_family_text(text);
}

void write_family_text(std::ostream& out, const Family& f, const std::vector<std::string>& comments) {
  out << kHeader << '\n' << "n=" << f.n() << '\n';
  for (const auto& c : comments) out << c << '\n';
  for (SetWord s : f) out << to_string(s) << '\n';
}

std::string format_family_text(const Family& f, const std::vector<std::string>& comments) {
  std::ostringstream out;
  write_family_text(out, f, comments);
  return out.str();
}

std::string format_family_json(const Family& f) {
  nlohmann::json sets = nlohmann::json::array();
  for (SetWord s : f) sets.push_back(s.elements());
  nlohmann::json doc = {{"version", 1}, {"n", f.n()}, {"sets", std::move(sets)}};
  return doc.dump() + "\n";
}

ParsedFamily read_family_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_family(buf.str());
}

void write_family_file(const std::string& path, const Family& f, bool json,
                       const std::vector<std::string>& comments) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  if (json) {
    out << format_family_json(f);
  } else {
    write_family_text(out, f, comments);
  }
}

}  // namespace sperner
