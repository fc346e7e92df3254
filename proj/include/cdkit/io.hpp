#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cdkit/group.hpp"

namespace cdkit {

namespace detail {

// Lines of a group file with comments stripped, as (line_number, content).
inline std::vector<std::pair<int, std::string>> meaningful_lines(std::istream& in) {
  std::vector<std::pair<int, std::string>> out;
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    out.emplace_back(no, line.substr(first, last - first + 1));
  }
  return out;
}

inline std::vector<int> parse_int_row(const std::string& text, int line_no) {
  std::istringstream iss(text);
  std::vector<int> row;
  std::string tok;
  while (iss >> tok) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      row.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("invalid integer '" + tok + "'", line_no);
    }
  }
  return row;
}

}  // namespace detail

// Reads a group file: header "perm <degree>" followed by one generator per
// line as space-separated 0-based images, or "cayley <n>" followed by n rows
// of n indices with the identity at index 0. '#' comments and blank lines
// are ignored.
inline Group load_group_stream(std::istream& in, const std::string& name,
                               int cap = kDefaultElementCap) {
  auto lines = detail::meaningful_lines(in);
  if (lines.empty()) throw ParseError("empty group file", 0);

  std::istringstream header(lines[0].second);
  std::string kind;
  long long param = -1;
  header >> kind >> param;
  if ((kind != "perm" && kind != "cayley") || param < 1)
    throw ParseError("expected header 'perm <degree>' or 'cayley <n>'", lines[0].first);

  if (kind == "perm") {
    int degree = static_cast<int>(param);
    std::vector<Permutation> gens;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      auto row = detail::parse_int_row(lines[i].second, lines[i].first);
      if (static_cast<int>(row.size()) != degree)
        throw ParseError("generator has " + std::to_string(row.size()) +
                             " images, expected " + std::to_string(degree),
                         lines[i].first);
      try {
        gens.emplace_back(std::move(row));
      } catch (const InvalidParameters& e) {
        throw ParseError(e.what(), lines[i].first);
      }
    }
    return group_from_generators(gens, cap, name, "file:" + name);
  }

  int n = static_cast<int>(param);
  if (static_cast<int>(lines.size()) - 1 != n)
    throw ParseError("expected " + std::to_string(n) + " table rows, found " +
                         std::to_string(lines.size() - 1),
                     lines[0].first);
  std::vector<std::vector<int>> table;
  for (int r = 0; r < n; ++r) {
    auto row = detail::parse_int_row(lines[r + 1].second, lines[r + 1].first);
    if (static_cast<int>(row.size()) != n)
      throw ParseError("table row has " + std::to_string(row.size()) +
                           " entries, expected " + std::to_string(n),
                       lines[r + 1].first);
    table.push_back(std::move(row));
  }
  return group_from_cayley_table(table, cap, name, "file:" + name);
}

inline Group load_group_file(const std::string& path, int cap = kDefaultElementCap) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group file: " + path, 0);
  std::string name = std::filesystem::path(path).filename().string();
  return load_group_stream(in, name, cap);
}

// Atomically replaces path with the given content (write temp, then rename).
inline void atomic_write(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write file: " + tmp);
    out << content;
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error("cannot rename " + tmp + " to " + path + ": " + ec.message());
}

inline void save_report(const std::string& path, const std::string& content) {
  atomic_write(path, content);
}

// Writes the group's Cayley table in the group-file format.
inline void save_group_file(const std::string& path, const Group& g) {
  std::ostringstream out;
  out << "# " << g.label() << " (" << g.construction() << ")\n";
  out << "cayley " << g.order() << "\n";
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) out << (b ? " " : "") << g.mult(a, b);
    out << "\n";
  }
  atomic_write(path, out.str());
}

}  // namespace cdkit
