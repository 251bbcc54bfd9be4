// Copyright 2026 The flagscheme Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "flagscheme/scheme_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "flagscheme/errors.hpp"

namespace flagscheme {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank, non-comment line; false at end of input.
  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++number_;
      const auto pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || line[pos] == '#') continue;
      return true;
    }
    return false;
  }
  std::size_t number() const { return number_; }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

std::vector<long long> integers(const std::string& line, std::size_t number,
                                const std::string& field) {
  std::istringstream ss(line);
  std::vector<long long> out;
  std::string tok;
  while (ss >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size())
      throw ParseError(number, field, "'" + tok + "' is not an integer");
    out.push_back(v);
  }
  return out;
}

}  // namespace

SchemeFile parse_scheme(std::istream& in) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw ParseError(reader.number(), "header", "empty input");
  const auto header = integers(line, reader.number(), "header");
  if (header.size() != 2)
    throw ParseError(reader.number(), "header", "expected 'n d'");
  const long long n = header[0], d = header[1];
  if (n < 1) throw ParseError(reader.number(), "header", "n must be positive");
  if (d < 0 || d > 31)
    throw ParseError(reader.number(), "header", "d must lie in 0..31");

  SchemeFile out;
  out.relation = RelationMatrix(static_cast<std::size_t>(n), static_cast<int>(d));
  if (!reader.next(line))
    throw ParseError(reader.number(), "rows", "missing matrix rows");
  {
    std::istringstream ss(line);
    std::string word;
    ss >> word;
    if (word == "flags") {
      std::vector<Flag> flags;
      for (long long i = 0; i < n; ++i) {
        if (!reader.next(line))
          throw ParseError(reader.number(), "flags",
                           "expected " + std::to_string(n) + " flags");
        const auto v = integers(line, reader.number(), "flags");
        if (v.size() != 2 || v[0] < 0 || v[1] < 0)
          throw ParseError(reader.number(), "flags",
                           "expected 'point line' with non-negative indices");
        flags.push_back({static_cast<int>(v[0]), static_cast<int>(v[1])});
      }
      out.flags = std::move(flags);
      if (!reader.next(line))
        throw ParseError(reader.number(), "rows", "missing matrix rows");
    }
  }
  for (long long x = 0; x < n; ++x) {
    if (x > 0 && !reader.next(line))
      throw ParseError(reader.number(), "rows",
                       "expected " + std::to_string(n) + " rows");
    const auto v = integers(line, reader.number(), "rows");
    if (static_cast<long long>(v.size()) != n)
      throw ParseError(reader.number(), "rows",
                       "row has " + std::to_string(v.size()) +
                           " entries, expected " + std::to_string(n));
    for (long long y = 0; y < n; ++y) {
      if (v[y] < 0 || v[y] > d)
        throw ParseError(reader.number(), "rows",
                         "relation index " + std::to_string(v[y]) +
                             " outside 0.." + std::to_string(d));
      out.relation.set(x, y, static_cast<int>(v[y]));
    }
  }
  if (reader.next(line))
    throw ParseError(reader.number(), "rows", "trailing content");
  return out;
}

SchemeFile parse_scheme(const std::string& text) {
  std::istringstream in(text);
  return parse_scheme(in);
}

void write_scheme(std::ostream& out, const RelationMatrix& relation,
                  const std::vector<Flag>* flags) {
  const std::size_t n = relation.size();
  out << n << ' ' << relation.classes() << '\n';
  if (flags) {
    if (flags->size() != n)
      throw std::invalid_argument("flag list length differs from matrix size");
    out << "flags\n";
    for (const auto& f : *flags) out << f.point << ' ' << f.line << '\n';
  }
  std::string row;
  for (std::size_t x = 0; x < n; ++x) {
    row.clear();
    for (std::size_t y = 0; y < n; ++y) {
      if (y) row += ' ';
      row += std::to_string(relation(x, y));
    }
    out << row << '\n';
  }
}

std::string dump_scheme(const RelationMatrix& relation,
                        const std::vector<Flag>* flags) {
  std::ostringstream out;
  write_scheme(out, relation, flags);
  return out.str();
}

SchemeFile load_scheme(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "file", "cannot open " + path.string());
  return parse_scheme(in);
}

void save_scheme(const std::filesystem::path& path,
                 const RelationMatrix& relation,
                 const std::vector<Flag>* flags) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  write_scheme(out, relation, flags);
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace flagscheme
