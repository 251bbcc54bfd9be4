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


#ifndef FLAGSCHEME_SCHEME_IO_HPP_
#define FLAGSCHEME_SCHEME_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "flagscheme/flag_scheme.hpp"
#include "flagscheme/scheme.hpp"

namespace flagscheme {

// Text matrix format:
//
//   n d
//   flags          optional; followed by n lines "point line"
//   r r r ...      n rows of n relation indices
//
// Blank lines and lines starting with '#' are skipped.
struct SchemeFile {
  RelationMatrix relation;
  std::optional<std::vector<Flag>> flags;
};

SchemeFile parse_scheme(std::istream& in);
SchemeFile parse_scheme(const std::string& text);
void write_scheme(std::ostream& out, const RelationMatrix& relation,
                  const std::vector<Flag>* flags = nullptr);
std::string dump_scheme(const RelationMatrix& relation,
                        const std::vector<Flag>* flags = nullptr);

SchemeFile load_scheme(const std::filesystem::path& path);
void save_scheme(const std::filesystem::path& path,
                 const RelationMatrix& relation,
                 const std::vector<Flag>* flags = nullptr);

}  // namespace flagscheme

#endif  // FLAGSCHEME_SCHEME_IO_HPP_
