// Copyright 2026 The FreezeML C++ Authors
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

#ifndef FREEZEML_CORPUS_HPP
#define FREEZEML_CORPUS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "freezeml/env.hpp"
#include "freezeml/type.hpp"

namespace freezeml {

struct CorpusRow {
  std::string label;
  std::string term;
  // Empty when the row is expected to be rejected.
  std::optional<std::string> expected;
  // Local signatures from the row's where-clause.
  std::vector<std::pair<std::string, std::string>> where;
  int line = 0;
};

// Parses the corpus format. Blank lines and `--` comments are skipped.
// Throws Error(Syntax) on a malformed row.
std::vector<CorpusRow> parse_corpus(std::string_view text);

// The corpus shipped with the library.
std::string_view bundled_corpus();

// Γ for a row: base extended with the where-clause signatures.
TypeEnv row_env(const CorpusRow& row, const TypeEnv& base);

struct RowOutcome {
  bool pass = false;
  // The inferred type (normalized display) or the rejection message.
  std::string got;
};

RowOutcome check_row(const CorpusRow& row, const TypeEnv& base);

// Equality up to renaming of bound variables and a consistent renaming of
// free variables (matched in first-occurrence order).
bool same_up_to_renaming(const Type& a, const Type& b);

}  // namespace freezeml

#endif  // FREEZEML_CORPUS_HPP
