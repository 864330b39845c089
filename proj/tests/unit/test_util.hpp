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

#ifndef FREEZEML_TESTS_TEST_UTIL_HPP
#define FREEZEML_TESTS_TEST_UTIL_HPP

#include <gtest/gtest.h>

#include <string>
#include <string_view>

#include "freezeml/diagnostics.hpp"
#include "freezeml/parser.hpp"
#include "freezeml/printer.hpp"
#include "freezeml/type.hpp"

namespace fmltest {

inline freezeml::Type T(std::string_view s) { return freezeml::parse_type(s); }
inline freezeml::Term M(std::string_view s) { return freezeml::parse_term(s); }
inline std::string show(const freezeml::Type& t) {
  return freezeml::render_type(t, true);
}

}  // namespace fmltest

// Expects stmt to throw freezeml::Error carrying the given code.
#define EXPECT_FML_ERROR(stmt, expected_code)                          \
  do {                                                                 \
    try {                                                              \
      stmt;                                                            \
      ADD_FAILURE() << "no error thrown by " #stmt;                    \
    } catch (const freezeml::Error& e_) {                              \
      EXPECT_EQ(freezeml::to_string(e_.code()),                        \
                freezeml::to_string(freezeml::ErrorCode::expected_code)) \
          << e_.what();                                                \
    }                                                                  \
  } while (0)

#endif  // FREEZEML_TESTS_TEST_UTIL_HPP
