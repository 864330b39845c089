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

#include "freezeml/prelude.hpp"

#include "freezeml/parser.hpp"
#include "freezeml/type.hpp"

namespace freezeml {

namespace {

bool is_ml_scheme(const Type& t) {
  return is_monotype(decompose(t).body);
}

TypeEnv build(bool ml_only) {
  TypeEnv env;
  for (const auto& [name, sig] : prelude_signatures()) {
    Type t = parse_type(sig);
    if (ml_only && !is_ml_scheme(t)) continue;
    env.push(name, std::move(t));
  }
  return env;
}

}  // namespace

const std::vector<std::pair<std::string, std::string>>& prelude_signatures() {
  static const std::vector<std::pair<std::string, std::string>> sigs = {
      {"head", "forall a. [a] -> a"},
      {"tail", "forall a. [a] -> [a]"},
      {"[]", "forall a. [a]"},
      {"::", "forall a. a -> [a] -> [a]"},
      {"single", "forall a. a -> [a]"},
      {"++", "forall a. [a] -> [a] -> [a]"},
      {"length", "forall a. [a] -> Int"},
      {"id", "forall a. a -> a"},
      {"ids", "[forall a. a -> a]"},
      {"inc", "Int -> Int"},
      {"choose", "forall a. a -> a -> a"},
      {"poly", "(forall a. a -> a) -> (Int, Bool)"},
      {"auto", "(forall a. a -> a) -> (forall a. a -> a)"},
      {"auto'", "forall b. (forall a. a -> a) -> (b -> b)"},
      {"map", "forall a b. (a -> b) -> [a] -> [b]"},
      {"app", "forall a b. (a -> b) -> a -> b"},
      {"revapp", "forall a b. a -> (a -> b) -> b"},
      {"runST", "forall a. (forall s. ST s a) -> a"},
      {"argST", "forall s. ST s Int"},
      {"pair", "forall a b. a -> b -> (a, b)"},
      {"pair'", "forall b a. a -> b -> (a, b)"},
      {"True", "Bool"},
      {"False", "Bool"},
      {"+", "Int -> Int -> Int"},
  };
  return sigs;
}

const TypeEnv& prelude() {
  static const TypeEnv env = build(false);
  return env;
}

const TypeEnv& ml_prelude() {
  static const TypeEnv env = build(true);
  return env;
}

}  // namespace freezeml
