// Copyright 2026 The Mutascope Authors
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

#ifndef MUTASCOPE_METHOD_RECORD_H_
#define MUTASCOPE_METHOD_RECORD_H_

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mutascope/source_token.h"

namespace mutascope {

struct LineRange {
  int first = 1;
  int last = 1;
  bool Contains(int line) const { return first <= line && line <= last; }
  friend bool operator==(const LineRange&, const LineRange&) = default;
};

// A function or method definition found in a source file.
//
// `span` and `line_range` cover the whole definition including decorators;
// `body_tokens` holds only what follows the signature's colon.
struct MethodRecord {
  std::string id;  // path::Container::name
  std::string file;
  std::string name;
  std::vector<std::string> containers;  // enclosing classes/functions, outermost first
  ByteSpan span;
  LineRange line_range;
  TokenList body_tokens;
  std::set<std::string> markers;
  bool is_test = false;
  bool is_skipped = false;
  bool in_class = false;   // immediately enclosed by a class
  bool is_nested = false;  // defined inside another function

  // Innermost enclosing class name, or empty.
  std::string ClassName() const;
};

// Builds `path::A::B::name`.
std::string MakeMethodId(std::string_view path,
                         const std::vector<std::string>& containers,
                         std::string_view name);

// Marker vocabularies used by ClassifyTest. Matching is done on the last
// dotted component of a marker ("unittest.skip" matches "skip").
struct TestMarkers {
  std::set<std::string> test = {"Test", "test"};
  std::set<std::string> skip = {"skip",   "skipIf",  "skipUnless",
                                "skipif", "Ignore",  "Disabled"};
  std::set<std::string> expected_exception = {"raises", "expected_exception",
                                              "expectedException"};
};

// Last dotted component of a marker string.
std::string_view MarkerLeaf(std::string_view marker);

bool HasMarker(const MethodRecord& m, const std::set<std::string>& leaves);

// Sets `is_test` / `is_skipped` on `m` and returns `is_test`. A method is a
// test when it carries a test marker or its simple name starts with "test"
// (case-insensitive).
bool ClassifyTest(MethodRecord& m, const TestMarkers& markers = {});

}  // namespace mutascope

#endif  // MUTASCOPE_METHOD_RECORD_H_
