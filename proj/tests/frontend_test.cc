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

#include "mutascope/frontend.h"

#include <string>

#include "gtest/gtest.h"
#include "mutascope/tokenizer.h"
#include "mutascope/workspace.h"
#include "support/fixtures.h"

namespace mutascope {
namespace {

std::vector<MethodRecord> Extract(const std::string& src, const std::string& path = "m.py") {
  return ExtractMethods(Tokenize(src, path), path);
}

TEST(Frontend, ExtractsTopLevelFunctions) {
  const std::string src = "def a(x):\n    return x\n\n\ndef b():\n    pass\n";
  const auto methods = Extract(src);
  ASSERT_EQ(methods.size(), 2u);
  EXPECT_EQ(methods[0].id, "m.py::a");
  EXPECT_EQ(methods[0].line_range, (LineRange{1, 2}));
  EXPECT_EQ(methods[1].id, "m.py::b");
  EXPECT_EQ(methods[1].line_range, (LineRange{5, 6}));
  EXPECT_EQ(src.substr(methods[1].span.begin, methods[1].span.size()).rfind("def b", 0), 0u);
}

TEST(Frontend, SumTriangleProductionFile) {
  const auto path = testing::FixtureDir() / "sum_triangle" / "sut.py";
  const auto methods = Extract(ReadFileBytes(path), "sut.py");
  ASSERT_EQ(methods.size(), 2u);
  EXPECT_EQ(methods[0].id, "sut.py::sum");
  EXPECT_EQ(methods[1].id, "sut.py::triangle");
  EXPECT_EQ(methods[1].line_range, (LineRange{8, 11}));
}

TEST(Frontend, QualifiesMethodsByClass) {
  const auto path = testing::FixtureDir() / "sum_triangle" / "test_sut.py";
  auto methods = Extract(ReadFileBytes(path), "test_sut.py");
  ASSERT_EQ(methods.size(), 9u);
  const auto ids = testing::SumTriangleTestIds();
  for (std::size_t i = 0; i < methods.size(); ++i) {
    EXPECT_EQ(methods[i].id, ids[i]);
    EXPECT_TRUE(methods[i].in_class);
    EXPECT_EQ(methods[i].ClassName(), "TestSut");
    EXPECT_TRUE(ClassifyTest(methods[i]));
  }
}

TEST(Frontend, EmptyFileHasNoMethods) { EXPECT_TRUE(Extract("").empty()); }

TEST(Frontend, DecoratorsBecomeMarkers) {
  const std::string src =
      "class T:\n"
      "    @pytest.mark.skip(reason='x')\n"
      "    @staticmethod\n"
      "    def test_a():\n"
      "        pass\n";
  auto methods = Extract(src);
  ASSERT_EQ(methods.size(), 1u);
  auto& m = methods[0];
  EXPECT_TRUE(m.markers.count("pytest.mark.skip"));
  EXPECT_TRUE(m.markers.count("staticmethod"));
  EXPECT_EQ(m.line_range, (LineRange{2, 5}));
  EXPECT_TRUE(ClassifyTest(m));
  EXPECT_TRUE(m.is_skipped);
}

TEST(Frontend, NestedFunctionsAreFlagged) {
  const std::string src =
      "def outer():\n"
      "    def test_inner():\n"
      "        assert True\n"
      "    return test_inner\n";
  const auto methods = Extract(src);
  ASSERT_EQ(methods.size(), 2u);
  EXPECT_EQ(methods[1].id, "m.py::outer::test_inner");
  EXPECT_TRUE(methods[1].is_nested);
  EXPECT_FALSE(methods[1].in_class);
  EXPECT_FALSE(methods[0].is_nested);
}

TEST(Frontend, BodyStartsAfterSignature) {
  const auto methods = Extract("def f(a=(1, 2)):\n    return a\n");
  ASSERT_EQ(methods.size(), 1u);
  std::string body;
  for (const auto& t : methods[0].body_tokens) {
    if (!t.IsTrivia()) body += t.text + " ";
  }
  EXPECT_EQ(body, "return a ");
}

TEST(Frontend, SingleLineBody) {
  const auto methods = Extract("def f(): return 1\nx = 2\n");
  ASSERT_EQ(methods.size(), 1u);
  EXPECT_EQ(methods[0].line_range, (LineRange{1, 1}));
}

TEST(ClassifyTest, NamesAndMarkers) {
  MethodRecord m;
  m.name = "test_x";
  EXPECT_TRUE(ClassifyTest(m));
  m.name = "helper";
  EXPECT_FALSE(ClassifyTest(m));
  m.markers = {"org.junit.Test"};
  EXPECT_TRUE(ClassifyTest(m));
  EXPECT_FALSE(m.is_skipped);
  m.markers.insert("unittest.skipIf");
  EXPECT_TRUE(ClassifyTest(m));
  EXPECT_TRUE(m.is_skipped);
}

TEST(MethodId, Format) {
  EXPECT_EQ(MakeMethodId("a/b.py", {"C", "D"}, "f"), "a/b.py::C::D::f");
  EXPECT_EQ(MakeMethodId("a.py", {}, "f"), "a.py::f");
  EXPECT_EQ(MarkerLeaf("pytest.mark.skip"), "skip");
  EXPECT_EQ(MarkerLeaf("Test"), "Test");
}

}  // namespace
}  // namespace mutascope
