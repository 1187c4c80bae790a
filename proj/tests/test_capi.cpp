/* Copyright (C) 2026 The gr2cyc Authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

#include <doctest.h>

#include <gr2/gr2.h>

#include <cstring>
#include <string>
#include <thread>
#include <vector>

namespace {

std::string take(char* s)
{
  std::string out = s ? s : "";
  gr2_string_free(s);
  return out;
}

int collect(const char* line, void* user)
{
  static_cast<std::vector<std::string>*>(user)->push_back(line);
  return 0;
}

int stop_after_one(const char* line, void* user)
{
  static_cast<std::vector<std::string>*>(user)->push_back(line);
  return 1;
}

} // namespace

TEST_CASE("version and strings")
{
  CHECK(std::string(gr2_version()) == "1.0.0");
  gr2_string_free(nullptr);
}

TEST_CASE("counts")
{
  char* out = nullptr;
  REQUIRE(gr2_count(2, 1, 24, GR2_KIND_EUCLIDEAN, &out) == GR2_OK);
  CHECK(take(out) == "341");
  REQUIRE(gr2_count(2, 1, 8, GR2_KIND_CYCLIC, &out) == GR2_OK);
  CHECK(take(out) == "135");
  REQUIRE(gr2_count(2, 4, 2, GR2_KIND_HERMITIAN, &out) == GR2_OK);
  CHECK(take(out) == "5");

  CHECK(gr2_count(4, 1, 6, GR2_KIND_EUCLIDEAN, &out) == GR2_E_DOMAIN);
  CHECK(std::strlen(gr2_last_error()) > 0);
  CHECK(gr2_count(2, 1, 6, GR2_KIND_CYCLIC, &out) == GR2_E_DOMAIN);
  CHECK(std::string(gr2_last_error()).find("not a power") != std::string::npos);
  CHECK(gr2_count(2, 1, 2, GR2_KIND_HERMITIAN, &out) == GR2_E_DOMAIN);
  CHECK(gr2_count(2, 1, 6, GR2_KIND_EUCLIDEAN, nullptr) == GR2_E_ARGUMENT);

  int unique = -1;
  REQUIRE(gr2_unique_self_dual(2, 1, 1, &unique) == GR2_OK);
  CHECK(unique == 1);
  REQUIRE(gr2_unique_self_dual(2, 1, 3, &unique) == GR2_OK);
  CHECK(unique == 0);
  CHECK(gr2_unique_self_dual(2, 1, 2, &unique) == GR2_E_DOMAIN);
}

TEST_CASE("table rows and early stop")
{
  std::vector<std::pair<unsigned, std::string>> rows;
  auto sink = [](unsigned n, const char* v, void* user) {
    static_cast<std::vector<std::pair<unsigned, std::string>>*>(user)->emplace_back(n, v);
    return n == 8 ? 1 : 0;
  };
  REQUIRE(gr2_table(2, 1, 40, sink, &rows) == GR2_OK);
  REQUIRE(rows.size() == 8);
  CHECK(rows[5].second == "3");
  CHECK(rows[7].second == "11");
  CHECK(gr2_table(2, 1, 40, nullptr, nullptr) == GR2_E_ARGUMENT);
}

TEST_CASE("code handles")
{
  gr2_code* c = nullptr;
  REQUIRE(gr2_code_parse("full(2,1,1;1,1;[T(-)])", &c) == GR2_OK);
  gr2_code* d = nullptr;
  REQUIRE(gr2_code_dual(c, GR2_KIND_EUCLIDEAN, &d) == GR2_OK);
  char* text = nullptr;
  REQUIRE(gr2_code_format(d, &text) == GR2_OK);
  CHECK(take(text) == "full(2,1,1;1,1;[T(0)])");
  REQUIRE(gr2_code_size(d, &text) == GR2_OK);
  CHECK(take(text) == "4");
  REQUIRE(gr2_code_generators(d, &text) == GR2_OK);
  CHECK(take(text) == "u+1;2*u+2");
  int sd = -1;
  REQUIRE(gr2_code_is_self_dual(c, GR2_KIND_EUCLIDEAN, &sd) == GR2_OK);
  CHECK(sd == 0);
  CHECK(gr2_code_is_self_dual(c, GR2_KIND_HERMITIAN, &sd) == GR2_E_DOMAIN);
  gr2_code_free(d);
  gr2_code_free(c);
  gr2_code_free(nullptr);

  REQUIRE(gr2_code_normalize(2, 1, 1, "2*(u-1); 2", &c) == GR2_OK);
  REQUIRE(gr2_code_format(c, &text) == GR2_OK);
  CHECK(take(text) == "tors(2,1,1;0)");
  REQUIRE(gr2_code_is_self_dual(c, GR2_KIND_EUCLIDEAN, &sd) == GR2_OK);
  CHECK(sd == 1);
  gr2_code_free(c);

  c = nullptr;
  CHECK(gr2_code_parse("full(2,1,1;0,1;[T(-)])", &c) == GR2_E_DOMAIN);
  CHECK(c == nullptr);
  CHECK(gr2_code_parse("full(2,1", &c) == GR2_E_PARSE);
  CHECK(std::string(gr2_last_error()).size() > 0);
  CHECK(gr2_code_normalize(2, 1, 1, "u+", &c) == GR2_E_PARSE);
  CHECK(gr2_code_normalize(2, 1, 1, " ; ", &c) == GR2_E_PARSE);
  CHECK(gr2_code_parse(nullptr, &c) == GR2_E_ARGUMENT);
}

TEST_CASE("enumeration")
{
  std::vector<std::string> lines;
  REQUIRE(gr2_enumerate(2, 2, 1, GR2_KIND_HERMITIAN, collect, &lines) == GR2_OK);
  CHECK(lines == std::vector<std::string>{"tors(2,2,1;0)", "full(2,2,1;1,1;[T(1)])", "full(2,2,1;1,1;[T(2)])"});
  lines.clear();
  REQUIRE(gr2_enumerate(2, 1, 2, GR2_KIND_CYCLIC, collect, &lines) == GR2_OK);
  CHECK(lines.size() == 23);
  lines.clear();
  REQUIRE(gr2_enumerate(2, 1, 3, GR2_KIND_EUCLIDEAN, stop_after_one, &lines) == GR2_OK);
  CHECK(lines.size() == 1);
  CHECK(gr2_enumerate(2, 1, 1, GR2_KIND_HERMITIAN, collect, &lines) == GR2_E_DOMAIN);
}

TEST_CASE("composite length")
{
  gr2_composite* ctx = nullptr;
  REQUIRE(gr2_composite_new(2, 1, 6, &ctx) == GR2_OK);

  std::vector<std::string> lines;
  REQUIRE(gr2_composite_cosets(ctx, collect, &lines) == GR2_OK);
  CHECK(lines == std::vector<std::string>{"0\t1\tJ0\t0", "1\t2\tJ1\t1,2"});

  lines.clear();
  REQUIRE(gr2_composite_self_dual(ctx, collect, &lines) == GR2_OK);
  CHECK(lines.size() == 3);

  char* text = nullptr;
  REQUIRE(gr2_composite_decompose(ctx, "2", &text) == GR2_OK);
  const auto two = take(text);
  CHECK(two == "6;[0:tors(2,1,1;0),1:tors(2,2,1;0)]");
  REQUIRE(gr2_composite_dual(ctx, two.c_str(), &text) == GR2_OK);
  CHECK(take(text) == two);

  for (const auto& lit : lines) {
    REQUIRE(gr2_composite_compose(ctx, lit.c_str(), &text) == GR2_OK);
    const auto gens = take(text);
    REQUIRE(gr2_composite_decompose(ctx, gens.c_str(), &text) == GR2_OK);
    CHECK(take(text) == lit);
    REQUIRE(gr2_composite_dual(ctx, lit.c_str(), &text) == GR2_OK);
    CHECK(take(text) == lit);
  }

  CHECK(gr2_composite_decompose(ctx, "X^", &text) == GR2_E_PARSE);
  CHECK(gr2_composite_dual(ctx, "6;[0:tors(2,1,1;0)]", &text) == GR2_E_DOMAIN);
  gr2_composite_free(ctx);
  gr2_composite_free(nullptr);

  CHECK(gr2_composite_new(4, 1, 6, &ctx) == GR2_E_DOMAIN);
  CHECK(gr2_composite_new(2, 8, 37, &ctx) == GR2_E_LIMIT);
}

TEST_CASE("verification through the interface")
{
  struct Tally {
    int checks = 0, failed = 0;
  } t;
  int all = 0;
  REQUIRE(gr2_verify(
              0,
              [](const char*, int pass, const char*, void* user) {
                auto* tt = static_cast<Tally*>(user);
                ++tt->checks;
                tt->failed += pass ? 0 : 1;
              },
              &t, &all) == GR2_OK);
  CHECK(all == 1);
  CHECK(t.checks > 10);
  CHECK(t.failed == 0);
  CHECK(gr2_verify(2, nullptr, nullptr, &all) == GR2_E_ARGUMENT);
}

TEST_CASE("errors are per thread")
{
  char* out = nullptr;
  CHECK(gr2_count(4, 1, 6, GR2_KIND_EUCLIDEAN, &out) == GR2_E_DOMAIN);
  const std::string main_msg = gr2_last_error();
  std::string other;
  std::thread th([&] { other = gr2_last_error(); });
  th.join();
  CHECK(other.empty());
  CHECK(std::string(gr2_last_error()) == main_msg);
}
