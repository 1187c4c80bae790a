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

// gr2cyc: command-line front end over the C interface.
//
// Exit codes: 0 success, 1 domain or limit error, 2 parse error,
// 3 verification failure, 4 internal error.

#include <gr2/gr2.h>

#include <CLI11.hpp>

#include <cstdio>
#include <string>

namespace {

enum class Mode { Text, Structured };

Mode g_mode = Mode::Text;

int exit_code(gr2_status st)
{
  switch (st) {
  case GR2_OK:
    return 0;
  case GR2_E_PARSE:
  case GR2_E_ARGUMENT:
    return 2;
  case GR2_E_DOMAIN:
  case GR2_E_LIMIT:
    return 1;
  default:
    return 4;
  }
}

const char* status_name(gr2_status st)
{
  switch (st) {
  case GR2_E_PARSE:
    return "parse error";
  case GR2_E_DOMAIN:
    return "domain error";
  case GR2_E_LIMIT:
    return "limit exceeded";
  case GR2_E_ARGUMENT:
    return "invalid argument";
  default:
    return "internal error";
  }
}

// Thrown out of command bodies to unwind with a status.
struct Failure {
  gr2_status st;
};

void check(gr2_status st)
{
  if (st != GR2_OK)
    throw Failure{st};
}

// Values go out bare unless they contain spaces or quotes.
std::string quote(const std::string& v)
{
  if (v.find_first_of(" \"\t") == std::string::npos && !v.empty())
    return v;
  std::string out = "\"";
  for (char c : v) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out + '"';
}

void record(const std::string& tag, std::initializer_list<std::pair<const char*, std::string>> fields)
{
  std::string line = tag;
  for (const auto& [k, v] : fields)
    line += std::string(" ") + k + "=" + quote(v);
  std::puts(line.c_str());
}

std::string take(char* s)
{
  std::string out = s ? s : "";
  gr2_string_free(s);
  return out;
}

gr2_kind parse_kind(const std::string& k)
{
  if (k == "cyclic")
    return GR2_KIND_CYCLIC;
  if (k == "euclidean")
    return GR2_KIND_EUCLIDEAN;
  return GR2_KIND_HERMITIAN;
}

struct CodeHandle {
  gr2_code* ptr = nullptr;
  ~CodeHandle() { gr2_code_free(ptr); }
};

struct CompositeHandle {
  gr2_composite* ptr = nullptr;
  ~CompositeHandle() { gr2_composite_free(ptr); }
};

struct LineState {
  const char* tag;
  unsigned index = 0;
};

int emit_line(const char* line, void* user)
{
  auto* st = static_cast<LineState*>(user);
  ++st->index;
  if (g_mode == Mode::Text)
    std::puts(line);
  else
    record(st->tag, {{"index", std::to_string(st->index)}, {"literal", line}});
  return 0;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Cyclic codes over the Galois ring GR(p^2,s)", "gr2cyc"};
  app.require_subcommand(1);
  std::string mode = "text";
  app.add_option("--output", mode, "Output mode")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  app.set_version_flag("--version", std::string(gr2_version()));

  const auto kinds3 = CLI::IsMember({"cyclic", "euclidean", "hermitian"});
  const auto kinds2 = CLI::IsMember({"euclidean", "hermitian"});

  unsigned p = 2, s = 1, n = 1, a = 1, max = 40;
  std::string kind = "euclidean", code_text, gens, level = "quick";

  auto* count = app.add_subcommand("count", "Number of self-dual (or all) cyclic codes of length n");
  count->add_option("--p", p, "Characteristic prime")->required();
  count->add_option("--s", s, "Residue field degree")->required();
  count->add_option("--n", n, "Code length")->required();
  count->add_option("--kind", kind, "euclidean (any n), cyclic or hermitian (n a power of p)")
      ->check(kinds3)
      ->capture_default_str();

  auto* table = app.add_subcommand("table", "Euclidean self-dual counts for n = 1..max");
  table->add_option("--p", p)->required();
  table->add_option("--s", s)->required();
  table->add_option("--max", max)->required();

  auto* enumerate = app.add_subcommand("enumerate", "List codes of length p^a");
  enumerate->add_option("--p", p)->required();
  enumerate->add_option("--s", s)->required();
  enumerate->add_option("--a", a)->required();
  enumerate->add_option("--kind", kind)->check(kinds3)->required();

  auto* dual = app.add_subcommand("dual", "Dual of a code literal");
  dual->add_option("--kind", kind)->check(kinds2)->required();
  dual->add_option("--code", code_text, "full(p,s,a;i0,i1;[...]) or tors(p,s,a;i1)")->required();

  auto* normalize = app.add_subcommand("normalize", "Canonical form of the ideal generated by polynomials in u");
  normalize->add_option("--p", p)->required();
  normalize->add_option("--s", s)->required();
  normalize->add_option("--a", a)->required();
  normalize->add_option("--gens", gens, "poly;poly;...")->required();

  auto* decompose = app.add_subcommand("decompose", "Component codes of the ideal generated by words in X");
  decompose->add_option("--p", p)->required();
  decompose->add_option("--s", s)->required();
  decompose->add_option("--n", n)->required();
  decompose->add_option("--gens", gens, "word;word;...")->required();

  auto* sdc = app.add_subcommand("selfdual-composite", "Euclidean self-dual codes of length n");
  sdc->add_option("--p", p)->required();
  sdc->add_option("--s", s)->required();
  sdc->add_option("--n", n)->required();

  auto* verify = app.add_subcommand("verify", "Cross-check the algorithms against brute force");
  verify->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  g_mode = mode == "structured" ? Mode::Structured : Mode::Text;

  try {
    if (*count) {
      const auto value = [&] {
        char* out = nullptr;
        check(gr2_count(p, s, n, parse_kind(kind), &out));
        return take(out);
      }();
      if (g_mode == Mode::Text)
        std::puts(value.c_str());
      else
        record("count", {{"p", std::to_string(p)}, {"s", std::to_string(s)}, {"n", std::to_string(n)},
                         {"kind", kind}, {"value", value}});
    } else if (*table) {
      struct Ctx {
        unsigned p, s;
      } ctx{p, s};
      check(gr2_table(
          p, s, max,
          [](unsigned row, const char* value, void* user) {
            const auto* c = static_cast<Ctx*>(user);
            if (g_mode == Mode::Text)
              std::printf("%u\t%s\n", row, value);
            else
              record("row", {{"p", std::to_string(c->p)}, {"s", std::to_string(c->s)}, {"n", std::to_string(row)},
                             {"value", value}});
            return 0;
          },
          &ctx));
    } else if (*enumerate) {
      LineState st{"code"};
      check(gr2_enumerate(p, s, a, parse_kind(kind), emit_line, &st));
      if (g_mode == Mode::Structured)
        record("total", {{"count", std::to_string(st.index)}});
    } else if (*dual) {
      CodeHandle in, out;
      check(gr2_code_parse(code_text.c_str(), &in.ptr));
      check(gr2_code_dual(in.ptr, parse_kind(kind), &out.ptr));
      char* text = nullptr;
      check(gr2_code_format(out.ptr, &text));
      const auto lit = take(text);
      if (g_mode == Mode::Text)
        std::puts(lit.c_str());
      else
        record("dual", {{"kind", kind}, {"literal", lit}});
    } else if (*normalize) {
      CodeHandle c;
      check(gr2_code_normalize(p, s, a, gens.c_str(), &c.ptr));
      char* text = nullptr;
      check(gr2_code_format(c.ptr, &text));
      const auto lit = take(text);
      if (g_mode == Mode::Text) {
        std::puts(lit.c_str());
      } else {
        char* size = nullptr;
        check(gr2_code_size(c.ptr, &size));
        record("code", {{"literal", lit}, {"size", take(size)}});
      }
    } else if (*decompose) {
      CompositeHandle ctx;
      check(gr2_composite_new(p, s, n, &ctx.ptr));
      char* text = nullptr;
      check(gr2_composite_decompose(ctx.ptr, gens.c_str(), &text));
      const auto lit = take(text);
      if (g_mode == Mode::Text)
        std::puts(lit.c_str());
      else
        record("decomposed", {{"literal", lit}});
    } else if (*sdc) {
      CompositeHandle ctx;
      check(gr2_composite_new(p, s, n, &ctx.ptr));
      LineState st{"code"};
      check(gr2_composite_self_dual(ctx.ptr, emit_line, &st));
      if (g_mode == Mode::Structured)
        record("total", {{"count", std::to_string(st.index)}});
    } else if (*verify) {
      struct Tally {
        unsigned passed = 0, total = 0;
      } tally;
      int all = 0;
      check(gr2_verify(
          level == "full" ? 1 : 0,
          [](const char* name, int pass, const char* detail, void* user) {
            auto* t = static_cast<Tally*>(user);
            ++t->total;
            t->passed += pass ? 1 : 0;
            if (g_mode == Mode::Text) {
              if (pass)
                std::printf("PASS  %s\n", name);
              else
                std::printf("FAIL  %s: %s\n", name, detail);
            } else {
              record("check", {{"name", name}, {"result", pass ? "pass" : "fail"}, {"detail", detail}});
            }
            std::fflush(stdout);
          },
          &tally, &all));
      if (g_mode == Mode::Text)
        std::printf("%u/%u checks passed\n", tally.passed, tally.total);
      else
        record("summary", {{"passed", std::to_string(tally.passed)}, {"total", std::to_string(tally.total)}});
      return all ? 0 : 3;
    }
  } catch (const Failure& f) {
    std::fflush(stdout);
    std::fprintf(stderr, "gr2cyc: %s: %s\n", status_name(f.st), gr2_last_error());
    return exit_code(f.st);
  }
  return 0;
}
