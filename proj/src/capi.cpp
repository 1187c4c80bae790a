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

#include <gr2/gr2.h>

#include <gr2/counting.hpp>
#include <gr2/dft.hpp>
#include <gr2/duality.hpp>
#include <gr2/errors.hpp>
#include <gr2/literal.hpp>
#include <gr2/verify.hpp>

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct gr2_code {
  gr2::CyclicRing ring;
  gr2::CanonicalCode code;
};

struct gr2_composite {
  gr2::CompositeContext ctx;
};

namespace {

thread_local std::string last_error;

gr2_status fail(gr2_status st, const char* what)
{
  last_error = what;
  return st;
}

template <class F>
gr2_status guarded(F&& body)
{
  try {
    body();
    return GR2_OK;
  } catch (const gr2::ParseError& e) {
    return fail(GR2_E_PARSE, e.what());
  } catch (const gr2::DomainError& e) {
    return fail(GR2_E_DOMAIN, e.what());
  } catch (const gr2::LimitError& e) {
    return fail(GR2_E_LIMIT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(GR2_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(GR2_E_INTERNAL, e.what());
  } catch (...) {
    return fail(GR2_E_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s)
{
  auto* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr)
    throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

gr2::DualKind dual_kind(gr2_kind kind)
{
  switch (kind) {
  case GR2_KIND_EUCLIDEAN:
    return gr2::DualKind::Euclidean;
  case GR2_KIND_HERMITIAN:
    return gr2::DualKind::Hermitian;
  default:
    throw gr2::DomainError("kind must be euclidean or hermitian");
  }
}

// a with n = p^a, or a DomainError.
unsigned prime_power_exponent(unsigned p, unsigned n)
{
  const auto split = gr2::split_length(n, p);
  if (split.m != 1)
    throw gr2::DomainError("n = " + std::to_string(n) + " is not a power of p = " + std::to_string(p));
  return split.a;
}

std::vector<std::string> split_list(const char* text)
{
  std::vector<std::string> out;
  for (const auto& item : gr2::split_top_level(text, ';')) {
    auto t = gr2::trim(item);
    if (!t.empty())
      out.push_back(std::move(t));
  }
  if (out.empty())
    throw gr2::ParseError("empty generator list");
  return out;
}

#define GR2_REQUIRE(cond)                                                                                             \
  do {                                                                                                                \
    if (!(cond))                                                                                                      \
      return fail(GR2_E_ARGUMENT, "invalid argument: " #cond);                                                       \
  } while (0)

} // namespace

extern "C" {

const char* gr2_version(void) { return "1.0.0"; }

const char* gr2_last_error(void) { return last_error.c_str(); }

void gr2_string_free(char* s) { std::free(s); }

gr2_status gr2_count(unsigned p, unsigned s, unsigned n, gr2_kind kind, char** out)
{
  GR2_REQUIRE(out != nullptr);
  return guarded([&] {
    gr2::BigCount v;
    switch (kind) {
    case GR2_KIND_EUCLIDEAN:
      v = gr2::count_E_composite(p, s, n);
      break;
    case GR2_KIND_CYCLIC:
      v = gr2::count_all({p, s, prime_power_exponent(p, n)});
      break;
    case GR2_KIND_HERMITIAN:
      v = gr2::count_H_prime_power({p, s, prime_power_exponent(p, n)});
      break;
    default:
      throw gr2::DomainError("unknown kind");
    }
    *out = dup_string(gr2::to_decimal(v));
  });
}

gr2_status gr2_table(unsigned p, unsigned s, unsigned n_max, gr2_row_sink sink, void* user)
{
  GR2_REQUIRE(sink != nullptr);
  return guarded([&] {
    for (const auto& [n, v] : gr2::emit_table(p, s, n_max))
      if (sink(n, gr2::to_decimal(v).c_str(), user) != 0)
        break;
  });
}

gr2_status gr2_unique_self_dual(unsigned p, unsigned s, unsigned m, int* out)
{
  GR2_REQUIRE(out != nullptr);
  return guarded([&] { *out = gr2::is_unique_self_dual(p, s, m) ? 1 : 0; });
}

gr2_status gr2_code_parse(const char* text, gr2_code** out)
{
  GR2_REQUIRE(text != nullptr && out != nullptr);
  return guarded([&] {
    auto parsed = gr2::parse_code(text);
    *out = new gr2_code{gr2::CyclicRing::make(parsed.params), std::move(parsed.code)};
  });
}

gr2_status gr2_code_normalize(unsigned p, unsigned s, unsigned a, const char* gens, gr2_code** out)
{
  GR2_REQUIRE(gens != nullptr && out != nullptr);
  return guarded([&] {
    auto R = gr2::CyclicRing::make({p, s, a});
    std::vector<gr2::QuotPoly> polys;
    for (const auto& g : split_list(gens))
      polys.push_back(gr2::parse_quot_poly(R, g));
    auto code = gr2::normalize(R, polys);
    *out = new gr2_code{std::move(R), std::move(code)};
  });
}

gr2_status gr2_code_dual(const gr2_code* code, gr2_kind kind, gr2_code** out)
{
  GR2_REQUIRE(code != nullptr && out != nullptr);
  return guarded([&] {
    auto d = gr2::dual(code->ring, code->code, dual_kind(kind));
    *out = new gr2_code{code->ring, std::move(d)};
  });
}

gr2_status gr2_code_is_self_dual(const gr2_code* code, gr2_kind kind, int* out)
{
  GR2_REQUIRE(code != nullptr && out != nullptr);
  return guarded([&] { *out = gr2::is_self_dual(code->ring, code->code, dual_kind(kind)) ? 1 : 0; });
}

gr2_status gr2_code_format(const gr2_code* code, char** out)
{
  GR2_REQUIRE(code != nullptr && out != nullptr);
  return guarded([&] { *out = dup_string(gr2::format_code(code->ring, code->code)); });
}

gr2_status gr2_code_size(const gr2_code* code, char** out)
{
  GR2_REQUIRE(code != nullptr && out != nullptr);
  return guarded([&] { *out = dup_string(gr2::to_decimal(gr2::cardinality(code->ring, code->code))); });
}

gr2_status gr2_code_generators(const gr2_code* code, char** out)
{
  GR2_REQUIRE(code != nullptr && out != nullptr);
  return guarded([&] {
    std::string text;
    for (const auto& g : gr2::generators(code->ring, code->code)) {
      if (!text.empty())
        text += ';';
      text += gr2::format_quot_poly(code->ring, g);
    }
    *out = dup_string(text);
  });
}

void gr2_code_free(gr2_code* code) { delete code; }

gr2_status gr2_enumerate(unsigned p, unsigned s, unsigned a, gr2_kind kind, gr2_line_sink sink, void* user)
{
  GR2_REQUIRE(sink != nullptr);
  return guarded([&] {
    auto R = gr2::CyclicRing::make({p, s, a});
    auto emit = [&](const gr2::CanonicalCode& c) { return sink(gr2::format_code(R, c).c_str(), user) == 0; };
    if (kind == GR2_KIND_CYCLIC)
      gr2::for_each_ideal(R, emit);
    else
      gr2::for_each_self_dual(R, dual_kind(kind), emit);
  });
}

gr2_status gr2_composite_new(unsigned p, unsigned s, unsigned n, gr2_composite** out)
{
  GR2_REQUIRE(out != nullptr);
  return guarded([&] { *out = new gr2_composite{gr2::CompositeContext(p, s, n)}; });
}

void gr2_composite_free(gr2_composite* ctx) { delete ctx; }

gr2_status gr2_composite_cosets(const gr2_composite* ctx, gr2_line_sink sink, void* user)
{
  GR2_REQUIRE(ctx != nullptr && sink != nullptr);
  return guarded([&] {
    for (const auto& c : ctx->ctx.partition().cosets) {
      std::string line = std::to_string(c.rep) + '\t' + std::to_string(c.size) + '\t' + gr2::to_string(c.cls) + '\t';
      for (std::size_t k = 0; k < c.members.size(); ++k)
        line += (k ? "," : "") + std::to_string(c.members[k]);
      if (sink(line.c_str(), user) != 0)
        break;
    }
  });
}

gr2_status gr2_composite_decompose(const gr2_composite* ctx, const char* gens, char** out)
{
  GR2_REQUIRE(ctx != nullptr && gens != nullptr && out != nullptr);
  return guarded([&] {
    gr2::WordRing W(ctx->ctx.base(), ctx->ctx.n());
    std::vector<gr2::Word> words;
    for (const auto& g : split_list(gens))
      words.push_back(W.parse(g));
    *out = dup_string(gr2::format_decomposed(ctx->ctx, gr2::decompose_code(ctx->ctx, words)));
  });
}

gr2_status gr2_composite_compose(const gr2_composite* ctx, const char* decomposed, char** out)
{
  GR2_REQUIRE(ctx != nullptr && decomposed != nullptr && out != nullptr);
  return guarded([&] {
    gr2::WordRing W(ctx->ctx.base(), ctx->ctx.n());
    const auto code = gr2::parse_decomposed(ctx->ctx, decomposed);
    std::string text;
    for (const auto& w : gr2::compose_code(ctx->ctx, code)) {
      if (!text.empty())
        text += ';';
      text += W.format(w);
    }
    *out = dup_string(text);
  });
}

gr2_status gr2_composite_dual(const gr2_composite* ctx, const char* decomposed, char** out)
{
  GR2_REQUIRE(ctx != nullptr && decomposed != nullptr && out != nullptr);
  return guarded([&] {
    const auto code = gr2::parse_decomposed(ctx->ctx, decomposed);
    *out = dup_string(gr2::format_decomposed(ctx->ctx, gr2::dual_decomposition(ctx->ctx, code)));
  });
}

gr2_status gr2_composite_self_dual(const gr2_composite* ctx, gr2_line_sink sink, void* user)
{
  GR2_REQUIRE(ctx != nullptr && sink != nullptr);
  return guarded([&] {
    gr2::for_each_self_dual_composite(ctx->ctx, [&](const gr2::DecomposedCode& c) {
      return sink(gr2::format_decomposed(ctx->ctx, c).c_str(), user) == 0;
    });
  });
}

gr2_status gr2_verify(int level, gr2_check_sink sink, void* user, int* all_pass)
{
  GR2_REQUIRE(level == 0 || level == 1);
  return guarded([&] {
    const bool ok = gr2::run_verify(level == 1 ? gr2::VerifyLevel::Full : gr2::VerifyLevel::Quick,
                                    [&](const gr2::CheckResult& r) {
                                      if (sink)
                                        sink(r.name.c_str(), r.pass ? 1 : 0, r.detail.c_str(), user);
                                    });
    if (all_pass)
      *all_pass = ok ? 1 : 0;
  });
}

} // extern "C"
