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
#ifndef GR2_GR2_H
#define GR2_GR2_H

/*
 * C interface to the gr2 library: cyclic codes over GR(p^2, s).
 *
 * Every function returns a gr2_status. On failure the message is available
 * from gr2_last_error() on the calling thread until the next failing call.
 * Strings handed out through char** must be released with gr2_string_free.
 * Handles are immutable after creation and may be shared between threads.
 *
 * Text forms:
 *   code        full(p,s,a;i0,i1;[T(1),T(-)])   tors(p,s,a;i1)
 *   poly in u   u^2+(x+1)*u+3                    (x is the ring generator)
 *   word in X   X^3+2*x*X+1                      (length n)
 *   decomposed  n;[h:code,...]
 * Generator lists separate polynomials with ';'.
 */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(GR2_BUILDING)
#    define GR2_API __declspec(dllexport)
#  else
#    define GR2_API __declspec(dllimport)
#  endif
#else
#  define GR2_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gr2_status {
  GR2_OK = 0,
  GR2_E_PARSE = 1,
  GR2_E_DOMAIN = 2,
  GR2_E_LIMIT = 3,
  GR2_E_INTERNAL = 4,
  GR2_E_ARGUMENT = 5
} gr2_status;

typedef enum gr2_kind {
  GR2_KIND_CYCLIC = 0,
  GR2_KIND_EUCLIDEAN = 1,
  GR2_KIND_HERMITIAN = 2
} gr2_kind;

/* A canonical cyclic code of length p^a. */
typedef struct gr2_code gr2_code;
/* Transform context for length n = m p^a. */
typedef struct gr2_composite gr2_composite;

/* Receives one line of output. Return nonzero to stop early. */
typedef int (*gr2_line_sink)(const char* line, void* user);
/* One table row. Return nonzero to stop early. */
typedef int (*gr2_row_sink)(unsigned n, const char* count, void* user);
/* One verification check. */
typedef void (*gr2_check_sink)(const char* name, int pass, const char* detail, void* user);

GR2_API const char* gr2_version(void);
GR2_API const char* gr2_last_error(void);
GR2_API void gr2_string_free(char* s);

/* Counts in decimal. EUCLIDEAN accepts any n >= 1; CYCLIC and HERMITIAN
 * need n = p^a (HERMITIAN also s even). */
GR2_API gr2_status gr2_count(unsigned p, unsigned s, unsigned n, gr2_kind kind, char** out);
/* Euclidean self-dual counts for n = 1 .. n_max. */
GR2_API gr2_status gr2_table(unsigned p, unsigned s, unsigned n_max, gr2_row_sink sink, void* user);
/* *out = 1 iff length m p has a unique Euclidean self-dual code. */
GR2_API gr2_status gr2_unique_self_dual(unsigned p, unsigned s, unsigned m, int* out);

GR2_API gr2_status gr2_code_parse(const char* text, gr2_code** out);
GR2_API gr2_status gr2_code_normalize(unsigned p, unsigned s, unsigned a, const char* gens, gr2_code** out);
GR2_API gr2_status gr2_code_dual(const gr2_code* code, gr2_kind kind, gr2_code** out);
GR2_API gr2_status gr2_code_is_self_dual(const gr2_code* code, gr2_kind kind, int* out);
GR2_API gr2_status gr2_code_format(const gr2_code* code, char** out);
/* |C| in decimal. */
GR2_API gr2_status gr2_code_size(const gr2_code* code, char** out);
/* Generators as polynomials in u, separated by ';'. */
GR2_API gr2_status gr2_code_generators(const gr2_code* code, char** out);
GR2_API void gr2_code_free(gr2_code* code);

/* Streams code literals: every ideal (CYCLIC) or every self-dual code. */
GR2_API gr2_status gr2_enumerate(unsigned p, unsigned s, unsigned a, gr2_kind kind, gr2_line_sink sink, void* user);

GR2_API gr2_status gr2_composite_new(unsigned p, unsigned s, unsigned n, gr2_composite** out);
GR2_API void gr2_composite_free(gr2_composite* ctx);
/* Lines "h<TAB>size<TAB>class<TAB>members" in component order. */
GR2_API gr2_status gr2_composite_cosets(const gr2_composite* ctx, gr2_line_sink sink, void* user);
GR2_API gr2_status gr2_composite_decompose(const gr2_composite* ctx, const char* gens, char** out);
/* Generators of a decomposed code as words in X, separated by ';'. */
GR2_API gr2_status gr2_composite_compose(const gr2_composite* ctx, const char* decomposed, char** out);
GR2_API gr2_status gr2_composite_dual(const gr2_composite* ctx, const char* decomposed, char** out);
GR2_API gr2_status gr2_composite_self_dual(const gr2_composite* ctx, gr2_line_sink sink, void* user);

/* level 0 = quick, 1 = full. *all_pass is 1 iff every check passed. */
GR2_API gr2_status gr2_verify(int level, gr2_check_sink sink, void* user, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* GR2_GR2_H */
