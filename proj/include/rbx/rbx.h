#ifndef RBX_H
#define RBX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RBX_API __declspec(dllexport)
#else
#define RBX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rbx_status
{
	RBX_OK = 0,
	RBX_VERIFY_FAILED = 1, /* identity unequal or residual above tolerance */
	RBX_INVALID_ARGUMENT = 2,
	RBX_DOMAIN_ERROR = 3, /* inadmissible input, divergent series */
	RBX_IO_ERROR = 4,
	RBX_INTERNAL_ERROR = 5
} rbx_status;

typedef enum rbx_product_mode
{
	RBX_PRODUCT_STUFFLE = 0,
	RBX_PRODUCT_SHUFFLE = 1,
	RBX_PRODUCT_MIXABLE = 2
} rbx_product_mode;

typedef enum rbx_verify_kind
{
	RBX_VERIFY_SPITZER = 0,
	RBX_VERIFY_EXPSTAR = 1,
	RBX_VERIFY_BOHNENBLUST = 2,
	RBX_VERIFY_CONGRUENCE = 3,
	RBX_VERIFY_JACKSON = 4,
	RBX_VERIFY_ZRB = 5,
	RBX_VERIFY_INTEGRATION = 6,
	RBX_VERIFY_RBAXIOM = 7
} rbx_verify_kind;

typedef struct rbx_context rbx_context;

/* Parameters of rbx_verify. Zero fields take the defaults noted. */
typedef struct rbx_verify_options
{
	int order;          /* spitzer 6, expstar 5 */
	int n;              /* bohnenblust 4 */
	int p;              /* congruence 3 */
	const char *word;   /* congruence "2" */
	const char *weight; /* rbaxiom "1" */
	int trials;         /* randomized checks 50 */
	int degree;         /* jackson 5, integration 6 */
	int window;         /* zrb 50 */
	uint64_t seed;      /* 0 means 1 */
} rbx_verify_options;

RBX_API const char *rbx_version(void);

RBX_API rbx_context *rbx_context_new(void);
RBX_API void rbx_context_free(rbx_context *ctx);

/* Numeric configuration. Rationals are strings such as "1/2". */
RBX_API rbx_status rbx_set_truncation(rbx_context *ctx, int64_t n);
RBX_API rbx_status rbx_set_offset(rbx_context *ctx, const char *x);
RBX_API rbx_status rbx_set_q(rbx_context *ctx, const char *q);
RBX_API rbx_status rbx_set_q_terms(rbx_context *ctx, int64_t k);
RBX_API rbx_status rbx_set_compensated(rbx_context *ctx, int on);
RBX_API rbx_status rbx_set_ascii(rbx_context *ctx, int on);

/* Each call below replaces the context's result. Products of compositions
 * ("2,1") for stuffle/shuffle; letter words ("q[2],q[3]") for mixable. */
RBX_API rbx_status rbx_product(rbx_context *ctx, rbx_product_mode mode, const char *weight, const char *a,
                               const char *b);

/* gen: doubleshuffle (args "A|B"), hoffman ("2,3,4"), spitzer ("k|order"),
 * congruence ("S|p"). Also evaluates the relation numerically. */
RBX_API rbx_status rbx_relation(rbx_context *ctx, const char *gen, const char *args);

RBX_API rbx_status rbx_eval(rbx_context *ctx, const char *composition);
RBX_API rbx_status rbx_eval_q(rbx_context *ctx, const char *composition);
/* z values as "re" or "re,im" separated by ';', one per part. */
RBX_API rbx_status rbx_eval_mpl(rbx_context *ctx, const char *composition, const char *z);

RBX_API rbx_status rbx_verify(rbx_context *ctx, rbx_verify_kind kind, const rbx_verify_options *opt);

/* Writes the JSON-lines corpus to path; result is a summary object. */
RBX_API rbx_status rbx_corpus_build(rbx_context *ctx, int max_weight, int max_depth, const char *path);

/* Valid until the next call on ctx. */
RBX_API const char *rbx_result_json(const rbx_context *ctx);
RBX_API const char *rbx_result_text(const rbx_context *ctx);
RBX_API const char *rbx_last_error(const rbx_context *ctx);

#ifdef __cplusplus
}
#endif

#endif
