#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "rbx/rbx.h"

static int failures = 0;

#define EXPECT(cond)                                                                                                   \
	do                                                                                                                 \
	{                                                                                                                  \
		if (!(cond))                                                                                                   \
		{                                                                                                              \
			fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond);                                       \
			++failures;                                                                                                \
		}                                                                                                              \
	} while (0)

static int contains(const char *haystack, const char *needle) { return strstr(haystack, needle) != NULL; }

int main(void)
{
	rbx_context *ctx = rbx_context_new();
	rbx_verify_options opt;
	const char *path = "capi_corpus.jsonl";
	FILE *f;

	EXPECT(ctx != NULL);
	EXPECT(strlen(rbx_version()) > 0);

	EXPECT(rbx_product(ctx, RBX_PRODUCT_STUFFLE, NULL, "2", "2") == RBX_OK);
	EXPECT(contains(rbx_result_json(ctx), "{\"coef\":\"2\",\"composition\":[2,2]}"));
	EXPECT(contains(rbx_result_json(ctx), "{\"coef\":\"1\",\"composition\":[4]}"));
	EXPECT(contains(rbx_result_text(ctx), "2*zeta(2,2)"));

	EXPECT(rbx_product(ctx, RBX_PRODUCT_SHUFFLE, NULL, "2", "2") == RBX_OK);
	EXPECT(contains(rbx_result_json(ctx), "{\"coef\":\"4\",\"composition\":[3,1]}"));
	EXPECT(rbx_product(ctx, RBX_PRODUCT_SHUFFLE, NULL, "1", "2") == RBX_DOMAIN_ERROR);
	EXPECT(strlen(rbx_last_error(ctx)) > 0);

	EXPECT(rbx_product(ctx, RBX_PRODUCT_STUFFLE, NULL, "1,2", "2") == RBX_OK);
	EXPECT(contains(rbx_result_json(ctx), "\"divergent\":true"));
	EXPECT(rbx_product(ctx, RBX_PRODUCT_MIXABLE, "1-q", "q[2]", "q[3]") == RBX_OK);
	EXPECT(rbx_product(ctx, RBX_PRODUCT_MIXABLE, "2", "1", "2") == RBX_INVALID_ARGUMENT);
	EXPECT(rbx_product(ctx, RBX_PRODUCT_STUFFLE, NULL, "2,,1", "2") == RBX_INVALID_ARGUMENT);
	EXPECT(rbx_product(ctx, RBX_PRODUCT_STUFFLE, NULL, NULL, "2") == RBX_INVALID_ARGUMENT);

	EXPECT(rbx_set_truncation(ctx, 5) == RBX_INVALID_ARGUMENT);
	EXPECT(rbx_set_q(ctx, "3/2") == RBX_INVALID_ARGUMENT);
	EXPECT(rbx_set_offset(ctx, "-1") == RBX_INVALID_ARGUMENT);
	EXPECT(rbx_set_truncation(ctx, 20000) == RBX_OK);

	EXPECT(rbx_relation(ctx, "doubleshuffle", "2|2") == RBX_OK);
	EXPECT(contains(rbx_result_json(ctx), "\"verified\":true"));
	EXPECT(rbx_relation(ctx, "congruence", "2|3") == RBX_OK);
	EXPECT(contains(rbx_result_json(ctx), "\"reduced_text\":\"zeta(6)\""));
	EXPECT(rbx_relation(ctx, "spitzer", "3|1") == RBX_DOMAIN_ERROR);
	EXPECT(rbx_relation(ctx, "nope", "2") == RBX_INVALID_ARGUMENT);
	EXPECT(rbx_relation(ctx, "hoffman", "1,2") == RBX_DOMAIN_ERROR);

	EXPECT(rbx_eval(ctx, "2") == RBX_OK);
	EXPECT(contains(rbx_result_json(ctx), "\"N\":20000"));
	EXPECT(rbx_eval(ctx, "1,2") == RBX_DOMAIN_ERROR);
	EXPECT(rbx_eval_q(ctx, "2") == RBX_OK);
	EXPECT(rbx_eval_mpl(ctx, "1", "0.5") == RBX_OK);
	EXPECT(contains(rbx_result_json(ctx), "\"value\":0.693147"));
	EXPECT(rbx_eval_mpl(ctx, "2", "1.5") == RBX_DOMAIN_ERROR);
	EXPECT(rbx_eval_mpl(ctx, "2", "x") == RBX_INVALID_ARGUMENT);

	memset(&opt, 0, sizeof opt);
	opt.order = 4;
	EXPECT(rbx_verify(ctx, RBX_VERIFY_SPITZER, &opt) == RBX_OK);
	EXPECT(contains(rbx_result_json(ctx), "\"verdict\":\"equal\""));
	EXPECT(rbx_verify(ctx, RBX_VERIFY_EXPSTAR, NULL) == RBX_OK);
	opt.n = 9;
	EXPECT(rbx_verify(ctx, RBX_VERIFY_BOHNENBLUST, &opt) == RBX_INVALID_ARGUMENT);
	memset(&opt, 0, sizeof opt);
	opt.word = "1,3";
	opt.p = 5;
	EXPECT(rbx_verify(ctx, RBX_VERIFY_CONGRUENCE, &opt) == RBX_OK);
	memset(&opt, 0, sizeof opt);
	opt.trials = 5;
	EXPECT(rbx_verify(ctx, RBX_VERIFY_JACKSON, &opt) == RBX_OK);
	EXPECT(rbx_verify(ctx, RBX_VERIFY_ZRB, &opt) == RBX_OK);
	EXPECT(rbx_verify(ctx, RBX_VERIFY_INTEGRATION, &opt) == RBX_OK);
	opt.weight = "-1";
	EXPECT(rbx_verify(ctx, RBX_VERIFY_RBAXIOM, &opt) == RBX_OK);

	EXPECT(rbx_corpus_build(ctx, 4, 2, path) == RBX_OK);
	EXPECT(contains(rbx_result_json(ctx), "\"verified\":"));
	f = fopen(path, "r");
	EXPECT(f != NULL);
	if (f)
		fclose(f);
	remove(path);
	EXPECT(rbx_corpus_build(ctx, 4, 2, "/nonexistent-dir/x.jsonl") == RBX_IO_ERROR);
	EXPECT(rbx_corpus_build(ctx, 12, 2, path) == RBX_INVALID_ARGUMENT);

	EXPECT(rbx_eval(NULL, "2") == RBX_INVALID_ARGUMENT);
	rbx_context_free(ctx);
	rbx_context_free(NULL);

	if (failures)
		fprintf(stderr, "%d failures\n", failures);
	else
		printf("C API: all checks passed\n");
	return failures ? EXIT_FAILURE : EXIT_SUCCESS;
}
