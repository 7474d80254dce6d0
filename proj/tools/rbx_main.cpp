#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rbx/rbx.h"

namespace
{

int exit_code(rbx_status s)
{
	switch (s)
	{
	case RBX_OK:
		return 0;
	case RBX_VERIFY_FAILED:
		return 1;
	case RBX_INVALID_ARGUMENT:
	case RBX_DOMAIN_ERROR:
		return 2;
	default:
		return 3;
	}
}

struct NumericFlags
{
	std::optional<long long> N;
	std::optional<std::string> x;
	std::optional<std::string> q;
	std::optional<long long> K;
	bool compensated = false;

	void add_to(CLI::App *cmd, bool with_q)
	{
		cmd->add_option("--N", N, "truncation of the outer summation index");
		cmd->add_option("--x", x, "Hurwitz offset, a rational >= 0");
		if (with_q)
		{
			cmd->add_option("--q", q, "evaluate the q-analogue at this rational q in (0, 1)");
			cmd->add_option("--K", K, "truncation for q-analogues");
		}
		cmd->add_flag("--compensated", compensated, "compensated summation");
	}

	rbx_status apply(rbx_context *ctx) const
	{
		rbx_status s = RBX_OK;
		if (N && (s = rbx_set_truncation(ctx, *N)) != RBX_OK)
			return s;
		if (x && (s = rbx_set_offset(ctx, x->c_str())) != RBX_OK)
			return s;
		if (q && (s = rbx_set_q(ctx, q->c_str())) != RBX_OK)
			return s;
		if (K && (s = rbx_set_q_terms(ctx, *K)) != RBX_OK)
			return s;
		return rbx_set_compensated(ctx, compensated);
	}
};

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Free commutative Rota-Baxter algebras and multiple zeta values"};
	app.require_subcommand(1);
	app.fallthrough();

	std::string format = "json";
	bool ascii = false;
	app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
	app.add_flag("--ascii", ascii, "write tensors as (x) instead of the unicode sign");

	// product
	auto *product = app.add_subcommand("product", "product of two compositions or letter words");
	std::string mode = "stuffle";
	std::optional<std::string> weight;
	std::string prod_a, prod_b;
	product->add_option("--mode", mode, "stuffle, shuffle or mixable")
	    ->check(CLI::IsMember({"stuffle", "shuffle", "mixable"}));
	product->add_option("--weight", weight, "weight: 0, 1, -1 or 1-q");
	product->add_option("A", prod_a, "first operand, e.g. 2,1 or q[2],q[3]")->required();
	product->add_option("B", prod_b, "second operand")->required();

	// relation
	auto *relation = app.add_subcommand("relation", "generate a relation among zeta values and check it numerically");
	std::string gen;
	std::vector<std::string> rel_args;
	int rel_order = 2;
	int rel_p = 3;
	NumericFlags rel_num;
	relation->add_option("--gen", gen, "doubleshuffle, hoffman, spitzer or congruence")
	    ->required()
	    ->check(CLI::IsMember({"doubleshuffle", "hoffman", "spitzer", "congruence"}));
	relation->add_option("args", rel_args,
	                     "doubleshuffle: A B; hoffman: s1,...,sn; spitzer: k; congruence: s1,...,sn");
	relation->add_option("--order", rel_order, "spitzer: depth of zeta(k,...,k)");
	relation->add_option("--p", rel_p, "congruence: prime");
	rel_num.add_to(relation, false);

	// eval
	auto *eval = app.add_subcommand("eval", "truncated numeric value of a multiple zeta value");
	std::string comp;
	std::optional<std::string> z;
	NumericFlags eval_num;
	eval->add_option("--comp", comp, "composition s1,...,sk")->required();
	eval->add_option("--z", z, "polylog arguments 're[,im]' joined by ';', one per part");
	eval_num.add_to(eval, true);

	// verify
	auto *verify = app.add_subcommand("verify", "check an identity exactly");
	std::string identity;
	rbx_verify_options vopt{};
	std::string word;
	std::string vweight;
	verify->add_option("identity", identity, "identity to check")
	    ->required()
	    ->check(CLI::IsMember({"spitzer", "expstar", "bohnenblust", "congruence", "jackson", "zrb", "integration",
	                           "rbaxiom"}));
	verify->add_option("--order", vopt.order, "series order");
	verify->add_option("--n", vopt.n, "number of letters");
	verify->add_option("--p", vopt.p, "prime");
	verify->add_option("--word", word, "letter word, e.g. 1,3");
	verify->add_option("--weight", vweight, "rbaxiom weight: 0, 1, -1 or 1-q");
	verify->add_option("--trials", vopt.trials, "random trials");
	verify->add_option("--degree", vopt.degree, "maximal polynomial degree");
	verify->add_option("--window", vopt.window, "sequence window");
	verify->add_option("--seed", vopt.seed, "random seed");

	// corpus
	auto *corpus = app.add_subcommand("corpus", "relation corpus");
	corpus->require_subcommand(1);
	auto *build = corpus->add_subcommand("build", "enumerate, verify and write relations as JSON lines");
	int max_weight = 8;
	int max_depth = 3;
	std::string out_path;
	NumericFlags corpus_num;
	build->add_option("--max-weight", max_weight, "maximal weight, 2..8");
	build->add_option("--max-depth", max_depth, "maximal depth, 1..3");
	build->add_option("--out", out_path, "output file")->required();
	corpus_num.add_to(build, false);

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::ParseError &e)
	{
		const int code = app.exit(e);
		return code == 0 ? 0 : 2;
	}

	std::unique_ptr<rbx_context, decltype(&rbx_context_free)> ctx(rbx_context_new(), rbx_context_free);
	if (!ctx)
	{
		std::cerr << "error: out of memory\n";
		return 3;
	}
	rbx_set_ascii(ctx.get(), ascii);

	rbx_status s = RBX_OK;
	if (*product)
	{
		const rbx_product_mode m = mode == "stuffle"   ? RBX_PRODUCT_STUFFLE
		                           : mode == "shuffle" ? RBX_PRODUCT_SHUFFLE
		                                               : RBX_PRODUCT_MIXABLE;
		s = rbx_product(ctx.get(), m, weight ? weight->c_str() : nullptr, prod_a.c_str(), prod_b.c_str());
	}
	else if (*relation)
	{
		std::string args;
		if (gen == "doubleshuffle" && rel_args.size() == 2)
			args = rel_args[0] + "|" + rel_args[1];
		else if ((gen == "hoffman") && rel_args.size() == 1)
			args = rel_args[0];
		else if (gen == "spitzer" && rel_args.size() == 1)
			args = rel_args[0] + "|" + std::to_string(rel_order);
		else if (gen == "congruence" && rel_args.size() == 1)
			args = rel_args[0] + "|" + std::to_string(rel_p);
		else
		{
			std::cerr << "error: wrong number of arguments for --gen " << gen << "\n";
			return 2;
		}
		if ((s = rel_num.apply(ctx.get())) == RBX_OK)
			s = rbx_relation(ctx.get(), gen.c_str(), args.c_str());
	}
	else if (*eval)
	{
		if ((s = eval_num.apply(ctx.get())) == RBX_OK)
		{
			if (z)
				s = rbx_eval_mpl(ctx.get(), comp.c_str(), z->c_str());
			else if (eval_num.q)
				s = rbx_eval_q(ctx.get(), comp.c_str());
			else
				s = rbx_eval(ctx.get(), comp.c_str());
		}
	}
	else if (*verify)
	{
		const rbx_verify_kind kind = identity == "spitzer"       ? RBX_VERIFY_SPITZER
		                             : identity == "expstar"     ? RBX_VERIFY_EXPSTAR
		                             : identity == "bohnenblust" ? RBX_VERIFY_BOHNENBLUST
		                             : identity == "congruence"  ? RBX_VERIFY_CONGRUENCE
		                             : identity == "jackson"     ? RBX_VERIFY_JACKSON
		                             : identity == "zrb"         ? RBX_VERIFY_ZRB
		                             : identity == "integration" ? RBX_VERIFY_INTEGRATION
		                                                         : RBX_VERIFY_RBAXIOM;
		if (!word.empty())
			vopt.word = word.c_str();
		if (!vweight.empty())
			vopt.weight = vweight.c_str();
		s = rbx_verify(ctx.get(), kind, &vopt);
	}
	else if (*build)
	{
		if ((s = corpus_num.apply(ctx.get())) == RBX_OK)
			s = rbx_corpus_build(ctx.get(), max_weight, max_depth, out_path.c_str());
	}

	if (s != RBX_OK && s != RBX_VERIFY_FAILED)
	{
		std::cerr << "error: " << rbx_last_error(ctx.get()) << "\n";
		return exit_code(s);
	}
	if (format == "json")
		std::cout << rbx_result_json(ctx.get()) << "\n";
	else
		std::cout << rbx_result_text(ctx.get()) << "\n";
	return exit_code(s);
}
