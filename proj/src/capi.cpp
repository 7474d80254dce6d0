#include "rbx/rbx.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "rbx/corpus.hpp"
#include "rbx/identity_engine.hpp"
#include "rbx/mzv_calculus.hpp"
#include "rbx/numeric_eval.hpp"
#include "rbx/serialize.hpp"

struct rbx_context
{
	rbx::EvalConfig cfg;
	bool ascii = false;
	std::string json;
	std::string text;
	std::string error;
};

namespace
{

using namespace rbx;

constexpr double kTolerance = 1e-4;

struct IoError : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

template <typename F>
rbx_status guarded(rbx_context *ctx, F &&f)
{
	if (!ctx)
		return RBX_INVALID_ARGUMENT;
	ctx->error.clear();
	try
	{
		return f();
	}
	catch (const std::domain_error &e)
	{
		ctx->error = e.what();
		return RBX_DOMAIN_ERROR;
	}
	catch (const std::invalid_argument &e)
	{
		ctx->error = e.what();
		return RBX_INVALID_ARGUMENT;
	}
	catch (const std::out_of_range &e)
	{
		ctx->error = e.what();
		return RBX_INVALID_ARGUMENT;
	}
	catch (const IoError &e)
	{
		ctx->error = e.what();
		return RBX_IO_ERROR;
	}
	catch (const std::exception &e)
	{
		ctx->error = e.what();
		return RBX_INTERNAL_ERROR;
	}
	catch (...)
	{
		ctx->error = "unknown error";
		return RBX_INTERNAL_ERROR;
	}
}

std::string require_text(const char *s, const char *what)
{
	if (!s)
		throw std::invalid_argument(std::string(what) + " is missing");
	return s;
}

void set_result(rbx_context *ctx, const Json &j, std::string text)
{
	ctx->json = canonical_dump(j);
	ctx->text = std::move(text);
}

std::string fmt17(double v)
{
	char buf[40];
	std::snprintf(buf, sizeof buf, "%.17g", v);
	return buf;
}

Scalar parse_weight(const char *w, const char *fallback)
{
	const std::string text = w ? w : fallback;
	if (text != "0" && text != "1" && text != "-1" && text != "1-q" && text != "1 - q")
		throw std::invalid_argument("weight must be one of 0, 1, -1, 1-q");
	return parse_poly(text);
}

std::pair<std::string, std::string> split_bar(const std::string &args, const char *gen)
{
	const auto bar = args.find('|');
	if (bar == std::string::npos)
		throw std::invalid_argument(std::string(gen) + ": expected arguments of the form 'A|B'");
	return {args.substr(0, bar), args.substr(bar + 1)};
}

int parse_int(const std::string &s, const char *what)
{
	std::size_t used = 0;
	int v = 0;
	try
	{
		v = std::stoi(s, &used);
	}
	catch (const std::exception &)
	{
		used = 0;
	}
	if (used != s.size() || s.empty())
		throw std::invalid_argument(std::string(what) + ": '" + s + "' is not an integer");
	return v;
}

rbx_status product_impl(rbx_context *ctx, rbx_product_mode mode, const char *weight, const char *a_text,
                        const char *b_text)
{
	const std::string at = require_text(a_text, "first operand");
	const std::string bt = require_text(b_text, "second operand");

	if (mode == RBX_PRODUCT_MIXABLE)
	{
		const Scalar lambda = parse_weight(weight, "1");
		const LinComb prod = mixable_shuffle(parse_word(at), parse_word(bt), lambda);
		Json j = {{"mode", "mixable"},
		          {"weight", to_string(lambda)},
		          {"a", at},
		          {"b", bt},
		          {"terms", lincomb_json(prod)}};
		set_result(ctx, j, to_string(prod, ctx->ascii));
		return RBX_OK;
	}

	const Composition a = parse_composition(at);
	const Composition b = parse_composition(bt);
	ZetaCombo prod;
	std::string mode_name;
	if (mode == RBX_PRODUCT_STUFFLE)
	{
		if (weight && parse_weight(weight, "1") != Scalar(Rational(1)))
			throw std::invalid_argument("stuffle has weight 1");
		prod = stuffle(a, b);
		mode_name = "stuffle";
	}
	else if (mode == RBX_PRODUCT_SHUFFLE)
	{
		if (weight && !parse_weight(weight, "0").zero())
			throw std::invalid_argument("shuffle has weight 0");
		prod = shuffle_zeta(a, b);
		mode_name = "shuffle";
	}
	else
		throw std::invalid_argument("unknown product mode");

	Json divergent = Json::array();
	for (const auto &[c, coef] : prod)
		if (!c.admissible())
			divergent.push_back(composition_json(c));
	Json j = {{"mode", mode_name},
	          {"weight", mode == RBX_PRODUCT_STUFFLE ? "1" : "0"},
	          {"a", composition_json(a)},
	          {"b", composition_json(b)},
	          {"terms", combo_json(prod)},
	          {"text", to_string(prod)},
	          {"divergent", !divergent.empty()},
	          {"divergent_terms", divergent}};
	std::string text = to_string(prod);
	if (!divergent.empty())
		text += "\n(divergent terms present: formal product only)";
	set_result(ctx, j, std::move(text));
	return RBX_OK;
}

rbx_status relation_impl(rbx_context *ctx, const char *gen_text, const char *args_text)
{
	const std::string gen = require_text(gen_text, "generator");
	const std::string args = require_text(args_text, "generator arguments");

	CorpusEntry e;
	e.generator = gen;
	e.params = args;
	Json extra;
	if (gen == "doubleshuffle")
	{
		auto [a, b] = split_bar(args, "doubleshuffle");
		e.relation = double_shuffle_relation(parse_composition(a), parse_composition(b));
	}
	else if (gen == "hoffman")
		e.relation = hoffman_partition_relation(parse_composition(args).parts());
	else if (gen == "spitzer")
	{
		auto [k, order] = split_bar(args, "spitzer");
		e.relation = spitzer_zeta_relation(parse_int(k, "spitzer k"), parse_int(order, "spitzer order"));
	}
	else if (gen == "congruence")
	{
		auto [s, p] = split_bar(args, "congruence");
		auto c = congruence_zeta_relation(parse_composition(s), parse_int(p, "congruence p"));
		e.relation = std::move(c.relation);
		e.congruence_holds = c.holds;
		ZetaCombo reduced;
		for (const auto &[comp, coef] : c.expansion)
		{
			Integer r = coef.get_num() % c.modulus;
			if (r < 0)
				r += c.modulus;
			if (coef.get_den() != 1 || r != 0)
				reduced[comp] = coef.get_den() == 1 ? Rational(r) : coef;
		}
		extra = {{"expansion", combo_json(c.expansion)},
		         {"reduced", combo_json(reduced)},
		         {"reduced_text", to_string(reduced)},
		         {"target", composition_json(c.target)},
		         {"modulus", c.modulus}};
	}
	else
		throw std::invalid_argument("unknown generator '" + gen + "'");

	if (e.relation.trivial())
		throw std::domain_error("the generated relation is trivial (0 = 0)");

	CorpusOptions opt;
	opt.cfg = ctx->cfg;
	opt.tolerance = kTolerance;
	e.residual = eval_relation(e.relation, ctx->cfg);
	e.tail_bound = relation_tail_bound(e.relation, ctx->cfg);
	e.verified = e.residual <= kTolerance;

	Json j = corpus_entry_json(e, opt);
	if (!extra.is_null())
		j.update(extra);
	std::string text = to_string(e.relation.terms) + " = 0\nresidual " + fmt17(e.residual) + " (tail bound " +
	                   fmt17(e.tail_bound) + ", N " + std::to_string(ctx->cfg.N) + ")";
	if (e.congruence_holds)
		text += std::string("\ncongruence ") + (*e.congruence_holds ? "holds" : "fails") + ": " +
		        extra["reduced_text"].get<std::string>();
	set_result(ctx, j, std::move(text));
	const bool ok = e.verified && e.congruence_holds.value_or(true);
	return ok ? RBX_OK : RBX_VERIFY_FAILED;
}

std::vector<std::complex<double>> parse_z_values(const std::string &text)
{
	std::vector<std::complex<double>> out;
	std::stringstream ss(text);
	for (std::string item; std::getline(ss, item, ';');)
	{
		double re = 0, im = 0;
		char tail = 0;
		const auto comma = item.find(',');
		const std::string re_text = item.substr(0, comma);
		if (std::sscanf(re_text.c_str(), "%lf%c", &re, &tail) != 1)
			throw std::invalid_argument("bad z value '" + item + "'");
		if (comma != std::string::npos &&
		    std::sscanf(item.substr(comma + 1).c_str(), "%lf%c", &im, &tail) != 1)
			throw std::invalid_argument("bad z value '" + item + "'");
		out.emplace_back(re, im);
	}
	return out;
}

IdentityReport run_verify(rbx_verify_kind kind, const rbx_verify_options &o)
{
	const std::uint64_t seed = o.seed ? o.seed : 1;
	const int trials = o.trials ? o.trials : 50;
	switch (kind)
	{
	case RBX_VERIFY_SPITZER:
		return spitzer_check(o.order ? o.order : 6);
	case RBX_VERIFY_EXPSTAR:
		return exp_star_log_check(o.order ? o.order : 5);
	case RBX_VERIFY_BOHNENBLUST:
		return bohnenblust_spitzer_check(o.n ? o.n : 4);
	case RBX_VERIFY_CONGRUENCE:
		return congruence_check(parse_word(o.word ? o.word : "2"), o.p ? o.p : 3);
	case RBX_VERIFY_JACKSON:
		return jackson_check(o.degree ? o.degree : 5, trials, seed);
	case RBX_VERIFY_ZRB:
		if (o.window < 0)
			throw std::invalid_argument("window must be >= 2");
		return z_rb_check(static_cast<std::size_t>(o.window ? o.window : 50), trials, seed);
	case RBX_VERIFY_INTEGRATION:
		return integration_check(o.degree ? o.degree : 6, trials, seed);
	case RBX_VERIFY_RBAXIOM:
		return rb_axiom_check(parse_weight(o.weight, "1"), trials, seed);
	}
	throw std::invalid_argument("unknown identity");
}

} // namespace

extern "C" {

const char *rbx_version(void) { return "1.0.0"; }

rbx_context *rbx_context_new(void)
{
	try
	{
		return new rbx_context();
	}
	catch (...)
	{
		return nullptr;
	}
}

void rbx_context_free(rbx_context *ctx) { delete ctx; }

rbx_status rbx_set_truncation(rbx_context *ctx, int64_t n)
{
	return guarded(ctx, [&] {
		auto cfg = ctx->cfg;
		cfg.N = n;
		cfg.validate();
		ctx->cfg = cfg;
		return RBX_OK;
	});
}

rbx_status rbx_set_offset(rbx_context *ctx, const char *x)
{
	return guarded(ctx, [&] {
		auto cfg = ctx->cfg;
		cfg.x = parse_rational(require_text(x, "offset"));
		cfg.validate();
		ctx->cfg = cfg;
		return RBX_OK;
	});
}

rbx_status rbx_set_q(rbx_context *ctx, const char *q)
{
	return guarded(ctx, [&] {
		auto cfg = ctx->cfg;
		cfg.q = parse_rational(require_text(q, "q"));
		cfg.validate();
		ctx->cfg = cfg;
		return RBX_OK;
	});
}

rbx_status rbx_set_q_terms(rbx_context *ctx, int64_t k)
{
	return guarded(ctx, [&] {
		auto cfg = ctx->cfg;
		cfg.K = k;
		cfg.validate();
		ctx->cfg = cfg;
		return RBX_OK;
	});
}

rbx_status rbx_set_compensated(rbx_context *ctx, int on)
{
	return guarded(ctx, [&] {
		ctx->cfg.compensated = on != 0;
		return RBX_OK;
	});
}

rbx_status rbx_set_ascii(rbx_context *ctx, int on)
{
	return guarded(ctx, [&] {
		ctx->ascii = on != 0;
		return RBX_OK;
	});
}

rbx_status rbx_product(rbx_context *ctx, rbx_product_mode mode, const char *weight, const char *a, const char *b)
{
	return guarded(ctx, [&] { return product_impl(ctx, mode, weight, a, b); });
}

rbx_status rbx_relation(rbx_context *ctx, const char *gen, const char *args)
{
	return guarded(ctx, [&] { return relation_impl(ctx, gen, args); });
}

rbx_status rbx_eval(rbx_context *ctx, const char *composition)
{
	return guarded(ctx, [&] {
		const Composition s = parse_composition(require_text(composition, "composition"));
		const EvalResult r = zeta_num(s, ctx->cfg);
		Json j = eval_json(r, ctx->cfg);
		j["composition"] = composition_json(s);
		set_result(ctx, j, fmt17(r.value) + " (tail bound " + fmt17(r.tail_bound) + ")");
		return RBX_OK;
	});
}

rbx_status rbx_eval_q(rbx_context *ctx, const char *composition)
{
	return guarded(ctx, [&] {
		const Composition s = parse_composition(require_text(composition, "composition"));
		const EvalResult r = qmzv_num(s, ctx->cfg);
		Json j = eval_json(r, ctx->cfg);
		j["composition"] = composition_json(s);
		j["K"] = ctx->cfg.K;
		set_result(ctx, j, fmt17(r.value) + " (tail bound " + fmt17(r.tail_bound) + ")");
		return RBX_OK;
	});
}

rbx_status rbx_eval_mpl(rbx_context *ctx, const char *composition, const char *z)
{
	return guarded(ctx, [&] {
		const Composition s = parse_composition(require_text(composition, "composition"));
		const auto zs = parse_z_values(require_text(z, "z values"));
		const ComplexEvalResult r = mpl_num(s, zs, ctx->cfg);
		Json j = eval_json(EvalResult{r.value.real(), r.tail_bound}, ctx->cfg);
		j["value_imag"] = r.value.imag();
		j["composition"] = composition_json(s);
		set_result(ctx, j,
		           fmt17(r.value.real()) + (r.value.imag() < 0 ? " - " : " + ") + fmt17(std::abs(r.value.imag())) +
		               "i (tail bound " + fmt17(r.tail_bound) + ")");
		return RBX_OK;
	});
}

rbx_status rbx_verify(rbx_context *ctx, rbx_verify_kind kind, const rbx_verify_options *opt)
{
	return guarded(ctx, [&] {
		const rbx_verify_options defaults{};
		const IdentityReport r = run_verify(kind, opt ? *opt : defaults);
		std::string text = r.name + ": " + (r.equal ? "equal" : "unequal");
		for (const auto &[k, v] : r.params)
			text += " " + k + "=" + v;
		if (r.first_diff)
			text += "\nfirst difference: " + *r.first_diff;
		set_result(ctx, report_json(r), std::move(text));
		return r.equal ? RBX_OK : RBX_VERIFY_FAILED;
	});
}

rbx_status rbx_corpus_build(rbx_context *ctx, int max_weight, int max_depth, const char *path)
{
	return guarded(ctx, [&] {
		CorpusOptions opt;
		opt.max_weight = max_weight;
		opt.max_depth = max_depth;
		opt.cfg = ctx->cfg;
		opt.tolerance = kTolerance;
		const std::string file = require_text(path, "output path");
		const auto entries = corpus_build(opt);

		std::ofstream out(file, std::ios::binary | std::ios::trunc);
		if (!out)
			throw IoError("cannot open '" + file + "' for writing");
		out << corpus_jsonl(entries, opt);
		out.close();
		if (!out)
			throw IoError("failed writing '" + file + "'");

		std::size_t verified = 0;
		double worst = 0;
		for (const auto &e : entries)
		{
			verified += e.verified;
			worst = std::max(worst, e.residual);
		}
		Json j = {{"path", file},
		          {"entries", entries.size()},
		          {"verified", verified},
		          {"max_residual", worst},
		          {"max_weight", max_weight},
		          {"max_depth", max_depth},
		          {"N", opt.cfg.N}};
		set_result(ctx, j,
		           std::to_string(entries.size()) + " relations, " + std::to_string(verified) +
		               " verified, max residual " + fmt17(worst) + " -> " + file);
		return verified == entries.size() ? RBX_OK : RBX_VERIFY_FAILED;
	});
}

const char *rbx_result_json(const rbx_context *ctx) { return ctx ? ctx->json.c_str() : ""; }

const char *rbx_result_text(const rbx_context *ctx) { return ctx ? ctx->text.c_str() : ""; }

const char *rbx_last_error(const rbx_context *ctx) { return ctx ? ctx->error.c_str() : "null context"; }

} // extern "C"
