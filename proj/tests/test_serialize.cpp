#include <doctest.h>

#include "rbx/corpus.hpp"
#include "rbx/serialize.hpp"

using namespace rbx;

namespace
{

Composition C(std::vector<int> p) { return Composition(std::move(p)); }

CorpusOptions small_corpus()
{
	CorpusOptions opt;
	opt.max_weight = 5;
	opt.max_depth = 3;
	opt.cfg.N = 20000;
	return opt;
}

} // namespace

TEST_CASE("canonical dump")
{
	Json j = {{"b", 0.1}, {"a", 1}, {"c", std::vector<double>{1.0 / 3.0}}};
	CHECK(canonical_dump(j) == "{\"a\":1,\"b\":0.10000000000000001,\"c\":[0.33333333333333331]}");
	CHECK(canonical_dump(Json(std::nan(""))) == "null");
	CHECK(Json::parse(canonical_dump(j)) == j);
}

TEST_CASE("relation JSON")
{
	const auto r = double_shuffle_relation(C({2}), C({2}));
	const Json j = relation_json(r);
	CHECK(canonical_dump(j) ==
	      "{\"source\":\"double_shuffle(2|2)\",\"terms\":[{\"coef\":\"-1/4\",\"monomial\":[[4]]},"
	      "{\"coef\":\"1\",\"monomial\":[[3,1]]}]}");
	for (const auto &rel : {r, hoffman_partition_relation({2, 3, 4}), spitzer_zeta_relation(2, 3)})
	{
		const auto back = relation_from_json(Json::parse(canonical_dump(relation_json(rel))));
		CHECK(back.terms == rel.terms);
		CHECK(back.source == rel.source);
	}
}

TEST_CASE("combination JSON round-trips")
{
	const auto z = stuffle(C({2}), C({3, 1}));
	CHECK(combo_from_json(Json::parse(canonical_dump(combo_json(z)))) == z);

	const auto w = mixable_shuffle({Letter::q_letter(2)}, {Letter::q_letter(3), Letter::q_letter(1)}, one_minus_q_pow(1));
	CHECK(lincomb_from_json(Json::parse(canonical_dump(lincomb_json(w)))) == w);
}

TEST_CASE("eval and report JSON")
{
	EvalConfig cfg;
	cfg.N = 100;
	const auto r = zeta_num(C({2}), cfg);
	const Json j = Json::parse(canonical_dump(eval_json(r, cfg)));
	CHECK(j.at("value").get<double>() == r.value);
	CHECK(j.at("tail_bound").get<double>() == r.tail_bound);
	CHECK(j.at("N") == 100);
	CHECK(j.at("x") == "0");
	CHECK(j.at("q") == "1/2");

	IdentityReport rep;
	rep.name = "x";
	rep.equal = false;
	rep.first_diff = "here";
	const Json rj = report_json(rep);
	CHECK(rj.at("verdict") == "unequal");
	CHECK(rj.at("first_diff") == "here");
	rep.equal = true;
	rep.first_diff.reset();
	CHECK_FALSE(report_json(rep).contains("first_diff"));
}

TEST_CASE("corpus enumeration")
{
	auto opt = small_corpus();
	const auto entries = corpus_enumerate(opt);
	bool famous = false;
	for (std::size_t i = 0; i < entries.size(); ++i)
	{
		CHECK_FALSE(entries[i].relation.trivial());
		CHECK(entries[i].relation.weight() <= 5);
		CHECK(entries[i].relation.max_depth() <= 3);
		if (i)
			CHECK(std::tuple(entries[i - 1].relation.weight(), entries[i - 1].generator, entries[i - 1].params) <
			      std::tuple(entries[i].relation.weight(), entries[i].generator, entries[i].params));
		if (entries[i].generator == "doubleshuffle" && entries[i].params == "2|2")
			famous = true;
	}
	CHECK(famous);
	opt.max_weight = 9;
	CHECK_THROWS(corpus_enumerate(opt));
}

TEST_CASE("corpus is verified and deterministic")
{
	auto opt = small_corpus();
	opt.threads = 3;
	const auto a = corpus_build(opt);
	for (const auto &e : a)
		CHECK(e.verified);
	opt.threads = 1;
	const auto b = corpus_build(opt);
	CHECK(corpus_jsonl(a, opt) == corpus_jsonl(b, opt));

	const std::string text = corpus_jsonl(a, opt);
	const auto first_line = text.substr(0, text.find('\n'));
	const Json j = Json::parse(first_line);
	CHECK(relation_from_json(j.at("relation")).terms == a.front().relation.terms);
}
