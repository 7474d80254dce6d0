#include "rbx/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace rbx
{

void CorpusOptions::validate() const
{
	if (max_weight < 2 || max_weight > 8)
		throw std::invalid_argument("corpus: max weight must be in [2, 8]");
	if (max_depth < 1 || max_depth > 3)
		throw std::invalid_argument("corpus: max depth must be in [1, 3]");
	if (!(tolerance > 0))
		throw std::invalid_argument("corpus: tolerance must be positive");
	cfg.validate();
}

namespace
{

// Admissible compositions with weight <= max_weight and depth <= max_depth,
// in composition order.
std::vector<Composition> admissible_up_to(int max_weight, int max_depth)
{
	std::vector<Composition> out;
	std::vector<int> parts;
	auto extend = [&](auto &&self, int remaining) -> void {
		if (!parts.empty())
			out.emplace_back(parts);
		if (static_cast<int>(parts.size()) == max_depth)
			return;
		for (int s = parts.empty() ? 2 : 1; s <= remaining; ++s)
		{
			parts.push_back(s);
			self(self, remaining - s);
			parts.pop_back();
		}
	};
	extend(extend, max_weight);
	std::sort(out.begin(), out.end());
	return out;
}

std::string join(const std::vector<int> &v)
{
	std::string out;
	for (std::size_t i = 0; i < v.size(); ++i)
		out += (i ? "," : "") + std::to_string(v[i]);
	return out;
}

void push(std::vector<CorpusEntry> &out, const CorpusOptions &opt, std::string gen, std::string params, Relation r,
          std::optional<bool> holds = std::nullopt)
{
	if (r.trivial() || r.weight() > opt.max_weight || static_cast<int>(r.max_depth()) > opt.max_depth)
		return;
	CorpusEntry e;
	e.generator = std::move(gen);
	e.params = std::move(params);
	e.relation = std::move(r);
	e.congruence_holds = holds;
	out.push_back(std::move(e));
}

} // namespace

std::vector<CorpusEntry> corpus_enumerate(const CorpusOptions &opt)
{
	opt.validate();
	const int W = opt.max_weight;
	const int D = opt.max_depth;
	std::vector<CorpusEntry> out;

	const auto comps = admissible_up_to(W, D);
	for (std::size_t i = 0; i < comps.size(); ++i)
		for (std::size_t j = i; j < comps.size(); ++j)
		{
			const auto &a = comps[i];
			const auto &b = comps[j];
			if (a.weight() + b.weight() > W || static_cast<int>(a.depth() + b.depth()) > D)
				continue;
			push(out, opt, "doubleshuffle", to_string(a) + "|" + to_string(b), double_shuffle_relation(a, b));
		}

	for (int n = 2; n <= D; ++n)
	{
		std::vector<int> s(static_cast<std::size_t>(n), 2);
		auto next = [&]() {
			// nondecreasing tuples of parts >= 2 with sum <= W
			for (int i = n - 1; i >= 0; --i)
			{
				++s[static_cast<std::size_t>(i)];
				for (int k = i + 1; k < n; ++k)
					s[static_cast<std::size_t>(k)] = s[static_cast<std::size_t>(i)];
				int sum = 0;
				for (int v : s)
					sum += v;
				if (sum <= W)
					return true;
			}
			return false;
		};
		int sum = 2 * n;
		if (sum > W)
			continue;
		do
			push(out, opt, "hoffman", join(s), hoffman_partition_relation(s));
		while (next());
	}

	for (int k = 2; 2 * k <= W; ++k)
		for (int i = 2; i <= D && i * k <= W; ++i)
			push(out, opt, "spitzer", std::to_string(k) + "|" + std::to_string(i), spitzer_zeta_relation(k, i));

	for (const auto &s : comps)
		for (int p : {2, 3, 5, 7})
		{
			if (p * s.weight() > W || p * static_cast<int>(s.depth()) > D)
				continue;
			auto c = congruence_zeta_relation(s, p);
			push(out, opt, "congruence", to_string(s) + "|" + std::to_string(p), std::move(c.relation), c.holds);
		}

	std::sort(out.begin(), out.end(), [](const CorpusEntry &x, const CorpusEntry &y) {
		return std::tuple(x.relation.weight(), x.generator, x.params) <
		       std::tuple(y.relation.weight(), y.generator, y.params);
	});
	return out;
}

void corpus_evaluate(std::vector<CorpusEntry> &entries, const CorpusOptions &opt)
{
	opt.validate();
	unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
	threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(entries.size(), 1)));

	std::atomic<std::size_t> next{0};
	auto work = [&] {
		for (std::size_t i; (i = next++) < entries.size();)
		{
			auto &e = entries[i];
			e.residual = eval_relation(e.relation, opt.cfg);
			e.tail_bound = relation_tail_bound(e.relation, opt.cfg);
			e.verified = e.residual <= opt.tolerance;
		}
	};
	std::vector<std::jthread> pool;
	for (unsigned t = 1; t < threads; ++t)
		pool.emplace_back(work);
	work();
}

std::vector<CorpusEntry> corpus_build(const CorpusOptions &opt)
{
	auto entries = corpus_enumerate(opt);
	corpus_evaluate(entries, opt);
	return entries;
}

Json corpus_entry_json(const CorpusEntry &e, const CorpusOptions &opt)
{
	Json j = {{"generator", e.generator},
	          {"params", e.params},
	          {"weight", e.relation.weight()},
	          {"depth", e.relation.max_depth()},
	          {"relation", relation_json(e.relation)},
	          {"text", to_string(e.relation.terms) + " = 0"},
	          {"residual", e.residual},
	          {"tail_bound", e.tail_bound},
	          {"tolerance", opt.tolerance},
	          {"N", opt.cfg.N},
	          {"verified", e.verified}};
	if (e.congruence_holds)
		j["congruence_holds"] = *e.congruence_holds;
	return j;
}

std::string corpus_jsonl(const std::vector<CorpusEntry> &entries, const CorpusOptions &opt)
{
	std::string out;
	for (const auto &e : entries)
		out += canonical_dump(corpus_entry_json(e, opt)) + "\n";
	return out;
}

} // namespace rbx
