#ifndef RBX_CORPUS_HPP
#define RBX_CORPUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "rbx/mzv_calculus.hpp"
#include "rbx/numeric_eval.hpp"
#include "rbx/serialize.hpp"

namespace rbx
{

struct CorpusOptions
{
	int max_weight = 8; // 2..8
	int max_depth = 3;  // 1..3
	EvalConfig cfg;
	double tolerance = 1e-4;
	unsigned threads = 0; // 0: hardware concurrency

	void validate() const;
};

struct CorpusEntry
{
	std::string generator; // doubleshuffle, hoffman, spitzer, congruence
	std::string params;
	Relation relation;
	std::optional<bool> congruence_holds;
	double residual = 0;
	double tail_bound = 0;
	bool verified = false;
};

// Every nontrivial relation within the bounds, sorted by (weight, generator,
// params), not yet evaluated.
std::vector<CorpusEntry> corpus_enumerate(const CorpusOptions &opt);

// Fills residual, tail_bound and verified for every entry, in parallel.
void corpus_evaluate(std::vector<CorpusEntry> &entries, const CorpusOptions &opt);

std::vector<CorpusEntry> corpus_build(const CorpusOptions &opt);

Json corpus_entry_json(const CorpusEntry &e, const CorpusOptions &opt);

// One canonical JSON object per line.
std::string corpus_jsonl(const std::vector<CorpusEntry> &entries, const CorpusOptions &opt);

} // namespace rbx

#endif
