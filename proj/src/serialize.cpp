#include "rbx/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace rbx
{

namespace
{

void dump_into(const Json &j, std::string &out)
{
	switch (j.type())
	{
	case Json::value_t::object:
	{
		out += '{';
		bool first = true;
		for (const auto &[k, v] : j.items())
		{
			if (!first)
				out += ',';
			first = false;
			out += Json(k).dump();
			out += ':';
			dump_into(v, out);
		}
		out += '}';
		break;
	}
	case Json::value_t::array:
	{
		out += '[';
		for (std::size_t i = 0; i < j.size(); ++i)
		{
			if (i)
				out += ',';
			dump_into(j[i], out);
		}
		out += ']';
		break;
	}
	case Json::value_t::number_float:
	{
		const double v = j.get<double>();
		if (!std::isfinite(v))
		{
			out += "null";
			break;
		}
		char buf[40];
		std::snprintf(buf, sizeof buf, "%.17g", v);
		out += buf;
		break;
	}
	default:
		out += j.dump(-1, ' ', false, Json::error_handler_t::replace);
	}
}

} // namespace

std::string canonical_dump(const Json &j)
{
	std::string out;
	dump_into(j, out);
	return out;
}

Json composition_json(const Composition &c) { return Json(c.parts()); }

Composition composition_from_json(const Json &j) { return Composition(j.get<std::vector<int>>()); }

Json relation_json(const Relation &r)
{
	Json terms = Json::array();
	for (const auto &[m, c] : r.terms.terms())
	{
		Json mono = Json::array();
		for (const auto &f : m.factors())
			mono.push_back(composition_json(f));
		terms.push_back({{"coef", to_string(c)}, {"monomial", mono}});
	}
	return {{"terms", terms}, {"source", r.source}};
}

Relation relation_from_json(const Json &j)
{
	Relation r;
	r.source = j.at("source").get<std::string>();
	for (const auto &t : j.at("terms"))
	{
		std::vector<Composition> factors;
		for (const auto &f : t.at("monomial"))
			factors.push_back(composition_from_json(f));
		r.terms.add(ZetaMonomial(std::move(factors)), parse_rational(t.at("coef").get<std::string>()));
	}
	return r;
}

Json combo_json(const ZetaCombo &z)
{
	Json out = Json::array();
	for (const auto &[c, coef] : z)
		out.push_back({{"coef", to_string(coef)}, {"composition", composition_json(c)}});
	return out;
}

ZetaCombo combo_from_json(const Json &j)
{
	ZetaCombo out;
	for (const auto &t : j)
		out[composition_from_json(t.at("composition"))] += parse_rational(t.at("coef").get<std::string>());
	return out;
}

Json lincomb_json(const LinComb &c)
{
	Json out = Json::array();
	for (const auto &[w, coef] : c.terms())
	{
		Json letters = Json::array();
		for (const auto &l : w)
			letters.push_back(to_string(l));
		out.push_back({{"coef", to_string(coef)}, {"word", letters}});
	}
	return out;
}

LinComb lincomb_from_json(const Json &j)
{
	LinComb out;
	for (const auto &t : j)
	{
		Word w;
		for (const auto &l : t.at("word"))
			w.push_back(parse_letter(l.get<std::string>()));
		out.add(std::move(w), parse_poly(t.at("coef").get<std::string>()));
	}
	return out;
}

Json eval_json(const EvalResult &r, const EvalConfig &cfg)
{
	return {{"value", r.value},
	        {"tail_bound", r.tail_bound},
	        {"N", cfg.N},
	        {"x", to_string(cfg.x)},
	        {"q", to_string(cfg.q)}};
}

Json report_json(const IdentityReport &r)
{
	Json j = {{"name", r.name},
	          {"params", r.params},
	          {"verdict", r.equal ? "equal" : "unequal"},
	          {"lhs", r.lhs},
	          {"rhs", r.rhs}};
	if (r.first_diff)
		j["first_diff"] = *r.first_diff;
	return j;
}

} // namespace rbx
