#include "qonsager/serialize.hpp"
#include "qonsager/errors.hpp"

namespace qons {

using nlohmann::json;

json to_json(IntPoly const &p)
{
	json a = json::array();
	for (auto const &t : p.terms())
		a.push_back(json::array({t.eq, t.ec, t.k.get_str()}));
	return a;
}

json to_json(Scalar const &s)
{
	return json{{"num", to_json(s.num())}, {"den", to_json(s.den())}};
}

json to_json(NcPoly const &x)
{
	json a = json::array();
	for (auto const &[w, s] : x.terms())
		a.push_back(json::array({w.compact(), to_json(s)}));
	return a;
}

IntPoly intpoly_from_json(json const &j)
{
	if (!j.is_array())
		throw FormatError("polynomial must be a term list");
	std::vector<Term> terms;
	for (auto const &t : j)
	{
		if (!t.is_array() || t.size() != 3 || !t[0].is_number_unsigned() ||
		    !t[1].is_number_unsigned() || !t[2].is_string())
			throw FormatError("polynomial term must be [qe, ce, \"k\"]");
		mpz_class k;
		if (k.set_str(t[2].get<std::string>(), 10) != 0)
			throw FormatError("bad integer '" + t[2].get<std::string>() + "'");
		terms.push_back({t[0].get<uint32_t>(), t[1].get<uint32_t>(), k});
	}
	return IntPoly::from_terms(std::move(terms));
}

Scalar scalar_from_json(json const &j)
{
	if (!j.is_object() || !j.contains("num") || !j.contains("den"))
		throw FormatError("scalar must have num and den");
	IntPoly den = intpoly_from_json(j["den"]);
	if (den.is_zero())
		throw FormatError("scalar with zero denominator");
	return Scalar(intpoly_from_json(j["num"]), den);
}

NcPoly ncpoly_from_json(json const &j)
{
	if (!j.is_array())
		throw FormatError("element must be a term list");
	std::vector<std::pair<Word, Scalar>> terms;
	for (auto const &t : j)
	{
		if (!t.is_array() || t.size() != 2 || !t[0].is_string())
			throw FormatError("element term must be [word, scalar]");
		terms.emplace_back(Word::parse_compact(t[0].get<std::string>()),
		                   scalar_from_json(t[1]));
	}
	return NcPoly::from_terms(std::move(terms));
}

} // namespace qons
