#include "qonsager/freealg.hpp"
#include "qonsager/errors.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace qons {

Word Word::from_letters(std::vector<int> const &gs)
{
	if (gs.size() > size_t(max_length))
		throw CapacityError("word longer than 64 letters", int(gs.size()));
	Word w;
	for (int g : gs)
		w = w * letter(g);
	return w;
}

Word operator*(Word a, Word b)
{
	if (a.len + b.len > Word::max_length)
		throw CapacityError("word longer than 64 letters", a.len + b.len);
	if (a.len == 0)
		return b;
	if (b.len == 0)
		return a;
	uint64_t hi = b.len == 64 ? 0 : a.bits << b.len;
	return Word{hi | b.bits, uint8_t(a.len + b.len)};
}

int Word::find(Word w) const
{
	for (int i = 0; i + w.len <= len; ++i)
		if (sub(i, w.len) == w)
			return i;
	return -1;
}

int Word::count(int g) const
{
	int ones = std::popcount(bits);
	return g == 0 ? ones : len - ones;
}

std::string Word::str() const
{
	if (len == 0)
		return "1";
	std::string s;
	for (int i = 0; i < len; ++i)
	{
		if (i)
			s += '*';
		s += at(i) == 0 ? "B0" : "B1";
	}
	return s;
}

std::string Word::compact() const
{
	if (len == 0)
		return "1";
	std::string s;
	for (int i = 0; i < len; ++i)
		s += at(i) == 0 ? "B0" : "B1";
	return s;
}

Word Word::parse_compact(std::string const &s)
{
	if (s == "1")
		return Word{};
	if (s.size() % 2 != 0)
		throw FormatError("bad word '" + s + "'");
	std::vector<int> gs;
	for (size_t i = 0; i < s.size(); i += 2)
	{
		if (s[i] != 'B' || (s[i + 1] != '0' && s[i + 1] != '1'))
			throw FormatError("bad word '" + s + "'");
		gs.push_back(s[i + 1] - '0');
	}
	return from_letters(gs);
}

NcPoly::NcPoly(Scalar const &s)
{
	if (!s.is_zero())
		terms_.emplace_back(Word{}, s);
}

NcPoly::NcPoly(Word w, Scalar s)
{
	if (!s.is_zero())
		terms_.emplace_back(w, std::move(s));
}

NcPoly NcPoly::from_terms(std::vector<std::pair<Word, Scalar>> terms)
{
	std::sort(terms.begin(), terms.end(),
	          [](auto const &a, auto const &b) { return a.first > b.first; });
	NcPoly r;
	for (auto &t : terms)
	{
		if (!r.terms_.empty() && r.terms_.back().first == t.first)
		{
			r.terms_.back().second += t.second;
			if (r.terms_.back().second.is_zero())
				r.terms_.pop_back();
		}
		else if (!t.second.is_zero())
			r.terms_.push_back(std::move(t));
	}
	return r;
}

int NcPoly::degree() const
{
	// descending order puts the longest word first
	return terms_.empty() ? -1 : terms_.front().first.len;
}

Scalar NcPoly::coeff(Word w) const
{
	auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
	                           [](auto const &t, Word v) { return t.first > v; });
	if (it != terms_.end() && it->first == w)
		return it->second;
	return Scalar();
}

NcPoly NcPoly::operator-() const
{
	NcPoly r = *this;
	for (auto &t : r.terms_)
		t.second = -t.second;
	return r;
}

namespace {

template <bool Sub>
void merge_into(std::vector<std::pair<Word, Scalar>> &a,
                std::vector<std::pair<Word, Scalar>> const &b)
{
	std::vector<std::pair<Word, Scalar>> r;
	r.reserve(a.size() + b.size());
	size_t i = 0, j = 0;
	while (i < a.size() || j < b.size())
	{
		if (j == b.size() || (i < a.size() && a[i].first > b[j].first))
			r.push_back(std::move(a[i++]));
		else if (i == a.size() || b[j].first > a[i].first)
		{
			r.emplace_back(b[j].first, Sub ? -b[j].second : b[j].second);
			++j;
		}
		else
		{
			Scalar s = Sub ? a[i].second - b[j].second : a[i].second + b[j].second;
			if (!s.is_zero())
				r.emplace_back(a[i].first, std::move(s));
			++i;
			++j;
		}
	}
	a = std::move(r);
}

} // namespace

NcPoly &NcPoly::operator+=(NcPoly const &b)
{
	merge_into<false>(terms_, b.terms_);
	return *this;
}

NcPoly &NcPoly::operator-=(NcPoly const &b)
{
	merge_into<true>(terms_, b.terms_);
	return *this;
}

NcPoly &NcPoly::operator*=(Scalar const &s)
{
	if (s.is_zero())
		terms_.clear();
	else if (!s.is_one())
		for (auto &t : terms_)
			t.second = t.second * s;
	return *this;
}

NcPoly operator*(NcPoly const &a, NcPoly const &b)
{
	if (a.is_zero() || b.is_zero())
		return NcPoly();
	if (b.size() == 1 && b.terms_[0].second.is_one())
	{
		NcPoly r = a;
		for (auto &t : r.terms_)
			t.first = t.first * b.terms_[0].first;
		return r;
	}
	std::unordered_map<Word, Scalar, WordHash> acc;
	acc.reserve(a.size() * b.size());
	for (auto const &[u, s] : a.terms_)
		for (auto const &[v, t] : b.terms_)
			acc[u * v] += s * t;
	std::vector<std::pair<Word, Scalar>> terms;
	terms.reserve(acc.size());
	for (auto &[w, s] : acc)
		if (!s.is_zero())
			terms.emplace_back(w, std::move(s));
	std::sort(terms.begin(), terms.end(),
	          [](auto const &x, auto const &y) { return x.first > y.first; });
	NcPoly r;
	r.terms_ = std::move(terms);
	return r;
}

void append_term(std::string &out, Scalar const &k, std::string const &body)
{
	bool neg = k.num().lead().k < 0;
	Scalar a = neg ? -k : k;
	if (out.empty())
		out += neg ? "-" : "";
	else
		out += neg ? " - " : " + ";
	std::string coef = a.is_compound() ? "(" + a.str() + ")" : a.str();
	if (body.empty())
		out += coef;
	else if (a.is_one())
		out += body;
	else
		out += coef + "*" + body;
}

std::string NcPoly::str() const
{
	if (terms_.empty())
		return "0";
	std::string s;
	for (auto const &[w, k] : terms_)
		append_term(s, k, w.len == 0 ? "" : w.str());
	return s;
}

NcPoly p_commutator(NcPoly const &x, NcPoly const &y, Scalar const &p)
{
	return x * y - p * (y * x);
}

NcPoly homogeneous_component(NcPoly const &x, int d)
{
	std::vector<std::pair<Word, Scalar>> t;
	for (auto const &[w, s] : x.terms())
		if (w.len == d)
			t.emplace_back(w, s);
	// already sorted and nonzero
	return NcPoly::from_terms(std::move(t));
}

NcPoly pow(NcPoly const &x, int n)
{
	NcPoly r(Scalar(1));
	for (int i = 0; i < n; ++i)
		r = r * x;
	return r;
}

struct AlgebraMorphism::Cache
{
	std::shared_mutex mu;
	std::unordered_map<Word, NcPoly, WordHash> words;
	std::vector<AlgebraMorphism> powers;
};

AlgebraMorphism::AlgebraMorphism(NcPoly image_g0, NcPoly image_g1)
    : image_{std::move(image_g0), std::move(image_g1)}, cache_(std::make_shared<Cache>())
{
	if (image_[0].is_zero() || image_[1].is_zero())
		throw std::invalid_argument("morphism images must be nonzero");
}

AlgebraMorphism AlgebraMorphism::identity()
{
	return AlgebraMorphism(NcPoly::generator(0), NcPoly::generator(1));
}

NcPoly AlgebraMorphism::apply(Word w) const
{
	if (w.len == 0)
		return NcPoly(Scalar(1));
	if (w.len == 1)
		return image_[w.at(0)];
	{
		std::shared_lock lock(cache_->mu);
		auto it = cache_->words.find(w);
		if (it != cache_->words.end())
			return it->second;
	}
	int h = w.len / 2;
	NcPoly r = apply(w.sub(0, h)) * apply(w.sub(h, w.len - h));
	std::unique_lock lock(cache_->mu);
	// keep the memo bounded; entries are recomputable
	if (cache_->words.size() > 200000)
		cache_->words.clear();
	cache_->words.emplace(w, r);
	return r;
}

NcPoly AlgebraMorphism::apply(NcPoly const &x) const
{
	std::vector<std::pair<Word, Scalar>> acc;
	for (auto const &[w, s] : x.terms())
	{
		NcPoly img = apply(w);
		for (auto const &[v, t] : img.terms())
			acc.emplace_back(v, s * t);
	}
	return NcPoly::from_terms(std::move(acc));
}

AlgebraMorphism AlgebraMorphism::power(int n) const
{
	if (n < 0)
		throw std::invalid_argument("morphism power must be nonnegative");
	if (n == 0)
		return identity();
	if (n == 1)
		return *this;
	{
		std::shared_lock lock(cache_->mu);
		if (size_t(n - 2) < cache_->powers.size())
			return cache_->powers[n - 2];
	}
	AlgebraMorphism r = compose(*this, power(n - 1));
	std::unique_lock lock(cache_->mu);
	if (size_t(n - 2) == cache_->powers.size())
		cache_->powers.push_back(r);
	return r;
}

AlgebraMorphism compose(AlgebraMorphism const &f, AlgebraMorphism const &g)
{
	return AlgebraMorphism(f.apply(g.image(0)), f.apply(g.image(1)));
}

std::string to_string(CMode m)
{
	return m == CMode::zero ? "zero" : "generic";
}

std::pair<NcPoly, NcPoly> defining_relations(CMode mode)
{
	std::pair<NcPoly, NcPoly> r;
	for (int k = 0; k < 2; ++k)
	{
		int a = k, b = 1 - k;
		NcPoly ga = NcPoly::generator(a), gb = NcPoly::generator(b);
		NcPoly rel;
		for (int i = 0; i <= 3; ++i)
		{
			Scalar s = qbinom(3, i);
			rel += (i % 2 ? -s : s) * (pow(ga, 3 - i) * gb * pow(ga, i));
		}
		if (mode == CMode::generic)
		{
			Scalar k2 = qint(2);
			rel += Scalar::q() * Scalar::c() * k2 * k2 * p_commutator(ga, gb);
		}
		(k == 0 ? r.first : r.second) = rel;
	}
	return r;
}

} // namespace qons
