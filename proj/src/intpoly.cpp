#include "qonsager/intpoly.hpp"
#include "qonsager/errors.hpp"

#include <algorithm>

namespace qons {

namespace {

bool key_greater(Term const &a, Term const &b)
{
	return term_key(a.eq, a.ec) > term_key(b.eq, b.ec);
}

void append_monomial(std::string &s, uint32_t eq, uint32_t ec, bool have_coeff)
{
	auto factor = [&](char v, uint32_t e) {
		if (e == 0)
			return;
		if (have_coeff)
			s += '*';
		s += v;
		if (e > 1)
			s += "^" + std::to_string(e);
		have_coeff = true;
	};
	factor('q', eq);
	factor('c', ec);
}

} // namespace

IntPoly::IntPoly(long k)
{
	if (k != 0)
		terms_.push_back({0, 0, mpz_class(k)});
}

IntPoly::IntPoly(mpz_class const &k)
{
	if (k != 0)
		terms_.push_back({0, 0, k});
}

IntPoly IntPoly::monomial(mpz_class const &k, uint32_t eq, uint32_t ec)
{
	IntPoly r;
	if (k != 0)
		r.terms_.push_back({eq, ec, k});
	return r;
}

IntPoly IntPoly::from_terms(std::vector<Term> terms)
{
	std::sort(terms.begin(), terms.end(), key_greater);
	IntPoly r;
	for (auto &t : terms)
	{
		if (!r.terms_.empty() && r.terms_.back().eq == t.eq &&
		    r.terms_.back().ec == t.ec)
			r.terms_.back().k += t.k;
		else
		{
			if (!r.terms_.empty() && r.terms_.back().k == 0)
				r.terms_.pop_back();
			r.terms_.push_back(std::move(t));
		}
	}
	if (!r.terms_.empty() && r.terms_.back().k == 0)
		r.terms_.pop_back();
	return r;
}

bool IntPoly::is_one() const
{
	return terms_.size() == 1 && terms_[0].eq == 0 && terms_[0].ec == 0 &&
	       terms_[0].k == 1;
}

bool IntPoly::is_constant() const
{
	return terms_.empty() ||
	       (terms_.size() == 1 && terms_[0].eq == 0 && terms_[0].ec == 0);
}

uint32_t IntPoly::deg_q() const
{
	uint32_t d = 0;
	for (auto const &t : terms_)
		d = std::max(d, t.eq);
	return d;
}

uint32_t IntPoly::deg_c() const
{
	uint32_t d = 0;
	for (auto const &t : terms_)
		d = std::max(d, t.ec);
	return d;
}

uint32_t IntPoly::min_q() const
{
	uint32_t d = UINT32_MAX;
	for (auto const &t : terms_)
		d = std::min(d, t.eq);
	return terms_.empty() ? 0 : d;
}

uint32_t IntPoly::min_c() const
{
	uint32_t d = UINT32_MAX;
	for (auto const &t : terms_)
		d = std::min(d, t.ec);
	return terms_.empty() ? 0 : d;
}

mpz_class IntPoly::content() const
{
	mpz_class g = 0;
	for (auto const &t : terms_)
	{
		mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.k.get_mpz_t());
		if (g == 1)
			break;
	}
	return g;
}

IntPoly IntPoly::operator-() const
{
	IntPoly r = *this;
	for (auto &t : r.terms_)
		t.k = -t.k;
	return r;
}

IntPoly &IntPoly::operator+=(IntPoly const &b)
{
	if (b.terms_.empty())
		return *this;
	if (terms_.empty())
		return *this = b;
	std::vector<Term> out;
	out.reserve(terms_.size() + b.terms_.size());
	size_t i = 0, j = 0;
	while (i < terms_.size() || j < b.terms_.size())
	{
		if (j == b.terms_.size() ||
		    (i < terms_.size() && key_greater(terms_[i], b.terms_[j])))
			out.push_back(std::move(terms_[i++]));
		else if (i == terms_.size() || key_greater(b.terms_[j], terms_[i]))
			out.push_back(b.terms_[j++]);
		else
		{
			terms_[i].k += b.terms_[j].k;
			if (terms_[i].k != 0)
				out.push_back(std::move(terms_[i]));
			++i, ++j;
		}
	}
	terms_ = std::move(out);
	return *this;
}

IntPoly &IntPoly::operator-=(IntPoly const &b)
{
	return *this += -b;
}

IntPoly IntPoly::operator*(mpz_class const &k) const
{
	if (k == 0)
		return IntPoly();
	IntPoly r = *this;
	for (auto &t : r.terms_)
		t.k *= k;
	return r;
}

IntPoly IntPoly::divexact(mpz_class const &k) const
{
	IntPoly r = *this;
	for (auto &t : r.terms_)
		mpz_divexact(t.k.get_mpz_t(), t.k.get_mpz_t(), k.get_mpz_t());
	return r;
}

IntPoly IntPoly::mul_monomial(uint32_t eq, uint32_t ec) const
{
	IntPoly r = *this;
	for (auto &t : r.terms_)
		t.eq += eq, t.ec += ec;
	return r;
}

IntPoly IntPoly::div_monomial(uint32_t eq, uint32_t ec) const
{
	IntPoly r = *this;
	for (auto &t : r.terms_)
		t.eq -= eq, t.ec -= ec;
	return r;
}

IntPoly operator+(IntPoly a, IntPoly const &b)
{
	a += b;
	return a;
}

IntPoly operator-(IntPoly a, IntPoly const &b)
{
	a -= b;
	return a;
}

IntPoly operator*(IntPoly const &a, IntPoly const &b)
{
	if (a.is_zero() || b.is_zero())
		return IntPoly();
	if (a.is_monomial() || b.is_monomial())
	{
		auto const &m = a.is_monomial() ? a : b;
		auto const &p = a.is_monomial() ? b : a;
		auto const &t = m.lead();
		return (p * t.k).mul_monomial(t.eq, t.ec);
	}
	uint32_t Q = a.deg_q() + b.deg_q();
	uint32_t C = a.deg_c() + b.deg_c();
	size_t W = size_t(C) + 1;
	size_t box = (size_t(Q) + 1) * W;
	std::vector<Term> out;
	if (box <= (size_t(1) << 16))
	{
		std::vector<mpz_class> acc(box);
		std::vector<char> used(box, 0);
		for (auto const &s : a.terms())
			for (auto const &t : b.terms())
			{
				size_t idx = size_t(s.eq + t.eq) * W + (s.ec + t.ec);
				mpz_addmul(acc[idx].get_mpz_t(), s.k.get_mpz_t(), t.k.get_mpz_t());
				used[idx] = 1;
			}
		for (size_t idx = 0; idx < box; ++idx)
			if (used[idx] && acc[idx] != 0)
				out.push_back({uint32_t(idx / W), uint32_t(idx % W), std::move(acc[idx])});
	}
	else
	{
		out.reserve(a.size() * b.size());
		for (auto const &s : a.terms())
			for (auto const &t : b.terms())
				out.push_back({s.eq + t.eq, s.ec + t.ec, s.k * t.k});
	}
	return IntPoly::from_terms(std::move(out));
}

std::optional<IntPoly> IntPoly::divide(IntPoly const &b) const
{
	if (b.is_zero())
		throw DivisionByZero();
	if (is_zero())
		return IntPoly();
	if (b.is_monomial())
	{
		auto const &t = b.lead();
		IntPoly r;
		r.terms_.reserve(terms_.size());
		for (auto const &s : terms_)
		{
			if (s.eq < t.eq || s.ec < t.ec ||
			    !mpz_divisible_p(s.k.get_mpz_t(), t.k.get_mpz_t()))
				return std::nullopt;
			Term u{s.eq - t.eq, s.ec - t.ec, 0};
			mpz_divexact(u.k.get_mpz_t(), s.k.get_mpz_t(), t.k.get_mpz_t());
			r.terms_.push_back(std::move(u));
		}
		return r;
	}
	uint32_t Q = deg_q(), C = deg_c();
	uint32_t bq = b.deg_q(), bc = b.deg_c();
	if (bq > Q || bc > C)
		return std::nullopt;

	// lex order with q major: the leading term of b has maximal eq, then ec
	Term const *lt = &b.terms_[0];
	for (auto const &t : b.terms_)
		if (t.eq > lt->eq || (t.eq == lt->eq && t.ec > lt->ec))
			lt = &t;

	size_t W = size_t(C) + 1;
	std::vector<mpz_class> rem((size_t(Q) + 1) * W);
	for (auto const &t : terms_)
		rem[size_t(t.eq) * W + t.ec] = t.k;

	std::vector<Term> quot;
	mpz_class f;
	for (int64_t i = Q; i >= 0; --i)
		for (int64_t j = C; j >= 0; --j)
		{
			mpz_class &r = rem[size_t(i) * W + size_t(j)];
			if (r == 0)
				continue;
			if (i < int64_t(lt->eq) || j < int64_t(lt->ec))
				return std::nullopt;
			uint32_t uq = uint32_t(i) - lt->eq, uc = uint32_t(j) - lt->ec;
			if (uq > Q - bq || uc > C - bc)
				return std::nullopt;
			if (!mpz_divisible_p(r.get_mpz_t(), lt->k.get_mpz_t()))
				return std::nullopt;
			mpz_divexact(f.get_mpz_t(), r.get_mpz_t(), lt->k.get_mpz_t());
			for (auto const &t : b.terms_)
			{
				mpz_class &x = rem[size_t(uq + t.eq) * W + (uc + t.ec)];
				mpz_submul(x.get_mpz_t(), f.get_mpz_t(), t.k.get_mpz_t());
			}
			quot.push_back({uq, uc, f});
		}
	return from_terms(std::move(quot));
}

mpq_class IntPoly::eval(mpq_class const &q0, mpq_class const &c0) const
{
	mpq_class r = 0, a, b;
	for (auto const &t : terms_)
	{
		mpz_pow_ui(a.get_num_mpz_t(), q0.get_num_mpz_t(), t.eq);
		mpz_pow_ui(a.get_den_mpz_t(), q0.get_den_mpz_t(), t.eq);
		mpz_pow_ui(b.get_num_mpz_t(), c0.get_num_mpz_t(), t.ec);
		mpz_pow_ui(b.get_den_mpz_t(), c0.get_den_mpz_t(), t.ec);
		a.canonicalize();
		b.canonicalize();
		r += a * b * t.k;
	}
	return r;
}

IntPoly IntPoly::subs_q1() const
{
	std::vector<Term> out;
	for (auto const &t : terms_)
		out.push_back({0, t.ec, t.k});
	return from_terms(std::move(out));
}

bool IntPoly::operator==(IntPoly const &b) const
{
	if (terms_.size() != b.terms_.size())
		return false;
	for (size_t i = 0; i < terms_.size(); ++i)
		if (terms_[i].eq != b.terms_[i].eq || terms_[i].ec != b.terms_[i].ec ||
		    terms_[i].k != b.terms_[i].k)
			return false;
	return true;
}

std::string IntPoly::str() const
{
	if (terms_.empty())
		return "0";
	std::string s;
	for (size_t i = 0; i < terms_.size(); ++i)
	{
		auto const &t = terms_[i];
		bool neg = t.k < 0;
		if (i == 0)
			s += neg ? "-" : "";
		else
			s += neg ? " - " : " + ";
		mpz_class a = abs(t.k);
		bool constant = t.eq == 0 && t.ec == 0;
		bool have = false;
		if (a != 1 || constant)
		{
			s += a.get_str();
			have = true;
		}
		append_monomial(s, t.eq, t.ec, have);
	}
	return s;
}

} // namespace qons
