// gcd in Z[q, c]: heuristic evaluation/interpolation with a primitive
// remainder sequence fallback.

#include "qonsager/intpoly.hpp"

#include <algorithm>
#include <tuple>

namespace qons {

namespace {

using UPoly = std::vector<mpz_class>; // dense, index = exponent, trimmed

void trim(UPoly &a)
{
	while (!a.empty() && a.back() == 0)
		a.pop_back();
}

int deg(UPoly const &a)
{
	return int(a.size()) - 1;
}

mpz_class content(UPoly const &a)
{
	mpz_class g = 0;
	for (auto const &x : a)
		mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
	return g;
}

UPoly divexact(UPoly a, mpz_class const &k)
{
	for (auto &x : a)
		mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t());
	return a;
}

UPoly scale(UPoly a, mpz_class const &k)
{
	if (k == 0)
		return {};
	for (auto &x : a)
		x *= k;
	return a;
}

UPoly sub(UPoly a, UPoly const &b)
{
	if (a.size() < b.size())
		a.resize(b.size());
	for (size_t i = 0; i < b.size(); ++i)
		a[i] -= b[i];
	trim(a);
	return a;
}

UPoly mul(UPoly const &a, UPoly const &b)
{
	if (a.empty() || b.empty())
		return {};
	UPoly r(a.size() + b.size() - 1);
	for (size_t i = 0; i < a.size(); ++i)
		if (a[i] != 0)
			for (size_t j = 0; j < b.size(); ++j)
				mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
	trim(r);
	return r;
}

mpz_class eval(UPoly const &a, mpz_class const &x)
{
	mpz_class r = 0;
	for (size_t i = a.size(); i-- > 0;)
		r = r * x + a[i];
	return r;
}

mpz_class max_norm(UPoly const &a)
{
	mpz_class m = 0;
	for (auto const &x : a)
		if (abs(x) > m)
			m = abs(x);
	return m;
}

std::optional<UPoly> divide(UPoly r, UPoly const &b)
{
	if (r.empty())
		return UPoly{};
	if (deg(r) < deg(b))
		return std::nullopt;
	UPoly q(r.size() - b.size() + 1);
	mpz_class f;
	for (int i = deg(r); i >= deg(b); --i)
	{
		if (r[i] == 0)
			continue;
		if (!mpz_divisible_p(r[i].get_mpz_t(), b.back().get_mpz_t()))
			return std::nullopt;
		mpz_divexact(f.get_mpz_t(), r[i].get_mpz_t(), b.back().get_mpz_t());
		int s = i - deg(b);
		for (size_t j = 0; j < b.size(); ++j)
			mpz_submul(r[s + j].get_mpz_t(), f.get_mpz_t(), b[j].get_mpz_t());
		q[s] = f;
	}
	for (auto const &x : r)
		if (x != 0)
			return std::nullopt;
	trim(q);
	return q;
}

UPoly primitive(UPoly a)
{
	if (a.empty())
		return a;
	mpz_class g = content(a);
	if (a.back() < 0)
		g = -g;
	return divexact(std::move(a), g);
}

// pseudo-remainder of a by b
UPoly prem(UPoly a, UPoly const &b)
{
	while (!a.empty() && deg(a) >= deg(b))
	{
		mpz_class la = a.back();
		int d = deg(a) - deg(b);
		a = scale(std::move(a), b.back());
		UPoly t(d, 0);
		for (auto const &x : b)
			t.push_back(x * la);
		a = sub(std::move(a), t);
	}
	return a;
}

UPoly gcd_prs_uni(UPoly a, UPoly b)
{
	if (a.empty() || b.empty())
	{
		UPoly r = a.empty() ? std::move(b) : std::move(a);
		if (!r.empty() && r.back() < 0)
			r = scale(std::move(r), -1);
		return r;
	}
	mpz_class g;
	mpz_gcd(g.get_mpz_t(), content(a).get_mpz_t(), content(b).get_mpz_t());
	a = primitive(std::move(a));
	b = primitive(std::move(b));
	if (deg(a) < deg(b))
		std::swap(a, b);
	while (!b.empty())
	{
		UPoly r = prem(a, b);
		a = std::move(b);
		b = primitive(std::move(r));
	}
	return scale(primitive(std::move(a)), g);
}

// symmetric base-x digits of h, lowest first
UPoly interpolate_int(mpz_class h, mpz_class const &x)
{
	UPoly f;
	mpz_class half = x / 2, g;
	while (h != 0)
	{
		mpz_fdiv_r(g.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
		if (g > half)
			g -= x;
		f.push_back(g);
		h -= g;
		mpz_divexact(h.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
	}
	return f;
}

mpz_class next_point(mpz_class const &x)
{
	mpz_class s = sqrt(sqrt(x));
	return 73794 * x * s / 27011;
}

mpz_class initial_point(mpz_class const &fn, mpz_class const &gn,
                        mpz_class const &flc, mpz_class const &gln, int extra)
{
	mpz_class B = 2 * std::min(fn, gn) + 29;
	mpz_class x = std::min(B, mpz_class(99 * sqrt(B)));
	mpz_class y = 2 * std::min(mpz_class(fn / abs(flc)), mpz_class(gn / abs(gln))) + extra;
	return std::max(x, y);
}

constexpr int heuristic_tries = 6;

struct UniGcd
{
	UPoly h, cff, cfg;
};

// heuristic gcd of univariate polynomials over Z, with cofactors
std::optional<UniGcd> heu_uni(UPoly f, UPoly g)
{
	mpz_class cf = content(f), cg = content(g), cgcd;
	mpz_gcd(cgcd.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
	f = divexact(std::move(f), cgcd);
	g = divexact(std::move(g), cgcd);
	if (deg(f) == 0 || deg(g) == 0)
		return UniGcd{{cgcd}, f, g};

	mpz_class x = initial_point(max_norm(f), max_norm(g), f.back(), g.back(), 2);
	for (int i = 0; i < heuristic_tries; ++i, x = next_point(x))
	{
		mpz_class ff = eval(f, x), gg = eval(g, x);
		if (ff == 0 || gg == 0)
			continue;
		mpz_class h;
		mpz_gcd(h.get_mpz_t(), ff.get_mpz_t(), gg.get_mpz_t());
		mpz_class cff = ff / h, cfg = gg / h;

		UPoly hp = primitive(interpolate_int(h, x));
		if (!hp.empty())
			if (auto a = divide(f, hp))
				if (auto b = divide(g, hp))
					return UniGcd{scale(hp, cgcd), *a, *b};
		UPoly fp = interpolate_int(cff, x);
		if (!fp.empty())
			if (auto hh = divide(f, fp))
				if (!hh->empty())
					if (auto b = divide(g, *hh))
						return UniGcd{scale(*hh, cgcd), fp, *b};
		UPoly gp = interpolate_int(cfg, x);
		if (!gp.empty())
			if (auto hh = divide(g, gp))
				if (!hh->empty())
					if (auto a = divide(f, *hh))
						return UniGcd{scale(*hh, cgcd), *a, gp};
	}
	return std::nullopt;
}

UPoly gcd_uni(UPoly const &a, UPoly const &b)
{
	if (a.empty() || b.empty())
		return gcd_prs_uni(a, b);
	if (auto r = heu_uni(a, b))
	{
		UPoly h = std::move(r->h);
		if (h.back() < 0)
			h = scale(std::move(h), -1);
		return h;
	}
	return gcd_prs_uni(a, b);
}

// Z[q,c] as polynomials in the variable `major` with coefficients in the other
// variable; index = exponent of the major variable
using RPoly = std::vector<UPoly>;

RPoly to_rpoly(IntPoly const &p, bool q_major)
{
	RPoly r;
	for (auto const &t : p.terms())
	{
		uint32_t i = q_major ? t.eq : t.ec, j = q_major ? t.ec : t.eq;
		if (r.size() <= i)
			r.resize(i + 1);
		if (r[i].size() <= j)
			r[i].resize(j + 1);
		r[i][j] = t.k;
	}
	return r;
}

IntPoly from_rpoly(RPoly const &r, bool q_major)
{
	std::vector<Term> out;
	for (uint32_t i = 0; i < r.size(); ++i)
		for (uint32_t j = 0; j < r[i].size(); ++j)
			if (r[i][j] != 0)
				out.push_back(q_major ? Term{i, j, r[i][j]} : Term{j, i, r[i][j]});
	return IntPoly::from_terms(std::move(out));
}

IntPoly normalize_sign(IntPoly p)
{
	if (!p.is_zero() && p.lead().k < 0)
		return -p;
	return p;
}

IntPoly primitive(IntPoly const &p)
{
	if (p.is_zero())
		return p;
	return normalize_sign(p.divexact(p.content()));
}

// bivariate heuristic gcd of primitive polynomials: evaluate c, recurse into
// the univariate heuristic in q, interpolate the c-coefficients
std::optional<IntPoly> heu_biv(IntPoly const &f, IntPoly const &g)
{
	RPoly F = to_rpoly(f, false), G = to_rpoly(g, false);
	auto norm = [](RPoly const &P) {
		mpz_class m = 0;
		for (auto const &u : P)
			m = std::max(m, max_norm(u));
		return m;
	};
	auto ground_lc = [](RPoly const &P) {
		for (size_t i = P.size(); i-- > 0;)
			if (!P[i].empty())
				return P[i].back();
		return mpz_class(1);
	};
	auto eval_c = [](RPoly const &P, mpz_class const &x) {
		UPoly r;
		for (size_t i = P.size(); i-- > 0;)
		{
			r = scale(std::move(r), x);
			if (r.size() < P[i].size())
				r.resize(P[i].size());
			for (size_t j = 0; j < P[i].size(); ++j)
				r[j] += P[i][j];
			trim(r);
		}
		return r;
	};
	auto interpolate = [](UPoly const &h, mpz_class const &x) {
		std::vector<Term> out;
		for (uint32_t j = 0; j < h.size(); ++j)
		{
			UPoly digits = interpolate_int(h[j], x);
			for (uint32_t i = 0; i < digits.size(); ++i)
				if (digits[i] != 0)
					out.push_back({j, i, digits[i]});
		}
		return IntPoly::from_terms(std::move(out));
	};

	mpz_class x = initial_point(norm(F), norm(G), ground_lc(F), ground_lc(G), 4);
	for (int i = 0; i < heuristic_tries; ++i, x = next_point(x))
	{
		UPoly ff = eval_c(F, x), gg = eval_c(G, x);
		if (ff.empty() || gg.empty())
			continue;
		auto r = heu_uni(ff, gg);
		if (!r)
			continue;
		IntPoly h = primitive(interpolate(r->h, x));
		if (!h.is_zero())
			if (f.divide(h) && g.divide(h))
				return h;
		IntPoly cf = interpolate(r->cff, x);
		if (!cf.is_zero())
			if (auto hh = f.divide(cf); hh && !hh->is_zero())
				if (g.divide(*hh))
					return primitive(*hh);
		IntPoly cg = interpolate(r->cfg, x);
		if (!cg.is_zero())
			if (auto hh = g.divide(cg); hh && !hh->is_zero())
				if (f.divide(*hh))
					return primitive(*hh);
	}
	return std::nullopt;
}

// primitive PRS in Z[c][q]
IntPoly prs_biv(IntPoly const &a, IntPoly const &b)
{
	RPoly A = to_rpoly(a, true), B = to_rpoly(b, true);
	auto cont = [](RPoly const &P) {
		UPoly g;
		for (auto const &u : P)
			if (!u.empty())
				g = g.empty() ? u : gcd_uni(g, u);
		if (!g.empty() && g.back() < 0)
			g = scale(std::move(g), -1);
		return g;
	};
	auto pp = [](RPoly P, UPoly const &g) {
		for (auto &u : P)
			if (!u.empty())
				u = *divide(u, g);
		return P;
	};
	auto rtrim = [](RPoly &P) {
		while (!P.empty() && P.back().empty())
			P.pop_back();
	};
	UPoly ca = cont(A), cb = cont(B);
	UPoly cg = gcd_uni(ca, cb);
	A = pp(std::move(A), ca);
	B = pp(std::move(B), cb);
	if (A.size() < B.size())
		std::swap(A, B);
	while (!B.empty())
	{
		// pseudo-remainder of A by B over Z[c]
		RPoly R = A;
		UPoly const &lb = B.back();
		while (!R.empty() && R.size() >= B.size())
		{
			UPoly lr = R.back();
			size_t d = R.size() - B.size();
			for (auto &u : R)
				u = mul(u, lb);
			for (size_t j = 0; j < B.size(); ++j)
				R[d + j] = sub(std::move(R[d + j]), mul(lr, B[j]));
			rtrim(R);
		}
		A = std::move(B);
		if (R.empty())
			B.clear();
		else
			B = pp(R, cont(R));
	}
	A = pp(A, cont(A));
	for (auto &u : A)
		u = mul(u, cg);
	return normalize_sign(from_rpoly(A, true));
}

} // namespace

IntPoly gcd_prs(IntPoly const &a, IntPoly const &b)
{
	if (a.is_zero())
		return normalize_sign(b);
	if (b.is_zero())
		return normalize_sign(a);
	return prs_biv(a, b);
}

std::optional<IntPoly> gcd_heuristic(IntPoly const &a, IntPoly const &b)
{
	if (a.is_zero())
		return normalize_sign(b);
	if (b.is_zero())
		return normalize_sign(a);
	mpz_class ca = a.content(), cb = b.content(), g;
	mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
	auto h = heu_biv(a.divexact(ca), b.divexact(cb));
	if (!h)
		return std::nullopt;
	return *h * g;
}

IntPoly gcd(IntPoly const &a, IntPoly const &b)
{
	if (a.is_zero())
		return normalize_sign(b);
	if (b.is_zero())
		return normalize_sign(a);
	mpz_class g;
	if (a.is_constant() || b.is_constant())
	{
		mpz_gcd(g.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
		return IntPoly(g);
	}
	mpz_gcd(g.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
	uint32_t mq = std::min(a.min_q(), b.min_q());
	uint32_t mc = std::min(a.min_c(), b.min_c());
	if (a.is_monomial() || b.is_monomial())
		return IntPoly::monomial(g, mq, mc);
	if (a == b || a == -b)
		return normalize_sign(a);

	// strip integer content and monomial factors
	IntPoly f = a.div_monomial(a.min_q(), a.min_c());
	IntPoly h = b.div_monomial(b.min_q(), b.min_c());
	f = f.divexact(f.content());
	h = h.divexact(h.content());
	IntPoly r;
	if (f.is_constant() || h.is_constant())
		r = IntPoly(1);
	else if (f == h || f == -h)
		r = normalize_sign(f);
	else if (auto hh = heu_biv(f, h))
		r = *hh;
	else
		r = prs_biv(f, h);
	return (r * g).mul_monomial(mq, mc);
}

} // namespace qons
