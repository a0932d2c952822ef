#include "qonsager/pbw.hpp"
#include "qonsager/errors.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace qons {

namespace {

std::pair<int, int> rank_key(Root const &r)
{
	switch (r.kind)
	{
	case RootKind::real0:
		return {0, r.n};
	case RootKind::imaginary:
		return {1, -r.n};
	default:
		return {2, -r.n};
	}
}

} // namespace

std::strong_ordering root_compare(Root const &a, Root const &b)
{
	return rank_key(a) <=> rank_key(b);
}

PBWMonomial PBWMonomial::from_roots(std::vector<Root> roots)
{
	for (size_t i = 1; i < roots.size(); ++i)
		if (root_compare(roots[i - 1], roots[i]) > 0)
			throw std::invalid_argument("monomial is not ordered: " + roots[i - 1].str() +
			                            " before " + roots[i].str());
	PBWMonomial m;
	m.roots_ = std::move(roots);
	return m;
}

std::vector<std::pair<Root, int>> PBWMonomial::factors() const
{
	std::vector<std::pair<Root, int>> out;
	for (Root const &r : roots_)
	{
		if (!out.empty() && out.back().first == r)
			++out.back().second;
		else
			out.emplace_back(r, 1);
	}
	return out;
}

int PBWMonomial::height() const
{
	int h = 0;
	for (Root const &r : roots_)
		h += r.height();
	return h;
}

std::string PBWMonomial::str() const
{
	std::string s;
	for (auto const &[r, e] : factors())
	{
		if (!s.empty())
			s += "*";
		s += r.str();
		if (e > 1)
			s += "^" + std::to_string(e);
	}
	return s;
}

bool PBWOrder::operator()(PBWMonomial const &a, PBWMonomial const &b) const
{
	int ha = a.height(), hb = b.height();
	if (ha != hb)
		return ha > hb;
	auto const &x = a.roots();
	auto const &y = b.roots();
	return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end(),
	                                              root_compare) < 0;
}

PBWElement::PBWElement(Scalar const &s)
{
	if (!s.is_zero())
		terms_.emplace(PBWMonomial(), s);
}

PBWElement::PBWElement(PBWMonomial const &m, Scalar const &s)
{
	if (!s.is_zero())
		terms_.emplace(m, s);
}

int PBWElement::height() const
{
	int h = -1;
	for (auto const &[m, s] : terms_)
		h = std::max(h, m.height());
	return h;
}

Scalar PBWElement::coeff(PBWMonomial const &m) const
{
	auto it = terms_.find(m);
	return it == terms_.end() ? Scalar() : it->second;
}

PBWElement PBWElement::operator-() const
{
	PBWElement r = *this;
	for (auto &[m, s] : r.terms_)
		s = -s;
	return r;
}

PBWElement &PBWElement::operator+=(PBWElement const &b)
{
	for (auto const &[m, s] : b.terms_)
	{
		auto [it, fresh] = terms_.try_emplace(m, s);
		if (!fresh)
		{
			it->second += s;
			if (it->second.is_zero())
				terms_.erase(it);
		}
	}
	return *this;
}

PBWElement &PBWElement::operator-=(PBWElement const &b)
{
	return *this += -b;
}

PBWElement operator*(Scalar const &s, PBWElement const &x)
{
	if (s.is_zero())
		return PBWElement();
	PBWElement r = x;
	for (auto &[m, t] : r.terms_)
		t = s * t;
	return r;
}

PBWElement operator*(PBWElement const &x, PBWElement const &y)
{
	return pbw_multiply(x, y);
}

std::string PBWElement::str() const
{
	if (terms_.empty())
		return "0";
	std::string s;
	for (auto const &[m, k] : terms_)
		append_term(s, k, m.str());
	return s;
}

namespace {

Scalar qp(long n)
{
	return Scalar::q_pow(n);
}

// q^2 - q^-2
Scalar const &tq()
{
	static Scalar const s = qp(2) - qp(-2);
	return s;
}

// c [2]_q
Scalar const &c2()
{
	static Scalar const s = Scalar::c() * qint(2);
	return s;
}

PBWElement a0(int n)
{
	return PBWElement(Root::real0(n));
}

PBWElement a1(int n)
{
	return PBWElement(Root::real1(n));
}

PBWElement im(int m)
{
	return PBWElement(Root::imaginary(m));
}

// product whose concatenation is already ordered
PBWElement concat(PBWElement const &x, PBWElement const &y)
{
	PBWElement r;
	for (auto const &[u, s] : x.terms())
		for (auto const &[v, t] : y.terms())
		{
			std::vector<Root> w = u.roots();
			w.insert(w.end(), v.roots().begin(), v.roots().end());
			r += PBWElement(PBWMonomial::from_roots(std::move(w)), s * t);
		}
	return r;
}

PBWElement pair(Root const &a, Root const &b)
{
	return PBWElement(PBWMonomial::from_roots({a, b}));
}

// sum_{p=1}^{[(m-1)/2]} q^{-2(p-1)} B_{(m-2p)d}
PBWElement imaginary_sum(int m)
{
	PBWElement r;
	for (int p = 1; p <= (m - 1) / 2; ++p)
		r += qp(-2 * (p - 1)) * im(m - 2 * p);
	return r;
}

PBWElement imaginary_tail(int m)
{
	return -(qp(-2) - 1) * imaginary_sum(m);
}

void check_nonnegative(int k, char const *what)
{
	if (k < 0)
		throw std::invalid_argument(std::string(what) + " must be nonnegative");
}

void check_positive(int k, char const *what)
{
	if (k < 1)
		throw std::invalid_argument(std::string(what) + " must be positive");
}

} // namespace

Scalar coeff_a(int p, int m)
{
	if (p < 1 || 2 * p > m)
		throw std::invalid_argument("coeff_a needs 1 <= p <= m/2");
	if (m % 2 == 0 && 2 * p == m)
		return qp(2 - m);
	return qp(-2 * (p - 1)) * (1 + qp(-2));
}

Scalar coeff_b(int p, int m)
{
	if (p < 1 || p > m)
		throw std::invalid_argument("coeff_b needs 1 <= p <= m");
	if (p == m)
		return c2() * qp(-2 * (m - 1));
	return -(qp(4) - 1) * qp(-2 * p);
}

PBWElement c_ordered(int m)
{
	PBWElement r = -imaginary_sum(m);
	for (int p = 1; 2 * p <= m; ++p)
		r += coeff_a(p, m) * pair(Root::real1(m - p - 1), Root::real1(p - 1));
	return r;
}

PBWElement d_ordered(int m)
{
	PBWElement r = -imaginary_sum(m);
	for (int p = 1; 2 * p <= m; ++p)
		r += coeff_a(p, m) * pair(Root::real0(p - 1), Root::real0(m - p - 1));
	return r;
}

PBWElement q_commutator_real1(int r, int m)
{
	check_nonnegative(r, "r");
	check_positive(m, "m");
	PBWElement x = -im(m) + imaginary_tail(m);
	for (int p = 1; 2 * p <= m; ++p)
		x += (qp(-2) - 1) * coeff_a(p, m) * pair(Root::real1(m - p + r), Root::real1(p + r));
	return x;
}

PBWElement q_commutator_real0(int r, int m)
{
	check_nonnegative(r, "r");
	check_positive(m, "m");
	PBWElement x = -im(m) + imaginary_tail(m);
	for (int p = 1; 2 * p <= m; ++p)
		x += (qp(-2) - 1) * coeff_a(p, m) * pair(Root::real0(p + r), Root::real0(m - p + r));
	return x;
}

PBWElement q_commutator_mixed(int r, int s)
{
	check_nonnegative(r, "r");
	check_nonnegative(s, "s");
	int k0 = std::min(r, s);
	PBWElement x = -im(r + s + 1);
	for (int k = 0; k < k0; ++k)
		x -= (qp(2) - 1) * qp(2 * k) * im(r + s - 1 - 2 * k);
	if (r <= s)
	{
		for (int k = 0; k < r; ++k)
			x -= tq() * qp(2 * (r - 1 - k)) * pair(Root::real0(k), Root::real1(s - r + k));
		x += (qp(-2) - 1) * qp(2 * r) * c_ordered(s - r + 1);
	}
	else
	{
		for (int k = 0; k < s; ++k)
			x -= tq() * qp(2 * (s - 1 - k)) * pair(Root::real0(r - s + k), Root::real1(k));
		x += (qp(-2) - 1) * qp(2 * s) * d_ordered(r - s + 1);
	}
	return x;
}

PBWElement commutator_real1_imag(int p, int m)
{
	check_nonnegative(p, "p");
	check_positive(m, "m");
	Scalar const &t = tq();
	PBWElement x;
	if (p <= m - 1)
	{
		PBWElement lead = qp(-2 * (m - 1)) * a1(m + p) -
		                  qp(-2 * (m - 2 * p - 1)) * a0(m - p - 1);
		for (int h = 0; h < p; ++h)
			lead += t * qp(-2 * (m - 2 * p + 2 * h)) * a1(m - p + 2 * h);
		x = c2() * lead;
		for (int l = 1; l <= p; ++l)
		{
			PBWElement in = qp(-2 * (l - 1)) * a1(l + p) - qp(2 * (l - 1)) * a1(p - l);
			for (int h = 1; h < l; ++h)
				in += t * qp(-2 * (l - 2 * h)) * a1(l + p - 2 * h);
			x -= t * concat(im(m - l), in);
		}
		for (int l = p + 1; l < m; ++l)
		{
			PBWElement in = qp(-2 * (l - 1)) * a1(l + p);
			for (int h = 1; h <= p; ++h)
				in += t * qp(-2 * (l - 2 * h)) * a1(l + p - 2 * h);
			x -= t * concat(im(m - l), in);
			x += t * qp(-2 * (l - 2 * p - 1)) * pair(Root::real0(l - p - 1), Root::imaginary(m - l));
		}
	}
	else
	{
		PBWElement lead = qp(-2 * (m - 1)) * a1(p + m) - qp(2 * (m - 1)) * a1(p - m);
		for (int h = 0; h <= m - 2; ++h)
			lead += t * qp(2 * (m - 2 - 2 * h)) * a1(p - m + 2 + 2 * h);
		x = c2() * lead;
		for (int l = 1; l < m; ++l)
		{
			PBWElement in = qp(-2 * (l - 1)) * a1(p + l) - qp(2 * (l - 1)) * a1(p - l);
			for (int h = 1; h < l; ++h)
				in += t * qp(-2 * (l - 2 * h)) * a1(p + l - 2 * h);
			x -= t * concat(im(m - l), in);
		}
	}
	return x;
}

PBWElement commutator_imag_real0(int m, int p)
{
	check_positive(m, "m");
	check_nonnegative(p, "p");
	Scalar const &t = tq();
	PBWElement x;
	if (p <= m - 1)
	{
		PBWElement lead = qp(-2 * (m - 1)) * a0(m + p) -
		                  qp(-2 * (m - 2 * p - 1)) * a1(m - p - 1);
		for (int h = 0; h < p; ++h)
			lead += t * qp(-2 * (m - 2 * p + 2 * h)) * a0(m - p + 2 * h);
		x = c2() * lead;
		for (int l = 1; l <= p; ++l)
		{
			PBWElement in = qp(-2 * (l - 1)) * a0(l + p) - qp(2 * (l - 1)) * a0(p - l);
			for (int h = 1; h < l; ++h)
				in += t * qp(-2 * (l - 2 * h)) * a0(l + p - 2 * h);
			x -= t * concat(in, im(m - l));
		}
		for (int l = p + 1; l < m; ++l)
		{
			PBWElement in = qp(-2 * (l - 1)) * a0(l + p);
			for (int h = 1; h <= p; ++h)
				in += t * qp(-2 * (l - 2 * h)) * a0(l + p - 2 * h);
			x -= t * concat(in, im(m - l));
			x += t * qp(-2 * (l - 2 * p - 1)) * pair(Root::imaginary(m - l), Root::real1(l - p - 1));
		}
	}
	else
	{
		PBWElement lead = qp(-2 * (m - 1)) * a0(p + m) - qp(2 * (m - 1)) * a0(p - m);
		for (int h = 0; h <= m - 2; ++h)
			lead += t * qp(2 * (m - 2 - 2 * h)) * a0(p - m + 2 + 2 * h);
		x = c2() * lead;
		for (int l = 1; l < m; ++l)
		{
			PBWElement in = qp(-2 * (l - 1)) * a0(p + l) - qp(2 * (l - 1)) * a0(p - l);
			for (int h = 1; h < l; ++h)
				in += t * qp(-2 * (l - 2 * h)) * a0(p + l - 2 * h);
			x -= t * concat(in, im(m - l));
		}
	}
	return x;
}

PBWElement correction_real(int r, int m)
{
	return q_commutator_real1(r, m) + im(m);
}

PBWElement correction_imag(int p, int m, int i)
{
	if (i != 0 && i != 1)
		throw std::invalid_argument("family index must be 0 or 1");
	Family f = i == 0 ? Family::a0 : Family::a1;
	PBWElement comm = i == 0 ? commutator_imag_real0(m, p) : -commutator_real1_imag(p, m);
	PBWElement lead = PBWElement(normalize_root(f, p + m)) -
	                  qp(4 * std::min(p, m - 1)) * PBWElement(normalize_root(f, p - m));
	Scalar sign = i == 0 ? Scalar(1) : Scalar(-1);
	return comm - sign * c2() * qp(-2 * (m - 1)) * lead;
}

namespace {

struct RootPairHash
{
	size_t operator()(std::pair<Root, Root> const &p) const
	{
		auto h = [](Root const &r) { return size_t(r.kind) * 1000003u + size_t(r.n); };
		return h(p.first) * 0x9e3779b97f4a7c15ull ^ h(p.second);
	}
};

struct StraightenCache
{
	std::shared_mutex mu;
	std::unordered_map<std::pair<Root, Root>, PBWElement, RootPairHash> map;
};

StraightenCache &straighten_cache()
{
	static StraightenCache c;
	return c;
}

PBWElement straighten_uncached(Root const &g, Root const &h)
{
	if (g == h)
		return pair(g, h);
	PBWElement swap = pair(h, g);
	using K = RootKind;
	if (g.kind == K::real1 && h.kind == K::real1)
		return qp(-2) * swap + q_commutator_real1(g.n, h.n - g.n);
	if (g.kind == K::real0 && h.kind == K::real0)
		return qp(-2) * swap + q_commutator_real0(h.n, g.n - h.n);
	if (g.kind == K::real1 && h.kind == K::real0)
		return qp(2) * (swap - q_commutator_mixed(h.n, g.n));
	if (g.kind == K::real1 && h.kind == K::imaginary)
		return swap + commutator_real1_imag(g.n, h.n);
	if (g.kind == K::imaginary && h.kind == K::real0)
		return swap + commutator_imag_real0(g.n, h.n);
	return swap;
}

} // namespace

PBWElement straighten(Root const &g, Root const &h)
{
	if (root_compare(h, g) > 0)
		throw std::invalid_argument("straighten: " + g.str() + "*" + h.str() + " is already ordered");
	auto &c = straighten_cache();
	{
		std::shared_lock lock(c.mu);
		auto it = c.map.find({g, h});
		if (it != c.map.end())
			return it->second;
	}
	PBWElement r = straighten_uncached(g, h);
	std::unique_lock lock(c.mu);
	return c.map.emplace(std::pair{g, h}, std::move(r)).first->second;
}

namespace {

struct RootSeqHash
{
	size_t operator()(std::vector<Root> const &w) const
	{
		size_t h = w.size();
		for (Root const &r : w)
			h = h * 0x100000001b3ull ^ (size_t(r.kind) * 131u + size_t(r.n));
		return h;
	}
};

struct NormalCache
{
	std::shared_mutex mu;
	std::unordered_map<std::vector<Root>, PBWElement, RootSeqHash> map;
};

NormalCache &normal_cache()
{
	static NormalCache c;
	return c;
}

PBWElement normal_form(std::vector<Root> const &w, int depth)
{
	size_t i = 0;
	while (i + 1 < w.size() && root_compare(w[i], w[i + 1]) <= 0)
		++i;
	if (i + 1 >= w.size())
		return PBWElement(PBWMonomial::from_roots(w));
	if (depth > 4096)
		throw std::logic_error("straightening does not terminate");

	auto &c = normal_cache();
	{
		std::shared_lock lock(c.mu);
		auto it = c.map.find(w);
		if (it != c.map.end())
			return it->second;
	}
	PBWElement r, st = straighten(w[i], w[i + 1]);
	for (auto const &[m, s] : st.terms())
	{
		std::vector<Root> v(w.begin(), w.begin() + i);
		v.insert(v.end(), m.roots().begin(), m.roots().end());
		v.insert(v.end(), w.begin() + i + 2, w.end());
		r += s * normal_form(v, depth + 1);
	}
	std::unique_lock lock(c.mu);
	return c.map.emplace(w, std::move(r)).first->second;
}

} // namespace

PBWElement pbw_multiply(PBWElement const &x, PBWElement const &y)
{
	PBWElement r;
	for (auto const &[u, s] : x.terms())
		for (auto const &[v, t] : y.terms())
		{
			std::vector<Root> w = u.roots();
			w.insert(w.end(), v.roots().begin(), v.roots().end());
			r += (s * t) * normal_form(w, 0);
		}
	return r;
}

NcPoly expand_to_free(PBWElement const &x)
{
	NcPoly r;
	for (auto const &[m, s] : x.terms())
	{
		NcPoly p(Scalar(1));
		for (Root const &g : m.roots())
			p = p * root_vector(g);
		r += s * p;
	}
	return r;
}

namespace {

struct LiftCache
{
	std::shared_mutex mu;
	std::unordered_map<Word, PBWElement, WordHash> map;
};

PBWElement lift_word(Word w)
{
	if (w.len == 0)
		return PBWElement(Scalar(1));
	static LiftCache c;
	{
		std::shared_lock lock(c.mu);
		auto it = c.map.find(w);
		if (it != c.map.end())
			return it->second;
	}
	Root last = w.at(w.len - 1) == 0 ? Root::real0(0) : Root::real1(0);
	PBWElement r = pbw_multiply(lift_word(w.sub(0, w.len - 1)), PBWElement(last));
	std::unique_lock lock(c.mu);
	return c.map.emplace(w, std::move(r)).first->second;
}

} // namespace

PBWElement lift_to_pbw(NcPoly const &x)
{
	PBWElement r;
	for (auto const &[w, s] : x.terms())
		r += s * lift_word(w);
	return r;
}

std::optional<std::pair<Scalar, Scalar>> c_linear_split(Scalar const &s)
{
	if (s.den().deg_c() > 0 || s.num().deg_c() > 1)
		return std::nullopt;
	std::vector<Term> t0, t1;
	for (Term const &t : s.num().terms())
	{
		if (t.ec == 0)
			t0.push_back(t);
		else
			t1.push_back(Term{t.eq, 0, t.k});
	}
	return std::pair{Scalar(IntPoly::from_terms(std::move(t0)), s.den()),
	                 Scalar(IntPoly::from_terms(std::move(t1)), s.den())};
}

bool coefficients_in_q_minus_1(PBWElement const &x)
{
	for (auto const &[m, s] : x.terms())
	{
		auto split = c_linear_split(s);
		if (!split)
			return false;
		try
		{
			if (!vanishes_at_q1(split->first) || !vanishes_at_q1(split->second))
				return false;
		}
		catch (PoleError const &)
		{
			return false;
		}
	}
	return true;
}

namespace {

NcPoly build_damiani(Root const &g)
{
	NcPoly e0 = NcPoly::generator(0), e1 = NcPoly::generator(1);
	NcPoly ed = -(e0 * e1) + qp(-2) * (e1 * e0);
	Scalar inv = qint(2).inverse();
	switch (g.kind)
	{
	case RootKind::real0:
		if (g.n == 0)
			return e0;
		return inv * p_commutator(ed, damiani_root_vector(Root::real0(g.n - 1)));
	case RootKind::real1:
		if (g.n == 0)
			return e1;
		return inv * p_commutator(damiani_root_vector(Root::real1(g.n - 1)), ed);
	default:
	{
		NcPoly const &y = damiani_root_vector(Root::real1(g.n - 1));
		return -(e0 * y) + qp(-2) * (y * e0);
	}
	}
}

} // namespace

NcPoly damiani_root_vector(Root const &g)
{
	if (g.n < 0 || (g.kind == RootKind::imaginary && g.n < 1))
		throw std::invalid_argument("not a positive root: " + g.str());
	static std::mutex mu;
	static std::map<Root, NcPoly> cache;
	{
		std::lock_guard lock(mu);
		auto it = cache.find(g);
		if (it != cache.end())
			return it->second;
	}
	NcPoly v = build_damiani(g);
	std::lock_guard lock(mu);
	return cache.emplace(g, std::move(v)).first->second;
}

TopComponentReport check_top_component(Root const &g, RewriteSystem const &serre)
{
	if (serre.mode() != CMode::zero)
		throw std::invalid_argument("check_top_component needs the zero-mode system");
	TopComponentReport rep;
	rep.c_power = g.is_real() ? g.n : g.n - 1;
	NcPoly top = homogeneous_component(root_vector(g), g.height());
	NcPoly scaled = Scalar::c().pow(rep.c_power) * top;
	for (auto const &[w, s] : scaled.terms())
		if (s.num().deg_c() > 0 || s.den().deg_c() > 0)
		{
			rep.failure = "top component of " + g.str() + " is not c^-" +
			              std::to_string(rep.c_power) + "-homogeneous";
			rep.witness = top;
			return rep;
		}
	rep.witness = serre.reduce(scaled - damiani_root_vector(g));
	rep.pass = rep.witness.is_zero();
	if (!rep.pass)
		rep.failure = "top component differs from the Damiani vector modulo the q-Serre ideal";
	return rep;
}

namespace {

void enumerate(std::vector<Root> const &roots, size_t from, int left, std::vector<Root> &cur,
               std::vector<PBWMonomial> &out)
{
	if (left == 0)
	{
		out.push_back(PBWMonomial::from_roots(cur));
		return;
	}
	for (size_t i = from; i < roots.size(); ++i)
		if (roots[i].height() <= left)
		{
			cur.push_back(roots[i]);
			enumerate(roots, i, left - roots[i].height(), cur, out);
			cur.pop_back();
		}
}

long rank_at_point(std::vector<std::vector<std::pair<int, Scalar>>> const &rows, int cols,
                   mpq_class const &q0, mpq_class const &c0)
{
	std::vector<std::vector<mpq_class>> m(rows.size(), std::vector<mpq_class>(cols));
	for (size_t i = 0; i < rows.size(); ++i)
		for (auto const &[j, s] : rows[i])
			m[i][j] = evaluate(s, q0, c0);
	long rank = 0;
	for (int col = 0; col < cols && rank < long(m.size()); ++col)
	{
		size_t piv = rank;
		while (piv < m.size() && m[piv][col] == 0)
			++piv;
		if (piv == m.size())
			continue;
		std::swap(m[piv], m[rank]);
		for (size_t i = rank + 1; i < m.size(); ++i)
		{
			if (m[i][col] == 0)
				continue;
			mpq_class f = m[i][col] / m[rank][col];
			for (int j = col; j < cols; ++j)
				m[i][j] -= f * m[rank][j];
		}
		++rank;
	}
	return rank;
}

long rank_exact(std::vector<std::vector<std::pair<int, Scalar>>> const &rows)
{
	std::vector<std::map<int, Scalar>> m;
	for (auto const &r : rows)
		m.emplace_back(r.begin(), r.end());
	long rank = 0;
	std::vector<std::map<int, Scalar>> pivots;
	for (auto &row : m)
	{
		// eliminate against the pivots found so far
		for (auto const &p : pivots)
		{
			int col = p.begin()->first;
			auto it = row.find(col);
			if (it == row.end())
				continue;
			Scalar f = it->second / p.begin()->second;
			for (auto const &[j, s] : p)
			{
				Scalar &x = row[j];
				x -= f * s;
				if (x.is_zero())
					row.erase(j);
			}
		}
		if (row.empty())
			continue;
		pivots.push_back(std::move(row));
		std::sort(pivots.begin(), pivots.end(),
		          [](auto const &a, auto const &b) { return a.begin()->first < b.begin()->first; });
		++rank;
	}
	return rank;
}

} // namespace

std::vector<PBWMonomial> pbw_monomials(int height)
{
	std::vector<Root> roots;
	for (int n = 0; 2 * n + 1 <= height; ++n)
	{
		roots.push_back(Root::real0(n));
		roots.push_back(Root::real1(n));
	}
	for (int m = 1; 2 * m <= height; ++m)
		roots.push_back(Root::imaginary(m));
	std::sort(roots.begin(), roots.end(),
	          [](Root const &a, Root const &b) { return root_compare(a, b) < 0; });
	std::vector<PBWMonomial> out;
	std::vector<Root> cur;
	enumerate(roots, 0, height, cur, out);
	return out;
}

IndependenceReport independence_check(int max_height, RewriteSystem const &sys)
{
	if (max_height > sys.completed_degree())
		throw BoundExceeded(max_height, sys.completed_degree());
	IndependenceReport rep;
	std::map<Word, int> col;
	for (int d = 0; d <= max_height; ++d)
		for (Word w : sys.normal_words(d))
			col.emplace(w, int(col.size()));
	rep.normal_words = long(col.size());

	std::vector<std::vector<std::pair<int, Scalar>>> rows;
	for (int h = 0; h <= max_height; ++h)
		for (PBWMonomial const &m : pbw_monomials(h))
		{
			NcPoly nf = sys.reduce(expand_to_free(PBWElement(m)));
			std::vector<std::pair<int, Scalar>> row;
			for (auto const &[w, s] : nf.terms())
				row.emplace_back(col.at(w), s);
			rows.push_back(std::move(row));
		}
	rep.monomials = long(rows.size());

	// rank can only drop under specialization, so full rank at a point is a proof
	try
	{
		rep.rank = rank_at_point(rows, int(col.size()), mpq_class(7, 5), mpq_class(11, 3));
		rep.specialized = rep.rank == rep.monomials;
	}
	catch (PoleError const &)
	{
		rep.rank = 0;
	}
	if (!rep.specialized)
		rep.rank = rank_exact(rows);
	rep.pass = rep.rank == rep.monomials && rep.monomials == rep.normal_words;
	return rep;
}

} // namespace qons
