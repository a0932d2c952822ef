#include "qonsager/qonsager.hpp"
#include "qonsager/errors.hpp"

#include <mutex>
#include <stdexcept>

namespace qons {

std::string Root::str() const
{
	switch (kind)
	{
	case RootKind::real0:
		return n == 0 ? "B0" : "B(" + std::to_string(n) + ",a0)";
	case RootKind::real1:
		return n == 0 ? "B1" : "B(" + std::to_string(n) + ",a1)";
	default:
		return "B(" + std::to_string(n) + ",d)";
	}
}

Root normalize_root(Family f, int k)
{
	if (f == Family::d)
	{
		if (k <= 0)
			throw std::invalid_argument("imaginary root index must be positive, got " +
			                            std::to_string(k));
		return Root::imaginary(k);
	}
	if (k >= 0)
		return f == Family::a0 ? Root::real0(k) : Root::real1(k);
	return f == Family::a0 ? Root::real1(-k - 1) : Root::real0(-k - 1);
}

namespace {

Scalar const &q()
{
	static Scalar const s = Scalar::q();
	return s;
}

// 1/(q^2 [2]_q c)
Scalar const &t_prefactor()
{
	static Scalar const s = Scalar(1) / (q() * q() * qint(2) * Scalar::c());
	return s;
}

NcPoly g(int i)
{
	return NcPoly::generator(i);
}

// (1/(q^2[2]c))(a b^2 - q[2] b a b + q^2 b^2 a) + a
NcPoly braid_image(NcPoly const &a, NcPoly const &b)
{
	NcPoly x = a * b * b - q() * qint(2) * (b * a * b) + q() * q() * (b * b * a);
	return t_prefactor() * x + a;
}

// (1/(q^2[2]c))(b^2 a - q[2] b a b + q^2 a b^2) + a
NcPoly braid_image_inv(NcPoly const &a, NcPoly const &b)
{
	NcPoly x = b * b * a - q() * qint(2) * (b * a * b) + q() * q() * (a * b * b);
	return t_prefactor() * x + a;
}

struct Morphisms
{
	AlgebraMorphism phi{g(1), g(0)};
	AlgebraMorphism t0{g(0), braid_image(g(1), g(0))};
	AlgebraMorphism t0inv{g(0), braid_image_inv(g(1), g(0))};
	AlgebraMorphism t1{braid_image(g(0), g(1)), g(1)};
	AlgebraMorphism t1inv{braid_image_inv(g(0), g(1)), g(1)};
	AlgebraMorphism t0phi = compose(t0, phi);
};

Morphisms const &morphisms()
{
	static Morphisms const m;
	return m;
}

} // namespace

AlgebraMorphism const &named_morphism(std::string const &name)
{
	auto const &m = morphisms();
	if (name == "Phi")
		return m.phi;
	if (name == "T0")
		return m.t0;
	if (name == "T0inv")
		return m.t0inv;
	if (name == "T1")
		return m.t1;
	if (name == "T1inv")
		return m.t1inv;
	throw std::invalid_argument("unknown morphism '" + name + "'");
}

AlgebraMorphism const &t0phi()
{
	return morphisms().t0phi;
}

SymPoly::SymPoly(Scalar const &s)
{
	if (!s.is_zero())
		terms_[{}] = s;
}

SymPoly SymPoly::y(int j)
{
	SymPoly r;
	r.terms_[{j}] = 1;
	return r;
}

SymPoly SymPoly::operator-() const
{
	SymPoly r = *this;
	for (auto &[k, s] : r.terms_)
		s = -s;
	return r;
}

SymPoly &SymPoly::operator+=(SymPoly const &b)
{
	for (auto const &[k, s] : b.terms_)
	{
		auto [it, fresh] = terms_.try_emplace(k, s);
		if (!fresh)
		{
			it->second += s;
			if (it->second.is_zero())
				terms_.erase(it);
		}
	}
	return *this;
}

SymPoly &SymPoly::operator-=(SymPoly const &b)
{
	return *this += -b;
}

SymPoly operator*(SymPoly const &a, SymPoly const &b)
{
	SymPoly r;
	for (auto const &[u, s] : a.terms_)
		for (auto const &[v, t] : b.terms_)
		{
			std::vector<int> w = u;
			w.insert(w.end(), v.begin(), v.end());
			Scalar &acc = r.terms_[w];
			acc += s * t;
			if (acc.is_zero())
				r.terms_.erase(w);
		}
	return r;
}

SymPoly operator*(Scalar const &s, SymPoly const &a)
{
	if (s.is_zero())
		return SymPoly();
	SymPoly r = a;
	for (auto &[k, t] : r.terms_)
		t = s * t;
	return r;
}

SymPoly SymPoly::shift(int k) const
{
	SymPoly r;
	for (auto const &[w, s] : terms_)
	{
		std::vector<int> v = w;
		for (int &j : v)
			j -= k;
		r.terms_[v] = s;
	}
	return r;
}

NcPoly SymPoly::realize() const
{
	NcPoly r;
	for (auto const &[w, s] : terms_)
	{
		NcPoly m(Scalar(1));
		for (int j : w)
			m = m * root_vector(Root::real(j));
		r += s * m;
	}
	return r;
}

std::string SymPoly::str() const
{
	if (terms_.empty())
		return "0";
	std::string out;
	for (auto const &[w, s] : terms_)
	{
		if (!out.empty())
			out += " + ";
		out += "(" + s.str() + ")";
		for (int j : w)
			out += "*" + Root::real(j).str();
	}
	return out;
}

SymPoly commutator(SymPoly const &x, SymPoly const &y)
{
	return x * y - y * x;
}

SymPoly sym_c(int m)
{
	SymPoly r;
	for (int p = 0; p <= m - 2; ++p)
		r += SymPoly::y(p) * SymPoly::y(m - 2 - p);
	return r;
}

SymPoly sym_d(int m)
{
	SymPoly r;
	for (int p = 0; p <= m - 2; ++p)
		r += SymPoly::y(-p - 1) * SymPoly::y(-(m - p - 2) - 1);
	return r;
}

SymPoly sym_imaginary(int m)
{
	if (m < 1)
		throw std::invalid_argument("imaginary root index must be positive");
	SymPoly b0 = SymPoly::y(-1), y = SymPoly::y(m - 1);
	return -(b0 * y) + q().pow(-2) * (y * b0) + (q().pow(-2) - 1) * sym_c(m);
}

SymPoly sym_f(int n)
{
	if (n < 2)
		throw std::invalid_argument("F_n needs n >= 2");
	SymPoly x1 = SymPoly::y(-2), b0 = SymPoly::y(-1), c = sym_c(n - 1);
	return q().pow(-2) * commutator(c, x1) - commutator(sym_c(n).shift(1), b0) -
	       (q() * q() - q().pow(-2)) * (x1 * c);
}

SymPoly sym_r(int n)
{
	SymPoly r;
	for (int m = 0; m <= n - 3; ++m)
	{
		SymPoly tc = sym_c(n - m - 1).shift(1), y = SymPoly::y(m);
		r += q() * q() * (tc * y) - q().pow(-2) * (y * tc);
	}
	return r;
}

SymPoly sym_r_closed(int n)
{
	SymPoly r;
	for (int m = 0; m <= n - 3; ++m)
	{
		SymPoly b = sym_imaginary(n - m - 2), y = SymPoly::y(m - 1);
		r -= b * y + q() * q() * (y * b);
	}
	return r;
}

namespace {

struct RootCache
{
	std::mutex mu;
	std::map<Root, NcPoly> vectors;
};

RootCache &root_cache()
{
	static RootCache c;
	return c;
}

NcPoly build_root_vector(Root const &r)
{
	Scalar inv = (Scalar::c() * qint(2)).inverse();
	NcPoly const &bd = r.is_real() && r.n >= 2 ? root_vector(Root::imaginary(1)) : g(0);
	switch (r.kind)
	{
	case RootKind::real0:
		if (r.n == 0)
			return g(0);
		if (r.n == 1)
			return named_morphism("T0").image(1);
		return root_vector(Root::real0(r.n - 2)) +
		       inv * p_commutator(bd, root_vector(Root::real0(r.n - 1)));
	case RootKind::real1:
		if (r.n == 0)
			return g(1);
		if (r.n == 1)
			return named_morphism("T1inv").image(0);
		return root_vector(Root::real1(r.n - 2)) +
		       inv * p_commutator(root_vector(Root::real1(r.n - 1)), bd);
	default:
		if (r.n == 1)
			return -(g(0) * g(1)) + q().pow(-2) * (g(1) * g(0));
		return sym_imaginary(r.n).realize();
	}
}

} // namespace

NcPoly const &root_vector(Root const &r)
{
	if (r.n < 0 || (r.kind == RootKind::imaginary && r.n < 1))
		throw std::invalid_argument("not a positive root: " + r.str());
	auto &c = root_cache();
	{
		std::lock_guard lock(c.mu);
		auto it = c.vectors.find(r);
		if (it != c.vectors.end())
			return it->second;
	}
	NcPoly v = build_root_vector(r);
	if (v.degree() != r.height())
		throw std::logic_error("root vector " + r.str() + " has degree " +
		                       std::to_string(v.degree()));
	std::lock_guard lock(c.mu);
	return c.vectors.emplace(r, std::move(v)).first->second;
}

NcPoly c_element(int m)
{
	return sym_c(m).realize();
}

NcPoly d_element(int m)
{
	return sym_d(m).realize();
}

NcPoly f_element(int n)
{
	return sym_f(n).realize();
}

NcPoly r_element(int n)
{
	return sym_r(n).realize();
}

IdentityReport verify_identity(NcPoly const &lhs, NcPoly const &rhs, RewriteSystem const &sys)
{
	IdentityReport r;
	NcPoly d = lhs - rhs;
	r.degree = std::max(d.degree(), 0);
	r.terms = d.size();
	NcPoly nf = sys.reduce(d);
	r.nf_terms = nf.size();
	r.pass = nf.is_zero();
	if (!r.pass)
		r.witness = std::move(nf);
	return r;
}

} // namespace qons
