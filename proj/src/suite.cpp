#include "qonsager/suite.hpp"
#include "qonsager/classical.hpp"
#include "qonsager/errors.hpp"
#include "qonsager/pbw.hpp"
#include "qonsager/qonsager.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <stdexcept>
#include <thread>

namespace qons {

std::string to_string(ItemStatus s)
{
	switch (s)
	{
	case ItemStatus::pass:
		return "pass";
	case ItemStatus::fail:
		return "fail";
	case ItemStatus::skipped:
		return "skipped";
	default:
		return "error";
	}
}

int Suite::min_bound() const
{
	int b = 0;
	for (auto const &it : items)
		if (it.required)
			b = std::max(b, it.bound);
	return b;
}

std::vector<long> pbw_series(int n)
{
	std::vector<long> s(n + 1, 0);
	s[0] = 1;
	// one factor 1/(1-t^k) per root of height k: two real roots for odd k,
	// one imaginary root for even k
	for (int k = 1; k <= n; ++k)
		for (int copies = 0; copies < (k % 2 ? 2 : 1); ++copies)
			for (int d = k; d <= n; ++d)
				s[d] += s[d - k];
	return s;
}

namespace {

using Run = std::function<ItemOutcome(SuiteContext const &)>;

Scalar const &q()
{
	static Scalar const v = Scalar::q();
	return v;
}

Scalar const &c2()
{
	static Scalar const v = Scalar::c() * qint(2);
	return v;
}

NcPoly g(int i)
{
	return NcPoly::generator(i);
}

NcPoly X(int n)
{
	return root_vector(Root::real0(n));
}

NcPoly Y(int n)
{
	return root_vector(Root::real1(n));
}

NcPoly Bd(int m)
{
	return root_vector(Root::imaginary(m));
}

NcPoly ex(PBWElement const &x)
{
	return expand_to_free(x);
}

AlgebraMorphism const &M(std::string const &name)
{
	return named_morphism(name);
}

std::string N(int k)
{
	return std::to_string(k);
}

ItemOutcome mod_ideal(NcPoly const &lhs, NcPoly const &rhs, SuiteContext const &ctx)
{
	auto r = verify_identity(lhs, rhs, ctx.sys);
	return {r.pass, r.pass ? "" : r.witness.str()};
}

ItemOutcome exact(NcPoly const &lhs, NcPoly const &rhs)
{
	NcPoly d = lhs - rhs;
	return {d.is_zero(), d.is_zero() ? "" : d.str()};
}

ItemOutcome exact(SymPoly const &lhs, SymPoly const &rhs)
{
	SymPoly d = lhs - rhs;
	if (!d.is_zero())
		return {false, d.str()};
	return exact(lhs.realize(), rhs.realize());
}

ItemOutcome check(bool ok, std::string witness)
{
	return {ok, ok ? "" : std::move(witness)};
}

struct Builder
{
	Suite s;
	explicit Builder(std::string name) { s.name = std::move(name); }

	// checked modulo the ideal at completion degree `degree`
	void ideal(std::string id, Params p, int degree, Run f, bool required = true)
	{
		s.items.push_back({std::move(id), std::move(p), degree, degree, required, true, std::move(f)});
	}
	// checked without the ideal
	void free(std::string id, Params p, int degree, Run f)
	{
		s.items.push_back({std::move(id), std::move(p), degree, 0, true, false, std::move(f)});
	}
	// needs a completion to `bound` of a system other than the generic one
	void bounded(std::string id, Params p, int degree, int bound, Run f)
	{
		s.items.push_back({std::move(id), std::move(p), degree, bound, true, false, std::move(f)});
	}
};

// parameter ranges shared by the commutator suites and the suites reading them
std::vector<std::pair<int, int>> real_real_range()
{
	std::vector<std::pair<int, int>> out;
	for (int r = 0; 4 * r + 4 <= 12; ++r)
		for (int m = 1; 4 * r + 2 * m + 2 <= 12; ++m)
			out.emplace_back(r, m);
	return out;
}

std::vector<std::pair<int, int>> mixed_range()
{
	std::vector<std::pair<int, int>> out;
	for (int r = 0; r <= 3; ++r)
		for (int s = 0; r + s + 1 <= 4; ++s)
			out.emplace_back(r, s);
	return out;
}

// (m, p) with p <= m - 1
std::vector<std::pair<int, int>> bnd_low_range()
{
	std::vector<std::pair<int, int>> out;
	for (int m = 1; m <= 4; ++m)
		for (int p = 0; p <= m - 1; ++p)
			if (2 * m + 2 * p + 1 <= 12)
				out.emplace_back(m, p);
	return out;
}

// (m, p) with m <= p
std::vector<std::pair<int, int>> bnd_high_range()
{
	std::vector<std::pair<int, int>> out;
	for (int m = 1; m <= 3; ++m)
		for (int p = m; p <= 4; ++p)
			if (2 * m + 2 * p + 1 <= 12)
				out.emplace_back(m, p);
	return out;
}

std::vector<std::pair<int, int>> imaginary_pairs()
{
	return {{2, 1}, {3, 1}, {4, 1}, {3, 2}};
}

Suite t0_automorphism()
{
	Builder b("t0-automorphism");
	for (std::string m : {"T0", "T0inv"})
	{
		b.ideal(m + "(R0) = 0", {}, 6, [m](SuiteContext const &ctx) {
			return mod_ideal(M(m).apply(defining_relations(CMode::generic).first), NcPoly(), ctx);
		});
		b.ideal(m + "(R1) = 0", {}, 10, [m](SuiteContext const &ctx) {
			return mod_ideal(M(m).apply(defining_relations(CMode::generic).second), NcPoly(), ctx);
		});
	}
	b.ideal("T0(T0inv(B1)) = B1", {}, 5, [](SuiteContext const &ctx) {
		return mod_ideal(M("T0").apply(M("T0inv").image(1)), g(1), ctx);
	});
	b.ideal("T0inv(T0(B1)) = B1", {}, 5, [](SuiteContext const &ctx) {
		return mod_ideal(M("T0inv").apply(M("T0").image(1)), g(1), ctx);
	});
	return b.s;
}

Suite t1_bdelta()
{
	Builder b("t1-bdelta");
	b.ideal("T1(B(1,d)) = Phi(B(1,d))", {}, 4, [](SuiteContext const &ctx) {
		return mod_ideal(M("T1").apply(Bd(1)), M("Phi").apply(Bd(1)), ctx);
	});
	b.ideal("T0(Phi(B(1,d))) = B(1,d)", {}, 4, [](SuiteContext const &ctx) {
		return mod_ideal(M("T0").apply(M("Phi").apply(Bd(1))), Bd(1), ctx);
	});
	b.ideal(
	    "T0(T1(B(1,d))) = B(1,d)", {}, 10,
	    [](SuiteContext const &ctx) {
		    return mod_ideal(M("T0").apply(M("T1").apply(Bd(1))), Bd(1), ctx);
	    },
	    false);
	return b.s;
}

Suite braid_translates()
{
	Builder b("braid-translates");
	AlgebraMorphism t1p = compose(M("T1inv"), M("Phi"));
	b.ideal("(T0 Phi)(B(1,d)) = B(1,d)", {}, 4, [](SuiteContext const &ctx) {
		return mod_ideal(t0phi().apply(Bd(1)), Bd(1), ctx);
	});
	b.ideal("(T1inv Phi)(B(1,d)) = B(1,d)", {}, 4, [t1p](SuiteContext const &ctx) {
		return mod_ideal(t1p.apply(Bd(1)), Bd(1), ctx);
	});
	b.ideal("T0(B1) = B(1,a0)", {}, 3, [](SuiteContext const &ctx) {
		return mod_ideal(M("T0").apply(g(1)), X(1), ctx);
	});
	b.ideal("T0(T1(B0)) = B(2,a0)", {}, 7, [](SuiteContext const &ctx) {
		return mod_ideal(M("T0").apply(M("T1").apply(g(0))), X(2), ctx);
	});
	b.ideal("T1inv(B0) = B(1,a1)", {}, 3, [](SuiteContext const &ctx) {
		return mod_ideal(M("T1inv").apply(g(0)), Y(1), ctx);
	});
	b.ideal("T1inv(T0inv(B1)) = B(2,a1)", {}, 7, [](SuiteContext const &ctx) {
		return mod_ideal(M("T1inv").apply(M("T0inv").apply(g(1))), Y(2), ctx);
	});
	b.ideal(
	    "(T0 Phi)(B(2,a0)) = B(3,a0)", {}, 11,
	    [](SuiteContext const &ctx) {
		    return mod_ideal(t0phi().apply(ctx.sys.reduce(X(2))), X(3), ctx);
	    },
	    false);
	b.ideal(
	    "(T1inv Phi)(B(2,a1)) = B(3,a1)", {}, 11,
	    [t1p](SuiteContext const &ctx) {
		    return mod_ideal(t1p.apply(ctx.sys.reduce(Y(2))), Y(3), ctx);
	    },
	    false);
	for (int n = 1; n <= 3; ++n)
	{
		b.ideal("[B(1,d),B(n,a0)] = c[2]q(B(n+1,a0) - B(n-1,a0))", {{"n", n}}, 2 * n + 3,
		        [n](SuiteContext const &ctx) {
			        return mod_ideal(p_commutator(Bd(1), X(n)), c2() * (X(n + 1) - X(n - 1)), ctx);
		        });
		b.ideal("[B(n,a1),B(1,d)] = c[2]q(B(n+1,a1) - B(n-1,a1))", {{"n", n}}, 2 * n + 3,
		        [n](SuiteContext const &ctx) {
			        return mod_ideal(p_commutator(Y(n), Bd(1)), c2() * (Y(n + 1) - Y(n - 1)), ctx);
		        });
	}
	return b.s;
}

Suite bdelta_real()
{
	Builder b("bdelta-real");
	b.ideal("[B(1,d),B0] = c[2]q(B(1,a0) - B1)", {}, 3, [](SuiteContext const &ctx) {
		return mod_ideal(p_commutator(Bd(1), g(0)), c2() * (X(1) - g(1)), ctx);
	});
	b.ideal("[B1,B(1,d)] = c[2]q(B(1,a1) - B0)", {}, 3, [](SuiteContext const &ctx) {
		return mod_ideal(p_commutator(g(1), Bd(1)), c2() * (Y(1) - g(0)), ctx);
	});
	for (int n = 1; n <= 2; ++n)
	{
		b.ideal("[B(1,d),B(n,a0)] = c[2]q(B(n+1,a0) - B(n-1,a0))", {{"n", n}}, 2 * n + 3,
		        [n](SuiteContext const &ctx) {
			        return mod_ideal(p_commutator(Bd(1), X(n)), c2() * (X(n + 1) - X(n - 1)), ctx);
		        });
		b.ideal("[B(n,a1),B(1,d)] = c[2]q(B(n+1,a1) - B(n-1,a1))", {{"n", n}}, 2 * n + 3,
		        [n](SuiteContext const &ctx) {
			        return mod_ideal(p_commutator(Y(n), Bd(1)), c2() * (Y(n + 1) - Y(n - 1)), ctx);
		        });
	}
	return b.s;
}

Suite cm_ordered()
{
	Builder b("cm-ordered");
	for (int m = 1; m <= 6; ++m)
		b.ideal("C_m = ordered form", {{"m", m}}, std::max(2 * m - 2, 0),
		        [m](SuiteContext const &ctx) { return mod_ideal(c_element(m), ex(c_ordered(m)), ctx); });
	for (int n = 2; n <= 6; ++n)
		b.free("C_{n+1} - (T0 Phi)^-1(C_{n-1}) = B1 B(n-1,a1) + B(n-1,a1) B1", {{"n", n}}, 2 * n,
		       [n](SuiteContext const &) {
			       SymPoly y0 = SymPoly::y(0), y = SymPoly::y(n - 1);
			       return exact(sym_c(n + 1) - sym_c(n - 1).shift(-1), y0 * y + y * y0);
		       });
	return b.s;
}

Suite dm_ordered()
{
	Builder b("dm-ordered");
	for (int m = 1; m <= 6; ++m)
		b.ideal("D_m = ordered form", {{"m", m}}, std::max(2 * m - 2, 0),
		        [m](SuiteContext const &ctx) { return mod_ideal(d_element(m), ex(d_ordered(m)), ctx); });
	for (int m = 1; m <= 6; ++m)
		b.free("D_m = (T0 Phi)^(m-1)(C_m)", {{"m", m}}, std::max(2 * m - 2, 0),
		       [m](SuiteContext const &) { return exact(sym_d(m), sym_c(m).shift(m - 1)); });
	for (int m = 2; m <= 6; ++m)
		b.free("D_{m+1} - (T0 Phi)(D_{m-1}) = B0 B(m-1,a0) + B(m-1,a0) B0", {{"m", m}}, 2 * m,
		       [m](SuiteContext const &) {
			       SymPoly x0 = SymPoly::y(-1), x = SymPoly::y(-m);
			       return exact(sym_d(m + 1) - sym_d(m - 1).shift(1), x0 * x + x * x0);
		       });
	return b.s;
}

Suite real_real()
{
	Builder b("real-real");
	Scalar qm2 = q().pow(-2);
	for (auto [r, m] : real_real_range())
	{
		int deg = 4 * r + 2 * m + 2;
		b.ideal("[B(r,a1),B(r+m,a1)]_{q^-2} = -B(m,d) + ...", {{"r", r}, {"m", m}}, deg,
		        [r, m, qm2](SuiteContext const &ctx) {
			        return mod_ideal(p_commutator(Y(r), Y(r + m), qm2), ex(q_commutator_real1(r, m)),
			                         ctx);
		        });
		b.ideal("[B(r+m,a0),B(r,a0)]_{q^-2} = -B(m,d) + ...", {{"r", r}, {"m", m}}, deg,
		        [r, m, qm2](SuiteContext const &ctx) {
			        return mod_ideal(p_commutator(X(r + m), X(r), qm2), ex(q_commutator_real0(r, m)),
			                         ctx);
		        });
	}
	return b.s;
}

Suite real_real_mixed()
{
	Builder b("real-real-mixed");
	Scalar qm2 = q().pow(-2);
	for (auto [r, s] : mixed_range())
	{
		std::string form = r <= s ? " (r <= s)" : " (r >= s)";
		b.ideal("[B(r,a0),B(s,a1)]_{q^-2} = -B(r+s+1,d) + ..." + form, {{"r", r}, {"s", s}},
		        2 * r + 2 * s + 2, [r, s, qm2](SuiteContext const &ctx) {
			        return mod_ideal(p_commutator(X(r), Y(s), qm2), ex(q_commutator_mixed(r, s)), ctx);
		        });
	}
	return b.s;
}

Suite b1_bndelta()
{
	Builder b("b1-bndelta");
	for (int m = 1; m <= 4; ++m)
	{
		b.ideal("[B(m,d),B0] = b_m(B(m,a0) - B(m-1,a1)) + ...", {{"m", m}}, 2 * m + 1,
		        [m](SuiteContext const &ctx) {
			        return mod_ideal(p_commutator(Bd(m), g(0)), ex(commutator_imag_real0(m, 0)), ctx);
		        });
		b.ideal("[B1,B(m,d)] = b_m(B(m,a1) - B(m-1,a0)) + ...", {{"m", m}}, 2 * m + 1,
		        [m](SuiteContext const &ctx) {
			        return mod_ideal(p_commutator(g(1), Bd(m)), ex(commutator_real1_imag(0, m)), ctx);
		        });
	}
	return b.s;
}

Suite bnd_real(std::string name, std::vector<std::pair<int, int>> range)
{
	Builder b(std::move(name));
	for (auto [m, p] : range)
	{
		int deg = 2 * m + 2 * p + 1;
		b.ideal("[B(p,a1),B(m,d)] = c[2]q q^(-2(m-1)) B(m+p,a1) + ...", {{"m", m}, {"p", p}}, deg,
		        [m, p](SuiteContext const &ctx) {
			        return mod_ideal(p_commutator(Y(p), Bd(m)), ex(commutator_real1_imag(p, m)), ctx);
		        });
		b.ideal("[B(m,d),B(p,a0)] = c[2]q q^(-2(m-1)) B(m+p,a0) + ...", {{"m", m}, {"p", p}}, deg,
		        [m, p](SuiteContext const &ctx) {
			        return mod_ideal(p_commutator(Bd(m), X(p)), ex(commutator_imag_real0(m, p)), ctx);
		        });
	}
	return b.s;
}

Suite imaginary_commute()
{
	Builder b("imaginary-commute");
	for (auto [n, m] : imaginary_pairs())
		b.ideal("[B(n,d),B(m,d)] = 0", {{"n", n}, {"m", m}}, 2 * n + 2 * m,
		        [n, m](SuiteContext const &ctx) {
			        return mod_ideal(Bd(n) * Bd(m), Bd(m) * Bd(n), ctx);
		        });
	return b.s;
}

SymPoly sym_fn_alt(int n)
{
	SymPoly r;
	Scalar q2 = q() * q();
	for (int m = 0; m <= n - 3; ++m)
	{
		SymPoly y = SymPoly::y(m), yl = SymPoly::y(m - 1);
		SymPoly b1 = sym_imaginary(n - 1 - m), b2 = sym_imaginary(n - m - 2);
		r += y * b1 + q2 * (b1 * y);
		r -= b2 * yl + q2 * (yl * b2);
	}
	return r;
}

Suite fn_recursion()
{
	Builder b("fn-recursion");
	for (int n = 2; n <= 5; ++n)
	{
		int deg = 2 * n + 1;
		b.ideal(
		    "F_{n+1} = B1 B(n,d) + q^2 B(n,d) B1 - B(n-1,d) B0 - q^2 B0 B(n-1,d) + (T0 Phi)^-1(F_n)",
		    {{"n", n}}, deg,
		    [n](SuiteContext const &ctx) {
			    Scalar q2 = q() * q();
			    NcPoly bn = Bd(n), bm = Bd(n - 1), b1 = g(1), b0 = g(0);
			    NcPoly rhs = b1 * bn + q2 * (bn * b1) - bm * b0 - q2 * (b0 * bm) +
			                 sym_f(n).shift(-1).realize();
			    return mod_ideal(f_element(n + 1), rhs, ctx);
		    },
		    deg <= 10);
	}
	return b.s;
}

Suite rn_closed_form()
{
	Builder b("rn-closed-form");
	b.free("R_3 = -B(1,d) B0 - q^2 B0 B(1,d)", {}, 3, [](SuiteContext const &) {
		return exact(r_element(3), -(Bd(1) * g(0)) - q() * q() * (g(0) * Bd(1)));
	});
	for (int n = 1; n <= 6; ++n)
		b.free("R_n = closed form", {{"n", n}}, std::max(2 * n - 3, 0),
		       [n](SuiteContext const &) { return exact(sym_r(n), sym_r_closed(n)); });
	return b.s;
}

Suite com2()
{
	Builder b("com2");
	for (int n = 1; n <= 6; ++n)
		b.free("[(T0 Phi)(C_n),B0] = sum of commutators", {{"n", n}}, std::max(2 * n - 3, 0),
		       [n](SuiteContext const &) {
			       SymPoly lhs = commutator(sym_c(n).shift(1), SymPoly::y(-1)), rhs;
			       for (int m = 0; m <= n - 3; ++m)
			       {
				       SymPoly tc = sym_c(n - m - 1).shift(1), y = SymPoly::y(m);
				       rhs += y * tc - tc * y;
			       }
			       return exact(lhs, rhs);
		       });
	return b.s;
}

Suite fn_alt()
{
	Builder b("fn-alt");
	for (int n = 2; n <= 5; ++n)
		b.ideal("F_n = alternative formula", {{"n", n}}, 2 * n - 1, [n](SuiteContext const &ctx) {
			return mod_ideal(f_element(n), sym_fn_alt(n).realize(), ctx);
		});
	return b.s;
}

Suite lemma_ndeltadelta()
{
	Builder b("lemma-ndeltadelta");
	for (int n = 1; n <= 2; ++n)
		b.ideal("[B(n,d),B(1,d)] = c[2]q (id - T0 Phi)(B(n+1,d))", {{"n", n}}, 2 * n + 2,
		        [n](SuiteContext const &ctx) {
			        NcPoly moved = sym_imaginary(n + 1).shift(1).realize();
			        return mod_ideal(p_commutator(Bd(n), Bd(1)), c2() * (Bd(n + 1) - moved), ctx);
		        });
	for (int m = 1; m <= 3; ++m)
	{
		int deg = m == 1 ? 4 : m == 2 ? 8 : 12;
		b.ideal(
		    "(T0 Phi)(B(m,d)) = B(m,d)", {{"m", m}}, deg,
		    [m](SuiteContext const &ctx) { return mod_ideal(t0phi().apply(Bd(m)), Bd(m), ctx); },
		    m <= 2);
	}
	for (int i = 0; i <= 1; ++i)
		b.ideal("[[B(n,d),B(m,d)],B" + N(i) + "] = 0", {{"n", 2}, {"m", 1}}, 7,
		        [i](SuiteContext const &ctx) {
			        return mod_ideal(p_commutator(p_commutator(Bd(2), Bd(1)), g(i)), NcPoly(), ctx);
		        });
	return b.s;
}

Suite pbw_independence()
{
	Builder b("pbw-independence");
	auto series = pbw_series(8);
	for (int d = 0; d <= 8; ++d)
		b.ideal("normal words of degree d = generating function", {{"d", d}}, d,
		        [d, e = series[d]](SuiteContext const &ctx) {
			        long n = ctx.sys.normal_count(d);
			        return check(n == e, "normal words " + std::to_string(n) + ", expected " +
			                                 std::to_string(e));
		        });
	b.ideal("PBW monomials of height <= h are independent", {{"h", 8}}, 8,
	        [](SuiteContext const &ctx) {
		        auto r = independence_check(8, ctx.sys);
		        return check(r.pass, "rank " + std::to_string(r.rank) + " of " +
		                                 std::to_string(r.monomials) + " monomials");
	        });
	return b.s;
}

std::vector<Root> roots_of_height_at_most(int h)
{
	std::vector<Root> out;
	for (int n = 0; 2 * n + 1 <= h; ++n)
	{
		out.push_back(Root::real0(n));
		out.push_back(Root::real1(n));
	}
	for (int m = 1; 2 * m <= h; ++m)
		out.push_back(Root::imaginary(m));
	std::sort(out.begin(), out.end(),
	          [](Root const &a, Root const &b) { return root_compare(a, b) < 0; });
	return out;
}

Params root_params(Root const &r)
{
	int family = r.kind == RootKind::real0 ? 0 : r.kind == RootKind::real1 ? 1 : 2;
	return {{"family", family}, {"k", r.n}};
}

Suite top_component()
{
	Builder b("top-component");
	for (Root r : roots_of_height_at_most(7))
		b.bounded("top component of " + r.str() + " = c^-k Damiani vector", root_params(r),
		          r.height(), 7, [r](SuiteContext const &) {
			          auto rep = check_top_component(r, SystemStore::get(CMode::zero, 7));
			          return check(rep.pass, rep.failure);
		          });
	return b.s;
}

ItemOutcome q_minus_1(PBWElement const &x)
{
	for (auto const &[m, s] : x.terms())
	{
		auto split = c_linear_split(s);
		if (!split)
			return {false, (m.is_unit() ? std::string("1") : m.str()) + ": " + s.str() +
			                   " is not linear in c"};
		if (!vanishes_at_q1(split->first) || !vanishes_at_q1(split->second))
			return {false, (m.is_unit() ? std::string("1") : m.str()) + ": " + s.str()};
	}
	return {true, ""};
}

Suite theorem2_coefficients()
{
	Builder b("theorem2-coefficients");
	for (auto [r, m] : real_real_range())
	{
		b.free("correction of [B(r,a1),B(r+m,a1)]_{q^-2}", {{"r", r}, {"m", m}}, 4 * r + 2 * m + 2,
		       [r, m](SuiteContext const &) { return q_minus_1(correction_real(r, m)); });
		b.free("correction of [B(r+m,a0),B(r,a0)]_{q^-2}", {{"r", r}, {"m", m}}, 4 * r + 2 * m + 2,
		       [r, m](SuiteContext const &) {
			       return q_minus_1(q_commutator_real0(r, m) + PBWElement(Root::imaginary(m)));
		       });
	}
	std::vector<std::pair<int, int>> range = bnd_low_range();
	for (auto mp : bnd_high_range())
		range.push_back(mp);
	for (auto [m, p] : range)
		for (int i = 0; i <= 1; ++i)
			b.free("correction of [B(m,d),B(p,a" + N(i) + ")]", {{"m", m}, {"p", p}},
			       2 * m + 2 * p + 1,
			       [m, p, i](SuiteContext const &) { return q_minus_1(correction_imag(p, m, i)); });
	return b.s;
}

std::string root_pair(Root const &a, Root const &b)
{
	return "[" + a.str() + "," + b.str() + "]";
}

Suite classical_limit()
{
	Builder b("classical-limit");
	b.free("Dolan-Grady relations in the Onsager algebra", {}, 0, [](SuiteContext const &) {
		auto rep = check_dolan_grady();
		std::string bad;
		for (auto const &l : rep.lines)
			if (!l.pass)
				bad += l.name + "; ";
		return check(rep.pass, bad);
	});
	for (int m = 1; m <= 6; ++m)
		b.free("b^(m)_p at q = c = 1 is 2 for p = m, else 0", {{"m", m}}, 0,
		       [m](SuiteContext const &) {
			       for (int p = 1; p <= m; ++p)
			       {
				       mpq_class v = evaluate(coeff_b(p, m), 1, 1);
				       if (v != (p == m ? 2 : 0))
					       return ItemOutcome{false, "p = " + N(p) + ": " + v.get_str()};
			       }
			       return ItemOutcome{true, ""};
		       });
	for (auto [r, m] : real_real_range())
		b.free("correction of [B(r,a1),B(r+m,a1)]_{q^-2} vanishes at q = c = 1", {{"r", r}, {"m", m}},
		       0, [r, m](SuiteContext const &) {
			       PBWElement x = correction_real(r, m);
			       for (auto const &[mono, s] : x.terms())
				       if (evaluate(s, 1, 1) != 0)
					       return ItemOutcome{false, mono.str() + ": " + s.str()};
			       return ItemOutcome{true, ""};
		       });

	std::vector<std::pair<Root, Root>> pairs;
	for (auto [r, m] : real_real_range())
	{
		pairs.emplace_back(Root::real1(r), Root::real1(r + m));
		pairs.emplace_back(Root::real0(r + m), Root::real0(r));
	}
	for (auto [r, s] : mixed_range())
		pairs.emplace_back(Root::real0(r), Root::real1(s));
	for (int m = 1; m <= 4; ++m)
	{
		pairs.emplace_back(Root::imaginary(m), Root::real0(0));
		pairs.emplace_back(Root::real1(0), Root::imaginary(m));
	}
	std::vector<std::pair<int, int>> range = bnd_low_range();
	for (auto mp : bnd_high_range())
		range.push_back(mp);
	for (auto [m, p] : range)
	{
		pairs.emplace_back(Root::real1(p), Root::imaginary(m));
		pairs.emplace_back(Root::imaginary(m), Root::real0(p));
	}
	for (auto [n, m] : imaginary_pairs())
		pairs.emplace_back(Root::imaginary(n), Root::imaginary(m));
	std::vector<std::pair<Root, Root>> seen;
	for (auto const &[x, y] : pairs)
	{
		if (std::find(seen.begin(), seen.end(), std::pair{x, y}) != seen.end())
			continue;
		seen.emplace_back(x, y);
		b.free("specialization of " + root_pair(x, y), {}, x.height() + y.height(),
		       [x, y](SuiteContext const &) {
			       auto rep = specialization_check(x, y);
			       return check(rep.pass, rep.failure);
		       });
	}
	return b.s;
}

} // namespace

std::vector<std::string> const &suite_names()
{
	static std::vector<std::string> const names = {
	    "t0-automorphism", "t1-bdelta",         "braid-translates", "bdelta-real",
	    "cm-ordered",      "dm-ordered",        "real-real",        "real-real-mixed",
	    "b1-bndelta",      "bnd-real-low",      "bnd-real-high",    "imaginary-commute",
	    "fn-recursion",    "rn-closed-form",    "com2",             "fn-alt",
	    "lemma-ndeltadelta", "pbw-independence", "top-component",  "theorem2-coefficients",
	    "classical-limit"};
	return names;
}

Suite make_suite(std::string const &name)
{
	if (name == "t0-automorphism")
		return t0_automorphism();
	if (name == "t1-bdelta")
		return t1_bdelta();
	if (name == "braid-translates")
		return braid_translates();
	if (name == "bdelta-real")
		return bdelta_real();
	if (name == "cm-ordered")
		return cm_ordered();
	if (name == "dm-ordered")
		return dm_ordered();
	if (name == "real-real")
		return real_real();
	if (name == "real-real-mixed")
		return real_real_mixed();
	if (name == "b1-bndelta")
		return b1_bndelta();
	if (name == "bnd-real-low")
		return bnd_real(name, bnd_low_range());
	if (name == "bnd-real-high")
		return bnd_real(name, bnd_high_range());
	if (name == "imaginary-commute")
		return imaginary_commute();
	if (name == "fn-recursion")
		return fn_recursion();
	if (name == "rn-closed-form")
		return rn_closed_form();
	if (name == "com2")
		return com2();
	if (name == "fn-alt")
		return fn_alt();
	if (name == "lemma-ndeltadelta")
		return lemma_ndeltadelta();
	if (name == "pbw-independence")
		return pbw_independence();
	if (name == "top-component")
		return top_component();
	if (name == "theorem2-coefficients")
		return theorem2_coefficients();
	if (name == "classical-limit")
		return classical_limit();
	throw std::invalid_argument("unknown suite: " + name);
}

SuiteReport run_suites(std::vector<std::string> const &names, SuiteOptions const &opts)
{
	std::vector<Suite> suites;
	for (auto const &n : names)
	{
		suites.push_back(make_suite(n));
		int need = suites.back().min_bound();
		if (need > opts.bound && !opts.allow_skips)
			throw SuiteBoundError(n, need, opts.bound);
	}

	struct Job
	{
		SuiteItem const *item;
		ItemResult *out;
	};
	SuiteReport rep;
	for (auto const &s : suites)
		for (auto const &it : s.items)
			rep.items.push_back({s.name, it.identity, it.params, it.degree, ItemStatus::skipped, 0, ""});
	std::vector<Job> jobs;
	size_t k = 0;
	for (auto const &s : suites)
		for (auto const &it : s.items)
			jobs.push_back({&it, &rep.items[k++]});

	bool needs_sys = false;
	for (auto const &j : jobs)
		needs_sys = needs_sys || (j.item->uses_system && j.item->bound <= opts.bound);
	RewriteSystem empty;
	RewriteSystem const &sys = needs_sys ? SystemStore::get(CMode::generic, opts.bound) : empty;
	SuiteContext ctx{sys, opts.bound};

	std::atomic<size_t> next{0};
	auto worker = [&] {
		for (size_t i; (i = next++) < jobs.size();)
		{
			SuiteItem const &it = *jobs[i].item;
			ItemResult &out = *jobs[i].out;
			if (it.bound > opts.bound)
			{
				out.status = ItemStatus::skipped;
				out.witness = "needs --bound " + std::to_string(it.bound);
				continue;
			}
			auto t0 = std::chrono::steady_clock::now();
			try
			{
				ItemOutcome o = it.run(ctx);
				out.status = o.pass ? ItemStatus::pass : ItemStatus::fail;
				out.witness = std::move(o.witness);
			}
			catch (std::exception const &e)
			{
				out.status = ItemStatus::error;
				out.witness = e.what();
			}
			out.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
			                 std::chrono::steady_clock::now() - t0)
			                 .count();
		}
	};
	int n = std::max(1, opts.jobs);
	std::vector<std::thread> pool;
	for (int t = 1; t < n; ++t)
		pool.emplace_back(worker);
	worker();
	for (auto &t : pool)
		t.join();

	for (auto const &r : rep.items)
		switch (r.status)
		{
		case ItemStatus::pass:
			++rep.passed;
			break;
		case ItemStatus::fail:
			++rep.failed;
			break;
		case ItemStatus::skipped:
			++rep.skipped;
			break;
		default:
			++rep.errors;
		}
	return rep;
}

} // namespace qons
