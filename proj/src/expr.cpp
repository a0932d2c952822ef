#include "qonsager/expr.hpp"
#include "qonsager/errors.hpp"

#include <cctype>
#include <limits>

namespace qons {

bool Expr::operator==(Expr const &b) const
{
	return kind == b.kind && value == b.value && index == b.index && family == b.family &&
	       name == b.name && args == b.args;
}

namespace {

Expr node(ExprKind k, std::vector<Expr> args = {})
{
	Expr e;
	e.kind = k;
	e.args = std::move(args);
	return e;
}

bool is_morphism(std::string const &s)
{
	return s == "Phi" || s == "T0" || s == "T0inv" || s == "T1" || s == "T1inv";
}

std::vector<std::string> const &primary_tokens()
{
	static std::vector<std::string> const t = {
	    "integer", "'q'", "'c'", "'['", "'('", "'-'", "'B0'", "'B1'", "'B('",
	    "'Phi'", "'T0'", "'T0inv'", "'T1'", "'T1inv'"};
	return t;
}

bool involves_roots(Expr const &e)
{
	if (e.kind == ExprKind::root || e.kind == ExprKind::commutator || e.kind == ExprKind::morphism)
		return true;
	for (Expr const &a : e.args)
		if (involves_roots(a))
			return true;
	return false;
}

class Parser
{
	std::string const &s_;
	size_t i_ = 0;

	void ws()
	{
		while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
			++i_;
	}

	bool at(char ch)
	{
		ws();
		return i_ < s_.size() && s_[i_] == ch;
	}

	bool accept(char ch)
	{
		if (!at(ch))
			return false;
		++i_;
		return true;
	}

	[[noreturn]] void fail(std::vector<std::string> expected, size_t pos, std::string what = "")
	{
		if (what.empty())
		{
			if (pos >= s_.size())
				what = "unexpected end of input";
			else
				what = std::string("unexpected '") + s_[pos] + "'";
		}
		std::string msg = what + " at byte " + std::to_string(pos) + "; expected ";
		for (size_t k = 0; k < expected.size(); ++k)
			msg += (k ? ", " : "") + expected[k];
		throw ParseError(msg, pos, std::move(expected));
	}

	void expect(char ch)
	{
		if (!accept(ch))
			fail({std::string("'") + ch + "'"}, i_);
	}

	bool digit_here()
	{
		ws();
		return i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]));
	}

	std::string digits()
	{
		ws();
		size_t b = i_;
		while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
			++i_;
		if (b == i_)
			fail({"integer"}, i_);
		return s_.substr(b, i_ - b);
	}

	long small_int(bool allow_sign)
	{
		ws();
		size_t b = i_;
		bool neg = allow_sign && accept('-');
		std::string d = digits();
		mpz_class v(d);
		if (neg)
			v = -v;
		if (!v.fits_slong_p() || abs(v) > std::numeric_limits<int>::max())
			fail({"integer"}, b, "integer out of range");
		return v.get_si();
	}

	std::string identifier()
	{
		size_t b = i_;
		while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_])))
			++i_;
		return s_.substr(b, i_ - b);
	}

	Expr root_atom()
	{
		Expr e = node(ExprKind::root);
		e.index = small_int(true);
		expect(',');
		ws();
		size_t b = i_;
		std::string f = identifier();
		if (f == "a0")
			e.family = Family::a0;
		else if (f == "a1")
			e.family = Family::a1;
		else if (f == "d")
			e.family = Family::d;
		else
			fail({"'a0'", "'a1'", "'d'"}, b);
		expect(')');
		return e;
	}

	Expr bracket()
	{
		// [n]q or a commutator
		if (digit_here())
		{
			size_t save = i_;
			digits();
			bool qi = accept(']');
			i_ = save;
			if (qi)
			{
				Expr e = node(ExprKind::qint);
				e.index = small_int(false);
				expect(']');
				if (!accept('q'))
					fail({"'q'"}, i_);
				return e;
			}
		}
		Expr x = expr();
		expect(',');
		Expr y = expr();
		std::vector<Expr> args = {std::move(x), std::move(y)};
		if (accept(';'))
		{
			ws();
			size_t b = i_;
			Expr p = expr();
			if (involves_roots(p))
				fail({"scalar"}, b, "q-commutator parameter is not a scalar");
			args.push_back(std::move(p));
		}
		if (!accept(']'))
			fail(args.size() == 2 ? std::vector<std::string>{"';'", "']'"}
			                      : std::vector<std::string>{"']'"},
			     i_);
		return node(ExprKind::commutator, std::move(args));
	}

	Expr primary()
	{
		ws();
		if (i_ >= s_.size())
			fail(primary_tokens(), i_);
		char ch = s_[i_];
		if (std::isdigit(static_cast<unsigned char>(ch)))
		{
			Expr e = node(ExprKind::integer);
			e.value = mpz_class(digits());
			return e;
		}
		if (accept('('))
		{
			Expr e = expr();
			expect(')');
			return e;
		}
		if (accept('['))
			return bracket();
		if (std::isalpha(static_cast<unsigned char>(ch)))
		{
			size_t b = i_;
			std::string id = identifier();
			if (id == "q")
				return node(ExprKind::q);
			if (id == "c")
				return node(ExprKind::c);
			if (id == "B0" || id == "B1")
			{
				Expr e = node(ExprKind::root);
				e.family = id == "B0" ? Family::a0 : Family::a1;
				return e;
			}
			if (id == "B" && accept('('))
				return root_atom();
			if (is_morphism(id))
			{
				expect('(');
				Expr e = node(ExprKind::morphism, {expr()});
				e.name = id;
				expect(')');
				return e;
			}
			fail(primary_tokens(), b, "unknown identifier '" + id + "'");
		}
		fail(primary_tokens(), i_);
	}

	Expr power()
	{
		Expr e = primary();
		if (!accept('^'))
			return e;
		Expr p = node(ExprKind::pow, {std::move(e)});
		p.index = small_int(true);
		return p;
	}

	Expr unary()
	{
		if (accept('-'))
			return node(ExprKind::neg, {unary()});
		return power();
	}

	Expr term()
	{
		Expr e = unary();
		for (;;)
		{
			if (accept('*'))
				e = node(ExprKind::mul, {std::move(e), unary()});
			else if (accept('/'))
				e = node(ExprKind::div, {std::move(e), unary()});
			else
				return e;
		}
	}

  public:
	explicit Parser(std::string const &s) : s_(s) {}

	Expr expr()
	{
		Expr e = term();
		for (;;)
		{
			if (accept('+'))
				e = node(ExprKind::add, {std::move(e), term()});
			else if (accept('-'))
				e = node(ExprKind::sub, {std::move(e), term()});
			else
				return e;
		}
	}

	Expr whole()
	{
		Expr e = expr();
		ws();
		if (i_ != s_.size())
			fail({"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"}, i_);
		return e;
	}
};

int precedence(Expr const &e)
{
	switch (e.kind)
	{
	case ExprKind::add:
	case ExprKind::sub:
		return 0;
	case ExprKind::mul:
	case ExprKind::div:
		return 1;
	case ExprKind::neg:
		return 2;
	case ExprKind::pow:
		return 3;
	default:
		return 4;
	}
}

std::string render_at(Expr const &e, int min);

std::string render_raw(Expr const &e)
{
	auto const &a = e.args;
	switch (e.kind)
	{
	case ExprKind::integer:
		return e.value.get_str();
	case ExprKind::q:
		return "q";
	case ExprKind::c:
		return "c";
	case ExprKind::qint:
		return "[" + std::to_string(e.index) + "]q";
	case ExprKind::root:
		if (e.index == 0 && e.family != Family::d)
			return e.family == Family::a0 ? "B0" : "B1";
		return "B(" + std::to_string(e.index) + "," +
		       (e.family == Family::a0 ? "a0" : e.family == Family::a1 ? "a1" : "d") + ")";
	case ExprKind::add:
		return render_at(a[0], 0) + " + " + render_at(a[1], 1);
	case ExprKind::sub:
		return render_at(a[0], 0) + " - " + render_at(a[1], 1);
	case ExprKind::neg:
		return "-" + render_at(a[0], 2);
	case ExprKind::mul:
		return render_at(a[0], 1) + "*" + render_at(a[1], 2);
	case ExprKind::div:
		return render_at(a[0], 1) + "/" + render_at(a[1], 2);
	case ExprKind::pow:
		return render_at(a[0], 4) + "^" + std::to_string(e.index);
	case ExprKind::commutator:
		return "[" + render_at(a[0], 0) + ", " + render_at(a[1], 0) +
		       (a.size() == 3 ? "; " + render_at(a[2], 0) : std::string()) + "]";
	case ExprKind::morphism:
		return e.name + "(" + render_at(a[0], 0) + ")";
	}
	return "";
}

std::string render_at(Expr const &e, int min)
{
	std::string s = render_raw(e);
	return precedence(e) < min ? "(" + s + ")" : s;
}

template <class T, class RootFn, class MorphFn>
struct Evaluator
{
	RootFn root_fn;
	MorphFn morph_fn;

	Scalar need_scalar(Expr const &e, char const *what) const
	{
		auto s = scalar_value(e);
		if (!s)
			throw std::invalid_argument(what);
		return *s;
	}

	T operator()(Expr const &e) const
	{
		if (auto s = scalar_value(e))
			return T(*s);
		auto const &a = e.args;
		switch (e.kind)
		{
		case ExprKind::root:
			return root_fn(normalize_root(e.family, int(e.index)));
		case ExprKind::add:
			return (*this)(a[0]) + (*this)(a[1]);
		case ExprKind::sub:
			return (*this)(a[0]) - (*this)(a[1]);
		case ExprKind::neg:
			return -(*this)(a[0]);
		case ExprKind::mul:
			if (auto s = scalar_value(a[0]))
				return *s * (*this)(a[1]);
			if (auto s = scalar_value(a[1]))
				return *s * (*this)(a[0]);
			return (*this)(a[0]) * (*this)(a[1]);
		case ExprKind::div:
			return need_scalar(a[1], "division by a non-scalar").inverse() * (*this)(a[0]);
		case ExprKind::pow:
		{
			if (e.index < 0)
				throw std::invalid_argument("negative power of a non-scalar");
			T x = (*this)(a[0]);
			T r(Scalar(1));
			for (long k = 0; k < e.index; ++k)
				r = r * x;
			return r;
		}
		case ExprKind::commutator:
		{
			T x = (*this)(a[0]), y = (*this)(a[1]);
			Scalar p = a.size() == 3 ? need_scalar(a[2], "q-commutator parameter is not a scalar")
			                         : Scalar(1);
			return x * y - p * (y * x);
		}
		case ExprKind::morphism:
			return morph_fn(named_morphism(e.name), a[0]);
		default:
			break;
		}
		throw std::logic_error("unhandled expression node");
	}
};

template <class T, class RootFn, class MorphFn>
Evaluator<T, RootFn, MorphFn> evaluator(RootFn r, MorphFn m)
{
	return {r, m};
}

} // namespace

Expr parse_expr(std::string const &text)
{
	return Parser(text).whole();
}

std::string render(Expr const &e)
{
	return render_at(e, 0);
}

std::optional<Scalar> scalar_value(Expr const &e)
{
	auto const &a = e.args;
	auto both = [&]() -> std::optional<std::pair<Scalar, Scalar>> {
		auto x = scalar_value(a[0]);
		if (!x)
			return std::nullopt;
		auto y = scalar_value(a[1]);
		if (!y)
			return std::nullopt;
		return std::pair{*x, *y};
	};
	switch (e.kind)
	{
	case ExprKind::integer:
		return Scalar(e.value);
	case ExprKind::q:
		return Scalar::q();
	case ExprKind::c:
		return Scalar::c();
	case ExprKind::qint:
		return qint(e.index);
	case ExprKind::add:
		if (auto p = both())
			return p->first + p->second;
		return std::nullopt;
	case ExprKind::sub:
		if (auto p = both())
			return p->first - p->second;
		return std::nullopt;
	case ExprKind::mul:
		if (auto p = both())
			return p->first * p->second;
		return std::nullopt;
	case ExprKind::div:
		if (auto p = both())
			return p->first / p->second;
		return std::nullopt;
	case ExprKind::neg:
		if (auto x = scalar_value(a[0]))
			return -*x;
		return std::nullopt;
	case ExprKind::pow:
		if (auto x = scalar_value(a[0]))
			return x->pow(e.index);
		return std::nullopt;
	default:
		return std::nullopt;
	}
}

NcPoly eval_free(Expr const &e)
{
	auto ev = evaluator<NcPoly>([](Root const &r) { return root_vector(r); },
	                            [](AlgebraMorphism const &f, Expr const &x) {
		                            return f.apply(eval_free(x));
	                            });
	return ev(e);
}

PBWElement eval_pbw(Expr const &e)
{
	auto ev = evaluator<PBWElement>([](Root const &r) { return PBWElement(r); },
	                                [](AlgebraMorphism const &f, Expr const &x) {
		                                return lift_to_pbw(f.apply(eval_free(x)));
	                                });
	return ev(e);
}

} // namespace qons
