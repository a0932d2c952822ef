#pragma once

#include "qonsager/pbw.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace qons {

enum class ExprKind
{
	integer,
	q,
	c,
	qint,       // [n]q
	root,       // B0, B1, B(k,a0|a1|d)
	add,
	sub,
	neg,
	mul,
	div,
	pow,
	commutator, // [x,y] or [x,y;p]
	morphism
};

struct Expr
{
	ExprKind kind = ExprKind::integer;
	mpz_class value;          // integer literal
	long index = 0;           // qint n, root index, power exponent
	Family family = Family::a0;
	std::string name;         // morphism name
	std::vector<Expr> args;

	bool operator==(Expr const &b) const;
};

// ParseError with the byte offset and the tokens accepted there
Expr parse_expr(std::string const &text);
// parseable text with minimal parentheses; parse_expr(render(e)) == e
std::string render(Expr const &e);

// the value when e involves no root vectors
std::optional<Scalar> scalar_value(Expr const &e);

NcPoly eval_free(Expr const &e);
// morphisms are applied in the free algebra and the result lifted
PBWElement eval_pbw(Expr const &e);

} // namespace qons
