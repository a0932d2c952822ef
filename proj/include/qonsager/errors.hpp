#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qons {

struct DivisionByZero : std::domain_error
{
	DivisionByZero() : std::domain_error("division by zero") {}
};

struct PoleError : std::domain_error
{
	using std::domain_error::domain_error;
};

// degree of an input exceeds the completion degree of the rewrite system
struct BoundExceeded : std::runtime_error
{
	int needed;
	int available;
	BoundExceeded(int needed, int available)
	    : std::runtime_error("degree " + std::to_string(needed) +
	                         " exceeds completed degree " +
	                         std::to_string(available) + "; increase --bound"),
	      needed(needed), available(available)
	{}
};

struct CapacityError : std::runtime_error
{
	int degree_reached;
	CapacityError(std::string const &what, int degree_reached)
	    : std::runtime_error(what), degree_reached(degree_reached)
	{}
};

struct FormatError : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

struct ModeMismatch : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

// a suite asked to run below the bound its items need
struct SuiteBoundError : std::runtime_error
{
	std::string suite;
	int needed;
	int given;
	SuiteBoundError(std::string const &suite, int needed, int given)
	    : std::runtime_error("suite " + suite + " needs --bound " + std::to_string(needed) +
	                         " (given " + std::to_string(given) + "); pass --allow-skips to run the rest"),
	      suite(suite), needed(needed), given(given)
	{}
};

struct ParseError : std::runtime_error
{
	size_t offset;
	std::vector<std::string> expected;
	ParseError(std::string const &what, size_t offset,
	           std::vector<std::string> expected)
	    : std::runtime_error(what), offset(offset), expected(std::move(expected))
	{}
};

} // namespace qons
