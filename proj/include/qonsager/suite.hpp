#pragma once

#include "qonsager/rewrite.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace qons {

enum class ItemStatus
{
	pass,
	fail,
	skipped,
	error
};

std::string to_string(ItemStatus s);

using Params = std::vector<std::pair<std::string, int>>;

struct SuiteContext
{
	RewriteSystem const &sys; // generic c, completed to bound
	int bound;
};

struct ItemOutcome
{
	bool pass = false;
	std::string witness;
};

struct SuiteItem
{
	std::string identity;
	Params params;
	// maximal word length involved
	int degree = 0;
	// completion degree needed; 0 for identities checked without the ideal
	int bound = 0;
	// optional items never raise the minimal bound of the suite
	bool required = true;
	// reduces against the generic system of the context
	bool uses_system = true;
	std::function<ItemOutcome(SuiteContext const &)> run;
};

struct Suite
{
	std::string name;
	std::vector<SuiteItem> items;
	int min_bound() const;
};

std::vector<std::string> const &suite_names();
// std::invalid_argument for an unknown name
Suite make_suite(std::string const &name);

struct ItemResult
{
	std::string suite;
	std::string identity;
	Params params;
	int degree = 0;
	ItemStatus status = ItemStatus::skipped;
	long millis = 0;
	std::string witness;
};

struct SuiteOptions
{
	int bound = 12;
	int jobs = 1;
	// run below a suite's minimal bound, reporting its out-of-range items as skipped
	bool allow_skips = false;
};

struct SuiteReport
{
	std::vector<ItemResult> items;
	size_t passed = 0, failed = 0, skipped = 0, errors = 0;
	bool pass() const { return failed == 0 && errors == 0; }
};

// items are reported in suite order, then in item order, for any number of
// jobs; SuiteBoundError unless every suite fits the bound or skips are allowed
SuiteReport run_suites(std::vector<std::string> const &names, SuiteOptions const &opts);

// coefficients of prod_{k>=0} (1-t^{2k+1})^-2 prod_{k>=1} (1-t^{2k})^-1 up to t^n
std::vector<long> pbw_series(int n);

} // namespace qons
