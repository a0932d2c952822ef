#pragma once

#include "qonsager/freealg.hpp"

#include <random>

namespace qons::testing {

inline Scalar random_coef(std::mt19937 &rng)
{
	std::uniform_int_distribution<int> k(-3, 3), e(-2, 2), pick(0, 3);
	Scalar s = Scalar(k(rng)) * Scalar::q_pow(e(rng));
	if (pick(rng) == 0)
		s += Scalar::c();
	if (pick(rng) == 0)
		s /= qint(2);
	return s;
}

inline Word random_word(std::mt19937 &rng, int len)
{
	std::uniform_int_distribution<int> bit(0, 1);
	std::vector<int> gs;
	for (int i = 0; i < len; ++i)
		gs.push_back(bit(rng));
	return Word::from_letters(gs);
}

// up to `terms` random words of length at most max_len
inline NcPoly random_ncpoly(std::mt19937 &rng, int max_len, int terms)
{
	std::uniform_int_distribution<int> len(0, max_len);
	std::vector<std::pair<Word, Scalar>> t;
	for (int i = 0; i < terms; ++i)
		t.emplace_back(random_word(rng, len(rng)), random_coef(rng));
	return NcPoly::from_terms(std::move(t));
}

// coefficients of prod_{k>=0} (1-t^{2k+1})^-2 prod_{k>=1} (1-t^{2k})^-1 up to t^n
inline std::vector<long> pbw_series(int n)
{
	std::vector<long> a(n + 1, 0);
	a[0] = 1;
	auto divide = [&](int d) {
		// multiply by 1/(1-t^d)
		for (int i = d; i <= n; ++i)
			a[i] += a[i - d];
	};
	for (int d = 1; d <= n; d += 2)
	{
		divide(d);
		divide(d);
	}
	for (int d = 2; d <= n; d += 2)
		divide(d);
	return a;
}

} // namespace qons::testing
