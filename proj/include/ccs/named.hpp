#pragma once

// Catalog of standard curves on the registry surfaces: puncture-pair loops,
// consecutive-interval loops on the six-punctured sphere, and the vertical
// and horizontal circles on the three-punctured torus.

#include "curve.hpp"
#include "word.hpp"

namespace ccs {

// Band sum of two disjoint loops along a canonical band: through a shared
// triangle when one exists, else along the shortest dual path between their
// first triangles.
inline Word joined_loop(const Surface& S, const Word& a, const Word& b) {
	std::vector<char> in_a(S.num_triangles(), 0);
	for (const Letter& l : a) in_a[letter_source(S, l).tri] = 1;
	for (const Letter& l : b) {
		int t = letter_source(S, l).tri;
		if (in_a[t]) {
			Word wa = rotate_to_source(S, a, t);
			Word wb = rotate_to_source(S, b, t);
			wa.insert(wa.end(), wb.begin(), wb.end());
			check_composable(S, wa, true);
			return wa;
		}
	}
	Word conn = dual_path(S, letter_source(S, a[0]).tri, letter_source(S, b[0]).tri);
	return band_sum_word(S, a, b, conn);
}

// Loop around two punctures: band sum of their links.
inline NormalCurve pair_loop(const Surface& S, const std::string& x, const std::string& y) {
	int vx = S.puncture_by_name(x), vy = S.puncture_by_name(y);
	if (vx == vy) throw Error("pair loop needs two distinct punctures");
	return word_to_curve(S, joined_loop(S, link_word(S, vx), link_word(S, vy)));
}

// Loop around the consecutive punctures p_lo..p_hi of the six-punctured
// sphere, built left to right.
inline NormalCurve interval_curve(const Surface& S, int lo, int hi) {
	check(1 <= lo && lo <= hi && hi <= 5, "interval out of range");
	Word w = link_word(S, S.puncture_by_name("p" + std::to_string(lo)));
	for (int q = lo + 1; q <= hi; ++q)
		w = joined_loop(S, w, link_word(S, S.puncture_by_name("p" + std::to_string(q))));
	return word_to_curve(S, w);
}

// Vertical circle through square i of the three-punctured torus.
inline NormalCurve vertical_curve(const Surface& S, int i) {
	check(S.num_triangles() == 6, "vertical circles live on the strip torus");
	check(0 <= i && i < 3, "square index out of range");
	Corners c = zero_corners(S);
	c[2 * i] = {1, 0, 0};
	c[2 * i + 1] = {0, 1, 0};
	return tighten(S, c);
}

// Horizontal circle of the three-punctured torus.
inline NormalCurve horizontal_curve(const Surface& S) {
	check(S.num_triangles() == 6, "the horizontal circle lives on the strip torus");
	Corners c = zero_corners(S);
	for (int i = 0; i < 3; ++i) {
		c[2 * i] = {0, 0, 1};
		c[2 * i + 1] = {1, 0, 0};
	}
	return tighten(S, c);
}

}  // namespace ccs
