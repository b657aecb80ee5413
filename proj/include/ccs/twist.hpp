#pragma once

#include <cstdlib>

#include "overlay.hpp"
#include "word.hpp"

namespace ccs {

// Dehn twist of c along a, n full turns; n < 0 turns the other way and
// n = 0 is the identity.  The twist does not depend on how either curve
// happens to be oriented internally: flipping a flips both the crossing
// signs and the inserted loop, which cancels.
inline NormalCurve dehn_twist(const NormalCurve& c, const NormalCurve& a, int n) {
	require_same_surface(a, c);
	if (n == 0) return c;
	Overlay ov = Overlay::pair(a, c);
	ov.minimize();
	if (ov.crossing_count() == 0) return c;

	// Walk c and splice a full traversal of a into the word at every
	// crossing.  The traversal direction at a crossing of sign s (seen
	// from a) is forward iff s*n > 0, which makes all the inserted loops
	// wind the same way around the twisting annulus.
	Word w;
	for (int id : ov.curve_nodes(1)) {
		const Overlay::Node& nd = ov.nodes[std::size_t(id)];
		if (!nd.is_cross) {
			w.push_back({nd.edge, nd.to_side});
			continue;
		}
		bool fwd = (ov.nodes[std::size_t(nd.partner)].sign > 0) == (n > 0);
		Word loop = ov.word_from_crossing(nd.partner, fwd);
		for (int k = std::abs(n); k-- > 0;) w.insert(w.end(), loop.begin(), loop.end());
	}
	return word_to_curve(*c.S, w);
}

}
