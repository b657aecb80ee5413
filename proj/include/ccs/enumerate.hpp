#pragma once

#include <array>

#include "curve.hpp"

namespace ccs {

// Every connected curve class whose total edge weight is at most the budget,
// one representative per class. Depth-first over edge weight vectors; a
// triangle is checked as soon as its last edge is assigned, so infeasible
// branches are cut early.
inline std::vector<NormalCurve> enumerate_curves(const Surface& S, i64 budget) {
	int E = S.num_edges(), T = S.num_triangles();
	std::vector<std::vector<int>> close_at(static_cast<std::size_t>(E));  // triangles completed by an edge
	std::vector<std::array<int, 3>> tri_edges(static_cast<std::size_t>(T));
	for (int t = 0; t < T; ++t) {
		int last = -1;
		for (int s = 0; s < 3; ++s) {
			tri_edges[std::size_t(t)][std::size_t(s)] = S.edge_at(t, s);
			last = std::max(last, S.edge_at(t, s));
		}
		close_at[std::size_t(last)].push_back(t);
	}

	std::vector<i64> w(std::size_t(E), 0);
	std::vector<NormalCurve> out;
	auto feasible = [&](int t) {
		i64 a = w[std::size_t(tri_edges[std::size_t(t)][0])];
		i64 b = w[std::size_t(tri_edges[std::size_t(t)][1])];
		i64 c = w[std::size_t(tri_edges[std::size_t(t)][2])];
		if ((a + b + c) % 2 != 0) return false;
		return a + b >= c && b + c >= a && c + a >= b;
	};
	auto rec = [&](auto&& self, int e, i64 left) -> void {
		if (e == E) {
			bool zero = true;
			for (i64 v : w) zero &= v == 0;
			if (zero) return;
			try {
				out.push_back(curve_from_edge_weights(S, w));
			} catch (const Disconnected&) {
			}
			return;
		}
		for (i64 v = 0; v <= left; ++v) {
			w[std::size_t(e)] = v;
			bool ok = true;
			for (int t : close_at[std::size_t(e)]) ok &= feasible(t);
			if (ok) self(self, e + 1, left - v);
		}
		w[std::size_t(e)] = 0;
	};
	rec(rec, 0, budget);
	return out;
}

}  // namespace ccs
