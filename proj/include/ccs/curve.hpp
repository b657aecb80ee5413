#pragma once

// Normal curves in corner coordinates.
//
// A multicurve is a nonnegative integer per triangle corner: the number of
// arcs cutting that corner. A corner-k arc crosses slots k and k+1; arcs at
// a corner are nested, arc #1 innermost. On a side of weight w the tail
// corner's arcs sit at local positions 1..n_tail and the head corner's at the
// rest, so corner-k arc #j meets slot k at local w-j+1 and slot k+1 at j.

#include <algorithm>
#include <string>
#include <vector>

#include "surface.hpp"

namespace ccs {

using Corners = std::vector<std::array<i64, 3>>;

struct NormalCurve {
	const Surface* S = nullptr;
	Corners corners;

	i64 weight(int t, int s) const {
		return corners[t][slot_tail(s)] + corners[t][slot_head(s)];
	}
	i64 edge_weight(int e) const {
		const Incidence& in = S->incidence(e, 0);
		return weight(in.tri, in.slot);
	}
	i64 total_weight() const {
		i64 sum = 0;
		for (int e = 0; e < S->num_edges(); ++e) sum += edge_weight(e);
		return sum;
	}
	bool empty() const {
		for (auto& c : corners)
			if (c[0] || c[1] || c[2]) return false;
		return true;
	}
};

inline Corners zero_corners(const Surface& S) {
	return Corners(S.num_triangles(), {0, 0, 0});
}

// Edge-weight vector; a faithful key, since corner counts are recovered by
// 2*corner[k] = w(slot k) + w(slot k+1) - w(slot k+2).
struct CanonicalCode {
	std::vector<i64> weights;
	friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
	friend auto operator<=>(const CanonicalCode& a, const CanonicalCode& b) {
		return a.weights <=> b.weights;
	}
	std::string str() const {
		std::string s;
		for (std::size_t i = 0; i < weights.size(); ++i) {
			if (i) s += ',';
			s += std::to_string(weights[i]);
		}
		return s;
	}
};

inline CanonicalCode canonical(const NormalCurve& c) {
	CanonicalCode code;
	code.weights.reserve(c.S->num_edges());
	for (int e = 0; e < c.S->num_edges(); ++e) code.weights.push_back(c.edge_weight(e));
	return code;
}

inline void require_same_surface(const NormalCurve& a, const NormalCurve& b) {
	if (!a.S || !b.S || !a.S->same(*b.S))
		throw SurfaceMismatch("curves live on different surfaces");
}

// Matching check: both sides of every edge must see the same strand count.
inline void validate_corners(const Surface& S, const Corners& corners) {
	if (int(corners.size()) != S.num_triangles())
		throw SurfaceMismatch("corner data has wrong triangle count");
	for (auto& c : corners)
		for (i64 v : c)
			if (v < 0) throw Error("negative corner count");
	for (int e = 0; e < S.num_edges(); ++e) {
		const Incidence& a = S.incidence(e, 0);
		const Incidence& b = S.incidence(e, 1);
		i64 wa = corners[a.tri][slot_tail(a.slot)] + corners[a.tri][slot_head(a.slot)];
		i64 wb = corners[b.tri][slot_tail(b.slot)] + corners[b.tri][slot_head(b.slot)];
		if (wa != wb)
			throw Error("corner data fails the matching equation on edge " + std::to_string(e));
	}
}

// ---------------------------------------------------------------------------
// Tracing. Strand points are (edge, position); following arcs through
// triangles decomposes the multicurve into components.

struct TraceStep {
	int edge;
	i64 pos;        // 1..w(edge), numbered from the incidence-0 tail
	int into_side;  // incidence index of the triangle being entered
	int tri;        // that triangle
	int corner;     // corner cut while passing through it
};

struct Trace {
	// One entry per component: the cyclic sequence of steps.
	std::vector<std::vector<TraceStep>> components;
	std::vector<Corners> component_corners;
};

namespace detail {

struct ArcRef {
	int tri, corner;
	i64 index;  // 1 = innermost
};

// Which arc owns the strand point at local position l on side (t,s).
inline ArcRef arc_at(const Corners& corners, int t, int s, i64 l, i64 w) {
	i64 n_tail = corners[t][slot_tail(s)];
	if (l <= n_tail) return {t, slot_tail(s), l};
	return {t, slot_head(s), w - l + 1};
}

}  // namespace detail

inline Trace trace_corners(const Surface& S, const Corners& corners) {
	validate_corners(S, corners);

	std::vector<i64> wt(S.num_edges());
	std::vector<i64> offset(S.num_edges() + 1, 0);
	for (int e = 0; e < S.num_edges(); ++e) {
		const Incidence& in = S.incidence(e, 0);
		wt[e] = corners[in.tri][slot_tail(in.slot)] + corners[in.tri][slot_head(in.slot)];
		offset[e + 1] = offset[e] + wt[e];
	}
	i64 total = offset[S.num_edges()];

	auto id_of = [&](int e, i64 p) { return offset[e] + p - 1; };

	// visited per directed pass: 2 states per strand point.
	std::vector<char> visited(std::size_t(2 * total), 0);
	Trace out;

	for (int e0 = 0; e0 < S.num_edges(); ++e0) {
		for (i64 p0 = 1; p0 <= wt[e0]; ++p0) {
			if (visited[std::size_t(2 * id_of(e0, p0))]) continue;

			std::vector<TraceStep> steps;
			Corners cc = zero_corners(S);
			int e = e0, side = 0;
			i64 p = p0;
			do {
				visited[std::size_t(2 * id_of(e, p) + side)] = 1;
				const Incidence& in = S.incidence(e, side);
				int t = in.tri, s = in.slot;
				i64 w = wt[e];
				i64 l = (side == 0) ? p : w + 1 - p;
				detail::ArcRef arc = detail::arc_at(corners, t, s, l, w);
				steps.push_back({e, p, side, t, arc.corner});
				cc[t][arc.corner] += 1;

				int s_out = (s == arc.corner) ? (arc.corner + 1) % 3 : arc.corner;
				check(s_out != s, "arc exits where it entered");
				int e_out = S.edge_at(t, s_out);
				i64 w_out = wt[e_out];
				i64 l_out = (s_out == arc.corner) ? w_out - arc.index + 1 : arc.index;
				int side_out = S.side_index(t, s_out);
				i64 p_out = (side_out == 0) ? l_out : w_out + 1 - l_out;

				e = e_out;
				p = p_out;
				side = 1 - side_out;
			} while (!(e == e0 && p == p0 && side == 0));

			// Mark the reverse passes too, so the component is traced once.
			for (auto& st : steps) visited[std::size_t(2 * id_of(st.edge, st.pos) + 1 - st.into_side)] = 1;

			out.components.push_back(std::move(steps));
			out.component_corners.push_back(std::move(cc));
		}
	}
	return out;
}

// Validates corner data as a single closed curve.
inline NormalCurve tighten(const Surface& S, const Corners& corners) {
	validate_corners(S, corners);
	NormalCurve c{&S, corners};
	if (c.empty()) throw NullCurve("corner data is identically zero");
	Trace tr = trace_corners(S, corners);
	if (tr.components.size() != 1)
		throw Disconnected("corner data traces to " + std::to_string(tr.components.size()) +
		                   " components");
	return c;
}

inline std::vector<NormalCurve> split_components(const Surface& S, const Corners& corners) {
	Trace tr = trace_corners(S, corners);
	std::vector<NormalCurve> out;
	for (auto& cc : tr.component_corners) out.push_back(NormalCurve{&S, cc});
	return out;
}

// Single closed curve from edge weights; corner counts are forced by
// 2*corner[k] = w(slot k) + w(slot k+1) - w(slot k+2).
inline NormalCurve curve_from_edge_weights(const Surface& S, const std::vector<i64>& weights) {
	if (int(weights.size()) != S.num_edges())
		throw SurfaceMismatch("weight vector has wrong edge count");
	Corners c = zero_corners(S);
	for (int t = 0; t < S.num_triangles(); ++t) {
		i64 w[3];
		for (int s = 0; s < 3; ++s) w[s] = weights[S.edge_at(t, s)];
		for (int k = 0; k < 3; ++k) {
			i64 twice = w[k] + w[(k + 1) % 3] - w[(k + 2) % 3];
			if (twice < 0 || twice % 2 != 0)
				throw Error("edge weights violate the triangle conditions");
			c[t][k] = twice / 2;
		}
	}
	return tighten(S, c);
}

// Link of a puncture: one arc across every corner at that vertex.
inline NormalCurve vertex_link(const Surface& S, int v) {
	Corners c = zero_corners(S);
	for (int t = 0; t < S.num_triangles(); ++t)
		for (int k = 0; k < 3; ++k)
			if (S.vertex_at_corner(t, k) == v) c[t][k] = 1;
	return tighten(S, c);
}

}  // namespace ccs
