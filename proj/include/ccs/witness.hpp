#pragma once

// Witness subsurfaces and subsurface projection. A proper witness is the
// side of a z-pair curve away from the marked puncture z; every curve that
// fails to survive bounds such a disk and is a witness boundary, and those
// are the only proper witnesses. Projection sends a curve crossing the
// boundary to the closures of its arcs through the witness.

#include "distance.hpp"
#include "named.hpp"

namespace ccs {

struct Witness {
	NormalCurve boundary;
	int co_puncture;  // the puncture cut off together with z

	GraphView view() const { return GraphView::in_witness(boundary); }
};

inline Witness witness_of(const NormalCurve& c) {
	std::optional<int> p = z_disk_partner(c);
	if (!p) throw NotSurviving("the curve survives, so it bounds no witness");
	return Witness{c, *p};
}

// One witness per non-marked puncture: the loop pairing it with z.
inline std::vector<Witness> standard_witnesses(const Surface& S) {
	int z = S.puncture_by_name("z");
	std::vector<Witness> out;
	for (int v = 0; v < S.num_punctures(); ++v) {
		if (v == z) continue;
		out.push_back(witness_of(pair_loop(S, S.puncture_name(z), S.puncture_name(v))));
	}
	return out;
}

// Projection of an essential curve to the witness. A curve disjoint from
// the boundary already lives inside (the z side holds no essential curve)
// and projects to itself; the boundary itself has nothing to project to.
// A crossing curve is cut by the boundary into arcs, and every arc closes
// up against the boundary in two ways; the closures that are vertices of
// the witness graph form the projection.
inline std::vector<NormalCurve> subsurface_projection(const NormalCurve& x, const Witness& W) {
	if (classify(x).kind != CurveClass::Essential)
		throw NotEssential("projection is defined for essential curves");
	GraphView view = W.view();
	if (canonical(x) == canonical(W.boundary))
		throw EmptyProjection("the boundary curve has no projection to its own witness");
	if (geometric_intersection(x, W.boundary) == 0) {
		check(view.admits(x), "curve disjoint from the boundary must sit inside the witness");
		return {x};
	}

	Overlay ov = Overlay::pair(W.boundary, x);
	ov.minimize();
	check(ov.crossing_count() > 0, "minimal position lost the crossings");

	// wall letters between two crossings, exclusive at both ends
	auto wall_walk = [&](int from, int to, bool fwd) {
		Word w;
		int n = fwd ? ov.nodes[std::size_t(from)].next : ov.nodes[std::size_t(from)].prev;
		while (n != to) {
			const Overlay::Node& nd = ov.nodes[std::size_t(n)];
			if (!nd.is_cross)
				w.push_back(fwd ? Letter{nd.edge, nd.to_side} : Letter{nd.edge, 1 - nd.to_side});
			n = fwd ? nd.next : nd.prev;
		}
		return w;
	};

	std::vector<NormalCurve> out;
	auto consider = [&](const Word& w) {
		try {
			NormalCurve cand = word_to_curve(*x.S, w);
			if (!view.admits(cand)) return;
			for (const NormalCurve& f : out)
				if (canonical(f) == canonical(cand)) return;
			out.push_back(cand);
		} catch (const Error&) {
		}
	};

	std::vector<int> walk = ov.curve_nodes(1);
	std::vector<std::size_t> at_cross;
	for (std::size_t i = 0; i < walk.size(); ++i)
		if (ov.nodes[std::size_t(walk[i])].is_cross) at_cross.push_back(i);
	for (std::size_t r = 0; r < at_cross.size(); ++r) {
		std::size_t i0 = at_cross[r], i1 = at_cross[(r + 1) % at_cross.size()];
		Word run;
		for (std::size_t i = (i0 + 1) % walk.size(); i != i1; i = (i + 1) % walk.size()) {
			const Overlay::Node& nd = ov.nodes[std::size_t(walk[i])];
			run.push_back({nd.edge, nd.to_side});
		}
		int pa = ov.nodes[std::size_t(walk[i0])].partner;
		int pb = ov.nodes[std::size_t(walk[i1])].partner;
		for (bool fwd : {true, false}) {
			Word w = run;
			Word back = wall_walk(pb, pa, fwd);
			w.insert(w.end(), back.begin(), back.end());
			consider(w);
		}
	}
	return out;
}

// Largest pairwise distance interval over a set of vertices of the view.
inline Distance diameter(const GraphView& view, const std::vector<NormalCurve>& set) {
	Distance out{0, 0, {}};
	for (std::size_t i = 0; i < set.size(); ++i)
		for (std::size_t j = i + 1; j < set.size(); ++j) {
			Distance d = curve_distance(view, set[i], set[j]);
			out.lo = std::max(out.lo, d.lo);
			out.hi = std::max(out.hi, d.hi);
		}
	return out;
}

// Projection distance between two curves through one witness: the diameter
// of the union of their projections inside it.
inline Distance witness_distance(const Witness& W, const NormalCurve& x, const NormalCurve& y) {
	std::vector<NormalCurve> all = subsurface_projection(x, W);
	for (NormalCurve& c : subsurface_projection(y, W)) all.push_back(std::move(c));
	return diameter(W.view(), all);
}

}  // namespace ccs
