#pragma once

// Distances between vertices of the curve graphs: the full graph, the
// surviving graph, and the graph of a witness subsurface. Adjacency is
// disjointness in every case.
//
// The ladder is exact at the bottom and honest above:
//   0, 1     from equality and disjointness;
//   2        decided by the complement of the pair. A piece with genus or
//            with two boundary cycles carries a curve that does not separate
//            the surface, and a planar one-cycle piece carries the curves
//            surrounding its puncture subsets, so existence of a middle
//            vertex reduces to a census of the pieces and a found middle is
//            returned as the path through it;
//   3        when no middle of the required kind exists at all, a path of
//            length three is searched for through curves built in the
//            complement of one endpoint;
//   above    wave surgeries give a chain of pairwise-disjoint curves whose
//            length is an upper bound; the reported interval keeps the
//            certified lower bound alongside it.

#include <algorithm>
#include <memory>
#include <optional>

#include "complement.hpp"

namespace ccs {

inline constexpr i64 kUnbounded = i64(1) << 60;

// Minimal-position diagram of a crossing pair with its complement.
struct PairDiagram {
	std::unique_ptr<Overlay> ov;
	std::unique_ptr<Subdivision> sub;

	PairDiagram(const NormalCurve& a, const NormalCurve& b) {
		ov = std::make_unique<Overlay>(Overlay::pair(a, b));
		ov->minimize();
		sub = std::make_unique<Subdivision>(*ov);
	}
};

// Which curve graph distances are measured in.
struct GraphView {
	enum Kind { Full, Surviving, InWitness };
	Kind kind = Full;
	const Surface* S = nullptr;
	std::optional<NormalCurve> wall;  // witness boundary for InWitness

	static GraphView full(const Surface& S) { return {Full, &S, std::nullopt}; }
	static GraphView surviving(const Surface& S) { return {Surviving, &S, std::nullopt}; }
	static GraphView in_witness(const NormalCurve& boundary) {
		return {InWitness, boundary.S, boundary};
	}

	bool admits(const NormalCurve& c) const {
		if (classify(c).kind != CurveClass::Essential) return false;
		if (kind == Surviving) return is_surviving(c);
		if (kind == InWitness) return inside_wall(c);
		return true;
	}

	// Inside the witness: disjoint from the wall, not the wall, and on its
	// z-free side.
	bool inside_wall(const NormalCurve& c) const {
		if (canonical(c) == canonical(*wall)) return false;
		if (geometric_intersection(c, *wall) != 0) return false;
		std::vector<int> to_input;
		Overlay ov = Overlay::disjoint(*S, {*wall, c}, &to_input);
		Subdivision sub(ov);
		// glue pieces across everything but the wall; two groups remain
		std::vector<int> up(sub.pieces.size());
		for (std::size_t i = 0; i < up.size(); ++i) up[i] = int(i);
		auto find = [&](int a) {
			while (up[std::size_t(a)] != a) a = up[std::size_t(a)] = up[std::size_t(up[std::size_t(a)])];
			return a;
		};
		int c_piece = -1;
		for (std::size_t cell = 0; cell < sub.cells.size(); ++cell) {
			if (sub.cells[cell].seg) continue;
			int cv = sub.cells[cell].curve;
			if (to_input[std::size_t(cv)] == 0) continue;  // wall arcs stay cut
			c_piece = sub.piece_left_of(2 * int(cell));
			up[std::size_t(find(sub.piece_left_of(2 * int(cell))))] =
			    find(sub.piece_left_of(2 * int(cell) + 1));
		}
		check(c_piece >= 0, "curve contributed no arcs");
		int z = S->puncture_by_name("z");
		return find(c_piece) != find(sub.vertex_piece[std::size_t(z)]);
	}
};

// Curve surrounding two punctures of one complement piece: their links band
// summed along an arc inside the piece. Empty when the punctures sit in
// different pieces or the composition refuses to close up simply.
inline std::optional<NormalCurve> surround_pair(const Surface& S, const Subdivision& sub,
                                                int va, int vb) {
	if (sub.vertex_piece[std::size_t(va)] != sub.vertex_piece[std::size_t(vb)])
		return std::nullopt;
	Subdivision::Connector conn = sub.connector_word(va, vb);
	Word wa = rotate_to_source(S, link_word(S, va), conn.tri_from);
	Word lb = link_word(S, vb);
	Word back = inverse(conn.word);
	for (int flip = 0; flip < 2; ++flip) {
		try {
			Word wb = rotate_to_source(S, flip ? inverse(lb) : lb, conn.tri_to);
			Word out = wa;
			out.insert(out.end(), conn.word.begin(), conn.word.end());
			out.insert(out.end(), wb.begin(), wb.end());
			out.insert(out.end(), back.begin(), back.end());
			check_composable(S, out, true);
			return word_to_curve(S, out);
		} catch (const Error&) {
		}
	}
	return std::nullopt;
}

struct MiddleReport {
	std::vector<NormalCurve> found;  // verified: disjoint from both endpoints, in the graph
	bool exists = false;             // certified by the piece census
	bool none = false;               // certified: no middle of the required kind at all
};

// Middle vertices between a crossing pair.
inline MiddleReport find_middles(const GraphView& view, const NormalCurve& x,
                                 const NormalCurve& y, int want = 1) {
	PairDiagram d(x, y);
	const Subdivision& sub = *d.sub;
	MiddleReport rep;
	int z = view.S->puncture_by_name("z");

	bool any_full = false, any_surviving = false;
	for (const auto& p : sub.pieces) {
		bool roomy = p.genus >= 1 || p.cycles.size() >= 2;
		if (roomy || p.punctures.size() >= 2) any_full = true;
		if (roomy || p.punctures.size() >= 3) any_surviving = true;
		else if (p.punctures.size() == 2 && p.punctures[0] != z && p.punctures[1] != z)
			any_surviving = true;
	}
	switch (view.kind) {
		case GraphView::Full:
			rep.exists = any_full;
			rep.none = !any_full;
			break;
		case GraphView::Surviving:
			rep.exists = any_surviving;
			rep.none = !any_surviving;
			break;
		case GraphView::InWitness:
			// only a found curve certifies existence, but no curve disjoint
			// from the pair at all certainly means none inside the witness
			rep.none = !any_full;
			break;
	}

	auto consider = [&](const NormalCurve& cand) {
		if (int(rep.found.size()) >= want) return;
		for (const NormalCurve& f : rep.found)
			if (canonical(f) == canonical(cand)) return;
		if (geometric_intersection(cand, x) != 0) return;
		if (geometric_intersection(cand, y) != 0) return;
		if (!view.admits(cand)) return;
		rep.found.push_back(cand);
	};

	for (std::size_t cy = 0; cy < sub.cycles.size() && int(rep.found.size()) < want; ++cy) {
		try {
			consider(word_to_curve(*view.S, sub.cycle_word(int(cy))));
		} catch (const Error&) {
		}
	}
	if (int(rep.found.size()) < want) {
		for (const auto& p : sub.pieces) {
			for (std::size_t i = 0; i < p.punctures.size(); ++i)
				for (std::size_t j = i + 1; j < p.punctures.size(); ++j) {
					if (int(rep.found.size()) >= want) break;
					if (auto s = surround_pair(*view.S, sub, p.punctures[i], p.punctures[j]))
						consider(*s);
				}
		}
	}
	if (!rep.found.empty()) {
		rep.exists = true;
		rep.none = false;
	}
	return rep;
}

// Candidate neighbours of c: curves surrounding two punctures of one piece
// of its complement.
inline std::vector<NormalCurve> near_pool(const GraphView& view, const NormalCurve& c,
                                          std::size_t cap = 24) {
	Overlay ov = Overlay::disjoint(*view.S, {c});
	Subdivision sub(ov);
	std::vector<NormalCurve> out;
	for (const auto& p : sub.pieces) {
		for (std::size_t i = 0; i < p.punctures.size(); ++i)
			for (std::size_t j = i + 1; j < p.punctures.size(); ++j) {
				if (out.size() >= cap) return out;
				auto s = surround_pair(*view.S, sub, p.punctures[i], p.punctures[j]);
				if (!s) continue;
				if (geometric_intersection(*s, c) != 0) continue;
				bool dup = false;
				for (const NormalCurve& f : out)
					if (canonical(f) == canonical(*s)) dup = true;
				if (!dup && view.admits(*s)) out.push_back(*s);
			}
	}
	return out;
}

struct Distance {
	i64 lo = 0, hi = 0;
	std::vector<NormalCurve> path;  // realises hi when nonempty; endpoints included
	bool exact() const { return lo == hi; }
};

namespace detail {

// Wave surgeries: an arc of x between two crossings adjacent along it,
// closed up with either arc of cur between the partner crossings. Every
// result is disjoint from cur and meets x less often.
inline std::vector<NormalCurve> wave_candidates(const Surface& S, const NormalCurve& x,
                                                const NormalCurve& cur) {
	PairDiagram d(x, cur);
	const Overlay& ov = *d.ov;
	std::vector<NormalCurve> out;
	std::vector<int> xc = ov.curve_crossings(0);
	if (xc.size() < 2) return out;
	auto strand_walk = [&](int from, int to, bool fwd) {
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
	for (std::size_t i = 0; i < xc.size(); ++i) {
		int a = xc[i], b = xc[(i + 1) % xc.size()];
		if (a == b) continue;
		Word alpha = strand_walk(a, b, true);
		int pa = ov.nodes[std::size_t(a)].partner, pb = ov.nodes[std::size_t(b)].partner;
		for (bool fwd : {true, false}) {
			Word w = alpha;
			Word beta = strand_walk(pb, pa, fwd);
			w.insert(w.end(), beta.begin(), beta.end());
			try {
				NormalCurve cand = word_to_curve(S, w);
				bool dup = false;
				for (const NormalCurve& f : out)
					if (canonical(f) == canonical(cand)) dup = true;
				if (!dup) out.push_back(cand);
			} catch (const Error&) {
			}
		}
	}
	return out;
}

// Chain of admissible curves from y to one disjoint from x, reducing
// intersection with x at every step when possible and sidestepping to a
// fresh neighbour at equal crossing count when not; the visited set and the
// budget keep the walk finite. Returns the full path from x to y on success.
inline std::optional<std::vector<NormalCurve>> descend(const GraphView& view,
                                                       const NormalCurve& x,
                                                       const NormalCurve& y,
                                                       int budget = 200) {
	std::vector<NormalCurve> chain = {y};
	NormalCurve cur = y;
	std::vector<CanonicalCode> seen = {canonical(y)};
	auto visited = [&](const NormalCurve& c) {
		CanonicalCode k = canonical(c);
		for (const CanonicalCode& s : seen)
			if (s == k) return true;
		return false;
	};
	for (int guard = 0; guard < budget; ++guard) {
		i64 now = geometric_intersection(x, cur);
		if (now == 0) {
			chain.push_back(x);
			std::reverse(chain.begin(), chain.end());
			return chain;
		}
		std::optional<NormalCurve> best;
		i64 best_i = 0;
		std::optional<NormalCurve> level;
		for (const NormalCurve& cand : wave_candidates(*view.S, x, cur)) {
			if (geometric_intersection(cand, cur) != 0) continue;
			i64 ic = geometric_intersection(x, cand);
			if (ic > now) continue;
			if (!view.admits(cand)) continue;
			if (ic == now) {
				if (!visited(cand) &&
				    (!level || canonical(cand).weights < canonical(*level).weights))
					level = cand;
				continue;
			}
			if (best && (ic > best_i ||
			             (ic == best_i && !(canonical(cand).weights < canonical(*best).weights))))
				continue;
			best = cand;
			best_i = ic;
		}
		if (!best && level) best = level;
		if (!best) return std::nullopt;
		cur = *best;
		seen.push_back(canonical(cur));
		chain.push_back(cur);
	}
	return std::nullopt;
}

inline std::optional<std::vector<NormalCurve>> three_path(const GraphView& view,
                                                          const NormalCurve& x,
                                                          const NormalCurve& y) {
	for (bool from_x : {true, false}) {
		const NormalCurve& head = from_x ? x : y;
		const NormalCurve& tail = from_x ? y : x;
		for (const NormalCurve& a : near_pool(view, head)) {
			check(geometric_intersection(a, tail) != 0, "pool curve contradicts the census");
			MiddleReport mid = find_middles(view, a, tail, 1);
			if (mid.found.empty()) continue;
			std::vector<NormalCurve> path = {head, a, mid.found[0], tail};
			if (!from_x) std::reverse(path.begin(), path.end());
			return path;
		}
	}
	return std::nullopt;
}

}  // namespace detail

inline Distance curve_distance(const GraphView& view, const NormalCurve& x,
                               const NormalCurve& y, int budget = 200) {
	check(view.admits(x) && view.admits(y), "distance endpoint outside the graph");
	if (canonical(x) == canonical(y)) return {0, 0, {x}};
	if (geometric_intersection(x, y) == 0) return {1, 1, {x, y}};
	MiddleReport mid = find_middles(view, x, y, 1);
	if (!mid.found.empty()) return {2, 2, {x, mid.found[0], y}};
	if (mid.exists) return {2, 2, {}};
	if (mid.none) {
		if (auto p3 = detail::three_path(view, x, y)) return {3, 3, *p3};
		if (auto up = detail::descend(view, x, y, budget)) return {3, i64(up->size()) - 1, *up};
		return {3, kUnbounded, {}};
	}
	if (auto up = detail::descend(view, x, y, budget)) {
		Distance out{2, i64(up->size()) - 1, *up};
		return out;
	}
	return {2, kUnbounded, {}};
}

}  // namespace ccs
