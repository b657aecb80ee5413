#pragma once

// Embedded arrangements of two transverse curves (or any family of disjoint
// ones), maintained exactly through bigon removal.
//
// State: every point where a curve meets an edge ("strand point") or the
// other curve ("crossing") is a node. Nodes are doubly linked along their
// curve and, for strand points, along their edge in the direction of
// increasing edge positions. Since triangles are counterclockwise, a strand
// crossing an edge out of its incidence-0 side has increasing positions on
// its left; that one fact drives all side bookkeeping.
//
// A crossing pair is removable when the two crossings are adjacent along
// both curves and the loop formed by the two connecting arcs is freely
// trivial: the loop is then an embedded null-homotopic circle, it bounds an
// embedded disk with no punctures, and nothing else can be inside the disk
// because the side arcs carry no further crossings. Each removal slides the
// first curve's arc parallel to the second's and deletes exactly two
// crossings, so the process terminates with a minimal diagram realizing the
// geometric intersection number.

#include <algorithm>
#include <deque>
#include <vector>

#include "word.hpp"

namespace ccs {

class Overlay {
public:
	struct Node {
		int curve = -1;
		bool is_cross = false;
		bool alive = true;
		// strand point
		int edge = -1;
		int to_side = -1;  // incidence entered when the curve runs forward
		// crossing
		int tri = -1;
		int partner = -1;
		int sign = 0;  // +1 if ccw order at the point is [me+, partner+, me-, partner-]
		// links
		int next = -1, prev = -1;    // along the curve, cyclic
		int enext = -1, eprev = -1;  // along the edge, increasing positions
	};

	const Surface* S = nullptr;
	std::vector<Node> nodes;
	std::vector<int> edge_first, edge_last;
	std::vector<int> curve_entry;
	int crossings = 0;  // live geometric crossings (node pairs)

	// --- construction -----------------------------------------------------

	// Two transverse curves; a gets id 0, b id 1.
	static Overlay pair(const NormalCurve& a, const NormalCurve& b) {
		require_same_surface(a, b);
		Overlay ov;
		ov.init(*a.S);
		ov.add_curve(a);
		ov.add_curve(b);
		ov.settle_edge_lists();
		ov.make_crossings();
		return ov;
	}

	// Disjoint union: corner coordinates add, and the sum is traced as one
	// embedded object. Component ids follow the trace order; trace_to_input
	// maps them back to the inputs by canonical code.
	static Overlay disjoint(const Surface& S, const std::vector<NormalCurve>& curves,
	                        std::vector<int>* trace_to_input = nullptr) {
		Overlay ov;
		ov.init(S);
		Corners sum = zero_corners(S);
		for (const NormalCurve& c : curves) {
			if (!c.S->same(S)) throw SurfaceMismatch("disjoint union across surfaces");
			for (int t = 0; t < S.num_triangles(); ++t)
				for (int k = 0; k < 3; ++k) sum[std::size_t(t)][std::size_t(k)] += c.corners[std::size_t(t)][std::size_t(k)];
		}
		Trace tr = trace_corners(S, sum);
		if (tr.components.size() != curves.size())
			throw NotDisjoint("curves are not simultaneously embeddable as given");
		std::vector<char> used(curves.size(), 0);
		for (auto& cc : tr.component_corners) {
			CanonicalCode code = canonical(NormalCurve{&S, cc});
			int hit = -1;
			for (std::size_t i = 0; i < curves.size(); ++i)
				if (!used[i] && canonical(curves[i]) == code) { hit = int(i); break; }
			if (hit < 0) throw NotDisjoint("curve family is not disjoint as given");
			used[std::size_t(hit)] = 1;
			if (trace_to_input) trace_to_input->push_back(hit);
		}
		for (auto& comp : tr.components) ov.add_steps(comp);
		ov.joint_positions_ = true;
		ov.settle_edge_lists();
		return ov;
	}

	int num_curves() const { return int(curve_entry.size()); }

	// --- queries ----------------------------------------------------------

	// Cyclic node walk of one curve.
	std::vector<int> curve_nodes(int curve) const {
		std::vector<int> out;
		int start = curve_entry[std::size_t(curve)];
		int n = start;
		do {
			out.push_back(n);
			n = nodes[std::size_t(n)].next;
		} while (n != start);
		return out;
	}

	Word curve_word(int curve) const {
		Word w;
		for (int n : curve_nodes(curve))
			if (!nodes[std::size_t(n)].is_cross)
				w.push_back({nodes[std::size_t(n)].edge, nodes[std::size_t(n)].to_side});
		return w;
	}

	std::vector<int> curve_crossings(int curve) const {
		std::vector<int> out;
		for (int n : curve_nodes(curve))
			if (nodes[std::size_t(n)].is_cross) out.push_back(n);
		return out;
	}

	i64 crossing_count() const { return crossings; }

	// Cyclic word of a crossing's curve based at that crossing, starting with
	// the first strand letter after it in the given direction.
	Word word_from_crossing(int at, bool fwd) const {
		check(nodes[std::size_t(at)].is_cross, "base point must be a crossing");
		Word w;
		int n = fwd ? nodes[std::size_t(at)].next : nodes[std::size_t(at)].prev;
		while (n != at) {
			const Node& nd = nodes[std::size_t(n)];
			if (!nd.is_cross)
				w.push_back(fwd ? Letter{nd.edge, nd.to_side} : Letter{nd.edge, 1 - nd.to_side});
			n = fwd ? nd.next : nd.prev;
		}
		return w;
	}

	// --- minimization -----------------------------------------------------

	void minimize() {
		std::deque<int> work;
		std::vector<char> queued(nodes.size(), 0);
		auto push = [&](int n) {
			if (n < 0 || !nodes[std::size_t(n)].alive || !nodes[std::size_t(n)].is_cross) return;
			if (std::size_t(n) >= queued.size()) queued.resize(nodes.size(), 0);
			if (!queued[std::size_t(n)]) {
				queued[std::size_t(n)] = 1;
				work.push_back(n);
			}
		};
		for (std::size_t n = 0; n < nodes.size(); ++n)
			if (nodes[n].is_cross && nodes[n].curve == 0) push(int(n));

		while (!work.empty()) {
			int c = work.front();
			work.pop_front();
			queued[std::size_t(c)] = 0;
			if (!nodes[std::size_t(c)].alive) continue;
			int na = next_cross(c, true);
			if (na < 0 || na == c) continue;

			// The partner pair must be adjacent along the other curve; with
			// exactly two crossings both directions qualify, so try each.
			int pc = nodes[std::size_t(c)].partner, pna = nodes[std::size_t(na)].partner;
			int chosen = 0;
			for (int db : {+1, -1}) {
				if (next_cross(pc, db > 0) != pna) continue;
				if (bigon_trivial(c, na, db)) {
					chosen = db;
					break;
				}
			}
			if (chosen == 0) continue;

			check(nodes[std::size_t(c)].sign * nodes[std::size_t(na)].sign == -1,
			      "bigon crossings must have opposite signs");

			int a_before = next_cross(c, false);
			int a_after = next_cross(na, true);
			int b_side1 = next_cross(pc, chosen < 0);
			int b_side2 = next_cross(pna, chosen > 0);

			slide(c, na, chosen);
			queued.resize(nodes.size(), 0);
			for (int t : {a_before, a_after, b_side1, b_side2}) push(t);
		}
	}

private:
	void init(const Surface& S_) {
		S = &S_;
		edge_first.assign(std::size_t(S->num_edges()), -1);
		edge_last.assign(std::size_t(S->num_edges()), -1);
	}

	struct PendingSP {
		int node;
		i64 pos;  // the curve's own edge position
	};
	std::vector<std::vector<std::vector<PendingSP>>> pending_;  // [curve][edge]
	bool joint_positions_ = false;  // all curves share one position system

	void add_curve(const NormalCurve& c) {
		Trace tr = trace_corners(*c.S, c.corners);
		check(tr.components.size() == 1, "overlay curves must be connected");
		add_steps(tr.components[0]);
	}

	void add_steps(const std::vector<TraceStep>& steps) {
		int curve = int(curve_entry.size());
		pending_.emplace_back(std::size_t(S->num_edges()));
		int first = -1, last = -1;
		for (const TraceStep& st : steps) {
			int id = int(nodes.size());
			Node n;
			n.curve = curve;
			n.edge = st.edge;
			n.to_side = st.into_side;
			nodes.push_back(n);
			pending_[std::size_t(curve)][std::size_t(st.edge)].push_back({id, st.pos});
			if (first < 0) first = id;
			else {
				nodes[std::size_t(last)].next = id;
				nodes[std::size_t(id)].prev = last;
			}
			last = id;
		}
		check(first >= 0, "empty curve in overlay");
		nodes[std::size_t(last)].next = first;
		nodes[std::size_t(first)].prev = last;
		curve_entry.push_back(first);
	}

	// Strand order along each edge. A transverse pair stacks curve 0's strands
	// before curve 1's, each block in its own normal order, and the crossings
	// are computed from exactly this picture. Components traced from one
	// summed coordinate vector share a position system instead, and that
	// interleaving is forced: joint_positions_ sorts them together.
	void settle_edge_lists() {
		for (int e = 0; e < S->num_edges(); ++e) {
			std::vector<int> order;
			if (joint_positions_) {
				std::vector<PendingSP> all;
				for (auto& per_curve : pending_)
					for (auto& sp : per_curve[std::size_t(e)]) all.push_back(sp);
				std::sort(all.begin(), all.end(),
				          [](const PendingSP& x, const PendingSP& y) { return x.pos < y.pos; });
				for (auto& sp : all) order.push_back(sp.node);
			} else for (auto& per_curve : pending_) {
				auto& v = per_curve[std::size_t(e)];
				std::sort(v.begin(), v.end(),
				          [](const PendingSP& x, const PendingSP& y) { return x.pos < y.pos; });
				for (auto& sp : v) order.push_back(sp.node);
			}
			int prev = -1;
			for (int n : order) {
				nodes[std::size_t(n)].eprev = prev;
				if (prev < 0) edge_first[std::size_t(e)] = n;
				else nodes[std::size_t(prev)].enext = n;
				prev = n;
			}
			edge_last[std::size_t(e)] = prev;
		}
		pending_.clear();
	}

	struct Chord {
		int curve;
		int n_in, n_out;
		i64 r_in, r_out;                        // linearized walk coords
		std::vector<std::pair<int, int>> hits;  // (crossing node on this curve, other chord)
	};

	// Combined edge positions and totals, valid right after settle.
	void edge_positions(std::vector<i64>& pos, std::vector<i64>& width) const {
		pos.assign(nodes.size(), 0);
		width.assign(std::size_t(S->num_edges()), 0);
		for (int e = 0; e < S->num_edges(); ++e) {
			i64 p = 0;
			for (int n = edge_first[std::size_t(e)]; n != -1; n = nodes[std::size_t(n)].enext)
				pos[std::size_t(n)] = ++p;
			width[std::size_t(e)] = p;
		}
	}

	void make_crossings() {
		std::vector<i64> pos, width;
		edge_positions(pos, width);

		std::vector<i64> stride(std::size_t(S->num_triangles()), 4);
		for (int t = 0; t < S->num_triangles(); ++t)
			for (int s = 0; s < 3; ++s)
				stride[std::size_t(t)] =
				    std::max(stride[std::size_t(t)], width[std::size_t(S->edge_at(t, s))] + 2);

		// Boundary walk coordinate of a strand point seen from triangle t:
		// slot then local position from the slot's tail, linearized.
		auto walk_r = [&](int node, int t) -> i64 {
			int e = nodes[std::size_t(node)].edge;
			for (int which = 0; which < 2; ++which) {
				const Incidence& in = S->incidence(e, which);
				if (in.tri == t) {
					i64 local = (which == 0) ? pos[std::size_t(node)]
					                         : width[std::size_t(e)] + 1 - pos[std::size_t(node)];
					return i64(in.slot) * stride[std::size_t(t)] + local;
				}
			}
			check(false, "strand point not on this triangle");
			return -1;
		};

		std::vector<std::vector<Chord>> tri_chords(std::size_t(S->num_triangles()));
		for (int curve = 0; curve < num_curves(); ++curve) {
			std::vector<int> walk = curve_nodes(curve);
			for (std::size_t i = 0; i < walk.size(); ++i) {
				int n1 = walk[i];
				int n2 = walk[(i + 1) % walk.size()];
				const Node& d1 = nodes[std::size_t(n1)];
				const Node& d2 = nodes[std::size_t(n2)];
				int t = letter_target(*S, {d1.edge, d1.to_side}).tri;
				check(letter_source(*S, {d2.edge, d2.to_side}).tri == t, "passage does not connect");
				Chord ch;
				ch.curve = curve;
				ch.n_in = n1;
				ch.n_out = n2;
				ch.r_in = walk_r(n1, t);
				ch.r_out = walk_r(n2, t);
				tri_chords[std::size_t(t)].push_back(ch);
			}
		}

		for (int t = 0; t < S->num_triangles(); ++t) {
			auto& chords = tri_chords[std::size_t(t)];
			const i64 M = 3 * stride[std::size_t(t)];
			auto off = [&](i64 from, i64 x) { return ((x - from) % M + M) % M; };

			for (std::size_t ia = 0; ia < chords.size(); ++ia) {
				if (chords[ia].curve != 0) continue;
				for (std::size_t ib = 0; ib < chords.size(); ++ib) {
					if (chords[ib].curve == 0) continue;
					Chord& A = chords[ia];
					Chord& B = chords[ib];
					i64 span = off(A.r_in, A.r_out);
					bool in_in = 0 < off(A.r_in, B.r_in) && off(A.r_in, B.r_in) < span;
					bool in_out = 0 < off(A.r_in, B.r_out) && off(A.r_in, B.r_out) < span;
					if (in_in == in_out) continue;  // nested or disjoint

					int an = int(nodes.size());
					Node cna;
					cna.curve = A.curve;
					cna.is_cross = true;
					cna.tri = t;
					nodes.push_back(cna);
					int bn = int(nodes.size());
					Node cnb;
					cnb.curve = B.curve;
					cnb.is_cross = true;
					cnb.tri = t;
					nodes.push_back(cnb);
					nodes[std::size_t(an)].partner = bn;
					nodes[std::size_t(bn)].partner = an;
					// ccw order is [a+, b+, a-, b-] iff the boundary runs
					// (Qa, Qb, Pa, Pb)
					i64 oQb = off(A.r_out, B.r_out);
					i64 oPa = off(A.r_out, A.r_in);
					i64 oPb = off(A.r_out, B.r_in);
					int sign = (oQb < oPa && oPa < oPb) ? +1 : -1;
					nodes[std::size_t(an)].sign = sign;
					nodes[std::size_t(bn)].sign = -sign;
					A.hits.push_back({an, int(ib)});
					B.hits.push_back({bn, int(ia)});
					++crossings;
				}
			}

			// V-rule: order a chord's crossings by the other chord's endpoint
			// that lies inside this chord's interval. Valid because chords of
			// one curve are pairwise disjoint.
			for (Chord& ch : chords) {
				if (ch.hits.empty()) continue;
				std::vector<std::pair<i64, int>> keyed;
				i64 span = off(ch.r_in, ch.r_out);
				for (auto& [cn, other_idx] : ch.hits) {
					const Chord& other = chords[std::size_t(other_idx)];
					i64 o_in = off(ch.r_in, other.r_in);
					i64 o_out = off(ch.r_in, other.r_out);
					bool use_in = 0 < o_in && o_in < span;
					bool use_out = 0 < o_out && o_out < span;
					check(use_in != use_out, "exactly one endpoint must be inside");
					keyed.push_back({use_in ? o_in : o_out, cn});
				}
				std::sort(keyed.begin(), keyed.end());
				int at = ch.n_in;
				for (auto& [key, cn] : keyed) {
					(void)key;
					nodes[std::size_t(cn)].prev = at;
					nodes[std::size_t(cn)].next = nodes[std::size_t(at)].next;
					nodes[std::size_t(nodes[std::size_t(at)].next)].prev = cn;
					nodes[std::size_t(at)].next = cn;
					at = cn;
				}
			}
		}
	}

	// --- bigon machinery --------------------------------------------------

	// Next crossing strictly after n in the given direction; n itself when it
	// is the only crossing on its curve; -1 when the curve has none.
	int next_cross(int n, bool fwd) const {
		int cur = fwd ? nodes[std::size_t(n)].next : nodes[std::size_t(n)].prev;
		while (cur != n) {
			if (nodes[std::size_t(cur)].is_cross) return cur;
			cur = fwd ? nodes[std::size_t(cur)].next : nodes[std::size_t(cur)].prev;
		}
		return nodes[std::size_t(n)].is_cross ? n : -1;
	}

	// Strand points strictly between two nodes along a curve.
	std::vector<int> arc_between(int from, int to, bool fwd) const {
		std::vector<int> out;
		int cur = fwd ? nodes[std::size_t(from)].next : nodes[std::size_t(from)].prev;
		while (cur != to) {
			check(!nodes[std::size_t(cur)].is_cross, "arc interior must be crossing-free");
			out.push_back(cur);
			cur = fwd ? nodes[std::size_t(cur)].next : nodes[std::size_t(cur)].prev;
		}
		return out;
	}

	Word arc_word(const std::vector<int>& sps, bool fwd) const {
		Word w;
		for (int n : sps) {
			const Node& nd = nodes[std::size_t(n)];
			w.push_back(fwd ? Letter{nd.edge, nd.to_side} : Letter{nd.edge, 1 - nd.to_side});
		}
		return w;
	}

	bool bigon_trivial(int c, int na, int db) const {
		Word loop = arc_word(arc_between(c, na, true), true);
		Word wb = arc_word(
		    arc_between(nodes[std::size_t(c)].partner, nodes[std::size_t(na)].partner, db > 0),
		    db > 0);
		Word binv = inverse(wb);
		loop.insert(loop.end(), binv.begin(), binv.end());
		return free_reduce(loop).empty();
	}

	void unlink_from_edge(int n) {
		const Node& nd = nodes[std::size_t(n)];
		int e = nd.edge;
		if (nd.eprev >= 0) nodes[std::size_t(nd.eprev)].enext = nd.enext;
		else edge_first[std::size_t(e)] = nd.enext;
		if (nd.enext >= 0) nodes[std::size_t(nd.enext)].eprev = nd.eprev;
		else edge_last[std::size_t(e)] = nd.eprev;
	}

	void insert_on_edge(int n, int anchor, bool after) {
		int e = nodes[std::size_t(anchor)].edge;
		nodes[std::size_t(n)].edge = e;
		if (after) {
			int an = nodes[std::size_t(anchor)].enext;
			nodes[std::size_t(n)].eprev = anchor;
			nodes[std::size_t(n)].enext = an;
			if (an >= 0) nodes[std::size_t(an)].eprev = n;
			else edge_last[std::size_t(e)] = n;
			nodes[std::size_t(anchor)].enext = n;
		} else {
			int ap = nodes[std::size_t(anchor)].eprev;
			nodes[std::size_t(n)].enext = anchor;
			nodes[std::size_t(n)].eprev = ap;
			if (ap >= 0) nodes[std::size_t(ap)].enext = n;
			else edge_first[std::size_t(e)] = n;
			nodes[std::size_t(anchor)].eprev = n;
		}
	}

	void drop_from_curve(int n) {
		const Node& nd = nodes[std::size_t(n)];
		nodes[std::size_t(nd.prev)].next = nd.next;
		nodes[std::size_t(nd.next)].prev = nd.prev;
		nodes[std::size_t(n)].alive = false;
		int& entry = curve_entry[std::size_t(nd.curve)];
		if (entry == n) entry = nd.next;
	}

	// Remove the bigon (c, na): reroute the first curve's arc parallel to the
	// second's, on the side away from the vanished disk.
	void slide(int c, int na, int db) {
		int curve_a = nodes[std::size_t(c)].curve;
		std::vector<int> oldsps = arc_between(c, na, true);
		std::vector<int> bsps = arc_between(
		    nodes[std::size_t(c)].partner, nodes[std::size_t(na)].partner, db > 0);

		// With sign s at c and travel sense db along the second curve, the
		// disk sits on the right of travel iff s*db = +1.
		bool disk_right = nodes[std::size_t(c)].sign * db > 0;

		int before = nodes[std::size_t(c)].prev;
		int after = nodes[std::size_t(na)].next;

		for (int n : oldsps) {
			unlink_from_edge(n);
			nodes[std::size_t(n)].alive = false;
		}
		drop_from_curve(nodes[std::size_t(c)].partner);
		drop_from_curve(nodes[std::size_t(na)].partner);
		nodes[std::size_t(c)].alive = false;
		nodes[std::size_t(na)].alive = false;

		std::vector<int> fresh;
		for (int bn : bsps) {
			int travel_side = (db > 0) ? nodes[std::size_t(bn)].to_side
			                           : 1 - nodes[std::size_t(bn)].to_side;
			// the new strand goes on the disk-free side; left of travel is
			// the increasing direction iff the travel crossing enters side 1
			bool increasing = (disk_right == (travel_side == 1));
			int id = int(nodes.size());
			Node sp;
			sp.curve = curve_a;
			sp.edge = nodes[std::size_t(bn)].edge;
			sp.to_side = travel_side;
			nodes.push_back(sp);
			insert_on_edge(id, bn, increasing);
			fresh.push_back(id);
		}

		int& entry = curve_entry[std::size_t(curve_a)];
		if (before == na) {
			// the pair bounded the entire rest of the curve; the reroute IS
			// the curve now, and it cannot be empty since normal curves are
			// never null-homotopic
			check(after == c, "degenerate bigon must close up on both sides");
			check(!fresh.empty(), "slide would erase the curve");
			for (std::size_t i = 0; i < fresh.size(); ++i) {
				nodes[std::size_t(fresh[i])].next = fresh[(i + 1) % fresh.size()];
				nodes[std::size_t(fresh[i])].prev = fresh[(i + fresh.size() - 1) % fresh.size()];
			}
			entry = fresh[0];
		} else {
			int at = before;
			for (int id : fresh) {
				nodes[std::size_t(id)].prev = at;
				nodes[std::size_t(at)].next = id;
				at = id;
			}
			nodes[std::size_t(at)].next = after;
			nodes[std::size_t(after)].prev = at;
			if (!nodes[std::size_t(entry)].alive) entry = after;
		}

		crossings -= 2;
		check(crossings >= 0, "crossing count went negative");
	}
};

// ---------------------------------------------------------------------------

struct IntersectionDiagram {
	i64 crossings = 0;
	// Crossing signs along each curve's cyclic orientation, minimal position.
	std::vector<int> signs_a, signs_b;
};

inline IntersectionDiagram intersection_diagram(const NormalCurve& a, const NormalCurve& b) {
	require_same_surface(a, b);
	IntersectionDiagram d;
	if (canonical(a) == canonical(b)) return d;
	Overlay ov = Overlay::pair(a, b);
	ov.minimize();
	d.crossings = ov.crossing_count();
	for (int n : ov.curve_crossings(0)) d.signs_a.push_back(ov.nodes[std::size_t(n)].sign);
	for (int n : ov.curve_crossings(1)) d.signs_b.push_back(ov.nodes[std::size_t(n)].sign);
	return d;
}

inline i64 geometric_intersection(const NormalCurve& a, const NormalCurve& b) {
	return intersection_diagram(a, b).crossings;
}

}  // namespace ccs
