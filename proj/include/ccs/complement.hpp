#pragma once

// Complement structure of an embedded curve family. The triangulation edges
// together with the curve arcs cut the surface into disk faces; faces glue
// across edge segments into the complementary pieces. Each piece carries its
// Euler characteristic, genus, boundary cycles and interior punctures.
//
// The characteristic of a piece is #faces - #interior segments + #interior
// vertices: curve-side points and crossings sit on the boundary and their
// contributions cancel around each boundary cycle, so only cells fully
// interior to the piece are counted.

#include <numeric>
#include <optional>
#include <string>

#include "overlay.hpp"

namespace ccs {

class Subdivision {
public:
	struct Cell {
		bool seg;       // true: edge segment, false: curve sub-arc
		int u, v;       // point ids, cell runs u -> v in direction 0
		int curve = -1;        // arc: overlay curve id
		int a_from = -1, a_to = -1;  // arc: overlay node ids
		int edge = -1;         // seg: surface edge
	};

	struct Piece {
		int chi = 0, genus = 0;
		int faces = 0;
		std::vector<int> punctures;  // vertex ids
		std::vector<int> cycles;
	};

	struct Cycle {
		int piece = -1;
		std::vector<int> germs;  // directed arc germs, piece on the left
	};

	const Overlay* ov;
	const Surface* S;
	std::vector<Cell> cells;
	std::vector<Piece> pieces;
	std::vector<Cycle> cycles;
	std::vector<int> vertex_piece;  // per surface vertex

	explicit Subdivision(const Overlay& overlay) : ov(&overlay), S(overlay.S) {
		build_points();
		build_cells();
		build_rotations();
		trace_faces();
		glue_pieces();
	}

	int num_pieces() const { return int(pieces.size()); }

	// Directed germ helpers: germ = 2*cell + dir, dir 0 runs u -> v.
	int germ_head(int dg) const {
		const Cell& c = cells[std::size_t(dg / 2)];
		return (dg & 1) ? c.u : c.v;
	}
	int germ_tail(int dg) const {
		const Cell& c = cells[std::size_t(dg / 2)];
		return (dg & 1) ? c.v : c.u;
	}

	int piece_left_of(int dg) const { return face_piece[std::size_t(face_of[std::size_t(dg)])]; }

	// Piece on the far side of a boundary germ.
	int piece_across(int dg) const { return piece_left_of(dg ^ 1); }

	// Free homotopy word of a boundary cycle: the push-off of that cycle.
	Word cycle_word(int cycle) const {
		Word w;
		for (int dg : cycles[std::size_t(cycle)].germs) {
			int head = germ_head(dg);
			if (head >= vertex_base) continue;
			const Overlay::Node& nd = ov->nodes[std::size_t(head)];
			if (nd.is_cross) continue;
			bool fwd = (dg & 1) == 0;
			w.push_back(fwd ? Letter{nd.edge, nd.to_side} : Letter{nd.edge, 1 - nd.to_side});
		}
		return w;
	}

	// Overlay curve ids appearing on a cycle.
	std::vector<int> cycle_curves(int cycle) const {
		std::vector<int> out;
		for (int dg : cycles[std::size_t(cycle)].germs) {
			int c = cells[std::size_t(dg / 2)].curve;
			if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
		}
		return out;
	}

	// Triangle a face lies inside.
	int face_triangle(int f) const { return tri_left_of(face_germs[std::size_t(f)][0]); }

	struct Connector {
		Word word;
		int tri_from = -1, tri_to = -1;  // triangles of the endpoint faces
	};

	// Embedded arc between two punctures that stays inside their shared
	// piece: breadth-first through the faces, crossing interior edge segments
	// only, so the arc avoids every curve.
	Connector connector_word(int v_from, int v_to) const {
		check(vertex_piece[std::size_t(v_from)] == vertex_piece[std::size_t(v_to)],
		      "punctures lie in different pieces");
		std::vector<int> prev_face(std::size_t(num_faces), -1);
		std::vector<int> prev_germ(std::size_t(num_faces), -1);
		std::vector<char> seen(std::size_t(num_faces), 0);
		std::vector<char> want(std::size_t(num_faces), 0);
		for (int g : rotation[std::size_t(vertex_base + v_to)])
			want[std::size_t(face_of[std::size_t(g)])] = 1;
		std::deque<int> q;
		for (int g : rotation[std::size_t(vertex_base + v_from)]) {
			int f = face_of[std::size_t(g)];
			if (!seen[std::size_t(f)]) {
				seen[std::size_t(f)] = 1;
				q.push_back(f);
			}
		}
		int hit = -1;
		while (!q.empty() && hit < 0) {
			int f = q.front();
			q.pop_front();
			if (want[std::size_t(f)]) {
				hit = f;
				break;
			}
			for (int g : face_germs[std::size_t(f)]) {
				if (!cells[std::size_t(g / 2)].seg) continue;
				int nf = face_of[std::size_t(g ^ 1)];
				if (seen[std::size_t(nf)]) continue;
				seen[std::size_t(nf)] = 1;
				prev_face[std::size_t(nf)] = f;
				prev_germ[std::size_t(nf)] = g;
				q.push_back(nf);
			}
		}
		check(hit >= 0, "puncture faces not connected within the piece");
		Connector conn;
		conn.tri_to = face_triangle(hit);
		int f = hit;
		while (prev_face[std::size_t(f)] >= 0) {
			int g = prev_germ[std::size_t(f)];
			// a segment germ in direction 0 has the side-0 triangle on its
			// left, so leaving through it enters side 1
			conn.word.push_back({cells[std::size_t(g / 2)].edge, (g & 1) ? 0 : 1});
			f = prev_face[std::size_t(f)];
		}
		conn.tri_from = face_triangle(f);
		std::reverse(conn.word.begin(), conn.word.end());
		return conn;
	}

private:
	int vertex_base = 0;
	std::vector<int> pid_of_node;             // overlay node -> point id (-1 dead)
	std::vector<std::vector<int>> rotation;   // per point: ccw outgoing germs
	std::vector<std::vector<int>> face_germs; // per face: its boundary germs
	std::vector<int> germ_slot;               // germ -> index in rotation[tail]
	std::vector<int> face_of;                 // germ -> face
	std::vector<int> face_piece;              // face -> piece
	std::vector<int> arc_out, arc_in;         // overlay node -> arc cell id

	int pid(int node) const {
		const Overlay::Node& nd = ov->nodes[std::size_t(node)];
		if (nd.is_cross) return pid_of_node[std::size_t(std::min(node, nd.partner))];
		return pid_of_node[std::size_t(node)];
	}

	void build_points() {
		vertex_base = int(ov->nodes.size());
		pid_of_node.assign(ov->nodes.size(), -1);
		for (std::size_t n = 0; n < ov->nodes.size(); ++n) {
			const Overlay::Node& nd = ov->nodes[n];
			if (!nd.alive) continue;
			if (nd.is_cross && nd.partner < int(n)) continue;  // pair keeps the smaller id
			pid_of_node[n] = int(n);
		}
	}

	void build_cells() {
		arc_out.assign(ov->nodes.size(), -1);
		arc_in.assign(ov->nodes.size(), -1);
		for (int curve = 0; curve < ov->num_curves(); ++curve) {
			std::vector<int> walk = ov->curve_nodes(curve);
			for (std::size_t i = 0; i < walk.size(); ++i) {
				int n1 = walk[i], n2 = walk[(i + 1) % walk.size()];
				Cell c;
				c.seg = false;
				c.u = pid(n1);
				c.v = pid(n2);
				c.curve = curve;
				c.a_from = n1;
				c.a_to = n2;
				arc_out[std::size_t(n1)] = int(cells.size());
				arc_in[std::size_t(n2)] = int(cells.size());
				cells.push_back(c);
			}
		}
		seg_after.assign(ov->nodes.size(), -1);
		seg_before.assign(ov->nodes.size(), -1);
		seg_at_tail.assign(std::size_t(S->num_edges()), -1);
		seg_at_head.assign(std::size_t(S->num_edges()), -1);
		for (int e = 0; e < S->num_edges(); ++e) {
			const Incidence& in0 = S->incidence(e, 0);
			int v_tail = S->vertex_at_corner(in0.tri, slot_tail(in0.slot));
			int v_head = S->vertex_at_corner(in0.tri, slot_head(in0.slot));
			int prev_pt = vertex_base + v_tail;
			int prev_sp = -1;
			for (int n = ov->edge_first[std::size_t(e)]; n != -1;
			     n = ov->nodes[std::size_t(n)].enext) {
				Cell c;
				c.seg = true;
				c.u = prev_pt;
				c.v = pid(n);
				c.edge = e;
				if (prev_sp < 0) seg_at_tail[std::size_t(e)] = int(cells.size());
				else seg_after[std::size_t(prev_sp)] = int(cells.size());
				seg_before[std::size_t(n)] = int(cells.size());
				cells.push_back(c);
				prev_pt = pid(n);
				prev_sp = n;
			}
			Cell c;
			c.seg = true;
			c.u = prev_pt;
			c.v = vertex_base + v_head;
			c.edge = e;
			if (prev_sp < 0) seg_at_tail[std::size_t(e)] = int(cells.size());
			else seg_after[std::size_t(prev_sp)] = int(cells.size());
			seg_at_head[std::size_t(e)] = int(cells.size());
			cells.push_back(c);
		}
	}

	std::vector<int> seg_after, seg_before;      // per strand point
	std::vector<int> seg_at_tail, seg_at_head;   // per surface edge

	int out_germ(int cell, int at_point) const {
		const Cell& c = cells[std::size_t(cell)];
		if (c.u == at_point) return 2 * cell;
		check(c.v == at_point, "germ endpoint mismatch");
		return 2 * cell + 1;
	}

	// Triangle on the left of a directed germ; for arc germs this is the
	// triangle holding the whole arc.
	int tri_left_of(int g) const {
		const Cell& c = cells[std::size_t(g / 2)];
		if (c.seg) return S->incidence(c.edge, (g & 1) ? 1 : 0).tri;
		const Overlay::Node& nd = ov->nodes[std::size_t(c.a_from)];
		if (nd.is_cross) return nd.tri;
		return S->incidence(nd.edge, nd.to_side).tri;
	}

	void build_rotations() {
		int P = vertex_base + S->num_punctures();
		rotation.assign(std::size_t(P), {});
		for (std::size_t n = 0; n < ov->nodes.size(); ++n) {
			const Overlay::Node& nd = ov->nodes[n];
			if (!nd.alive || pid_of_node[n] < 0) continue;
			int p = int(n);
			std::vector<int>& rot = rotation[std::size_t(p)];
			if (!nd.is_cross) {
				// ccw: [toward increasing, into side 0, toward decreasing, into side 1]
				int fwd = 2 * arc_out[n];
				int bwd = 2 * arc_in[n] + 1;
				int into0 = (nd.to_side == 0) ? fwd : bwd;
				int into1 = (nd.to_side == 0) ? bwd : fwd;
				rot = {out_germ(seg_after[n], p), into0, out_germ(seg_before[n], p), into1};
			} else {
				int q = nd.partner;
				int me_f = 2 * arc_out[n], me_b = 2 * arc_in[n] + 1;
				int pa_f = 2 * arc_out[std::size_t(q)], pa_b = 2 * arc_in[std::size_t(q)] + 1;
				if (nd.sign > 0) rot = {me_f, pa_f, me_b, pa_b};
				else rot = {me_f, pa_b, me_b, pa_f};
			}
		}
		for (int v = 0; v < S->num_punctures(); ++v) {
			// the corner orbit steps clockwise around the vertex, so reverse
			// it; germ direction is picked by which end of the edge this is,
			// so that loop edges register both of their end germs
			std::vector<int> cw;
			for (const auto& [t, k] : S->corners_of_vertex(v)) {
				int s = (k + 1) % 3;
				int e = S->edge_at(t, s);
				int g = (S->side_index(t, s) == 0) ? 2 * seg_at_tail[std::size_t(e)]
				                                   : 2 * seg_at_head[std::size_t(e)] + 1;
				cw.push_back(g);
			}
			rotation[std::size_t(vertex_base + v)] = std::vector<int>(cw.rbegin(), cw.rend());
		}
		germ_slot.assign(cells.size() * 2, -1);
		for (std::size_t p = 0; p < rotation.size(); ++p)
			for (std::size_t i = 0; i < rotation[p].size(); ++i) {
				check(germ_tail(rotation[p][i]) == int(p), "rotation germ not outgoing");
				germ_slot[std::size_t(rotation[p][i])] = int(i);
			}
		for (std::size_t g = 0; g < germ_slot.size(); ++g)
			check(germ_slot[g] >= 0, "germ missing from rotations");
	}

	// Next germ of the face on the left: step to the head, take the germ
	// counterclockwise-before the reversed one.
	int face_next(int dg) const {
		int head = germ_head(dg);
		int r = dg ^ 1;
		const std::vector<int>& rot = rotation[std::size_t(head)];
		int idx = germ_slot[std::size_t(r)];
		return rot[std::size_t((idx + int(rot.size()) - 1) % int(rot.size()))];
	}

	void trace_faces() {
		face_of.assign(cells.size() * 2, -1);
		int F = 0;
		for (std::size_t g0 = 0; g0 < face_of.size(); ++g0) {
			if (face_of[g0] >= 0) continue;
			face_germs.push_back({});
			int g = int(g0);
			do {
				face_of[std::size_t(g)] = F;
				face_germs.back().push_back(g);
				g = face_next(g);
			} while (g != int(g0));
			++F;
		}
		int V = 0;
		for (std::size_t p = 0; p < rotation.size(); ++p)
			if (!rotation[p].empty()) ++V;
		int E = int(cells.size());
		check(V - E + F == 2 - 2 * S->genus(), "face trace is not cellular");
		num_faces = F;
	}

	int num_faces = 0;

	struct DSU {
		std::vector<int> up;
		explicit DSU(int n) : up(std::size_t(n)) { std::iota(up.begin(), up.end(), 0); }
		int find(int x) { return up[std::size_t(x)] == x ? x : up[std::size_t(x)] = find(up[std::size_t(x)]); }
		void unite(int a, int b) { up[std::size_t(find(a))] = find(b); }
	};

	void glue_pieces() {
		DSU dsu(num_faces);
		for (std::size_t c = 0; c < cells.size(); ++c)
			if (cells[c].seg) dsu.unite(face_of[2 * c], face_of[2 * c + 1]);

		std::vector<int> root_to_piece(std::size_t(num_faces), -1);
		face_piece.assign(std::size_t(num_faces), -1);
		for (int f = 0; f < num_faces; ++f) {
			int r = dsu.find(f);
			if (root_to_piece[std::size_t(r)] < 0) {
				root_to_piece[std::size_t(r)] = int(pieces.size());
				pieces.push_back({});
			}
			face_piece[std::size_t(f)] = root_to_piece[std::size_t(r)];
			pieces[std::size_t(face_piece[std::size_t(f)])].faces += 1;
		}

		// chi = faces - interior segments + interior vertices
		std::vector<int> seg_count(pieces.size(), 0);
		for (std::size_t c = 0; c < cells.size(); ++c) {
			if (!cells[c].seg) continue;
			int p1 = face_piece[std::size_t(face_of[2 * c])];
			int p2 = face_piece[std::size_t(face_of[2 * c + 1])];
			check(p1 == p2, "edge segment must be interior to one piece");
			seg_count[std::size_t(p1)] += 1;
		}
		vertex_piece.assign(std::size_t(S->num_punctures()), -1);
		for (int v = 0; v < S->num_punctures(); ++v) {
			const std::vector<int>& rot = rotation[std::size_t(vertex_base + v)];
			check(!rot.empty(), "puncture with no incident edges");
			int p = face_piece[std::size_t(face_of[std::size_t(rot[0])])];
			for (int g : rot)
				check(face_piece[std::size_t(face_of[std::size_t(g)])] == p,
				      "puncture must be interior to one piece");
			vertex_piece[std::size_t(v)] = p;
			pieces[std::size_t(p)].punctures.push_back(v);
		}
		for (std::size_t p = 0; p < pieces.size(); ++p)
			pieces[p].chi = pieces[p].faces - seg_count[p] +
			                int(std::count(vertex_piece.begin(), vertex_piece.end(), int(p)));

		// boundary cycles: arc germs with the piece on their left
		std::vector<int> cycle_of(cells.size() * 2, -1);
		for (std::size_t g0 = 0; g0 < cells.size() * 2; ++g0) {
			if (cells[g0 / 2].seg || cycle_of[g0] >= 0) continue;
			int id = int(cycles.size());
			Cycle cy;
			cy.piece = face_piece[std::size_t(face_of[g0])];
			int g = int(g0);
			do {
				cycle_of[std::size_t(g)] = id;
				cy.germs.push_back(g);
				g = boundary_next(g);
			} while (g != int(g0));
			cycles.push_back(cy);
			pieces[std::size_t(cy.piece)].cycles.push_back(id);
		}

		for (Piece& p : pieces) {
			int b = int(p.cycles.size());
			int twog = 2 - b - p.chi;
			check(twog >= 0 && twog % 2 == 0, "piece genus must be a non-negative integer");
			p.genus = twog / 2;
		}
	}

	// Along the piece boundary: rotate counterclockwise-backward past any
	// interior segments until the next curve germ.
	int boundary_next(int dg) const {
		int head = germ_head(dg);
		const std::vector<int>& rot = rotation[std::size_t(head)];
		int idx = germ_slot[std::size_t(dg ^ 1)];
		for (int step = 0; step < int(rot.size()); ++step) {
			idx = (idx + int(rot.size()) - 1) % int(rot.size());
			int g = rot[std::size_t(idx)];
			if (!cells[std::size_t(g / 2)].seg) return g;
		}
		check(false, "boundary walk found no curve germ");
		return -1;
	}
};

// ---------------------------------------------------------------------------

enum class CurveClass { Trivial, Peripheral, Essential };

struct Classification {
	CurveClass kind = CurveClass::Essential;
	int puncture = -1;  // set for Peripheral
};

struct ComplementPiece {
	int genus = 0;
	std::vector<std::string> punctures;
	std::vector<int> boundary;  // one entry per boundary cycle: input curve index
};

struct ComplementDecomposition {
	std::vector<ComplementPiece> pieces;
};

// Cut along a family of pairwise disjoint, pairwise distinct curves.
inline ComplementDecomposition cut_along(const Surface& S,
                                         const std::vector<NormalCurve>& curves) {
	for (std::size_t i = 0; i < curves.size(); ++i)
		for (std::size_t j = i + 1; j < curves.size(); ++j)
			if (canonical(curves[i]) == canonical(curves[j]))
				throw DuplicateComponent("cut components must be distinct");
	std::vector<int> to_input;
	Overlay ov = Overlay::disjoint(S, curves, &to_input);
	Subdivision sub(ov);
	ComplementDecomposition out;
	for (std::size_t p = 0; p < sub.pieces.size(); ++p) {
		ComplementPiece cp;
		cp.genus = sub.pieces[p].genus;
		for (int v : sub.pieces[p].punctures) cp.punctures.push_back(S.puncture_name(v));
		for (int cy : sub.pieces[p].cycles) {
			std::vector<int> cc = sub.cycle_curves(cy);
			check(cc.size() == 1, "disjoint cut cycles follow one curve");
			cp.boundary.push_back(to_input[std::size_t(cc[0])]);
		}
		out.pieces.push_back(cp);
	}
	return out;
}

inline Classification classify(const NormalCurve& curve) {
	Overlay ov = Overlay::disjoint(*curve.S, {curve});
	Subdivision sub(ov);
	for (const auto& p : sub.pieces) {
		if (p.genus == 0 && p.cycles.size() == 1 && p.punctures.empty())
			return {CurveClass::Trivial, -1};
		if (p.genus == 0 && p.cycles.size() == 1 && p.punctures.size() == 1)
			return {CurveClass::Peripheral, p.punctures[0]};
	}
	return {CurveClass::Essential, -1};
}

// A curve dies exactly when one of its sides is a sphere piece holding just
// the marked point z and one other puncture; this returns that other
// puncture, or nothing when the curve survives. Throws NotEssential unless
// the input is essential.
inline std::optional<int> z_disk_partner(const NormalCurve& curve) {
	if (classify(curve).kind != CurveClass::Essential)
		throw NotEssential("survival is only defined for essential curves");
	int z = curve.S->puncture_by_name("z");
	Overlay ov = Overlay::disjoint(*curve.S, {curve});
	Subdivision sub(ov);
	for (const auto& p : sub.pieces) {
		if (p.genus != 0 || p.cycles.size() != 1 || p.punctures.size() != 2) continue;
		if (p.punctures[0] == z) return p.punctures[1];
		if (p.punctures[1] == z) return p.punctures[0];
	}
	return std::nullopt;
}

inline bool is_surviving(const NormalCurve& curve) { return !z_disk_partner(curve).has_value(); }

}  // namespace ccs
