#pragma once

// Ideal triangulations of punctured surfaces with a marked puncture z.
//
// Conventions every other header relies on:
//   * slots 0,1,2 are the sides of a triangle in counterclockwise order;
//   * corner k lies between slots k and (k+1)%3, so an arc cutting corner k
//     crosses those two slots;
//   * slot s runs from corner (s+2)%3 (its "tail") to corner s (its "head")
//     when the boundary is walked counterclockwise;
//   * positions along an edge are numbered 1..w from the tail corner of the
//     incidence-0 side; seen from the incidence-1 side the numbering reverses.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "base.hpp"

namespace ccs {

struct Incidence {
	int tri = -1;
	int slot = -1;
	friend bool operator==(const Incidence&, const Incidence&) = default;
};

inline int slot_tail(int s) { return (s + 2) % 3; }  // corner at the start of slot s
inline int slot_head(int s) { return s; }            // corner at the end

// Corner shared by two distinct slots of one triangle.
inline int corner_between(int s_in, int s_out) {
	check(s_in != s_out, "corner_between needs distinct slots");
	if (s_out == (s_in + 1) % 3) return s_in;
	return s_out;
}

class Surface {
public:
	std::string name;

	// Builds and validates. `triangles[t][s]` is the edge id at slot s.
	// `corner_labels` names the puncture at a representative corner; exactly
	// one label must be "z".
	Surface(std::string name_, std::vector<std::array<int, 3>> triangles,
	        std::vector<std::pair<std::string, std::pair<int, int>>> corner_labels)
	    : name(std::move(name_)), tri_edges_(std::move(triangles)) {
		build(corner_labels);
	}

	int num_triangles() const { return int(tri_edges_.size()); }
	int num_edges() const { return num_edges_; }
	int num_punctures() const { return int(vertex_label_.size()); }
	int genus() const { return genus_; }
	int z_vertex() const { return z_vertex_; }

	int edge_at(int t, int s) const { return tri_edges_[t][s]; }
	// Which of the edge's two incidences (t,s) is.
	int side_index(int t, int s) const { return tri_side_index_[t][s]; }
	const Incidence& incidence(int e, int which) const { return edge_sides_[e][which]; }
	Incidence partner(int t, int s) const {
		int e = edge_at(t, s);
		return edge_sides_[e][1 - side_index(t, s)];
	}

	int vertex_at_corner(int t, int k) const { return corner_vertex_[t][k]; }
	const std::string& puncture_name(int v) const { return vertex_label_[v]; }
	int puncture_by_name(const std::string& s) const {
		for (int v = 0; v < num_punctures(); ++v)
			if (vertex_label_[v] == s) return v;
		throw Error("no puncture named " + s);
	}

	// All corners around a vertex, in rotational order starting anywhere.
	std::vector<std::pair<int, int>> corners_of_vertex(int v) const {
		return vertex_corners_[v];
	}

	// Rotates (t,k) one step around its vertex: exit through slot k+1.
	std::pair<int, int> corner_step(int t, int k) const {
		Incidence p = partner(t, (k + 1) % 3);
		return {p.tri, p.slot};
	}

	bool same(const Surface& o) const { return this == &o; }

private:
	std::vector<std::array<int, 3>> tri_edges_;
	std::vector<std::array<Incidence, 2>> edge_sides_;
	std::vector<std::array<int, 3>> tri_side_index_;
	std::vector<std::array<int, 3>> corner_vertex_;
	std::vector<std::vector<std::pair<int, int>>> vertex_corners_;
	std::vector<std::string> vertex_label_;
	int num_edges_ = 0;
	int genus_ = 0;
	int z_vertex_ = -1;

	void build(const std::vector<std::pair<std::string, std::pair<int, int>>>& corner_labels) {
		int T = num_triangles();
		if (T == 0) throw MalformedTriangulation("no triangles");

		int max_edge = -1;
		for (auto& tr : tri_edges_)
			for (int e : tr) {
				if (e < 0) throw MalformedTriangulation("negative edge id");
				max_edge = std::max(max_edge, e);
			}
		num_edges_ = max_edge + 1;

		// Incidences in reading order; every edge must appear exactly twice.
		edge_sides_.assign(num_edges_, {Incidence{}, Incidence{}});
		tri_side_index_.assign(T, {-1, -1, -1});
		std::vector<int> seen(num_edges_, 0);
		for (int t = 0; t < T; ++t)
			for (int s = 0; s < 3; ++s) {
				int e = tri_edges_[t][s];
				if (seen[e] == 2) throw MalformedTriangulation("edge glued more than twice");
				edge_sides_[e][seen[e]] = Incidence{t, s};
				tri_side_index_[t][s] = seen[e];
				++seen[e];
			}
		for (int e = 0; e < num_edges_; ++e)
			if (seen[e] != 2) throw MalformedTriangulation("edge with a free side");

		// Connectivity over the dual graph.
		{
			std::vector<char> vis(T, 0);
			std::vector<int> stack{0};
			vis[0] = 1;
			int count = 1;
			while (!stack.empty()) {
				int t = stack.back();
				stack.pop_back();
				for (int s = 0; s < 3; ++s) {
					int u = partner(t, s).tri;
					if (!vis[u]) { vis[u] = 1; ++count; stack.push_back(u); }
				}
			}
			if (count != T) throw Disconnected("triangulation is not connected");
		}

		// Vertices = orbits of corners under corner_step.
		corner_vertex_.assign(T, {-1, -1, -1});
		for (int t = 0; t < T; ++t)
			for (int k = 0; k < 3; ++k) {
				if (corner_vertex_[t][k] != -1) continue;
				int v = int(vertex_corners_.size());
				vertex_corners_.emplace_back();
				int ct = t, ck = k;
				do {
					check(corner_vertex_[ct][ck] == -1, "corner orbit collision");
					corner_vertex_[ct][ck] = v;
					vertex_corners_[v].push_back({ct, ck});
					auto [nt, nk] = corner_step(ct, ck);
					ct = nt;
					ck = nk;
				} while (ct != t || ck != k);
			}

		int V = int(vertex_corners_.size());
		int chi = V - num_edges_ + T;
		if (chi % 2 != 0 || chi > 2) throw MalformedTriangulation("impossible Euler characteristic");
		genus_ = (2 - chi) / 2;

		// Labels.
		vertex_label_.assign(V, "");
		for (auto& [label, corner] : corner_labels) {
			auto [t, k] = corner;
			if (t < 0 || t >= T || k < 0 || k > 2) throw MalformedTriangulation("label corner out of range");
			int v = corner_vertex_[t][k];
			if (!vertex_label_[v].empty()) throw MalformedTriangulation("vertex labeled twice");
			vertex_label_[v] = label;
			if (label == "z") z_vertex_ = v;
		}
		for (int v = 0; v < V; ++v)
			if (vertex_label_[v].empty()) throw MalformedTriangulation("unlabeled vertex");
		if (z_vertex_ < 0) throw MalformedTriangulation("no puncture labeled z");

		// Complexity of the surface with z filled in: 3g - 3 + (#punctures - 1).
		int xi = 3 * genus_ - 3 + (V - 1);
		if (xi < 2)
			throw ComplexityTooLow(name + " has complexity " + std::to_string(xi) +
			                       ", need at least 2");
	}
};

// ---------------------------------------------------------------------------
// Registry.

// Five-times-punctured sphere plus z: a hexagon with vertices z,p1..p5 doubled
// across its boundary; both copies are fanned out from z.
//
// Edge ids: hexagon sides s0..s5 = 0..5 (s_i joins the i-th and (i+1)-st
// vertex of the cycle z,p1,..,p5), front fan diagonals d2,d3,d4 = 6,7,8,
// back fan diagonals e2,e3,e4 = 9,10,11.
inline Surface make_sphere6() {
	std::vector<std::array<int, 3>> tris = {
	    {6, 0, 1},   // front (z,p1,p2)
	    {7, 6, 2},   // front (z,p2,p3)
	    {8, 7, 3},   // front (z,p3,p4)
	    {5, 8, 4},   // front (z,p4,p5)
	    {0, 9, 1},   // back (z,p2,p1)
	    {9, 10, 2},  // back (z,p3,p2)
	    {10, 11, 3}, // back (z,p4,p3)
	    {11, 5, 4},  // back (z,p5,p4)
	};
	return Surface("S06", tris,
	               {{"z", {0, 0}}, {"p1", {0, 1}}, {"p2", {0, 2}}, {"p3", {1, 2}},
	                {"p4", {2, 2}}, {"p5", {3, 2}}});
}

// Twice-punctured torus plus z: a cyclic strip of three squares, each split by
// a diagonal; tops glue straight down to bottoms, so the vertical edges are
// loops based at the three punctures.
//
// Edge ids: horizontals h0,h1,h2 = 0,1,2 (h_i joins v_i to v_{i+1}),
// vertical loops f0,f1,f2 = 3,4,5 (f_i at v_i), diagonals d0,d1,d2 = 6,7,8.
inline Surface make_torus3() {
	std::vector<std::array<int, 3>> tris = {
	    {6, 0, 4},  // lower square 0
	    {3, 6, 0},  // upper square 0
	    {7, 1, 5},  // lower square 1
	    {4, 7, 1},  // upper square 1
	    {8, 2, 3},  // lower square 2
	    {5, 8, 2},  // upper square 2
	};
	return Surface("S13", tris, {{"z", {0, 0}}, {"p1", {0, 1}}, {"p2", {2, 1}}});
}

inline const Surface& registry_surface(const std::string& id) {
	static const std::map<std::string, Surface> reg = [] {
		std::map<std::string, Surface> m;
		m.emplace("S06", make_sphere6());
		m.emplace("S13", make_torus3());
		return m;
	}();
	auto it = reg.find(id);
	if (it == reg.end()) throw Error("unknown surface id " + id + " (have S06, S13)");
	return it->second;
}

}  // namespace ccs
