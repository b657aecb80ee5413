#pragma once

// JSON interchange. A curve document is
//
//	{"surface": "S06", "corner_counts": [[a,b,c], ...]}
//
// with one row of corner counts per triangle, rows in triangle order and
// counts in slot order. Loading resolves the surface through the registry,
// so curves from different files on the same surface id are directly
// comparable. Reports carry every input and default that shaped them.

#include <fstream>

#include <json.hpp>

#include "audit.hpp"

namespace ccs {

using Json = nlohmann::json;

inline Json curve_to_json(const NormalCurve& c) {
	Json rows = Json::array();
	for (const auto& t : c.corners) rows.push_back({t[0], t[1], t[2]});
	return Json{{"surface", c.S->name}, {"corner_counts", rows}};
}

inline NormalCurve curve_from_json(const Json& j) {
	if (!j.is_object() || !j.contains("surface") || !j.contains("corner_counts"))
		throw Error("a curve document needs surface and corner_counts");
	const Surface& S = registry_surface(j.at("surface").get<std::string>());
	Corners corners;
	for (const Json& row : j.at("corner_counts")) {
		if (!row.is_array() || row.size() != 3)
			throw Error("each corner row holds three counts");
		corners.push_back({row[0].get<i64>(), row[1].get<i64>(), row[2].get<i64>()});
	}
	validate_corners(S, corners);
	return NormalCurve{&S, std::move(corners)};
}

inline NormalCurve load_curve(const std::string& path) {
	std::ifstream in(path);
	if (!in) throw Error("cannot open " + path);
	Json j;
	try {
		in >> j;
	} catch (const Json::exception& e) {
		throw Error(path + ": " + e.what());
	}
	return curve_from_json(j);
}

inline Json distance_to_json(const Distance& d) {
	Json j;
	j["lo"] = d.lo;
	j["hi"] = d.hi == kUnbounded ? Json(nullptr) : Json(d.hi);
	j["exact"] = d.exact();
	j["value"] = d.exact() ? Json(d.lo) : Json(nullptr);
	return j;
}

inline Json path_to_json(const std::vector<NormalCurve>& path) {
	Json out = Json::array();
	for (const NormalCurve& v : path) out.push_back(curve_to_json(v));
	return out;
}

// ---- named generators ----------------------------------------------------

// Round curve enclosing exactly the punctures x and y: the straight interval
// for fan neighbours on the sphere, otherwise the loop around a thickened
// connector arc, which encloses exactly its two endpoints.
inline NormalCurve named_generator(const Surface& S, const std::string& x,
                                   const std::string& y) {
	int vx = S.puncture_by_name(x), vy = S.puncture_by_name(y);
	if (vx == vy) throw Error("a generator needs two distinct punctures");
	if (S.genus() == 0 && vx != S.z_vertex() && vy != S.z_vertex()) {
		int lo = std::min(vx, vy), hi = std::max(vx, vy);
		if (hi - lo == 1) return interval_curve(S, lo, hi);
	}
	return pair_loop(S, x, y);
}

// Every named generator of a registry surface: c_{x,y} over puncture pairs,
// plus the verticals and the horizontal on positive genus.
inline std::vector<std::pair<std::string, NormalCurve>> named_generators(const Surface& S) {
	std::vector<std::pair<std::string, NormalCurve>> out;
	for (int a = 0; a < S.num_punctures(); ++a)
		for (int b = a + 1; b < S.num_punctures(); ++b) {
			const std::string &na = S.puncture_name(a), &nb = S.puncture_name(b);
			out.emplace_back("c_{" + na + "," + nb + "}", named_generator(S, na, nb));
		}
	if (S.genus() > 0) {
		for (int i = 0; i < S.num_punctures(); ++i)
			out.emplace_back("b" + std::to_string(i), vertical_curve(S, i));
		out.emplace_back("m", horizontal_curve(S));
	}
	return out;
}

inline Json surface_to_json(const Surface& S) {
	Json j;
	j["surface"] = S.name;
	j["genus"] = S.genus();
	j["edges"] = S.num_edges();
	Json tris = Json::array();
	for (int t = 0; t < S.num_triangles(); ++t)
		tris.push_back({S.edge_at(t, 0), S.edge_at(t, 1), S.edge_at(t, 2)});
	j["triangles"] = tris;
	Json glue = Json::array();
	for (int e = 0; e < S.num_edges(); ++e) {
		const Incidence &a = S.incidence(e, 0), &b = S.incidence(e, 1);
		glue.push_back({{"edge", e},
		                {"sides", {{a.tri, a.slot}, {b.tri, b.slot}}}});
	}
	j["gluings"] = glue;
	Json punct = Json::array();
	for (int v = 0; v < S.num_punctures(); ++v) punct.push_back(S.puncture_name(v));
	j["punctures"] = punct;
	Json gens = Json::object();
	for (auto& [name, c] : named_generators(S)) gens[name] = curve_to_json(c);
	j["generators"] = gens;
	Json ws = Json::array();
	for (const Witness& W : standard_witnesses(S)) ws.push_back(S.puncture_name(W.co_puncture));
	j["witnesses"] = ws;
	return j;
}

inline Json audit_to_json(const AuditReport& r) {
	Json j;
	j["name"] = r.name;
	j["checked"] = r.checked;
	j["passed"] = r.passed;
	j["unknown"] = r.unknown;
	j["skipped"] = r.skipped;
	j["violations"] = r.violations;
	j["lines"] = r.lines;
	j["verdict"] = r.violations ? "VIOLATION" : "PASS";
	return j;
}

inline Json formula_to_json(const FormulaReport& r) {
	Json terms = Json::array();
	for (const FormulaTerm& t : r.terms) {
		Json jt;
		jt["witness"] = t.witness;
		jt["d"] = distance_to_json(t.d);
		jt["decided"] = t.decided;
		jt["certified"] = t.certified;
		terms.push_back(jt);
	}
	Json j;
	j["k"] = r.k;
	j["distance"] = distance_to_json(r.ds);
	j["terms"] = terms;
	j["certified_sum"] = r.certified_sum;
	j["lower"] = to_string(r.lower);
	j["upper"] = to_string(r.upper);
	return j;
}

inline Json order_to_json(const OrderReport& r, const std::vector<Witness>& pool,
                          const Surface& S) {
	Json member = Json::object();
	for (std::size_t i = 0; i < pool.size(); ++i) {
		Membership m = r.member[i];
		member[S.puncture_name(pool[i].co_puncture)] =
		    m == Membership::In ? "in" : m == Membership::Out ? "out" : "undecided";
	}
	Json j;
	j["k"] = r.k;
	j["member"] = member;
	j["in"] = r.in_count;
	j["out"] = r.out_count;
	j["undecided"] = r.undecided_count;
	j["decided_pairs"] = r.decided_pairs;
	j["undecided_pairs"] = r.undecided_pairs;
	j["notes"] = r.notes;
	j["verdict"] = to_string(r.verdict);
	return j;
}

inline Json survival_path_to_json(const SurvivalPath& sp) {
	Json j;
	j["vertices"] = path_to_json(sp.vertices);
	j["from_witness"] = sp.from_witness;
	j["main"] = path_to_json(sp.main);
	j["main_distance"] = distance_to_json(sp.main_distance);
	j["main_is_geodesic"] = sp.main_is_geodesic();
	Json used = Json::array();
	for (const Witness& W : sp.used) {
		Json w;
		w["co_puncture"] = W.boundary.S->puncture_name(W.co_puncture);
		w["boundary"] = curve_to_json(W.boundary);
		used.push_back(w);
	}
	j["used"] = used;
	j["length"] = sp.length();
	return j;
}

}  // namespace ccs
