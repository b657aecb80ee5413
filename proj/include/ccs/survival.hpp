#pragma once

// Survival paths and the estimates that control them: the two-sided distance
// comparison against witness projection sums, the projection inequality
// between overlapping witnesses, and the induced order on witnesses with
// large projections.
//
// Every numeric check reports one of three verdicts. Distances come as
// certified intervals, so a bound is only declared violated when the interval
// lies strictly on the wrong side; anything straddling stays unknown.

#include "witness.hpp"

namespace ccs {

enum class Verdict { Pass, Unknown, Violation };

inline const char* to_string(Verdict v) {
	if (v == Verdict::Pass) return "PASS";
	if (v == Verdict::Unknown) return "UNKNOWN";
	return "VIOLATION";
}

// ---- survival paths ------------------------------------------------------

struct SurvivalPath {
	std::vector<NormalCurve> vertices;  // the path itself; every vertex survives
	std::vector<int> from_witness;      // per vertex: index into used, or -1
	std::vector<NormalCurve> main;      // the underlying path in the full graph
	Distance main_distance;
	std::vector<Witness> used;  // witnesses whose boundaries were detoured

	bool main_is_geodesic() const {
		return main_distance.exact() && i64(main.size()) == main_distance.hi + 1;
	}
	i64 length() const { return i64(vertices.size()) - 1; }
};

// Path between surviving curves: a path in the full graph with every
// non-surviving vertex replaced by a geodesic across its witness. Distinct
// witness boundaries always cross (two disjoint z-disks would have to nest,
// forcing a third puncture into the outer one), so replaced vertices are
// never adjacent and each detour connects two untouched main-path vertices.
inline SurvivalPath survival_path(const Surface& S, const NormalCurve& x, const NormalCurve& y) {
	if (!is_surviving(x) || !is_surviving(y))
		throw NotSurvivingEndpoint("survival paths connect surviving curves");
	GraphView full = GraphView::full(S);
	SurvivalPath sp;
	sp.main_distance = curve_distance(full, x, y);
	sp.main = sp.main_distance.path;
	if (sp.main.empty()) {
		auto up = detail::descend(full, x, y);
		if (!up) throw Error("no explicit path in the full graph");
		sp.main = *up;
	}

	std::vector<NormalCurve> verts;
	std::vector<int> from;
	for (std::size_t i = 0; i < sp.main.size(); ++i) {
		const NormalCurve& v = sp.main[i];
		if (is_surviving(v)) {
			verts.push_back(v);
			from.push_back(-1);
			continue;
		}
		check(i > 0 && i + 1 < sp.main.size(), "non-surviving endpoint slipped through");
		Witness W = witness_of(v);
		Distance det = curve_distance(W.view(), sp.main[i - 1], sp.main[i + 1]);
		if (det.path.empty()) throw Error("witness detour is not constructible");
		for (std::size_t j = 1; j + 1 < det.path.size(); ++j) {
			verts.push_back(det.path[j]);
			from.push_back(int(sp.used.size()));
		}
		sp.used.push_back(std::move(W));
	}
	for (std::size_t i = 0; i < verts.size(); ++i) {
		if (!sp.vertices.empty() && canonical(sp.vertices.back()) == canonical(verts[i]))
			continue;
		sp.vertices.push_back(verts[i]);
		sp.from_witness.push_back(from[i]);
	}
	for (std::size_t i = 0; i + 1 < sp.vertices.size(); ++i)
		check(geometric_intersection(sp.vertices[i], sp.vertices[i + 1]) == 0,
		      "survival path lost adjacency");
	for (const NormalCurve& v : sp.vertices) check(is_surviving(v), "dead vertex on the path");
	return sp;
}

// ---- distance comparison -------------------------------------------------

struct FormulaTerm {
	std::string witness;  // co-puncture name, or "whole" for the surface itself
	Distance d;
	bool decided = false;  // certainly above or certainly below the cutoff
	i64 certified = 0;     // cutoff contribution certified from below
};

struct FormulaReport {
	i64 k = 24;
	Distance ds;  // distance in the surviving graph
	std::vector<FormulaTerm> terms;
	i64 certified_sum = 0;
	Verdict lower = Verdict::Unknown, upper = Verdict::Unknown;
};

// Compare the surviving distance against the cutoff sum of projection
// distances: ds >= sum/96 and ds <= 2k^2 + 2k*sum. Terms are certified from
// below, so the reported sum never exceeds the true one over all witnesses:
// the lower comparison can certify a violation, the upper one can only ever
// certify consistency.
inline FormulaReport distance_formula(const Surface& S, const NormalCurve& x,
                                      const NormalCurve& y, i64 k = 24) {
	if (k < 24) throw KTooSmall("the lower comparison needs a cutoff of at least 24");
	FormulaReport rep;
	rep.k = k;
	rep.ds = curve_distance(GraphView::surviving(S), x, y);

	auto add = [&](std::string name, Distance d) {
		FormulaTerm t;
		t.witness = std::move(name);
		t.d = d;
		t.decided = d.lo >= k || d.hi < k;
		t.certified = d.lo >= k ? d.lo : 0;
		rep.certified_sum += t.certified;
		rep.terms.push_back(std::move(t));
	};
	add("whole", curve_distance(GraphView::full(S), x, y));
	for (const Witness& W : standard_witnesses(S))
		add(S.puncture_name(W.co_puncture), witness_distance(W, x, y));

	bool lower_viol = rep.ds.hi != kUnbounded && rep.ds.hi * 96 < rep.certified_sum;
	if (lower_viol) rep.lower = Verdict::Violation;
	else if (rep.ds.lo * 96 >= rep.certified_sum) rep.lower = Verdict::Pass;

	i64 rhs = 2 * k * k + 2 * k * rep.certified_sum;
	if (rep.ds.hi != kUnbounded && rep.ds.hi <= rhs) rep.upper = Verdict::Pass;
	return rep;
}

// ---- projection inequalities ---------------------------------------------

struct BehrstockCheck {
	Distance forward;   // inside W, against the other boundary
	Distance backward;  // inside W', against this boundary
	Verdict verdict = Verdict::Unknown;
};

// A projection distance of at least 10 to the other boundary inside one
// witness forces at most 4 back inside the other.
inline BehrstockCheck behrstock_check(const Witness& W, const Witness& Wp,
                                      const NormalCurve& u) {
	BehrstockCheck out;
	out.forward = witness_distance(W, u, Wp.boundary);
	out.backward = witness_distance(Wp, u, W.boundary);
	if (out.forward.hi <= 9 || out.backward.hi <= 4) out.verdict = Verdict::Pass;
	else if (out.forward.lo >= 10 && out.backward.lo >= 5) out.verdict = Verdict::Violation;
	return out;
}

// ---- the order on witnesses with large projections -----------------------

enum class Membership { In, Out, Undecided };

struct OrderReport {
	i64 k = 20;
	std::vector<Membership> member;  // aligned with the witness pool
	int in_count = 0, out_count = 0, undecided_count = 0;
	int decided_pairs = 0, undecided_pairs = 0;
	Verdict verdict = Verdict::Pass;  // Violation only when some axiom certainly fails
	std::vector<std::string> notes;
};

namespace detail {

struct TriState {
	bool yes = false, no = false;
};

inline TriState at_least(const Distance& d, i64 c) { return {d.lo >= c, d.hi < c}; }
inline TriState at_most(const Distance& d, i64 c) { return {d.hi <= c, d.lo > c}; }

}  // namespace detail

// Membership of each pool witness in the large-projection set for x,y, and
// the order axioms on every pair certified inside: the four defining
// conditions must agree, the relation must be antisymmetric, and for a
// cutoff of at least 20 every inside pair must be comparable.
inline OrderReport behrstock_order(const Surface& S, const NormalCurve& x, const NormalCurve& y,
                                   const std::vector<Witness>& pool, i64 k = 20) {
	if (k < 20) throw KTooSmall("the total order needs a cutoff of at least 20");
	(void)S;
	OrderReport rep;
	rep.k = k;
	std::vector<Distance> dxy;
	for (const Witness& W : pool) {
		Distance d = witness_distance(W, x, y);
		Membership m = d.lo >= k   ? Membership::In
		               : d.hi < k ? Membership::Out
		                          : Membership::Undecided;
		rep.member.push_back(m);
		if (m == Membership::In) ++rep.in_count;
		else if (m == Membership::Out) ++rep.out_count;
		else ++rep.undecided_count;
		dxy.push_back(d);
	}
	// certified relation per ordered pair: 0 unknown, 1 before, 2 after
	std::vector<std::vector<int>> rel(pool.size(), std::vector<int>(pool.size(), 0));
	for (std::size_t a = 0; a < pool.size(); ++a) {
		if (rep.member[a] != Membership::In) continue;
		for (std::size_t b = a + 1; b < pool.size(); ++b) {
			if (rep.member[b] != Membership::In) continue;
			Distance q1 = witness_distance(pool[b], y, pool[a].boundary);
			Distance q2 = witness_distance(pool[a], y, pool[b].boundary);
			Distance q3 = witness_distance(pool[a], x, pool[b].boundary);
			Distance q4 = witness_distance(pool[b], x, pool[a].boundary);
			detail::TriState fwd[4] = {detail::at_least(q1, 10), detail::at_most(q2, 4),
			                           detail::at_least(q3, 10), detail::at_most(q4, 4)};
			detail::TriState rev[4] = {detail::at_least(q2, 10), detail::at_most(q1, 4),
			                           detail::at_least(q4, 10), detail::at_most(q3, 4)};
			auto any_yes = [](const detail::TriState* c) {
				return c[0].yes || c[1].yes || c[2].yes || c[3].yes;
			};
			auto any_no = [](const detail::TriState* c) {
				return c[0].no || c[1].no || c[2].no || c[3].no;
			};
			auto all_no = [](const detail::TriState* c) {
				return c[0].no && c[1].no && c[2].no && c[3].no;
			};
			bool lt = any_yes(fwd), gt = any_yes(rev);
			if ((lt && any_no(fwd)) || (gt && any_no(rev))) {
				rep.verdict = Verdict::Violation;
				rep.notes.push_back("equivalence of the order conditions fails");
			}
			if (lt && gt) {
				rep.verdict = Verdict::Violation;
				rep.notes.push_back("order relation is not antisymmetric");
			}
			if (all_no(fwd) && all_no(rev)) {
				rep.verdict = Verdict::Violation;
				rep.notes.push_back("two inside witnesses are incomparable");
			}
			if (lt || gt) ++rep.decided_pairs;
			else ++rep.undecided_pairs;
			if (lt) { rel[a][b] = 1; rel[b][a] = 2; }
			else if (gt) { rel[a][b] = 2; rel[b][a] = 1; }
		}
	}
	for (std::size_t a = 0; a < pool.size(); ++a)
		for (std::size_t b = 0; b < pool.size(); ++b)
			for (std::size_t c = 0; c < pool.size(); ++c)
				if (rel[a][b] == 1 && rel[b][c] == 1 && rel[a][c] == 2) {
					rep.verdict = Verdict::Violation;
					rep.notes.push_back("order relation is not transitive");
				}
	if (rep.in_count < 2)
		rep.notes.push_back("fewer than two witnesses certified inside; pair axioms are vacuous");
	return rep;
}

// For witnesses ordered W before W' among those with large projections for
// x,y: a projection distance of at least 14 from u to y inside W forces at
// most 8 from u to x inside W'.
inline Verdict order_aux_check(const Witness& W, const Witness& Wp, const NormalCurve& x,
                               const NormalCurve& y, const NormalCurve& u) {
	Distance a = witness_distance(W, u, y);
	Distance b = witness_distance(Wp, u, x);
	if (a.hi <= 13 || b.hi <= 8) return Verdict::Pass;
	if (a.lo >= 14 && b.lo >= 9) return Verdict::Violation;
	return Verdict::Unknown;
}

}  // namespace ccs
