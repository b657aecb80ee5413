#pragma once

// Deterministic audit sweeps over the path and projection bounds. Every
// sweep draws its samples from a seeded generator, so two runs with the
// same configuration produce byte-identical reports. A violation is
// counted only when the certified intervals leave no room for doubt;
// anything inconclusive is reported as unknown, and samples the engine
// cannot finish are reported as skipped.

#include <sstream>

#include "survival.hpp"
#include "twist.hpp"

namespace ccs {

struct AuditConfig {
	u64 seed = 20260822;
	int samples = 10;
	i64 bgit = 8;     // projection bound along geodesics missing no vertex
	i64 cutoff = 24;  // term cutoff for the distance comparison
};

struct AuditReport {
	std::string name;
	int checked = 0, passed = 0, unknown = 0, skipped = 0, violations = 0;
	std::vector<std::string> lines;

	void note(std::string s) { lines.push_back(std::move(s)); }

	std::string render() const {
		std::ostringstream os;
		os << "audit " << name << ": checked=" << checked << " passed=" << passed
		   << " unknown=" << unknown << " skipped=" << skipped
		   << " violations=" << violations << "\n";
		for (const std::string& s : lines) os << "  " << s << "\n";
		os << "audit " << name << " verdict: " << (violations ? "VIOLATION" : "PASS") << "\n";
		return os.str();
	}
};

// ---- deterministic curve generation --------------------------------------

// Hand-picked essential curves of a registry surface; the longest sphere
// intervals cut off a z-disk and are the only non-surviving entries.
inline std::vector<NormalCurve> seed_curves(const Surface& S) {
	std::vector<NormalCurve> out;
	if (S.genus() == 0) {
		int n = S.num_punctures() - 1;
		for (int i = 1; i <= n; ++i)
			for (int j = i + 1; j <= n && j - i <= 3; ++j)
				out.push_back(interval_curve(S, i, j));
	} else {
		for (int i = 0; i < S.num_punctures(); ++i) out.push_back(vertical_curve(S, i));
		out.push_back(horizontal_curve(S));
	}
	return out;
}

inline std::vector<NormalCurve> surviving_seed_curves(const Surface& S) {
	std::vector<NormalCurve> out;
	for (NormalCurve& c : seed_curves(S))
		if (is_surviving(c)) out.push_back(std::move(c));
	return out;
}

// Random surviving curve: twists of a surviving seed about arbitrary seeds.
// Twisting is a homeomorphism fixing z, so survival is preserved.
inline NormalCurve random_surviving(SplitMix64& rng, const std::vector<NormalCurve>& surviving,
                                    const std::vector<NormalCurve>& seeds) {
	NormalCurve c = surviving[rng.below(surviving.size())];
	int rounds = int(1 + rng.below(3));
	for (int t = 0; t < rounds; ++t) {
		const NormalCurve& about = seeds[rng.below(seeds.size())];
		i64 p = rng.pick_int(-3, 3);
		if (p == 0) p = 1;
		c = dehn_twist(c, about, p);
	}
	return c;
}

// Random pair of distinct surviving curves.
inline std::pair<NormalCurve, NormalCurve> random_surviving_pair(
    SplitMix64& rng, const std::vector<NormalCurve>& surviving,
    const std::vector<NormalCurve>& seeds) {
	NormalCurve x = random_surviving(rng, surviving, seeds);
	for (int tries = 0; tries < 8; ++tries) {
		NormalCurve y = random_surviving(rng, surviving, seeds);
		if (!(canonical(x) == canonical(y))) return {std::move(x), std::move(y)};
	}
	throw Error("random pair generation kept colliding");
}

// ---- the audits ----------------------------------------------------------

// Survival paths against the two-sided distance comparison: a path can never
// be shorter than the certified distance, and its length must stay within
// the upper estimate built from certified projection terms.
inline AuditReport audit_qg(const Surface& S, const AuditConfig& cfg) {
	AuditReport rep;
	rep.name = "qg";
	SplitMix64 rng(cfg.seed ^ 0x71u);
	std::vector<NormalCurve> surv = surviving_seed_curves(S), seeds = seed_curves(S);
	i64 max_len = 0;
	for (int s = 0; s < cfg.samples; ++s) {
		try {
			auto [x, y] = random_surviving_pair(rng, surv, seeds);
			SurvivalPath sp = survival_path(S, x, y);
			FormulaReport fr = distance_formula(S, x, y, cfg.cutoff);
			++rep.checked;
			i64 len = sp.length();
			if (len > max_len) max_len = len;
			if (len < fr.ds.lo) {
				++rep.violations;
				rep.note("sample " + std::to_string(s) + ": path shorter than the distance");
				continue;
			}
			i64 rhs = 2 * cfg.cutoff * cfg.cutoff + 2 * cfg.cutoff * fr.certified_sum;
			if (len <= rhs) ++rep.passed;
			else ++rep.unknown;
			if (fr.lower == Verdict::Violation || fr.upper == Verdict::Violation) {
				++rep.violations;
				rep.note("sample " + std::to_string(s) + ": distance comparison failed");
			}
		} catch (const Error&) {
			++rep.skipped;
		}
	}
	rep.note("max path length " + std::to_string(max_len));
	return rep;
}

// Triangles of survival paths: the largest distance from a vertex of one
// side to the union of the other two. Purely observational; no numeric
// thinness bound is asserted.
inline AuditReport audit_slim(const Surface& S, const AuditConfig& cfg) {
	AuditReport rep;
	rep.name = "slim";
	SplitMix64 rng(cfg.seed ^ 0x72u);
	std::vector<NormalCurve> surv = surviving_seed_curves(S), seeds = seed_curves(S);
	GraphView view = GraphView::surviving(S);
	i64 max_thin = 0;
	bool saw_unbounded = false;
	for (int s = 0; s < cfg.samples; ++s) {
		try {
			auto [x, y] = random_surviving_pair(rng, surv, seeds);
			NormalCurve z = random_surviving(rng, surv, seeds);
			if (canonical(z) == canonical(x) || canonical(z) == canonical(y)) {
				++rep.skipped;
				continue;
			}
			SurvivalPath xy = survival_path(S, x, y);
			SurvivalPath xz = survival_path(S, x, z);
			SurvivalPath yz = survival_path(S, y, z);
			std::vector<NormalCurve> others = xz.vertices;
			others.insert(others.end(), yz.vertices.begin(), yz.vertices.end());
			++rep.checked;
			for (const NormalCurve& v : xy.vertices) {
				i64 best = kUnbounded;
				for (const NormalCurve& w : others) {
					i64 hi = curve_distance(view, v, w).hi;
					if (hi < best) best = hi;
				}
				if (best == kUnbounded) saw_unbounded = true;
				else if (best > max_thin) max_thin = best;
			}
			++rep.passed;
		} catch (const Error&) {
			++rep.skipped;
		}
	}
	rep.note("max observed offset " + std::to_string(max_thin) +
	         (saw_unbounded ? " (some offsets unresolved)" : ""));
	return rep;
}

// Projection control along main geodesics: witnesses that are not vertices
// see the whole geodesic within the bgit bound and the whole survival path
// within bgit+4; witnesses that are vertices control their detour endpoints
// within 2*bgit of the endpoint projections. Also checks that a geodesic
// carries at most length/2 witnesses.
inline AuditReport audit_bgit(const Surface& S, const AuditConfig& cfg) {
	AuditReport rep;
	rep.name = "bgit";
	SplitMix64 rng(cfg.seed ^ 0x73u);
	std::vector<NormalCurve> surv = surviving_seed_curves(S), seeds = seed_curves(S);
	std::vector<Witness> ws = standard_witnesses(S);
	i64 M = cfg.bgit;
	for (int s = 0; s < cfg.samples; ++s) {
		try {
			auto [x, y] = random_surviving_pair(rng, surv, seeds);
			SurvivalPath sp = survival_path(S, x, y);
			if (!sp.main_is_geodesic()) {
				++rep.skipped;
				continue;
			}
			++rep.checked;
			if (2 * i64(sp.used.size()) > sp.main_distance.hi) {
				++rep.violations;
				rep.note("sample " + std::to_string(s) + ": too many witnesses on one geodesic");
			}
			for (const Witness& W : ws) {
				CanonicalCode wall = canonical(W.boundary);
				int at = -1;
				for (std::size_t i = 0; i < sp.main.size(); ++i)
					if (canonical(sp.main[i]) == wall) at = int(i);
				if (at < 0) {
					std::vector<NormalCurve> proj;
					for (const NormalCurve& v : sp.main)
						for (NormalCurve& p : subsurface_projection(v, W))
							proj.push_back(std::move(p));
					Distance dg = diameter(W.view(), proj);
					if (dg.hi <= M) ++rep.passed;
					else if (dg.lo > M) {
						++rep.violations;
						rep.note("sample " + std::to_string(s) + ": geodesic spread " +
						         std::to_string(dg.lo) + " in " + S.puncture_name(W.co_puncture));
					} else ++rep.unknown;
					for (const NormalCurve& v : sp.vertices)
						for (NormalCurve& p : subsurface_projection(v, W))
							proj.push_back(std::move(p));
					Distance dp = diameter(W.view(), proj);
					if (dp.hi <= M + 4) ++rep.passed;
					else if (dp.lo > M + 4) {
						++rep.violations;
						rep.note("sample " + std::to_string(s) + ": path spread " +
						         std::to_string(dp.lo) + " in " + S.puncture_name(W.co_puncture));
					} else ++rep.unknown;
				} else {
					Distance whole = witness_distance(W, x, y);
					Distance ends = witness_distance(W, sp.main[std::size_t(at) - 1],
					                                 sp.main[std::size_t(at) + 1]);
					if (ends.hi <= 2 * M + whole.lo) ++rep.passed;
					else if (whole.hi != kUnbounded && ends.lo > 2 * M + whole.hi) {
						++rep.violations;
						rep.note("sample " + std::to_string(s) + ": detour endpoints drift in " +
						         S.puncture_name(W.co_puncture));
					} else ++rep.unknown;
				}
			}
		} catch (const Error&) {
			++rep.skipped;
		}
	}
	return rep;
}

// At scale 2*bgit, at most one witness can be large for all three sides of
// a triangle of curves.
inline AuditReport audit_triples(const Surface& S, const AuditConfig& cfg) {
	AuditReport rep;
	rep.name = "triples";
	SplitMix64 rng(cfg.seed ^ 0x74u);
	std::vector<NormalCurve> surv = surviving_seed_curves(S), seeds = seed_curves(S);
	std::vector<Witness> ws = standard_witnesses(S);
	i64 R = 2 * cfg.bgit;
	int big_total = 0;
	for (int s = 0; s < cfg.samples; ++s) {
		try {
			auto [x, y] = random_surviving_pair(rng, surv, seeds);
			NormalCurve z = random_surviving(rng, surv, seeds);
			if (canonical(z) == canonical(x) || canonical(z) == canonical(y)) {
				++rep.skipped;
				continue;
			}
			++rep.checked;
			int big = 0;
			for (const Witness& W : ws) {
				Distance dxy = witness_distance(W, x, y);
				Distance dxz = witness_distance(W, x, z);
				Distance dyz = witness_distance(W, y, z);
				bool some_large = dxy.lo >= R || dxz.lo >= R || dyz.lo >= R;
				bool all_half = dxy.lo >= R / 2 && dxz.lo >= R / 2 && dyz.lo >= R / 2;
				if (some_large && all_half) ++big;
			}
			big_total += big;
			if (big >= 2) {
				++rep.violations;
				rep.note("sample " + std::to_string(s) + ": " + std::to_string(big) +
				         " witnesses large on all three sides");
			} else ++rep.passed;
		} catch (const Error&) {
			++rep.skipped;
		}
	}
	rep.note("certified large-on-all-sides witnesses: " + std::to_string(big_total));
	return rep;
}

inline std::vector<AuditReport> run_all_audits(const Surface& S, const AuditConfig& cfg) {
	return {audit_qg(S, cfg), audit_slim(S, cfg), audit_bgit(S, cfg), audit_triples(S, cfg)};
}

}  // namespace ccs
