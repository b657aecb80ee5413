#include <gtest/gtest.h>

#include "ccs/named.hpp"
#include "ccs/twist.hpp"

using namespace ccs;

namespace {

std::vector<NormalCurve> sphere_family(const Surface& S) {
	std::vector<NormalCurve> fam;
	for (int lo = 1; lo <= 4; ++lo)
		for (int hi = lo + 1; hi <= 5; ++hi) fam.push_back(interval_curve(S, lo, hi));
	return fam;
}

std::vector<NormalCurve> torus_family(const Surface& S) {
	std::vector<NormalCurve> fam;
	for (int i = 0; i < 3; ++i) fam.push_back(vertical_curve(S, i));
	fam.push_back(horizontal_curve(S));
	return fam;
}

}

TEST(Twist, UndoesItself) {
	for (const char* name : {"S06", "S13"}) {
		const Surface& S = registry_surface(name);
		auto fam = (S.genus() == 0) ? sphere_family(S) : torus_family(S);
		for (std::size_t i = 0; i < fam.size(); ++i)
			for (std::size_t j = 0; j < fam.size(); ++j) {
				if (i == j) continue;
				for (int n : {1, 2, -3}) {
					NormalCurve moved = dehn_twist(fam[j], fam[i], n);
					NormalCurve back = dehn_twist(moved, fam[i], -n);
					EXPECT_EQ(canonical(back), canonical(fam[j]))
					    << name << " i=" << i << " j=" << j << " n=" << n;
				}
			}
	}
}

TEST(Twist, IntersectionGrowth) {
	// i(T_a^n b, b) = |n| * i(a,b)^2
	const Surface& S6 = registry_surface("S06");
	const Surface& S13 = registry_surface("S13");
	struct Case {
		NormalCurve a, b;
	};
	std::vector<Case> cases = {
	    {interval_curve(S6, 1, 2), interval_curve(S6, 2, 3)},
	    {interval_curve(S6, 1, 3), interval_curve(S6, 2, 4)},
	    {interval_curve(S6, 2, 3), interval_curve(S6, 3, 5)},
	    {vertical_curve(S13, 0), horizontal_curve(S13)},
	    {vertical_curve(S13, 2), horizontal_curve(S13)},
	};
	for (const Case& cs : cases) {
		i64 base = geometric_intersection(cs.a, cs.b);
		ASSERT_GT(base, 0);
		for (int n : {1, -1, 2, 3, -4}) {
			NormalCurve moved = dehn_twist(cs.b, cs.a, n);
			EXPECT_EQ(geometric_intersection(moved, cs.b), i64(std::abs(n)) * base * base)
			    << "n=" << n;
		}
	}
}

TEST(Twist, FixesTheTwistingCurve) {
	// The twist is supported off a, so intersection with a is preserved,
	// and a itself does not move.
	const Surface& S = registry_surface("S06");
	NormalCurve a = interval_curve(S, 2, 4);
	NormalCurve b = interval_curve(S, 1, 3);
	for (int n : {1, -2, 3}) {
		EXPECT_EQ(geometric_intersection(dehn_twist(b, a, n), a), geometric_intersection(b, a));
		EXPECT_EQ(canonical(dehn_twist(a, a, n)), canonical(a));
	}
}

TEST(Twist, DisjointCurvesDoNotMove) {
	const Surface& S6 = registry_surface("S06");
	NormalCurve a = interval_curve(S6, 1, 2);
	NormalCurve b = interval_curve(S6, 4, 5);
	NormalCurve nested = interval_curve(S6, 1, 3);
	EXPECT_EQ(canonical(dehn_twist(b, a, 5)), canonical(b));
	EXPECT_EQ(canonical(dehn_twist(nested, a, -3)), canonical(nested));

	const Surface& S13 = registry_surface("S13");
	EXPECT_EQ(canonical(dehn_twist(vertical_curve(S13, 1), vertical_curve(S13, 0), 2)),
	          canonical(vertical_curve(S13, 1)));
}

TEST(Twist, ComposedTwistsStayConsistent) {
	// A short seeded twist walk: every product stays a valid curve, the
	// walk is reproducible, and intersection numbers stay symmetric.
	for (const char* name : {"S06", "S13"}) {
		const Surface& S = registry_surface(name);
		auto fam = (S.genus() == 0) ? sphere_family(S) : torus_family(S);
		auto run = [&](std::uint64_t seed) {
			SplitMix64 rng(seed);
			NormalCurve c = fam[0];
			for (int step = 0; step < 5; ++step) {
				const NormalCurve& a = fam[rng.below(fam.size())];
				int n = int(rng.pick_int(1, 2)) * (rng.below(2) ? 1 : -1);
				c = dehn_twist(c, a, n);
			}
			return c;
		};
		NormalCurve first = run(7);
		NormalCurve again = run(7);
		EXPECT_EQ(canonical(first), canonical(again));
		for (const NormalCurve& a : fam) {
			EXPECT_EQ(geometric_intersection(first, a), geometric_intersection(a, first));
		}
		EXPECT_LT(first.total_weight(), i64(1) << 40);
	}
}
