#include <gtest/gtest.h>

#include "ccs/curve.hpp"
#include "ccs/surface.hpp"

using namespace ccs;

TEST(Surface, Sphere6Counts) {
	const Surface& S = registry_surface("S06");
	EXPECT_EQ(S.num_triangles(), 8);
	EXPECT_EQ(S.num_edges(), 12);
	EXPECT_EQ(S.num_punctures(), 6);
	EXPECT_EQ(S.genus(), 0);
	EXPECT_EQ(S.puncture_name(S.z_vertex()), "z");
	for (const char* name : {"p1", "p2", "p3", "p4", "p5"})
		EXPECT_NO_THROW(S.puncture_by_name(name));
}

TEST(Surface, Torus3Counts) {
	const Surface& S = registry_surface("S13");
	EXPECT_EQ(S.num_triangles(), 6);
	EXPECT_EQ(S.num_edges(), 9);
	EXPECT_EQ(S.num_punctures(), 3);
	EXPECT_EQ(S.genus(), 1);
	EXPECT_EQ(S.puncture_name(S.z_vertex()), "z");
}

TEST(Surface, VertexValences) {
	const Surface& S06 = registry_surface("S06");
	// z meets all 8 triangles once; p1 and p5 twice; p2..p4 four times.
	EXPECT_EQ(S06.corners_of_vertex(S06.z_vertex()).size(), 8u);
	EXPECT_EQ(S06.corners_of_vertex(S06.puncture_by_name("p1")).size(), 2u);
	EXPECT_EQ(S06.corners_of_vertex(S06.puncture_by_name("p3")).size(), 4u);
	const Surface& S13 = registry_surface("S13");
	for (int v = 0; v < 3; ++v) EXPECT_EQ(S13.corners_of_vertex(v).size(), 6u);
}

TEST(Surface, PartnerInvolution) {
	for (const char* id : {"S06", "S13"}) {
		const Surface& S = registry_surface(id);
		for (int t = 0; t < S.num_triangles(); ++t)
			for (int s = 0; s < 3; ++s) {
				Incidence p = S.partner(t, s);
				Incidence back = S.partner(p.tri, p.slot);
				EXPECT_EQ(back.tri, t);
				EXPECT_EQ(back.slot, s);
			}
	}
}

TEST(Surface, RejectsBadGluings) {
	// Edge 0 used three times.
	EXPECT_THROW(Surface("bad", {{0, 0, 1}, {0, 1, 2}, {2, 3, 4}, {3, 4, 5}},
	                     {{"z", {0, 0}}}),
	             MalformedTriangulation);
	// Edge 2 glued once.
	EXPECT_THROW(Surface("bad", {{0, 1, 2}}, {{"z", {0, 0}}}), MalformedTriangulation);
}

TEST(Surface, RejectsLowComplexity) {
	// Thrice-punctured sphere: two triangles glued along all three edges.
	EXPECT_THROW(Surface("tiny", {{0, 1, 2}, {0, 2, 1}},
	                     {{"z", {0, 0}}, {"p1", {0, 1}}, {"p2", {0, 2}}}),
	             ComplexityTooLow);
}

TEST(Surface, RejectsMissingZ) {
	EXPECT_THROW(Surface("tiny", {{0, 1, 2}, {0, 2, 1}},
	                     {{"q", {0, 0}}, {"p1", {0, 1}}, {"p2", {0, 2}}}),
	             MalformedTriangulation);
}

TEST(Curve, MatchingValidation) {
	const Surface& S = registry_surface("S06");
	Corners c = zero_corners(S);
	c[0][0] = 1;  // one arc in one triangle can't match anything
	EXPECT_THROW(validate_corners(S, c), Error);
}

TEST(Curve, VertexLinkTraces) {
	const Surface& S = registry_surface("S06");
	NormalCurve link = vertex_link(S, S.puncture_by_name("p1"));
	// Crosses the two hexagon sides at p1 once each.
	EXPECT_EQ(link.edge_weight(0), 1);
	EXPECT_EQ(link.edge_weight(1), 1);
	EXPECT_EQ(link.total_weight(), 2);

	NormalCurve zlink = vertex_link(S, S.z_vertex());
	EXPECT_EQ(zlink.total_weight(), 8);
}

TEST(Curve, TightenRejectsEmptyAndSplit) {
	const Surface& S = registry_surface("S06");
	EXPECT_THROW(tighten(S, zero_corners(S)), NullCurve);

	// Two disjoint links trace as two components.
	Corners both = zero_corners(S);
	for (int t = 0; t < S.num_triangles(); ++t)
		for (int k = 0; k < 3; ++k) {
			int v = S.vertex_at_corner(t, k);
			if (v == S.puncture_by_name("p1") || v == S.puncture_by_name("p4")) both[t][k] = 1;
		}
	EXPECT_THROW(tighten(S, both), Disconnected);
	EXPECT_EQ(split_components(S, both).size(), 2u);
}

TEST(Curve, CanonicalCodeRoundTrip) {
	const Surface& S = registry_surface("S13");
	// Vertical circle through square 0: one strand on h0 and d0.
	Corners c = zero_corners(S);
	c[0] = {1, 0, 0};
	c[1] = {0, 1, 0};
	NormalCurve b0 = tighten(S, c);
	CanonicalCode code = canonical(b0);
	std::vector<i64> expect = {1, 0, 0, 0, 0, 0, 1, 0, 0};
	EXPECT_EQ(code.weights, expect);
	EXPECT_EQ(code.str(), "1,0,0,0,0,0,1,0,0");
}

TEST(Curve, HorizontalCircleOnTorus) {
	const Surface& S = registry_surface("S13");
	Corners c = zero_corners(S);
	for (int i = 0; i < 3; ++i) {
		c[2 * i] = {0, 0, 1};      // lower triangles
		c[2 * i + 1] = {1, 0, 0};  // upper triangles
	}
	NormalCurve m = tighten(S, c);
	EXPECT_EQ(m.total_weight(), 6);
	for (int e = 3; e < 9; ++e) EXPECT_EQ(m.edge_weight(e), 1) << "edge " << e;
	for (int e = 0; e < 3; ++e) EXPECT_EQ(m.edge_weight(e), 0);
}
