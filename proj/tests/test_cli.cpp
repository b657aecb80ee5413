#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "ccs/cli.hpp"

using namespace ccs;

namespace {

std::string temp_path(const std::string& name) { return testing::TempDir() + name; }

void write_json(const std::string& path, const Json& j) {
	std::ofstream out(path);
	out << j.dump() << "\n";
}

int run(std::vector<std::string> args) {
	args.insert(args.begin(), "ccsurvive");
	std::vector<char*> argv;
	for (std::string& a : args) argv.push_back(a.data());
	return run_command(int(argv.size()), argv.data());
}

Json slurp(const std::string& path) {
	std::ifstream in(path);
	Json j;
	in >> j;
	return j;
}

// Puncture sets of the two sides of a separating curve, as sorted names.
std::vector<std::vector<std::string>> sides_of(const NormalCurve& c) {
	ComplementDecomposition dec = cut_along(*c.S, {c});
	std::vector<std::vector<std::string>> out;
	for (ComplementPiece& p : dec.pieces) {
		std::sort(p.punctures.begin(), p.punctures.end());
		out.push_back(p.punctures);
	}
	std::sort(out.begin(), out.end());
	return out;
}

}  // namespace

TEST(Io, CurveRoundTrip) {
	const Surface& S = registry_surface("S06");
	NormalCurve c = interval_curve(S, 2, 4);
	NormalCurve back = curve_from_json(curve_to_json(c));
	EXPECT_EQ(canonical(back), canonical(c));
	EXPECT_TRUE(back.S->same(S));  // loading resolves through the registry
}

TEST(Io, RejectsBadDocuments) {
	EXPECT_THROW(curve_from_json(Json{{"surface", "S06"}}), Error);
	EXPECT_THROW(curve_from_json(Json{{"surface", "S99"}, {"corner_counts", Json::array()}}),
	             Error);
	Json j = curve_to_json(interval_curve(registry_surface("S06"), 1, 2));
	j["corner_counts"][0] = {1, 2};
	EXPECT_THROW(curve_from_json(j), Error);
	j["corner_counts"][0] = {9, 9, 9};  // breaks edge matching
	EXPECT_THROW(curve_from_json(j), Error);
}

TEST(Io, BandGeneratorsEncloseTheirPair) {
	const Surface& S = registry_surface("S06");
	using Sides = std::vector<std::vector<std::string>>;
	NormalCurve band = named_generator(S, "p1", "p3");
	EXPECT_TRUE(is_surviving(band));
	EXPECT_EQ(sides_of(band), (Sides{{"p1", "p3"}, {"p2", "p4", "p5", "z"}}));
	EXPECT_FALSE(canonical(band) == canonical(interval_curve(S, 1, 3)));
	NormalCurve wide = named_generator(S, "p2", "p5");
	EXPECT_EQ(sides_of(wide), (Sides{{"p1", "p3", "p4", "z"}, {"p2", "p5"}}));
	NormalCurve plain = named_generator(S, "p4", "p5");
	EXPECT_EQ(canonical(plain), canonical(interval_curve(S, 4, 5)));
	NormalCurve zq = named_generator(S, "z", "p3");
	EXPECT_EQ(sides_of(zq), (Sides{{"p1", "p2", "p4", "p5"}, {"p3", "z"}}));
}

TEST(Io, StripGenerators) {
	const Surface& S = registry_surface("S13");
	auto gens = named_generators(S);
	EXPECT_EQ(gens.size(), 7u);  // three pair loops, three verticals, the horizontal
	NormalCurve pp = named_generator(S, "p1", "p2");
	EXPECT_TRUE(is_surviving(pp));
	ComplementDecomposition dec = cut_along(S, {pp});
	ASSERT_EQ(dec.pieces.size(), 2u);
	bool saw_handle = false;
	for (const ComplementPiece& p : dec.pieces)
		if (p.genus == 1) {
			saw_handle = true;
			EXPECT_EQ(p.punctures, std::vector<std::string>{"z"});
		}
	EXPECT_TRUE(saw_handle);
}

TEST(Cli, DistanceOnDisjointGenerators) {
	const Surface& S = registry_surface("S06");
	std::string a = temp_path("a.json"), b = temp_path("b.json"), out = temp_path("d.json");
	write_json(a, curve_to_json(interval_curve(S, 1, 2)));
	write_json(b, curve_to_json(interval_curve(S, 4, 5)));
	ASSERT_EQ(run({"dist", "--complex", "surv", a, b, "--out", out}), 0);
	Json d = slurp(out);
	EXPECT_EQ(d["value"], 1);
	EXPECT_EQ(d["exact"], true);
	EXPECT_EQ(d["config"]["budget"], 200);
}

TEST(Cli, ReportsAreByteIdentical) {
	const Surface& S = registry_surface("S06");
	std::string a = temp_path("ra.json"), b = temp_path("rb.json");
	std::string o1 = temp_path("r1.json"), o2 = temp_path("r2.json");
	write_json(a, curve_to_json(interval_curve(S, 1, 3)));
	write_json(b, curve_to_json(interval_curve(S, 2, 4)));
	ASSERT_EQ(run({"formula", a, b, "--out", o1}), 0);
	ASSERT_EQ(run({"formula", a, b, "--out", o2}), 0);
	std::ifstream f1(o1), f2(o2);
	std::string s1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
	std::string s2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
	EXPECT_FALSE(s1.empty());
	EXPECT_EQ(s1, s2);
}

TEST(Cli, UsageAndBudgetExits) {
	const Surface& S = registry_surface("S06");
	std::string a = temp_path("ua.json"), b = temp_path("ub.json");
	write_json(a, curve_to_json(interval_curve(S, 1, 3)));
	write_json(b, curve_to_json(interval_curve(S, 2, 4)));
	EXPECT_EQ(run({"dist", "--complex", "full", a, temp_path("missing.json")}), 1);
	EXPECT_EQ(run({"dist", "--complex", "witness:p9", a, b}), 1);
	EXPECT_EQ(run({"formula", a, b, "--k", "10"}), 1);
	// crossing endpoints, pool too small to connect them
	EXPECT_EQ(run({"geodesics", a, b, "--budget", "0", "--out", temp_path("g.json")}), 3);
}

TEST(Cli, AuditCommandCleanAndStable) {
	std::string o1 = temp_path("q1.json"), o2 = temp_path("q2.json");
	ASSERT_EQ(run({"audit", "bgit", "--surface", "S06", "--n", "2", "--out", o1}), 0);
	ASSERT_EQ(run({"audit", "bgit", "--surface", "S06", "--n", "2", "--out", o2}), 0);
	Json r = slurp(o1);
	EXPECT_EQ(r["verdict"], "PASS");
	EXPECT_EQ(r["violations"], 0);
	EXPECT_EQ(slurp(o2), r);
}

TEST(Cli, SurvivingAndWitnessCommands) {
	const Surface& S = registry_surface("S06");
	std::string w = temp_path("w.json"), out = temp_path("sw.json");
	write_json(w, curve_to_json(pair_loop(S, "z", "p2")));
	ASSERT_EQ(run({"surviving", w, "--out", out}), 0);
	Json r = slurp(out);
	EXPECT_EQ(r["surviving"], false);
	EXPECT_EQ(r["co_puncture"], "p2");
	ASSERT_EQ(run({"witness", "--curve", w, "--out", out}), 0);
	EXPECT_EQ(slurp(out)["co_puncture"], "p2");
	ASSERT_EQ(run({"witness", "S13", "--out", out}), 0);
	EXPECT_EQ(slurp(out)["witnesses"].size(), 2u);
}
