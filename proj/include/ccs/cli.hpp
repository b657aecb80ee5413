#pragma once

// Command line front end. Every command prints one JSON document to stdout
// (or --out) with a "config" block repeating the inputs and defaults that
// shaped it. Exit codes: 0 success, 1 usage or input error, 2 a report
// contains a certified violation, 3 the requested answer stayed undecided
// within the given budget.

#include <cstdlib>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "enumerate.hpp"
#include "io.hpp"

namespace ccs {

namespace cli {

inline Json base_config(const std::string& command) {
	Json c;
	c["command"] = command;
	const char* t = std::getenv("CCSURVIVE_THREADS");
	c["threads"] = Json{{"requested", t ? Json(std::string(t)) : Json(nullptr)}, {"used", 1}};
	return c;
}

inline GraphView view_by_name(const Surface& S, const std::string& name, Witness& keep) {
	if (name == "full") return GraphView::full(S);
	if (name == "surv") return GraphView::surviving(S);
	if (name.rfind("witness:", 0) == 0) {
		std::string id = name.substr(8);
		for (Witness& W : standard_witnesses(S))
			if (S.puncture_name(W.co_puncture) == id) {
				keep = std::move(W);
				return keep.view();
			}
		throw Error("no registry witness with co-puncture " + id);
	}
	throw Error("unknown complex " + name + " (use full, surv, or witness:<puncture>)");
}

// All shortest routes between two pool indices, walked backwards from the
// target along level-decreasing edges.
inline std::vector<std::vector<int>> pool_geodesics(const std::vector<std::vector<int>>& adj,
                                                    int from, int to, std::size_t max_paths) {
	std::vector<int> dist(adj.size(), -1);
	std::vector<int> queue = {from};
	dist[std::size_t(from)] = 0;
	for (std::size_t q = 0; q < queue.size(); ++q)
		for (int n : adj[std::size_t(queue[q])])
			if (dist[std::size_t(n)] < 0) {
				dist[std::size_t(n)] = dist[std::size_t(queue[q])] + 1;
				queue.push_back(n);
			}
	std::vector<std::vector<int>> out;
	if (dist[std::size_t(to)] < 0) return out;
	std::vector<int> walk = {to};
	auto step = [&](auto&& self, int cur) -> void {
		if (out.size() >= max_paths) return;
		if (cur == from) {
			out.emplace_back(walk.rbegin(), walk.rend());
			return;
		}
		for (int n : adj[std::size_t(cur)]) {
			if (dist[std::size_t(n)] + 1 != dist[std::size_t(cur)]) continue;
			walk.push_back(n);
			self(self, n);
			walk.pop_back();
		}
	};
	step(step, to);
	return out;
}

}  // namespace cli

inline int run_command(int argc, char** argv) {
	std::string out_file, complex_name = "full", witness_file, about_file, surface_id, curve_file;
	std::string file_a, file_b;
	i64 power = 1, k_formula = 24, k_order = 20, big_m = 8, weight_budget = 8;
	int chain_budget = 200, samples = 10;
	std::size_t max_paths = 64;
	u64 seed = 20260822;
	bool require_exact = false;
	Json result;
	int rc = 0;

	CLI::App app{"surviving curve complex toolkit"};
	app.require_subcommand(1);
	app.add_option("--out", out_file, "write the JSON report to this file instead of stdout");

	auto* surface = app.add_subcommand("surface", "surface registry access");
	surface->require_subcommand(1);
	auto* info = surface->add_subcommand("info", "dump a registry surface");
	info->add_option("id", surface_id, "registry id (S06 or S13)")->required();
	info->callback([&] {
		result = surface_to_json(registry_surface(surface_id));
		result["config"] = cli::base_config("surface info");
	});

	auto* curve = app.add_subcommand("curve", "curve level operations");
	curve->require_subcommand(1);
	auto* tighten = curve->add_subcommand("tighten", "validate and classify a curve document");
	tighten->add_option("curve", file_a, "curve document")->required();
	tighten->callback([&] {
		NormalCurve c = load_curve(file_a);
		Classification cl = classify(c);
		result["curve"] = curve_to_json(c);
		result["canonical_edge_weights"] = canonical(c).weights;
		result["class"] = cl.kind == CurveClass::Trivial      ? "trivial"
		                  : cl.kind == CurveClass::Peripheral ? "peripheral"
		                                                      : "essential";
		result["peripheral_at"] =
		    cl.kind == CurveClass::Peripheral ? Json(c.S->puncture_name(cl.puncture)) : Json(nullptr);
		result["config"] = cli::base_config("curve tighten");
	});
	auto* intersect = curve->add_subcommand("intersect", "geometric intersection number");
	intersect->add_option("a", file_a, "first curve")->required();
	intersect->add_option("b", file_b, "second curve")->required();
	intersect->callback([&] {
		NormalCurve a = load_curve(file_a), b = load_curve(file_b);
		result["value"] = geometric_intersection(a, b);
		result["config"] = cli::base_config("curve intersect");
	});
	auto* twist = curve->add_subcommand("twist", "apply a power of a twist");
	twist->add_option("curve", file_a, "curve to move")->required();
	twist->add_option("--about", about_file, "twisting curve document")->required();
	twist->add_option("--power", power, "twist power, may be negative")->capture_default_str();
	twist->callback([&] {
		NormalCurve c = load_curve(file_a), about = load_curve(about_file);
		result = curve_to_json(dehn_twist(c, about, power));
		result["config"] = cli::base_config("curve twist");
		result["config"]["power"] = power;
	});

	auto* surviving = app.add_subcommand("surviving", "does an essential curve survive");
	surviving->add_option("curve", file_a, "curve document")->required();
	surviving->callback([&] {
		NormalCurve c = load_curve(file_a);
		std::optional<int> p = z_disk_partner(c);
		result["surviving"] = !p.has_value();
		result["co_puncture"] = p ? Json(c.S->puncture_name(*p)) : Json(nullptr);
		result["config"] = cli::base_config("surviving");
	});

	auto* witness = app.add_subcommand("witness", "witness lookup");
	witness->add_option("id", surface_id, "list the registry witnesses of this surface");
	witness->add_option("--curve", curve_file, "report the witness bounded by this curve");
	witness->callback([&] {
		if (surface_id.empty() == curve_file.empty())
			throw Error("pass a surface id or --curve, not both");
		if (!surface_id.empty()) {
			const Surface& S = registry_surface(surface_id);
			Json ws = Json::array();
			for (const Witness& W : standard_witnesses(S))
				ws.push_back(Json{{"co_puncture", S.puncture_name(W.co_puncture)},
				                  {"boundary", curve_to_json(W.boundary)}});
			result["witnesses"] = ws;
		} else {
			NormalCurve c = load_curve(curve_file);
			Witness W = witness_of(c);
			result["co_puncture"] = c.S->puncture_name(W.co_puncture);
			result["boundary"] = curve_to_json(W.boundary);
		}
		result["config"] = cli::base_config("witness");
	});

	auto* project = app.add_subcommand("project", "subsurface projection to a witness");
	project->add_option("curve", file_a, "curve document")->required();
	project->add_option("--witness", witness_file, "witness boundary document")->required();
	project->callback([&] {
		NormalCurve c = load_curve(file_a);
		Witness W = witness_of(load_curve(witness_file));
		result["witness"] = c.S->puncture_name(W.co_puncture);
		result["curves"] = path_to_json(subsurface_projection(c, W));
		result["config"] = cli::base_config("project");
	});

	auto* dw = app.add_subcommand("dW", "projection distance inside a witness");
	dw->add_option("a", file_a, "first curve")->required();
	dw->add_option("b", file_b, "second curve")->required();
	dw->add_option("--witness", witness_file, "witness boundary document")->required();
	dw->add_option("--budget", chain_budget, "chain search budget")->capture_default_str();
	dw->add_flag("--require-exact", require_exact, "exit 3 unless the result is exact");
	dw->callback([&] {
		NormalCurve a = load_curve(file_a), b = load_curve(file_b);
		Witness W = witness_of(load_curve(witness_file));
		Distance d = witness_distance(W, a, b);
		result = distance_to_json(d);
		result["witness"] = a.S->puncture_name(W.co_puncture);
		result["config"] = cli::base_config("dW");
		result["config"]["budget"] = chain_budget;
		if (require_exact && !d.exact()) rc = 3;
	});

	auto* dist = app.add_subcommand("dist", "distance in a curve graph");
	dist->add_option("a", file_a, "first curve")->required();
	dist->add_option("b", file_b, "second curve")->required();
	dist->add_option("--complex", complex_name, "full, surv, or witness:<puncture>")
	    ->capture_default_str();
	dist->add_option("--budget", chain_budget, "chain search budget")->capture_default_str();
	dist->add_flag("--require-exact", require_exact, "exit 3 unless the result is exact");
	dist->callback([&] {
		NormalCurve a = load_curve(file_a), b = load_curve(file_b);
		Witness keep{a, -1};
		GraphView view = cli::view_by_name(*a.S, complex_name, keep);
		Distance d = curve_distance(view, a, b, chain_budget);
		result = distance_to_json(d);
		if (!d.path.empty()) result["path"] = path_to_json(d.path);
		result["complex"] = complex_name;
		result["config"] = cli::base_config("dist");
		result["config"]["budget"] = chain_budget;
		if (require_exact && !d.exact()) rc = 3;
	});

	auto* geod = app.add_subcommand("geodesics", "all shortest paths inside a weight-bounded pool");
	geod->add_option("a", file_a, "first curve")->required();
	geod->add_option("b", file_b, "second curve")->required();
	geod->add_option("--complex", complex_name, "full, surv, or witness:<puncture>")
	    ->capture_default_str();
	geod->add_option("--budget", weight_budget, "total edge weight cap for the pool")
	    ->capture_default_str();
	geod->add_option("--max-paths", max_paths, "cap on the number of paths returned")
	    ->capture_default_str();
	geod->callback([&] {
		NormalCurve a = load_curve(file_a), b = load_curve(file_b);
		Witness keep{a, -1};
		GraphView view = cli::view_by_name(*a.S, complex_name, keep);
		check(view.admits(a) && view.admits(b), "distance endpoint outside the graph");
		std::vector<NormalCurve> pool = {a, b};
		if (canonical(a) == canonical(b)) pool.pop_back();
		for (NormalCurve& c : enumerate_curves(*a.S, weight_budget)) {
			if (!view.admits(c)) continue;
			bool dup = false;
			for (const NormalCurve& p : pool)
				if (canonical(p) == canonical(c)) dup = true;
			if (!dup) pool.push_back(std::move(c));
		}
		std::vector<std::vector<int>> adj(pool.size());
		for (std::size_t i = 0; i < pool.size(); ++i)
			for (std::size_t j = i + 1; j < pool.size(); ++j)
				if (geometric_intersection(pool[i], pool[j]) == 0) {
					adj[i].push_back(int(j));
					adj[j].push_back(int(i));
				}
		int to = canonical(a) == canonical(b) ? 0 : 1;
		std::vector<std::vector<int>> found = cli::pool_geodesics(adj, 0, to, max_paths);
		Json paths = Json::array();
		for (const std::vector<int>& p : found) {
			std::vector<NormalCurve> path;
			for (int i : p) path.push_back(pool[std::size_t(i)]);
			paths.push_back(path_to_json(path));
		}
		result["paths"] = paths;
		result["pool_size"] = pool.size();
		result["pool_distance"] = found.empty() ? Json(nullptr) : Json(found[0].size() - 1);
		result["complex"] = complex_name;
		result["note"] = "distances measured inside the weight-bounded pool only";
		result["config"] = cli::base_config("geodesics");
		result["config"]["budget"] = weight_budget;
		result["config"]["max_paths"] = max_paths;
		if (found.empty()) rc = 3;
	});

	auto* path = app.add_subcommand("path", "survival path between surviving curves");
	path->add_option("a", file_a, "first curve")->required();
	path->add_option("b", file_b, "second curve")->required();
	path->callback([&] {
		NormalCurve a = load_curve(file_a), b = load_curve(file_b);
		result = survival_path_to_json(survival_path(*a.S, a, b));
		result["config"] = cli::base_config("path");
	});

	auto* formula = app.add_subcommand("formula", "two-sided distance comparison");
	formula->add_option("a", file_a, "first curve")->required();
	formula->add_option("b", file_b, "second curve")->required();
	formula->add_option("--k", k_formula, "term cutoff")->capture_default_str();
	formula->add_option("--M", big_m, "geodesic projection bound")->capture_default_str();
	formula->callback([&] {
		if (k_formula < std::max<i64>(big_m, 24))
			throw KTooSmall("the cutoff must be at least max(M, 24)");
		NormalCurve a = load_curve(file_a), b = load_curve(file_b);
		FormulaReport rep = distance_formula(*a.S, a, b, k_formula);
		result = formula_to_json(rep);
		result["config"] = cli::base_config("formula");
		result["config"]["k"] = k_formula;
		result["config"]["M"] = big_m;
		if (rep.lower == Verdict::Violation || rep.upper == Verdict::Violation) rc = 2;
	});

	auto* order = app.add_subcommand("order", "membership and order axioms for large witnesses");
	order->add_option("a", file_a, "first curve")->required();
	order->add_option("b", file_b, "second curve")->required();
	order->add_option("--k", k_order, "membership cutoff")->capture_default_str();
	order->callback([&] {
		NormalCurve a = load_curve(file_a), b = load_curve(file_b);
		std::vector<Witness> pool = standard_witnesses(*a.S);
		OrderReport rep = behrstock_order(*a.S, a, b, pool, k_order);
		result = order_to_json(rep, pool, *a.S);
		result["config"] = cli::base_config("order");
		result["config"]["k"] = k_order;
		if (rep.verdict == Verdict::Violation) rc = 2;
	});

	auto* audit = app.add_subcommand("audit", "seeded audit sweeps");
	audit->require_subcommand(1);
	std::map<std::string, AuditReport (*)(const Surface&, const AuditConfig&)> sweeps = {
	    {"slim", &audit_slim}, {"qg", &audit_qg}, {"bgit", &audit_bgit}, {"triples", &audit_triples}};
	for (auto& [name, fn] : sweeps) {
		auto* sub = audit->add_subcommand(name);
		sub->add_option("--surface", surface_id, "registry id")->required();
		sub->add_option("--seed", seed, "generator seed")->capture_default_str();
		sub->add_option("--n", samples, "sample count")->capture_default_str();
		sub->add_option("--budget", chain_budget, "recorded; sweeps use library defaults")
		    ->capture_default_str();
		AuditReport (*run)(const Surface&, const AuditConfig&) = fn;
		sub->callback([&, run] {
			AuditConfig cfg;
			cfg.seed = seed;
			cfg.samples = samples;
			AuditReport rep = run(registry_surface(surface_id), cfg);
			result = audit_to_json(rep);
			result["config"] = cli::base_config("audit");
			result["config"]["surface"] = surface_id;
			result["config"]["seed"] = seed;
			result["config"]["n"] = samples;
			result["config"]["budget"] = chain_budget;
			result["config"]["bgit"] = cfg.bgit;
			result["config"]["cutoff"] = cfg.cutoff;
			if (rep.violations) rc = 2;
		});
	}

	std::function<void(CLI::App*)> allow_parent_flags = [&](CLI::App* node) {
		node->fallthrough();
		for (CLI::App* sub : node->get_subcommands(nullptr)) allow_parent_flags(sub);
	};
	allow_parent_flags(&app);

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		int code = app.exit(e);
		return code ? 1 : 0;
	} catch (const Error& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	} catch (const Json::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	}

	if (!result.is_null()) {
		std::string text = result.dump(1, '\t') + "\n";
		if (out_file.empty()) {
			std::cout << text;
		} else {
			std::ofstream out(out_file);
			if (!out) {
				std::cerr << "error: cannot write " << out_file << "\n";
				return 1;
			}
			out << text;
		}
	}
	return rc;
}

}  // namespace ccs
