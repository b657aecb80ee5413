#pragma once

// Closed curves as cyclic words of directed edge crossings.
//
// The dual spine of the triangulation is a deformation retract of the
// punctured surface, so free homotopy classes of loops are cyclic words in
// the edge crossings up to free reduction, and a loop is null-homotopic
// exactly when its word reduces to nothing. For a simple closed curve the
// cyclically reduced word is the crossing sequence of its normal form, which
// is how words are converted to corner coordinates; the conversion re-traces
// the result and fails loudly if the class was not simple.

#include <algorithm>
#include <deque>
#include <vector>

#include "curve.hpp"

namespace ccs {

struct Letter {
	int edge = -1;
	int to_side = -1;  // incidence index of the triangle being entered
	friend bool operator==(const Letter&, const Letter&) = default;
	friend auto operator<=>(const Letter&, const Letter&) = default;
};

inline Letter reversed(Letter l) { return {l.edge, 1 - l.to_side}; }

inline Incidence letter_source(const Surface& S, Letter l) {
	return S.incidence(l.edge, 1 - l.to_side);
}
inline Incidence letter_target(const Surface& S, Letter l) {
	return S.incidence(l.edge, l.to_side);
}

using Word = std::vector<Letter>;

inline Word inverse(const Word& w) {
	Word out(w.rbegin(), w.rend());
	for (Letter& l : out) l = reversed(l);
	return out;
}

// Letter crossing out of triangle t through slot s.
inline Letter exit_letter(const Surface& S, int t, int s) {
	return {S.edge_at(t, s), 1 - S.side_index(t, s)};
}

inline void check_composable(const Surface& S, const Word& w, bool cyclic) {
	for (std::size_t i = 0; i + 1 < w.size(); ++i)
		check(letter_target(S, w[i]).tri == letter_source(S, w[i + 1]).tri,
		      "word letters do not chain");
	if (cyclic && !w.empty())
		check(letter_target(S, w.back()).tri == letter_source(S, w.front()).tri,
		      "cyclic word does not close up");
}

inline Word free_reduce(const Word& w) {
	Word stack;
	for (Letter l : w) {
		if (!stack.empty() && stack.back() == reversed(l)) stack.pop_back();
		else stack.push_back(l);
	}
	return stack;
}

inline Word cyclic_reduce(const Word& w) {
	std::deque<Letter> d;
	for (Letter l : w) {
		if (!d.empty() && d.back() == reversed(l)) d.pop_back();
		else d.push_back(l);
	}
	while (d.size() >= 2 && d.front() == reversed(d.back())) {
		d.pop_front();
		d.pop_back();
	}
	return Word(d.begin(), d.end());
}

inline bool is_null_loop(const Word& w) { return free_reduce(w).empty(); }

// Unoriented cyclic normal form of a word, for equality tests.
inline Word cyclic_key(const Word& w) {
	Word a = canonical_rotation(w);
	Word b = canonical_rotation(inverse(w));
	return std::min(a, b);
}

inline Word curve_to_word(const NormalCurve& c) {
	Trace tr = trace_corners(*c.S, c.corners);
	check(tr.components.size() == 1, "curve_to_word needs a connected curve");
	Word w;
	w.reserve(tr.components[0].size());
	for (const TraceStep& st : tr.components[0]) w.push_back({st.edge, st.into_side});
	return w;
}

// Corner coordinates of the simple closed curve freely homotopic to the word.
// Throws NullCurve for a trivial class and Error if the class is not simple
// (detected by the round trip) or not connected after reduction.
inline NormalCurve word_to_curve(const Surface& S, const Word& input) {
	Word w = cyclic_reduce(input);
	if (w.empty()) throw NullCurve("word reduces to the trivial loop");
	check_composable(S, w, true);

	Corners counts = zero_corners(S);
	std::size_t n = w.size();
	for (std::size_t i = 0; i < n; ++i) {
		Incidence in = letter_target(S, w[i]);
		Incidence out = letter_source(S, w[(i + 1) % n]);
		check(in.tri == out.tri, "passage spans two triangles");
		check(in.slot != out.slot, "backtrack survived cyclic reduction");
		counts[in.tri][corner_between(out.slot, in.slot)] += 1;
	}

	NormalCurve c = tighten(S, counts);  // Disconnected here means non-simple input
	Word back = curve_to_word(c);
	if (cyclic_key(back) != cyclic_key(w))
		throw Error("word does not describe a simple closed curve");
	return c;
}

// Loop around puncture v, following its corners in rotational order.
inline Word link_word(const Surface& S, int v) {
	Word w;
	for (auto [t, k] : S.corners_of_vertex(v)) w.push_back(exit_letter(S, t, (k + 1) % 3));
	check_composable(S, w, true);
	return w;
}

// Shortest dual-graph path between triangles; deterministic tie-breaks.
inline Word dual_path(const Surface& S, int t_from, int t_to) {
	if (t_from == t_to) return {};
	std::vector<int> prev_tri(S.num_triangles(), -1);
	std::vector<Letter> prev_letter(S.num_triangles());
	std::deque<int> q{t_from};
	std::vector<char> seen(S.num_triangles(), 0);
	seen[t_from] = 1;
	while (!q.empty()) {
		int t = q.front();
		q.pop_front();
		if (t == t_to) break;
		for (int s = 0; s < 3; ++s) {
			Letter l = exit_letter(S, t, s);
			int u = letter_target(S, l).tri;
			if (!seen[u]) {
				seen[u] = 1;
				prev_tri[u] = t;
				prev_letter[u] = l;
				q.push_back(u);
			}
		}
	}
	check(seen[t_to], "dual graph not connected");
	Word w;
	for (int t = t_to; t != t_from; t = prev_tri[t]) w.push_back(prev_letter[t]);
	std::reverse(w.begin(), w.end());
	return w;
}

// Rotation of a cyclic word so it starts with a letter leaving triangle t.
inline Word rotate_to_source(const Surface& S, const Word& w, int t) {
	for (std::size_t i = 0; i < w.size(); ++i)
		if (letter_source(S, w[i]).tri == t) return rotated(w, i);
	throw Error("word never visits the requested triangle");
}

// Closed word of an embedded band sum: follow one loop, run along the
// connector, follow the other, run back. The caller is responsible for the
// two loops being disjoint and the connector meeting each once; the round
// trip in word_to_curve will catch misuse.
inline Word band_sum_word(const Surface& S, const Word& a, const Word& b, const Word& connector) {
	check(!a.empty() && !b.empty(), "band sum of empty words");
	int t_start = connector.empty() ? letter_source(S, b[0]).tri
	                                : letter_source(S, connector[0]).tri;
	int t_end = connector.empty() ? t_start : letter_target(S, connector.back()).tri;
	Word wa = rotate_to_source(S, a, t_start);
	Word wb = rotate_to_source(S, b, t_end);
	Word out = wa;
	out.insert(out.end(), connector.begin(), connector.end());
	out.insert(out.end(), wb.begin(), wb.end());
	Word back = inverse(connector);
	out.insert(out.end(), back.begin(), back.end());
	check_composable(S, out, true);
	return out;
}

}  // namespace ccs
