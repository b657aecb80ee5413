#pragma once

// Shared plumbing: error types, a reproducible PRNG, exact rationals for
// bound arithmetic, and a few cyclic-sequence helpers.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccs {

using i64 = std::int64_t;
using u64 = std::uint64_t;

struct Error : std::runtime_error {
	explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define CCS_ERROR(Name) \
	struct Name : Error { \
		explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
	}

CCS_ERROR(MalformedTriangulation);
CCS_ERROR(ComplexityTooLow);
CCS_ERROR(Disconnected);
CCS_ERROR(NullCurve);
CCS_ERROR(SurfaceMismatch);
CCS_ERROR(NotDisjoint);
CCS_ERROR(DuplicateComponent);
CCS_ERROR(NotEssential);
CCS_ERROR(BudgetTooLarge);
CCS_ERROR(NotAVertex);
CCS_ERROR(EmptyProjection);
CCS_ERROR(NotSurviving);
CCS_ERROR(KTooSmall);
CCS_ERROR(NonExhaustive);
CCS_ERROR(OrderViolation);
CCS_ERROR(NotSurvivingEndpoint);
CCS_ERROR(WitnessGeodesicUndecided);

#undef CCS_ERROR

inline void check(bool cond, const char* msg) {
	if (!cond) throw Error(std::string("internal invariant broken: ") + msg);
}

// SplitMix64. Hand-rolled so streams are byte-identical on every platform;
// the standard distributions make no such promise.
struct SplitMix64 {
	u64 state = 0;

	explicit SplitMix64(u64 seed = 0) : state(seed) {}

	u64 next() {
		u64 z = (state += 0x9E3779B97F4A7C15ull);
		z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
		z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
		return z ^ (z >> 31);
	}

	// Uniform in [0, n). n must be positive; rejection keeps it unbiased.
	u64 below(u64 n) {
		check(n > 0, "below(0)");
		u64 limit = ~u64(0) - (~u64(0) % n);
		u64 v = next();
		while (v >= limit) v = next();
		return v % n;
	}

	i64 pick_int(i64 lo, i64 hi) {  // inclusive range
		return lo + i64(below(u64(hi - lo + 1)));
	}

	bool coin() { return next() & 1; }
};

// Exact rational on i64, normalized, positive denominator. Enough range for
// every bound we evaluate; overflow would be a logic error upstream.
struct Rat {
	i64 num = 0;
	i64 den = 1;

	Rat() = default;
	Rat(i64 n) : num(n), den(1) {}
	Rat(i64 n, i64 d) : num(n), den(d) {
		check(den != 0, "rational with zero denominator");
		if (den < 0) { num = -num; den = -den; }
		i64 g = std::gcd(num < 0 ? -num : num, den);
		if (g > 1) { num /= g; den /= g; }
	}

	friend Rat operator+(Rat a, Rat b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
	friend Rat operator-(Rat a, Rat b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
	friend Rat operator*(Rat a, Rat b) { return Rat(a.num * b.num, a.den * b.den); }
	friend bool operator==(Rat a, Rat b) { return a.num == b.num && a.den == b.den; }
	friend bool operator<(Rat a, Rat b) {
		return (__int128)a.num * b.den < (__int128)b.num * a.den;
	}
	friend bool operator<=(Rat a, Rat b) { return a < b || a == b; }

	std::string str() const {
		if (den == 1) return std::to_string(num);
		return std::to_string(num) + "/" + std::to_string(den);
	}
};

// Index of the lexicographically least rotation (Booth's algorithm).
template <class T>
std::size_t least_rotation(const std::vector<T>& v) {
	std::size_t n = v.size();
	if (n == 0) return 0;
	std::size_t i = 0, j = 1, k = 0;
	while (i < n && j < n && k < n) {
		const T& a = v[(i + k) % n];
		const T& b = v[(j + k) % n];
		if (a == b) { ++k; continue; }
		if (b < a) i += k + 1; else j += k + 1;
		if (i == j) ++j;
		k = 0;
	}
	return std::min(i, j);
}

template <class T>
std::vector<T> rotated(const std::vector<T>& v, std::size_t start) {
	std::vector<T> out;
	out.reserve(v.size());
	for (std::size_t i = 0; i < v.size(); ++i) out.push_back(v[(start + i) % v.size()]);
	return out;
}

template <class T>
std::vector<T> canonical_rotation(const std::vector<T>& v) {
	return rotated(v, least_rotation(v));
}

}  // namespace ccs
