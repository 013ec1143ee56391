#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

namespace gda {

/// Position (n, m, kappa) of a space C^{n,kappa}_m in the complex family.
struct Index {
	std::int64_t n = 0;      // upper, raised by delta
	std::int64_t m = 0;      // lower, lowered by delta
	std::int64_t kappa = 0;  // vertical, raised by Delta

	auto operator<=>(const Index&) const = default;
};

inline Index operator+(Index a, Index b) { return {a.n + b.n, a.m + b.m, a.kappa + b.kappa}; }
inline Index operator-(Index a, Index b) { return {a.n - b.n, a.m - b.m, a.kappa - b.kappa}; }

std::string to_string(const Index& i);

/// Common-parameter counts of one factor inside a product.
struct Overlap {
	std::int64_t r = 0;
	std::int64_t t = 0;

	auto operator<=>(const Overlap&) const = default;
	bool is_zero() const { return r == 0 && t == 0; }
};

/// Optional user-declared ranges, e.g. n >= 0.
struct IndexBounds {
	std::optional<std::int64_t> n_min, n_max, m_min, m_max, kappa_min, kappa_max;

	bool empty() const;
	bool admits(const Index& i) const;
	/// Throws CoherenceViolation naming `what` when `i` is out of range.
	void enforce(const Index& i, const std::string& what) const;

	bool operator==(const IndexBounds&) const = default;
};

struct CoherenceConfig {
	IndexBounds bounds;
	/// Use m = sum(n_j - t_j) as printed instead of m = sum(m_j - t_j).
	bool literal_m = false;

	bool operator==(const CoherenceConfig&) const = default;
};

struct IndexedFactor {
	Index index;
	Overlap overlap;
};

/// n = sum(n_j - r_j), m = sum(m_j - t_j), kappa = sum(kappa_j). Bounds are enforced.
Index coherent_index(std::span<const IndexedFactor> factors, const CoherenceConfig& config = {});

/// Same formulas without bounds enforcement.
Index coherent_index_unchecked(std::span<const IndexedFactor> factors, const CoherenceConfig& config = {});

}  // namespace gda
