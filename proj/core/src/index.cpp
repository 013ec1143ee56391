#include "gda/index.hpp"

#include "gda/error.hpp"

namespace gda {

std::string to_string(const Index& i)
{
	return "(" + std::to_string(i.n) + "," + std::to_string(i.m) + "," + std::to_string(i.kappa) + ")";
}

bool IndexBounds::empty() const
{
	return !n_min && !n_max && !m_min && !m_max && !kappa_min && !kappa_max;
}

namespace {

bool within(std::int64_t v, const std::optional<std::int64_t>& lo, const std::optional<std::int64_t>& hi)
{
	return (!lo || v >= *lo) && (!hi || v <= *hi);
}

}  // namespace

bool IndexBounds::admits(const Index& i) const
{
	return within(i.n, n_min, n_max) && within(i.m, m_min, m_max) && within(i.kappa, kappa_min, kappa_max);
}

void IndexBounds::enforce(const Index& i, const std::string& what) const
{
	if (!admits(i))
		throw CoherenceViolation("index " + to_string(i) + " of " + what + " violates the configured bounds");
}

Index coherent_index_unchecked(std::span<const IndexedFactor> factors, const CoherenceConfig& config)
{
	Index out;
	for (const auto& f : factors) {
		out.n += f.index.n - f.overlap.r;
		out.m += (config.literal_m ? f.index.n : f.index.m) - f.overlap.t;
		out.kappa += f.index.kappa;
	}
	return out;
}

Index coherent_index(std::span<const IndexedFactor> factors, const CoherenceConfig& config)
{
	for (const auto& f : factors)
		if (f.overlap.r < 0 || f.overlap.t < 0)
			throw CoherenceViolation("overlap counts must be non-negative");
	Index out = coherent_index_unchecked(factors, config);
	config.bounds.enforce(out, "product");
	return out;
}

}  // namespace gda
