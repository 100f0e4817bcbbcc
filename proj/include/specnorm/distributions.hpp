#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "specnorm/prng.hpp"

namespace specnorm {

enum class DistributionKind { rademacher, gaussian_std, uniform_symmetric };

inline const char* to_string(DistributionKind k) {
    switch (k) {
        case DistributionKind::rademacher: return "rademacher";
        case DistributionKind::gaussian_std: return "gaussian_std";
        case DistributionKind::uniform_symmetric: return "uniform_symmetric";
    }
    return "?";
}

inline DistributionKind distribution_kind_from_string(const std::string& s) {
    if (s == "rademacher") return DistributionKind::rademacher;
    if (s == "gaussian_std") return DistributionKind::gaussian_std;
    if (s == "uniform_symmetric") return DistributionKind::uniform_symmetric;
    throw std::invalid_argument("unknown distribution kind: " + s);
}

/// One entry law.  A sample is mean + sqrt(variance) * W, where W is the
/// centered unit-variance draw of `kind`.  variance = 0 gives the point mass
/// at `mean` (used for degenerate / deterministic experiments).
struct DistributionSpec {
    DistributionKind kind = DistributionKind::rademacher;
    double mean = 0.0;
    double variance = 1.0;
    /// Tail constant a in P[|X - mean| >= t] <= 2 exp(-a t^2) for the
    /// centered unit-variance law.
    double subgaussian_a = std::log(2.0);
    std::optional<double> lsi_A;    ///< log-Sobolev constant, when known
    std::optional<double> bound_A;  ///< a.s. bound |X| <= bound_A, when finite

    bool operator==(const DistributionSpec&) const = default;
};

inline DistributionSpec rademacher_spec() {
    DistributionSpec s;
    s.kind = DistributionKind::rademacher;
    s.subgaussian_a = std::log(2.0);
    s.bound_A = 1.0;
    return s;
}

inline DistributionSpec gaussian_spec() {
    DistributionSpec s;
    s.kind = DistributionKind::gaussian_std;
    s.subgaussian_a = 0.5;
    s.lsi_A = 1.0;
    return s;
}

inline DistributionSpec uniform_symmetric_spec() {
    DistributionSpec s;
    s.kind = DistributionKind::uniform_symmetric;
    s.subgaussian_a = std::log(2.0) / 3.0;
    s.bound_A = std::sqrt(3.0);
    return s;
}

/// Same centered law, mean moved by m.
inline DistributionSpec shifted(DistributionSpec base, double m) {
    base.mean += m;
    if (base.bound_A) *base.bound_A = std::abs(base.mean) + std::sqrt(base.variance) * *base.bound_A;
    return base;
}

inline std::vector<DistributionSpec> builtin_specs() {
    return {rademacher_spec(), gaussian_spec(), uniform_symmetric_spec()};
}

/// Exact tail P[|X - E X| >= t] of the centered law described by `spec`.
inline double centered_tail(const DistributionSpec& spec, double t) {
    if (t <= 0.0) return 1.0;
    if (spec.variance == 0.0) return 0.0;
    const double u = t / std::sqrt(spec.variance);
    switch (spec.kind) {
        case DistributionKind::rademacher: return u <= 1.0 ? 1.0 : 0.0;
        case DistributionKind::gaussian_std: return std::erfc(u / std::sqrt(2.0));
        case DistributionKind::uniform_symmetric: {
            const double r = 1.0 - u / std::sqrt(3.0);
            return r > 0.0 ? r : 0.0;
        }
    }
    return 0.0;
}

/// Checks P[|X - E X| >= t] <= 2 exp(-a t^2) on every t of the grid, using
/// the exact closed-form tail of the distribution.
inline bool verify_subgaussian_tail(const DistributionSpec& spec, double a,
                                    const std::vector<double>& t_grid) {
    if (!(a > 0.0)) throw std::invalid_argument("subgaussian constant a must be positive");
    for (double t : t_grid) {
        if (!(t > 0.0)) throw std::invalid_argument("tail grid points must be positive");
        if (centered_tail(spec, t) > 2.0 * std::exp(-a * t * t)) return false;
    }
    return true;
}

/// Independent draws X_{offset}, ..., X_{offset+L-1}.  Regenerating with the
/// same inputs reproduces the values bit-exactly; element j depends only on
/// (master_seed, index_offset + j), so evaluation order does not matter.
struct EntrySequence {
    std::vector<double> values;
    std::vector<DistributionSpec> specs;  ///< cycled by index mod |specs|
    std::uint64_t master_seed = 0;
    std::int64_t index_offset = 0;

    const DistributionSpec& spec_at(std::size_t j) const { return specs[j % specs.size()]; }
};

namespace detail {

inline double sample_one(const DistributionSpec& spec, std::uint64_t seed) {
    SplitMix64 rng(seed);
    double w = 0.0;
    switch (spec.kind) {
        case DistributionKind::rademacher:
            w = (rng.next_u64() >> 63) ? 1.0 : -1.0;
            break;
        case DistributionKind::gaussian_std: {
            // Box-Muller; u1 in (0,1] keeps the log finite.
            const double u1 = rng.next_unit_open();
            const double u2 = rng.next_unit();
            w = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
            break;
        }
        case DistributionKind::uniform_symmetric:
            w = (2.0 * rng.next_unit() - 1.0) * std::sqrt(3.0);
            break;
    }
    return spec.mean + std::sqrt(spec.variance) * w;
}

}  // namespace detail

inline EntrySequence sample_entries(const std::vector<DistributionSpec>& specs, std::size_t L,
                                    std::uint64_t master_seed, std::int64_t index_offset = 0) {
    if (specs.empty()) throw std::invalid_argument("sample_entries: spec list is empty");
    if (L == 0) throw std::invalid_argument("sample_entries: L must be >= 1");
    EntrySequence seq;
    seq.specs = specs;
    seq.master_seed = master_seed;
    seq.index_offset = index_offset;
    seq.values.resize(L);
    for (std::size_t j = 0; j < L; ++j) {
        const auto& spec = specs[j % specs.size()];
        const auto idx = static_cast<std::uint64_t>(index_offset + static_cast<std::int64_t>(j));
        seq.values[j] = detail::sample_one(spec, substream_seed(master_seed, idx));
    }
    return seq;
}

}  // namespace specnorm
