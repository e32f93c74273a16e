#pragma once

#include "twochild/distribution.hpp"
#include "twochild/event.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace twochild {

namespace rng {

/// Counter-based generator: the SplitMix64 output mix evaluated at an
/// absolute position, value(seed, i) = mix64(seed + (i+1) * 0x9E3779B97F4A7C15).
/// Draw j of family f reads position f * kDrawsPerFamily + j, so any
/// partition of families across workers sees identical randomness.
inline constexpr std::uint64_t kDrawsPerFamily = 4;

inline std::uint64_t at(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t family_draw(std::uint64_t seed, std::uint64_t family, std::uint64_t draw) {
    return at(seed, family * kDrawsPerFamily + draw);
}

}  // namespace rng

struct SimConfig {
    enum class Mode {
        direct,  // sample the regime's joint table
        reject   // sample the shared-name table, discard duplicate-name families
    };

    Regime regime;
    Rational r;
    std::uint64_t n_families = 1;
    std::uint64_t seed = 0;
    Mode mode = Mode::direct;
    unsigned workers = 1;

    /// Throws std::invalid_argument on n_families == 0 or inadmissible r.
    void validate() const;
};

/// Deterministic draw of family `family_index`; depends only on
/// (seed, family_index). Returns nullopt when the rejection filter discards
/// the family (mode == reject and both children carry the name).
std::optional<FamilyOutcome> sample_family(const SimConfig& cfg, std::uint64_t family_index);

struct Estimate {
    std::uint64_t successes = 0;  // families satisfying a AND b
    std::uint64_t trials = 0;     // families satisfying b
    double p_hat = 0.0;
    double stderr_hat = 0.0;      // sqrt(p(1-p)/trials)
    double z_score = 0.0;
    Rational analytic;
    bool degenerate = false;      // no family satisfied b
    std::string note;
};

/// Empirical conditional P(a|b) with its analytic reference. Under
/// mode == reject the reference is the shared-name table conditioned on
/// distinct names, which is a different model from the unique-name table.
Estimate estimate_conditional(const SimConfig& cfg, const EventExpr& a, const EventExpr& b,
                              const EventEnv* env = nullptr);

/// The analytic value estimate_conditional compares against, exact.
RationalFunction analytic_conditional(const SimConfig& cfg, const EventExpr& a,
                                      const EventExpr& b, const EventEnv* env = nullptr);

struct CountTable {
    std::uint64_t n_families = 0;
    std::uint64_t discarded = 0;  // rejection mode only
    std::map<FamilyOutcome, BigInt> analytic;        // cell probability * n, half-even
    std::map<FamilyOutcome, std::uint64_t> empirical;
};

/// Expected cell counts next to an actual simulation's empirical counts.
CountTable expected_counts(const SimConfig& cfg);

nlohmann::json to_json(const SimConfig& cfg);
nlohmann::json to_json(const Estimate& estimate, const SimConfig& cfg);

}  // namespace twochild
