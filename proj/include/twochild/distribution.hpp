#pragma once

#include "twochild/family.hpp"
#include "twochild/rational_function.hpp"

#include <map>
#include <vector>

namespace twochild {

/// Joint distribution over (eldest, youngest) outcomes for one regime.
///
/// Cells are exact rational functions of the prevalence r and sum to 1 as a
/// polynomial identity. Outcomes excluded by the regime (the duplicate-name
/// pair under unique_names) are absent from the map and have probability 0.
/// Immutable after construction.
class JointDistribution {
public:
    const Regime& regime() const { return regime_; }
    const std::map<FamilyOutcome, RationalFunction>& cells() const { return cells_; }

    /// Cell probability; zero for outcomes outside the regime's space.
    const RationalFunction& cell(const FamilyOutcome& o) const;

    /// Per-slot marginal distribution over child states.
    std::map<Child, RationalFunction> marginals(Slot slot) const;

    /// Symbolic sum of all cells (identically 1 for a valid construction).
    RationalFunction total() const;

    friend JointDistribution build_distribution(const Regime& regime);

private:
    Regime regime_;
    std::map<FamilyOutcome, RationalFunction> cells_;
};

/// Constructs the joint table for the regime:
///   gender_only  - four cells of 1/4
///   shared_names - nine cells from per-child independence,
///                  P(m) = 1/2, P(named N) = r/2, P(named !N) = (1-r)/2
///   unique_names - eight cells; built twice (marginal-preserving repair of
///                  the shared-name table, and direct chain-rule products)
///                  and cross-checked for symbolic equality
JointDistribution build_distribution(const Regime& regime);

}  // namespace twochild
