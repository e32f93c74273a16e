#pragma once

#include "twochild/distribution.hpp"
#include "twochild/event.hpp"

#include <optional>
#include <vector>

namespace twochild {

/// The wrong-reasoning table: unique names, but with the second girl's name
/// treated as independent of the first girl's ("P(YN | Ef,E!N,Yf) = r").
/// Deliberately a distinct type from JointDistribution so it cannot be used
/// where a valid joint distribution is expected.
class PitfallTable {
public:
    const Regime& regime() const { return regime_; }
    const std::map<FamilyOutcome, RationalFunction>& cells() const { return cells_; }
    const RationalFunction& cell(const FamilyOutcome& o) const;
    std::map<Child, RationalFunction> marginals(Slot slot) const;
    RationalFunction total() const;

    friend PitfallTable build_pitfall_table(Gender named_gender);

private:
    Regime regime_;
    std::map<FamilyOutcome, RationalFunction> cells_;
};

PitfallTable build_pitfall_table(Gender named_gender = Gender::female);

/// Event probabilities over the pitfall cells, for demonstrating what the
/// wrong table implies. Same summation semantics as the valid overloads.
RationalFunction probability(const PitfallTable& t, const EventExpr& e,
                             const EventEnv* env = nullptr);
RationalFunction conditional(const PitfallTable& t, const EventExpr& a, const EventExpr& b,
                             const EventEnv* env = nullptr);

/// One asymmetric cell pair: cell(a,b) != cell(b,a).
struct SymmetryDefect {
    FamilyOutcome outcome;          // the (a,b) orientation
    RationalFunction value_ab;
    RationalFunction value_ba;
    RationalFunction difference;    // value_ab - value_ba, sign-normalized
};

/// Child state whose eldest-slot and youngest-slot marginals disagree.
struct MarginalDefect {
    Child child;
    RationalFunction eldest_total;
    RationalFunction youngest_total;
    RationalFunction difference;    // eldest - youngest, sign-normalized
};

struct SymmetryReport {
    bool symmetric = true;
    bool marginals_preserved = true;
    bool normalized = true;
    /// Largest asymmetry (zero when symmetric). Differences are compared at
    /// the probe point r = 1/4 and sign-normalized to be nonnegative there.
    RationalFunction max_defect;
    std::vector<SymmetryDefect> asymmetric_pairs;
    std::vector<MarginalDefect> marginal_defects;
    RationalFunction total;

    bool pass() const { return symmetric && marginals_preserved && normalized; }
};

SymmetryReport check_symmetry(const JointDistribution& d);
SymmetryReport check_symmetry(const PitfallTable& t);

}  // namespace twochild
