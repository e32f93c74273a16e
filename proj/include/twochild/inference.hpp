#pragma once

#include "twochild/distribution.hpp"
#include "twochild/event.hpp"

#include <vector>

namespace twochild {

/// Odds update decomposition: updated = bayes_factor * initial.
struct OddsReport {
    RationalFunction initial_odds;
    RationalFunction bayes_factor;
    RationalFunction updated_odds;
};

/// Posterior decomposition: posterior = likelihood / evidence * prior.
struct ReconditionReport {
    RationalFunction prior;       // P(a)
    RationalFunction likelihood;  // P(b|a)
    RationalFunction evidence;    // P(b)
    RationalFunction posterior;   // P(a|b)
};

/// One chain-rule factor P(atom | given...).
struct FactorizationStep {
    EventExpr conditioned_atom;
    std::vector<EventExpr> given;
    RationalFunction value;
};

/// P(e): sum of cell values over the denotation of e.
RationalFunction probability(const JointDistribution& d, const EventExpr& e,
                             const EventEnv* env = nullptr);

/// P(a|b) = P(a&b)/P(b). Throws std::domain_error when b is symbolically
/// impossible.
RationalFunction conditional(const JointDistribution& d, const EventExpr& a, const EventExpr& b,
                             const EventEnv* env = nullptr);

/// The three ingredients of Bayes' rule plus the posterior they produce.
ReconditionReport recondition(const JointDistribution& d, const EventExpr& a, const EventExpr& b,
                              const EventEnv* env = nullptr);

/// Relative belief update for hypotheses a vs c on evidence b.
OddsReport odds_update(const JointDistribution& d, const EventExpr& a, const EventExpr& c,
                       const EventExpr& b, const EventEnv* env = nullptr);

/// Chain-rule factorization of P(atoms[0] & atoms[1] & ...) in the given
/// order. Every step marginalizes the full joint; independence is never
/// assumed. Throws std::domain_error if a step would condition on a
/// zero-probability context.
std::vector<FactorizationStep> chain_factorize(const JointDistribution& d,
                                               const std::vector<EventExpr>& atoms,
                                               const EventEnv* env = nullptr);

/// P(target | all atoms of context), exact. Throws std::domain_error on a
/// zero-probability context.
RationalFunction conditional_name(const JointDistribution& d, const EventExpr& target,
                                  const std::vector<EventExpr>& context,
                                  const EventEnv* env = nullptr);

}  // namespace twochild
