#include "twochild/inference.hpp"

#include <stdexcept>

namespace twochild {

namespace {

RationalFunction sum_over(const std::map<FamilyOutcome, RationalFunction>& cells,
                          const EventExpr& e, const EventEnv* env) {
    RationalFunction total;
    for (const auto& [outcome, p] : cells) {
        if (e.matches(outcome, env)) total += p;
    }
    return total;
}

EventExpr conjoin(const std::vector<EventExpr>& atoms, size_t count) {
    EventExpr acc = EventExpr::constant(true);
    for (size_t i = 0; i < count; ++i) {
        acc = i == 0 ? atoms[i] : acc & atoms[i];
    }
    return acc;
}

}  // namespace

RationalFunction probability(const JointDistribution& d, const EventExpr& e, const EventEnv* env) {
    return sum_over(d.cells(), e, env);
}

RationalFunction conditional(const JointDistribution& d, const EventExpr& a, const EventExpr& b,
                             const EventEnv* env) {
    RationalFunction pb = probability(d, b, env);
    if (pb.is_zero()) {
        throw std::domain_error("conditioning on the impossible event " + b.str());
    }
    return probability(d, a & b, env) / pb;
}

ReconditionReport recondition(const JointDistribution& d, const EventExpr& a, const EventExpr& b,
                              const EventEnv* env) {
    ReconditionReport rep;
    rep.prior = probability(d, a, env);
    rep.evidence = probability(d, b, env);
    if (rep.evidence.is_zero()) {
        throw std::domain_error("zero evidence: " + b.str());
    }
    if (rep.prior.is_zero()) {
        throw std::domain_error("zero prior: " + a.str());
    }
    rep.likelihood = probability(d, b & a, env) / rep.prior;
    rep.posterior = rep.likelihood / rep.evidence * rep.prior;
    return rep;
}

OddsReport odds_update(const JointDistribution& d, const EventExpr& a, const EventExpr& c,
                       const EventExpr& b, const EventEnv* env) {
    RationalFunction pa = probability(d, a, env);
    RationalFunction pc = probability(d, c, env);
    if (pc.is_zero()) {
        throw std::domain_error("zero-probability hypothesis " + c.str());
    }
    if (pa.is_zero()) {
        throw std::domain_error("zero-probability hypothesis " + a.str());
    }
    RationalFunction likelihood_a = probability(d, b & a, env) / pa;  // P(b|a)
    RationalFunction likelihood_c = probability(d, b & c, env) / pc;  // P(b|c)
    if (likelihood_c.is_zero()) {
        throw std::domain_error("evidence " + b.str() + " impossible under " + c.str());
    }
    OddsReport rep;
    rep.initial_odds = pa / pc;
    rep.bayes_factor = likelihood_a / likelihood_c;
    rep.updated_odds = rep.bayes_factor * rep.initial_odds;
    return rep;
}

std::vector<FactorizationStep> chain_factorize(const JointDistribution& d,
                                               const std::vector<EventExpr>& atoms,
                                               const EventEnv* env) {
    std::vector<FactorizationStep> steps;
    RationalFunction context_prob{Rational(1)};
    for (size_t i = 0; i < atoms.size(); ++i) {
        if (context_prob.is_zero()) {
            throw std::domain_error("chain rule: step " + std::to_string(i + 1) +
                                    " conditions on a zero-probability context");
        }
        RationalFunction joint = probability(d, conjoin(atoms, i + 1), env);
        FactorizationStep step;
        step.conditioned_atom = atoms[i];
        step.given.assign(atoms.begin(), atoms.begin() + static_cast<long>(i));
        step.value = joint / context_prob;
        steps.push_back(std::move(step));
        context_prob = joint;
    }
    return steps;
}

RationalFunction conditional_name(const JointDistribution& d, const EventExpr& target,
                                  const std::vector<EventExpr>& context, const EventEnv* env) {
    EventExpr ctx = conjoin(context, context.size());
    RationalFunction pc = probability(d, ctx, env);
    if (pc.is_zero()) {
        throw std::domain_error("zero-probability context " + ctx.str());
    }
    return probability(d, target & ctx, env) / pc;
}

}  // namespace twochild
