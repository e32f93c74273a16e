#include "twochild/montecarlo.hpp"

#include "twochild/inference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace twochild {

void SimConfig::validate() const {
    if (n_families == 0) {
        throw std::invalid_argument("simulation needs at least one family");
    }
    if (!regime.admits(r)) {
        throw std::invalid_argument("prevalence r = " + r.str() +
                                    " outside the admissible interval for regime " +
                                    regime.label());
    }
    if (mode == Mode::reject && regime.kind != RegimeKind::unique_names) {
        throw std::invalid_argument("rejection mode is a cross-check for the unique-name regime");
    }
    if (workers == 0) {
        throw std::invalid_argument("worker count must be positive");
    }
}

namespace {

// Inverse CDF over exact probabilities. A 64-bit draw u selects the first
// entry with u/2^64 < cum_k; the comparison u * den < cum_num * 2^64 is
// carried out exactly (in unsigned 128-bit when it fits, else in cpp_int).
template <typename Value>
class ExactSampler {
public:
    void add(Value value, const Rational& probability) {
        entries_.push_back({std::move(value), probability});
    }

    void finalize() {
        BigInt den = 1;
        for (const auto& e : entries_) den = boost::multiprecision::lcm(den, e.prob.denominator());
        BigInt cum = 0;
        thresholds_.clear();
        for (const auto& e : entries_) {
            cum += e.prob.numerator() * (den / e.prob.denominator());
            thresholds_.push_back(cum << 64);
        }
        den_ = den;
        use_fast_ = den <= BigInt(0xFFFFFFFFULL);
        if (use_fast_) {
            fast_den_ = den.convert_to<std::uint64_t>();
            fast_thresholds_.clear();
            for (const BigInt& t : thresholds_) {
                fast_thresholds_.push_back(t.convert_to<unsigned __int128>());
            }
        }
    }

    const Value& pick(std::uint64_t u) const {
        if (use_fast_) {
            unsigned __int128 lhs = static_cast<unsigned __int128>(u) * fast_den_;
            for (size_t k = 0; k < fast_thresholds_.size(); ++k) {
                if (lhs < fast_thresholds_[k]) return entries_[k].value;
            }
        } else {
            BigInt lhs = BigInt(u) * den_;
            for (size_t k = 0; k < thresholds_.size(); ++k) {
                if (lhs < thresholds_[k]) return entries_[k].value;
            }
        }
        return entries_.back().value;
    }

private:
    struct Entry {
        Value value;
        Rational prob;
    };
    std::vector<Entry> entries_;
    std::vector<BigInt> thresholds_;
    BigInt den_ = 1;
    bool use_fast_ = false;
    std::uint64_t fast_den_ = 1;
    std::vector<unsigned __int128> fast_thresholds_;
};

// Prepared sampling plan for one configuration.
struct Plan {
    bool per_child = false;  // two independent child draws vs one joint draw
    bool reject_duplicates = false;
    ExactSampler<Child> child;
    ExactSampler<FamilyOutcome> joint;
    Gender named_gender = Gender::female;

    static Plan make(const SimConfig& cfg) {
        Plan plan;
        plan.named_gender = cfg.regime.named_gender;
        if (cfg.regime.kind == RegimeKind::unique_names && cfg.mode == SimConfig::Mode::direct) {
            plan.per_child = false;
            JointDistribution d = build_distribution(cfg.regime);
            for (const auto& [outcome, p] : d.cells()) {
                plan.joint.add(outcome, p.eval(cfg.r));
            }
            plan.joint.finalize();
            return plan;
        }
        plan.per_child = true;
        plan.reject_duplicates =
            cfg.regime.kind == RegimeKind::unique_names && cfg.mode == SimConfig::Mode::reject;
        Regime child_regime = cfg.regime;
        if (plan.reject_duplicates) child_regime.kind = RegimeKind::shared_names;
        for (const Child& state : child_regime.child_states()) {
            Rational p;
            if (state.name_class == NameClass::not_applicable) {
                p = Rational(1, 2);
            } else if (state.name_class == NameClass::the_name) {
                p = cfg.r * Rational(1, 2);
            } else {
                p = (Rational(1) - cfg.r) * Rational(1, 2);
            }
            plan.child.add(state, p);
        }
        plan.child.finalize();
        return plan;
    }

    std::optional<FamilyOutcome> sample(const SimConfig& cfg, std::uint64_t family) const {
        if (!per_child) {
            return joint.pick(rng::family_draw(cfg.seed, family, 0));
        }
        Child eldest = child.pick(rng::family_draw(cfg.seed, family, 0));
        Child youngest = child.pick(rng::family_draw(cfg.seed, family, 1));
        if (reject_duplicates && eldest.name_class == NameClass::the_name &&
            youngest.name_class == NameClass::the_name) {
            return std::nullopt;
        }
        return FamilyOutcome{eldest, youngest};
    }
};

// Runs fn(family_index, outcome) over all families, partitioned across the
// configured workers. Accumulator must be mergeable by operator+=.
template <typename Acc, typename PerFamily>
Acc run_partitioned(const SimConfig& cfg, const Plan& plan, PerFamily per_family) {
    unsigned workers = cfg.workers;
    std::vector<Acc> parts(workers);
    auto worker_fn = [&](unsigned w) {
        std::uint64_t chunk = (cfg.n_families + workers - 1) / workers;
        std::uint64_t begin = w * chunk;
        std::uint64_t end = std::min(cfg.n_families, begin + chunk);
        Acc& acc = parts[w];
        for (std::uint64_t i = begin; i < end; ++i) {
            per_family(acc, i, plan.sample(cfg, i));
        }
    };
    if (workers == 1) {
        worker_fn(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) threads.emplace_back(worker_fn, w);
        for (auto& t : threads) t.join();
    }
    Acc total;
    for (const Acc& part : parts) total += part;
    return total;
}

struct CondCounts {
    std::uint64_t successes = 0;
    std::uint64_t trials = 0;
    CondCounts& operator+=(const CondCounts& o) {
        successes += o.successes;
        trials += o.trials;
        return *this;
    }
};

struct CellCounts {
    std::map<FamilyOutcome, std::uint64_t> cells;
    std::uint64_t discarded = 0;
    CellCounts& operator+=(const CellCounts& o) {
        for (const auto& [outcome, count] : o.cells) cells[outcome] += count;
        discarded += o.discarded;
        return *this;
    }
};

}  // namespace

std::optional<FamilyOutcome> sample_family(const SimConfig& cfg, std::uint64_t family_index) {
    cfg.validate();
    return Plan::make(cfg).sample(cfg, family_index);
}

RationalFunction analytic_conditional(const SimConfig& cfg, const EventExpr& a,
                                      const EventExpr& b, const EventEnv* env) {
    if (cfg.mode == SimConfig::Mode::reject) {
        // The rejection filter realizes the shared-name table conditioned on
        // distinct names, not the unique-name table.
        Regime shared = cfg.regime;
        shared.kind = RegimeKind::shared_names;
        JointDistribution d = build_distribution(shared);
        EventExpr duplicate = EventExpr::atom(Slot::eldest, AtomPredicate::has_the_name) &
                              EventExpr::atom(Slot::youngest, AtomPredicate::has_the_name);
        return conditional(d, a, b & !duplicate, env);
    }
    JointDistribution d = build_distribution(cfg.regime);
    return conditional(d, a, b, env);
}

Estimate estimate_conditional(const SimConfig& cfg, const EventExpr& a, const EventExpr& b,
                              const EventEnv* env) {
    cfg.validate();
    Plan plan = Plan::make(cfg);
    CondCounts counts = run_partitioned<CondCounts>(
        cfg, plan,
        [&](CondCounts& acc, std::uint64_t, const std::optional<FamilyOutcome>& outcome) {
            if (!outcome) return;
            if (!b.matches(*outcome, env)) return;
            ++acc.trials;
            if (a.matches(*outcome, env)) ++acc.successes;
        });

    Estimate est;
    est.successes = counts.successes;
    est.trials = counts.trials;
    est.analytic = analytic_conditional(cfg, a, b, env).eval(cfg.r);
    if (counts.trials == 0) {
        est.degenerate = true;
        est.note = "no sampled family satisfied the condition";
        return est;
    }
    est.p_hat = static_cast<double>(counts.successes) / static_cast<double>(counts.trials);
    est.stderr_hat =
        std::sqrt(est.p_hat * (1.0 - est.p_hat) / static_cast<double>(counts.trials));
    double gap = est.p_hat - est.analytic.to_double();
    if (est.stderr_hat > 0.0) {
        est.z_score = gap / est.stderr_hat;
    } else {
        // Degenerate spread (all successes or none): any gap is infinitely
        // many sigmas away; agreement is z = 0.
        est.z_score = gap == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return est;
}

CountTable expected_counts(const SimConfig& cfg) {
    cfg.validate();
    Plan plan = Plan::make(cfg);
    CellCounts counts = run_partitioned<CellCounts>(
        cfg, plan,
        [&](CellCounts& acc, std::uint64_t, const std::optional<FamilyOutcome>& outcome) {
            if (outcome) {
                ++acc.cells[*outcome];
            } else {
                ++acc.discarded;
            }
        });

    CountTable table;
    table.n_families = cfg.n_families;
    table.discarded = counts.discarded;
    table.empirical = std::move(counts.cells);
    Regime analytic_regime = cfg.regime;
    if (cfg.mode == SimConfig::Mode::reject) analytic_regime.kind = RegimeKind::shared_names;
    JointDistribution d = build_distribution(analytic_regime);
    Rational n{static_cast<long long>(cfg.n_families)};
    for (const auto& [outcome, p] : d.cells()) {
        table.analytic[outcome] = (p.eval(cfg.r) * n).round_half_even();
    }
    return table;
}

nlohmann::json to_json(const SimConfig& cfg) {
    nlohmann::json j;
    j["regime"] = cfg.regime.label();
    j["r"] = cfg.r.str();
    j["n"] = cfg.n_families;
    j["seed"] = cfg.seed;
    j["mode"] = cfg.mode == SimConfig::Mode::direct ? "direct" : "reject";
    j["workers"] = cfg.workers;
    return j;
}

nlohmann::json to_json(const Estimate& estimate, const SimConfig& cfg) {
    nlohmann::json j;
    j["config"] = to_json(cfg);
    j["analytic"] = estimate.analytic.str();
    j["analytic_decimal"] = estimate.analytic.decimal(6);
    j["successes"] = estimate.successes;
    j["trials"] = estimate.trials;
    j["p_hat"] = estimate.p_hat;
    j["stderr"] = estimate.stderr_hat;
    j["z"] = estimate.z_score;
    if (estimate.degenerate) j["degenerate"] = true;
    if (!estimate.note.empty()) j["note"] = estimate.note;
    return j;
}

}  // namespace twochild
