// Acceptance suite: one check per numbered criterion, each printing a
// PASS/FAIL line (plus detail lines on failure or when informative).
// Run all criteria with no arguments, or one with --criterion N.

#include "twochild/cli.hpp"
#include "twochild/distribution.hpp"
#include "twochild/inference.hpp"
#include "twochild/montecarlo.hpp"
#include "twochild/pitfall.hpp"
#include "twochild/query.hpp"
#include "twochild/table_render.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace twochild;
using nlohmann::json;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            details.push_back("FAILED: " + what);
        }
    }
    void note(const std::string& what) { details.push_back(what); }
};

const RationalFunction r = RationalFunction::variable();
RationalFunction c(long long num, long long den = 1) { return RationalFunction(Rational(num, den)); }

EventExpr E(AtomPredicate p) { return EventExpr::atom(Slot::eldest, p); }
EventExpr Y(AtomPredicate p) { return EventExpr::atom(Slot::youngest, p); }
EventExpr A() { return E(AtomPredicate::is_female) & Y(AtomPredicate::is_female); }
EventExpr B() {
    return E(AtomPredicate::is_female_the_name) | Y(AtomPredicate::is_female_the_name);
}
EventExpr C() {
    return (E(AtomPredicate::is_female) & Y(AtomPredicate::is_male)) |
           (E(AtomPredicate::is_male) & Y(AtomPredicate::is_female));
}

std::string run_eval_json(const std::string& query) {
    std::ostringstream out, err;
    int code = cli::run({"eval", query, "--json"}, out, err);
    if (code != 0) return "";
    return out.str();
}

// --------------------------------------------------------------------------
// 1. Textbook answers through the eval surface, exactly, in under a second.

Outcome criterion1() {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    struct Case {
        const char* query;
        Rational expected;
    } cases[] = {
        {"@regime(i0) P(E.m & Y.m)", Rational(1, 4)},
        {"@regime(i0) P(E.m & Y.m | E.m)", Rational(1, 2)},
        {"@regime(i0) P(E.m & Y.m | E.m + Y.m)", Rational(1, 3)},
    };
    for (const Case& cse : cases) {
        std::string payload = run_eval_json(cse.query);
        o.check(!payload.empty(), std::string("eval failed for ") + cse.query);
        if (payload.empty()) continue;
        json j = json::parse(payload);
        RationalFunction got = RationalFunction::parse(j["exact"].get<std::string>());
        o.check(got == RationalFunction(cse.expected),
                std::string(cse.query) + " returned " + got.str() + ", expected " +
                    cse.expected.str());
    }
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
    o.note("Q1 = 1/4, Q2 = 1/2, Q3 = 1/3 via eval in " + std::to_string(elapsed.count()) + " s");
    o.check(elapsed.count() < 1.0, "textbook answers took longer than one second");
    return o;
}

// --------------------------------------------------------------------------
// 2. The prevalence sweep, digit for digit as printed, plus the r = 1 value.

Outcome criterion2() {
    Outcome o;
    JointDistribution i1 = build_distribution(regime_i1());
    RationalFunction p = conditional(i1, A(), B());
    struct Row {
        const char* r_text;
        const char* printed;
    } rows[] = {
        {"3/10", "0.45946"}, {"1/5", "0.47368"},    {"1/10", "0.48718"}, {"1/50", "0.49749"},
        {"1/100", "0.49875"}, {"1/1000", "0.49988"}, {"1/10000", "0.49999"},
    };
    for (const Row& row : rows) {
        Rational rv = *Rational::parse(row.r_text);
        Rational value = p.eval(rv);
        std::string rendered = value.decimal(5);
        if (rendered == row.printed) continue;
        o.pass = false;
        o.details.push_back("FAILED: at r = " + rv.str() + " the engine renders " + rendered +
                            " (exact " + value.str() + ") but the printed table says " +
                            row.printed);
        if (std::string(row.r_text) == "1/1000") {
            o.note("  the exact value 1999/3999 = 0.4998749687... lies below the rounding");
            o.note("  midpoint 0.499875 (by 1/31992000), so every half-way rule renders");
            o.note("  0.49987; the printed 0.49988 matches double-rounding the small-r");
            o.note("  approximation 1/2 - r/8 = 0.499875 and cannot be reproduced by a");
            o.note("  correct rounding of the exact conditional");
        }
    }
    o.check(p.eval(Rational(1)) == Rational(1, 3), "value at r = 1 is not exactly 1/3");
    return o;
}

// --------------------------------------------------------------------------
// 3. Closed forms against an independent brute-force oracle.

Outcome criterion3() {
    Outcome o;
    // Oracle: rebuild the shared-name table from the three per-child weights
    // and sum the raw cells directly; no distribution or event machinery.
    const RationalFunction w[3] = {c(1, 2), r * c(1, 2), (c(1) - r) * c(1, 2)};  // m, fN, f!N
    RationalFunction evidence, both_girls_and_evidence;
    for (int e = 0; e < 3; ++e) {
        for (int y = 0; y < 3; ++y) {
            bool named = e == 1 || y == 1;
            bool both_female = e >= 1 && y >= 1;
            RationalFunction cell = w[e] * w[y];
            if (named) evidence += cell;
            if (named && both_female) both_girls_and_evidence += cell;
        }
    }
    RationalFunction oracle = both_girls_and_evidence / evidence;
    o.check(oracle == (c(2) - r) / (c(4) - r), "oracle disagrees with (2 - r)/(4 - r)");

    JointDistribution i1 = build_distribution(regime_i1());
    RationalFunction engine = conditional(i1, A(), B());
    o.check(engine == oracle, "engine conditional " + engine.str() +
                                  " differs from the brute-force oracle " + oracle.str());
    o.check(engine == (c(2) - r) / (c(4) - r), "shared-name conditional is not (2 - r)/(4 - r)");

    JointDistribution i2 = build_distribution(regime_i2());
    RationalFunction unique = conditional(i2, A(), B());
    o.check(unique == c(1, 2), "unique-name conditional is not exactly 1/2 (got " +
                                   unique.str() + ")");
    o.note("shared names: " + engine.str() + "; unique names: " + unique.str());
    return o;
}

// --------------------------------------------------------------------------
// 4. The classic 1/50 numeric table, its count table, and the misprint flag.

Outcome criterion4() {
    Outcome o;
    JointDistribution i1 = build_distribution(regime_i1());
    TableOptions opts;
    opts.r = Rational(1, 50);
    opts.digits = 4;
    RenderedTable t = render_table(i1, opts);
    const char* printed[3][3] = {{"0.2500", "0.0050", "0.2450"},
                                 {"0.0050", "0.0001", "0.0049"},
                                 {"0.2450", "0.0049", "0.2401"}};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            o.check(*t.cells[i][j].decimal == printed[i][j],
                    "cell (" + std::to_string(i) + "," + std::to_string(j) + ") is " +
                        *t.cells[i][j].decimal + ", printed " + printed[i][j]);
        }
    }

    opts.scale = 10000;
    RenderedTable counts = render_table(i1, opts);
    long long printed_counts[3][3] = {{2500, 50, 2450}, {50, 1, 49}, {2450, 49, 2401}};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            o.check(*counts.cells[i][j].count == printed_counts[i][j],
                    "count (" + std::to_string(i) + "," + std::to_string(j) + ") is " +
                        counts.cells[i][j].count->str());
        }
    }
    o.check(*counts.grand_total.count == 10000, "counts do not total 10000");

    std::ostringstream out, err;
    int code = cli::run({"table", "2", "--r", "1/50"}, out, err);
    o.check(code == 0, "table 2 --r 1/50 failed");
    bool flagged = out.str().find("0.1000") != std::string::npos &&
                   out.str().find("0.0100") != std::string::npos &&
                   out.str().find("misprint") != std::string::npos;
    o.check(flagged, "the misprinted fN column total (0.1000 vs computed 0.0100) is not flagged");
    return o;
}

// --------------------------------------------------------------------------
// 5. The Bayesian decompositions, symbolically.

Outcome criterion5() {
    Outcome o;
    JointDistribution i2 = build_distribution(regime_i2());
    ReconditionReport rep = recondition(i2, A(), B());
    o.check(rep.prior == c(1, 4), "prior is " + rep.prior.str() + ", expected 1/4");
    o.check(rep.likelihood == c(2) * r, "likelihood is " + rep.likelihood.str() + ", expected 2r");
    o.check(rep.evidence == r, "evidence is " + rep.evidence.str() + ", expected r");
    o.check(rep.posterior == c(1, 2), "posterior is " + rep.posterior.str() + ", expected 1/2");

    OddsReport odds = odds_update(i2, A(), C(), B());
    o.check(odds.initial_odds == c(1, 2), "initial odds " + odds.initial_odds.str());
    o.check(odds.bayes_factor == c(2), "bayes factor " + odds.bayes_factor.str());
    o.check(odds.updated_odds == c(1), "updated odds " + odds.updated_odds.str());
    o.note("recondition: (1/4, 2r, r, 1/2); odds update: (1/2, 2, 1)");
    return o;
}

// --------------------------------------------------------------------------
// 6. The appendix: stated chain orders, conditional names, the pitfall table
//    and the symmetry checker.

Outcome criterion6() {
    Outcome o;
    JointDistribution i2 = build_distribution(regime_i2());
    const EventExpr Em = E(AtomPredicate::is_male), Ym = Y(AtomPredicate::is_male);
    const EventExpr Ef = E(AtomPredicate::is_female), Yf = Y(AtomPredicate::is_female);
    const EventExpr EN = E(AtomPredicate::has_the_name), YN = Y(AtomPredicate::has_the_name);
    const EventExpr ENo = E(AtomPredicate::has_other_name), YNo = Y(AtomPredicate::has_other_name);

    const Child m = Child::male();
    const Child fN = Child::named(Gender::female, NameClass::the_name);
    const Child fO = Child::named(Gender::female, NameClass::other_name);

    struct ChainCase {
        std::vector<EventExpr> atoms;
        std::vector<RationalFunction> factors;
        FamilyOutcome cell;
    };
    const RationalFunction half = c(1, 2), one = c(1);
    std::vector<ChainCase> chains = {
        {{Em, Ym}, {half, half}, {m, m}},
        {{Em, Yf, YN}, {half, half, r}, {m, fN}},
        {{Em, Yf, YNo}, {half, half, one - r}, {m, fO}},
        {{Ef, EN, Ym}, {half, r, half}, {fN, m}},
        {{Ef, ENo, Ym}, {half, one - r, half}, {fO, m}},
        {{Ef, EN, Yf, YNo}, {half, r, half, one}, {fN, fO}},
        {{Yf, YN, Ef, ENo}, {half, r, half, one}, {fO, fN}},
        {{Ef, ENo, Yf, YNo}, {half, one - r, half, (one - c(2) * r) / (one - r)}, {fO, fO}},
    };
    for (size_t k = 0; k < chains.size(); ++k) {
        auto steps = chain_factorize(i2, chains[k].atoms);
        RationalFunction product = one;
        for (size_t s = 0; s < steps.size(); ++s) {
            product *= steps[s].value;
            o.check(steps[s].value == chains[k].factors[s],
                    "chain " + std::to_string(k) + " step " + std::to_string(s) + " is " +
                        steps[s].value.str() + ", expected " + chains[k].factors[s].str());
        }
        o.check(product == i2.cell(chains[k].cell),
                "chain " + std::to_string(k) + " product " + product.str() +
                    " differs from the table cell");
    }
    // The duplicate-name chain terminates in a zero factor.
    auto zero_chain = chain_factorize(i2, {Ef, EN, Yf, YN});
    o.check(zero_chain.back().value.is_zero(), "duplicate-name chain does not end in 0");

    // Conditional name probabilities.
    o.check(conditional_name(i2, YN, {Ef, ENo, Yf}) == r / (one - r),
            "P(YN | Ef,E!N,Yf) is not r/(1-r)");
    o.check(conditional_name(i2, YNo, {Ef, ENo, Yf}) == (one - c(2) * r) / (one - r),
            "P(Y!N | Ef,E!N,Yf) is not (1-2r)/(1-r)");

    // The pitfall table resurrects the shared-name conditional.
    PitfallTable wrong = build_pitfall_table();
    JointDistribution i1 = build_distribution(regime_i1());
    o.check(conditional(wrong, A(), B()) == conditional(i1, A(), B()),
            "pitfall conditional differs from the shared-name closed form");

    // Symmetry checker: defect r^2/4 on the pitfall, zero on tables 1, 2, 4.
    SymmetryReport bad = check_symmetry(wrong);
    o.check(!bad.pass() && bad.max_defect == r * r / c(4),
            "pitfall symmetry defect is " + bad.max_defect.str() + ", expected r^2/4");
    bool marginal_flagged = false;
    for (const MarginalDefect& d : bad.marginal_defects) {
        if (d.child == fN && d.difference == r * r / c(4)) marginal_flagged = true;
    }
    o.check(marginal_flagged, "pitfall fN marginal shortfall r^2/4 not reported");
    for (RegimeKind kind :
         {RegimeKind::gender_only, RegimeKind::shared_names, RegimeKind::unique_names}) {
        SymmetryReport good = check_symmetry(build_distribution(Regime{kind}));
        o.check(good.pass() && good.max_defect.is_zero(),
                "a valid table fails the symmetry check");
    }
    return o;
}

// --------------------------------------------------------------------------
// 7. Property suites, at least a thousand cases each.

Outcome criterion7() {
    Outcome o;
    std::mt19937_64 rng(0xACCE97);
    JointDistribution tables[] = {build_distribution(regime_i0()), build_distribution(regime_i1()),
                                  build_distribution(regime_i2())};

    // Normalization, label symmetry, marginal preservation, collapse: the
    // identities are symbolic; on top of that, probe 1000 random prevalences.
    std::uniform_int_distribution<long long> num(0, 999);
    int numeric_probes = 0;
    for (int k = 0; k < 1000; ++k) {
        Rational rv(num(rng), 2000);  // [0, 1/2), admissible everywhere
        for (const JointDistribution& d : tables) {
            if (d.total().eval(rv) != Rational(1)) {
                o.check(false, "normalization fails at r = " + rv.str());
            }
        }
        ++numeric_probes;
    }
    o.check(numeric_probes == 1000, "normalization probe count");
    for (const JointDistribution& d : tables) {
        o.check(d.total() == c(1), "symbolic normalization fails for " + d.regime().label());
        for (const auto& [outcome, p] : d.cells()) {
            if (!(d.cell(outcome.swapped()) == p)) {
                o.check(false, "label symmetry fails for " + d.regime().label());
            }
        }
        o.check(d.marginals(Slot::eldest) == d.marginals(Slot::youngest),
                "marginal preservation fails for " + d.regime().label());
    }
    // Collapse to the gender-only table.
    for (int t = 1; t <= 2; ++t) {
        std::map<std::pair<Gender, Gender>, RationalFunction> collapsed;
        for (const auto& [outcome, p] : tables[t].cells()) {
            collapsed[{outcome.eldest.gender, outcome.youngest.gender}] += p;
        }
        for (const auto& [genders, p] : collapsed) {
            o.check(p == c(1, 4), "collapse to quarters fails");
        }
    }

    // Product and complement rules over 1000 random event pairs.
    auto random_event = [&](auto&& self, int depth) -> EventExpr {
        std::uniform_int_distribution<int> pick(0, depth > 0 ? 5 : 1);
        std::uniform_int_distribution<int> slot_pick(0, 1);
        std::uniform_int_distribution<int> pred_pick(0, 5);
        switch (pick(rng)) {
            case 0:
            case 1:
                return EventExpr::atom(slot_pick(rng) == 0 ? Slot::eldest : Slot::youngest,
                                       static_cast<AtomPredicate>(pred_pick(rng)));
            case 2: return self(self, depth - 1) & self(self, depth - 1);
            case 3: return self(self, depth - 1) | self(self, depth - 1);
            case 4: return !self(self, depth - 1);
            default: return EventExpr::constant(slot_pick(rng) == 0);
        }
    };
    int pairs = 0;
    while (pairs < 1000) {
        const JointDistribution& d = tables[pairs % 3];
        EventExpr a = random_event(random_event, 3);
        EventExpr b = random_event(random_event, 3);
        RationalFunction pb = probability(d, b);
        if (pb.is_zero()) continue;
        if (!(probability(d, a & b) == conditional(d, a, b) * pb)) {
            o.check(false, "product rule fails");
        }
        if (!(conditional(d, a, b) + conditional(d, !a, b) == c(1))) {
            o.check(false, "complement rule fails");
        }
        ++pairs;
    }
    o.check(pairs == 1000, "product/complement case count");

    // Chain-rule order independence: 42 random four-atom conjunctions times
    // all 24 orderings.
    std::uniform_int_distribution<int> pred_pick(0, 5);
    std::uniform_int_distribution<int> coin(0, 1);
    int orderings_checked = 0;
    int sets = 0;
    while (sets < 42) {
        std::vector<EventExpr> atoms;
        for (int k = 0; k < 4; ++k) {
            atoms.push_back(EventExpr::atom(coin(rng) == 0 ? Slot::eldest : Slot::youngest,
                                            static_cast<AtomPredicate>(pred_pick(rng))));
        }
        const JointDistribution& d = tables[1 + sets % 2];
        RationalFunction joint = probability(d, atoms[0] & atoms[1] & atoms[2] & atoms[3]);
        if (joint.is_zero()) continue;
        std::vector<size_t> perm{0, 1, 2, 3};
        do {
            std::vector<EventExpr> permuted;
            for (size_t k : perm) permuted.push_back(atoms[k]);
            RationalFunction product = c(1);
            for (const auto& step : chain_factorize(d, permuted)) product *= step.value;
            if (!(product == joint)) o.check(false, "chain ordering changes the product");
            ++orderings_checked;
        } while (std::next_permutation(perm.begin(), perm.end()));
        ++sets;
    }
    o.check(orderings_checked == 42 * 24, "chain ordering case count");
    o.note("chain orderings checked: " + std::to_string(orderings_checked));

    // Small-r expansion: approximation error is exactly r^2/(8(4-r)).
    JointDistribution i1 = build_distribution(regime_i1());
    RationalFunction p = conditional(i1, A(), B());
    o.check((c(1, 2) - r / c(8)) - p == r * r / (c(8) * (c(4) - r)),
            "small-r expansion identity fails");
    return o;
}

// --------------------------------------------------------------------------
// 8. Monte Carlo agreement at n = 10^6 inside 4 sigma, deterministic across
//    worker counts, in under 30 seconds.

Outcome criterion8() {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    struct Case {
        const char* label;
        RegimeKind kind;
        Rational r;
        EventExpr a;
        EventExpr b;
    };
    std::vector<Case> cases;
    cases.push_back({"gender-only at-least-one-boy", RegimeKind::gender_only, Rational(0),
                     E(AtomPredicate::is_male) & Y(AtomPredicate::is_male),
                     E(AtomPredicate::is_male) | Y(AtomPredicate::is_male)});
    cases.push_back({"shared names r = 3/10", RegimeKind::shared_names, Rational(3, 10), A(), B()});
    cases.push_back({"shared names r = 1/50", RegimeKind::shared_names, Rational(1, 50), A(), B()});
    cases.push_back({"unique names r = 1/50", RegimeKind::unique_names, Rational(1, 50), A(), B()});

    for (const Case& cse : cases) {
        SimConfig cfg;
        cfg.regime = Regime{cse.kind};
        cfg.r = cse.r;
        cfg.n_families = 1000000;
        cfg.seed = 20260808;
        Estimate est = estimate_conditional(cfg, cse.a, cse.b);
        o.check(!est.degenerate, std::string(cse.label) + " produced no trials");
        o.check(std::abs(est.z_score) <= 4.0,
                std::string(cse.label) + " landed " + std::to_string(est.z_score) +
                    " sigma from " + est.analytic.str());
        o.note(std::string(cse.label) + ": p_hat " + std::to_string(est.p_hat) + " vs " +
               est.analytic.str() + " (z = " + std::to_string(est.z_score) + ")");
    }

    SimConfig base;
    base.regime = regime_i2();
    base.r = Rational(1, 50);
    base.n_families = 1000000;
    base.seed = 31415;
    SimConfig parallel = base;
    parallel.workers = 8;
    Estimate serial_est = estimate_conditional(base, A(), B());
    Estimate parallel_est = estimate_conditional(parallel, A(), B());
    bool identical = serial_est.successes == parallel_est.successes &&
                     serial_est.trials == parallel_est.trials &&
                     serial_est.p_hat == parallel_est.p_hat &&
                     serial_est.z_score == parallel_est.z_score &&
                     to_json(serial_est, base).dump() == to_json(parallel_est, base).dump();
    o.check(identical, "1-worker and 8-worker reports are not bit-identical");

    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
    o.note("total simulation time " + std::to_string(elapsed.count()) + " s");
    o.check(elapsed.count() < 30.0, "Monte Carlo suite exceeded 30 seconds");
    return o;
}

// --------------------------------------------------------------------------
// 9. Parser: round-trip plus a crash-free fuzz run with spans on rejection.

Outcome criterion9() {
    Outcome o;
    std::mt19937_64 rng(0xF22);
    std::uniform_int_distribution<int> kind_pick(0, 3);
    std::uniform_int_distribution<int> regime_pick(0, 2);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> pred_pick(0, 5);

    std::function<EventExpr(int)> random_event = [&](int depth) -> EventExpr {
        std::uniform_int_distribution<int> pick(0, depth > 0 ? 5 : 1);
        switch (pick(rng)) {
            case 0:
            case 1:
                return EventExpr::atom(coin(rng) == 0 ? Slot::eldest : Slot::youngest,
                                       static_cast<AtomPredicate>(pred_pick(rng)));
            case 2: return random_event(depth - 1) & random_event(depth - 1);
            case 3: return random_event(depth - 1) | random_event(depth - 1);
            case 4: return !random_event(depth - 1);
            default: return EventExpr::constant(coin(rng) == 0);
        }
    };

    std::uniform_int_distribution<int> numerator(0, 99);
    int round_trips = 0;
    for (int i = 0; i < 2000; ++i) {
        Query q;
        int which = regime_pick(rng);
        q.regime = which == 0 ? regime_i0() : (which == 1 ? regime_i1() : regime_i2());
        if (coin(rng)) q.r_value = Rational(numerator(rng), 100);
        switch (kind_pick(rng)) {
            case 0: q.kind = QueryKind::probability; q.a = random_event(3); break;
            case 1:
                q.kind = QueryKind::conditional;
                q.a = random_event(3);
                q.b = random_event(3);
                break;
            case 2:
                q.kind = QueryKind::odds;
                q.a = random_event(2);
                q.b = random_event(2);
                q.c = random_event(2);
                break;
            default:
                q.kind = QueryKind::bayes_factor;
                q.a = random_event(2);
                q.b = random_event(2);
                q.c = random_event(2);
                break;
        }
        std::string text = format_query(q);
        Query reparsed = parse_query(text);
        if (!(reparsed == q) || format_query(reparsed) != text) {
            o.check(false, "round trip failed for: " + text);
        } else {
            ++round_trips;
        }
    }
    o.check(round_trips == 2000, "round-trip case count");

    const std::string alphabet = "EY.mfN!&+|():;=@ABletrP bft0123456789/#^";
    std::uniform_int_distribution<size_t> len(0, 48);
    std::uniform_int_distribution<size_t> pick_char(0, alphabet.size() - 1);
    const std::vector<std::string> seeds = {
        "@regime(i2) P(E.f & Y.f | E.fN + Y.fN)",
        "@regime(i1) @r(1/50) odds(E.f & Y.f : E.m | E.fN)",
        "let A = E.f & Y.f; P(A | E.fN)",
        "factorize(E.f, E.N, Y.f, Y.!N)",
    };
    std::uniform_int_distribution<size_t> seed_pick(0, seeds.size() - 1);
    int fuzzed = 0, rejected = 0, accepted = 0;
    for (int i = 0; i < 12000; ++i) {
        std::string input;
        if (i % 2 == 0) {
            size_t n = len(rng);
            for (size_t k = 0; k < n; ++k) input += alphabet[pick_char(rng)];
        } else {
            input = seeds[seed_pick(rng)];
            for (int e = 0; e < 3 && !input.empty(); ++e) {
                std::uniform_int_distribution<size_t> at(0, input.size() - 1);
                switch (e) {
                    case 0: input[at(rng)] = alphabet[pick_char(rng)]; break;
                    case 1: input.insert(at(rng), 1, alphabet[pick_char(rng)]); break;
                    default: input.erase(at(rng), 1); break;
                }
            }
        }
        try {
            parse_query(input);
            ++accepted;
        } catch (const QueryParseError& e) {
            ++rejected;
            if (e.span().start > e.span().end || e.span().end > input.size() + 1) {
                o.check(false, "rejection span out of range for: " + input);
            }
        } catch (...) {
            o.check(false, "non-parse-error exception for: " + input);
        }
        ++fuzzed;
    }
    o.check(fuzzed == 12000, "fuzz case count");
    o.note("fuzz inputs: " + std::to_string(fuzzed) + " (" + std::to_string(rejected) +
           " rejected with spans, " + std::to_string(accepted) + " parsed)");
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    struct Criterion {
        int id;
        const char* name;
        Outcome (*fn)();
    };
    const Criterion criteria[] = {
        {1, "textbook answers via eval", criterion1},
        {2, "prevalence sweep digits", criterion2},
        {3, "closed forms vs brute-force oracle", criterion3},
        {4, "classic 1/50 tables and misprint flag", criterion4},
        {5, "Bayesian decompositions", criterion5},
        {6, "appendix chains, names, pitfall, symmetry", criterion6},
        {7, "property suites", criterion7},
        {8, "Monte Carlo at one million families", criterion8},
        {9, "parser round-trip and fuzz", criterion9},
    };
    int selected = 0;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) {
            selected = std::atoi(argv[++i]);
        } else {
            std::cerr << "usage: acceptance [--criterion N]\n";
            return 2;
        }
    }
    bool all_pass = true;
    for (const Criterion& criterion : criteria) {
        if (selected != 0 && criterion.id != selected) continue;
        Outcome outcome = criterion.fn();
        std::cout << (outcome.pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion.id
                  << ": " << criterion.name << "\n";
        for (const std::string& line : outcome.details) {
            std::cout << "       " << line << "\n";
        }
        all_pass = all_pass && outcome.pass;
    }
    return all_pass ? 0 : 1;
}
