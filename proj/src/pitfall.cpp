#include "twochild/pitfall.hpp"

#include <stdexcept>

namespace twochild {

namespace {

const RationalFunction kZeroRF{};

RationalFunction sum_over(const std::map<FamilyOutcome, RationalFunction>& cells,
                          const EventExpr& e, const EventEnv* env) {
    RationalFunction total;
    for (const auto& [outcome, p] : cells) {
        if (e.matches(outcome, env)) total += p;
    }
    return total;
}

}  // namespace

const RationalFunction& PitfallTable::cell(const FamilyOutcome& o) const {
    auto it = cells_.find(o);
    return it == cells_.end() ? kZeroRF : it->second;
}

std::map<Child, RationalFunction> PitfallTable::marginals(Slot slot) const {
    std::map<Child, RationalFunction> out;
    for (const auto& [outcome, p] : cells_) {
        out[outcome.child(slot)] += p;
    }
    return out;
}

RationalFunction PitfallTable::total() const {
    RationalFunction sum;
    for (const auto& [outcome, p] : cells_) sum += p;
    return sum;
}

PitfallTable build_pitfall_table(Gender named_gender) {
    const RationalFunction r = RationalFunction::variable();
    const RationalFunction half{Rational(1, 2)};
    const RationalFunction one{Rational(1)};

    Regime regime;
    regime.kind = RegimeKind::unique_names;
    regime.named_gender = named_gender;

    Gender unsplit = named_gender == Gender::female ? Gender::male : Gender::female;
    const Child plain{unsplit, NameClass::not_applicable};
    const Child named_n = Child::named(named_gender, NameClass::the_name);
    const Child named_other = Child::named(named_gender, NameClass::other_name);

    PitfallTable t;
    t.regime_ = regime;
    auto& cells = t.cells_;
    // Rows for the unsplit gender and for the named child are the correct
    // chain products.
    cells[{plain, plain}] = half * half;
    cells[{plain, named_n}] = half * half * r;
    cells[{plain, named_other}] = half * half * (one - r);
    cells[{named_n, plain}] = half * r * half;
    cells[{named_other, plain}] = half * (one - r) * half;
    cells[{named_n, named_other}] = half * r * half * one;
    // The wrong step: the eldest being a differently-named girl is assumed
    // not to change the youngest girl's name probabilities, so the last
    // factors are taken to be r and (1 - r) instead of r/(1-r) and
    // (1-2r)/(1-r).
    cells[{named_other, named_n}] = half * (one - r) * half * r;
    cells[{named_other, named_other}] = half * (one - r) * half * (one - r);
    return t;
}

RationalFunction probability(const PitfallTable& t, const EventExpr& e, const EventEnv* env) {
    return sum_over(t.cells(), e, env);
}

RationalFunction conditional(const PitfallTable& t, const EventExpr& a, const EventExpr& b,
                             const EventEnv* env) {
    RationalFunction pb = probability(t, b, env);
    if (pb.is_zero()) {
        throw std::domain_error("conditioning on the impossible event " + b.str());
    }
    return probability(t, a & b, env) / pb;
}

namespace {

// Differences between rational functions have no natural total order;
// reports fix a probe point to rank and sign-normalize defects.
const Rational kProbe{1, 4};

RationalFunction sign_normalized(const RationalFunction& diff) {
    return diff.eval(kProbe) < Rational(0) ? -diff : diff;
}

SymmetryReport check_cells(const std::map<FamilyOutcome, RationalFunction>& cells,
                           auto cell_of) {
    SymmetryReport rep;
    for (const auto& [outcome, p] : cells) {
        FamilyOutcome twin = outcome.swapped();
        // Visit each unordered pair once (from the lesser orientation, or
        // from this one if the mirror cell is absent from the map).
        if (twin < outcome && cells.count(twin) > 0) continue;
        const RationalFunction& mirrored = cell_of(twin);
        if (p == mirrored) continue;
        rep.symmetric = false;
        SymmetryDefect defect;
        defect.outcome = outcome;
        defect.value_ab = p;
        defect.value_ba = mirrored;
        defect.difference = sign_normalized(p - mirrored);
        rep.asymmetric_pairs.push_back(std::move(defect));
    }

    std::map<Child, RationalFunction> eldest, youngest;
    RationalFunction total;
    for (const auto& [outcome, p] : cells) {
        eldest[outcome.eldest] += p;
        youngest[outcome.youngest] += p;
        total += p;
    }
    for (const auto& [child, e_total] : eldest) {
        RationalFunction y_total = youngest.count(child) ? youngest.at(child) : RationalFunction{};
        if (e_total == y_total) continue;
        rep.marginals_preserved = false;
        MarginalDefect defect;
        defect.child = child;
        defect.eldest_total = e_total;
        defect.youngest_total = y_total;
        defect.difference = sign_normalized(e_total - y_total);
        rep.marginal_defects.push_back(std::move(defect));
    }
    rep.total = total;
    rep.normalized = total == RationalFunction(1);

    rep.max_defect = RationalFunction{};
    for (const auto& defect : rep.asymmetric_pairs) {
        if (defect.difference.eval(kProbe) > rep.max_defect.eval(kProbe)) {
            rep.max_defect = defect.difference;
        }
    }
    return rep;
}

}  // namespace

SymmetryReport check_symmetry(const JointDistribution& d) {
    return check_cells(d.cells(), [&](const FamilyOutcome& o) -> const RationalFunction& {
        return d.cell(o);
    });
}

SymmetryReport check_symmetry(const PitfallTable& t) {
    return check_cells(t.cells(), [&](const FamilyOutcome& o) -> const RationalFunction& {
        return t.cell(o);
    });
}

}  // namespace twochild
