#include "twochild/distribution.hpp"

#include <stdexcept>

namespace twochild {

namespace {

const RationalFunction kZeroRF{};

RationalFunction rf(long long num, long long den) {
    return RationalFunction(Rational(num, den));
}

// Per-child weights under name splitting: P(m) = 1/2, P(N) = r/2,
// P(!N) = (1-r)/2 (with the named gender carrying the split).
RationalFunction child_weight(const Child& c) {
    const RationalFunction r = RationalFunction::variable();
    const RationalFunction half = rf(1, 2);
    if (c.name_class == NameClass::not_applicable) return half;
    if (c.name_class == NameClass::the_name) return r * half;
    return (RationalFunction(1) - r) * half;
}

std::map<FamilyOutcome, RationalFunction> product_cells(const Regime& regime) {
    std::map<FamilyOutcome, RationalFunction> cells;
    for (const Child& e : regime.child_states()) {
        for (const Child& y : regime.child_states()) {
            cells[{e, y}] = child_weight(e) * child_weight(y);
        }
    }
    return cells;
}

// Unique-name table, route one: zero the duplicate-name cell of the
// shared-name table and repair the name-mixed cells so every marginal is
// preserved.
std::map<FamilyOutcome, RationalFunction> unique_by_repair(const Regime& regime) {
    auto cells = product_cells(regime);
    const Child named_n = Child::named(regime.named_gender, NameClass::the_name);
    const Child named_other = Child::named(regime.named_gender, NameClass::other_name);
    const RationalFunction shifted = cells.at({named_n, named_n});  // r^2/4
    cells.erase({named_n, named_n});
    cells.at({named_n, named_other}) += shifted;
    cells.at({named_other, named_n}) += shifted;
    cells.at({named_other, named_other}) -= shifted;
    return cells;
}

// Unique-name table, route two: direct chain-rule products. Cells touching
// the unsplit gender are plain products; the name-mixed female cells pick up
// a final conditional factor of 1 (the other child cannot reuse the name);
// the remaining cell comes from normalization.
std::map<FamilyOutcome, RationalFunction> unique_by_chain(const Regime& regime) {
    const RationalFunction r = RationalFunction::variable();
    const RationalFunction half = rf(1, 2);
    const Child named_n = Child::named(regime.named_gender, NameClass::the_name);
    const Child named_other = Child::named(regime.named_gender, NameClass::other_name);
    Gender unsplit = regime.named_gender == Gender::female ? Gender::male : Gender::female;
    const Child plain = Child{unsplit, NameClass::not_applicable};

    std::map<FamilyOutcome, RationalFunction> cells;
    cells[{plain, plain}] = half * half;
    cells[{plain, named_n}] = half * half * r;
    cells[{plain, named_other}] = half * half * (RationalFunction(1) - r);
    cells[{named_n, plain}] = half * r * half;
    cells[{named_other, plain}] = half * (RationalFunction(1) - r) * half;
    cells[{named_n, named_other}] = half * r * half * RationalFunction(1);
    cells[{named_other, named_n}] = half * r * half * RationalFunction(1);
    RationalFunction rest = RationalFunction(1);
    for (const auto& [outcome, p] : cells) rest -= p;
    cells[{named_other, named_other}] = rest;
    return cells;
}

}  // namespace

const RationalFunction& JointDistribution::cell(const FamilyOutcome& o) const {
    auto it = cells_.find(o);
    return it == cells_.end() ? kZeroRF : it->second;
}

std::map<Child, RationalFunction> JointDistribution::marginals(Slot slot) const {
    std::map<Child, RationalFunction> out;
    for (const auto& [outcome, p] : cells_) {
        out[outcome.child(slot)] += p;
    }
    return out;
}

RationalFunction JointDistribution::total() const {
    RationalFunction sum;
    for (const auto& [outcome, p] : cells_) sum += p;
    return sum;
}

JointDistribution build_distribution(const Regime& regime) {
    JointDistribution d;
    d.regime_ = regime;
    switch (regime.kind) {
        case RegimeKind::gender_only: {
            for (const Child& e : regime.child_states()) {
                for (const Child& y : regime.child_states()) {
                    d.cells_[{e, y}] = rf(1, 4);
                }
            }
            break;
        }
        case RegimeKind::shared_names: {
            d.cells_ = product_cells(regime);
            break;
        }
        case RegimeKind::unique_names: {
            d.cells_ = unique_by_repair(regime);
            auto chain = unique_by_chain(regime);
            if (d.cells_ != chain) {
                throw std::logic_error(
                    "unique-name table: marginal repair and chain-rule routes disagree");
            }
            break;
        }
    }
    // Construction self-checks: normalization and label symmetry.
    if (!(d.total() == RationalFunction(1))) {
        throw std::logic_error("joint distribution does not sum to 1");
    }
    for (const auto& [outcome, p] : d.cells_) {
        if (!(d.cell(outcome.swapped()) == p)) {
            throw std::logic_error("joint distribution is not label-symmetric");
        }
    }
    return d;
}

}  // namespace twochild
