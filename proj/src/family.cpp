#include "twochild/family.hpp"

namespace twochild {

std::string Child::key() const {
    std::string g = gender == Gender::male ? "m" : "f";
    switch (name_class) {
        case NameClass::not_applicable: return g;
        case NameClass::the_name: return g + "N";
        case NameClass::other_name: return g + "!N";
    }
    return g;
}

bool Regime::admits(const Rational& r) const {
    switch (kind) {
        case RegimeKind::gender_only: return true;  // r plays no role
        case RegimeKind::shared_names: return r >= Rational(0) && r <= Rational(1);
        case RegimeKind::unique_names: return r >= Rational(0) && r < Rational(1, 2);
    }
    return false;
}

std::string Regime::label() const {
    switch (kind) {
        case RegimeKind::gender_only: return "i0";
        case RegimeKind::shared_names: return "i1";
        case RegimeKind::unique_names: return "i2";
    }
    return "?";
}

std::string Regime::describe() const {
    switch (kind) {
        case RegimeKind::gender_only: return "i0 (gender only)";
        case RegimeKind::shared_names:
            return alias == AliasLabel::identification ? "i1 (shared identification allowed)"
                                                       : "i1 (shared names allowed)";
        case RegimeKind::unique_names:
            return alias == AliasLabel::identification ? "i2 (unique identification)"
                                                       : "i2 (unique names)";
    }
    return "?";
}

std::vector<Child> Regime::child_states() const {
    if (!splits_names()) {
        return {Child::male(), Child::female()};
    }
    Gender other = named_gender == Gender::female ? Gender::male : Gender::female;
    // Table order: the unsplit gender first, then N before !N.
    return {Child{other, NameClass::not_applicable},
            Child::named(named_gender, NameClass::the_name),
            Child::named(named_gender, NameClass::other_name)};
}

Regime regime_i0() { return Regime{RegimeKind::gender_only}; }
Regime regime_i1() { return Regime{RegimeKind::shared_names}; }
Regime regime_i2() { return Regime{RegimeKind::unique_names}; }

}  // namespace twochild
