#pragma once

#include "twochild/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace twochild {

enum class Gender { male, female };

/// Name attribute of a child. Children of the regime's named gender carry
/// the_name or other_name; everyone else (and every child under the
/// gender-only regime) carries not_applicable.
enum class NameClass { the_name, other_name, not_applicable };

enum class Slot { eldest, youngest };

struct Child {
    Gender gender = Gender::male;
    NameClass name_class = NameClass::not_applicable;

    auto operator<=>(const Child&) const = default;

    static Child male() { return {Gender::male, NameClass::not_applicable}; }
    static Child female() { return {Gender::female, NameClass::not_applicable}; }
    static Child named(Gender g, NameClass nc) { return {g, nc}; }

    /// Short descriptor: "m", "f", "fN", "f!N" (and "mN", "m!N" when the
    /// named gender is male).
    std::string key() const;
};

struct FamilyOutcome {
    Child eldest;
    Child youngest;

    auto operator<=>(const FamilyOutcome&) const = default;

    const Child& child(Slot s) const { return s == Slot::eldest ? eldest : youngest; }

    FamilyOutcome swapped() const { return {youngest, eldest}; }

    std::string key() const { return eldest.key() + "," + youngest.key(); }
};

/// Background information states:
///   gender_only   - names ignored, four equiprobable gender sequences
///   shared_names  - both children may carry the same name
///   unique_names  - names are unique within a family
enum class RegimeKind { gender_only, shared_names, unique_names };

/// Caption flavor: the same tables read as "name" or as "identification".
enum class AliasLabel { name, identification };

struct Regime {
    RegimeKind kind = RegimeKind::unique_names;
    AliasLabel alias = AliasLabel::name;
    Gender named_gender = Gender::female;

    bool splits_names() const { return kind != RegimeKind::gender_only; }

    /// Prevalence values admissible for numeric evaluation:
    /// shared_names needs r in [0, 1]; unique_names needs r in [0, 1/2).
    bool admits(const Rational& r) const;

    /// "i0", "i1" or "i2".
    std::string label() const;

    std::string describe() const;

    /// The per-slot child states, in table order (m first, then the named
    /// gender's name split or the bare other gender).
    std::vector<Child> child_states() const;

    bool operator==(const Regime&) const = default;
};

Regime regime_i0();
Regime regime_i1();
Regime regime_i2();

}  // namespace twochild
