#pragma once

#include "twochild/family.hpp"

#include <memory>
#include <string>
#include <vector>

namespace twochild {

/// Per-child predicates. The bare name checks (has_the_name/has_other_name)
/// exist so chain-rule conjunctions can separate gender from name, e.g.
/// "eldest is female" and "eldest carries the name" as two atoms.
enum class AtomPredicate {
    is_male,
    is_female,
    is_female_the_name,    // female AND the name
    is_female_other_name,  // female AND some other name
    has_the_name,          // name class alone
    has_other_name,
};

struct NamedEvent;
using EventEnv = std::vector<NamedEvent>;

/// Immutable boolean expression over child-attribute atoms. Denotes a subset
/// of the family-outcome space; evaluable on every outcome.
class EventExpr {
public:
    /// Defaults to the constant true.
    EventExpr();

    static EventExpr atom(Slot slot, AtomPredicate pred);
    static EventExpr constant(bool value);
    /// Reference to a let-bound event; resolved against an EventEnv.
    static EventExpr ref(std::string label);

    friend EventExpr operator&(const EventExpr& a, const EventExpr& b);
    friend EventExpr operator|(const EventExpr& a, const EventExpr& b);
    EventExpr operator!() const;

    /// Membership of an outcome in the denoted set. Throws std::domain_error
    /// on a reference missing from env.
    bool matches(const FamilyOutcome& outcome, const EventEnv* env = nullptr) const;

    bool is_atom() const;

    /// Structural equality (used by parser round-trip checks).
    bool operator==(const EventExpr& other) const;

    /// Query-language syntax: "E.f & Y.f", "!(E.m + Y.m)", ...
    std::string str() const;

    enum class Tag { atom, conj, disj, neg, constant, ref };
    Tag tag() const;
    // Accessors valid for the corresponding tag.
    Slot slot() const;
    AtomPredicate predicate() const;
    bool constant_value() const;
    const std::string& label() const;
    EventExpr lhs() const;
    EventExpr rhs() const;

private:
    struct Node;
    std::shared_ptr<const Node> node_;
    explicit EventExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
};

struct NamedEvent {
    std::string label;
    EventExpr expr;
};

/// Atom spelling used by the query language: "m", "f", "fN", "f!N", "N", "!N".
std::string predicate_key(AtomPredicate pred);

}  // namespace twochild
