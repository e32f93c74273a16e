#include "twochild/event.hpp"

#include <stdexcept>

namespace twochild {

struct EventExpr::Node {
    Tag tag;
    Slot slot = Slot::eldest;
    AtomPredicate pred = AtomPredicate::is_male;
    bool value = false;
    std::string label;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

EventExpr::EventExpr() {
    auto n = std::make_shared<Node>();
    n->tag = Tag::constant;
    n->value = true;
    node_ = std::move(n);
}

EventExpr EventExpr::atom(Slot slot, AtomPredicate pred) {
    auto n = std::make_shared<Node>();
    n->tag = Tag::atom;
    n->slot = slot;
    n->pred = pred;
    return EventExpr(std::move(n));
}

EventExpr EventExpr::constant(bool value) {
    auto n = std::make_shared<Node>();
    n->tag = Tag::constant;
    n->value = value;
    return EventExpr(std::move(n));
}

EventExpr EventExpr::ref(std::string label) {
    auto n = std::make_shared<Node>();
    n->tag = Tag::ref;
    n->label = std::move(label);
    return EventExpr(std::move(n));
}

EventExpr operator&(const EventExpr& a, const EventExpr& b) {
    auto n = std::make_shared<EventExpr::Node>();
    n->tag = EventExpr::Tag::conj;
    n->lhs = a.node_;
    n->rhs = b.node_;
    return EventExpr(std::move(n));
}

EventExpr operator|(const EventExpr& a, const EventExpr& b) {
    auto n = std::make_shared<EventExpr::Node>();
    n->tag = EventExpr::Tag::disj;
    n->lhs = a.node_;
    n->rhs = b.node_;
    return EventExpr(std::move(n));
}

EventExpr EventExpr::operator!() const {
    auto n = std::make_shared<Node>();
    n->tag = Tag::neg;
    n->lhs = node_;
    return EventExpr(std::move(n));
}

namespace {

bool atom_matches(AtomPredicate pred, const Child& c) {
    switch (pred) {
        case AtomPredicate::is_male: return c.gender == Gender::male;
        case AtomPredicate::is_female: return c.gender == Gender::female;
        case AtomPredicate::is_female_the_name:
            return c.gender == Gender::female && c.name_class == NameClass::the_name;
        case AtomPredicate::is_female_other_name:
            return c.gender == Gender::female && c.name_class == NameClass::other_name;
        case AtomPredicate::has_the_name: return c.name_class == NameClass::the_name;
        case AtomPredicate::has_other_name: return c.name_class == NameClass::other_name;
    }
    return false;
}

}  // namespace

bool EventExpr::matches(const FamilyOutcome& outcome, const EventEnv* env) const {
    const Node& n = *node_;
    switch (n.tag) {
        case Tag::atom: return atom_matches(n.pred, outcome.child(n.slot));
        case Tag::conj:
            return EventExpr(n.lhs).matches(outcome, env) && EventExpr(n.rhs).matches(outcome, env);
        case Tag::disj:
            return EventExpr(n.lhs).matches(outcome, env) || EventExpr(n.rhs).matches(outcome, env);
        case Tag::neg: return !EventExpr(n.lhs).matches(outcome, env);
        case Tag::constant: return n.value;
        case Tag::ref: {
            if (env != nullptr) {
                for (const NamedEvent& binding : *env) {
                    if (binding.label == n.label) {
                        return binding.expr.matches(outcome, env);
                    }
                }
            }
            throw std::domain_error("unresolved event label '" + n.label + "'");
        }
    }
    return false;
}

bool EventExpr::is_atom() const { return node_->tag == Tag::atom; }

bool EventExpr::operator==(const EventExpr& other) const {
    // Structural comparison.
    struct Cmp {
        static bool eq(const Node& a, const Node& b) {
            if (a.tag != b.tag) return false;
            switch (a.tag) {
                case Tag::atom: return a.slot == b.slot && a.pred == b.pred;
                case Tag::constant: return a.value == b.value;
                case Tag::ref: return a.label == b.label;
                case Tag::neg: return eq(*a.lhs, *b.lhs);
                case Tag::conj:
                case Tag::disj: return eq(*a.lhs, *b.lhs) && eq(*a.rhs, *b.rhs);
            }
            return false;
        }
    };
    return Cmp::eq(*node_, *other.node_);
}

EventExpr::Tag EventExpr::tag() const { return node_->tag; }
Slot EventExpr::slot() const { return node_->slot; }
AtomPredicate EventExpr::predicate() const { return node_->pred; }
bool EventExpr::constant_value() const { return node_->value; }
const std::string& EventExpr::label() const { return node_->label; }

EventExpr EventExpr::lhs() const { return EventExpr(node_->lhs); }
EventExpr EventExpr::rhs() const { return EventExpr(node_->rhs); }

std::string predicate_key(AtomPredicate pred) {
    switch (pred) {
        case AtomPredicate::is_male: return "m";
        case AtomPredicate::is_female: return "f";
        case AtomPredicate::is_female_the_name: return "fN";
        case AtomPredicate::is_female_other_name: return "f!N";
        case AtomPredicate::has_the_name: return "N";
        case AtomPredicate::has_other_name: return "!N";
    }
    return "?";
}

namespace {

// Precedence for printing: + (lowest), &, ! (highest).
int precedence(EventExpr::Tag tag) {
    switch (tag) {
        case EventExpr::Tag::disj: return 1;
        case EventExpr::Tag::conj: return 2;
        case EventExpr::Tag::neg: return 3;
        default: return 4;
    }
}

void print_node(const EventExpr& e, int parent_prec, std::string& out) {
    int prec = precedence(e.tag());
    bool parens = prec < parent_prec;
    if (parens) out += "(";
    switch (e.tag()) {
        case EventExpr::Tag::atom:
            out += (e.slot() == Slot::eldest ? "E." : "Y.") + predicate_key(e.predicate());
            break;
        case EventExpr::Tag::constant:
            out += e.constant_value() ? "true" : "false";
            break;
        case EventExpr::Tag::ref:
            out += e.label();
            break;
        case EventExpr::Tag::neg:
            out += "!";
            print_node(e.lhs(), prec + 1, out);
            break;
        case EventExpr::Tag::conj:
            print_node(e.lhs(), prec, out);
            out += " & ";
            print_node(e.rhs(), prec + 1, out);
            break;
        case EventExpr::Tag::disj:
            print_node(e.lhs(), prec, out);
            out += " + ";
            print_node(e.rhs(), prec + 1, out);
            break;
    }
    if (parens) out += ")";
}

}  // namespace

std::string EventExpr::str() const {
    std::string out;
    print_node(*this, 0, out);
    return out;
}

}  // namespace twochild
