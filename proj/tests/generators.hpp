#pragma once

// Hand-rolled generators for property-style tests. Everything is seeded so
// failures reproduce.

#include "twochild/event.hpp"
#include "twochild/polynomial.hpp"
#include "twochild/rational.hpp"
#include "twochild/rational_function.hpp"

#include <random>
#include <vector>

namespace twochild::gen {

inline Rational rational(std::mt19937_64& rng, long long max_abs = 12) {
    std::uniform_int_distribution<long long> num(-max_abs, max_abs);
    std::uniform_int_distribution<long long> den(1, max_abs);
    return Rational(num(rng), den(rng));
}

inline Rational nonzero_rational(std::mt19937_64& rng, long long max_abs = 12) {
    Rational v = rational(rng, max_abs);
    while (v.is_zero()) v = rational(rng, max_abs);
    return v;
}

inline Polynomial polynomial(std::mt19937_64& rng, int max_degree = 6) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    int d = deg(rng);
    std::vector<Rational> coeffs;
    coeffs.reserve(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) coeffs.push_back(rational(rng));
    return Polynomial(std::move(coeffs));
}

inline Polynomial nonzero_polynomial(std::mt19937_64& rng, int max_degree = 6) {
    Polynomial p = polynomial(rng, max_degree);
    while (p.is_zero()) p = polynomial(rng, max_degree);
    return p;
}

inline RationalFunction rational_function(std::mt19937_64& rng, int max_degree = 4) {
    return RationalFunction(polynomial(rng, max_degree), nonzero_polynomial(rng, max_degree));
}

inline RationalFunction nonzero_rational_function(std::mt19937_64& rng, int max_degree = 4) {
    RationalFunction f = rational_function(rng, max_degree);
    while (f.is_zero()) f = rational_function(rng, max_degree);
    return f;
}

// Random event expression over the standard atoms; depth-bounded.
inline EventExpr event(std::mt19937_64& rng, int depth = 3) {
    std::uniform_int_distribution<int> pick(0, depth > 0 ? 5 : 1);
    std::uniform_int_distribution<int> slot_pick(0, 1);
    std::uniform_int_distribution<int> pred_pick(0, 5);
    switch (pick(rng)) {
        case 0:
        case 1: {
            Slot s = slot_pick(rng) == 0 ? Slot::eldest : Slot::youngest;
            auto p = static_cast<AtomPredicate>(pred_pick(rng));
            return EventExpr::atom(s, p);
        }
        case 2: return event(rng, depth - 1) & event(rng, depth - 1);
        case 3: return event(rng, depth - 1) | event(rng, depth - 1);
        case 4: return !event(rng, depth - 1);
        default: return EventExpr::constant(slot_pick(rng) == 0);
    }
}

}  // namespace twochild::gen
