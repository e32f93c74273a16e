#pragma once

#include "twochild/event.hpp"
#include "twochild/family.hpp"
#include "twochild/inference.hpp"
#include "twochild/table_render.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace twochild {

/// Byte range into the query string; errors always carry one.
struct SourceSpan {
    size_t start = 0;
    size_t end = 0;
    bool operator==(const SourceSpan&) const = default;
};

class QueryParseError : public std::runtime_error {
public:
    QueryParseError(std::string message, SourceSpan span)
        : std::runtime_error(std::move(message)), span_(span) {}
    const SourceSpan& span() const { return span_; }

private:
    SourceSpan span_;
};

enum class QueryKind { probability, conditional, odds, bayes_factor, table, factorize };

/// Parsed query. `a` is the target event; `b` the condition; `c` the
/// alternative hypothesis for odds/bayes_factor. `atoms` is the ordered
/// conjunction for factorize.
struct Query {
    QueryKind kind = QueryKind::probability;
    EventExpr a;
    EventExpr b;
    EventExpr c;
    std::vector<EventExpr> atoms;
    Regime regime;  // defaults to unique names (i2)
    std::optional<Rational> r_value;
    std::vector<NamedEvent> bindings;

    bool operator==(const Query& other) const;
};

/// Grammar:
///   query     := directive* binding* form
///   directive := "@regime(i0|i1|i2)" | "@r(<rational>)"
///   binding   := "let" NAME "=" expr ";"
///   form      := "P(" expr (" | " expr)? ")"
///              | "odds(" expr ":" expr "|" expr ")"
///              | "bf(" expr ":" expr "|" expr ")"
///              | "table"
///              | "factorize(" atom ("," atom)* ")"
///   expr      := or; or := and ("+" and)*; and := not ("&" not)*;
///   not       := "!" not | atom | NAME | "true" | "false" | "(" expr ")"
///   atom      := ("E"|"Y") "." ("m"|"f"|"fN"|"f!N"|"N"|"!N")
/// Throws QueryParseError with a span on any malformed input.
Query parse_query(std::string_view input);

/// Canonical text; parse_query(format_query(q)) is structurally equal to q.
std::string format_query(const Query& q);

struct EvalResult {
    Query query;
    std::optional<RationalFunction> exact;   // scalar queries
    std::optional<Rational> value;           // exact value at r
    std::optional<std::string> decimal;
    std::optional<OddsReport> odds;
    std::optional<std::vector<FactorizationStep>> steps;
    std::optional<RenderedTable> table;
};

/// Dispatches to the inference layer. Throws std::domain_error on zero
/// conditions or an r outside the regime's admissible interval.
EvalResult evaluate(const Query& q, int digits = 5);

nlohmann::json to_json(const OddsReport& report, const std::optional<Rational>& r, int digits);
nlohmann::json to_json(const std::vector<FactorizationStep>& steps,
                       const std::optional<Rational>& r, int digits);
nlohmann::json to_json(const EvalResult& result);

}  // namespace twochild
