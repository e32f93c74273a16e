#include "twochild/query.hpp"

#include "twochild/distribution.hpp"

#include <cctype>

namespace twochild {

bool Query::operator==(const Query& other) const {
    if (kind != other.kind || regime != other.regime || r_value != other.r_value) return false;
    if (!(a == other.a) || !(b == other.b) || !(c == other.c)) return false;
    if (atoms.size() != other.atoms.size()) return false;
    for (size_t i = 0; i < atoms.size(); ++i) {
        if (!(atoms[i] == other.atoms[i])) return false;
    }
    if (bindings.size() != other.bindings.size()) return false;
    for (size_t i = 0; i < bindings.size(); ++i) {
        if (bindings[i].label != other.bindings[i].label) return false;
        if (!(bindings[i].expr == other.bindings[i].expr)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class TokKind {
    ident,      // names, keywords
    atom,       // E.m, Y.f!N, ...
    directive,  // @regime(...) or @r(...): name + payload
    lparen,
    rparen,
    bar,
    colon,
    semicolon,
    equals,
    amp,
    plus,
    bang,
    comma,
    end,
};

struct Token {
    TokKind kind = TokKind::end;
    std::string text;     // ident name / directive name
    std::string payload;  // directive argument
    SourceSpan span;
    Slot slot = Slot::eldest;
    AtomPredicate pred = AtomPredicate::is_male;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
public:
    explicit Lexer(std::string_view input) : input_(input) {}

    std::vector<Token> run() {
        std::vector<Token> tokens;
        while (true) {
            Token t = next();
            bool done = t.kind == TokKind::end;
            tokens.push_back(std::move(t));
            if (done) break;
        }
        return tokens;
    }

private:
    std::string_view input_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& message, size_t start, size_t end) {
        throw QueryParseError(message, SourceSpan{start, end});
    }

    void skip_ws() {
        while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_]))) {
            ++pos_;
        }
    }

    Token simple(TokKind kind) {
        Token t;
        t.kind = kind;
        t.span = {pos_, pos_ + 1};
        ++pos_;
        return t;
    }

    Token next() {
        skip_ws();
        if (pos_ >= input_.size()) {
            return Token{TokKind::end, "", "", {input_.size(), input_.size()}};
        }
        char c = input_[pos_];
        switch (c) {
            case '(': return simple(TokKind::lparen);
            case ')': return simple(TokKind::rparen);
            case '|': return simple(TokKind::bar);
            case ':': return simple(TokKind::colon);
            case ';': return simple(TokKind::semicolon);
            case '=': return simple(TokKind::equals);
            case '&': return simple(TokKind::amp);
            case '+': return simple(TokKind::plus);
            case '!': return simple(TokKind::bang);
            case ',': return simple(TokKind::comma);
            case '@': return directive();
        }
        if (ident_start(c)) return ident_or_atom();
        fail(std::string("unexpected character '") + c + "'", pos_, pos_ + 1);
    }

    Token directive() {
        size_t start = pos_;
        ++pos_;  // '@'
        size_t name_start = pos_;
        while (pos_ < input_.size() && ident_char(input_[pos_])) ++pos_;
        std::string name{input_.substr(name_start, pos_ - name_start)};
        if (name.empty()) fail("expected a directive name after '@'", start, pos_ + 1);
        if (name != "regime" && name != "r") {
            fail("unknown directive '@" + name + "'", start, pos_);
        }
        skip_ws();
        if (pos_ >= input_.size() || input_[pos_] != '(') {
            fail("expected '(' after '@" + name + "'", start, pos_ + 1);
        }
        ++pos_;
        size_t payload_start = pos_;
        while (pos_ < input_.size() && input_[pos_] != ')') ++pos_;
        if (pos_ >= input_.size()) fail("unterminated directive", start, input_.size());
        Token t;
        t.kind = TokKind::directive;
        t.text = name;
        t.payload = std::string{input_.substr(payload_start, pos_ - payload_start)};
        ++pos_;  // ')'
        t.span = {start, pos_};
        return t;
    }

    Token ident_or_atom() {
        size_t start = pos_;
        // Slot-qualified atom: E.<name> or Y.<name>
        if ((input_[pos_] == 'E' || input_[pos_] == 'Y') && pos_ + 1 < input_.size() &&
            input_[pos_ + 1] == '.') {
            Slot slot = input_[pos_] == 'E' ? Slot::eldest : Slot::youngest;
            pos_ += 2;
            size_t name_start = pos_;
            while (pos_ < input_.size() &&
                   (input_[pos_] == 'm' || input_[pos_] == 'f' || input_[pos_] == 'N' ||
                    input_[pos_] == '!')) {
                ++pos_;
            }
            std::string name{input_.substr(name_start, pos_ - name_start)};
            Token t;
            t.kind = TokKind::atom;
            t.slot = slot;
            t.span = {start, pos_};
            if (name == "m") t.pred = AtomPredicate::is_male;
            else if (name == "f") t.pred = AtomPredicate::is_female;
            else if (name == "fN") t.pred = AtomPredicate::is_female_the_name;
            else if (name == "f!N") t.pred = AtomPredicate::is_female_other_name;
            else if (name == "N") t.pred = AtomPredicate::has_the_name;
            else if (name == "!N") t.pred = AtomPredicate::has_other_name;
            else fail("unknown atom '" + std::string{input_.substr(start, pos_ - start)} + "'",
                      start, pos_);
            return t;
        }
        while (pos_ < input_.size() && ident_char(input_[pos_])) ++pos_;
        Token t;
        t.kind = TokKind::ident;
        t.text = std::string{input_.substr(start, pos_ - start)};
        t.span = {start, pos_};
        return t;
    }
};

// ---------------------------------------------------------------------------
// Parser

const char* const kReserved[] = {"P", "odds", "bf", "let", "table", "factorize", "true", "false"};

bool is_reserved(const std::string& name) {
    for (const char* r : kReserved) {
        if (name == r) return true;
    }
    return false;
}

class Parser {
public:
    explicit Parser(std::string_view input) : tokens_(Lexer(input).run()) {}

    Query run() {
        Query q;
        directives(q);
        bindings(q);
        form(q);
        if (!at(TokKind::end)) {
            fail("unexpected input after the query");
        }
        return q;
    }

private:
    std::vector<Token> tokens_;
    size_t idx_ = 0;

    const Token& cur() const { return tokens_[idx_]; }
    bool at(TokKind k) const { return cur().kind == k; }

    [[noreturn]] void fail(const std::string& message) const {
        throw QueryParseError(message, cur().span);
    }

    const Token& expect(TokKind k, const std::string& what) {
        if (!at(k)) fail("expected " + what);
        return tokens_[idx_++];
    }

    bool accept(TokKind k) {
        if (at(k)) {
            ++idx_;
            return true;
        }
        return false;
    }

    void directives(Query& q) {
        bool saw_regime = false, saw_r = false;
        while (at(TokKind::directive)) {
            const Token& t = tokens_[idx_++];
            if (t.text == "regime") {
                if (saw_regime) throw QueryParseError("duplicate @regime", t.span);
                saw_regime = true;
                if (t.payload == "i0") q.regime = regime_i0();
                else if (t.payload == "i1") q.regime = regime_i1();
                else if (t.payload == "i2") q.regime = regime_i2();
                else throw QueryParseError("unknown regime '" + t.payload + "' (expected i0, i1 or i2)",
                                           t.span);
            } else {
                if (saw_r) throw QueryParseError("duplicate @r", t.span);
                saw_r = true;
                auto r = Rational::parse(t.payload);
                if (!r) throw QueryParseError("cannot parse prevalence '" + t.payload + "'", t.span);
                q.r_value = *r;
            }
        }
    }

    void bindings(Query& q) {
        while (at(TokKind::ident) && cur().text == "let") {
            ++idx_;
            const Token& name = expect(TokKind::ident, "a binding name");
            if (is_reserved(name.text)) {
                throw QueryParseError("'" + name.text + "' is reserved", name.span);
            }
            for (const NamedEvent& existing : q.bindings) {
                if (existing.label == name.text) {
                    throw QueryParseError("duplicate label '" + name.text + "'", name.span);
                }
            }
            expect(TokKind::equals, "'='");
            EventExpr e = expr(q);
            expect(TokKind::semicolon, "';'");
            q.bindings.push_back(NamedEvent{name.text, e});
        }
    }

    void form(Query& q) {
        if (!at(TokKind::ident)) fail("expected a query form (P, odds, bf, table or factorize)");
        const Token& head = tokens_[idx_++];
        if (head.text == "P") {
            expect(TokKind::lparen, "'('");
            q.a = expr(q);
            if (accept(TokKind::bar)) {
                q.kind = QueryKind::conditional;
                q.b = expr(q);
                if (at(TokKind::bar)) fail("duplicate '|' (only one condition bar is allowed)");
            } else {
                q.kind = QueryKind::probability;
            }
            expect(TokKind::rparen, "')'");
        } else if (head.text == "odds" || head.text == "bf") {
            q.kind = head.text == "odds" ? QueryKind::odds : QueryKind::bayes_factor;
            expect(TokKind::lparen, "'('");
            q.a = expr(q);
            expect(TokKind::colon, "':' between the two hypotheses");
            q.c = expr(q);
            expect(TokKind::bar, "'|' before the evidence");
            q.b = expr(q);
            if (at(TokKind::bar)) fail("duplicate '|' (only one condition bar is allowed)");
            expect(TokKind::rparen, "')'");
        } else if (head.text == "table") {
            q.kind = QueryKind::table;
        } else if (head.text == "factorize") {
            q.kind = QueryKind::factorize;
            expect(TokKind::lparen, "'('");
            do {
                const Token& t = expect(TokKind::atom, "an atom like E.f or Y.N");
                q.atoms.push_back(EventExpr::atom(t.slot, t.pred));
            } while (accept(TokKind::comma));
            expect(TokKind::rparen, "')'");
        } else {
            throw QueryParseError("unknown query form '" + head.text + "'", head.span);
        }
    }

    EventExpr expr(const Query& q) { return or_expr(q); }

    EventExpr or_expr(const Query& q) {
        EventExpr acc = and_expr(q);
        while (accept(TokKind::plus)) acc = acc | and_expr(q);
        return acc;
    }

    EventExpr and_expr(const Query& q) {
        EventExpr acc = not_expr(q);
        while (accept(TokKind::amp)) acc = acc & not_expr(q);
        return acc;
    }

    EventExpr not_expr(const Query& q) {
        if (accept(TokKind::bang)) return !not_expr(q);
        return primary(q);
    }

    EventExpr primary(const Query& q) {
        if (at(TokKind::atom)) {
            const Token& t = tokens_[idx_++];
            return EventExpr::atom(t.slot, t.pred);
        }
        if (accept(TokKind::lparen)) {
            EventExpr inner = expr(q);
            expect(TokKind::rparen, "')'");
            return inner;
        }
        if (at(TokKind::ident)) {
            const Token& t = tokens_[idx_++];
            if (t.text == "true") return EventExpr::constant(true);
            if (t.text == "false") return EventExpr::constant(false);
            if (is_reserved(t.text)) {
                throw QueryParseError("'" + t.text + "' cannot appear inside an event expression",
                                      t.span);
            }
            for (const NamedEvent& binding : q.bindings) {
                if (binding.label == t.text) return EventExpr::ref(t.text);
            }
            throw QueryParseError("unresolved label '" + t.text + "'", t.span);
        }
        fail("expected an atom, a label or '('");
    }
};

}  // namespace

Query parse_query(std::string_view input) { return Parser(input).run(); }

// ---------------------------------------------------------------------------
// Formatting

std::string format_query(const Query& q) {
    std::string out = "@regime(" + q.regime.label() + ")";
    if (q.r_value) out += " @r(" + q.r_value->str() + ")";
    for (const NamedEvent& binding : q.bindings) {
        out += " let " + binding.label + " = " + binding.expr.str() + ";";
    }
    out += " ";
    switch (q.kind) {
        case QueryKind::probability:
            out += "P(" + q.a.str() + ")";
            break;
        case QueryKind::conditional:
            out += "P(" + q.a.str() + " | " + q.b.str() + ")";
            break;
        case QueryKind::odds:
            out += "odds(" + q.a.str() + " : " + q.c.str() + " | " + q.b.str() + ")";
            break;
        case QueryKind::bayes_factor:
            out += "bf(" + q.a.str() + " : " + q.c.str() + " | " + q.b.str() + ")";
            break;
        case QueryKind::table:
            out += "table";
            break;
        case QueryKind::factorize: {
            out += "factorize(";
            for (size_t i = 0; i < q.atoms.size(); ++i) {
                if (i > 0) out += ", ";
                out += q.atoms[i].str();
            }
            out += ")";
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Evaluation

EvalResult evaluate(const Query& q, int digits) {
    if (q.r_value && !q.regime.admits(*q.r_value)) {
        throw std::domain_error("prevalence r = " + q.r_value->str() +
                                " outside the admissible interval for regime " + q.regime.label());
    }
    JointDistribution d = build_distribution(q.regime);
    const EventEnv* env = q.bindings.empty() ? nullptr : &q.bindings;

    EvalResult result;
    result.query = q;
    switch (q.kind) {
        case QueryKind::probability:
            result.exact = probability(d, q.a, env);
            break;
        case QueryKind::conditional:
            result.exact = conditional(d, q.a, q.b, env);
            break;
        case QueryKind::odds: {
            OddsReport report = odds_update(d, q.a, q.c, q.b, env);
            result.exact = report.updated_odds;
            result.odds = std::move(report);
            break;
        }
        case QueryKind::bayes_factor: {
            OddsReport report = odds_update(d, q.a, q.c, q.b, env);
            result.exact = report.bayes_factor;
            result.odds = std::move(report);
            break;
        }
        case QueryKind::table: {
            TableOptions opts;
            opts.r = q.r_value;
            result.table = render_table(d, opts);
            break;
        }
        case QueryKind::factorize:
            result.steps = chain_factorize(d, q.atoms, env);
            break;
    }
    if (result.exact && q.r_value) {
        result.value = result.exact->eval(*q.r_value);
        result.decimal = result.value->decimal(digits);
    }
    return result;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

nlohmann::json value_json(const RationalFunction& f, const std::optional<Rational>& r,
                          int digits) {
    nlohmann::json j;
    j["exact"] = f.str();
    if (r) {
        Rational v = f.eval(*r);
        j["value"] = v.str();
        j["decimal"] = v.decimal(digits);
    }
    return j;
}

}  // namespace

nlohmann::json to_json(const OddsReport& report, const std::optional<Rational>& r, int digits) {
    nlohmann::json j;
    j["initial_odds"] = value_json(report.initial_odds, r, digits);
    j["bayes_factor"] = value_json(report.bayes_factor, r, digits);
    j["updated_odds"] = value_json(report.updated_odds, r, digits);
    return j;
}

nlohmann::json to_json(const std::vector<FactorizationStep>& steps,
                       const std::optional<Rational>& r, int digits) {
    nlohmann::json arr = nlohmann::json::array();
    for (const FactorizationStep& step : steps) {
        nlohmann::json j;
        j["atom"] = step.conditioned_atom.str();
        nlohmann::json given = nlohmann::json::array();
        for (const EventExpr& g : step.given) given.push_back(g.str());
        j["given"] = given;
        j["value"] = value_json(step.value, r, digits);
        arr.push_back(std::move(j));
    }
    return arr;
}

nlohmann::json to_json(const EvalResult& result) {
    const int digits = 5;
    nlohmann::json j;
    j["query"] = format_query(result.query);
    j["regime"] = result.query.regime.label();
    if (result.query.r_value) j["r"] = result.query.r_value->str();
    if (result.exact) j["exact"] = result.exact->str();
    if (result.value) j["value"] = result.value->str();
    if (result.decimal) j["decimal"] = *result.decimal;
    if (result.odds) j["trace"] = to_json(*result.odds, result.query.r_value, digits);
    if (result.steps) j["trace"] = to_json(*result.steps, result.query.r_value, digits);
    if (result.table) j["table"] = result.table->to_json();
    return j;
}

}  // namespace twochild
