#include "twochild/cli.hpp"

#include "twochild/distribution.hpp"
#include "twochild/inference.hpp"
#include "twochild/montecarlo.hpp"
#include "twochild/pitfall.hpp"
#include "twochild/query.hpp"
#include "twochild/table_render.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace twochild::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Settings {
    std::ostream& out;
    std::ostream& err;
    std::istream* in = nullptr;
    bool json_output = false;
    std::optional<int> digits;
    int exit_code = 0;

    int digits_or(int fallback) const { return digits.value_or(fallback); }
};

// A query of "-" is read from stdin.
std::string resolve_query_text(Settings& s, const std::string& text) {
    if (text != "-") return text;
    if (s.in == nullptr) {
        throw UsageError("no input stream available for a '-' query");
    }
    std::ostringstream collected;
    collected << s.in->rdbuf();
    return collected.str();
}

Rational parse_rational_flag(const std::string& text, const std::string& flag) {
    auto value = Rational::parse(text);
    if (!value) {
        throw UsageError("cannot parse " + flag + " value '" + text + "' (use p/q or a decimal)");
    }
    return *value;
}

// Decimal rendering of a prevalence for display, trailing zeros trimmed.
std::string short_decimal(const Rational& value, int digits) {
    std::string s = value.decimal(digits);
    if (s.find('.') == std::string::npos) return s;
    size_t last = s.find_last_not_of('0');
    if (s[last] == '.') last += 1;
    return s.substr(0, last + 1);
}

void emit_csv(Settings& s, const std::string& path, const std::string& content) {
    if (path == "-") {
        s.out << content;
        return;
    }
    std::ofstream file(path);
    if (!file) {
        throw std::domain_error("cannot open '" + path + "' for writing");
    }
    file << content;
    s.out << "wrote " << path << "\n";
}

// ---------------------------------------------------------------------------
// eval

void print_scalar_result(Settings& s, const EvalResult& result, int digits) {
    s.out << "query: " << format_query(result.query) << "\n";
    if (result.exact) {
        s.out << "exact: " << result.exact->str() << "\n";
    }
    if (result.value) {
        s.out << "at r = " << result.query.r_value->str() << ": " << result.value->str() << " = "
              << *result.decimal << "\n";
    }
    if (result.odds) {
        auto line = [&](const char* name, const RationalFunction& v) {
            s.out << "  " << name << ": " << v.str();
            if (result.query.r_value) {
                s.out << " = " << v.eval(*result.query.r_value).decimal(digits);
            }
            s.out << "\n";
        };
        line("initial odds", result.odds->initial_odds);
        line("bayes factor", result.odds->bayes_factor);
        line("updated odds", result.odds->updated_odds);
    }
    if (result.steps) {
        RationalFunction product{Rational(1)};
        for (const FactorizationStep& step : *result.steps) {
            s.out << "  P(" << step.conditioned_atom.str();
            if (!step.given.empty()) {
                s.out << " | ";
                for (size_t i = 0; i < step.given.size(); ++i) {
                    if (i > 0) s.out << " & ";
                    s.out << step.given[i].str();
                }
            }
            s.out << ") = " << step.value.str() << "\n";
            product *= step.value;
        }
        s.out << "  product = " << product.str() << "\n";
    }
    if (result.table) {
        s.out << result.table->text();
    }
}

void cmd_eval(Settings& s, const std::string& query_text) {
    Query q = parse_query(query_text);
    int digits = s.digits_or(5);
    EvalResult result = evaluate(q, digits);
    if (s.json_output) {
        s.out << to_json(result).dump(2) << "\n";
        return;
    }
    print_scalar_result(s, result, digits);
}

// ---------------------------------------------------------------------------
// table

// The classic numeric example: shared names at r = 1/50, four decimal
// places, and expected counts in 10000 families. The fN column total is
// misprinted as 0.1000 in the circulated rendition; the entries sum to
// 0.0100 and the count table's 100 agrees with the correct value.
struct PublishedReference {
    Rational r;
    int digits;
    const char* column_totals[3];
};

const PublishedReference kFootnoteReference{Rational(1, 50), 4, {"0.5000", "0.1000", "0.4900"}};

void add_reference_notes(RenderedTable& table) {
    if (table.regime.kind != RegimeKind::shared_names) return;
    if (table.cells.empty() || !table.cells[0][0].decimal) return;
    if (!table.col_totals[0].value) return;
    for (size_t j = 0; j < table.states.size() && j < 3; ++j) {
        std::string computed = table.col_totals[j].value->decimal(kFootnoteReference.digits);
        std::string printed = kFootnoteReference.column_totals[j];
        if (computed != printed) {
            table.notes.push_back("the " + table.states[j].key() + " column total is printed as " +
                                  printed +
                                  " in the classic rendition of this example, but the column "
                                  "entries sum to " +
                                  computed + " (misprint in the published example)");
        }
    }
}

struct TableSpec {
    Regime regime;
    bool pitfall = false;
    bool sweep = false;  // prevalence sweep of the shared-name conditional
};

TableSpec table_spec(int id) {
    TableSpec spec;
    switch (id) {
        case 1: spec.regime = regime_i0(); break;
        case 2: spec.regime = regime_i1(); break;
        case 3: spec.sweep = true; break;
        case 4: spec.regime = regime_i2(); break;
        case 5:
            spec.regime = regime_i2();
            spec.regime.alias = AliasLabel::identification;
            break;
        case 6:
            spec.regime = regime_i1();
            spec.regime.alias = AliasLabel::identification;
            break;
        case 7: spec.pitfall = true; break;
        default: throw UsageError("table id must be between 1 and 7");
    }
    return spec;
}

// The r column of the classic prevalence sweep.
const std::vector<Rational> kSweepPrevalences = {
    Rational(3, 10),  Rational(1, 5),    Rational(1, 10),   Rational(1, 50),
    Rational(1, 100), Rational(1, 1000), Rational(1, 10000)};

EventExpr both_female() {
    return EventExpr::atom(Slot::eldest, AtomPredicate::is_female) &
           EventExpr::atom(Slot::youngest, AtomPredicate::is_female);
}

EventExpr known_named_girl() {
    return EventExpr::atom(Slot::eldest, AtomPredicate::is_female_the_name) |
           EventExpr::atom(Slot::youngest, AtomPredicate::is_female_the_name);
}

void cmd_table(Settings& s, int id, const std::optional<Rational>& r,
               std::optional<std::uint64_t> scale, const std::string& csv_path) {
    TableSpec spec = table_spec(id);
    if (spec.sweep) {
        if (scale) throw UsageError("--scale applies only to the cell tables (1, 2, 4-7)");
        int digits = s.digits_or(5);
        JointDistribution d = build_distribution(regime_i1());
        RationalFunction p = conditional(d, both_female(), known_named_girl());
        json rows = json::array();
        std::ostringstream csv;
        csv << "r,exact,decimal\n";
        if (!s.json_output) {
            s.out << "table 3 — P(both girls | a girl known by name), shared names (i1)\n";
            s.out << "exact: " << p.str() << "\n";
        }
        for (const Rational& rv : kSweepPrevalences) {
            Rational value = p.eval(rv);
            std::string decimal = value.decimal(digits);
            if (s.json_output) {
                rows.push_back({{"r", rv.str()}, {"value", value.str()}, {"decimal", decimal}});
            } else {
                s.out << "  r = " << short_decimal(rv, 6) << "  ->  " << decimal << "\n";
            }
            csv << rv.str() << "," << value.str() << "," << decimal << "\n";
        }
        Rational at_one = p.eval(Rational(1));
        if (s.json_output) {
            json j;
            j["table_id"] = 3;
            j["exact"] = p.str();
            j["rows"] = rows;
            j["value_at_r_1"] = at_one.str();
            s.out << j.dump(2) << "\n";
        } else {
            s.out << "  (at r = 1 the value is exactly " << at_one.str()
                  << ", recovering the at-least-one-girl answer)\n";
        }
        if (!csv_path.empty()) emit_csv(s, csv_path, csv.str());
        return;
    }

    TableOptions opts;
    opts.table_id = id;
    opts.r = r;
    opts.digits = s.digits_or(4);
    opts.scale = scale;
    if (scale && !r) throw UsageError("--scale needs --r");
    RenderedTable table =
        spec.pitfall ? render_table(build_pitfall_table(), opts)
                     : render_table(build_distribution(spec.regime), opts);
    if (id == 7) {
        table.caption = "unique names, wrong independence step (compare with table 4)";
    }
    if (id == 2 && r && *r == kFootnoteReference.r) {
        add_reference_notes(table);
    }
    if (s.json_output) {
        s.out << table.to_json().dump(2) << "\n";
    } else {
        s.out << table.text();
    }
    if (!csv_path.empty()) emit_csv(s, csv_path, table.csv());
}

// ---------------------------------------------------------------------------
// sweep

void cmd_sweep(Settings& s, const std::string& query_text, const std::vector<std::string>& r_flags,
               const std::string& csv_path) {
    Query base = parse_query(query_text);
    if (base.kind == QueryKind::table || base.kind == QueryKind::factorize) {
        throw std::domain_error("sweep needs a scalar query (P, odds or bf)");
    }
    std::vector<Rational> values;
    for (const std::string& chunk : r_flags) {
        std::stringstream ss(chunk);
        std::string piece;
        while (std::getline(ss, piece, ',')) {
            if (!piece.empty()) values.push_back(parse_rational_flag(piece, "--r"));
        }
    }
    if (values.empty()) values = kSweepPrevalences;
    int digits = s.digits_or(5);

    Query symbolic = base;
    symbolic.r_value.reset();
    EvalResult head = evaluate(symbolic, digits);
    json rows = json::array();
    std::ostringstream csv;
    csv << "r,exact,decimal\n";
    if (!s.json_output) {
        s.out << "query: " << format_query(symbolic) << "\n";
        s.out << "exact: " << head.exact->str() << "\n";
    }
    for (const Rational& rv : values) {
        if (!base.regime.admits(rv)) {
            throw std::domain_error("prevalence r = " + rv.str() +
                                    " outside the admissible interval for regime " +
                                    base.regime.label());
        }
        Rational value = head.exact->eval(rv);
        std::string decimal = value.decimal(digits);
        if (s.json_output) {
            rows.push_back({{"r", rv.str()}, {"value", value.str()}, {"decimal", decimal}});
        } else {
            s.out << "  r = " << rv.str() << "  ->  " << value.str() << " = " << decimal << "\n";
        }
        csv << rv.str() << "," << value.str() << "," << decimal << "\n";
    }
    if (s.json_output) {
        json j;
        j["query"] = format_query(symbolic);
        j["exact"] = head.exact->str();
        j["rows"] = rows;
        s.out << j.dump(2) << "\n";
    }
    if (!csv_path.empty()) emit_csv(s, csv_path, csv.str());
}

// ---------------------------------------------------------------------------
// pitfall

void cmd_pitfall(Settings& s, const std::optional<Rational>& r) {
    int digits = s.digits_or(5);
    JointDistribution correct = build_distribution(regime_i2());
    PitfallTable wrong = build_pitfall_table();
    TableOptions opts;
    opts.digits = digits;
    if (r) {
        if (!regime_i2().admits(*r)) {
            throw std::domain_error("prevalence r = " + r->str() +
                                    " outside the admissible interval for regime i2");
        }
        opts.r = r;
    }
    TableOptions correct_opts = opts;
    correct_opts.table_id = 4;
    TableOptions wrong_opts = opts;
    wrong_opts.table_id = 7;

    RenderedTable correct_table = render_table(correct, correct_opts);
    RenderedTable wrong_table = render_table(wrong, wrong_opts);
    wrong_table.caption = "unique names, wrong independence step";
    SymmetryReport report = check_symmetry(wrong);
    RationalFunction good_cond = conditional(correct, both_female(), known_named_girl());
    RationalFunction bad_cond = conditional(wrong, both_female(), known_named_girl());

    if (s.json_output) {
        json j;
        j["correct"] = correct_table.to_json();
        j["wrong"] = wrong_table.to_json();
        json defects = json::array();
        for (const SymmetryDefect& d : report.asymmetric_pairs) {
            json entry = {{"cell", d.outcome.key()},
                          {"mirror", d.outcome.swapped().key()},
                          {"value", d.value_ab.str()},
                          {"mirror_value", d.value_ba.str()},
                          {"difference", d.difference.str()}};
            if (r) {
                entry["value_at_r"] = d.value_ab.eval(*r).str();
                entry["mirror_value_at_r"] = d.value_ba.eval(*r).str();
            }
            defects.push_back(std::move(entry));
        }
        json marginals = json::array();
        for (const MarginalDefect& d : report.marginal_defects) {
            marginals.push_back({{"child", d.child.key()},
                                 {"eldest_total", d.eldest_total.str()},
                                 {"youngest_total", d.youngest_total.str()},
                                 {"difference", d.difference.str()}});
        }
        j["symmetry"] = {{"pass", report.pass()},
                         {"max_defect", report.max_defect.str()},
                         {"asymmetric_pairs", defects},
                         {"marginal_defects", marginals}};
        j["conditional"] = {{"correct", good_cond.str()}, {"wrong", bad_cond.str()}};
        if (r) {
            j["conditional_at_r"] = {{"r", r->str()},
                                     {"correct", good_cond.eval(*r).decimal(digits)},
                                     {"wrong", bad_cond.eval(*r).decimal(digits)}};
        }
        s.out << j.dump(2) << "\n";
        return;
    }

    s.out << correct_table.text() << "\n" << wrong_table.text() << "\n";
    s.out << "symmetry check of table 7: " << (report.pass() ? "pass" : "FAIL") << "\n";
    for (const SymmetryDefect& d : report.asymmetric_pairs) {
        s.out << "  cell (" << d.outcome.key() << ") = " << d.value_ab.str() << " but ("
              << d.outcome.swapped().key() << ") = " << d.value_ba.str() << "; they differ by "
              << d.difference.str() << "\n";
        if (r) {
            s.out << "    at r = " << r->str() << ": " << d.value_ab.eval(*r).str() << " vs "
                  << d.value_ba.eval(*r).str() << "\n";
        }
    }
    for (const MarginalDefect& d : report.marginal_defects) {
        s.out << "  " << d.child.key() << " marginal: eldest " << d.eldest_total.str()
              << " vs youngest " << d.youngest_total.str() << " (difference "
              << d.difference.str() << ")\n";
    }
    s.out << "P(both girls | girl known by name):\n";
    s.out << "  from table 4: " << good_cond.str() << "\n";
    s.out << "  from table 7: " << bad_cond.str()
          << "  <- the shared-name answer, reached from a unique-name premise\n";
    if (r) {
        s.out << "at r = " << r->str() << ": correct " << good_cond.eval(*r).decimal(digits)
              << ", wrong " << bad_cond.eval(*r).decimal(digits) << "\n";
    }
}

// ---------------------------------------------------------------------------
// verify

void cmd_verify(Settings& s, const std::string& query_text, const std::string& regime_flag,
                const std::string& r_flag, std::uint64_t n, std::uint64_t seed,
                const std::string& mode_flag, unsigned workers) {
    SimConfig cfg;
    if (regime_flag == "i0") cfg.regime = regime_i0();
    else if (regime_flag == "i1") cfg.regime = regime_i1();
    else if (regime_flag == "i2") cfg.regime = regime_i2();
    else throw UsageError("--regime must be i0, i1 or i2");
    cfg.r = parse_rational_flag(r_flag, "--r");
    cfg.n_families = n;
    cfg.seed = seed;
    cfg.workers = workers;
    if (mode_flag == "direct") cfg.mode = SimConfig::Mode::direct;
    else if (mode_flag == "reject") cfg.mode = SimConfig::Mode::reject;
    else throw UsageError("--mode must be direct or reject");

    Query q = query_text.empty()
                  ? Query{}
                  : parse_query(query_text);
    if (query_text.empty()) {
        q.kind = QueryKind::conditional;
        q.a = both_female();
        q.b = known_named_girl();
        q.regime = cfg.regime;
    }
    EventExpr a, b;
    switch (q.kind) {
        case QueryKind::probability:
            a = q.a;
            b = EventExpr::constant(true);
            break;
        case QueryKind::conditional:
            a = q.a;
            b = q.b;
            break;
        default:
            throw std::domain_error("verify needs a P(...) or P(... | ...) query");
    }
    const EventEnv* env = q.bindings.empty() ? nullptr : &q.bindings;
    Estimate est = estimate_conditional(cfg, a, b, env);
    bool pass = !est.degenerate && std::abs(est.z_score) <= 4.0;

    if (s.json_output) {
        json j = to_json(est, cfg);
        j["query"] = format_query(q);
        j["pass"] = pass;
        s.out << j.dump(2) << "\n";
    } else {
        s.out << "query: " << format_query(q) << "\n";
        s.out << "config: regime " << cfg.regime.label() << ", r = " << cfg.r.str() << ", n = "
              << cfg.n_families << ", seed = " << cfg.seed << ", mode "
              << (cfg.mode == SimConfig::Mode::direct ? "direct" : "reject") << ", workers "
              << cfg.workers << "\n";
        s.out << "analytic: " << est.analytic.str() << " = " << est.analytic.decimal(6) << "\n";
        if (est.degenerate) {
            s.out << "estimate: " << est.note << "\n";
        } else {
            s.out << "estimate: " << est.successes << "/" << est.trials << " = " << est.p_hat
                  << " (stderr " << est.stderr_hat << ", z = " << est.z_score << ")\n";
        }
        s.out << (pass ? "PASS" : "FAIL") << " (4-sigma band)\n";
    }
    if (!pass) s.exit_code = 1;
}

// ---------------------------------------------------------------------------
// demo

void cmd_demo(Settings& s) {
    JointDistribution i0 = build_distribution(regime_i0());
    JointDistribution i1 = build_distribution(regime_i1());
    JointDistribution i2 = build_distribution(regime_i2());
    EventExpr em = EventExpr::atom(Slot::eldest, AtomPredicate::is_male);
    EventExpr ym = EventExpr::atom(Slot::youngest, AtomPredicate::is_male);

    if (s.json_output) {
        json j;
        j["q1"] = probability(i0, em & ym).str();
        j["q2"] = conditional(i0, em & ym, em).str();
        j["q3"] = conditional(i0, em & ym, em | ym).str();
        j["q4_unique_names"] = conditional(i2, both_female(), known_named_girl()).str();
        j["q4_shared_names"] = conditional(i1, both_female(), known_named_girl()).str();
        s.out << j.dump(2) << "\n";
        return;
    }

    s.out << "The two-child puzzle, four classic questions.\n\n";
    s.out << "Q1  What is the probability of two boys?\n";
    s.out << "    P(E.m & Y.m) under i0 = " << probability(i0, em & ym).str() << "\n\n";
    s.out << "Q2  ... if the eldest child is a boy?\n";
    s.out << "    P(E.m & Y.m | E.m) under i0 = " << conditional(i0, em & ym, em).str() << "\n\n";
    s.out << "Q3  ... if at least one child is a boy?\n";
    s.out << "    P(E.m & Y.m | E.m + Y.m) under i0 = "
          << conditional(i0, em & ym, em | ym).str() << "\n\n";
    s.out << "Q4  One child is a girl with a known name; probability of two girls?\n";
    s.out << "    With names unique within a family (i2):\n";
    s.out << "      P(E.f & Y.f | E.fN + Y.fN) = "
          << conditional(i2, both_female(), known_named_girl()).str()
          << ", independent of the name's prevalence r.\n";
    s.out << "    If the same name could be given twice (i1), the answer would be\n";
    s.out << "      " << conditional(i1, both_female(), known_named_girl()).str()
          << ", which tends to 1/2 as r -> 0.\n";
    s.out << "    Knowing the name adds nothing beyond singling the child out:\n";
    s.out << "      P(E.f & Y.f | E.fN) = "
          << conditional(i2, both_female(),
                         EventExpr::atom(Slot::eldest, AtomPredicate::is_female_the_name))
                 .str()
          << " = P(E.f & Y.f | E.f) = "
          << conditional(i2, both_female(),
                         EventExpr::atom(Slot::eldest, AtomPredicate::is_female))
                 .str()
          << " (the answer to Q2).\n";
    s.out << "\nSee 'pitfall' for the wrong-reasoning table the unique-name chain rule can "
             "produce.\n";
}

// ---------------------------------------------------------------------------

void print_query_error(std::ostream& err, const std::string& input, const QueryParseError& e) {
    err << "error: " << e.what() << " (offset " << e.span().start << ".." << e.span().end
        << ")\n";
    err << "  " << input << "\n";
    std::string marker(e.span().start, ' ');
    size_t width = e.span().end > e.span().start ? e.span().end - e.span().start : 1;
    marker += std::string(width, '^');
    err << "  " << marker << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream* in) {
    Settings settings{out, err, in, false, std::nullopt, 0};

    CLI::App app{"Exact inference engine for the two-child (boy-or-girl) puzzle"};
    app.require_subcommand(0, 1);
    int digits_flag = 0;
    auto* digits_opt = app.add_option("--digits", digits_flag, "decimal places for rendered values");
    app.add_flag("--json", settings.json_output, "machine-readable output");

    // eval
    std::vector<std::string> eval_query;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a query");
    eval_cmd->add_option("query", eval_query, "query text, e.g. '@regime(i2) P(E.f & Y.f | E.fN)'")
        ->required();
    eval_cmd->fallthrough();

    // table
    int table_id = 0;
    std::string table_r, table_csv;
    std::uint64_t table_scale = 0;
    auto* table_cmd = app.add_subcommand("table", "render a contingency table (ids 1-7)");
    table_cmd->add_option("id", table_id, "table number")->required();
    table_cmd->add_option("--r", table_r, "prevalence (p/q or decimal)");
    auto* scale_opt = table_cmd->add_option("--scale", table_scale, "expected counts per this many families");
    table_cmd->add_option("--csv", table_csv, "write CSV to this path ('-' for stdout)");
    table_cmd->fallthrough();

    // sweep
    std::string sweep_query, sweep_csv;
    std::vector<std::string> sweep_r;
    auto* sweep_cmd = app.add_subcommand("sweep", "evaluate a query over a list of prevalences");
    sweep_cmd->add_option("query", sweep_query, "query text")->required();
    sweep_cmd->add_option("--r", sweep_r, "prevalence list (repeatable or comma-separated)");
    sweep_cmd->add_option("--csv", sweep_csv, "write CSV to this path ('-' for stdout)");
    sweep_cmd->fallthrough();

    // pitfall
    std::string pitfall_r;
    auto* pitfall_cmd = app.add_subcommand("pitfall", "contrast table 4 with the wrong-reasoning table 7");
    pitfall_cmd->add_option("--r", pitfall_r, "prevalence for numeric comparison");
    pitfall_cmd->fallthrough();

    // verify
    std::string verify_query, verify_regime = "i2", verify_r = "1/50", verify_mode = "direct";
    std::uint64_t verify_n = 1000000, verify_seed = 1;
    unsigned verify_workers = 1;
    auto* verify_cmd = app.add_subcommand("verify", "Monte Carlo check of an analytic value");
    verify_cmd->add_option("--query", verify_query, "P or P(|) query (defaults to the named-girl conditional)");
    verify_cmd->add_option("--regime", verify_regime, "i0, i1 or i2");
    verify_cmd->add_option("--r", verify_r, "prevalence");
    verify_cmd->add_option("--n", verify_n, "number of families");
    verify_cmd->add_option("--seed", verify_seed, "random seed");
    verify_cmd->add_option("--mode", verify_mode, "direct or reject");
    verify_cmd->add_option("--workers", verify_workers, "worker threads");
    verify_cmd->fallthrough();

    // demo
    auto* demo_cmd = app.add_subcommand("demo", "walk through the four classic questions");
    demo_cmd->fallthrough();

    std::string active_query;  // for parse-error display
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (digits_opt->count() > 0) {
            if (digits_flag < 0 || digits_flag > 50) {
                throw UsageError("--digits must be between 0 and 50");
            }
            settings.digits = digits_flag;
        }
        if (app.get_subcommands().empty()) {
            out << app.help();
            return 0;
        }
        if (eval_cmd->parsed()) {
            std::string joined;
            for (const std::string& part : eval_query) {
                if (!joined.empty()) joined += " ";
                joined += part;
            }
            joined = resolve_query_text(settings, joined);
            active_query = joined;
            cmd_eval(settings, joined);
        } else if (table_cmd->parsed()) {
            std::optional<Rational> r;
            if (!table_r.empty()) r = parse_rational_flag(table_r, "--r");
            std::optional<std::uint64_t> scale;
            if (scale_opt->count() > 0) scale = table_scale;
            cmd_table(settings, table_id, r, scale, table_csv);
        } else if (sweep_cmd->parsed()) {
            sweep_query = resolve_query_text(settings, sweep_query);
            active_query = sweep_query;
            cmd_sweep(settings, sweep_query, sweep_r, sweep_csv);
        } else if (pitfall_cmd->parsed()) {
            std::optional<Rational> r;
            if (!pitfall_r.empty()) r = parse_rational_flag(pitfall_r, "--r");
            cmd_pitfall(settings, r);
        } else if (verify_cmd->parsed()) {
            active_query = verify_query;
            cmd_verify(settings, verify_query, verify_regime, verify_r, verify_n, verify_seed,
                       verify_mode, verify_workers);
        } else if (demo_cmd->parsed()) {
            cmd_demo(settings);
        }
        return settings.exit_code;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const QueryParseError& e) {
        print_query_error(err, active_query, e);
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace twochild::cli
