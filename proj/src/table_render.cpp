#include "twochild/table_render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace twochild {

namespace {

RenderedCell make_cell(const RationalFunction& exact, const TableOptions& opts) {
    RenderedCell cell;
    cell.exact = exact;
    if (opts.r) {
        cell.value = exact.eval(*opts.r);
        cell.decimal = cell.value->decimal(opts.digits);
        if (opts.scale) {
            cell.count = (*cell.value * Rational(static_cast<long long>(*opts.scale)))
                             .round_half_even();
        }
    }
    return cell;
}

RenderedTable render_cells(const Regime& regime,
                           const std::map<FamilyOutcome, RationalFunction>& cells,
                           auto cell_of, const TableOptions& opts) {
    if (opts.r && !regime.admits(*opts.r)) {
        throw std::domain_error("prevalence r = " + opts.r->str() +
                                " outside the admissible interval for regime " + regime.label());
    }
    RenderedTable out;
    out.table_id = opts.table_id;
    out.caption = opts.caption.empty() ? regime.describe() : opts.caption;
    out.wrong_reasoning = opts.wrong_reasoning;
    out.regime = regime;
    out.states = regime.child_states();

    const size_t n = out.states.size();
    std::vector<RationalFunction> row_sum(n), col_sum(n);
    RationalFunction total;
    out.cells.resize(n, std::vector<RenderedCell>(n));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            FamilyOutcome outcome{out.states[i], out.states[j]};
            const RationalFunction& p = cell_of(outcome);
            out.cells[i][j] = make_cell(p, opts);
            out.cells[i][j].excluded = cells.count(outcome) == 0;
            row_sum[i] += p;
            col_sum[j] += p;
            total += p;
        }
    }
    for (size_t i = 0; i < n; ++i) {
        out.row_totals.push_back(make_cell(row_sum[i], opts));
        out.col_totals.push_back(make_cell(col_sum[i], opts));
    }
    out.grand_total = make_cell(total, opts);
    return out;
}

std::string cell_text(const RenderedCell& cell) {
    if (cell.excluded) return "-";
    if (cell.count) return cell.count->str();
    if (cell.decimal) return *cell.decimal;
    return cell.exact.str();
}

}  // namespace

std::string RenderedTable::display_label(const Child& c) const {
    std::string key = c.key();
    if (regime.alias == AliasLabel::identification) {
        auto pos = key.find('N');
        if (pos != std::string::npos) key.replace(pos, 1, "ID");
    }
    return key;
}

std::string RenderedTable::text() const {
    const size_t n = states.size();
    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> header{"eldest\\youngest"};
    for (const Child& c : states) header.push_back(display_label(c));
    header.push_back("total");
    grid.push_back(header);
    for (size_t i = 0; i < n; ++i) {
        std::vector<std::string> row{display_label(states[i])};
        for (size_t j = 0; j < n; ++j) row.push_back(cell_text(cells[i][j]));
        row.push_back(cell_text(row_totals[i]));
        grid.push_back(row);
    }
    std::vector<std::string> footer{"total"};
    for (size_t j = 0; j < n; ++j) footer.push_back(cell_text(col_totals[j]));
    footer.push_back(cell_text(grand_total));
    grid.push_back(footer);

    std::vector<size_t> width(grid[0].size(), 0);
    for (const auto& row : grid) {
        for (size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
    }
    std::ostringstream os;
    if (table_id) os << "table " << *table_id << " — ";
    os << caption << "\n";
    if (wrong_reasoning) {
        os << "*** WRONG REASONING — shown for demonstration; not a valid distribution ***\n";
    }
    for (const auto& row : grid) {
        for (size_t k = 0; k < row.size(); ++k) {
            os << (k == 0 ? "" : "  ");
            os.width(static_cast<std::streamsize>(width[k]));
            os << (k == 0 ? std::left : std::right);
            os << row[k];
        }
        os << "\n";
    }
    for (const auto& note : notes) os << "note: " << note << "\n";
    return os.str();
}

std::string RenderedTable::csv() const {
    std::ostringstream os;
    os << "# ";
    if (table_id) os << "table " << *table_id << ": ";
    os << caption;
    if (wrong_reasoning) os << " (WRONG REASONING)";
    os << "\n";
    const size_t n = states.size();
    auto matrix = [&](auto value_of) {
        os << "eldest\\youngest";
        for (const Child& c : states) os << "," << c.key();
        os << ",total\n";
        for (size_t i = 0; i < n; ++i) {
            os << states[i].key();
            for (size_t j = 0; j < n; ++j) os << "," << value_of(cells[i][j]);
            os << "," << value_of(row_totals[i]) << "\n";
        }
        os << "total";
        for (size_t j = 0; j < n; ++j) os << "," << value_of(col_totals[j]);
        os << "," << value_of(grand_total) << "\n";
    };
    matrix([](const RenderedCell& cell) { return cell.excluded ? "-" : cell.exact.str(); });
    if (grand_total.decimal) {
        os << "# decimal values\n";
        matrix([](const RenderedCell& cell) { return cell.excluded ? "-" : *cell.decimal; });
    }
    if (grand_total.count) {
        os << "# expected counts\n";
        matrix([](const RenderedCell& cell) {
            return cell.excluded ? std::string("-") : cell.count->str();
        });
    }
    return os.str();
}

namespace {

nlohmann::json cell_json(const RenderedCell& cell) {
    nlohmann::json j;
    j["exact"] = cell.exact.str();
    if (cell.value) j["value"] = cell.value->str();
    if (cell.decimal) j["decimal"] = *cell.decimal;
    if (cell.count) j["count"] = cell.count->str();
    if (cell.excluded) j["excluded"] = true;
    return j;
}

}  // namespace

nlohmann::json RenderedTable::to_json() const {
    nlohmann::json j;
    if (table_id) j["table_id"] = *table_id;
    j["caption"] = caption;
    j["regime"] = regime.label();
    j["alias"] = regime.alias == AliasLabel::identification ? "identification" : "name";
    if (wrong_reasoning) j["wrong_reasoning"] = true;
    nlohmann::json keys = nlohmann::json::array();
    for (const Child& c : states) keys.push_back(c.key());
    j["states"] = keys;
    nlohmann::json rows = nlohmann::json::object();
    const size_t n = states.size();
    for (size_t i = 0; i < n; ++i) {
        nlohmann::json row = nlohmann::json::object();
        for (size_t j2 = 0; j2 < n; ++j2) {
            row[states[j2].key()] = cell_json(cells[i][j2]);
        }
        row["total"] = cell_json(row_totals[i]);
        rows[states[i].key()] = row;
    }
    j["rows"] = rows;
    nlohmann::json col = nlohmann::json::object();
    for (size_t j2 = 0; j2 < n; ++j2) col[states[j2].key()] = cell_json(col_totals[j2]);
    col["total"] = cell_json(grand_total);
    j["column_totals"] = col;
    if (!notes.empty()) j["notes"] = notes;
    return j;
}

RenderedTable render_table(const JointDistribution& d, const TableOptions& opts) {
    return render_cells(d.regime(), d.cells(),
                        [&](const FamilyOutcome& o) -> const RationalFunction& { return d.cell(o); },
                        opts);
}

RenderedTable render_table(const PitfallTable& t, const TableOptions& opts) {
    TableOptions o = opts;
    o.wrong_reasoning = true;
    return render_cells(t.regime(), t.cells(),
                        [&](const FamilyOutcome& o2) -> const RationalFunction& { return t.cell(o2); },
                        o);
}

}  // namespace twochild
