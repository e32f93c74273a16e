#pragma once

#include "twochild/distribution.hpp"
#include "twochild/pitfall.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace twochild {

struct TableOptions {
    std::optional<Rational> r;          // numeric evaluation point
    int digits = 4;
    std::optional<std::uint64_t> scale; // expected counts over this many families
    std::optional<int> table_id;
    std::string caption;
    bool wrong_reasoning = false;
};

struct RenderedCell {
    RationalFunction exact;
    std::optional<Rational> value;       // exact value at r
    std::optional<std::string> decimal;
    std::optional<BigInt> count;         // value * scale, rounded half-even
    bool excluded = false;               // outcome impossible under the regime
};

/// A contingency table ready for text, CSV or JSON output. Margins are the
/// computed row/column sums, never copied from anywhere else.
struct RenderedTable {
    std::optional<int> table_id;
    std::string caption;
    bool wrong_reasoning = false;
    Regime regime;
    std::vector<Child> states;                    // row and column order
    std::vector<std::vector<RenderedCell>> cells; // [row][col]
    std::vector<RenderedCell> row_totals;
    std::vector<RenderedCell> col_totals;
    RenderedCell grand_total;
    std::vector<std::string> notes;

    std::string text() const;
    std::string csv() const;
    nlohmann::json to_json() const;

    /// Header label for a child state, honoring the regime's alias
    /// ("fN" vs "fID").
    std::string display_label(const Child& c) const;
};

RenderedTable render_table(const JointDistribution& d, const TableOptions& opts = {});
RenderedTable render_table(const PitfallTable& t, const TableOptions& opts = {});

}  // namespace twochild
