#pragma once
#include <string>
#include <vector>

#include "ringcluster/planner.hpp"
#include "ringcluster/simulator.hpp"

namespace ringcluster {

// One labeled table: the unit every command emits.  Rows hold plain doubles;
// ring labels are 1-based, sweep rows are labeled by ring count.
struct FigureSeries {
    std::string figure;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

enum class OutputFormat { csv, json };

// Up to 9 significant digits, trailing zeros trimmed (C "%.9g").
std::string format_value(double value);

// Header row plus one line per data row, comma-separated, "\n" endings.
std::string to_csv(const FigureSeries& series);

// {"figure": ..., "columns": [...], "rows": [[...], ...]} with keys in that
// order.
std::string to_json(const FigureSeries& series);

// Writes to a temporary file in the target directory and renames it over
// `path`, so readers never observe a partial file.  Throws std::runtime_error
// naming the path on any I/O failure.
void write_file_atomic(const std::string& path, const std::string& bytes);

// Serializes and writes atomically; path "-" writes to stdout instead.
void emit_series(const FigureSeries& series, OutputFormat format, const std::string& path);

// Per-ring planner table, both models side by side.
FigureSeries plan_table(const NetworkPlan& plan);

// The analytic figure family: fig4/fig5 ring totals (+ the
// fig5_excl_electronics variant without the electronics floor), fig6/fig7
// head energy, fig8/fig9 member energy, fig11 cluster radii, fig12 cluster
// sizes, fig13/fig14 head counts.  Value figures carry both models; ratio
// figures add a uepem/epem column.
std::vector<FigureSeries> analytic_figures(const NetworkPlan& plan);

// fig10: network totals and their ratio per ring count.
FigureSeries sweep_figure(const std::vector<SweepPoint>& sweep);

// Category-I node count per ring.
FigureSeries hetero_table(const std::vector<int>& counts);

// Sampled vs closed-form moments per ring.
FigureSeries moments_table(const std::vector<MomentEstimate>& moments);

// Trial aggregates for both models next to the analytic per-ring totals.
FigureSeries simulate_table(const NetworkPlan& plan, const TrialSummary& uepem,
                            const TrialSummary& epem);

// Self-contained SVG 1.1 drawing: ring boundaries, one glyph per node
// (class "member" or "head"), one line per member to its target (head, or
// BS for fallback members), and a BS cross.  Deterministic bytes.
std::string render_svg(const Deployment& deployment, const std::vector<std::uint8_t>& is_head,
                       const Assignment& assignment);

}  // namespace ringcluster
