#include "ringcluster/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ringcluster {
namespace {

// Ratio figures carry both model columns plus uepem/epem.
FigureSeries two_model_figure(const std::string& figure, const std::string& uepem_col,
                              const std::string& epem_col, const NetworkPlan& plan,
                              double RingPlan::*field, bool with_ratio) {
    FigureSeries s;
    s.figure = figure;
    s.columns = {"ring", uepem_col, epem_col};
    if (with_ratio) s.columns.push_back("ratio");
    for (int ring = 0; ring < plan.config.ring_count; ++ring) {
        const double u = plan.uepem[ring].*field;
        const double e = plan.epem[ring].*field;
        std::vector<double> row = {static_cast<double>(ring + 1), u, e};
        if (with_ratio) row.push_back(u / e);
        s.rows.push_back(std::move(row));
    }
    return s;
}

}  // namespace

std::string format_value(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.9g", value);
    return buffer;
}

std::string to_csv(const FigureSeries& series) {
    std::string out;
    for (std::size_t c = 0; c < series.columns.size(); ++c) {
        if (c) out += ',';
        out += series.columns[c];
    }
    out += '\n';
    for (const std::vector<double>& row : series.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += format_value(row[c]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const FigureSeries& series) {
    nlohmann::ordered_json j;
    j["figure"] = series.figure;
    j["columns"] = series.columns;
    j["rows"] = series.rows;
    return j.dump(2) + "\n";
}

void write_file_atomic(const std::string& path, const std::string& bytes) {
    const std::filesystem::path target(path);
    const std::filesystem::path temp = target.string() + ".tmp";
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write '" + path + "'");
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(temp, ec);
            throw std::runtime_error("cannot write '" + path + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(temp, target, ec);
    if (ec) {
        std::filesystem::remove(temp, ec);
        throw std::runtime_error("cannot replace '" + path + "': " + ec.message());
    }
}

void emit_series(const FigureSeries& series, OutputFormat format, const std::string& path) {
    const std::string bytes = format == OutputFormat::csv ? to_csv(series) : to_json(series);
    if (path == "-") {
        std::cout << bytes;
        std::cout.flush();
        return;
    }
    write_file_atomic(path, bytes);
}

FigureSeries plan_table(const NetworkPlan& plan) {
    FigureSeries s;
    s.figure = "plan";
    s.columns = {"ring",
                 "expected_nodes",
                 "k_uepem",
                 "k_uepem_unclamped",
                 "p_uepem",
                 "cluster_radius_uepem_m",
                 "cluster_size_uepem",
                 "e_head_uepem_j",
                 "e_member_uepem_j",
                 "e_cluster_uepem_j",
                 "e_ring_total_uepem_j",
                 "k_epem",
                 "p_epem",
                 "cluster_radius_epem_m",
                 "cluster_size_epem",
                 "e_head_epem_j",
                 "e_member_epem_j",
                 "e_cluster_epem_j",
                 "e_ring_total_epem_j"};
    for (int ring = 0; ring < plan.config.ring_count; ++ring) {
        const RingPlan& u = plan.uepem[ring];
        const RingPlan& e = plan.epem[ring];
        s.rows.push_back({static_cast<double>(ring + 1), u.expected_nodes, u.head_count,
                          u.head_count_unclamped, u.election_probability, u.cluster_radius_m,
                          u.cluster_size, u.e_head_j, u.e_member_j, u.e_cluster_j,
                          u.e_ring_total_j, e.head_count, e.election_probability,
                          e.cluster_radius_m, e.cluster_size, e.e_head_j, e.e_member_j,
                          e.e_cluster_j, e.e_ring_total_j});
    }
    return s;
}

std::vector<FigureSeries> analytic_figures(const NetworkPlan& plan) {
    std::vector<FigureSeries> figures;
    figures.push_back(two_model_figure("fig4", "total_uepem_j", "total_epem_j", plan,
                                       &RingPlan::e_ring_total_j, false));
    figures.push_back(two_model_figure("fig5", "total_uepem_j", "total_epem_j", plan,
                                       &RingPlan::e_ring_total_j, true));
    figures.push_back(two_model_figure("fig5_excl_electronics", "total_excl_uepem_j",
                                       "total_excl_epem_j", plan,
                                       &RingPlan::e_ring_excl_electronics_j, true));
    figures.push_back(
        two_model_figure("fig6", "head_uepem_j", "head_epem_j", plan, &RingPlan::e_head_j, false));
    figures.push_back(
        two_model_figure("fig7", "head_uepem_j", "head_epem_j", plan, &RingPlan::e_head_j, true));
    figures.push_back(two_model_figure("fig8", "member_uepem_j", "member_epem_j", plan,
                                       &RingPlan::e_member_j, false));
    figures.push_back(two_model_figure("fig9", "member_uepem_j", "member_epem_j", plan,
                                       &RingPlan::e_member_j, true));
    figures.push_back(two_model_figure("fig11", "cluster_radius_uepem_m", "cluster_radius_epem_m",
                                       plan, &RingPlan::cluster_radius_m, true));
    figures.push_back(two_model_figure("fig12", "cluster_size_uepem", "cluster_size_epem", plan,
                                       &RingPlan::cluster_size, true));
    figures.push_back(
        two_model_figure("fig13", "heads_uepem", "heads_epem", plan, &RingPlan::head_count, false));
    figures.push_back(
        two_model_figure("fig14", "heads_uepem", "heads_epem", plan, &RingPlan::head_count, true));
    return figures;
}

FigureSeries sweep_figure(const std::vector<SweepPoint>& sweep) {
    FigureSeries s;
    s.figure = "fig10";
    s.columns = {"rings", "uepem_total_j", "epem_total_j", "ratio"};
    for (const SweepPoint& point : sweep) {
        s.rows.push_back({static_cast<double>(point.ring_count), point.uepem_total_j,
                          point.epem_total_j, point.ratio});
    }
    return s;
}

FigureSeries hetero_table(const std::vector<int>& counts) {
    FigureSeries s;
    s.figure = "hetero";
    s.columns = {"ring", "category1_nodes"};
    for (std::size_t ring = 0; ring < counts.size(); ++ring) {
        s.rows.push_back({static_cast<double>(ring + 1), static_cast<double>(counts[ring])});
    }
    return s;
}

FigureSeries moments_table(const std::vector<MomentEstimate>& moments) {
    FigureSeries s;
    s.figure = "moments";
    s.columns = {"ring",       "k",           "samples",  "z2_mean_m2", "z2_closed_m2",
                 "z2_se_m2",   "y4_mean_m4",  "y4_closed_m4", "y4_se_m4"};
    for (const MomentEstimate& m : moments) {
        s.rows.push_back({static_cast<double>(m.ring + 1), m.k, static_cast<double>(m.samples),
                          m.z2_mean_m2, m.z2_closed_m2, m.z2_se_m2, m.y4_mean_m4, m.y4_closed_m4,
                          m.y4_se_m4});
    }
    return s;
}

FigureSeries simulate_table(const NetworkPlan& plan, const TrialSummary& uepem,
                            const TrialSummary& epem) {
    FigureSeries s;
    s.figure = "simulate";
    s.columns = {"ring",
                 "trials",
                 "mean_total_uepem_j",
                 "se_total_uepem_j",
                 "analytic_uepem_j",
                 "delta_uepem_pct",
                 "mean_heads_uepem",
                 "binomial_heads_uepem",
                 "fallback_uepem",
                 "mean_total_epem_j",
                 "se_total_epem_j",
                 "analytic_epem_j",
                 "delta_epem_pct",
                 "mean_heads_epem",
                 "binomial_heads_epem",
                 "fallback_epem"};
    for (int ring = 0; ring < plan.config.ring_count; ++ring) {
        const double analytic_u = plan.uepem[ring].e_ring_total_j;
        const double analytic_e = plan.epem[ring].e_ring_total_j;
        s.rows.push_back({static_cast<double>(ring + 1),
                          static_cast<double>(uepem.trials),
                          uepem.total_j[ring].mean,
                          uepem.total_j[ring].se,
                          analytic_u,
                          100.0 * (uepem.total_j[ring].mean - analytic_u) / analytic_u,
                          uepem.head_count[ring].mean,
                          uepem.binomial_heads[ring],
                          uepem.fallback_members[ring].mean,
                          epem.total_j[ring].mean,
                          epem.total_j[ring].se,
                          analytic_e,
                          100.0 * (epem.total_j[ring].mean - analytic_e) / analytic_e,
                          epem.head_count[ring].mean,
                          epem.binomial_heads[ring],
                          epem.fallback_members[ring].mean});
    }
    return s;
}

std::string render_svg(const Deployment& deployment, const std::vector<std::uint8_t>& is_head,
                       const Assignment& assignment) {
    const std::size_t n = deployment.nodes.size();
    if (is_head.size() != n || assignment.head_of.size() != n)
        throw std::invalid_argument("render_svg: assignment does not match deployment");

    const double radius = deployment.config.network_radius_m();
    const double pad = radius * 1.05;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"640\" "
           "height=\"640\" viewBox=\""
        << format_value(-pad) << ' ' << format_value(-pad) << ' ' << format_value(2.0 * pad)
        << ' ' << format_value(2.0 * pad) << "\">\n";
    svg << "  <rect x=\"" << format_value(-pad) << "\" y=\"" << format_value(-pad)
        << "\" width=\"" << format_value(2.0 * pad) << "\" height=\"" << format_value(2.0 * pad)
        << "\" fill=\"#ffffff\"/>\n";

    // Ring boundaries, innermost to the network edge.
    const double width = deployment.config.ring_width_m();
    for (int ring = 1; ring <= deployment.config.ring_count; ++ring) {
        svg << "  <circle class=\"ring\" cx=\"0\" cy=\"0\" r=\"" << format_value(ring * width)
            << "\" fill=\"none\" stroke=\"#c8cdd4\" stroke-width=\"0.8\"/>\n";
    }

    // One link per member: to its head, or to the BS for fallback members.
    for (const Node& node : deployment.nodes) {
        const int head = assignment.head_of[node.id];
        if (head == node.id) continue;
        double tx = 0.0, ty = 0.0;  // base station
        if (head >= 0) {
            tx = deployment.nodes[head].x_m;
            ty = deployment.nodes[head].y_m;
        }
        svg << "  <line class=\"link\" x1=\"" << format_value(node.x_m) << "\" y1=\""
            << format_value(node.y_m) << "\" x2=\"" << format_value(tx) << "\" y2=\""
            << format_value(ty) << "\" stroke=\"#9db2c8\" stroke-width=\"0.5\"/>\n";
    }

    // Node glyphs: members as small dots, heads larger and darker.
    for (const Node& node : deployment.nodes) {
        if (is_head[node.id]) {
            svg << "  <circle class=\"head\" cx=\"" << format_value(node.x_m) << "\" cy=\""
                << format_value(node.y_m) << "\" r=\"4.2\" fill=\"#b03030\"/>\n";
        } else {
            svg << "  <circle class=\"member\" cx=\"" << format_value(node.x_m) << "\" cy=\""
                << format_value(node.y_m) << "\" r=\"2.1\" fill=\"#2860a8\"/>\n";
        }
    }

    // Base station cross at the center.
    svg << "  <line class=\"bs\" x1=\"-6\" y1=\"0\" x2=\"6\" y2=\"0\" stroke=\"#000000\" "
           "stroke-width=\"2\"/>\n";
    svg << "  <line class=\"bs\" x1=\"0\" y1=\"-6\" x2=\"0\" y2=\"6\" stroke=\"#000000\" "
           "stroke-width=\"2\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace ringcluster
