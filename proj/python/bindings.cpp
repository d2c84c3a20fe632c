#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ringcluster/planner.hpp"
#include "ringcluster/report.hpp"
#include "ringcluster/rng.hpp"
#include "ringcluster/simulator.hpp"

namespace py = pybind11;
using namespace ringcluster;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Ring-partitioned WSN cluster planning and simulation";

    // radio model -----------------------------------------------------------
    py::enum_<TxMode>(m, "TxMode")
        .value("thresholded", TxMode::thresholded)
        .value("force_free_space", TxMode::force_free_space)
        .value("force_multipath", TxMode::force_multipath);

    py::class_<RadioParams>(m, "RadioParams")
        .def(py::init<>())
        .def_readwrite("e_elec", &RadioParams::e_elec)
        .def_readwrite("e_da", &RadioParams::e_da)
        .def_readwrite("eps_fs", &RadioParams::eps_fs)
        .def_readwrite("eps_mp", &RadioParams::eps_mp)
        .def_readwrite("d_threshold_m", &RadioParams::d_threshold_m)
        .def_readwrite("packet_bits", &RadioParams::packet_bits)
        .def_readwrite("initial_energy_j", &RadioParams::initial_energy_j);

    m.def("validate_radio", [](const RadioParams& radio) { validate(radio); });
    m.def("analytic_crossover_m", &analytic_crossover_m);
    m.def("crossover_note", &crossover_note);
    m.def("load_radio_params", &load_radio_params, py::arg("path"));
    m.def("tx_energy", &tx_energy, py::arg("radio"), py::arg("bits"), py::arg("distance_m"),
          py::arg("mode") = TxMode::thresholded);
    m.def("rx_energy", &rx_energy, py::arg("radio"), py::arg("bits"));
    m.def("aggregation_energy", &aggregation_energy, py::arg("radio"), py::arg("bits"),
          py::arg("signal_count"));

    // ring geometry ----------------------------------------------------------
    py::class_<NetworkConfig>(m, "NetworkConfig")
        .def(py::init<>())
        .def_readwrite("node_count", &NetworkConfig::node_count)
        .def_readwrite("area_m2", &NetworkConfig::area_m2)
        .def_readwrite("ring_count", &NetworkConfig::ring_count)
        .def_readwrite("epem_p", &NetworkConfig::epem_p)
        .def("network_radius_m", &NetworkConfig::network_radius_m)
        .def("ring_width_m", &NetworkConfig::ring_width_m)
        .def("expected_nodes", &NetworkConfig::expected_nodes, py::arg("ring"));

    m.def("validate_network", [](const NetworkConfig& config) { validate(config); });

    py::class_<Ring>(m, "Ring")
        .def_readonly("index", &Ring::index)
        .def_readonly("inner_radius_m", &Ring::inner_radius_m)
        .def_readonly("outer_radius_m", &Ring::outer_radius_m)
        .def_readonly("width_m", &Ring::width_m)
        .def_readonly("area_m2", &Ring::area_m2)
        .def_readonly("expected_nodes", &Ring::expected_nodes);

    m.def("make_ring", &make_ring, py::arg("config"), py::arg("ring"));
    m.def("ring_of_distance", &ring_of_distance, py::arg("config"), py::arg("distance_m"));
    m.def("mean_sq_dist_to_head_m2", &mean_sq_dist_to_head_m2, py::arg("ring"), py::arg("k"));
    m.def("mean_quad_dist_to_bs_m4", &mean_quad_dist_to_bs_m4, py::arg("ring"));
    m.def("cluster_radius_m", &cluster_radius_m, py::arg("ring"), py::arg("k"));

    // planner -----------------------------------------------------------------
    py::enum_<ModelKind>(m, "ModelKind")
        .value("epem", ModelKind::epem)
        .value("uepem", ModelKind::uepem);

    m.def("k_opt_unclamped", &k_opt_unclamped, py::arg("config"), py::arg("radio"),
          py::arg("ring"));
    m.def("k_opt", &k_opt, py::arg("config"), py::arg("radio"), py::arg("ring"));
    m.def("head_count", &head_count, py::arg("config"), py::arg("radio"), py::arg("ring"),
          py::arg("model"));
    m.def("election_probability", &election_probability, py::arg("config"), py::arg("radio"),
          py::arg("ring"), py::arg("model"));
    m.def("ch_energy_j", &ch_energy_j, py::arg("config"), py::arg("radio"), py::arg("ring"),
          py::arg("k"));
    m.def("member_energy_j", &member_energy_j, py::arg("config"), py::arg("radio"),
          py::arg("ring"), py::arg("k"));
    m.def("cluster_energy_j", &cluster_energy_j, py::arg("config"), py::arg("radio"),
          py::arg("ring"), py::arg("k"));
    m.def("ring_total_energy_j", &ring_total_energy_j, py::arg("config"), py::arg("radio"),
          py::arg("ring"), py::arg("k"));
    m.def("ring_total_excl_electronics_j", &ring_total_excl_electronics_j, py::arg("config"),
          py::arg("radio"), py::arg("ring"), py::arg("k"));

    py::class_<RingPlan>(m, "RingPlan")
        .def_readonly("ring", &RingPlan::ring)
        .def_readonly("expected_nodes", &RingPlan::expected_nodes)
        .def_readonly("head_count", &RingPlan::head_count)
        .def_readonly("head_count_unclamped", &RingPlan::head_count_unclamped)
        .def_readonly("election_probability", &RingPlan::election_probability)
        .def_readonly("cluster_radius_m", &RingPlan::cluster_radius_m)
        .def_readonly("cluster_size", &RingPlan::cluster_size)
        .def_readonly("e_head_j", &RingPlan::e_head_j)
        .def_readonly("e_member_j", &RingPlan::e_member_j)
        .def_readonly("e_cluster_j", &RingPlan::e_cluster_j)
        .def_readonly("e_ring_total_j", &RingPlan::e_ring_total_j)
        .def_readonly("e_ring_excl_electronics_j", &RingPlan::e_ring_excl_electronics_j);

    m.def("make_ring_plan", &make_ring_plan, py::arg("config"), py::arg("radio"), py::arg("ring"),
          py::arg("model"));

    py::class_<NetworkPlan>(m, "NetworkPlan")
        .def_readonly("config", &NetworkPlan::config)
        .def_readonly("radio", &NetworkPlan::radio)
        .def_readonly("epem", &NetworkPlan::epem)
        .def_readonly("uepem", &NetworkPlan::uepem)
        .def_readonly("epem_total_j", &NetworkPlan::epem_total_j)
        .def_readonly("uepem_total_j", &NetworkPlan::uepem_total_j);

    m.def("make_network_plan", &make_network_plan, py::arg("config"), py::arg("radio"));

    py::class_<SweepPoint>(m, "SweepPoint")
        .def_readonly("ring_count", &SweepPoint::ring_count)
        .def_readonly("uepem_total_j", &SweepPoint::uepem_total_j)
        .def_readonly("epem_total_j", &SweepPoint::epem_total_j)
        .def_readonly("ratio", &SweepPoint::ratio);

    m.def("ring_sweep", &ring_sweep, py::arg("config"), py::arg("radio"), py::arg("m_min"),
          py::arg("m_max"));
    m.def("hetero_deployment", &hetero_deployment, py::arg("config"), py::arg("radio"));

    // simulator ----------------------------------------------------------------
    py::enum_<AssignPolicy>(m, "AssignPolicy")
        .value("nearest_global", AssignPolicy::nearest_global)
        .value("nearest_in_ring", AssignPolicy::nearest_in_ring);

    py::enum_<BranchMode>(m, "BranchMode")
        .value("paper_faithful", BranchMode::paper_faithful)
        .value("thresholded", BranchMode::thresholded);

    py::class_<Node>(m, "Node")
        .def_readonly("id", &Node::id)
        .def_readonly("x_m", &Node::x_m)
        .def_readonly("y_m", &Node::y_m)
        .def_readonly("dist_to_bs_m", &Node::dist_to_bs_m)
        .def_readonly("ring", &Node::ring);

    py::class_<Deployment>(m, "Deployment")
        .def_readonly("config", &Deployment::config)
        .def_readonly("seed", &Deployment::seed)
        .def_readonly("nodes", &Deployment::nodes)
        .def_readonly("ring_node_count", &Deployment::ring_node_count);

    m.def("deploy", &deploy, py::arg("config"), py::arg("seed"));
    m.def("elect_heads", &elect_heads, py::arg("deployment"), py::arg("ring_probability"),
          py::arg("seed"));

    py::class_<Assignment>(m, "Assignment")
        .def_readonly("policy", &Assignment::policy)
        .def_readonly("head_ids", &Assignment::head_ids)
        .def_readonly("head_of", &Assignment::head_of)
        .def_readonly("dist_to_head_m", &Assignment::dist_to_head_m)
        .def_readonly("fallback_members", &Assignment::fallback_members);

    m.def("assign_members", &assign_members, py::arg("deployment"), py::arg("is_head"),
          py::arg("policy"));

    py::class_<RingBreakdown>(m, "RingBreakdown")
        .def_readonly("total_j", &RingBreakdown::total_j)
        .def_readonly("head_j", &RingBreakdown::head_j)
        .def_readonly("member_j", &RingBreakdown::member_j)
        .def_readonly("electronics_j", &RingBreakdown::electronics_j)
        .def_readonly("heads", &RingBreakdown::heads)
        .def_readonly("members", &RingBreakdown::members)
        .def_readonly("fallback_members", &RingBreakdown::fallback_members);

    py::class_<RoundOutcome>(m, "RoundOutcome")
        .def_readonly("branch", &RoundOutcome::branch)
        .def_readonly("node_energy_j", &RoundOutcome::node_energy_j)
        .def_readonly("cluster_sizes", &RoundOutcome::cluster_sizes)
        .def_readonly("rings", &RoundOutcome::rings)
        .def_readonly("total_j", &RoundOutcome::total_j)
        .def_readonly("fallback_members", &RoundOutcome::fallback_members);

    m.def("simulate_round", &simulate_round, py::arg("deployment"), py::arg("assignment"),
          py::arg("radio"), py::arg("branch"));

    py::class_<MomentEstimate>(m, "MomentEstimate")
        .def_readonly("ring", &MomentEstimate::ring)
        .def_readonly("k", &MomentEstimate::k)
        .def_readonly("samples", &MomentEstimate::samples)
        .def_readonly("z2_mean_m2", &MomentEstimate::z2_mean_m2)
        .def_readonly("z2_se_m2", &MomentEstimate::z2_se_m2)
        .def_readonly("z2_closed_m2", &MomentEstimate::z2_closed_m2)
        .def_readonly("y4_mean_m4", &MomentEstimate::y4_mean_m4)
        .def_readonly("y4_se_m4", &MomentEstimate::y4_se_m4)
        .def_readonly("y4_closed_m4", &MomentEstimate::y4_closed_m4);

    m.def("estimate_moments", &estimate_moments, py::arg("config"), py::arg("k_per_ring"),
          py::arg("samples"), py::arg("seed"));

    py::class_<Stat>(m, "Stat")
        .def_readonly("mean", &Stat::mean)
        .def_readonly("sd", &Stat::sd)
        .def_readonly("se", &Stat::se);

    py::class_<TrialSummary>(m, "TrialSummary")
        .def_readonly("model", &TrialSummary::model)
        .def_readonly("policy", &TrialSummary::policy)
        .def_readonly("branch", &TrialSummary::branch)
        .def_readonly("trials", &TrialSummary::trials)
        .def_readonly("base_seed", &TrialSummary::base_seed)
        .def_readonly("ring_probability", &TrialSummary::ring_probability)
        .def_readonly("binomial_heads", &TrialSummary::binomial_heads)
        .def_readonly("total_j", &TrialSummary::total_j)
        .def_readonly("head_j", &TrialSummary::head_j)
        .def_readonly("member_j", &TrialSummary::member_j)
        .def_readonly("electronics_j", &TrialSummary::electronics_j)
        .def_readonly("head_count", &TrialSummary::head_count)
        .def_readonly("node_count", &TrialSummary::node_count)
        .def_readonly("fallback_members", &TrialSummary::fallback_members)
        .def_readonly("network_total_j", &TrialSummary::network_total_j);

    m.def("run_trials", &run_trials, py::arg("config"), py::arg("radio"), py::arg("model"),
          py::arg("trials"), py::arg("base_seed"), py::arg("policy"), py::arg("branch"),
          py::arg("threads") = 0, py::call_guard<py::gil_scoped_release>());

    // reporting ------------------------------------------------------------------
    py::class_<FigureSeries>(m, "FigureSeries")
        .def_readonly("figure", &FigureSeries::figure)
        .def_readonly("columns", &FigureSeries::columns)
        .def_readonly("rows", &FigureSeries::rows);

    m.def("format_value", &format_value, py::arg("value"));
    m.def("to_csv", &to_csv, py::arg("series"));
    m.def("to_json", &to_json, py::arg("series"));
    m.def("plan_table", &plan_table, py::arg("plan"));
    m.def("analytic_figures", &analytic_figures, py::arg("plan"));
    m.def("sweep_figure", &sweep_figure, py::arg("sweep"));
    m.def("hetero_table", &hetero_table, py::arg("counts"));
    m.def("moments_table", &moments_table, py::arg("moments"));
    m.def("simulate_table", &simulate_table, py::arg("plan"), py::arg("uepem"), py::arg("epem"));
    m.def("render_svg", &render_svg, py::arg("deployment"), py::arg("is_head"),
          py::arg("assignment"));

    m.def("derive_seed", &derive_seed, py::arg("base"), py::arg("index"));
}
