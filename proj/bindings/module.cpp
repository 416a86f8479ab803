#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tss/block_cut_tree.hpp"
#include "tss/chordality.hpp"
#include "tss/diffusion.hpp"
#include "tss/generators.hpp"
#include "tss/hamming.hpp"
#include "tss/io.hpp"
#include "tss/oracle.hpp"
#include "tss/solver.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_tss, m) {
    m.doc() = "Exact target set selection solvers (block-cactus, chordal <=2, Hamming)";
    m.attr("__version__") = "0.1.0";

    py::register_exception<tss::ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<tss::ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<tss::DisconnectedError>(m, "DisconnectedError", PyExc_ValueError);
    py::register_exception<tss::WrongClassError>(m, "WrongClassError", PyExc_ValueError);
    py::register_exception<tss::WrongThresholdsError>(m, "WrongThresholdsError", PyExc_ValueError);
    py::register_exception<tss::TooLargeError>(m, "TooLargeError", PyExc_ValueError);
    py::register_exception<tss::OracleLimitError>(m, "OracleLimitError", PyExc_ValueError);

    py::class_<tss::ThresholdedNetwork>(m, "ThresholdedNetwork")
        .def_readonly("n", &tss::ThresholdedNetwork::n)
        .def_readonly("adj", &tss::ThresholdedNetwork::adj)
        .def_readonly("theta", &tss::ThresholdedNetwork::theta)
        .def("degree", &tss::ThresholdedNetwork::degree)
        .def("has_edge", &tss::ThresholdedNetwork::has_edge)
        .def("edges", &tss::ThresholdedNetwork::edges)
        .def("__repr__", [](const tss::ThresholdedNetwork& net) {
            return "<ThresholdedNetwork n=" + std::to_string(net.n) + " m=" +
                   std::to_string(net.edge_count()) + ">";
        });

    m.def("build_network", &tss::build_network, py::arg("n"), py::arg("edges"), py::arg("theta"));
    m.def("distance", &tss::distance, py::arg("net"), py::arg("u"), py::arg("v"));
    m.def("is_connected", &tss::is_connected);

    py::class_<tss::ActivationResult>(m, "ActivationResult")
        .def_readonly("round_of", &tss::ActivationResult::round_of)
        .def_readonly("active", &tss::ActivationResult::active)
        .def_readonly("convinced_sequence", &tss::ActivationResult::convinced_sequence)
        .def("rounds", &tss::ActivationResult::rounds);

    m.def("closure", &tss::closure, py::arg("net"), py::arg("seeds"));
    m.def(
        "closure_sequential",
        [](const tss::ThresholdedNetwork& net, const std::vector<int>& seeds,
           const std::optional<std::vector<int>>& priority) {
            return tss::closure_sequential(net, seeds, priority ? &*priority : nullptr);
        },
        py::arg("net"), py::arg("seeds"), py::arg("priority") = std::nullopt);
    m.def("is_target_set", &tss::is_target_set, py::arg("net"), py::arg("seeds"));

    py::class_<tss::ReducedNetwork>(m, "ReducedNetwork")
        .def_readonly("net", &tss::ReducedNetwork::net)
        .def_readonly("old_of_new", &tss::ReducedNetwork::old_of_new)
        .def_readonly("new_of_old", &tss::ReducedNetwork::new_of_old);
    m.def("reduce_for_removed_vertex", &tss::reduce_for_removed_vertex);
    m.def("reduce_cut_threshold", &tss::reduce_cut_threshold);

    py::enum_<tss::BlockClass>(m, "BlockClass")
        .value("Edge", tss::BlockClass::Edge)
        .value("Complete", tss::BlockClass::Complete)
        .value("Cycle", tss::BlockClass::Cycle)
        .value("TwoConnectedChordal", tss::BlockClass::TwoConnectedChordal)
        .value("Other", tss::BlockClass::Other);
    py::enum_<tss::GraphClass>(m, "GraphClass")
        .value("BlockCactus", tss::GraphClass::BlockCactus)
        .value("ChordalThetaLe2", tss::GraphClass::ChordalThetaLe2)
        .value("General", tss::GraphClass::General);

    py::class_<tss::BlockCutTree::PeelStep>(m, "PeelStep")
        .def_readonly("block", &tss::BlockCutTree::PeelStep::block)
        .def_readonly("cut_vertex", &tss::BlockCutTree::PeelStep::cut_vertex);
    py::class_<tss::BlockCutTree>(m, "BlockCutTree")
        .def_readonly("blocks", &tss::BlockCutTree::blocks)
        .def_readonly("cut_vertices", &tss::BlockCutTree::cut_vertices)
        .def_readonly("cuts_of_block", &tss::BlockCutTree::cuts_of_block)
        .def_readonly("blocks_of_cut", &tss::BlockCutTree::blocks_of_cut)
        .def_readonly("processing_order", &tss::BlockCutTree::processing_order);
    m.def("block_cut_tree", &tss::block_cut_tree);
    m.def("classify_block", &tss::classify_block);
    m.def("classify_graph", &tss::classify_graph);

    py::class_<tss::ChordalityResult>(m, "ChordalityResult")
        .def_readonly("chordal", &tss::ChordalityResult::chordal)
        .def_readonly("peo", &tss::ChordalityResult::peo)
        .def_readonly("witness_cycle", &tss::ChordalityResult::witness_cycle);
    m.def("recognize_chordal", &tss::recognize_chordal);
    m.def("verify_peo", &tss::verify_peo);

    py::class_<tss::OracleResult>(m, "OracleResult")
        .def_readonly("size", &tss::OracleResult::size)
        .def_readonly("witness", &tss::OracleResult::witness);
    m.def("brute_force_min_seed", &tss::brute_force_min_seed, py::arg("net"),
          py::arg("cap") = std::nullopt, py::arg("prune") = true);
    m.def("enumerate_optimal_sets", &tss::enumerate_optimal_sets);
    py::class_<tss::PendantOracle>(m, "PendantOracle")
        .def_readonly("seed", &tss::PendantOracle::seed)
        .def_readonly("gain", &tss::PendantOracle::gain);
    m.def("best_pendant_seed", &tss::best_pendant_seed);

    py::enum_<tss::SolverKind>(m, "SolverKind")
        .value("BlockCactus", tss::SolverKind::BlockCactus)
        .value("Chordal", tss::SolverKind::Chordal);
    py::class_<tss::BlockTrace>(m, "BlockTrace")
        .def_readonly("block", &tss::BlockTrace::block)
        .def_readonly("cut_vertex", &tss::BlockTrace::cut_vertex)
        .def_readonly("local_seed", &tss::BlockTrace::local_seed)
        .def_readonly("gain", &tss::BlockTrace::gain);
    py::class_<tss::SolveReport>(m, "SolveReport")
        .def_readonly("seed", &tss::SolveReport::seed)
        .def_readonly("size", &tss::SolveReport::size)
        .def_readonly("solver", &tss::SolveReport::solver)
        .def_readonly("per_block_trace", &tss::SolveReport::per_block_trace);
    m.def("solve_block_cactus", &tss::solve_block_cactus);
    m.def("solve_chordal", &tss::solve_chordal);

    py::class_<tss::PendantResult>(m, "PendantResult")
        .def_readonly("seed", &tss::PendantResult::seed)
        .def_readonly("gain", &tss::PendantResult::gain);
    m.def("pendant_complete_solve", &tss::pendant_complete_solve);
    m.def("complete_closure_size", &tss::complete_closure_size);
    m.def("pendant_cycle_solve", &tss::pendant_cycle_solve);
    m.def("base_complete_solve", &tss::base_complete_solve);
    m.def("base_cycle_solve", &tss::base_cycle_solve);
    m.def("path_optimal_seed", &tss::path_optimal_seed);

    py::class_<tss::ChordalBlockAnalysis>(m, "ChordalBlockAnalysis")
        .def_readonly("I", &tss::ChordalBlockAnalysis::I)
        .def_readonly("J", &tss::ChordalBlockAnalysis::J)
        .def_readonly("J0", &tss::ChordalBlockAnalysis::J0)
        .def_readonly("P1", &tss::ChordalBlockAnalysis::P1)
        .def_readonly("P2", &tss::ChordalBlockAnalysis::P2)
        .def_readonly("Q1", &tss::ChordalBlockAnalysis::Q1)
        .def_readonly("Q2", &tss::ChordalBlockAnalysis::Q2);
    m.def("analyze_block", &tss::analyze_block, py::arg("block"), py::arg("v") = std::nullopt);
    m.def("pendant_chordal_solve", &tss::pendant_chordal_solve);
    m.def("base_2connected_chordal_solve", &tss::base_2connected_chordal_solve);

    py::class_<tss::HammingSpec>(m, "HammingSpec")
        .def_readonly("dims", &tss::HammingSpec::dims)
        .def("t", &tss::HammingSpec::t)
        .def("vertex_count", &tss::HammingSpec::vertex_count);
    m.def("make_hamming_spec", &tss::make_hamming_spec);
    py::class_<tss::Subcube>(m, "Subcube")
        .def_readonly("rep", &tss::Subcube::rep)
        .def_readonly("fixed", &tss::Subcube::fixed)
        .def("__eq__", [](const tss::Subcube& a, const tss::Subcube& b) { return a == b; });
    py::class_<tss::SubcubeUnion>(m, "SubcubeUnion")
        .def_readonly("parts", &tss::SubcubeUnion::parts)
        .def("member_count", &tss::SubcubeUnion::member_count);
    m.def("make_subcube", &tss::make_subcube);
    m.def("hamming_graph", &tss::hamming_graph, py::arg("spec"), py::arg("limit") = 100000);
    m.def("hamming_distance", &tss::hamming_distance);
    m.def("subcube_distance", &tss::subcube_distance);
    m.def("merge_step", &tss::merge_step);
    m.def("closure_subcubes", &tss::closure_subcubes);
    m.def("star_lower_bound_holds", &tss::star_lower_bound_holds);
    m.def("optimal_seed", &tss::optimal_seed);
    m.def("min_seed_formula", &tss::min_seed_formula);
    m.def("tuple_to_id", &tss::tuple_to_id);
    m.def("id_to_tuple", &tss::id_to_tuple);
    m.def("subcube_members", &tss::subcube_members);

    py::class_<tss::ParsedInstance>(m, "ParsedInstance")
        .def_readonly("net", &tss::ParsedInstance::net)
        .def_readonly("hamming", &tss::ParsedInstance::hamming);
    m.def("parse_network_file", &tss::parse_network_file, py::arg("text"),
          py::arg("hamming_limit") = 100000);
    m.def("serialize_network", &tss::serialize_network);

    py::class_<tss::BlockCactusParams>(m, "BlockCactusParams")
        .def(py::init<>())
        .def_readwrite("blocks", &tss::BlockCactusParams::blocks)
        .def_readwrite("min_size", &tss::BlockCactusParams::min_size)
        .def_readwrite("max_size", &tss::BlockCactusParams::max_size)
        .def_readwrite("cycle_fraction", &tss::BlockCactusParams::cycle_fraction)
        .def_readwrite("constant_theta", &tss::BlockCactusParams::constant_theta);
    py::class_<tss::ChordalParams>(m, "ChordalParams")
        .def(py::init<>())
        .def_readwrite("n", &tss::ChordalParams::n)
        .def_readwrite("width", &tss::ChordalParams::width)
        .def_readwrite("theta_weights", &tss::ChordalParams::theta_weights);
    m.def("gen_block_cactus", &tss::gen_block_cactus, py::arg("seed"), py::arg("params"));
    m.def("gen_chordal", &tss::gen_chordal, py::arg("seed"), py::arg("params"));
}
