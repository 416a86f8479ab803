"""Smoke tests for the python bindings."""

import pytest

import tsskit as tss


def bowtie():
    return tss.build_network(
        5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)], [2, 2, 2, 2, 2]
    )


def test_build_and_inspect():
    net = bowtie()
    assert net.n == 5
    assert net.degree(2) == 4
    assert net.has_edge(0, 1)
    assert tss.distance(net, 0, 4) == 2


def test_build_rejects_self_loop():
    with pytest.raises(ValueError):
        tss.build_network(2, [(0, 0)], [1, 1])


def test_closure_rounds():
    p3 = tss.build_network(3, [(0, 1), (1, 2)], [1, 1, 1])
    act = tss.closure(p3, [0])
    assert act.active == [0, 1, 2]
    assert act.round_of == [0, 1, 2]
    assert act.convinced_sequence == [1, 2]
    assert tss.is_target_set(p3, [0])


def test_solver_matches_oracle_on_bowtie():
    net = bowtie()
    report = tss.solve_block_cactus(net)
    assert report.size == 2
    assert tss.is_target_set(net, report.seed)
    assert tss.brute_force_min_seed(net).size == 2
    assert tss.classify_graph(net) == tss.GraphClass.BlockCactus


def test_chordal_solver():
    diamond = tss.build_network(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)], [2, 2, 2, 2])
    report = tss.solve_chordal(diamond)
    assert report.size == 2
    assert tss.is_target_set(diamond, report.seed)


def test_hamming_formula_and_construction():
    spec = tss.make_hamming_spec([3, 3])
    assert tss.min_seed_formula(spec.t()) == 2
    seeds = tss.optimal_seed(spec)
    assert seeds == [[1, 0], [0, 1]]
    net = tss.hamming_graph(spec)
    ids = [tss.tuple_to_id(spec, s) for s in seeds]
    assert tss.is_target_set(net, ids)
    union = tss.closure_subcubes(spec, seeds)
    assert union.member_count(spec) == 9


def test_file_round_trip():
    net = bowtie()
    text = tss.serialize_network(net)
    again = tss.parse_network_file(text).net
    assert again.theta == net.theta
    assert tss.serialize_network(again) == text


def test_generators_deterministic():
    params = tss.BlockCactusParams()
    params.blocks = 4
    a = tss.gen_block_cactus(11, params)
    b = tss.gen_block_cactus(11, params)
    assert tss.serialize_network(a) == tss.serialize_network(b)
    assert tss.classify_graph(a) == tss.GraphClass.BlockCactus
