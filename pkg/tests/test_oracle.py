import math

import numpy as np
import pytest

from strongcuts import build_ldg, extract_cone, parse_edgelist
from strongcuts.oracle import (
    OracleSizeError,
    brute_min_cut,
    brute_min_mis,
    brute_mis,
    brute_strong_cuts,
    brute_unidirectional_node_cuts,
    random_cone_corpus,
    random_layered_dag,
)

P3 = np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=bool)


def lines_of(cuts):
    return sorted(c.lines for c in cuts)


def test_strong_cuts(chain_cone, diamond_cone):
    assert lines_of(brute_strong_cuts(chain_cone, 1)) == [(0,), (1,)]
    assert lines_of(brute_strong_cuts(diamond_cone, 2)) == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert brute_strong_cuts(diamond_cone, 1) == set()


def test_mis():
    k2 = np.array([[0, 1], [1, 0]], dtype=bool)
    assert sorted(m.members for m in brute_mis(k2, 1)) == [(0,), (1,)]
    assert [m.members for m in brute_mis(np.zeros((3, 3), dtype=bool), 3)] == [(0, 1, 2)]
    assert sorted(m.members for m in brute_mis(P3, 2)) == [(0, 2), (1,)]


def test_min_mis(diamond_cone):
    assert brute_min_mis(P3, [1]) == 1
    assert brute_min_mis(P3, [0]) == 2
    assert brute_min_mis(build_ldg(diamond_cone), [0, 3]) == 2
    with pytest.raises(ValueError):
        brute_min_mis(P3, [0, 1])


def test_min_cut(chain_cone, diamond_cone):
    assert brute_min_cut(chain_cone, [1, 1]) == 1
    assert brute_min_cut(diamond_cone, [1] * 4) == 2
    assert brute_min_cut(chain_cone, [math.inf, math.inf]) == math.inf


def test_unidirectional_node_cuts(chain_cone, diamond_cone):
    assert sorted(c.nodes for c in brute_unidirectional_node_cuts(chain_cone, 2)) == [(0,), (1,)]
    got = sorted(c.nodes for c in brute_unidirectional_node_cuts(diamond_cone, 2))
    assert got == [(0,), (0, 1), (0, 2), (1, 2)]
    single_and = extract_cone(parse_edgelist("inputs: 0 1\n0 2\n1 2\n"), 2)
    assert [c.nodes for c in brute_unidirectional_node_cuts(single_and, 2)] == [(0, 1)]


def test_size_guards():
    dag = random_layered_dag(60, 6, seed=1, width=6)
    cone = extract_cone(dag, 59)
    assert cone.line_count > 20
    with pytest.raises(OracleSizeError):
        brute_strong_cuts(cone, 2)
    with pytest.raises(OracleSizeError):
        brute_unidirectional_node_cuts(cone, 2)
    with pytest.raises(OracleSizeError):
        brute_min_cut(cone, [1] * cone.line_count)
    with pytest.raises(OracleSizeError):
        brute_mis(np.zeros((21, 21), dtype=bool), 2)
    with pytest.raises(OracleSizeError):
        brute_min_mis(np.zeros((19, 19), dtype=bool), [0])


def test_generator_is_seeded():
    a = random_layered_dag(50, 5, seed=9)
    assert a == random_layered_dag(50, 5, seed=9)
    assert a != random_layered_dag(50, 5, seed=10)
    assert all(len(f) <= 2 for f in a.fanins)


def test_corpus_shape():
    corpus = random_cone_corpus(300, seed=7)
    assert len(corpus) == 300
    for _, cone in corpus:
        assert len(cone.nodes) <= 12
        assert 4 <= cone.line_count <= 18
