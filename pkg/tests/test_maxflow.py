import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strongcuts import ABOVE_BOUND, INF, build_flow_net, min_cut_value
from strongcuts.oracle import brute_min_cut, random_cone_corpus


def test_chain_arcs(chain_cone):
    net = build_flow_net(chain_cone, {0: 1, 1: 1})
    s, t = net.source, net.sink
    assert net.arcs == [(0, 1, 1), (1, 2, 1), (s, 0, INF), (2, t, INF)]


def test_diamond_arcs(diamond_cone):
    arcs = build_flow_net(diamond_cone, [1] * 4).arcs
    assert sum(1 for a in arcs if a[2] == 1) == 4
    assert sum(1 for a in arcs if a[2] == INF) == 2


def test_empty_capacity_map_rejected(chain_cone):
    with pytest.raises(ValueError):
        build_flow_net(chain_cone, {})


def test_bad_capacity_rejected(chain_cone):
    with pytest.raises(ValueError):
        build_flow_net(chain_cone, [1, 2])


def test_examples(chain_cone, diamond_cone):
    assert min_cut_value(build_flow_net(chain_cone, [1, 1]), 5) == 1
    assert min_cut_value(build_flow_net(diamond_cone, [1] * 4), 5) == 2
    assert min_cut_value(build_flow_net(chain_cone, [1, INF]), 5) == 1


def test_above_bound(diamond_cone):
    assert min_cut_value(build_flow_net(diamond_cone, [1] * 4), 1) is ABOVE_BOUND


def test_bound_must_be_positive(chain_cone):
    with pytest.raises(ValueError):
        min_cut_value(build_flow_net(chain_cone, [1, 1]), 0)


def test_infinite_path_is_above_bound(chain_cone):
    assert min_cut_value(build_flow_net(chain_cone, [INF, INF]), 3) is ABOVE_BOUND


def _random_caps(cone, rng_seed):
    import numpy as np

    rng = np.random.default_rng(rng_seed)
    caps = [INF if x else 1 for x in rng.random(cone.line_count) < 0.3]
    finite = [i for i, c in enumerate(caps) if c == 1]
    for i in finite[15:]:
        caps[i] = INF
    return caps


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 6))
def test_agrees_with_oracle(seed, bound):
    for _, cone in random_cone_corpus(2, seed=seed):
        caps = _random_caps(cone, seed)
        exact = brute_min_cut(cone, caps)
        got = min_cut_value(build_flow_net(cone, caps), bound)
        if exact <= bound:
            assert got == exact
        else:
            assert got is ABOVE_BOUND


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_monotone_in_capacity(seed):
    for _, cone in random_cone_corpus(2, seed=seed):
        caps = _random_caps(cone, seed)
        before = min_cut_value(build_flow_net(cone, caps), 20)
        raised = list(caps)
        raised[seed % cone.line_count] = INF
        after = min_cut_value(build_flow_net(cone, raised), 20)
        assert after >= before
