import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import CM, ZD, E
from zdgraphs.errors import InputError, ResourceError, UnsupportedModeError
from zdgraphs.ring import (
    ElementKind,
    FiniteSpace,
    GraphKind,
    ModelConfig,
    RingElement,
    adjacent_comaximal,
    adjacent_zero_divisor,
    add,
    build_graph,
    characteristic_function,
    classify,
    cozero_set,
    elements,
    is_prime,
    multiply,
    vertex_count_formula,
    vertices,
    zero_set,
)


def test_parse_model_spec():
    cfg = ModelConfig.parse("X=3,a=2")
    assert (cfg.n_points, cfg.alphabet_size, cfg.mode) == (3, 2, "support")
    assert str(ModelConfig.parse(" X = 4 , a = 5 , mode = field ")) == "X=4,a=5,mode=field"
    for bad in ["X=3", "a=2,X=3", "X=0,a=2", "X=3,a=1", "X=3,a=2,mode=weird", "X=3,a=99,mode=field"]:
        with pytest.raises(InputError):
            ModelConfig.parse(bad)


def test_field_mode_requires_prime():
    assert [k for k in range(20) if is_prime(k)] == [2, 3, 5, 7, 11, 13, 17, 19]
    with pytest.raises(InputError):
        ModelConfig.of(3, 4, "field")
    with pytest.raises(UnsupportedModeError):
        ModelConfig.of(3, 4).require_field()


def test_zero_and_cozero_sets():
    assert zero_set(E(2, 0, 0, 0)) == {0, 1, 2}
    f = E(2, 1, 0, 0)
    assert zero_set(f) == {1, 2} and cozero_set(f) == {0}
    assert zero_set(E(3, 1, 2, 0)) == {2}


def test_classify():
    assert classify(E(2, 0, 0, 0)) is ElementKind.ZERO
    assert classify(E(3, 1, 2, 1)) is ElementKind.UNIT
    assert classify(E(2, 1, 0, 0)) is ElementKind.VERTEX
    assert ElementKind.VERTEX.value == "zero-divisor-vertex"


def test_element_validation():
    with pytest.raises(InputError):
        RingElement((0, 3), 3)
    with pytest.raises(InputError):
        RingElement((), 3)
    with pytest.raises(InputError):
        ModelConfig.of(3, 3).element((1, 0))


def test_adjacency_examples():
    assert adjacent_zero_divisor(E(2, 1, 0, 0), E(2, 0, 1, 1))
    assert not adjacent_zero_divisor(E(2, 1, 1, 0), E(2, 1, 0, 1))
    assert adjacent_comaximal(E(2, 1, 1, 0), E(2, 1, 0, 1))
    assert not adjacent_comaximal(E(2, 1, 0, 0), E(2, 0, 1, 0))
    assert adjacent_comaximal(E(2, 1, 0, 0), E(2, 0, 1, 1))
    field = ModelConfig.of(3, 3, "field")
    f, g = field.element((1, 0, 0)), field.element((2, 0, 0))
    assert multiply(f, g) == field.element((2, 0, 0))
    assert not adjacent_zero_divisor(f, g)


def test_mixed_models_rejected():
    with pytest.raises(InputError):
        adjacent_zero_divisor(E(2, 1, 0), E(3, 1, 0))
    with pytest.raises(InputError):
        adjacent_comaximal(E(2, 1, 0), E(2, 1, 0, 0))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([2, 3, 5]), st.integers(1, 4), st.data())
def test_field_adjacency_is_genuine_ring_arithmetic(p, n, data):
    cfg = ModelConfig.of(n, p, "field")
    vals = st.lists(st.integers(0, p - 1), min_size=n, max_size=n)
    f, g = cfg.element(data.draw(vals)), cfg.element(data.draw(vals))
    # fg = 0 exactly when supports are disjoint; Z(f) and Z(g) disjoint
    # exactly when some uf + vg is a unit
    assert adjacent_zero_divisor(f, g) == (multiply(f, g) == cfg.zero)
    if p**n <= 27:
        comax = any(
            classify(add(multiply(u, f), multiply(v, g))) is ElementKind.UNIT
            for u in elements(cfg)
            for v in elements(cfg)
        )
        assert adjacent_comaximal(f, g) == comax


@pytest.mark.parametrize("n,a,count", [(3, 2, 6), (3, 3, 18), (1, 5, 0), (1, 2, 0), (4, 3, 64)])
def test_vertex_counts(n, a, count):
    cfg = ModelConfig.of(n, a)
    assert vertex_count_formula(cfg) == count
    for kind in GraphKind:
        assert build_graph(cfg, kind).vertex_count == count


def test_enumeration_order_and_cap():
    cfg = ModelConfig.of(2, 3)
    vals = [f.values for f in elements(cfg)]
    assert vals == list(itertools.product(range(3), repeat=2))
    assert [f.values for f in vertices(cfg)] == [(0, 1), (0, 2), (1, 0), (2, 0)]
    with pytest.raises(ResourceError):
        list(elements(ModelConfig.of(20, 3)))
    with pytest.raises(ResourceError):
        build_graph(ModelConfig.of(5, 3), ZD, cap=100)


@pytest.mark.parametrize("n,a", [(2, 2), (3, 2), (3, 3), (4, 2), (2, 4)])
def test_build_graph_matches_pairwise_predicates(n, a):
    cfg = ModelConfig.of(n, a)
    for kind, rel in ((ZD, adjacent_zero_divisor), (CM, adjacent_comaximal)):
        g = build_graph(cfg, kind)
        for u, v in itertools.combinations(range(g.vertex_count), 2):
            assert g.has_edge(u, v) == rel(g.label(u), g.label(v))


def test_characteristic_function():
    cfg = ModelConfig.of(3, 2)
    assert characteristic_function(cfg, set()) == cfg.zero
    assert characteristic_function(cfg, {1, 2}) == cfg.element((0, 1, 1))
    assert characteristic_function(cfg, {0, 1, 2}) == cfg.one
    with pytest.raises(InputError):
        characteristic_function(cfg, {3})


def test_interior_hook_is_identity():
    space = FiniteSpace(4)
    assert space.interior({1, 3}) == {1, 3}
    with pytest.raises(InputError):
        FiniteSpace(0)


def test_element_serialisation():
    f = E(3, 1, 2, 0)
    assert str(f) == "(1,2,0)" and f.to_json() == [1, 2, 0]
    assert ModelConfig.of(3, 5, "field").to_json() == {"X": 3, "a": 5, "mode": "field"}
