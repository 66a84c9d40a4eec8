import itertools

import pytest

from conftest import CM, ZD, E, model_graph
from zdgraphs import formulas as F
from zdgraphs.errors import InputError, UnsupportedDomainError
from zdgraphs.graph import NO_CYCLE, distance_matrix, eccentricities, smallest_cycle_through_pair
from zdgraphs.ring import FiniteSpace, ModelConfig


def test_distance_zd_examples():
    assert F.predict_distance_zd(E(2, 1, 0, 0), E(2, 0, 1, 1)).value == 1
    p = F.predict_distance_zd(E(2, 1, 0, 0), E(2, 1, 1, 0))
    assert p.value == 2 and p.rule_fired == "zd-distance:interiors-meet"
    assert F.predict_distance_zd(E(2, 1, 1, 0), E(2, 1, 0, 1)).value == 3


def test_distance_comax_examples():
    assert F.predict_distance_comax(E(2, 1, 1, 0), E(2, 1, 0, 1)).value == 1
    assert F.predict_distance_comax(E(2, 1, 0, 0), E(2, 1, 1, 0)).value == 2
    p = F.predict_distance_comax(E(2, 1, 0, 0), E(2, 0, 1, 0))
    assert p.value == 3 and p.rule_fired == "comax-distance:meet-and-cover"


def test_pair_predictions_reject_bad_input():
    f = E(2, 1, 0, 0)
    with pytest.raises(InputError):
        F.predict_distance_zd(f, f)
    with pytest.raises(InputError):
        F.predict_cycle_comax(f, E(2, 1, 1, 1))
    with pytest.raises(InputError):
        F.predict_distance_comax(f, E(3, 0, 1, 1))


def test_eccentricity_examples():
    assert F.predict_eccentricity_zd(E(2, 1, 0, 0)) == 2
    assert F.predict_eccentricity_zd(E(3, 0, 2, 0)) == 2
    assert F.predict_eccentricity_zd(E(3, 1, 2, 0)) == 3
    with pytest.raises(UnsupportedDomainError):
        F.predict_eccentricity_zd(E(3, 1, 0))


def test_cycle_zd_examples():
    assert F.predict_cycle_zd(E(3, 1, 0, 0), E(3, 0, 1, 1)).value == 4
    assert F.predict_cycle_zd(E(3, 1, 1, 0), E(3, 0, 0, 1)).value == 4
    assert F.predict_cycle_zd(E(3, 1, 0, 0), E(3, 0, 1, 0)).value == 3
    assert F.predict_cycle_zd(E(3, 1, 1, 0), E(3, 1, 0, 1)).value == 6


def test_cycle_comax_examples():
    assert F.predict_cycle_comax(E(3, 1, 1, 0), E(3, 1, 0, 1)).value == 3
    assert F.predict_cycle_comax(E(3, 1, 0, 0), E(3, 0, 1, 1)).value == 4
    assert F.predict_cycle_comax(E(3, 1, 0, 0), E(3, 0, 1, 0)).value == 6


def test_cycle_examples_confirmed_by_oracle():
    g1, g2 = model_graph(3, 3, ZD), model_graph(3, 3, CM)
    cases = [
        (g1, F.predict_cycle_zd, (1, 0, 0), (0, 1, 1)),
        (g1, F.predict_cycle_zd, (1, 0, 0), (0, 1, 0)),
        (g1, F.predict_cycle_zd, (1, 1, 0), (1, 0, 1)),
        (g2, F.predict_cycle_comax, (1, 1, 0), (1, 0, 1)),
        (g2, F.predict_cycle_comax, (1, 0, 0), (0, 1, 1)),
        (g2, F.predict_cycle_comax, (1, 0, 0), (0, 1, 0)),
    ]
    for g, predict, fv, gv in cases:
        f, h = E(3, *fv), E(3, *gv)
        assert smallest_cycle_through_pair(g, g.vertex_of(f), g.vertex_of(h)) == predict(f, h).value


def test_triangle_examples():
    assert not F.in_triangle_zd(E(2, 1, 1, 0))
    assert F.in_triangle_zd(E(2, 1, 0, 0))
    assert not F.in_triangle_comax(E(2, 1, 0, 0))
    assert F.in_triangle_comax(E(3, 1, 2, 0))


def test_orthogonality_examples():
    f = E(2, 1, 0, 0)
    assert F.complement_witness_zd(f) == E(2, 0, 1, 1)
    assert F.orthogonal_zd(f, E(2, 0, 1, 1))
    assert F.complement_witness_zd(E(3, 1, 2, 0)) == E(3, 0, 0, 1)
    assert not F.orthogonal_zd(f, E(2, 0, 1, 0))
    assert F.complement_witness_comax(E(3, 1, 2, 0)) == E(3, 0, 0, 1)


def test_space_predicates():
    for n in range(1, 5):
        s = FiniteSpace(n)
        assert F.has_isolated_point(s) and F.is_p_space(s)


@pytest.mark.parametrize("n,a,kind", [(3, 2, CM), (4, 3, ZD), (2, 3, ZD), (2, 3, CM)])
def test_predict_complemented_examples(n, a, kind):
    assert F.predict_complemented(ModelConfig.of(n, a), kind)


def test_graph_level_predictions():
    cfg = ModelConfig.of(3, 3)
    assert not F.predict_triangulated(cfg, ZD) and not F.predict_hypertriangulated(cfg, CM)
    assert F.predict_diameter_zd(cfg) == F.predict_girth_zd(cfg) == 3
    assert F.predict_diameter_comax(cfg) == 3
    assert F.predict_diameter_comax(ModelConfig.of(2, 3)) == 2
    assert not F.predict_comax_radius_three(cfg)
    with pytest.raises(UnsupportedDomainError):
        F.predict_diameter_zd(ModelConfig.of(2, 3))
    with pytest.raises(UnsupportedDomainError):
        F.predict_diameter_comax(ModelConfig.of(1, 3))


SWEEP = [(n, a) for n in (2, 3, 4) for a in (2, 3)]


@pytest.mark.parametrize("n,a", SWEEP)
def test_distance_formulas_match_bfs(n, a):
    for kind, predict in ((ZD, F.predict_distance_zd), (CM, F.predict_distance_comax)):
        g = model_graph(n, a, kind)
        dm = distance_matrix(g)
        for u, v in itertools.combinations(range(g.vertex_count), 2):
            assert predict(g.label(u), g.label(v)).value == dm[u, v], (g.label(u), g.label(v))


@pytest.mark.parametrize("n,a", [(3, 2), (3, 3), (4, 2), (4, 3)])
def test_eccentricity_formula_matches_bfs(n, a):
    g = model_graph(n, a, ZD)
    ecc = eccentricities(g)
    assert all(F.predict_eccentricity_zd(f) == ecc[u] for u, f in enumerate(g.labels))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_cycle_formulas_exact_for_ternary_alphabet(n):
    for kind, predict in ((ZD, F.predict_cycle_zd), (CM, F.predict_cycle_comax)):
        g = model_graph(n, 3, kind)
        for u, v in itertools.combinations(range(g.vertex_count), 2):
            assert smallest_cycle_through_pair(g, u, v) == predict(g.label(u), g.label(v)).value


def test_cycle_formulas_binary_collapse():
    g = model_graph(3, 2, ZD)
    f, h = E(2, 0, 0, 1), E(2, 0, 1, 1)
    assert F.predict_cycle_zd(f, h).value == 4
    assert smallest_cycle_through_pair(g, g.vertex_of(f), g.vertex_of(h)) is NO_CYCLE


@pytest.mark.parametrize("n,a", SWEEP)
def test_prediction_never_exceeds_reality_in_binary_models(n, a):
    # wherever a cycle exists the formula is still exact; a = 2 only loses cycles
    for kind, predict in ((ZD, F.predict_cycle_zd), (CM, F.predict_cycle_comax)):
        g = model_graph(n, a, kind)
        for u, v in itertools.combinations(range(g.vertex_count), 2):
            c = smallest_cycle_through_pair(g, u, v)
            if c is not NO_CYCLE:
                assert c >= predict(g.label(u), g.label(v)).value
