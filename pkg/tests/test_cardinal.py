import pytest

from zdgraphs.cardinal import (
    ALEPH0,
    ASSUMPTION,
    CONTINUUM,
    TWO_TO_C,
    Cardinal,
    class_size_condition,
    complement,
    finite,
    noniso_certificate,
    power,
    verdict,
)
from zdgraphs.errors import AmbiguityError, InputError, UnsupportedCardinalError


def test_total_order():
    chain = [finite(0), finite(7), ALEPH0, CONTINUUM, TWO_TO_C]
    assert chain == sorted(reversed(chain))
    assert finite(2) < finite(3) and max(chain) is TWO_TO_C


def test_power_rules():
    assert power(CONTINUUM, ALEPH0) == CONTINUUM
    assert power(CONTINUUM, CONTINUUM) == TWO_TO_C > CONTINUUM
    assert power(finite(3), finite(2)) == finite(9)
    assert CONTINUUM ** finite(5) == CONTINUUM


@pytest.mark.parametrize(
    "base,exp",
    [(CONTINUUM, finite(0)), (ALEPH0, ALEPH0), (TWO_TO_C, finite(1)), (CONTINUUM, TWO_TO_C), (finite(2), ALEPH0)],
)
def test_power_outside_fragment(base, exp):
    with pytest.raises(UnsupportedCardinalError):
        power(base, exp)


def test_power_monotone_in_exponent():
    exps = [finite(1), finite(4), ALEPH0, CONTINUUM]
    vals = [power(CONTINUUM, e) for e in exps]
    assert vals == sorted(vals)


def test_complement():
    assert complement(finite(5), finite(2)) == finite(3)
    assert complement(ALEPH0, finite(2)) == ALEPH0
    assert complement(CONTINUUM, ALEPH0) == CONTINUUM
    with pytest.raises(AmbiguityError):
        complement(CONTINUUM, CONTINUUM)
    with pytest.raises(InputError):
        complement(finite(2), finite(3))


def test_class_size_condition_examples():
    assert class_size_condition(ALEPH0, finite(2))
    assert not class_size_condition(CONTINUUM, finite(1))
    assert class_size_condition(finite(3), finite(1))
    assert all(class_size_condition(ALEPH0, finite(k)) for k in range(10))
    with pytest.raises(AmbiguityError):
        class_size_condition(ALEPH0, ALEPH0)


def test_certificate_examples():
    cert = noniso_certificate(CONTINUUM)
    assert cert.pair == (CONTINUUM, TWO_TO_C)
    assert cert.assumption == ASSUMPTION == "CH"
    assert noniso_certificate(ALEPH0) is None
    assert noniso_certificate(finite(3)) is None
    assert noniso_certificate(TWO_TO_C).pair == (CONTINUUM, TWO_TO_C)


@pytest.mark.parametrize("x", [finite(2), finite(3), ALEPH0, CONTINUUM])
def test_certificate_iff_singleton_condition_fails(x):
    assert (noniso_certificate(x) is not None) == (not class_size_condition(x, finite(1)))


def test_verdicts():
    assert verdict(ALEPH0).isomorphic
    v = verdict(CONTINUUM)
    assert not v.isomorphic and v.certificate.pair == (CONTINUUM, TWO_TO_C)
    doc = v.to_json()
    assert doc["assumption"] == "CH" and doc["certificate"]["comax_neighborhood_at_least"] == "2^c"
    assert "search" in verdict(finite(3)).note


def test_parse_and_render():
    assert Cardinal.parse("finite:3") == finite(3)
    assert Cardinal.parse("aleph0") is ALEPH0 and Cardinal.parse("continuum") is CONTINUUM
    assert Cardinal.parse("c") is CONTINUUM and Cardinal.parse("2^c") is TWO_TO_C
    assert [repr(c) for c in (finite(3), ALEPH0, CONTINUUM, TWO_TO_C)] == ["Finite(3)", "Aleph0", "Continuum", "TwoToC"]
    assert str(CONTINUUM) == "c"
    for bad in ("aleph1", "finite:x", "finite:-1"):
        with pytest.raises(InputError):
            Cardinal.parse(bad)
    with pytest.raises(UnsupportedCardinalError):
        Cardinal("aleph7")
