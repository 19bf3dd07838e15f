from fractions import Fraction

import pytest

import heisfock as hf


def test_partitions():
    assert hf.transpose((4, 1)) == (2, 1, 1, 1)
    assert hf.coprime_decompose((4, 1), 3) == ((1, 1), (1,))
    assert hf.coprime_decompose((), 3) == ((), ())
    assert hf.partwise_add((1, 1), 3, (1,)) == (4, 1)
    assert len(hf.partitions_of(6)) == 11
    assert hf.canonical((2, 1, 0, 0)) == (2, 1)
    with pytest.raises(hf.HeisfockError):
        hf.canonical((1, 2))


def test_characters_and_lr():
    table = hf.character_table(3)
    assert table["n"] == 3
    assert hf.lr_coefficient((3, 2, 1), (2, 1), (2, 1)) == 2
    rep = hf.kronecker_product((2, 1), {"n": 3, "terms": [{"mu": (2, 1), "mult": 1}]})
    assert [t["mu"] for t in rep["terms"]] == [(3,), (2, 1), (1, 1, 1)]


def test_plethysm():
    f = {"basis": "schur", "terms": [{"mu": (2,), "coeff": Fraction(1)}]}
    out = hf.plethysm_pb(f, 2)
    assert {t["mu"]: t["coeff"] for t in out["terms"]} == {(4,): 1, (3, 1): -1, (2, 2): 1}


def test_heisenberg():
    out = hf.b_op(1, 2, hf.basis_vector((1,)))
    coeffs = {t["mu"]: t["coeff"]["monomials"] for t in out["terms"]}
    assert coeffs == {(3,): [{"vexp": 0, "c": 1}], (1, 1, 1): [{"vexp": 0, "c": -1}]}
    modp = hf.heis_modp((1,), 2, 5, hf.vacuum())
    assert modp["terms"][0]["coeff"]["monomials"] == [{"vexp": 0, "c": 1}, {"vexp": 10, "c": -1}]
    assert hf.b_tau((2, 1), 3, hf.basis_vector((2, 1)), jobs=4) == hf.b_tau((2, 1), 3, hf.basis_vector((2, 1)))
    with pytest.raises(hf.HeisfockError, match="ConjecturalDisabled"):
        hf.heis_neg((1,), 2, 5, hf.vacuum())
    assert hf.heis_neg((1,), 2, 5, hf.vacuum(), conjectural=True)["terms"]


def test_cherednik():
    images = hf.simple_image_pos((3,), hf.preferred_lift_degree((3,), 1, 3), (1,), 1, 3)
    assert [img["eta"] for img in images] == [(6,), (3, 3)]
    neg = hf.simple_image_neg((1,), hf.preferred_lift_degree((1,), -3, 2), (1,), -3, 2)
    assert neg == [{"eta": (1, 1, 1), "m": Fraction(-3, 2), "mult": 1}]
    assert hf.p_stability_interval(0, 7, 2) == (-3, 2)
    assert hf.p_stability_interval(0, 7, 1) == (None, None)
    assert hf.possible_supports(4, 2)[-1] == {"k": 0, "l": 2, "dim": 2}
    shift, coeffs = hf.verma_hilbert((1, 1), Fraction(1, 2), 3)
    assert shift == Fraction(1, 2)
    assert coeffs == [0, 1, 1, 2]


def test_pipeline():
    table = {(): hf.vacuum()}
    out = hf.character_pipeline((2,), 1, 2, 5, table)
    assert [t["mu"] for t in out["terms"]] == [(2,), (1, 1)]
    with pytest.raises(hf.HeisfockError, match="MissingTable"):
        hf.character_pipeline((2, 1), 1, 2, 5, {})
