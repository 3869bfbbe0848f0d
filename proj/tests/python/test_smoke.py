import json

import pytest

import mvsr


def test_chain_arithmetic():
    l3 = mvsr.lukasiewicz_chain(3)
    assert l3.size == 3
    half = 1
    assert l3.label(half) == "1/2"
    assert l3.oplus(half, half) == l3.one
    assert l3.odot(half, half) == l3.zero
    assert mvsr.check(l3)["valid"]


def test_reducts_and_star():
    a = mvsr.product(mvsr.lukasiewicz_chain(2), mvsr.lukasiewicz_chain(3))
    assert a.size == 6
    assert mvsr.check(mvsr.reduct_vee_odot(a))["valid"]
    assert mvsr.check(mvsr.reduct_wedge_oplus(a))["valid"]
    assert mvsr.star_is_reduct_isomorphism(a)


def test_json_round_trip():
    l4 = mvsr.lukasiewicz_chain(4)
    text = l4.to_json()
    assert mvsr.MvAlgebra.from_json(text).to_json() == text
    assert json.loads(text)["kind"] == "mv"


def test_tensor_of_regular_modules():
    s = mvsr.reduct_vee_odot(mvsr.lukasiewicz_chain(3))
    r = mvsr.regular_module(s)
    report = mvsr.tensor(r, r)
    assert report["classes"] == 3
    assert report["universal_property"] == "verified"
    assert mvsr.tensor(r, r, "separating")["tensors"] == report["tensors"]


def test_k0_and_projective():
    b = mvsr.reduct_vee_odot(mvsr.lukasiewicz_chain(2))
    assert len(mvsr.k0(b, 1)["classes"]) == 2
    assert mvsr.projective(mvsr.free_module(b, 2))["projective"]


def test_gamma_sum_law_fails_on_mixed_signs():
    full = mvsr.gamma(samples=500)
    assert full["meet_failures"] == 0
    assert full["sum_failures"] > 0
    assert mvsr.gamma(samples=500, nonnegative=True)["passed"]


def test_errors_carry_kind():
    with pytest.raises(mvsr.MvsrError) as info:
        mvsr.lukasiewicz_chain(1)
    assert info.value.kind == "ChainTooShort"


def test_cli_in_process():
    code, out, err = mvsr.run_cli(["chain", "--n", "3"])
    assert code == 0 and err == ""
    assert json.loads(out)["size"] == 3
    code, _, _ = mvsr.run_cli(["nonsense"])
    assert code == 1
