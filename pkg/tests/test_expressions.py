"""Chain expression parsing and evaluation."""

import pytest

from sga.elements import ForbiddenProduct
from sga.expressions import evaluate_chain, parse_chain
from sga.representation import RepConfig, Signature, build_representation
from sga.scalars import INV_SQRT2, ONE, Scalar


@pytest.fixture(scope="module")
def pauli():
    return build_representation(RepConfig(Signature(spacelike=3)))


def test_parse_species(pauli):
    elems = parse_chain(pauli, "e[u] e[d]' g[1] g[1bar] g[+1] g[-1]")
    assert [e.species for e in elems] == [
        "column",
        "row",
        "multivector",
        "multivector",
        "multivector",
        "multivector",
    ]
    assert elems[2].payload == pauli.gamma_chiral(1)
    assert elems[3].payload == pauli.gamma_chiral(1, barred=True)
    assert elems[4].payload == pauli.gamma_plus(1)
    assert elems[5].payload == pauli.gamma_minus(1)


def test_eval_scalar_example(pauli):
    result = evaluate_chain(pauli, "e[d]' e[u]")
    assert result.species == "scalar" and result.payload == -ONE


def test_eval_outer(pauli):
    result = evaluate_chain(pauli, "e[u] e[u]'")
    assert result.species == "multivector"
    assert result.payload == pauli.gamma_chiral(1).scale(INV_SQRT2)


def test_eval_arrows(pauli):
    assert evaluate_chain(pauli, "e[↓]' e[↑]").payload == -ONE


def test_forbidden_chain(pauli):
    with pytest.raises(ForbiddenProduct):
        evaluate_chain(pauli, "e[u] e[d]")
    assert evaluate_chain(pauli, "e[u] e[d]", forbidden_as_zero=True).is_zero()


def test_parse_errors(pauli):
    with pytest.raises(ValueError):
        parse_chain(pauli, "")
    with pytest.raises(ValueError):
        parse_chain(pauli, "q[1]")
    with pytest.raises(ValueError):
        parse_chain(pauli, "e[ux]")
    with pytest.raises(ValueError):
        parse_chain(pauli, "g[7]")
