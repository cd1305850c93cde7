import pytest
from hypothesis import given, strategies as st

from wpoly.laurent import (
    A, D, ONE, ZERO, DRingElem, LaurentPoly, NonInvertibleError, NotDivisibleError,
    eval_complex, exact_div, l2_norm_sq, parse_laurent,
)

polys = st.dictionaries(st.integers(-12, 12), st.integers(-9, 9), max_size=6).map(LaurentPoly)


def test_canonical_text():
    assert str(D) == "-A^2 - A^-2"
    assert (A ** 3).scale(2).to_str() == "2*A^3"
    assert ZERO.to_str() == "0"
    assert (ONE - A).to_str() == "-A + 1"


@given(polys)
def test_parse_roundtrip(f):
    assert parse_laurent(f.to_str()) == f


def test_parse_accepts_loose_spacing():
    assert parse_laurent(" -A^4 -A^-4 ") == LaurentPoly({4: -1, -4: -1})
    assert parse_laurent("3 * A") == LaurentPoly({1: 3})
    with pytest.raises(ValueError):
        parse_laurent("A^^2")


@given(polys, polys)
def test_ring_axioms(f, g):
    assert f + g == g + f
    assert f * g == g * f
    assert (f - g) + g == f
    if not g.is_zero():
        assert exact_div(f * g, g) == f


def test_exact_div_rejects_remainder():
    with pytest.raises(NotDivisibleError):
        exact_div(A + 2, D)


def test_unit_powers():
    assert (A ** -3) * A ** 3 == ONE
    with pytest.raises(NonInvertibleError):
        D ** -1


def test_l2_and_eval():
    assert l2_norm_sq(D) == 2
    assert abs(eval_complex(D, 1) + 2) < 1e-15
    with pytest.raises(ZeroDivisionError):
        eval_complex(D, 0)


def test_dring_reduces_and_compares():
    x = DRingElem(D * (A + 1), -1)
    assert x.is_laurent() and x.to_laurent() == A + 1
    assert DRingElem(D, 0) == DRingElem(ONE, 1)
    y = DRingElem(A, -2)
    assert not y.is_laurent()
    with pytest.raises(NotDivisibleError):
        y.to_laurent()
    assert (y * DRingElem(ONE, 2)).to_laurent() == A
    assert hash(DRingElem(D * D, -1)) == hash(DRingElem(ONE, 1))
