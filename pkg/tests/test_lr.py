from collections import Counter

import pytest

from grassgw.bott import weyl_dimension
from grassgw.lr import (bar, dual_weight, lr_coefficient, lr_expand, pieri,
                        tensor_decompose)
from grassgw.young import Frame, enumerate_frame


def test_basic_coefficients():
    assert lr_coefficient((1,), (1,), (2,)) == 1
    assert lr_coefficient((1,), (1,), (1, 1)) == 1
    assert lr_coefficient((1,), (1,), (3,)) == 0
    assert lr_coefficient((), (), ()) == 1
    assert lr_coefficient((2,), (1,), (2,)) == 0


def test_unit_rectangle_coefficient():
    # c^{(2)}_{(1), (1)} = 1, the k=2, n=4 instance of the rotated pairing
    assert lr_coefficient((1,), (1, 0), (2,)) == 1


def test_square_of_hook():
    assert dict(lr_expand((2, 1), (2, 1))) == {
        (4, 2): 1, (4, 1, 1): 1, (3, 3): 1, (3, 2, 1): 2,
        (3, 1, 1, 1): 1, (2, 2, 2): 1, (2, 2, 1, 1): 1}


def test_expand_matches_definition_exhaustive_3x3():
    parts = enumerate_frame(Frame(3, 3))
    for lam in parts:
        for mu in parts:
            exp = lr_expand(lam, mu)
            total = sum(lam) + sum(mu)
            for nu, mult in exp.items():
                assert lr_coefficient(lam, mu, nu) == mult
            for nu in parts:
                if sum(nu) == total and nu not in exp:
                    assert lr_coefficient(lam, mu, nu) == 0


def test_symmetry_small():
    parts = enumerate_frame(Frame(3, 3))
    for lam in parts:
        for mu in parts:
            assert lr_expand(lam, mu) == lr_expand(mu, lam)


def test_row_bound_prunes():
    full = lr_expand((1,), (1,))
    bounded = lr_expand((1,), (1,), max_rows=1)
    assert set(full) == {(2,), (1, 1)}
    assert set(bounded) == {(2,)}


def test_tensor_decompose_examples():
    assert dict(tensor_decompose((1, 0), (1, 1), 2)) == {(2, 1): 1}
    assert dict(tensor_decompose((0, -1), (1, 1), 2)) == {(1, 0): 1}
    assert dict(tensor_decompose((), (2, 1), 3)) == {(2, 1, 0): 1}


def test_tensor_decompose_negative_weights_dualize():
    # Hom(S^lam Q, O) has weight (-lam_k, ..., -lam_1)
    lam = (2, 1)
    dual = dual_weight(lam)
    prod = tensor_decompose(lam, dual, 2)
    assert prod[(0, 0)] == 1  # the trivial summand appears once


def test_tensor_rejects_long_weights():
    with pytest.raises(ValueError):
        tensor_decompose((1, 1, 1), (1,), 2)


def test_pieri_examples():
    assert dict(pieri((1,), 1, 2)) == {(2, 0): 1, (1, 1): 1}
    assert dict(pieri((), 0, 2)) == {(0, 0): 1}
    # adding one box per row is the determinant twist
    assert pieri((3, 1), 2, 2) == Counter({(4, 2): 1})


def test_pieri_matches_tensor():
    for lam in enumerate_frame(Frame(3, 3)):
        for m in range(4):
            assert pieri(lam, m, 3) == tensor_decompose(lam, (1,) * m, 3)


def test_dual_and_bar():
    assert dual_weight((2, 1)) == (-1, -2)
    assert bar((-1, -2)) == ((1,), -2)
    assert bar((0, 0, 0)) == ((), 0)
    assert dual_weight(()) == ()
    # reconstruction law
    for w in [(3, 1, 0), (2, 2, -1), (-1, -1, -4)]:
        head, c = bar(w)
        padded = head + (0,) * (len(w) - len(head))
        assert tuple(x + c for x in padded) == w


def test_dimension_identity():
    n = 4
    lam, mu = (2, 1), (1, 1)
    lhs = sum(m * weyl_dimension(nu, n)
              for nu, m in lr_expand(lam, mu, max_rows=n).items())
    assert lhs == weyl_dimension(lam, n) * weyl_dimension(mu, n)
