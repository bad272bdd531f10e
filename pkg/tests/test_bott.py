from itertools import permutations
from math import comb

import pytest

from grassgw.bott import (FullWeight, VANISHES, bott, bott_chain,
                          bott_sequence, cohomology_of_schur_bundle,
                          dotted_action, ext_dimension, rhom_schur,
                          weyl_dimension)
from grassgw.young import Frame, Permutation, enumerate_frame, pad


def test_dotted_action_examples():
    assert dotted_action((0, 2), Permutation((2, 1))) == (1, 1)
    alpha = (4, 1, -2, 0)
    assert dotted_action(alpha, Permutation.identity(4)) == alpha


def test_dotted_adjacent_transposition_formula():
    alpha = (5, 3, 2, 2, 0)
    got = dotted_action(alpha, Permutation.adjacent(2, 5))
    assert got == (5, 1, 4, 2, 0)


def test_dotted_action_is_right_action():
    alpha = (3, 1, 0, -2)
    perms = [Permutation(p) for p in permutations(range(1, 5))]
    for s in perms:
        for t in perms:
            assert dotted_action(dotted_action(alpha, s), t) == \
                dotted_action(alpha, s * t)


def test_dotted_action_length_mismatch():
    with pytest.raises(ValueError):
        dotted_action((1, 0), Permutation.identity(3))


def test_bott_p1_canonical_bundle():
    out = bott(FullWeight((0,), (2,)))
    assert out.degree == 1
    assert out.weight == (1, 1)
    assert weyl_dimension(out.weight, 2) == 1


def test_bott_dominant_weight_is_degree_zero():
    out = bott(FullWeight((1, 0, 0), ()))
    assert out == bott_sequence((1, 0, 0))
    assert out.degree == 0 and out.weight == (1, 0, 0)


def test_bott_vanishing_iff_repeat():
    for seq in [(0, 1), (2, 0, 3), (1, 1, 0)]:
        out = bott_sequence(seq)
        n = len(seq)
        shifted = [a + n - 1 - i for i, a in enumerate(seq)]
        assert out.vanishes == (len(set(shifted)) < n)


def test_bott_blockwise_validation():
    with pytest.raises(ValueError):
        FullWeight((0, 1), ())


def test_chain_agrees_with_sort():
    import random
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 7)
        k = rng.randint(0, n)
        q = tuple(sorted((rng.randint(-4, 6) for _ in range(k)), reverse=True))
        r = tuple(sorted((rng.randint(-4, 6) for _ in range(n - k)), reverse=True))
        w = FullWeight(q, r)
        fast = bott(w)
        slow, chain = bott_chain(w)
        assert fast == slow
        if not fast.vanishes:
            assert len(chain) == fast.degree


def test_sorting_chain_worked_identity():
    # ((n-k)^(k-1), 0, (n-k+1)^(n-k)) sorts to (n-k)^n in n-k moves
    for n in range(2, 8):
        for k in range(1, n):
            sigma = Permutation.identity(n)
            for j in range(k, n):
                sigma = sigma * Permutation.adjacent(j, n)
            assert sigma.length() == n - k
            alpha = (n - k,) * (k - 1) + (0,) + (n - k + 1,) * (n - k)
            assert dotted_action(alpha, sigma) == (n - k,) * n


def test_weyl_dimension():
    assert weyl_dimension((1, 0), 2) == 2
    assert weyl_dimension((2, 0), 2) == 3
    assert weyl_dimension((5, 5, 5), 3) == 1
    assert weyl_dimension((), 4) == 1
    assert weyl_dimension((2, 1), 3) == 8
    with pytest.raises(ValueError):
        weyl_dimension((0, 1), 2)


def test_line_bundles_on_projective_space():
    # O(d) on P^(n-1): classical binomial dimensions
    for n in (2, 3, 4):
        for d in range(-5, 6):
            out = cohomology_of_schur_bundle(1, n, (d,))
            if d >= 0:
                assert out.degree == 0
                assert weyl_dimension(out.weight, n) == comb(n - 1 + d, n - 1)
            elif d >= -(n - 1):
                assert out.vanishes
            else:
                assert out.degree == n - 1
                assert weyl_dimension(out.weight, n) == comb(-d - 1, n - 1)


def test_schur_bundle_twist_vanishing():
    assert cohomology_of_schur_bundle(2, 4, (1, 0), 3).vanishes
    out = cohomology_of_schur_bundle(1, 2, (1,), 1)
    assert out.degree == 0 and out.weight == (1, 1)


def test_rhom_end_of_line_bundle():
    assert rhom_schur(1, 2, (1,), (1,), 0) == {(0, (1, 1)): 1}


def test_rhom_semiorthogonality_instance():
    # later object against earlier one: no homs at all
    assert rhom_schur(2, 4, (2, 1), (1,), 0) == {}


def test_rhom_serre_twist_one_dim_in_top_degree():
    k, n = 2, 4
    for lam in enumerate_frame(Frame(k - 1, n - k)):
        src = (n - k,) + pad(lam, k - 1)
        tgt = pad(lam, k - 1) + (0,)
        table = rhom_schur(k, n, src, tgt, -1)
        assert len(table) == 1
        ((degree, nu), mult), = table.items()
        assert degree == n - k and mult == 1 and len(set(nu)) == 1


def test_ext_dimension():
    table = rhom_schur(1, 2, (1,), (1,), 0)
    assert dict(ext_dimension(table, 2)) == {0: 1}


def test_vanishes_singleton():
    assert VANISHES.vanishes
    assert bott_sequence((0, 1)).vanishes
