"""Cohomology of homogeneous bundles on Gr(k, n) via Bott's algorithm.

A bundle ``V(alpha) = S^beta(Q) (x) S^gamma(R)`` is described by a full
weight: ``beta`` on the rank-``k`` quotient bundle occupies the first
``k`` slots, ``gamma`` on the rank-``(n-k)`` subbundle the rest; each
block is weakly decreasing, the whole sequence need not be.

With ``rho = (n-1, ..., 1, 0)`` the dotted action of a permutation is

    alpha . sigma = sigma(alpha + rho) - rho.

Either ``alpha + rho`` has a repeated entry and every cohomology group
vanishes, or a unique permutation sorts it strictly decreasing and the
single nonzero group sits in degree equal to the length of that
permutation, with dominant weight ``sort(alpha + rho) - rho``.  The
fast path sorts and counts inversions; :func:`bott_chain` walks the
actual adjacent-transposition chain instead, for auditing against the
worked sorting arguments.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .lr import Weight, bar, dual_weight, lr_expand
from .young import Partition, Permutation, as_partition, pad

ExtTable = dict[tuple[int, Weight], int]


@dataclass(frozen=True)
class FullWeight:
    """Blockwise weakly decreasing weight (q_block | r_block)."""

    q_block: Weight
    r_block: Weight

    def __post_init__(self):
        for block in (self.q_block, self.r_block):
            for a, b in zip(block, block[1:]):
                if a < b:
                    raise ValueError(f"block not weakly decreasing: {block}")

    @property
    def n(self) -> int:
        return len(self.q_block) + len(self.r_block)

    def entries(self) -> Weight:
        return tuple(self.q_block) + tuple(self.r_block)


@dataclass(frozen=True)
class BottOutcome:
    """Either total vanishing, or one group (degree, dominant weight)."""

    degree: int | None
    weight: Weight | None

    @property
    def vanishes(self) -> bool:
        return self.degree is None


VANISHES = BottOutcome(None, None)


def rho(n: int) -> Weight:
    return tuple(range(n - 1, -1, -1))


def dotted_action(alpha: Sequence[int], sigma: Permutation) -> Weight:
    """alpha . sigma = sigma(alpha + rho) - rho, a right action."""
    alpha = tuple(alpha)
    n = len(alpha)
    if len(sigma) != n:
        raise ValueError(f"length mismatch: weight {n}, permutation {len(sigma)}")
    return tuple(alpha[sigma(i) - 1] + i - sigma(i) for i in range(1, n + 1))


def bott(weight: FullWeight) -> BottOutcome:
    """Run Bott's algorithm on a full weight (sort-and-count path)."""
    return bott_sequence(weight.entries())


def bott_sequence(alpha: Sequence[int]) -> BottOutcome:
    """Bott's algorithm on a raw integer sequence, no block validation."""
    alpha = tuple(alpha)
    n = len(alpha)
    shifted = [a + r for a, r in zip(alpha, rho(n))]
    if len(set(shifted)) < n:
        return VANISHES
    inversions = sum(1 for i in range(n) for j in range(i + 1, n)
                     if shifted[i] < shifted[j])
    nu = tuple(s - r for s, r in zip(sorted(shifted, reverse=True), rho(n)))
    return BottOutcome(inversions, nu)


def bott_chain(weight: FullWeight) -> tuple[BottOutcome, list[int]]:
    """Bott's algorithm by explicit adjacent dotted transpositions.

    Returns the outcome together with the 1-based positions of the
    transpositions applied, so sorting arguments can be replayed move
    by move.  A fixed point of an adjacent transposition means
    ``alpha + rho`` has an adjacent repeat: total vanishing.
    """
    seq = list(weight.entries())
    n = len(seq)
    chain: list[int] = []
    while True:
        for i in range(n - 1):
            # compare alpha_i + rho_i with alpha_{i+1} + rho_{i+1}
            left = seq[i] + (n - 1 - i)
            right = seq[i + 1] + (n - 2 - i)
            if left == right:
                return VANISHES, chain
            if left < right:
                seq[i], seq[i + 1] = seq[i + 1] - 1, seq[i] + 1
                chain.append(i + 1)
                break
        else:
            return BottOutcome(len(chain), tuple(seq)), chain


def weyl_dimension(nu: Sequence[int], n: int) -> int:
    """Dimension of the GL_n representation with highest weight ``nu``.

    prod over i < j of (nu_i - nu_j + j - i) / (j - i); equals 1 exactly
    for constant weights (determinant powers).
    """
    nu = tuple(nu)
    if len(nu) > n:
        raise ValueError(f"weight {nu} too long for GL_{n}")
    nu = nu + (0,) * (n - len(nu))
    for a, b in zip(nu, nu[1:]):
        if a < b:
            raise ValueError(f"weight not weakly decreasing: {nu}")
    num = den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= nu[i] - nu[j] + j - i
            den *= j - i
    assert num % den == 0
    return num // den


def cohomology_of_schur_bundle(k: int, n: int, lam: Sequence[int],
                               det_r_power: int = 0) -> BottOutcome:
    """Cohomology of S^lam(Q) (x) det(R)^det_r_power on Gr(k, n)."""
    lam = tuple(lam)
    if len(lam) > k:
        raise ValueError(f"{lam} has more than {k} parts")
    q_block = _pad_q(lam, k)
    return bott(FullWeight(q_block, (det_r_power,) * (n - k)))


def rhom_schur(k: int, n: int, source: Sequence[int], target: Sequence[int],
               det_q_twist: int = 0) -> ExtTable:
    """Derived homs between Schur bundles of the quotient bundle.

    Computes RHom(S^source(Q), S^target(Q) (x) det(Q)^det_q_twist) on
    Gr(k, n) by expanding target (x) dual(source) into Schur functors,
    converting the aggregate determinant power to the subbundle side
    through det(Q) (x) det(R) = O, and running Bott's algorithm on each
    summand.  The result maps (degree, dominant weight) to multiplicity;
    an empty table is total vanishing.
    """
    source = as_partition(source)
    target = as_partition(target)
    if (source and len(source) > k) or (target and len(target) > k):
        raise ValueError(f"shapes must fit in {k} rows")
    bar_dual, c_dual = bar(dual_weight(pad(source, k)))
    c_total = det_q_twist + c_dual
    table: ExtTable = {}
    for gamma, mult in lr_expand(target, bar_dual, max_rows=k).items():
        outcome = bott(FullWeight(_pad_q(gamma, k), (-c_total,) * (n - k)))
        if outcome.vanishes:
            continue
        key = (outcome.degree, outcome.weight)
        table[key] = table.get(key, 0) + mult
    return table


def ext_dimension(table: ExtTable, n: int) -> Counter:
    """Total dimension per cohomological degree."""
    dims: Counter = Counter()
    for (degree, nu), mult in table.items():
        dims[degree] += mult * weyl_dimension(nu, n)
    return dims


def _pad_q(lam: Sequence[int], k: int) -> Weight:
    lam = tuple(lam)
    if not lam:
        return (0,) * k
    if lam[-1] >= 0:
        return lam + (0,) * (k - len(lam))
    if len(lam) != k:
        raise ValueError(f"weight {lam} with negative parts must have length {k}")
    return lam
