"""Littlewood-Richardson coefficients and Schur-functor tensor products.

The coefficient ``c^nu_{lam,mu}`` is computed straight from its
definition: it counts skew semistandard tableaux of shape ``nu/lam``
and content ``mu`` whose reverse reading word (right to left, top to
bottom) is a lattice word.  No symmetric-function machinery is used;
the enumeration backtracks cell by cell with the lattice condition
enforced online, so infeasible branches die immediately.

Tensor products of Schur functors of a rank-``k`` bundle are handled
through generalized weights: a weakly decreasing integer tuple ``w`` of
length ``k`` stands for the Schur functor of ``w - w_k`` twisted by the
``w_k``-th power of the determinant.  Products normalize both factors,
multiply the partition parts, drop anything with more than ``k`` rows
(the Schur functor of a rank-``k`` bundle vanishes there), and restore
the total determinant power.
"""

from __future__ import annotations

from collections import Counter
from typing import Sequence

from .young import Partition, as_partition, pad, size

Weight = tuple[int, ...]


def dual_weight(w: Sequence[int]) -> Weight:
    """The weight of the dual functor: reverse and negate."""
    w = _as_weight(w)
    return tuple(-x for x in reversed(w))


def bar(w: Sequence[int]) -> tuple[Partition, int]:
    """Split ``w`` into (minimal positive part, determinant power).

    Subtracts the last entry ``c`` from every part, so that
    ``w = bar(w) + c * (1, ..., 1)``.
    """
    w = _as_weight(w)
    if not w:
        return (), 0
    c = w[-1]
    return as_partition(tuple(x - c for x in w)), c


def _as_weight(w: Sequence[int]) -> Weight:
    w = tuple(int(x) for x in w)
    for a, b in zip(w, w[1:]):
        if a < b:
            raise ValueError(f"weight not weakly decreasing: {w}")
    return w


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Number of Littlewood-Richardson tableaux of shape nu/lam, content mu.

    Returns 0 for any infeasible triple (size mismatch, lam not
    contained in nu): those are not errors, the multiplicity is just
    zero.
    """
    lam = as_partition(lam)
    mu = as_partition(mu)
    nu = as_partition(nu)
    if size(nu) != size(lam) + size(mu):
        return 0
    if len(lam) > len(nu) or any(l > n for l, n in zip(lam, pad(nu, len(nu))[: len(lam)])):
        return 0
    if not mu:
        return 1 if lam == nu else 0

    nrows = len(nu)
    inner = pad(lam, nrows)
    m = len(mu)
    # cells in reverse reading order: row 1 right-to-left, then row 2, ...
    cells = [(r, c) for r in range(nrows) for c in range(nu[r] - 1, inner[r] - 1, -1)]
    filling = [[0] * nu[r] for r in range(nrows)]
    used = [0] * (m + 1)
    count = 0

    def place(idx: int) -> None:
        nonlocal count
        if idx == len(cells):
            count += 1
            return
        r, c = cells[idx]
        # row weakly increases: bounded above by the right neighbour
        hi = filling[r][c + 1] if c + 1 < nu[r] else m
        # column strictly increases: bounded below by the cell above
        lo = filling[r - 1][c] + 1 if r > 0 and c >= inner[r - 1] else 1
        for v in range(lo, hi + 1):
            if used[v] >= mu[v - 1]:
                continue
            if v > 1 and used[v - 1] <= used[v]:
                continue  # reverse word would stop being a lattice word
            used[v] += 1
            filling[r][c] = v
            place(idx + 1)
            used[v] -= 1
        filling[r][c] = 0

    place(0)
    return count


def lr_expand(lam: Sequence[int], mu: Sequence[int],
              max_rows: int | None = None) -> Counter:
    """Full product expansion: Counter {nu: c^nu_{lam,mu}}.

    Enumerates chains of horizontal strips (one strip per letter of the
    content) with the lattice condition imposed per row prefix; this is
    the same set of tableaux counted by :func:`lr_coefficient`, grouped
    by outer shape.  Shapes with more than ``max_rows`` nonzero rows
    are pruned during the walk.
    """
    lam = as_partition(lam)
    mu = as_partition(mu)
    cap = max_rows if max_rows is not None else len(lam) + len(mu)
    if len(lam) > cap:
        return Counter()
    if not mu:
        return Counter({lam: 1})

    out: Counter = Counter()
    nvals = len(mu)

    def add_strip(v: int, shape: list[int], prev: list[int]) -> None:
        # distribute mu[v-1] boxes of letter v over the rows of `shape`
        # as a horizontal strip, then recurse to the next letter
        base = shape[:]
        cur = [0] * cap

        def at_row(row: int, left: int) -> None:
            if left == 0:
                rest = shape[:]
                if v == nvals:
                    out[as_partition(tuple(rest))] += 1
                else:
                    add_strip(v + 1, rest, cur[:])
                return
            if row == cap:
                return
            # strip condition: the new row may not pass under the row
            # above as it was before this strip
            ceil = base[row - 1] if row > 0 else base[0] + left
            # lattice: letters v in rows <= row+1 never outnumber the
            # letters v-1 in rows <= row
            quota = left if v == 1 else sum(prev[:row]) - sum(cur[:row])
            hi = min(ceil - base[row], left, quota)
            for s in range(hi, 0, -1):
                shape[row] = base[row] + s
                cur[row] = s
                at_row(row + 1, left - s)
            shape[row] = base[row]
            cur[row] = 0
            at_row(row + 1, left)

        at_row(0, mu[v - 1])

    add_strip(1, list(pad(lam, cap)), [0] * cap)
    return out


def tensor_decompose(lam: Sequence[int], mu: Sequence[int], rows: int) -> Counter:
    """Decompose the product of two Schur functors of a rank-``rows`` bundle.

    Both inputs are generalized weights of length at most ``rows``
    (negative entries allowed).  Returns Counter mapping length-``rows``
    generalized weights to their multiplicities.
    """
    if rows < 0:
        raise ValueError("rows must be nonnegative")
    wl = _as_weight(lam)
    wm = _as_weight(mu)
    if len(wl) > rows or len(wm) > rows:
        raise ValueError(f"weights must have at most {rows} parts")
    bl, cl = bar(_pad_weight(wl, rows))
    bm, cm = bar(_pad_weight(wm, rows))
    c = cl + cm
    out: Counter = Counter()
    for nu, mult in lr_expand(bl, bm, max_rows=rows).items():
        out[tuple(x + c for x in pad(nu, rows))] += mult
    return out


def pieri(lam: Sequence[int], m: int, rows: int) -> Counter:
    """Multiply by the m-th exterior power: add m boxes, no two per row.

    Direct enumeration of the box additions; agrees with
    ``tensor_decompose(lam, (1,)*m, rows)`` wherever both apply.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    lam = as_partition(lam)
    if len(lam) > rows:
        raise ValueError(f"{lam} has more than {rows} rows")
    padded = pad(lam, rows)
    out: Counter = Counter()

    def choose(row: int, left: int, prefix: list[int]) -> None:
        if left > rows - row:
            return
        if row == rows:
            out[pad(as_partition(tuple(prefix)), rows)] += 1
            return
        for eps in (1, 0):
            if eps == 1 and left == 0:
                continue
            new = padded[row] + eps
            if prefix and new > prefix[-1]:
                continue
            prefix.append(new)
            choose(row + 1, left - eps, prefix)
            prefix.pop()

    choose(0, m, [])
    return out


def _pad_weight(w: Weight, length: int) -> Weight:
    if not w:
        return (0,) * length
    if w[-1] >= 0:
        return w + (0,) * (length - len(w))
    if len(w) != length:
        raise ValueError(
            f"weight {w} with negative parts must already have length {length}")
    return w
