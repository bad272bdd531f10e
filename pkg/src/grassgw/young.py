"""Young diagrams in a bounded frame.

A partition (Young diagram) is stored as a tuple of weakly decreasing
positive integers; the empty tuple is the empty diagram.  A frame
``Y(k, l)`` bounds diagrams to at most ``k`` rows of length at most
``l``; on the Grassmannian ``Gr(k, n)`` the natural frame has
``l = n - k``.

Besides the basic diagram operations (complement in the frame,
transpose, boundary path encoding) this module provides the closed-form
counts

    R(k, l) = C(k + l, k)            all diagrams in the frame
    S(k, l) = C(k//2 + l//2, k//2)   self-complementary diagrams
    A(k, l) = R(k, l) - S(k, l)      the rest

``S`` is stated as the closed binomial form; when both ``k`` and ``l``
are odd no self-complementary diagram exists and the enumerated count
is 0 instead (``k*l`` odd makes ``|lam| = k*l - |lam|`` unsolvable).
"""

from __future__ import annotations

from math import comb
from typing import Iterator, NamedTuple, Sequence

Partition = tuple[int, ...]


class Frame(NamedTuple):
    """Bounding rectangle: ``rows`` = max height, ``cols`` = max width."""

    rows: int
    cols: int


def as_partition(parts: Sequence[int]) -> Partition:
    """Canonicalize a weakly decreasing sequence: validate and trim zeros."""
    parts = parts if isinstance(parts, tuple) else tuple(parts)
    if parts:
        if list(parts) != sorted(parts, reverse=True):
            raise ValueError(f"not weakly decreasing: {parts}")
        if parts[-1] < 0:
            raise ValueError(f"negative part in {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
    return parts


def size(lam: Partition) -> int:
    return sum(lam)


def fits(lam: Partition, frame: Frame) -> bool:
    lam = as_partition(lam)
    if len(lam) > frame.rows:
        return False
    return not lam or lam[0] <= frame.cols


def _require_fits(lam: Partition, frame: Frame) -> Partition:
    lam = as_partition(lam)
    if len(lam) > frame.rows or (lam and lam[0] > frame.cols):
        raise ValueError(f"{lam} does not fit in frame {frame.rows}x{frame.cols}")
    return lam


def pad(lam: Partition, rows: int) -> tuple[int, ...]:
    """Extend with zeros to exactly ``rows`` entries."""
    if len(lam) > rows:
        raise ValueError(f"{lam} has more than {rows} rows")
    return tuple(lam) + (0,) * (rows - len(lam))


def iter_frame(frame: Frame) -> Iterator[Partition]:
    """All diagrams fitting in the frame, in no particular order."""
    rows, cols = frame

    def rec(row: int, maxpart: int, prefix: list[int]) -> Iterator[Partition]:
        yield tuple(prefix)
        if row == rows:
            return
        for p in range(maxpart, 0, -1):
            prefix.append(p)
            yield from rec(row + 1, p, prefix)
            prefix.pop()

    yield from rec(0, cols, [])


def enumerate_frame(frame: Frame) -> list[Partition]:
    """All diagrams in the frame, ordered by (size, padded parts).

    The order is a total refinement of the size order: |a| < |b| always
    puts ``a`` first, ties are broken lexicographically on zero-padded
    parts.  This is the order used to index exceptional collections, so
    it must stay deterministic.
    """
    rows = frame.rows
    return sorted(iter_frame(frame), key=lambda t: (sum(t), pad(t, rows)))


def complement(lam: Partition, frame: Frame) -> Partition:
    """The 180-degree rotated complement of ``lam`` inside the frame."""
    lam = _require_fits(lam, frame)
    return _complement_canonical(lam, frame.rows, frame.cols)


def _complement_canonical(lam: Partition, rows: int, cols: int) -> Partition:
    # assumes lam canonical and fitting; output needs no revalidation
    comp = [cols] * (rows - len(lam))
    comp.extend(cols - p for p in reversed(lam))
    while comp and comp[-1] == 0:
        comp.pop()
    return tuple(comp)


def transpose(lam: Partition) -> Partition:
    """Reflect across the main diagonal: column lengths become rows."""
    lam = as_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def is_symmetric(lam: Partition, frame: Frame) -> bool:
    """True when the diagram equals its complement in the frame."""
    lam = _require_fits(lam, frame)
    return _complement_canonical(lam, frame.rows, frame.cols) == lam


def to_binary_path(lam: Partition, frame: Frame) -> tuple[int, ...]:
    """Boundary path of the diagram, bottom-left to top-right.

    1 = step right, 0 = step up; the diagram sits in the upper-left of
    the frame.  The path has exactly ``cols`` ones and ``rows`` zeros,
    and it is a palindrome precisely for self-complementary diagrams.
    """
    lam = _require_fits(lam, frame)
    rows, cols = frame
    padded = pad(lam, rows)
    bits: list[int] = []
    prev = 0
    for i in range(rows - 1, -1, -1):
        bits.extend([1] * (padded[i] - prev))
        bits.append(0)
        prev = padded[i]
    bits.extend([1] * (cols - prev))
    return tuple(bits)


def count_R(k: int, l: int) -> int:
    """Number of diagrams in Y(k, l)."""
    _check_frame_args(k, l)
    return comb(k + l, k)


def count_S(k: int, l: int) -> int:
    """Closed-form count of self-complementary diagrams in Y(k, l).

    Valid as an enumeration count whenever ``k*l`` is even; for odd
    ``k*l`` the enumerated count is 0 while this binomial is not.
    """
    _check_frame_args(k, l)
    return comb(k // 2 + l // 2, k // 2)


def count_A(k: int, l: int) -> int:
    """R(k, l) - S(k, l), the closed-form non-symmetric count."""
    return count_R(k, l) - count_S(k, l)


def _check_frame_args(k: int, l: int) -> None:
    if k < 0 or l < 0:
        raise ValueError(f"frame sides must be nonnegative, got {k}, {l}")


class Permutation:
    """A permutation of {1..d}, stored as the tuple of images.

    ``p(i)`` is the image of ``i``.  Composition follows
    ``(p * q)(i) = p(q(i))``, which makes the dotted action on weights a
    right action (see :mod:`grassgw.bott`).
    """

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        self.images = images

    @classmethod
    def identity(cls, d: int) -> "Permutation":
        return cls(range(1, d + 1))

    @classmethod
    def adjacent(cls, i: int, d: int) -> "Permutation":
        """The transposition (i, i+1) in S_d, 1-based."""
        if not 1 <= i < d:
            raise ValueError(f"adjacent transposition index {i} out of range for d={d}")
        images = list(range(1, d + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __len__(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        if len(self) != len(other):
            raise ValueError("permutation sizes differ")
        return Permutation(tuple(self(other(i)) for i in range(1, len(self) + 1)))

    def inversions(self) -> int:
        im = self.images
        return sum(1 for i in range(len(im)) for j in range(i + 1, len(im))
                   if im[i] > im[j])

    def length(self) -> int:
        """Coxeter length: minimal number of adjacent transpositions."""
        return self.inversions()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"


def straightening_permutation(lam: Partition) -> Permutation:
    """Permutation sending row-major cells of the transpose onto ``lam``.

    Cell (i, j) of the transpose diagram, at row-major position
    ``lamt_1 + ... + lamt_{i-1} + j``, maps to the row-major position of
    cell (j, i) in ``lam``, namely ``lam_1 + ... + lam_{j-1} + i``.
    """
    lam = as_partition(lam)
    if not lam:
        raise ValueError("straightening permutation needs a nonempty diagram")
    lamt = transpose(lam)
    images = []
    for i, rowlen in enumerate(lamt, start=1):
        for j in range(1, rowlen + 1):
            images.append(sum(lam[: j - 1]) + i)
    return Permutation(images)
