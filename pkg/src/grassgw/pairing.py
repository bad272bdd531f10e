"""Parity of the canonical self-pairing on symmetric diagrams.

A self-complementary diagram ``lam`` in the frame of Gr(k, n) carries a
nondegenerate pairing of its Schur functor with itself into
``det(Q)^(n-k)``.  Whether that pairing is symmetric or skew-symmetric
is decided by the parity of

    sum_{i=1..n-k} lam^t_i * lam^t_{n-k+1-i}

(diagram-level), which turns out to be constant over the whole frame
(frame-level): skew exactly when ``n-k`` is odd and ``k = 2 mod 4``.
Both levels are implemented so the constancy is testable rather than
assumed.
"""

from __future__ import annotations

from enum import Enum

from .young import Frame, Partition, as_partition, is_symmetric, pad, transpose


class PairingKind(Enum):
    SYMMETRIC = "symmetric"
    SKEW_SYMMETRIC = "skew-symmetric"


def diagram_parity(lam: Partition, frame: Frame) -> int:
    """0 (even) or 1 (odd); defined only for symmetric diagrams."""
    lam = as_partition(lam)
    if not is_symmetric(lam, frame):
        raise ValueError(f"{lam} is not symmetric in frame {frame.rows}x{frame.cols}")
    l = frame.cols
    lamt = pad(transpose(lam), l)
    return sum(lamt[i] * lamt[l - 1 - i] for i in range(l)) % 2


def classify_pairing(k: int, n: int) -> PairingKind:
    """Frame-level pairing parity for Gr(k, n); needs k(n-k) even."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    if (k * (n - k)) % 2:
        raise ValueError(f"k(n-k) odd for k={k}, n={n}: no symmetric diagrams")
    if (n - k) % 2 == 1 and k % 4 == 2:
        return PairingKind.SKEW_SYMMETRIC
    return PairingKind.SYMMETRIC
