import pytest

from grassgw.pairing import PairingKind, classify_pairing, diagram_parity
from grassgw.young import Frame, enumerate_frame, is_symmetric


def test_diagram_parity_examples():
    assert diagram_parity((1,), Frame(2, 1)) == 1
    assert diagram_parity((2,), Frame(2, 2)) == 0
    assert diagram_parity((), Frame(2, 4)) == 0


def test_diagram_parity_rejects_asymmetric():
    with pytest.raises(ValueError):
        diagram_parity((2, 1), Frame(2, 2))


def test_classify_pairing():
    assert classify_pairing(2, 3) is PairingKind.SKEW_SYMMETRIC
    assert classify_pairing(2, 4) is PairingKind.SYMMETRIC
    assert classify_pairing(4, 5) is PairingKind.SYMMETRIC
    assert classify_pairing(6, 7) is PairingKind.SKEW_SYMMETRIC


def test_classify_pairing_rejects_odd_product():
    with pytest.raises(ValueError):
        classify_pairing(1, 2)
    with pytest.raises(ValueError):
        classify_pairing(3, 6)


def test_parity_constant_and_consistent():
    for k in range(1, 7):
        for l in range(0, 7):
            if (k * l) % 2:
                continue
            frame = Frame(k, l)
            kind = classify_pairing(k, k + l)
            want = 1 if kind is PairingKind.SKEW_SYMMETRIC else 0
            for lam in enumerate_frame(frame):
                if is_symmetric(lam, frame):
                    assert diagram_parity(lam, frame) == want, (k, l, lam)
