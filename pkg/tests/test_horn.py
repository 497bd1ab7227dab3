import pytest

from isotwirl.frames import enumerate_frames, frame
from isotwirl.horn import (
    HornTriple,
    basic_horn_holds,
    branching_disjoint,
    horn_feasible,
    support_window,
    within_support_window,
)
from isotwirl.lr import lr_coefficient


def test_basic_horn_examples():
    assert basic_horn_holds(HornTriple(frame(2, 0), frame(1, 0), frame(1, 0), 2))
    # lam_2 = 2 > mu_2 + nu_1 = 0 + 1
    assert not basic_horn_holds(HornTriple(frame(2, 2), frame(2, 0), frame(1, 1), 2))
    # trace mismatch
    assert not basic_horn_holds(HornTriple(frame(3, 0), frame(1, 0), frame(1, 0), 2))


def test_horn_triple_validation():
    with pytest.raises(ValueError):
        HornTriple(frame(1, 1, 1), frame(2, 1), frame(0), 2)


def test_feasibility_examples():
    assert horn_feasible(HornTriple(frame(2, 0), frame(1, 0), frame(1, 0), 2))
    assert not horn_feasible(HornTriple(frame(2, 2), frame(2, 0), frame(1, 1), 2))
    assert horn_feasible(HornTriple(frame(2, 1), frame(1, 0), frame(1, 1), 2))


def test_basic_inequalities_necessary_for_feasibility():
    for d in (2, 3):
        for n in range(0, 7):
            for lam in enumerate_frames(d, n):
                for l in range(0, n + 1):
                    for mu in enumerate_frames(d, l):
                        for nu in enumerate_frames(d, n - l):
                            t = HornTriple(lam, mu, nu, d)
                            if lr_coefficient(lam, mu, nu) > 0:
                                assert basic_horn_holds(t), (str(lam), str(mu), str(nu))
                            if not basic_horn_holds(t):
                                assert not horn_feasible(t)


def test_support_window_examples():
    # k = 0 admits only the frame itself
    win = support_window(frame(3, 1), 2, 0)
    assert win(frame(3, 1))
    assert not win(frame(2, 2)) and not win(frame(4, 0))
    # d=2, k=1 around (4,0)
    win = support_window(frame(4, 0), 2, 1)
    assert win(frame(3, 1))
    assert not win(frame(2, 2))
    # d=3, k=1 around (6,3,0): all |delta| <= 2
    assert within_support_window(frame(6, 3, 0), frame(4, 4, 1), 3, 1)
    assert not within_support_window(frame(6, 3, 0), frame(3, 3, 3), 3, 1)


def test_branching_disjoint_examples():
    assert branching_disjoint(frame(4, 0), frame(2, 2), 3, 1, 2)
    assert not branching_disjoint(frame(4, 0), frame(3, 1), 3, 1, 2)
    # diagonal case: nu = gamma always connects
    for lam in (frame(3, 1), frame(2, 2), frame(4, 0)):
        for k in range(0, 5):
            assert not branching_disjoint(lam, lam, 4 - k, k, 2)
    with pytest.raises(ValueError):
        branching_disjoint(frame(3, 1), frame(2, 2), 1, 1, 2)


def test_window_violation_implies_disjoint_chains():
    for d in (2, 3):
        for n in range(1, 7):
            frames = enumerate_frames(d, n)
            for lam in frames:
                for lam_p in frames:
                    for k in range(0, n + 1):
                        if not within_support_window(lam, lam_p, d, k):
                            assert branching_disjoint(lam, lam_p, n - k, k, d), (
                                d, str(lam), str(lam_p), k,
                            )
