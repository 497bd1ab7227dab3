import math
from fractions import Fraction

import pytest

from bruteforce import count_semistandard_tableaux, count_standard_tableaux, partitions_of
from isotwirl.frames import (
    ProbabilityPair,
    YoungFrame,
    binary_entropy,
    dim_sym,
    dim_unitary,
    enumerate_frames,
    frame,
    format_frame,
    l1_distance,
    parse_frame,
    rel_entropy,
)


def test_frame_identity_ignores_trailing_zeros():
    assert frame(3, 1) == frame(3, 1, 0)
    assert hash(frame(3, 1)) == hash(frame(3, 1, 0, 0))
    assert frame(3, 1) != frame(3, 1, 1)
    assert frame() == frame(0, 0)


def test_frame_validation():
    with pytest.raises(ValueError):
        YoungFrame((1, 2))
    with pytest.raises(ValueError):
        YoungFrame((2, -1))


def test_frame_padding_and_rows():
    lam = frame(4, 2, 1)
    assert lam.padded(4) == (4, 2, 1, 0)
    assert lam.row(0) == 4 and lam.row(5) == 0
    assert lam.num_rows == 3 and lam.n == 7
    with pytest.raises(ValueError):
        lam.padded(2)
    assert frame(3, 2).conjugate() == frame(2, 2, 1)
    assert frame().conjugate() == frame()


def test_parse_and_format():
    assert parse_frame("4,2,1") == frame(4, 2, 1)
    assert parse_frame("0") == frame()
    assert format_frame(frame(3, 1), 3) == "3,1,0"
    assert format_frame(frame()) == "0"
    with pytest.raises(ValueError, match="token 2"):
        parse_frame("1,2")
    with pytest.raises(ValueError, match="not an integer"):
        parse_frame("1,x")


def test_enumerate_frames_examples():
    assert enumerate_frames(2, 4) == [frame(4, 0), frame(3, 1), frame(2, 2)]
    assert enumerate_frames(1, 7) == [frame(7)]
    assert len(enumerate_frames(3, 6)) == 7
    assert enumerate_frames(2, 0) == [frame(0, 0)]


def test_enumerate_frames_matches_bruteforce():
    for d in (1, 2, 3, 4):
        for n in range(0, 9):
            got = {f.reduced for f in enumerate_frames(d, n)}
            expect = set(partitions_of(n, max_rows=d))
            if n == 0:
                expect = {()}
            assert got == expect, (d, n)


def test_enumerate_frames_order_is_decreasing_lex():
    for d in (2, 3):
        for n in (5, 7):
            padded = [f.padded(d) for f in enumerate_frames(d, n)]
            assert padded == sorted(padded, reverse=True)


def test_enumerate_frames_caps():
    with pytest.raises(ValueError):
        enumerate_frames(5, 3)
    with pytest.raises(ValueError):
        enumerate_frames(2, 17)
    with pytest.raises(ValueError):
        enumerate_frames(0, 1)


def test_dim_sym_examples():
    assert dim_sym(frame(6)) == 1
    assert dim_sym(frame(1, 1, 1)) == 1
    assert dim_sym(frame(2, 1)) == 2 == count_standard_tableaux(frame(2, 1))


def test_dim_sym_matches_tableau_count():
    for n in range(0, 9):
        for parts in partitions_of(n):
            lam = YoungFrame(parts)
            assert dim_sym(lam) == count_standard_tableaux(lam), parts


def test_dim_unitary_examples():
    for d in (1, 2, 3, 4):
        assert dim_unitary(frame(1), d) == d
    for n in range(0, 9):
        assert dim_unitary(frame(n), 2) == n + 1
    assert dim_unitary(frame(2, 2), 2) == 1
    assert dim_unitary(frame(1, 1, 1), 2) == 0


def test_dim_unitary_matches_tableau_count():
    for d in (2, 3):
        for n in range(0, 9):
            for lam in enumerate_frames(3, n):
                assert dim_unitary(lam, d) == count_semistandard_tableaux(lam, d), (str(lam), d)


def test_schur_weyl_completeness():
    for d in (2, 3):
        for n in range(0, 9):
            total = sum(dim_sym(f) * dim_unitary(f, d) for f in enumerate_frames(d, n))
            assert total == d**n


def test_binary_entropy():
    assert binary_entropy(0) == 0.0
    assert binary_entropy(1) == 0.0
    assert binary_entropy(Fraction(1, 2)) == 1.0
    assert abs(binary_entropy(Fraction(1, 4)) - 0.8112781244591328) < 1e-15
    with pytest.raises(ValueError):
        binary_entropy(1.5)
    with pytest.raises(ValueError):
        binary_entropy(-0.1)


def test_rel_entropy():
    half = ProbabilityPair(Fraction(1, 2))
    point = ProbabilityPair(1)
    assert rel_entropy(half, half) == 0.0
    assert rel_entropy(point, ProbabilityPair(0)) == math.inf
    assert rel_entropy(point, half) == 1.0
    assert rel_entropy(ProbabilityPair(0), point) == math.inf


def test_pinsker_inequality_on_grid():
    grid = [Fraction(i, 10) for i in range(11)]
    for r0 in grid:
        for s0 in grid:
            r, s = ProbabilityPair(r0), ProbabilityPair(s0)
            assert rel_entropy(r, s) >= l1_distance(r, s) ** 2 / (2 * math.log(2)) - 1e-12


def test_dimension_entropy_bound():
    # dim F_gamma <= 2**(k*h(gamma_1/k)) for two-row frames with k boxes
    for k in range(1, 13):
        for gamma in enumerate_frames(2, k):
            bound = 2.0 ** (k * binary_entropy(Fraction(gamma.row(0), k)))
            assert dim_sym(gamma) <= bound * (1 + 1e-12), (str(gamma), k)


def test_probability_pair_validation():
    with pytest.raises(ValueError):
        ProbabilityPair(Fraction(3, 2))
    p = ProbabilityPair(Fraction(1, 4))
    assert p.p1 == Fraction(3, 4)
    assert p[0] == Fraction(1, 4) and p[1] == Fraction(3, 4)
