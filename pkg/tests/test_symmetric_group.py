import math

import pytest

from bruteforce import (
    class_sizes_by_enumeration,
    count_standard_tableaux,
    fixed_points_minus_one,
    partitions_of,
)
from isotwirl.frames import YoungFrame, dim_sym, frame
from isotwirl.symmetric_group import (
    Permutation,
    character,
    class_sign,
    class_size,
    cycle_type,
    cycle_types,
    enumerate_group,
)


def test_cycle_type_examples():
    assert cycle_type(Permutation.identity(4)) == frame(1, 1, 1, 1)
    assert cycle_type(Permutation.from_one_based((2, 1, 3))) == frame(2, 1)
    assert cycle_type(Permutation.from_one_based((2, 3, 1, 5, 4))) == frame(3, 2)


def test_permutation_validation_and_algebra():
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))
    s = Permutation((1, 2, 0))
    t = Permutation((1, 0, 2))
    assert (s * t).images == tuple(s(t(i)) for i in range(3))
    assert (s * s.inverse()) == Permutation.identity(3)
    assert s.sign() == 1 and t.sign() == -1


def test_enumerate_group():
    assert list(enumerate_group(1)) == [Permutation((0,))]
    elems = list(enumerate_group(3))
    assert len(elems) == 6 and len(set(e.images for e in elems)) == 6
    assert sum(1 for _ in enumerate_group(8)) == math.factorial(8)
    with pytest.raises(ValueError):
        next(iter(enumerate_group(11)))


def test_cycle_types_enumeration():
    for n in range(1, 9):
        assert [c.reduced for c in cycle_types(n)] == partitions_of(n)
    assert [c.reduced for c in cycle_types(0)] == [()]
    # every permutation's cycle type appears
    got = {cycle_type(p).reduced for p in enumerate_group(5)}
    assert got == set(partitions_of(5))


def test_class_size_matches_enumeration():
    for n in range(1, 7):
        brute = class_sizes_by_enumeration(n)
        for ct in cycle_types(n):
            assert class_size(ct) == brute[ct.reduced], str(ct)


def test_character_trivial_and_sign():
    for n in range(1, 8):
        for ct in cycle_types(n):
            assert character(YoungFrame((n,)), ct) == 1
            assert character(YoungFrame((1,) * n), ct) == class_sign(ct)


def test_character_standard_representation():
    # the (n-1, 1) irrep is the fixed-point character minus one
    for n in range(2, 8):
        lam = YoungFrame((n - 1, 1))
        for ct in cycle_types(n):
            assert character(lam, ct) == fixed_points_minus_one(ct.reduced), str(ct)


def test_character_s3_table():
    classes = [frame(1, 1, 1), frame(2, 1), frame(3)]
    table = {
        frame(3): [1, 1, 1],
        frame(2, 1): [2, 0, -1],
        frame(1, 1, 1): [1, -1, 1],
    }
    for lam, values in table.items():
        assert [character(lam, c) for c in classes] == values


def test_character_at_identity_is_dimension():
    for n in range(1, 9):
        ident = YoungFrame((1,) * n)
        for parts in partitions_of(n):
            lam = YoungFrame(parts)
            assert character(lam, ident) == dim_sym(lam) == count_standard_tableaux(lam)


def test_character_row_orthogonality():
    for n in range(1, 9):
        cts = cycle_types(n)
        lams = [YoungFrame(p) for p in partitions_of(n)]
        for a in lams:
            for b in lams:
                total = sum(class_size(c) * character(a, c) * character(b, c) for c in cts)
                assert total == (math.factorial(n) if a == b else 0), (str(a), str(b))


def test_character_regular_representation_columns():
    for n in range(1, 9):
        for c in cycle_types(n):
            total = sum(dim_sym(YoungFrame(p)) * character(YoungFrame(p), c) for p in partitions_of(n))
            expected = math.factorial(n) if c == YoungFrame((1,) * n) else 0
            assert total == expected, str(c)


def test_character_size_mismatch():
    with pytest.raises(ValueError):
        character(frame(2, 1), frame(2, 2))
