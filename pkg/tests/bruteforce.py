"""Independent brute-force oracles used only by the tests.

Everything here is deliberately naive (exhaustive enumeration, no shared code
paths with the package beyond the YoungFrame container) so that agreement with
the package is meaningful.
"""

from __future__ import annotations

import itertools

from isotwirl.frames import YoungFrame


def count_standard_tableaux(lam: YoungFrame) -> int:
    """Number of fillings with 1..n increasing along rows and down columns."""
    rows = lam.reduced
    n = sum(rows)
    if n == 0:
        return 1
    cells = [(i, j) for i, r in enumerate(rows) for j in range(r)]
    grid = {c: 0 for c in cells}
    count = 0

    def place(value: int) -> None:
        nonlocal count
        if value > n:
            count += 1
            return
        for (i, j) in cells:
            if grid[(i, j)]:
                continue
            if j > 0 and not grid[(i, j - 1)]:
                continue
            if i > 0 and (i - 1, j) in grid and not grid[(i - 1, j)]:
                continue
            grid[(i, j)] = value
            place(value + 1)
            grid[(i, j)] = 0

    place(1)
    return count


def count_semistandard_tableaux(lam: YoungFrame, d: int) -> int:
    """Fillings with entries in 1..d, rows weakly and columns strictly increasing."""
    rows = lam.reduced
    if len(rows) > d:
        return 0
    if not rows:
        return 1
    count = 0
    grid = [[0] * r for r in rows]

    def place(i: int, j: int) -> None:
        nonlocal count
        if i == len(rows):
            count += 1
            return
        ni, nj = (i, j + 1) if j + 1 < rows[i] else (i + 1, 0)
        lo = 1
        if j > 0:
            lo = max(lo, grid[i][j - 1])
        if i > 0 and j < rows[i - 1]:
            lo = max(lo, grid[i - 1][j] + 1)
        for v in range(lo, d + 1):
            grid[i][j] = v
            place(ni, nj)
        grid[i][j] = 0

    place(0, 0)
    return count


def partitions_of(n: int, max_rows: int | None = None) -> list[tuple[int, ...]]:
    """All weakly decreasing positive tuples summing to n (optionally row-capped)."""
    out: list[tuple[int, ...]] = []

    def descend(prefix: list[int], remaining: int, max_part: int) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if max_rows is not None and len(prefix) == max_rows:
            return
        for p in range(min(max_part, remaining), 0, -1):
            prefix.append(p)
            descend(prefix, remaining - p, p)
            prefix.pop()

    descend([], n, n)
    return out


def cycle_type_of(images: tuple[int, ...]) -> tuple[int, ...]:
    n = len(images)
    seen = [False] * n
    lengths = []
    for start in range(n):
        if seen[start]:
            continue
        length, j = 0, start
        while not seen[j]:
            seen[j] = True
            j = images[j]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def class_sizes_by_enumeration(n: int) -> dict[tuple[int, ...], int]:
    """Conjugacy-class sizes of S_n counted by iterating all n! permutations."""
    sizes: dict[tuple[int, ...], int] = {}
    for images in itertools.permutations(range(n)):
        ct = cycle_type_of(images)
        sizes[ct] = sizes.get(ct, 0) + 1
    return sizes


def fixed_points_minus_one(ct: tuple[int, ...]) -> int:
    """Character of the standard (n-1)-dimensional irrep at a cycle type."""
    return sum(1 for part in ct if part == 1) - 1


def is_lattice_word(word: list[int]) -> bool:
    counts: dict[int, int] = {}
    for v in word:
        counts[v] = counts.get(v, 0) + 1
        if v > 1 and counts.get(v, 0) > counts.get(v - 1, 0):
            return False
    return True
