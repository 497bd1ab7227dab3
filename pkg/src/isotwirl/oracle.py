"""Brute-force exact-rational operators on (C^d)^(x n): the ground truth.

Everything the fast combinatorial path claims is checked against dense
operators built here: permutation matrices, isotypical projectors assembled
from the full character sum over S_n, partial traces, the permutation twirl,
and the site-wise depolarising channel realized as its subset decomposition.

A :class:`TensorOperator` stores an exact rational matrix as a global
``Fraction`` scale times a dense integer matrix (numpy object dtype holding
Python ints), so no rounding can ever occur.  Matrix products route through
int64 when a safe bound certifies no overflow, falling back to arbitrary
precision otherwise.

Operators are immutable by convention: no operation mutates its inputs, and
constructed operators can be shared freely across threads.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import cache, lru_cache
from typing import Iterable, Sequence

import numpy as np

from .frames import YoungFrame, dim_sym, enumerate_frames
from .symmetric_group import Permutation

# Hard default caps: dense dimension d^n, and n for loops over all n! permutations.
DIMENSION_CAP = 6561
FACTORIAL_LOOP_CAP = 8

_INT64_MAX = 2**63 - 1


def _check_dense_size(d: int, n: int) -> None:
    if d < 1 or n < 0:
        raise ValueError(f"invalid local dimension/site count ({d}, {n})")
    if d**n > DIMENSION_CAP:
        raise ValueError(f"dense dimension {d}**{n} exceeds cap {DIMENSION_CAP}")


@cache
def _word_digits(d: int, n: int) -> np.ndarray:
    """All words of [d]^n as digit rows, lexicographic; shape (d^n, n)."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.array(list(itertools.product(range(d), repeat=n)), dtype=np.int64)


@cache
def _index_powers(d: int, n: int) -> np.ndarray:
    return np.array([d ** (n - 1 - i) for i in range(n)], dtype=np.int64)


class TensorOperator:
    """Dense exact-rational operator: ``scale`` times an integer matrix."""

    __slots__ = ("d", "n", "scale", "mat", "_i64")

    def __init__(self, d: int, n: int, scale: Fraction, mat: np.ndarray):
        _check_dense_size(d, n)
        dim = d**n
        if mat.shape != (dim, dim):
            raise ValueError(f"matrix shape {mat.shape} does not match {dim}x{dim}")
        self.d = d
        self.n = n
        self.scale = Fraction(scale)
        self.mat = mat if mat.dtype == object else mat.astype(object)
        self._i64 = None

    def _int64_view(self) -> tuple[np.ndarray | None, int]:
        """Cached (int64 copy, max abs entry); copy is None when entries overflow."""
        if self._i64 is None:
            amax = int(np.abs(self.mat).max()) if self.mat.size else 0
            arr = self.mat.astype(np.int64) if amax <= _INT64_MAX else None
            self._i64 = (arr, amax)
        return self._i64

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, d: int, n: int) -> "TensorOperator":
        dim = d**n
        return cls(d, n, Fraction(0), np.zeros((dim, dim), dtype=object))

    @classmethod
    def identity(cls, d: int, n: int) -> "TensorOperator":
        dim = d**n
        return cls(d, n, Fraction(1), np.identity(dim, dtype=object))

    @classmethod
    def maximally_mixed(cls, d: int, n: int = 1) -> "TensorOperator":
        dim = d**n
        return cls(d, n, Fraction(1, dim), np.identity(dim, dtype=object))

    @classmethod
    def from_fraction_matrix(cls, d: int, n: int, rows: Sequence[Sequence[Fraction]]) -> "TensorOperator":
        dim = d**n
        den = 1
        for row in rows:
            for x in row:
                den = den * Fraction(x).denominator // math.gcd(den, Fraction(x).denominator)
        mat = np.empty((dim, dim), dtype=object)
        for i in range(dim):
            for j in range(dim):
                x = Fraction(rows[i][j])
                mat[i, j] = int(x * den)
        return cls(d, n, Fraction(1, den), mat)

    # -- scalar structure ----------------------------------------------------

    def reduced(self) -> "TensorOperator":
        """Fold the integer gcd of the matrix into the scale (canonical form)."""
        flat = np.abs(self.mat.ravel())
        g = int(np.gcd.reduce(flat)) if flat.size else 0
        if g == 0:
            return TensorOperator.zero(self.d, self.n)
        if g == 1:
            return self
        return TensorOperator(self.d, self.n, self.scale * g, self.mat // g)

    def entry(self, i: int, j: int) -> Fraction:
        return self.scale * int(self.mat[i, j])

    def to_fraction_matrix(self) -> np.ndarray:
        return self.mat * self.scale

    def is_zero(self) -> bool:
        return self.scale == 0 or not self.mat.any()

    # -- arithmetic ----------------------------------------------------------

    def _compatible(self, other: "TensorOperator") -> None:
        if (self.d, self.n) != (other.d, other.n):
            raise ValueError("operator shape mismatch")

    def __add__(self, other: "TensorOperator") -> "TensorOperator":
        self._compatible(other)
        if self.scale == 0:
            return other
        if other.scale == 0:
            return self
        s = Fraction(
            math.gcd(self.scale.numerator, other.scale.numerator),
            self.scale.denominator * other.scale.denominator
            // math.gcd(self.scale.denominator, other.scale.denominator),
        )
        a = int(self.scale / s)
        b = int(other.scale / s)
        return TensorOperator(self.d, self.n, s, a * self.mat + b * other.mat)

    def __sub__(self, other: "TensorOperator") -> "TensorOperator":
        return self + (-1) * other

    def __rmul__(self, c: int | Fraction) -> "TensorOperator":
        c = Fraction(c)
        if c == 0:
            return TensorOperator.zero(self.d, self.n)
        return TensorOperator(self.d, self.n, self.scale * c, self.mat)

    def __mul__(self, c: int | Fraction) -> "TensorOperator":
        return self.__rmul__(c)

    def __matmul__(self, other: "TensorOperator") -> "TensorOperator":
        self._compatible(other)
        a64, amax = self._int64_view()
        b64, bmax = other._int64_view()
        if a64 is not None and b64 is not None and self.mat.shape[1] * amax * bmax <= _INT64_MAX:
            product = (a64 @ b64).astype(object)
        else:
            product = self.mat @ other.mat
        return TensorOperator(self.d, self.n, self.scale * other.scale, product)

    def transpose(self) -> "TensorOperator":
        return TensorOperator(self.d, self.n, self.scale, self.mat.T.copy())

    def trace(self) -> Fraction:
        return self.scale * int(np.trace(self.mat))

    def hs_product(self, other: "TensorOperator") -> Fraction:
        """Hilbert-Schmidt pairing tr(self @ other) without forming the product."""
        self._compatible(other)
        a64, amax = self._int64_view()
        b64, bmax = other._int64_view()
        if a64 is not None and b64 is not None and self.mat.size * amax * bmax <= _INT64_MAX:
            total = int((a64 * b64.T).sum())
        else:
            total = int((self.mat * other.mat.T).sum())
        return self.scale * other.scale * total

    def kron(self, other: "TensorOperator") -> "TensorOperator":
        if self.d != other.d:
            raise ValueError("local dimensions differ")
        _check_dense_size(self.d, self.n + other.n)
        return TensorOperator(
            self.d, self.n + other.n, self.scale * other.scale, np.kron(self.mat, other.mat)
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorOperator):
            return NotImplemented
        if (self.d, self.n) != (other.d, other.n):
            return False
        a = self.scale.numerator * other.scale.denominator
        b = other.scale.numerator * self.scale.denominator
        return bool(np.array_equal(a * self.mat, b * other.mat))

    # -- site-structure operations --------------------------------------------

    def partial_trace(self, sites: Iterable[int]) -> "TensorOperator":
        """Trace out the given 0-based sites; remaining sites keep their order."""
        sites = sorted(set(sites))
        if any(s < 0 or s >= self.n for s in sites):
            raise ValueError(f"sites {sites} outside range(0, {self.n})")
        if not sites:
            return self
        d, n = self.d, self.n
        tensor = self.mat.reshape((d,) * (2 * n))
        cur = n
        for s in reversed(sites):
            tensor = np.trace(tensor, axis1=s, axis2=cur + s)
            cur -= 1
        m = n - len(sites)
        tensor = np.asarray(tensor, dtype=object).reshape((d**m, d**m))
        return TensorOperator(d, m, self.scale, tensor)


# -- permutation action --------------------------------------------------------


def _word_map(images: tuple[int, ...], d: int) -> np.ndarray:
    """Index map w -> index of the word y with y[tau(i)] = w[i], for tau = images."""
    n = len(images)
    inv = [0] * n
    for i, j in enumerate(images):
        inv[j] = i
    digits = _word_digits(d, n)
    return digits[:, inv] @ _index_powers(d, n)


def perm_operator(tau: Permutation, d: int) -> TensorOperator:
    """0/1 matrix moving the letter at site i to site tau(i); B(s)B(t) = B(st)."""
    _check_dense_size(d, tau.n)
    dim = d**tau.n
    mat = np.zeros((dim, dim), dtype=object)
    mat[_word_map(tau.images, d), np.arange(dim)] = 1
    return TensorOperator(d, tau.n, Fraction(1), mat)


# -- isotypical projectors -------------------------------------------------------


def _class_sum_matrices(d: int, n: int) -> dict[tuple[int, ...], np.ndarray]:
    """Sum of permutation matrices over each conjugacy class, as int32 counts.

    Conjugacy classes are closed under inversion, so gathering by tau instead
    of tau^{-1} sums the same set of matrices.
    """
    dim = d**n
    digits = _word_digits(d, n)
    powers = _index_powers(d, n)
    cols = np.arange(dim)
    sums: dict[tuple[int, ...], np.ndarray] = {}
    for images in itertools.permutations(range(n)):
        seen = [False] * n
        ct = []
        for i in range(n):
            if not seen[i]:
                length = 0
                j = i
                while not seen[j]:
                    seen[j] = True
                    j = images[j]
                    length += 1
                ct.append(length)
        ct.sort(reverse=True)
        key = tuple(ct)
        mat = sums.get(key)
        if mat is None:
            mat = np.zeros((dim, dim), dtype=np.int32)
            sums[key] = mat
        rows = digits[:, images] @ powers
        mat[rows, cols] += 1
    return sums


@lru_cache(maxsize=4)
def _projector_family(d: int, n: int) -> dict[YoungFrame, TensorOperator]:
    from .symmetric_group import character  # local import avoids cycle at module load

    fact = math.factorial(n)
    sums = _class_sum_matrices(d, n)
    family: dict[YoungFrame, TensorOperator] = {}
    for lam in enumerate_frames(d, n):
        acc = np.zeros((d**n, d**n), dtype=np.int64)
        for key, mat in sums.items():
            chi = character(lam, YoungFrame(key))
            if chi:
                acc += chi * mat.astype(np.int64)
        family[lam] = TensorOperator(d, n, Fraction(dim_sym(lam), fact), acc.astype(object))
    return family


def isotypical_projectors(
    d: int, n: int, *, factorial_cap: int = FACTORIAL_LOOP_CAP
) -> dict[YoungFrame, TensorOperator]:
    """All isotypical projectors P_lam for lam in YF_{d,n}, built in one sweep.

    Each projector is the central idempotent (dim F_lam / n!) * sum over tau of
    chi_lam(tau) B(tau), assembled from per-class permutation-matrix sums and
    the memoized character table.  The n! sweep is refused above
    ``factorial_cap`` (default 8); callers that genuinely need more pass a
    larger cap explicitly.
    """
    _check_dense_size(d, n)
    if n > factorial_cap:
        raise ValueError(f"projector construction for n={n} exceeds factorial cap {factorial_cap}")
    return _projector_family(d, n)


def isotypical_projector(
    lam: YoungFrame, d: int, *, factorial_cap: int = FACTORIAL_LOOP_CAP
) -> TensorOperator:
    """The projector onto the lam isotypical block of (C^d)^(x n), n = |lam|."""
    if not lam.fits(d):
        raise ValueError(f"frame {lam} does not fit in {d} rows")
    return isotypical_projectors(d, lam.n, factorial_cap=factorial_cap)[lam]


def clear_projector_cache() -> None:
    """Drop cached projector families (the n=10 family holds ~200 MB)."""
    _projector_family.cache_clear()


# -- channel building blocks ----------------------------------------------------


def tensor_with_maximally_mixed(a: TensorOperator, k: int, d: int | None = None) -> TensorOperator:
    """a tensored with k maximally mixed sites appended on the right."""
    d = a.d if d is None else d
    if d != a.d:
        raise ValueError("local dimension mismatch")
    if k == 0:
        return a
    return a.kron(TensorOperator.maximally_mixed(d, k))


def insert_maximally_mixed(a: TensorOperator, positions: Sequence[int], n: int) -> TensorOperator:
    """Extend ``a`` to ``n`` sites with maximally mixed states at ``positions``.

    The sites of ``a`` fill the complementary positions in order.
    """
    positions = sorted(set(positions))
    k = len(positions)
    if a.n + k != n:
        raise ValueError(f"{a.n} sites plus {k} insertions do not give {n}")
    if positions and not 0 <= positions[0] <= positions[-1] < n:
        raise ValueError(f"positions {positions} outside range(0, {n})")
    if k == 0:
        return a
    d = a.d
    _check_dense_size(d, n)
    big = np.kron(a.mat, np.identity(d**k, dtype=object))
    remaining = [s for s in range(n) if s not in set(positions)]
    source_site = remaining + positions  # axis s of `big` carries site source_site[s]
    src_axis = {site: axis for axis, site in enumerate(source_site)}
    axes = [src_axis[t] for t in range(n)] + [n + src_axis[t] for t in range(n)]
    tensor = big.reshape((d,) * (2 * n)).transpose(axes)
    return TensorOperator(d, n, a.scale * Fraction(1, d**k), tensor.reshape((d**n, d**n)))


def conjugate_by_permutation(a: TensorOperator, tau: Permutation) -> TensorOperator:
    """B(tau) a B(tau)^{-1}, computed as an index gather (no matrix product)."""
    if tau.n != a.n:
        raise ValueError("permutation size does not match operator sites")
    g = _word_map(tau.inverse().images, a.d)
    return TensorOperator(a.d, a.n, a.scale, a.mat[np.ix_(g, g)])


def twirl(a: TensorOperator, *, factorial_cap: int = FACTORIAL_LOOP_CAP) -> TensorOperator:
    """Average of B(tau) a B(tau)^{-1} over all of S_n (the permutation twirl)."""
    n, d = a.n, a.d
    if n > factorial_cap:
        raise ValueError(f"twirl over S_{n} exceeds factorial cap {factorial_cap}")
    dim = d**n
    acc = np.zeros((dim, dim), dtype=object)
    for images in itertools.permutations(range(n)):
        # Conjugating by B(tau) permutes rows and columns by the word map of
        # tau^{-1}; summing over the whole group, gathering by tau is the same.
        g = _word_map(images, d)
        acc += a.mat[np.ix_(g, g)]
    return TensorOperator(d, n, a.scale / math.factorial(n), acc)


def depolarise_n(a: TensorOperator, q: Fraction | int | str) -> TensorOperator:
    """Apply the depolarising channel with replacement weight ``q`` to every site.

    Realized as the exact subset decomposition: each subset S of sites is
    traced out and replaced by maximally mixed states, weighted by
    q^|S| (1-q)^(n-|S|).  ``q`` is the probability that a single site is
    replaced by the maximally mixed state (q=0 is the identity channel, q=1
    full depolarisation).
    """
    q = Fraction(q)
    if not 0 <= q <= 1:
        raise ValueError(f"depolarising weight must lie in [0, 1], got {q}")
    n = a.n
    total = TensorOperator.zero(a.d, n)
    for k in range(n + 1):
        w = q**k * (1 - q) ** (n - k)
        if w == 0:
            continue
        for subset in itertools.combinations(range(n), k):
            reduced_op = a.partial_trace(subset)
            total = total + w * insert_maximally_mixed(reduced_op, subset, n)
    return total.reduced()


def overlap(lam_prime: YoungFrame, a: TensorOperator, *, factorial_cap: int = FACTORIAL_LOOP_CAP) -> Fraction:
    """Exact overlap tr(P_{lam'} a) with the isotypical projector of ``a``'s size."""
    if lam_prime.n != a.n:
        raise ValueError(f"frame has {lam_prime.n} boxes but operator acts on {a.n} sites")
    proj = isotypical_projector(lam_prime, a.d, factorial_cap=factorial_cap)
    return proj.hs_product(a)


# -- exact positive-semidefiniteness test ------------------------------------------


def is_positive_semidefinite(a: TensorOperator) -> bool:
    """Exact PSD test for a symmetric rational matrix.

    Rational LDL-style elimination with diagonal pivoting: a negative diagonal
    entry refutes PSD immediately; a zero diagonal entry with a nonzero
    residual row refutes it too (a PSD matrix vanishes on the row and column
    of any zero diagonal element); otherwise eliminate on a positive pivot and
    recurse on the Schur complement.
    """
    if not np.array_equal(a.mat, a.mat.T):
        raise ValueError("PSD test expects a symmetric operator")
    m = a.mat.shape[0]
    work = a.mat * a.scale  # Fraction-valued working copy, scale included
    alive = list(range(m))
    while alive:
        diag = [work[i, i] for i in alive]
        if any(x < 0 for x in diag):
            return False
        pivot_pos = next((t for t, x in enumerate(diag) if x > 0), None)
        if pivot_pos is None:
            return all(work[i, j] == 0 for i in alive for j in alive)
        i = alive.pop(pivot_pos)
        p = work[i, i]
        col = np.array([work[j, i] for j in alive], dtype=object)
        if alive:
            sub = np.ix_(alive, alive)
            work[sub] = work[sub] - np.outer(col, col) / p
    return True


# -- plain-text dump ---------------------------------------------------------------


def dump_operator(a: TensorOperator) -> str:
    """Sparse triplet text: header with (d, n), then "row col num/den" lines."""
    a = a.reduced()
    lines = [f"# tensor-operator d={a.d} n={a.n}"]
    rows, cols = np.nonzero(a.mat)
    for i, j in zip(rows.tolist(), cols.tolist()):
        v = a.entry(i, j)
        lines.append(f"{i} {j} {v.numerator}/{v.denominator}")
    return "\n".join(lines) + "\n"


def load_operator(text: str) -> TensorOperator:
    """Inverse of :func:`dump_operator`."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    header = lines[0]
    if not header.startswith("# tensor-operator"):
        raise ValueError("missing tensor-operator header")
    fields = dict(part.split("=") for part in header.split()[2:])
    d, n = int(fields["d"]), int(fields["n"])
    dim = d**n
    entries = np.empty((dim, dim), dtype=object)
    entries[:] = Fraction(0)
    for ln in lines[1:]:
        i_s, j_s, val = ln.split()
        entries[int(i_s), int(j_s)] = Fraction(val)
    return TensorOperator.from_fraction_matrix(d, n, entries)
