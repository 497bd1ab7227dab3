"""Fast combinatorial path: channel output spectra over isotypical blocks.

Where the dense oracle multiplies d^n-dimensional matrices, the functions here
compute the same exact rational numbers purely from dimension counts and
Littlewood-Richardson coefficients, scaling far beyond the oracle's caps:

* :func:`partial_trace_decomposition` expands the partial trace of an
  isotypical projector over the smaller isotypical projectors,
* :func:`twirl_spectrum` gives the exact weight of each block lam' after k
  sites of the lam block have been replaced by maximally mixed states,
* :func:`channel_output_spectrum` resums those over the binomial distribution
  of depolarised-site counts, yielding the full output distribution of the
  site-wise depolarising channel on the flat state pi_lam,
* :func:`channel_tail_bound` is the closed-form exponential upper bound on a
  single far-away weight, and :func:`xy_optimize` /
  :func:`xy_entropy_bound` solve the extremal dimension-product problems that
  control it.

All spectra are exact ``Fraction`` tables; floats appear only in the entropy
bounds and in serialized convenience columns.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .frames import (
    YoungFrame,
    binary_entropy,
    dim_sym,
    dim_unitary,
    enumerate_frames,
    format_frame,
)
from .lr import lr_coefficient, lr_nonzero_pairs


@dataclass
class BranchingTable:
    """Expansion of tr over k sites of P_lam into projectors on l = n-k sites.

    ``entries[(mu, nu)]`` holds dim U_lam * c^lam_{mu nu} * dim F_nu / dim U_mu;
    summing the entries over nu gives the coefficient of P_mu.
    """

    source: YoungFrame
    l: int
    k: int
    d: int
    entries: dict[tuple[YoungFrame, YoungFrame], Fraction]

    def coefficient(self, mu: YoungFrame, nu: YoungFrame) -> Fraction:
        return self.entries.get((mu, nu), Fraction(0))

    def projector_weights(self) -> dict[YoungFrame, Fraction]:
        """Total weight of each P_mu: sum of entries over nu."""
        out: dict[YoungFrame, Fraction] = {}
        for (mu, _nu), c in self.entries.items():
            out[mu] = out.get(mu, Fraction(0)) + c
        return out


def partial_trace_decomposition(lam: YoungFrame, k: int, d: int) -> BranchingTable:
    """Exact coefficients of tr_{[k]} P_lam over the P_mu with mu in YF_{d, n-k}."""
    n = lam.n
    if not 0 <= k <= n:
        raise ValueError(f"k={k} outside 0..{n}")
    l = n - k
    du_lam = dim_unitary(lam, d)
    entries: dict[tuple[YoungFrame, YoungFrame], Fraction] = {}
    for mu, nu in lr_nonzero_pairs(lam, l, k, d):
        c = lr_coefficient(lam, mu, nu)
        entries[(mu, nu)] = Fraction(du_lam * c * dim_sym(nu), dim_unitary(mu, d))
    return BranchingTable(lam, l, k, d, entries)


def paired_block_overlap(lam_prime: YoungFrame, mu: YoungFrame, gamma: YoungFrame, d: int) -> Fraction:
    """tr{P_lam' (P_mu x P_gamma)} divided by dim F_lam'.

    Equals c^lam'_{mu gamma} * dim F_mu * dim F_gamma * dim U_lam' / dim F_lam';
    in particular it vanishes exactly when the LR coefficient does.
    """
    if mu.n + gamma.n != lam_prime.n:
        raise ValueError("box counts do not add up")
    c = lr_coefficient(lam_prime, mu, gamma)
    if c == 0:
        return Fraction(0)
    return Fraction(
        c * dim_sym(mu) * dim_sym(gamma) * dim_unitary(lam_prime, d), dim_sym(lam_prime)
    )


@dataclass
class SpectralTable:
    """Exact weights over the frames of YF_{d,n}; only nonzero entries stored.

    Entries are kept in the decreasing-lex frame enumeration order, so
    iteration and serialization are byte-reproducible.
    """

    d: int
    n: int
    entries: dict[YoungFrame, Fraction]

    def weight(self, lam: YoungFrame) -> Fraction:
        return self.entries.get(lam, Fraction(0))

    def support(self) -> list[YoungFrame]:
        return list(self.entries)

    def total(self) -> Fraction:
        return sum(self.entries.values(), Fraction(0))

    def mode(self) -> YoungFrame:
        """Frame of maximal weight; ties resolve to the enumeration-first frame."""
        if not self.entries:
            raise ValueError("empty table has no mode")
        best = None
        best_w = None
        for lam, w in self.entries.items():
            if best_w is None or w > best_w:
                best, best_w = lam, w
        return best

    def __iter__(self) -> Iterator[tuple[YoungFrame, Fraction]]:
        return iter(self.entries.items())


def _assemble_table(d: int, n: int, weights: dict[YoungFrame, Fraction]) -> SpectralTable:
    ordered = {
        lam: weights[lam] for lam in enumerate_frames(d, n) if weights.get(lam, Fraction(0)) != 0
    }
    return SpectralTable(d, n, ordered)


def twirl_spectrum(lam: YoungFrame, k: int, d: int, *, normalized: bool = True) -> SpectralTable:
    """Weight of every block lam' after k of the n sites are maximally mixed.

    The weight of lam' is the exact overlap tr{P_lam' (tr_{[k]} P_lam tensor
    pi_{[k]})} (the permutation twirl leaves these overlaps unchanged because
    every P_lam' commutes with the permutation action).  With ``normalized``
    the input is the flat state pi_lam instead of P_lam and the weights form a
    probability distribution.
    """
    n = lam.n
    branching = partial_trace_decomposition(lam, k, d)
    gammas = enumerate_frames(d, k)
    weights: dict[YoungFrame, Fraction] = {}
    for lam_p in enumerate_frames(d, n):
        acc = Fraction(0)
        df = dim_sym(lam_p)
        for (mu, _nu), bcoeff in branching.entries.items():
            for gamma in gammas:
                pbo = paired_block_overlap(lam_p, mu, gamma, d)
                if pbo:
                    acc += bcoeff * pbo * df
        if acc:
            weights[lam_p] = acc / d**k
    if normalized:
        norm = Fraction(dim_sym(lam) * dim_unitary(lam, d))
        weights = {f: w / norm for f, w in weights.items()}
    return _assemble_table(d, n, weights)


def channel_output_spectrum(lam: YoungFrame, q: Fraction | int | str, d: int) -> SpectralTable:
    """Exact distribution of the depolarised flat state pi_lam over the blocks.

    Pr[lam'] = sum over k of C(n,k) q^k (1-q)^(n-k) times the normalized
    twirl spectrum at k; the weights sum to exactly 1.
    """
    q = Fraction(q)
    if not 0 <= q <= 1:
        raise ValueError(f"depolarising weight must lie in [0, 1], got {q}")
    n = lam.n
    weights: dict[YoungFrame, Fraction] = {}
    for k in range(n + 1):
        w = math.comb(n, k) * q**k * (1 - q) ** (n - k)
        if w == 0:
            continue
        for lam_p, value in twirl_spectrum(lam, k, d, normalized=True):
            weights[lam_p] = weights.get(lam_p, Fraction(0)) + w * value
    return _assemble_table(d, n, weights)


def tail_bound_exponent(lam: YoungFrame, lam_prime: YoungFrame, q: Fraction, n: int) -> float:
    """log2 of :func:`channel_tail_bound` (handy for slack-free comparisons)."""
    q = Fraction(q)
    gap = abs(lam.row(0) - lam_prime.row(0))
    ratio = Fraction(gap, n)
    if ratio < q:
        raise ValueError(
            f"bound vacuous: |lam_1 - lam'_1|/n = {ratio} < q = {q} is outside the bound's regime"
        )
    delta = math.log2(n + 1) / n
    return -n * ((2 / math.log(2)) * float(ratio - q) ** 2 - delta)


def channel_tail_bound(lam: YoungFrame, lam_prime: YoungFrame, q: Fraction | int | str, n: int) -> float:
    """Exponential upper bound on Pr[lam'] for the depolarised flat state pi_lam.

    Valid for d = 2 in the regime |lam_1 - lam'_1|/n > q:

        2 ** (-n * ((2/ln 2) * (|lam_1 - lam'_1|/n - q)**2 - log2(n+1)/n))

    The log2(n+1)/n term accounts for summing at most n+1 binomial weights,
    each bounded through the relative-entropy estimate and the (correctly
    oriented) quadratic lower bound on it.  At |lam_1 - lam'_1|/n = q the
    value is >= 1 and carries no information; below that the function raises.
    """
    return 2.0 ** tail_bound_exponent(lam, lam_prime, Fraction(q), n)


@dataclass(frozen=True)
class XYExtrema:
    """Extremal dimension products over connecting branching chains.

    ``x`` is the maximum and ``y`` the minimum of dim F_nu * dim F_mu *
    dim F_gamma over all (mu, nu, gamma) with c^lam_{mu nu} c^lam'_{mu gamma}
    nonzero; both are 0 with ``None`` witnesses when no chain exists.
    """

    x: int
    y: int
    argmax: tuple[YoungFrame, YoungFrame, YoungFrame] | None
    argmin: tuple[YoungFrame, YoungFrame, YoungFrame] | None


def xy_optimize(lam: YoungFrame, lam_prime: YoungFrame, l: int, k: int, d: int) -> XYExtrema:
    """Exhaustive search of the feasible (mu, nu, gamma) triples for X and Y."""
    if l + k != lam.n or lam.n != lam_prime.n:
        raise ValueError("split does not match frame sizes")
    best_max = best_min = 0
    argmax = argmin = None
    k_frames = enumerate_frames(d, k)
    for mu in enumerate_frames(d, l):
        nus = [nu for nu in k_frames if lr_coefficient(lam, mu, nu)]
        if not nus:
            continue
        gammas = [g for g in k_frames if lr_coefficient(lam_prime, mu, g)]
        if not gammas:
            continue
        f_mu = dim_sym(mu)
        for nu in nus:
            for gamma in gammas:
                value = dim_sym(nu) * f_mu * dim_sym(gamma)
                if argmax is None or value > best_max:
                    best_max, argmax = value, (mu, nu, gamma)
                if argmin is None or value < best_min:
                    best_min, argmin = value, (mu, nu, gamma)
    return XYExtrema(best_max, best_min, argmax, argmin)


@dataclass(frozen=True)
class XYBoundCheck:
    bound: float
    x: int
    holds: bool


def xy_entropy_bound(lam_prime: YoungFrame, k: int) -> XYBoundCheck:
    """Check X <= 2**(k*h(lam'_2/k)) for a single-row source frame (d = 2).

    The source is lam = (n) with n = |lam'|; when lam'_2 > k no connecting
    chain exists at all, so the statement degenerates to X = 0.  The
    comparison runs in log2 domain with 1e-12 slack to absorb float rounding
    of the entropy (X is an exact integer).
    """
    n = lam_prime.n
    if not lam_prime.fits(2):
        raise ValueError("single-row bound only covers two-row frames")
    extrema = xy_optimize(YoungFrame((n,)), lam_prime, n - k, k, 2)
    x = extrema.x
    second = lam_prime.row(1)
    if second > k:
        return XYBoundCheck(0.0, x, x == 0)
    ratio = Fraction(second, k) if k else Fraction(0)
    bound = 2.0 ** (k * binary_entropy(ratio))
    holds = x == 0 or math.log2(x) <= k * binary_entropy(ratio) + 1e-12
    return XYBoundCheck(bound, x, holds)


# -- serialization -------------------------------------------------------------


def table_to_csv(table: SpectralTable) -> str:
    """CSV with header frame,weight_numerator,weight_denominator,weight_float."""
    lines = ["frame,weight_numerator,weight_denominator,weight_float"]
    for lam, w in table:
        cell = format_frame(lam, table.d)
        lines.append(f'"{cell}",{w.numerator},{w.denominator},{float(w)!r}')
    return "\n".join(lines) + "\n"


def table_to_json_obj(table: SpectralTable) -> dict:
    """JSON mirror of the CSV with exact "num/den" strings for the rationals."""
    return {
        "d": table.d,
        "n": table.n,
        "entries": [
            {
                "frame": format_frame(lam, table.d),
                "weight": f"{w.numerator}/{w.denominator}",
                "weight_float": float(w),
            }
            for lam, w in table
        ],
    }


def sweep_to_csv(lam: YoungFrame, d: int, grid: list[Fraction], *, exact: bool = False) -> str:
    """Matrix CSV: one row per frame of YF_{d,n}, one column per grid value.

    Cells are floats by default; with ``exact`` they are "num/den" strings.
    Zero-weight cells are written as 0.0 (or "0/1") so every column has the
    same full frame axis.
    """
    if not grid:
        raise ValueError("q grid must be nonempty")
    n = lam.n
    tables = [channel_output_spectrum(lam, q, d) for q in grid]
    header = ["frame"] + [f"q={q.numerator}/{q.denominator}" for q in grid]
    lines = [",".join(header)]
    for lam_p in enumerate_frames(d, n):
        cells = [f'"{format_frame(lam_p, d)}"']
        for table in tables:
            w = table.weight(lam_p)
            cells.append(f"{w.numerator}/{w.denominator}" if exact else repr(float(w)))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"
