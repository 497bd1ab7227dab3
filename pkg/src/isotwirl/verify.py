"""Verification suites: exhaustive exact checks of the package's claims.

Five suites, each a list of named checks over a configurable size range:

* ``saturation`` - dimension identities, LR tableau count vs character
  oracle, restriction identity, eigenvalue-inequality necessity and the
  LR-positivity feasibility test.
* ``support``    - the support-window statement: outside the (d-1)*k window
  the dense overlap, the fast-path weight and the branching chains all vanish;
  plus the projector-pair domination inequality (exact PSD test).
* ``oracle``     - the dense path agrees with itself (projector algebra,
  twirl and channel identities) and the fast path reproduces it entry by
  entry as exact rationals.
* ``tail``       - the exponential tail bound dominates every measured
  far-away weight, and the output mode matches between fast path and oracle.
* ``xybound``    - the entropy bound on the extremal dimension products.

Reports are deterministic: no timestamps, fixed iteration orders, failures
truncated to the first five, and JSON dumped with sorted keys.  Two runs with
the same configuration produce byte-identical reports.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import oracle as orc
from .frames import (
    ProbabilityPair,
    YoungFrame,
    binary_entropy,
    dim_sym,
    dim_unitary,
    enumerate_frames,
    format_frame,
    l1_distance,
    rel_entropy,
)
from .horn import HornTriple, basic_horn_holds, branching_disjoint, horn_feasible, within_support_window
from .lr import lr_coefficient, lr_via_characters
from .spectra import (
    channel_output_spectrum,
    paired_block_overlap,
    partial_trace_decomposition,
    tail_bound_exponent,
    twirl_spectrum,
    xy_entropy_bound,
    xy_optimize,
)
from .symmetric_group import Permutation, enumerate_group

MAX_FAILURES_REPORTED = 5

DEFAULT_Q_GRID = tuple(Fraction(i, 10) for i in range(1, 10))


@dataclass(frozen=True)
class RunConfig:
    """Size and determinism knobs for the verification suites."""

    d_max: int = 3
    n_max: int = 6
    q_grid: tuple[Fraction, ...] = DEFAULT_Q_GRID
    seed: int = 0

    def __post_init__(self) -> None:
        if not 2 <= self.d_max <= 3:
            raise ValueError("d_max must be 2 or 3")
        if not 1 <= self.n_max <= 10:
            raise ValueError("n_max must lie in 1..10")
        if any(not 0 <= q <= 1 for q in self.q_grid):
            raise ValueError("q grid values must lie in [0, 1]")

    def to_json_obj(self) -> dict:
        return {
            "d_max": self.d_max,
            "n_max": self.n_max,
            "q_grid": [f"{q.numerator}/{q.denominator}" for q in self.q_grid],
            "seed": self.seed,
        }


@dataclass
class CheckResult:
    name: str
    passed: bool
    checked: int
    failures: list[str] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    def to_json_obj(self) -> dict:
        obj = {"name": self.name, "passed": self.passed, "checked": self.checked,
               "failures": self.failures}
        if self.info:
            obj["info"] = self.info
        return obj


@dataclass
class SuiteReport:
    suite: str
    config: RunConfig
    checks: list[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> str:
        obj = {
            "suite": self.suite,
            "config": self.config.to_json_obj(),
            "checks": [c.to_json_obj() for c in self.checks],
            "passed": self.passed,
        }
        return json.dumps(obj, indent=2, sort_keys=True) + "\n"


class _Collector:
    """Accumulates pass/fail instances for one named check."""

    def __init__(self, name: str):
        self.name = name
        self.checked = 0
        self.failures: list[str] = []
        self.info: dict = {}

    def record(self, ok: bool, describe: str) -> None:
        self.checked += 1
        if not ok and len(self.failures) < MAX_FAILURES_REPORTED:
            self.failures.append(describe)

    def expect_equal(self, a, b, describe: str) -> None:
        self.record(a == b, f"{describe}: {a} != {b}")

    def result(self) -> CheckResult:
        return CheckResult(self.name, not self.failures, self.checked, self.failures, self.info)


def _dense_sizes(cfg: RunConfig) -> list[tuple[int, int]]:
    """(d, n_cap) pairs for dense-oracle sweeps, bounded by the hard caps."""
    sizes = [(2, min(cfg.n_max, 8))]
    if cfg.d_max >= 3:
        sizes.append((3, min(cfg.n_max, 6)))
    return sizes


def _random_int_matrix(rng: random.Random, dim: int, lo: int = -5, hi: int = 5) -> np.ndarray:
    mat = np.empty((dim, dim), dtype=object)
    for i in range(dim):
        for j in range(dim):
            mat[i, j] = rng.randint(lo, hi)
    return mat


def _random_operator(rng: random.Random, d: int, n: int) -> orc.TensorOperator:
    return orc.TensorOperator(d, n, Fraction(1, rng.randint(1, 9)), _random_int_matrix(rng, d**n))


def _random_psd_operator(rng: random.Random, d: int, n: int) -> orc.TensorOperator:
    r = _random_int_matrix(rng, d**n, -3, 3)
    return orc.TensorOperator(d, n, Fraction(1, rng.randint(1, 9)), r.T @ r)


# ---------------------------------------------------------------------------
# saturation: dimensions, LR cross-validation, eigenvalue-sum inequalities
# ---------------------------------------------------------------------------


def suite_saturation(cfg: RunConfig) -> list[CheckResult]:
    dims = _Collector("schur_weyl_dimension_identity")
    for d in range(2, cfg.d_max + 1):
        for n in range(0, cfg.n_max + 1):
            total = sum(dim_sym(f) * dim_unitary(f, d) for f in enumerate_frames(d, n))
            dims.expect_equal(total, d**n, f"d={d} n={n}")

    cross = _Collector("lr_tableaux_vs_characters")
    restrict = _Collector("lr_restriction_dimension_identity")
    symmetry = _Collector("lr_symmetry")
    necessity = _Collector("horn_necessity_of_basic_inequalities")
    feasibility = _Collector("horn_feasible_iff_lr_positive")
    d = cfg.d_max
    for n in range(0, cfg.n_max + 1):
        for lam in enumerate_frames(d, n):
            for l in range(0, n + 1):
                k = n - l
                total = 0
                for mu in enumerate_frames(d, l):
                    for nu in enumerate_frames(d, k):
                        c = lr_coefficient(lam, mu, nu)
                        cross.expect_equal(
                            c, lr_via_characters(lam, mu, nu), f"c^{lam}_{mu},{nu}"
                        )
                        symmetry.expect_equal(
                            c, lr_coefficient(lam, nu, mu), f"symmetry {lam}|{mu},{nu}"
                        )
                        total += c * dim_sym(mu) * dim_sym(nu)
                        triple = HornTriple(lam, mu, nu, d)
                        feasible = horn_feasible(triple)
                        feasibility.expect_equal(feasible, c > 0, f"feasibility {lam}|{mu},{nu}")
                        if c > 0:
                            necessity.record(
                                basic_horn_holds(triple),
                                f"c>0 but basic inequalities fail: {lam}|{mu},{nu}",
                            )
                        elif not basic_horn_holds(triple):
                            necessity.record(
                                not feasible, f"basic false but feasible: {lam}|{mu},{nu}"
                            )
                restrict.expect_equal(total, dim_sym(lam), f"restriction {lam} split {l}+{k}")

    tworow = _Collector("lr_two_row_multiplicity_free")
    for n in range(0, min(cfg.n_max + 4, 10) + 1):
        for lam in enumerate_frames(2, n):
            for l in range(0, n + 1):
                for mu in enumerate_frames(2, l):
                    for nu in enumerate_frames(2, n - l):
                        c = lr_coefficient(lam, mu, nu)
                        tworow.record(c in (0, 1), f"c^{lam}_{mu},{nu} = {c}")

    entropy = _Collector("pinsker_and_dimension_entropy_bound")
    grid = [Fraction(i, 8) for i in range(0, 9)]
    for r0 in grid:
        for s0 in grid:
            r, s = ProbabilityPair(r0), ProbabilityPair(s0)
            dv = rel_entropy(r, s)
            lhs = l1_distance(r, s) ** 2 / (2 * math.log(2))
            entropy.record(dv >= lhs - 1e-12, f"Pinsker fails at r0={r0} s0={s0}")
    for k in range(1, 13):
        for gamma in enumerate_frames(2, k):
            bound = 2.0 ** (k * binary_entropy(Fraction(gamma.row(0), k)))
            entropy.record(
                dim_sym(gamma) <= bound * (1 + 1e-12),
                f"dim bound fails at {gamma} k={k}",
            )

    return [c.result() for c in (dims, cross, restrict, symmetry, necessity, feasibility, tworow, entropy)]


# ---------------------------------------------------------------------------
# support: zero weight outside the (d-1)*k window
# ---------------------------------------------------------------------------


def padded_reduction(proj: orc.TensorOperator, n: int, k: int) -> orc.TensorOperator:
    """tr over the last k sites of ``proj``, tensored back with the identity."""
    reduced = proj.partial_trace(range(n - k, n))
    if k == 0:
        return reduced
    return reduced.kron(orc.TensorOperator.identity(proj.d, k))


def suite_support(cfg: RunConfig) -> list[CheckResult]:
    dense = _Collector("dense_overlap_zero_outside_window")
    outside_count = 0
    for d, n_cap in _dense_sizes(cfg):
        for n in range(1, n_cap + 1):
            frames = enumerate_frames(d, n)
            family = orc.isotypical_projectors(d, n)
            for lam in frames:
                for k in range(0, n + 1):
                    padded = padded_reduction(family[lam], n, k)
                    for lam_p in frames:
                        if within_support_window(lam, lam_p, d, k):
                            continue
                        outside_count += 1
                        value = family[lam_p].hs_product(padded)
                        dense.record(
                            value == 0,
                            f"d={d} lam={lam} lam'={lam_p} k={k}: overlap {value} != 0",
                        )
    dense.info["outside_window_cases"] = outside_count

    engine = _Collector("engine_weight_zero_outside_window")
    for d in range(2, cfg.d_max + 1):
        for n in range(1, cfg.n_max + 1):
            frames = enumerate_frames(d, n)
            for lam in frames:
                for k in range(0, n + 1):
                    table = twirl_spectrum(lam, k, d, normalized=False)
                    for lam_p in frames:
                        if not within_support_window(lam, lam_p, d, k):
                            engine.record(
                                table.weight(lam_p) == 0,
                                f"d={d} lam={lam} lam'={lam_p} k={k}: engine weight nonzero",
                            )

    chains = _Collector("branching_chains_disjoint_outside_window")
    for d in range(2, cfg.d_max + 1):
        for n in range(1, min(cfg.n_max, 7) + 1):
            frames = enumerate_frames(d, n)
            for lam in frames:
                for lam_p in frames:
                    for k in range(0, n + 1):
                        if within_support_window(lam, lam_p, d, k):
                            continue
                        chains.record(
                            branching_disjoint(lam, lam_p, n - k, k, d),
                            f"d={d} lam={lam} lam'={lam_p} k={k}: common chain exists",
                        )

    # Support growth across k is an empirical observation, not a proven
    # statement: violations are counted and reported, never asserted.
    growth = _Collector("support_growth_monotone_report")
    violations: list[str] = []
    violation_count = 0
    for d in range(2, cfg.d_max + 1):
        for n in range(1, cfg.n_max + 1):
            for lam in enumerate_frames(d, n):
                prev: set | None = None
                for k in range(0, n + 1):
                    supp = set(twirl_spectrum(lam, k, d, normalized=False).support())
                    if prev is not None:
                        growth.checked += 1
                        missing = prev - supp
                        if missing:
                            violation_count += 1
                            if len(violations) < MAX_FAILURES_REPORTED:
                                violations.append(
                                    f"d={d} lam={lam} k={k}: {len(missing)} frames dropped"
                                )
                    prev = supp
    growth.info["violations"] = violations
    growth.info["violation_count"] = violation_count

    psd = _Collector("projector_pair_domination_psd")
    for n in range(1, min(cfg.n_max, 6) + 1):
        family = orc.isotypical_projectors(2, n)
        small = {m: orc.isotypical_projectors(2, m) for m in range(0, n + 1)}
        for lam in enumerate_frames(2, n):
            for l in range(0, n + 1):
                k = n - l
                dominating = orc.TensorOperator.zero(2, n)
                for mu in enumerate_frames(2, l):
                    for nu in enumerate_frames(2, k):
                        if lr_coefficient(lam, mu, nu) > 0:
                            dominating = dominating + small[l][mu].kron(small[k][nu])
                diff = dominating - family[lam]
                psd.record(
                    orc.is_positive_semidefinite(diff),
                    f"lam={lam} split {l}+{k}: domination difference not PSD",
                )

    return [c.result() for c in (dense, engine, chains, growth, psd)]


# ---------------------------------------------------------------------------
# oracle: dense self-consistency and fast path equality
# ---------------------------------------------------------------------------


def oracle_twirl_overlap(
    family: dict[YoungFrame, orc.TensorOperator],
    reductions: dict[tuple[YoungFrame, int], orc.TensorOperator],
    lam: YoungFrame,
    k: int,
    lam_p: YoungFrame,
    d: int,
) -> Fraction:
    """Dense value of tr{P_lam' (tr_{[k]} P_lam tensor pi_{[k]})}.

    Evaluated through the partial-trace pairing tr{tr_B(P_lam') tr_B(P_lam)},
    which is the same exact number (adjointness of the partial trace); the
    equality of this route with the literal padded product is itself one of
    the oracle suite's checks.
    """
    return reductions[(lam_p, k)].hs_product(reductions[(lam, k)]) / d**k


def suite_oracle(cfg: RunConfig) -> list[CheckResult]:
    rng = random.Random(cfg.seed)

    algebra = _Collector("projector_algebra")
    for d, n_cap in _dense_sizes(cfg):
        for n in range(1, n_cap + 1):
            family = orc.isotypical_projectors(d, n)
            total = orc.TensorOperator.zero(d, n)
            frames = list(family)
            for lam in frames:
                p = family[lam]
                total = total + p
                algebra.record(p @ p == p, f"d={d} n={n} {lam}: not idempotent")
                algebra.expect_equal(
                    p.trace(), dim_sym(lam) * dim_unitary(lam, d), f"d={d} n={n} {lam}: trace"
                )
                algebra.record(
                    np.array_equal(p.mat, p.mat.T), f"d={d} n={n} {lam}: not symmetric"
                )
            algebra.record(
                total == orc.TensorOperator.identity(d, n), f"d={d} n={n}: projectors do not sum to identity"
            )
            # For symmetric idempotents tr(PQ) equals the squared Frobenius
            # norm of PQ, so a zero pairing certifies PQ = 0 exactly.
            for i, lam in enumerate(frames):
                for lam_p in frames[i + 1 :]:
                    algebra.expect_equal(
                        family[lam].hs_product(family[lam_p]),
                        Fraction(0),
                        f"d={d} n={n}: {lam} and {lam_p} not orthogonal",
                    )

    rep = _Collector("permutation_representation")
    for d in range(2, cfg.d_max + 1):
        for s in enumerate_group(3):
            for t in enumerate_group(3):
                rep.record(
                    orc.perm_operator(s, d) @ orc.perm_operator(t, d) == orc.perm_operator(s * t, d),
                    f"d={d}: B({s.images})B({t.images}) != B(product)",
                )
    n = min(cfg.n_max, 6)
    for _ in range(6):
        imgs = list(range(n))
        rng.shuffle(imgs)
        s = Permutation(tuple(imgs))
        rng.shuffle(imgs)
        t = Permutation(tuple(imgs))
        rep.record(
            orc.perm_operator(s, 2) @ orc.perm_operator(t, 2) == orc.perm_operator(s * t, 2),
            f"random pair at n={n}",
        )

    commute = _Collector("projector_commutes_with_permutations")
    for d, n_cap in _dense_sizes(cfg):
        for n in range(2, min(n_cap, 6) + 1):
            family = orc.isotypical_projectors(d, n)
            perms = list(enumerate_group(n)) if n <= 4 else []
            if not perms:
                pool = list(enumerate_group(min(n, 8), cap=8))
                perms = [pool[rng.randrange(len(pool))] for _ in range(8)]
            for lam, p in family.items():
                for tau in perms:
                    commute.record(
                        orc.conjugate_by_permutation(p, tau) == p,
                        f"d={d} n={n} {lam}: fails for {tau.images}",
                    )

    reduction_checks = _Collector("partial_trace_properties")
    for _ in range(4):
        a = _random_operator(rng, 2, 3)
        reduction_checks.expect_equal(a.partial_trace([0, 2]).trace(), a.trace(), "trace preservation")
        reduction_checks.expect_equal(a.partial_trace([]).trace(), a.trace(), "empty site set")
        full = a.partial_trace(range(3))
        reduction_checks.expect_equal(full.entry(0, 0), a.trace(), "full trace")
    mixed = orc.tensor_with_maximally_mixed(_random_operator(rng, 2, 2), 2)
    reduction_checks.expect_equal(
        mixed.partial_trace([2, 3]).trace(), mixed.trace(), "mixed-padded trace"
    )

    branching = _Collector("branching_table_matches_dense_partial_trace")
    for d, hard in ((2, 6), (3, 5)):
        if d > cfg.d_max:
            continue
        for n in range(1, min(cfg.n_max, hard) + 1):
            family = orc.isotypical_projectors(d, n)
            small = {m: orc.isotypical_projectors(d, m) for m in range(0, n + 1)}
            for lam in enumerate_frames(d, n):
                for k in range(0, n + 1):
                    dense = family[lam].partial_trace(range(n - k, n))
                    table = partial_trace_decomposition(lam, k, d)
                    recon = orc.TensorOperator.zero(d, n - k)
                    for mu, w in table.projector_weights().items():
                        recon = recon + w * small[n - k][mu]
                    branching.record(dense == recon, f"d={d} lam={lam} k={k}")

    twirl_checks = _Collector("twirl_properties")
    for d, hard in ((2, 6), (3, 4)):
        if d > cfg.d_max:
            continue
        n = min(cfg.n_max, hard)
        family = orc.isotypical_projectors(d, n)
        a = _random_operator(rng, d, n)
        tw = orc.twirl(a)
        twirl_checks.expect_equal(tw.trace(), a.trace(), f"d={d}: twirl trace")
        twirl_checks.record(orc.twirl(tw) == tw, f"d={d}: twirl not idempotent")
        for lam, p in family.items():
            twirl_checks.record(orc.twirl(p) == p, f"d={d} {lam}: projector not twirl-invariant")
            twirl_checks.expect_equal(
                p.hs_product(tw), p.hs_product(a), f"d={d} {lam}: overlap changed by twirl"
            )

    pair_expansion = _Collector("twirl_pair_expansion")
    for d, hard in ((2, 5), (3, 4)):
        if d > cfg.d_max:
            continue
        for n in range(2, min(cfg.n_max, hard) + 1):
            family = orc.isotypical_projectors(d, n)
            for l in range(0, n + 1):
                k = n - l
                fam_l = orc.isotypical_projectors(d, l)
                fam_k = orc.isotypical_projectors(d, k)
                for mu in enumerate_frames(d, l):
                    for gamma in enumerate_frames(d, k):
                        literal = orc.twirl(fam_l[mu].kron(fam_k[gamma]))
                        recon = orc.TensorOperator.zero(d, n)
                        for lam_p in enumerate_frames(d, n):
                            w = paired_block_overlap(lam_p, mu, gamma, d) / dim_unitary(lam_p, d)
                            if w:
                                recon = recon + w * family[lam_p]
                        pair_expansion.record(
                            literal == recon, f"d={d} mu={mu} gamma={gamma} (n={n})"
                        )

    channel = _Collector("depolarise_channel_identities")
    for d, hard in ((2, 5), (3, 3)):
        if d > cfg.d_max:
            continue
        n = min(cfg.n_max, hard)
        a = _random_operator(rng, d, n)
        channel.record(orc.depolarise_n(a, 0) == a, f"d={d}: q=0 not identity")
        channel.record(
            orc.depolarise_n(a, 1) == a.trace() * orc.TensorOperator.maximally_mixed(d, n),
            f"d={d}: q=1 not fully mixing",
        )
        for q in (Fraction(1, 3), Fraction(1, 2)):
            out = orc.depolarise_n(a, q)
            channel.expect_equal(out.trace(), a.trace(), f"d={d} q={q}: trace not preserved")
        psd_in = _random_psd_operator(rng, d, min(n, 3))
        channel.record(
            orc.is_positive_semidefinite(orc.depolarise_n(psd_in, Fraction(2, 5))),
            f"d={d}: PSD input mapped outside PSD cone",
        )
        family = orc.isotypical_projectors(d, n)
        for lam in enumerate_frames(d, n):
            p = family[lam]
            for q in (Fraction(1, 4), Fraction(2, 3)):
                literal = orc.depolarise_n(p, q)
                recon = orc.TensorOperator.zero(d, n)
                for k in range(n + 1):
                    w = math.comb(n, k) * q**k * (1 - q) ** (n - k)
                    if w == 0:
                        continue
                    reduced = p.partial_trace(range(n - k, n))
                    padded = orc.tensor_with_maximally_mixed(reduced, k)
                    recon = recon + w * orc.twirl(padded)
                channel.record(
                    literal == recon, f"d={d} lam={lam} q={q}: subset sum != binomial twirl sum"
                )

    fast_twirl = _Collector("fast_path_equals_oracle_twirl_spectra")
    route = _Collector("padded_product_equals_partial_trace_pairing")
    fast_channel = _Collector("fast_path_equals_oracle_channel_spectra")
    q_values = (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1))
    for d, n_cap in _dense_sizes(cfg):
        for n in range(1, n_cap + 1):
            frames = enumerate_frames(d, n)
            family = orc.isotypical_projectors(d, n)
            reductions = {
                (lam, k): family[lam].partial_trace(range(n - k, n))
                for lam in frames
                for k in range(n + 1)
            }
            dense_w = {}
            for lam in frames:
                for k in range(n + 1):
                    literal = padded_reduction(family[lam], n, k)
                    table = twirl_spectrum(lam, k, d, normalized=False)
                    table_norm = twirl_spectrum(lam, k, d, normalized=True)
                    norm = Fraction(dim_sym(lam) * dim_unitary(lam, d))
                    for lam_p in frames:
                        paired = oracle_twirl_overlap(family, reductions, lam, k, lam_p, d)
                        literal_value = family[lam_p].hs_product(literal) / d**k
                        route.expect_equal(
                            literal_value, paired, f"d={d} lam={lam} k={k} lam'={lam_p}"
                        )
                        fast_twirl.expect_equal(
                            table.weight(lam_p), paired, f"d={d} lam={lam} k={k} lam'={lam_p}"
                        )
                        fast_twirl.expect_equal(
                            table_norm.weight(lam_p),
                            paired / norm,
                            f"normalized d={d} lam={lam} k={k} lam'={lam_p}",
                        )
                        dense_w[(lam, k, lam_p)] = paired / norm
            for lam in frames:
                for q in q_values:
                    table = channel_output_spectrum(lam, q, d)
                    fast_channel.expect_equal(table.total(), Fraction(1), f"total d={d} {lam} q={q}")
                    for lam_p in frames:
                        expected = sum(
                            (
                                math.comb(n, k) * q**k * (1 - q) ** (n - k)
                                * dense_w[(lam, k, lam_p)]
                                for k in range(n + 1)
                            ),
                            Fraction(0),
                        )
                        fast_channel.expect_equal(
                            table.weight(lam_p), expected, f"d={d} lam={lam} q={q} lam'={lam_p}"
                        )

    return [
        c.result()
        for c in (
            algebra,
            rep,
            commute,
            reduction_checks,
            branching,
            twirl_checks,
            pair_expansion,
            channel,
            route,
            fast_twirl,
            fast_channel,
        )
    ]


# ---------------------------------------------------------------------------
# tail: exponential bound and output concentration
# ---------------------------------------------------------------------------


def suite_tail(cfg: RunConfig) -> list[CheckResult]:
    bound_check = _Collector("tail_bound_dominates_measured_weight")
    for n in range(2, min(cfg.n_max, 10) + 1):
        frames = enumerate_frames(2, n)
        for q in cfg.q_grid:
            spectra = {lam: channel_output_spectrum(lam, q, 2) for lam in frames}
            for lam in frames:
                for lam_p in frames:
                    gap = abs(lam.row(0) - lam_p.row(0))
                    if Fraction(gap, n) <= q:
                        continue
                    measured = spectra[lam].weight(lam_p)
                    exponent = tail_bound_exponent(lam, lam_p, q, n)
                    if measured == 0:
                        ok = True
                    else:
                        log_measured = math.log2(measured.numerator) - math.log2(measured.denominator)
                        ok = log_measured <= exponent + 1e-12
                    bound_check.record(
                        ok, f"n={n} q={q} lam={lam} lam'={lam_p}: {float(measured)} > 2**{exponent}"
                    )

    concentration = _Collector("output_mode_matches_oracle")
    modes = []
    n = min(cfg.n_max, 8)
    source = YoungFrame((n,))
    frames = enumerate_frames(2, n)
    family = orc.isotypical_projectors(2, n)
    reductions = {
        (lam, k): family[lam].partial_trace(range(n - k, n))
        for lam in frames
        for k in range(n + 1)
    }
    norm = Fraction(dim_sym(source) * dim_unitary(source, 2))
    for q in cfg.q_grid:
        engine_table = channel_output_spectrum(source, q, 2)
        oracle_weights = {}
        for lam_p in frames:
            oracle_weights[lam_p] = sum(
                (
                    math.comb(n, k) * q**k * (1 - q) ** (n - k)
                    * oracle_twirl_overlap(family, reductions, source, k, lam_p, 2) / norm
                    for k in range(n + 1)
                ),
                Fraction(0),
            )
        oracle_mode = max(frames, key=lambda f: (oracle_weights[f], -frames.index(f)))
        engine_mode = engine_table.mode()
        concentration.expect_equal(
            format_frame(engine_mode, 2), format_frame(oracle_mode, 2), f"mode at n={n} q={q}"
        )
        modes.append(
            {
                "q": f"{q.numerator}/{q.denominator}",
                "mode_row1": engine_mode.row(0),
                "half_weight_reference": float(n * q / 2),
                "complement_reference": float(n * (1 - q / 2)),
            }
        )
    concentration.info["n"] = n
    concentration.info["modes"] = modes

    return [bound_check.result(), concentration.result()]


# ---------------------------------------------------------------------------
# xybound: extremal dimension products against the entropy bound
# ---------------------------------------------------------------------------


def suite_xybound(cfg: RunConfig) -> list[CheckResult]:
    bound = _Collector("xy_extrema_within_entropy_bound")
    for n in range(1, min(cfg.n_max, 10) + 1):
        source = YoungFrame((n,))
        for lam_p in enumerate_frames(2, n):
            for k in range(0, n + 1):
                chk = xy_entropy_bound(lam_p, k)
                bound.record(chk.holds, f"n={n} lam'={lam_p} k={k}: X={chk.x} bound={chk.bound}")
                if lam_p.row(1) > k:
                    bound.record(chk.x == 0, f"n={n} lam'={lam_p} k={k}: X nonzero beyond window")

    consistency = _Collector("xy_empty_iff_chains_disjoint")
    for n in range(1, min(cfg.n_max, 8) + 1):
        frames = enumerate_frames(2, n)
        for lam in frames:
            for lam_p in frames:
                for k in range(0, n + 1):
                    extrema = xy_optimize(lam, lam_p, n - k, k, 2)
                    disjoint = branching_disjoint(lam, lam_p, n - k, k, 2)
                    consistency.expect_equal(
                        extrema.x == 0, disjoint, f"n={n} lam={lam} lam'={lam_p} k={k}"
                    )

    return [bound.result(), consistency.result()]


# ---------------------------------------------------------------------------
# suite registry
# ---------------------------------------------------------------------------


SUITES = {
    "saturation": suite_saturation,
    "support": suite_support,
    "oracle": suite_oracle,
    "tail": suite_tail,
    "xybound": suite_xybound,
}


def run_suite(name: str, cfg: RunConfig | None = None) -> SuiteReport:
    """Run one suite (or "all") and return its deterministic report."""
    cfg = cfg or RunConfig()
    if name == "all":
        checks = []
        for suite_name, fn in SUITES.items():
            for check in fn(cfg):
                check.name = f"{suite_name}/{check.name}"
                checks.append(check)
        return SuiteReport("all", cfg, checks)
    if name not in SUITES:
        raise KeyError(name)
    return SuiteReport(name, cfg, SUITES[name](cfg))
