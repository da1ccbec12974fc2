"""Spectrum of the Laplacian on a metric graph by secular-matrix root finding.

On each edge an eigenfunction at energy k^2 > 0 is
``f(x) = a cos(kx) + b sin(kx)`` in the edge's arclength coordinate.
Stacking all vertex condition rows applied to the endpoint traces gives a
real 2E x 2E matrix whose smallest singular value vanishes exactly at the
eigenvalues.  Roots are located by a grid scan of sigma_min followed by
golden-section refinement; k = 0 is handled separately with per-edge
linear functions.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .conditions import ConditionSpec, condition_rows
from .graph import MetricGraph, analyze

__all__ = [
    "EdgeWave",
    "EigenvalueRecord",
    "Spectrum",
    "SolverOptions",
    "WeylMismatch",
    "assemble",
    "find_spectrum",
    "solve_zero_modes",
    "eigenfunctions",
    "apply_momentum",
    "residual",
    "dirichlet_spectrum",
    "spectrum_values",
]

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


class WeylMismatch(RuntimeError):
    """Eigenvalue count is inconsistent with the Weyl estimate after all rescans."""

    def __init__(self, message: str, interval: tuple[float, float] | None = None):
        super().__init__(message)
        self.interval = interval


@dataclass(frozen=True)
class EdgeWave:
    """Per-edge wave coefficients of an eigenfunction candidate.

    For k > 0 the function on edge n is ``a_n cos(k x) + b_n sin(k x)``;
    for k = 0 it is ``a_n + b_n x``.  ``coeffs`` has shape (E, 2).
    """

    k: float
    coeffs: np.ndarray


@dataclass(frozen=True)
class EigenvalueRecord:
    k: float
    lam: float
    multiplicity: int


@dataclass(frozen=True)
class Spectrum:
    """Sorted eigenvalue records, complete (with multiplicity) up to ``complete_up_to``."""

    records: tuple[EigenvalueRecord, ...]
    complete_up_to: float

    def values(self, count: int | None = None) -> list[float]:
        """Eigenvalues expanded with multiplicity, smallest first."""
        out: list[float] = []
        for r in self.records:
            out.extend([r.lam] * r.multiplicity)
            if count is not None and len(out) >= count:
                return out[:count]
        if count is not None and len(out) < count:
            raise ValueError(
                f"spectrum holds {len(out)} eigenvalues, {count} requested; raise lam_max"
            )
        return out

    def k_values(self, count: int | None = None) -> list[float]:
        out: list[float] = []
        for r in self.records:
            out.extend([r.k] * r.multiplicity)
            if count is not None and len(out) >= count:
                return out[:count]
        return out

    def total_count(self) -> int:
        return sum(r.multiplicity for r in self.records)


@dataclass(frozen=True)
class SolverOptions:
    """Numerical thresholds of the root scan (defaults are the production values)."""

    grid_points_per_mean_gap: int = 20
    detection_rel: float = 1e-6
    accept_sigma: float = 1e-9
    mult_rel: float = 1e-7
    merge_tol_k: float = 1e-8
    refine_rel_k: float = 1e-12
    max_rescans: int = 4
    weyl_slack_extra: int = 2


def _trace_matrices(g: MetricGraph, k: float) -> tuple[np.ndarray, np.ndarray]:
    """Value and (outward derivative / k) traces of all 2E endpoints.

    Rows are indexed by endpoint (edge_index, end) in the order tails
    first within each edge pair: endpoint (n, 0) -> row 2n, (n, 1) ->
    row 2n+1.  Columns follow the coefficient order (a_1, b_1, a_2, ...).
    """
    E = g.num_edges
    val = np.zeros((2 * E, 2 * E))
    der = np.zeros((2 * E, 2 * E))
    for n, e in enumerate(g.edges):
        c, s = math.cos(k * e.length), math.sin(k * e.length)
        ca, cb = 2 * n, 2 * n + 1
        # tail, x = 0: f = a, f'/k = b (outward = +f')
        val[2 * n, ca] = 1.0
        der[2 * n, cb] = 1.0
        # head, x = L: f = a c + b s, outward derivative/k = a s - b c
        val[2 * n + 1, ca] = c
        val[2 * n + 1, cb] = s
        der[2 * n + 1, ca] = s
        der[2 * n + 1, cb] = -c
    return val, der


def _endpoint_row(n: int, end: int) -> int:
    return 2 * n + end


def assemble(g: MetricGraph, spec: ConditionSpec, k: float) -> np.ndarray:
    """Secular matrix at k > 0: vertex condition rows applied to the traces."""
    if k <= 0:
        raise ValueError("assemble requires k > 0; zero modes use solve_zero_modes")
    val, der = _trace_matrices(g, k)
    blocks = []
    for vi, name in enumerate(g.vertex_names):
        eps = g.endpoints_of_vertex[vi]
        rows = condition_rows(name, len(eps), spec)
        sel = [_endpoint_row(n, end) for n, end in eps]
        if rows.value_rows.shape[0]:
            blocks.append(rows.value_rows @ val[sel])
        if rows.derivative_rows.shape[0]:
            blocks.append(rows.derivative_rows @ der[sel])
    return np.vstack(blocks)


def _assemble_zero(g: MetricGraph, spec: ConditionSpec) -> np.ndarray:
    """k = 0 system over per-edge linear functions a + b x."""
    E = g.num_edges
    val = np.zeros((2 * E, 2 * E))
    der = np.zeros((2 * E, 2 * E))
    for n, e in enumerate(g.edges):
        ca, cb = 2 * n, 2 * n + 1
        val[2 * n, ca] = 1.0
        der[2 * n, cb] = 1.0
        val[2 * n + 1, ca] = 1.0
        val[2 * n + 1, cb] = e.length
        der[2 * n + 1, cb] = -1.0
    blocks = []
    for vi, name in enumerate(g.vertex_names):
        eps = g.endpoints_of_vertex[vi]
        rows = condition_rows(name, len(eps), spec)
        sel = [_endpoint_row(n, end) for n, end in eps]
        if rows.value_rows.shape[0]:
            blocks.append(rows.value_rows @ val[sel])
        if rows.derivative_rows.shape[0]:
            blocks.append(rows.derivative_rows @ der[sel])
    return np.vstack(blocks)


def _sigma_min(m: np.ndarray) -> float:
    return float(np.linalg.svd(m, compute_uv=False)[-1])


def solve_zero_modes(
    g: MetricGraph, spec: ConditionSpec, options: SolverOptions = SolverOptions()
) -> tuple[int, list[EdgeWave]]:
    """Numerical nullity and basis of the k = 0 system."""
    spec.validate_for(g)
    m = _assemble_zero(g, spec)
    _, sv, vt = np.linalg.svd(m)
    smax = sv[0] if sv[0] > 0 else 1.0
    null = sv < options.mult_rel * max(smax, 1.0)
    dim = int(np.sum(null))
    basis = [EdgeWave(k=0.0, coeffs=vt[i].reshape(-1, 2).copy()) for i in range(len(sv)) if null[i]]
    return dim, basis


def _refine_root(
    g: MetricGraph, spec: ConditionSpec, a: float, b: float, options: SolverOptions
) -> float:
    """Golden-section minimization of sigma_min over [a, b]."""
    tol = options.refine_rel_k * max(1.0, b)
    x1 = b - _GOLDEN * (b - a)
    x2 = a + _GOLDEN * (b - a)
    f1 = _sigma_min(assemble(g, spec, x1))
    f2 = _sigma_min(assemble(g, spec, x2))
    while b - a > tol:
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - _GOLDEN * (b - a)
            f1 = _sigma_min(assemble(g, spec, x1))
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + _GOLDEN * (b - a)
            f2 = _sigma_min(assemble(g, spec, x2))
    return x1 if f1 <= f2 else x2


def _multiplicity(g: MetricGraph, spec: ConditionSpec, k: float, options: SolverOptions) -> int:
    sv = np.linalg.svd(assemble(g, spec, k), compute_uv=False)
    # threshold floored at 1: all rows are orthonormal combinations of O(1)
    # traces, and sigma_max itself collapses at fully degenerate roots
    return int(np.sum(sv < options.mult_rel * max(sv[0], 1.0)))


def find_spectrum(
    g: MetricGraph,
    spec: ConditionSpec,
    lam_max: float,
    options: SolverOptions = SolverOptions(),
) -> Spectrum:
    """All eigenvalues in [0, lam_max] with multiplicities.

    Zero modes are counted by a separate linear solve; positive roots come
    from a sigma_min grid scan with golden-section refinement.  A Weyl
    count check guards against missed clusters: on failure the grid step
    is halved and the scan repeated, at most ``options.max_rescans``
    times.
    """
    if lam_max <= 0:
        raise ValueError("lam_max must be positive")
    spec.validate_for(g)
    k_max = math.sqrt(lam_max)
    total_len = g.total_length
    zero_dim, _ = solve_zero_modes(g, spec, options)
    slack = 2 * g.num_edges + options.weyl_slack_extra

    dk = math.pi / (options.grid_points_per_mean_gap * total_len)
    for attempt in range(options.max_rescans + 1):
        roots = _scan_positive_roots(g, spec, k_max, dk, options)
        count = zero_dim + sum(m for _, m in roots)
        if abs(count - total_len * k_max / math.pi) <= slack:
            records = [EigenvalueRecord(0.0, 0.0, zero_dim)] if zero_dim else []
            records.extend(EigenvalueRecord(k, k * k, m) for k, m in roots)
            return Spectrum(records=tuple(records), complete_up_to=lam_max)
        dk /= 2.0
    raise WeylMismatch(
        f"eigenvalue count {count} vs Weyl estimate {total_len * k_max / math.pi:.2f} "
        f"(slack {slack}) after {options.max_rescans} rescans; "
        f"suspected missed cluster in (0, {k_max:.6g}]",
        interval=(0.0, k_max),
    )


def _scan_positive_roots(
    g: MetricGraph,
    spec: ConditionSpec,
    k_max: float,
    dk: float,
    options: SolverOptions,
) -> list[tuple[float, int]]:
    """Refined positive roots (k, multiplicity) in (0, k_max]."""
    # extend two steps past k_max so a root at the endpoint shows an
    # interior local minimum; refined roots beyond k_max are dropped
    n_grid = int(math.ceil(k_max / dk)) + 2
    ks = dk * np.arange(1, n_grid + 1)
    sig = np.array([_sigma_min(assemble(g, spec, k)) for k in ks])
    median = float(np.median(sig))
    low = sig < 0.5 * max(median, 1e-300)

    # group consecutive below-threshold samples into dip regions; a single
    # region can hide several nearby roots, so each region is rescanned on a
    # fine subgrid and every fine-scale local minimum is refined separately
    regions: list[tuple[float, float]] = []
    i = 0
    while i < len(ks):
        if low[i]:
            j = i
            while j + 1 < len(ks) and low[j + 1]:
                j += 1
            regions.append((max(ks[i] - dk, 0.25 * dk), ks[min(j + 1, len(ks) - 1)]))
            i = j + 1
        else:
            i += 1

    threshold = min(options.accept_sigma, options.detection_rel * max(median, 1.0))
    roots: list[tuple[float, int]] = []
    for lo, hi in regions:
        n_fine = max(int(math.ceil((hi - lo) / (dk / 32.0))), 8) + 1
        fine = np.linspace(lo, hi, n_fine)
        fsig = np.array([_sigma_min(assemble(g, spec, k)) for k in fine])
        for j in range(1, n_fine - 1):
            if not (fsig[j] <= fsig[j - 1] and fsig[j] <= fsig[j + 1]):
                continue
            k_star = _refine_root(g, spec, fine[j - 1], fine[j + 1], options)
            s_star = _sigma_min(assemble(g, spec, k_star))
            if s_star >= threshold:
                continue
            if k_star > k_max * (1.0 + 1e-12):
                continue
            roots.append((k_star, 0))

    roots.sort()
    merged: list[tuple[float, int]] = []
    for k_star, _ in roots:
        if merged and abs(k_star - merged[-1][0]) < options.merge_tol_k:
            mid = 0.5 * (k_star + merged[-1][0])
            merged[-1] = (mid, 0)
        else:
            merged.append((k_star, 0))
    return [(k, _multiplicity(g, spec, k, options)) for k, _ in merged]


def eigenfunctions(
    g: MetricGraph,
    spec: ConditionSpec,
    k: float,
    options: SolverOptions = SolverOptions(),
) -> list[EdgeWave]:
    """L2-orthonormal basis of the eigenspace at an accepted root k > 0."""
    spec.validate_for(g)
    m = assemble(g, spec, k)
    _, sv, vt = np.linalg.svd(m)
    null = [vt[i] for i in range(len(sv)) if sv[i] < options.mult_rel * max(sv[0], 1.0)]
    if not null:
        raise ValueError(f"k = {k} is not a root: smallest singular value {sv[-1]:.3e}")
    gram = np.empty((len(null), len(null)))
    for i, ci in enumerate(null):
        for j, cj in enumerate(null):
            gram[i, j] = _l2_inner(g, k, ci, cj)
    w, u = np.linalg.eigh(gram)
    transform = u @ np.diag(1.0 / np.sqrt(w)) @ u.T
    basis = np.asarray(null).T @ transform
    return [EdgeWave(k=k, coeffs=basis[:, j].reshape(-1, 2).copy()) for j in range(basis.shape[1])]


def _l2_inner(g: MetricGraph, k: float, ci: np.ndarray, cj: np.ndarray) -> float:
    """Closed-form L2 inner product of two waves at the same k."""
    total = 0.0
    for n, e in enumerate(g.edges):
        L = e.length
        ai, bi = ci[2 * n], ci[2 * n + 1]
        aj, bj = cj[2 * n], cj[2 * n + 1]
        s2 = math.sin(2 * k * L)
        icc = L / 2.0 + s2 / (4.0 * k)
        iss = L / 2.0 - s2 / (4.0 * k)
        ics = math.sin(k * L) ** 2 / (2.0 * k)
        total += ai * aj * icc + bi * bj * iss + (ai * bj + aj * bi) * ics
    return total


def apply_momentum(f: EdgeWave, g: MetricGraph) -> EdgeWave:
    """Image of a wave under the first-derivative map, up to the scalar -ik.

    Requires a bipartite graph; each edge is read in the orientation from
    the first colour class to the second, so that standard eigenfunctions
    map to anti-standard ones and vice versa.  Mapping a wave (a, b)
    in that orientation gives (b, -a); applying the map twice yields -f.
    """
    if f.k <= 0:
        raise ValueError("the momentum map acts on positive-energy waves")
    a = analyze(g)
    if not a.bipartite:
        raise ValueError("the momentum map needs a bipartite graph")
    first = a.bipartition[0]
    out = np.empty_like(f.coeffs)
    for n, e in enumerate(g.edges):
        sign = 1.0 if g.vertex_names[e.tail] in first else -1.0
        an, bn = f.coeffs[n]
        out[n, 0] = sign * bn
        out[n, 1] = -sign * an
    return EdgeWave(k=f.k, coeffs=out)


def residual(g: MetricGraph, spec: ConditionSpec, f: EdgeWave, k: float) -> float:
    """Max violation of the vertex condition rows by the wave, per unit coefficient norm."""
    c = f.coeffs.reshape(-1)
    norm = float(np.linalg.norm(c))
    if norm == 0:
        return 0.0
    m = _assemble_zero(g, spec) if k == 0 else assemble(g, spec, k)
    return float(np.max(np.abs(m @ c))) / norm


def dirichlet_spectrum(g: MetricGraph, lam_max: float, rel_tol: float = 1e-12) -> Spectrum:
    """Closed-form fully decoupled Dirichlet spectrum: m^2 pi^2 / L_e^2 over all edges."""
    ks: list[float] = []
    for e in g.edges:
        m = 1
        while (m * math.pi / e.length) ** 2 <= lam_max * (1 + 1e-15):
            ks.append(m * math.pi / e.length)
            m += 1
    ks.sort()
    records: list[EigenvalueRecord] = []
    for k in ks:
        if records and abs(k - records[-1].k) <= rel_tol * k:
            last = records[-1]
            records[-1] = EigenvalueRecord(last.k, last.lam, last.multiplicity + 1)
        else:
            records.append(EigenvalueRecord(k, k * k, 1))
    return Spectrum(records=tuple(records), complete_up_to=lam_max)


def spectrum_values(
    g: MetricGraph,
    spec: ConditionSpec,
    count: int,
    options: SolverOptions = SolverOptions(),
) -> list[float]:
    """First ``count`` eigenvalues with multiplicity, growing lam_max as needed."""
    total_len = g.total_length
    k_guess = math.pi * (count + 2 * g.num_edges + 2) / total_len
    lam_max = max(k_guess * k_guess, 1.0)
    for _ in range(8):
        spec_result = find_spectrum(g, spec, lam_max, options)
        if spec_result.total_count() >= count:
            return spec_result.values(count)
        lam_max *= 2.25
    raise RuntimeError(f"could not collect {count} eigenvalues below lam_max = {lam_max:g}")
