"""Self-adjoint vertex condition families and their zero-mode combinatorics.

Every family is stored as per-vertex constraint rows: ``value_rows``
annihilate the vector of endpoint values and ``derivative_rows``
annihilate the vector of outward derivatives, with orthonormal rows and
``rows(value) + rows(derivative) = deg v``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .graph import GraphError, MetricGraph, analyze, cycle_basis

__all__ = [
    "ConditionKind",
    "ConditionSpec",
    "ConditionRows",
    "ConditionError",
    "condition_rows",
    "dual",
    "kernel_dimension_combinatorial",
    "kernel_basis_ast",
    "STANDARD",
    "ANTI_STANDARD",
    "ALL_DIRICHLET",
]


class ConditionError(ValueError):
    """Raised for invalid or inapplicable condition specifications."""


class ConditionKind(enum.Enum):
    STANDARD = "st"
    ANTI_STANDARD = "ast"
    ALL_DIRICHLET = "dir"
    STANDARD_DIRICHLET_B = "stD"
    ANTI_STANDARD_NEUMANN_B = "astN"
    SCALING_INVARIANT = "scinv"


@dataclass(frozen=True)
class ConditionSpec:
    """Which vertex conditions to impose.

    ``boundary`` names the vertex set B for the two mixed kinds (Dirichlet
    or Neumann there, standard or anti-standard elsewhere).  For the
    scaling-invariant kind, ``plus_subspaces`` maps each vertex name to a
    matrix whose orthonormal rows span the subspace constraining the
    endpoint values; derivatives are constrained to its orthogonal
    complement.
    """

    kind: ConditionKind
    boundary: frozenset[str] = frozenset()
    plus_subspaces: Mapping[str, np.ndarray] = field(default_factory=dict)

    def __post_init__(self) -> None:
        mixed = (ConditionKind.STANDARD_DIRICHLET_B, ConditionKind.ANTI_STANDARD_NEUMANN_B)
        if self.boundary and self.kind not in mixed:
            raise ConditionError("boundary set only applies to the mixed kinds")
        if self.plus_subspaces and self.kind is not ConditionKind.SCALING_INVARIANT:
            raise ConditionError("subspaces only apply to the scaling-invariant kind")

    @property
    def token(self) -> str:
        return self.kind.value

    def validate_for(self, g: MetricGraph) -> None:
        """Check the spec against a concrete graph (B inside the natural boundary etc.)."""
        if self.kind in (ConditionKind.STANDARD_DIRICHLET_B, ConditionKind.ANTI_STANDARD_NEUMANN_B):
            boundary = analyze(g).boundary
            bad = self.boundary - boundary
            if bad:
                raise ConditionError(
                    f"B must consist of degree-1 vertices; offending: {sorted(bad)}"
                )
        if self.kind is ConditionKind.SCALING_INVARIANT:
            for name, deg in g.degrees.items():
                basis = self.plus_subspaces.get(name)
                if basis is None:
                    raise ConditionError(f"no subspace given for vertex {name!r}")
                basis = np.atleast_2d(np.asarray(basis, dtype=float))
                if basis.shape[1] != deg and basis.size > 0:
                    raise ConditionError(
                        f"subspace at {name!r} has dimension {basis.shape[1]}, degree is {deg}"
                    )


STANDARD = ConditionSpec(ConditionKind.STANDARD)
ANTI_STANDARD = ConditionSpec(ConditionKind.ANTI_STANDARD)
ALL_DIRICHLET = ConditionSpec(ConditionKind.ALL_DIRICHLET)


def standard_dirichlet(boundary) -> ConditionSpec:
    return ConditionSpec(ConditionKind.STANDARD_DIRICHLET_B, boundary=frozenset(boundary))


def anti_standard_neumann(boundary) -> ConditionSpec:
    return ConditionSpec(ConditionKind.ANTI_STANDARD_NEUMANN_B, boundary=frozenset(boundary))


@dataclass(frozen=True)
class ConditionRows:
    """Orthonormal constraint rows at a single vertex."""

    value_rows: np.ndarray
    derivative_rows: np.ndarray


def _ones_complement(d: int) -> np.ndarray:
    """Orthonormal basis (rows) of the complement of the all-ones vector in R^d."""
    if d == 1:
        return np.zeros((0, 1))
    # Householder reflection mapping e_1 to ones/sqrt(d): its last d-1 columns
    # form an orthonormal basis of the complement.
    v = np.zeros(d)
    v[0] = 1.0
    w = np.full(d, 1.0 / np.sqrt(d))
    u = v - w
    u /= np.linalg.norm(u)
    h = np.eye(d) - 2.0 * np.outer(u, u)
    return h[:, 1:].T.copy()


def _orthonormal_complement(rows: np.ndarray, d: int) -> np.ndarray:
    """Orthonormal rows spanning the complement in R^d of the given row span."""
    rows = np.atleast_2d(np.asarray(rows, dtype=float))
    if rows.size == 0:
        return np.eye(d)
    q, r = np.linalg.qr(rows.T, mode="complete")
    rank = int(np.sum(np.abs(np.diag(r)[: min(rows.shape)]) > 1e-12)) if r.size else 0
    return q[:, rank:].T.copy()


def condition_rows(v: str, d: int, spec: ConditionSpec) -> ConditionRows:
    """Constraint rows at vertex ``v`` of degree ``d`` for the given spec."""
    if d < 1:
        raise ConditionError("vertex degree must be at least 1")
    ones = np.full((1, d), 1.0 / np.sqrt(d))
    comp = _ones_complement(d)
    kind = spec.kind
    if kind is ConditionKind.STANDARD:
        return ConditionRows(value_rows=comp, derivative_rows=ones)
    if kind is ConditionKind.ANTI_STANDARD:
        return ConditionRows(value_rows=ones, derivative_rows=comp)
    if kind is ConditionKind.ALL_DIRICHLET:
        return ConditionRows(value_rows=np.eye(d), derivative_rows=np.zeros((0, d)))
    if kind is ConditionKind.STANDARD_DIRICHLET_B:
        if v in spec.boundary:
            return ConditionRows(value_rows=np.eye(d), derivative_rows=np.zeros((0, d)))
        return ConditionRows(value_rows=comp, derivative_rows=ones)
    if kind is ConditionKind.ANTI_STANDARD_NEUMANN_B:
        if v in spec.boundary:
            return ConditionRows(value_rows=np.zeros((0, d)), derivative_rows=np.eye(d))
        return ConditionRows(value_rows=ones, derivative_rows=comp)
    if kind is ConditionKind.SCALING_INVARIANT:
        plus = np.atleast_2d(np.asarray(spec.plus_subspaces[v], dtype=float))
        if plus.size == 0:
            plus = plus.reshape(0, d)
        if plus.shape[1] != d:
            raise ConditionError(f"subspace at {v!r} does not match degree {d}")
        minus = _orthonormal_complement(plus, d)
        # values constrained to X+ (annihilated by a basis of its complement),
        # derivatives constrained to X- = (X+)^perp (annihilated by X+ itself)
        value_rows = minus
        derivative_rows = _orthonormal_complement(minus, d)
        return ConditionRows(value_rows=value_rows, derivative_rows=derivative_rows)
    raise ConditionError(f"unsupported kind {kind}")


def dual(spec: ConditionSpec, g: MetricGraph | None = None) -> ConditionSpec:
    """Interchange the value and derivative subspaces at every vertex."""
    kind = spec.kind
    if kind is ConditionKind.STANDARD:
        return ANTI_STANDARD
    if kind is ConditionKind.ANTI_STANDARD:
        return STANDARD
    if kind is ConditionKind.STANDARD_DIRICHLET_B:
        return ConditionSpec(ConditionKind.ANTI_STANDARD_NEUMANN_B, boundary=spec.boundary)
    if kind is ConditionKind.ANTI_STANDARD_NEUMANN_B:
        return ConditionSpec(ConditionKind.STANDARD_DIRICHLET_B, boundary=spec.boundary)
    if kind is ConditionKind.ALL_DIRICHLET:
        if g is None:
            raise ConditionError("dual of all-Dirichlet (all-Neumann) needs the graph degrees")
        subspaces = {name: np.eye(deg) for name, deg in g.degrees.items()}
        return ConditionSpec(ConditionKind.SCALING_INVARIANT, plus_subspaces=subspaces)
    if kind is ConditionKind.SCALING_INVARIANT:
        if g is None:
            raise ConditionError("dual of a scaling-invariant spec needs the graph degrees")
        swapped = {}
        for name, deg in g.degrees.items():
            plus = np.atleast_2d(np.asarray(spec.plus_subspaces[name], dtype=float))
            if plus.size == 0:
                plus = plus.reshape(0, deg)
            swapped[name] = _orthonormal_complement(plus, deg)
        return ConditionSpec(ConditionKind.SCALING_INVARIANT, plus_subspaces=swapped)
    raise ConditionError(f"unsupported kind {kind}")


def kernel_dimension_combinatorial(g: MetricGraph, spec: ConditionSpec) -> int:
    """Zero-mode count from the graph combinatorics (connected graphs only)."""
    a = analyze(g)
    if not a.connected:
        raise ConditionError("the combinatorial kernel formulas assume a connected graph")
    kind = spec.kind
    if kind is ConditionKind.STANDARD:
        return 1
    if kind is ConditionKind.ANTI_STANDARD:
        return a.betti if a.bipartite else a.betti - 1
    if kind is ConditionKind.ALL_DIRICHLET:
        return 0
    if kind is ConditionKind.STANDARD_DIRICHLET_B:
        return 0 if spec.boundary else 1
    if kind is ConditionKind.ANTI_STANDARD_NEUMANN_B:
        if not a.bipartite:
            raise ConditionError("the mixed Neumann formula assumes a bipartite graph")
        if not spec.boundary:
            raise ConditionError("the mixed Neumann formula assumes nonempty B")
        return a.betti + len(spec.boundary) - 1
    raise ConditionError("no combinatorial formula for this kind; use solve_zero_modes")


def kernel_basis_ast(g: MetricGraph) -> np.ndarray:
    """Edgewise-constant anti-standard zero modes of a connected bipartite graph.

    Returns an array of shape (beta, E): one alternating +-1 function per
    fundamental cycle, zero off the cycle.
    """
    a = analyze(g)
    if not a.connected:
        raise ConditionError("kernel_basis_ast requires a connected graph")
    if not a.bipartite:
        raise ConditionError("an odd cycle admits no alternating assignment")
    basis = cycle_basis(g)
    out = np.zeros((len(basis.fundamental_cycles), g.num_edges))
    name_to_idx = {e.name: i for i, e in enumerate(g.edges)}
    for j, cyc in enumerate(basis.fundamental_cycles):
        for pos, (name, _sign) in enumerate(cyc):
            out[j, name_to_idx[name]] = 1.0 if pos % 2 == 0 else -1.0
    return out
