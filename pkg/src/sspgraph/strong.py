"""Per-matrix decision procedures for the SSP, SMP and SAP.

Each property asks whether a homogeneous linear system in the free
entries ``x_ij`` ({i, j} a non-edge of the pattern graph, i < j) has only
the trivial solution.  Columns are the non-edge pairs in lexicographic
order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, bits, complement, components, induced, is_tree, is_unicyclic, unique_cycle
from .linalg import (
    RatMatrix,
    ShapeError,
    commutator,
    hadamard,
    in_S,
    nullspace_basis,
    q_of,
    rank_exact,
)


class PropertyKind(enum.Enum):
    SSP = "ssp"
    SMP = "smp"
    SAP = "sap"


@dataclass(frozen=True)
class ConstraintSystem:
    matrix: RatMatrix
    pairs: tuple[tuple[int, int], ...]

    @property
    def column_index(self) -> dict[tuple[int, int], int]:
        return {p: k for k, p in enumerate(self.pairs)}

    def kernel_is_trivial(self) -> bool:
        return rank_exact(self.matrix) == len(self.pairs)


def _kind(kind) -> PropertyKind:
    return kind if isinstance(kind, PropertyKind) else PropertyKind(str(kind).lower())


def build_system(a: RatMatrix, g: Graph, kind) -> ConstraintSystem:
    kind = _kind(kind)
    if not in_S(a, g):
        raise ValueError("matrix pattern does not match the graph")
    n = g.n
    pairs = tuple(g.non_edges())
    ent = a.tolist()
    cols: list[list[Fraction]] = []
    for p, q in pairs:
        # the symmetric basis matrix E_pq + E_qp, pushed through the constraint map
        col: list[Fraction] = []
        if kind is PropertyKind.SAP:
            # (A X)_{ij} = a_ip [j == q] + a_iq [j == p]
            for i in range(n):
                for j in range(n):
                    v = Fraction(0)
                    if j == q:
                        v += ent[i][p]
                    if j == p:
                        v += ent[i][q]
                    col.append(v)
        else:
            # [A, X]_{ij} for i < j
            for i in range(n):
                for j in range(i + 1, n):
                    v = Fraction(0)
                    if j == q:
                        v += ent[i][p]
                    if j == p:
                        v += ent[i][q]
                    if i == p:
                        v -= ent[q][j]
                    if i == q:
                        v -= ent[p][j]
                    col.append(v)
        cols.append(col)
    nrows = n * n if kind is PropertyKind.SAP else n * (n - 1) // 2
    rows = [[cols[c][r] for c in range(len(pairs))] for r in range(nrows)]
    if kind is PropertyKind.SMP:
        power = a
        for _ in range(2, q_of(a) + 1):
            power = power @ a
            rows.append([2 * power[p, q] for p, q in pairs])
    return ConstraintSystem(RatMatrix(rows, cols=len(pairs)), pairs)


def _assemble(n: int, pairs, values) -> RatMatrix:
    out = [[Fraction(0)] * n for _ in range(n)]
    for (p, q), v in zip(pairs, values):
        out[p][q] = out[q][p] = v
    return RatMatrix(out, cols=n)


def satisfies_constraints(a: RatMatrix, x: RatMatrix, kind) -> bool:
    """Check the defining equations of ``kind`` for a candidate X, exactly."""
    kind = _kind(kind)
    n = a.rows
    ident = RatMatrix.identity(n)
    if x.shape != a.shape or not x.is_symmetric():
        return False
    if not hadamard(a, x).is_zero() or not hadamard(ident, x).is_zero():
        return False
    if kind is PropertyKind.SAP:
        return (a @ x).is_zero()
    if not commutator(a, x).is_zero():
        return False
    if kind is PropertyKind.SMP:
        power = a
        for _ in range(2, q_of(a) + 1):
            power = power @ a
            if (power @ x).trace() != 0:
                return False
    return True


def has_property(a: RatMatrix, kind) -> bool:
    if not a.is_symmetric():
        raise ValueError("strong properties are defined for symmetric matrices")
    return build_system(a, a.support_graph(), kind).kernel_is_trivial()


def property_witness(a: RatMatrix, kind) -> RatMatrix | None:
    """A nonzero X violating the property, or None if ``a`` has it."""
    if not a.is_symmetric():
        raise ValueError("strong properties are defined for symmetric matrices")
    system = build_system(a, a.support_graph(), kind)
    basis = nullspace_basis(system.matrix)
    if not basis:
        return None
    vec = basis[0]
    x = _assemble(a.rows, system.pairs, [vec[k, 0] for k in range(len(system.pairs))])
    if x.is_zero() or not satisfies_constraints(a, x, kind):
        raise ArithmeticError("kernel witness failed verification")
    return x


def _forest_or_odd_unicyclic(h: Graph) -> bool:
    for comp in components(h):
        sub = induced(h, bits(comp))
        if is_tree(sub):
            continue
        if is_unicyclic(sub) and len(unique_cycle(sub)) % 2 == 1:
            continue
        return False
    return True


def block_ssp_sufficient(a: RatMatrix, b: RatMatrix, c: RatMatrix) -> bool:
    """Sufficient conditions for [[A, C], [C^T, B]] to have the SSP.

    Returns True when B has the SSP, when every component of the
    complement of B's pattern is a tree or an odd unicyclic graph, or when
    C has full column rank with m <= n.
    """
    n, m = a.rows, b.rows
    if not (a.is_symmetric() and b.is_symmetric()):
        raise ShapeError("A and B must be symmetric")
    if c.shape != (n, m):
        raise ShapeError(f"C must be {n}x{m}, got {c.shape}")
    if any(x == 0 for x in c.flat()):
        raise ValueError("C must have no zero entries")
    if not has_property(a, PropertyKind.SSP):
        raise ValueError("A must have the SSP")
    if has_property(b, PropertyKind.SSP):
        return True
    if n >= 1 and _forest_or_odd_unicyclic(complement(b.support_graph())):
        return True
    return m <= n and rank_exact(c) == m


def block_matrix(a: RatMatrix, b: RatMatrix, c: RatMatrix) -> RatMatrix:
    return RatMatrix.block([[a, c], [c.T(), b]])
