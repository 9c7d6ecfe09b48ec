"""Witness pairs (A, X) showing that some matrix with pattern G lacks the SSP.

A witness is accepted only after exact verification: A in S(G), X
symmetric and nonzero with zero diagonal, A o X = 0 and [A, X] = 0.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .graph import (
    Graph,
    bits,
    complement,
    components,
    cycle,
    distances_from,
    is_regular,
    popcount,
    relabel,
    unique_cycle,
)
from .linalg import (
    RatMatrix,
    adjacency,
    commutator,
    direct_sum,
    hadamard,
    in_S,
    kron,
    sample_in_S,
)
from .strong import PropertyKind, property_witness


class WitnessError(RuntimeError):
    """A construction could not produce a verified witness."""


@dataclass(frozen=True)
class Witness:
    graph: Graph
    A: RatMatrix
    X: RatMatrix
    provenance: str


def verify_witness(w: Witness) -> bool:
    n = w.graph.n
    a, x = w.A, w.X
    if a.shape != (n, n) or x.shape != (n, n):
        return False
    if not in_S(a, w.graph):
        return False
    if not x.is_symmetric() or x.is_zero():
        return False
    for i in range(n):
        if x[i, i] != 0 or any(a[i, j] != 0 and x[i, j] != 0 for j in range(n)):
            return False
    # A and X are symmetric, so XA = (AX)^T and [A, X] = 0 iff AX is symmetric
    return (a @ x).is_symmetric()


def _checked(w: Witness) -> Witness:
    if not verify_witness(w):
        raise WitnessError(f"construction '{w.provenance}' failed verification")
    return w


def relabel_witness(w: Witness, perm: Sequence[int], provenance: str | None = None) -> Witness:
    """Move vertex v to perm[v] in the graph and both matrices."""
    return _checked(
        Witness(relabel(w.graph, perm), w.A.permuted(perm), w.X.permuted(perm), provenance or w.provenance)
    )


# -- barbell partitions ------------------------------------------------


@dataclass(frozen=True)
class BarbellPartition:
    R: frozenset[int]
    W1: frozenset[int]
    W2: frozenset[int]


def is_barbell_partition(g: Graph, p: BarbellPartition) -> bool:
    if not p.W1 or not p.W2:
        return False
    if p.R & p.W1 or p.R & p.W2 or p.W1 & p.W2:
        return False
    if p.R | p.W1 | p.W2 != frozenset(range(g.n)):
        return False
    if any(g.has_edge(u, v) for u in p.W1 for v in p.W2):
        return False
    for v in p.R:
        for w in (p.W1, p.W2):
            if sum(1 for u in w if g.has_edge(u, v)) == 1:
                return False
    return True


def _partition(r: int, w1: int, w2: int) -> BarbellPartition:
    return BarbellPartition(frozenset(bits(r)), frozenset(bits(w1)), frozenset(bits(w2)))


BARBELL_CAP = 14


def barbell_search(g: Graph, cap: int = BARBELL_CAP) -> BarbellPartition | None:
    """First barbell partition, R by increasing size then lexicographically."""
    n = g.n
    if n > cap:
        raise ValueError(f"barbell search is capped at n = {cap}")
    adj = g.masks
    full = (1 << n) - 1
    for size in range(n - 1):
        for rset in itertools.combinations(range(n), size):
            rmask = sum(1 << v for v in rset)
            comps = components(g, full & ~rmask)
            c = len(comps)
            if c < 2:
                continue
            counts = [[popcount(adj[v] & comp) for comp in comps] for v in rset]
            if any(sum(row) == 1 for row in counts):
                continue
            for x in range(1, 1 << (c - 1)):
                side = [0] + [(x >> t) & 1 for t in range(c - 1)]
                ok = True
                for row in counts:
                    s2 = sum(k for k, sd in zip(row, side) if sd)
                    if s2 == 1 or sum(row) - s2 == 1:
                        ok = False
                        break
                if ok:
                    w1 = sum(comp for comp, sd in zip(comps, side) if not sd)
                    w2 = sum(comp for comp, sd in zip(comps, side) if sd)
                    return _partition(rmask, w1, w2)
    return None


def cut_vertex_partition(g: Graph) -> BarbellPartition | None:
    """R = {v} for a cut vertex with at least two neighbours on each side."""
    full = (1 << g.n) - 1
    for v in range(g.n):
        comps = components(g, full & ~(1 << v))
        if len(comps) < 2:
            continue
        ranked = sorted(comps, key=lambda c: -popcount(g.adj(v) & c))
        w1 = 0
        k = 0
        while ranked and k < 2:
            comp = ranked.pop(0)
            w1 |= comp
            k += popcount(g.adj(v) & comp)
        w2 = sum(ranked)
        if k >= 2 and popcount(g.adj(v) & w2) >= 2:
            return _partition(1 << v, w1, w2)
    return None


def path_partition(g: Graph, route: Sequence[int]) -> BarbellPartition | None:
    """R = the vertices of ``route``; components hanging off its two ends form W1 and W2."""
    rmask = sum(1 << v for v in route)
    first, last = route[0], route[-1]
    w1 = w2 = 0
    for comp in components(g, ((1 << g.n) - 1) & ~rmask):
        touch = [v for v in route if g.adj(v) & comp]
        if touch == [first]:
            w1 |= comp
        elif touch == [last]:
            w2 |= comp
        else:
            return None
    p = _partition(rmask, w1, w2)
    return p if is_barbell_partition(g, p) else None


def _shortest_route(g: Graph, s: int, t: int) -> list[int]:
    dist = distances_from(g, t)
    route = [s]
    while route[-1] != t:
        cur = route[-1]
        route.append(min(w for w in g.neighbors(cur) if dist[w] == dist[cur] - 1))
    return route


def tree_partition(g: Graph) -> BarbellPartition | None:
    """Partition for a tree with a degree >= 4 vertex or two degree-3 vertices."""
    p = cut_vertex_partition(g)
    if p is not None:
        return p
    big = [v for v in range(g.n) if g.degree(v) >= 3]
    best = None
    for u, v in itertools.combinations(big, 2):
        d = distances_from(g, u)[v]
        if best is None or d < best[0]:
            best = (d, u, v)
    if best is None:
        return None
    return path_partition(g, _shortest_route(g, best[1], best[2]))


def unicyclic_partition(g: Graph) -> BarbellPartition | None:
    """Partition for a unicyclic graph with a degree >= 4 vertex or an off-cycle degree-3 vertex."""
    p = cut_vertex_partition(g)
    if p is not None:
        return p
    on_cycle = set(unique_cycle(g))
    cyc_mask = sum(1 << v for v in on_cycle)
    best = None
    for v in range(g.n):
        if v in on_cycle or g.degree(v) < 3:
            continue
        d = distances_from(g, v)
        w = min(on_cycle, key=lambda c: (d[c], c))
        if best is None or d[w] < best[0]:
            best = (d[w], v, w)
    if best is None:
        return None
    _, v, w = best
    route = _shortest_route(g, v, w)
    if any(1 << x & cyc_mask for x in route[:-1]):
        return None
    return path_partition(g, route)


def barbell_witness(g: Graph, p: BarbellPartition) -> Witness:
    """Block matrix M with zero column sums in the W blocks; X is all-ones between W1 and W2."""
    if not is_barbell_partition(g, p):
        raise ValueError("not a barbell partition of this graph")
    n = g.n
    m = [[Fraction(0)] * n for _ in range(n)]
    for u, v in g.edges():
        if u in p.R and v in p.R:
            m[u][v] = m[v][u] = Fraction(1)
    for w in (p.W1, p.W2):
        for u, v in g.edges():
            if u in w and v in w:
                m[u][v] = m[v][u] = Fraction(-1)
        for u in w:
            m[u][u] = Fraction(sum(1 for v in w if g.has_edge(u, v)))
        for r in p.R:
            nbrs = sorted(u for u in w if g.has_edge(u, r))
            if not nbrs:
                continue
            k = len(nbrs)
            for u in nbrs[:-1]:
                m[u][r] = m[r][u] = Fraction(1)
            m[nbrs[-1]][r] = m[r][nbrs[-1]] = Fraction(-(k - 1))
    x = [[Fraction(0)] * n for _ in range(n)]
    for u in p.W1:
        for v in p.W2:
            x[u][v] = x[v][u] = Fraction(1)
    a = RatMatrix(m, cols=n)
    xm = RatMatrix(x, cols=n)
    if not (a @ xm).is_zero():
        raise WitnessError("barbell construction: M X != 0")
    return _checked(Witness(g, a, xm, "barbell"))


# -- regular graphs and lifts ------------------------------------------


def regular_witness(g: Graph) -> Witness | None:
    """Adjacency matrix with X = J - A - I for regular, non-complete graphs."""
    if g.n < 2 or not is_regular(g) or g.is_complete():
        return None
    a = adjacency(g)
    x = RatMatrix.ones(g.n) - a - RatMatrix.identity(g.n)
    return _checked(Witness(g, a, x, "regular"))


def kron_lift(s_list: Sequence[RatMatrix], t: RatMatrix, base: Witness, provenance: str = "kron-lift") -> Witness:
    """A_hat = sum_j S_j (x) A^j, X_hat = T (x) X, on the support graph of A_hat."""
    if not verify_witness(base):
        raise ValueError("base witness does not verify")
    if not s_list:
        raise ValueError("need at least one S_j")
    m = t.rows
    if not t.is_symmetric() or any(s.shape != (m, m) or not s.is_symmetric() for s in s_list):
        raise ValueError("S_j and T must be symmetric of equal order")
    for j, s in enumerate(s_list):
        if not commutator(s, t).is_zero():
            raise ValueError(f"S_{j} does not commute with T")
        if j >= 2 and not hadamard(s, t).is_zero():
            raise ValueError(f"S_{j} o T must vanish for j >= 2")
    if all(s.is_zero() for s in s_list):
        raise ValueError("all S_j are zero")
    a = base.A
    power = RatMatrix.identity(a.rows)
    a_hat = RatMatrix.zeros(m * a.rows)
    for s in s_list:
        a_hat = a_hat + kron(s, power)
        power = power @ a
    x_hat = kron(t, base.X)
    return _checked(Witness(a_hat.support_graph(), a_hat, x_hat, provenance))


def corona_lift(base: Witness, m: int) -> Witness:
    """Witness on G corona (m-1) isolated vertices; pendant labels follow ``corona_empty``."""
    if m < 2:
        raise ValueError("corona lift needs m >= 2")
    s0 = RatMatrix.zeros(m)
    for j in range(1, m):
        s0 = s0 + RatMatrix.unit(m, 0, j) + RatMatrix.unit(m, j, 0)
    s1 = RatMatrix.unit(m, 0, 0)
    return kron_lift([s0, s1], RatMatrix.identity(m), base, "corona-lift")


def tensor_lift(base: Witness, h: Graph) -> Witness:
    """Witness on the support of adj(H) (x) A; equals H x G when diag(A) = 0."""
    zero = RatMatrix.zeros(h.n)
    return kron_lift([zero, adjacency(h)], RatMatrix.identity(h.n), base, "tensor-lift")


# -- explicit families -------------------------------------------------


def pythagorean_angles(count: int) -> list[tuple[Fraction, Fraction]]:
    """(sin, cos) pairs from primitive triples ordered by hypotenuse; sines are distinct."""
    triples = []
    hyp = 5
    while len(triples) < count:
        for p in range(2, int(hyp**0.5) + 1):
            for q in range(1, p):
                if p * p + q * q == hyp and gcd(p, q) == 1 and (p - q) % 2 == 1:
                    a, b = sorted((p * p - q * q, 2 * p * q))
                    triples.append((Fraction(a, hyp), Fraction(b, hyp)))
        hyp += 1
    return triples[:count]


COMPLEMENT_PATH_RETRIES = 32


def complement_path_witness(m: int, seed: int = 0, bound: int = 5, retries: int = COMPLEMENT_PATH_RETRIES) -> Witness:
    """Witness on the complement of the path 0-1-...-(3m-1).

    X is a direct sum of 3x3 blocks [[0, s, 0], [s, 0, c], [0, c, 0]] with
    rational (s, c) on the unit circle.  Block (i, j) of A is
    a_ij x_i x_j^T + (b_ij / 2) y_i y_j^T + (c_ij / 2) z_i z_j^T with
    x = (c, 0, -s), y = (s, 1, c), z = (s, -1, c), each of which is an
    eigenvector of the matching X block, so A and X commute.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    n = 3 * m
    target = complement(Graph(n, [(i, i + 1) for i in range(n - 1)]))
    angles = pythagorean_angles(m)
    xs = [RatMatrix.column([c, 0, -s]) for s, c in angles]
    ys = [RatMatrix.column([s, 1, c]) for s, c in angles]
    zs = [RatMatrix.column([s, -1, c]) for s, c in angles]
    x = direct_sum(*(RatMatrix([[0, s, 0], [s, 0, c], [0, c, 0]]) for s, c in angles))
    nonzero = [v for v in range(-bound, bound + 1) if v]
    tried = []
    for attempt in range(retries):
        s_ = seed + attempt
        tried.append(s_)
        rng = random.Random(s_)
        a = [[Fraction(rng.choice(nonzero)) for _ in range(m)] for _ in range(m)]
        b = [[Fraction(rng.choice(nonzero)) for _ in range(m)] for _ in range(m)]
        c = [[Fraction(rng.choice(nonzero)) for _ in range(m)] for _ in range(m)]
        for i in range(m):
            for j in range(i):
                a[i][j], b[i][j], c[i][j] = a[j][i], b[j][i], c[j][i]
            c[i][i] = b[i][i]  # clears block entries (0,1) and (1,2)
        for k in range(m - 1):
            sk, ck = angles[k]
            sk1, ck1 = angles[k + 1]
            # clears entry (2, 0) of block (k, k+1): the path edge {3k+2, 3k+3}
            a[k][k + 1] = a[k + 1][k] = (b[k][k + 1] + c[k][k + 1]) * ck * sk1 / (2 * sk * ck1)
        blocks = [
            [
                (xs[i] @ xs[j].T()).scale(a[i][j])
                + (ys[i] @ ys[j].T()).scale(b[i][j] / 2)
                + (zs[i] @ zs[j].T()).scale(c[i][j] / 2)
                for j in range(m)
            ]
            for i in range(m)
        ]
        mat = RatMatrix.block(blocks)
        if in_S(mat, target):
            return _checked(Witness(target, mat, x, "complement-path"))
    raise WitnessError(f"no pattern-valid matrix for m={m} after seeds {tried}")


def kn_minus_c4_witness(n: int) -> Witness:
    """Witness on K_n minus the 4-cycle 0-1-2-3-0."""
    if n < 4:
        raise ValueError("n must be >= 4")
    a4 = RatMatrix([[1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, 1]])
    x4 = RatMatrix([[0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0]])
    k = n - 4
    if k == 0:
        a, x = a4, x4
    else:
        f = RatMatrix([[1] * k, [1] * k, [-1] * k, [-1] * k], cols=k)
        a = RatMatrix.block([[a4, f], [f.T(), RatMatrix.ones(k)]])
        x = direct_sum(x4, RatMatrix.zeros(k))
    g = complement(Graph(n, [(0, 1), (1, 2), (2, 3), (3, 0)]))
    return _checked(Witness(g, a, x, "kn-minus-c4"))


def cocktail_witness(n: int, seed: int = 0, bound: int = 5) -> Witness:
    """Witness on K_2n minus the matching {2i, 2i+1}."""
    if n < 2:
        raise ValueError("n must be >= 2")
    rng = random.Random(seed)
    nonzero = [v for v in range(-bound, bound + 1) if v]
    size = 2 * n
    m = [[Fraction(0)] * size for _ in range(size)]
    for i in range(n):
        d = Fraction(rng.choice(nonzero))
        m[2 * i][2 * i] = m[2 * i + 1][2 * i + 1] = d
        for j in range(i + 1, n):
            p, q = Fraction(rng.choice(nonzero)), Fraction(rng.choice(nonzero))
            for r, s, v in ((0, 0, p), (1, 1, p), (0, 1, q), (1, 0, q)):
                m[2 * i + r][2 * j + s] = m[2 * j + s][2 * i + r] = v
    y = Fraction(rng.choice(nonzero))
    x = direct_sum(*([RatMatrix([[0, y], [y, 0]])] * n))
    g = complement(Graph(size, [(2 * i, 2 * i + 1) for i in range(n)]))
    return _checked(Witness(g, RatMatrix(m, cols=size), x, "cocktail"))


# Fixed 6-vertex examples: two unicyclic graphs, each a 4-cycle with two pendants.
A_98 = RatMatrix(
    [
        [0, 2, 0, 1, 0, 0],
        [2, 0, 1, 0, 0, 0],
        [0, 1, 0, 1, 1, 0],
        [1, 0, 1, 0, 0, 1],
        [0, 0, 1, 0, 0, 0],
        [0, 0, 0, 1, 0, 0],
    ]
)
X_98 = RatMatrix(
    [
        [0, 0, 1, 0, 0, 1],
        [0, 0, 0, 1, 1, 0],
        [1, 0, 0, 0, 0, -1],
        [0, 1, 0, 0, -1, 0],
        [0, 1, 0, -1, 0, 0],
        [1, 0, -1, 0, 0, 0],
    ]
)
A_99 = RatMatrix(
    [
        [0, 1, 0, 1, 0, 0],
        [1, 0, 1, 0, 1, 0],
        [0, 1, 0, -1, 0, 0],
        [1, 0, -1, 0, 0, 1],
        [0, 1, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0],
    ]
)
X_99 = RatMatrix(
    [
        [0, 0, 0, 0, 1, 1],
        [0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, -1, 1],
        [0, 1, 0, 0, 0, 0],
        [1, 0, -1, 0, 0, -1],
        [1, 0, 1, 0, -1, 0],
    ]
)
G_98 = A_98.support_graph()
G_99 = A_99.support_graph()


def named_witness(name: str) -> Witness:
    table = {"G98": (G_98, A_98, X_98), "G99": (G_99, A_99, X_99)}
    if name not in table:
        raise KeyError(name)
    g, a, x = table[name]
    return _checked(Witness(g, a, x, name))


def c4_witness() -> Witness:
    return regular_witness(cycle(4))


# -- sampling ----------------------------------------------------------


def sample_refute(g: Graph, trials: int, seed: int, bound: int = 10) -> Witness | None:
    """Test ``trials`` seeded matrices in S(g); return the first SSP failure as a witness."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    for t in range(trials):
        a = sample_in_S(g, seed + t, bound)
        x = property_witness(a, PropertyKind.SSP)
        if x is not None:
            return _checked(Witness(g, a, x, f"sampled:seed={seed + t}"))
    return None
