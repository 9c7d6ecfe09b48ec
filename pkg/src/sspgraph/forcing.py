"""Forcing rules that grow the set of provably-zero entries of X.

The state is a supergraph ``G_l`` of ``G``: every pair that is an edge of
``G_l`` is known to carry a zero in any X with ``A o X = I o X = 0`` and
``[A, X] = 0``.  Each rule inspects closed neighbourhoods and, when its
hypotheses hold, adds pairs to ``G_l``.  Reaching ``K_n`` shows every
matrix with pattern ``G`` has the SSP.

Three rules:

* edge rule: pair (i, j) whose commutator equation has a single surviving
  term ``a_ik x_kj``;
* odd-cycle rule: vertex i whose open neighbourhood, in the complement of
  ``G_l``, has an odd-cycle component C, all pairs {i, j} (j in C) focused
  on V(C);
* spider rule: an induced spider Y_h of G whose pairs at distance <= h are
  in ``G_l``, pairs at distance h + 1 are not, and the distance-h pairs are
  focused on V(Y_h).

Scan orders are fixed, so closures are reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence, Union

from .graph import Graph, Pair, bits, pair, popcount

# -- steps -------------------------------------------------------------


@dataclass(frozen=True)
class EdgeForce:
    via: tuple[int, int]  # ordered (i, j); S1 = {pivot}, S2 empty
    pivot: int
    added: Pair

    rule = "edge"

    @property
    def added_pairs(self) -> tuple[Pair, ...]:
        return (self.added,)


@dataclass(frozen=True)
class OddCycleForce:
    vertex: int
    cycle: tuple[int, ...]

    rule = "odd-cycle"

    @property
    def added_pairs(self) -> tuple[Pair, ...]:
        c = self.cycle
        return tuple(pair(c[t], c[(t + 1) % len(c)]) for t in range(len(c)))


@dataclass(frozen=True)
class Spider:
    center: int
    legs: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]

    @property
    def h(self) -> int:
        return len(self.legs[0])

    @property
    def vertices(self) -> tuple[int, ...]:
        return (self.center,) + tuple(v for leg in self.legs for v in leg)

    def depth_positions(self) -> list[tuple[int, int, int]]:
        """(vertex, leg index or -1, depth from center)."""
        out = [(self.center, -1, 0)]
        for q, leg in enumerate(self.legs):
            out += [(v, q, d + 1) for d, v in enumerate(leg)]
        return out

    def pairs_at_distance(self, r: int) -> list[Pair]:
        pos = self.depth_positions()
        out = []
        for (u, qu, du), (v, qv, dv) in itertools.combinations(pos, 2):
            d = abs(du - dv) if qu == qv or qu < 0 or qv < 0 else du + dv
            if d == r:
                out.append(pair(u, v))
        return sorted(out)


@dataclass(frozen=True)
class SpiderForce:
    spider: Spider

    rule = "spider"

    @property
    def h(self) -> int:
        return self.spider.h

    @property
    def added_pairs(self) -> tuple[Pair, ...]:
        return tuple(self.spider.pairs_at_distance(self.spider.h + 1))


ForcingStep = Union[EdgeForce, OddCycleForce, SpiderForce]


@dataclass
class ForcingCertificate:
    base: Graph
    steps: list[ForcingStep] = field(default_factory=list)
    final: Graph | None = None

    @property
    def complete(self) -> bool:
        return self.final is not None and self.final.is_complete()


# -- helpers -----------------------------------------------------------


def _closed(masks: Sequence[int]) -> list[int]:
    return [m | 1 << v for v, m in enumerate(masks)]


def _check_supergraph(g: Graph, gl: Graph) -> None:
    if g.n != gl.n or any(m & ~ml for m, ml in zip(g.masks, gl.masks)):
        raise ValueError("G_l must be a supergraph of G on the same vertex set")


def _focused(ng: list[int], ngl: list[int], i: int, j: int, u: int) -> bool:
    return not (ng[i] & ~ngl[j] & ~u) and not (ng[j] & ~ngl[i] & ~u)


def _single(mask: int) -> int | None:
    return mask.bit_length() - 1 if mask and not mask & (mask - 1) else None


# -- edge rule ---------------------------------------------------------


def _rule1(ng: list[int], ngl: list[int]) -> EdgeForce | None:
    n = len(ng)
    for i in range(n):
        for j in range(n):
            if i == j or ng[j] & ~ngl[i]:
                continue
            k = _single(ng[i] & ~ngl[j])
            if k is not None and k != i and k != j:
                return EdgeForce((i, j), k, pair(j, k))
    return None


def find_rule1(g: Graph, gl: Graph) -> EdgeForce | None:
    """First ordered pair (i, j) focused on a single vertex k.

    With S1 = N_G[i] minus N_Gl[j] and S2 = N_G[j] minus N_Gl[i], fires
    when S1 == {k} (k distinct from i, j) and S2 is empty; adds {j, k}.
    """
    _check_supergraph(g, gl)
    return _rule1(_closed(g.masks), _closed(gl.masks))


# -- odd-cycle rule ----------------------------------------------------


def _cycle_order(comp: int, hadj: dict[int, int]) -> tuple[int, ...]:
    start = (comp & -comp).bit_length() - 1
    order, prev = [start], -1
    while True:
        cur = order[-1]
        nxt = min(w for w in bits(hadj[cur]) if w != prev)
        if nxt == start:
            return tuple(order)
        prev = cur
        order.append(nxt)


def _odd_cycle_components(adj_g: Sequence[int], ngl: list[int], i: int) -> list[int]:
    nb = adj_g[i]
    hadj = {v: nb & ~ngl[v] for v in bits(nb)}
    out = []
    remaining = nb
    while remaining:
        seed = remaining & -remaining
        comp = frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= hadj[v]
            nxt &= ~comp
            comp |= nxt
            frontier = nxt
        remaining &= ~comp
        size = popcount(comp)
        if size >= 3 and size % 2 == 1 and all(popcount(hadj[v]) == 2 for v in bits(comp)):
            out.append(comp)
    return out


def _rule2(adj_g: Sequence[int], ng: list[int], ngl: list[int]) -> OddCycleForce | None:
    for i in range(len(ng)):
        nb = adj_g[i]
        hadj = {v: nb & ~ngl[v] for v in bits(nb)}
        for comp in _odd_cycle_components(adj_g, ngl, i):
            if all(_focused(ng, ngl, i, j, comp) for j in bits(comp)):
                return OddCycleForce(i, _cycle_order(comp, hadj))
    return None


def find_rule2(g: Graph, gl: Graph) -> OddCycleForce | None:
    """First vertex i (ascending) forcing an odd cycle of its neighbourhood."""
    _check_supergraph(g, gl)
    return _rule2(g.masks, _closed(g.masks), _closed(gl.masks))


# -- spider rule -------------------------------------------------------


def _spider_ok(sp: Spider, ng: list[int], ngl: list[int]) -> bool:
    h = sp.h
    for r in range(1, h + 1):
        for u, v in sp.pairs_at_distance(r):
            if not ngl[u] >> v & 1:
                return False
    far = sp.pairs_at_distance(h + 1)
    if any(ngl[u] >> v & 1 for u, v in far):
        return False
    vmask = 0
    for v in sp.vertices:
        vmask |= 1 << v
    return all(_focused(ng, ngl, u, v, vmask) for u, v in sp.pairs_at_distance(h))


def _induced_legs(adj_g: Sequence[int], center: int, starts: tuple[int, int, int], h: int):
    """Yield leg triples of h vertices forming an induced spider with ``starts``."""
    base = 1 << center | 1 << starts[0] | 1 << starts[1] | 1 << starts[2]
    legs: list[list[int]] = [[s] for s in starts]

    def grow(q: int, used: int):
        if q == 3:
            yield tuple(tuple(leg) for leg in legs)
            return
        leg = legs[q]
        if len(leg) == h:
            yield from grow(q + 1, used)
            return
        tip = leg[-1]
        for w in bits(adj_g[tip] & ~used):
            # w may touch only the tip among the placed vertices
            if adj_g[w] & used & ~(1 << tip):
                continue
            # and must not touch the first vertices of later legs
            leg.append(w)
            yield from grow(q, used | 1 << w)
            leg.pop()

    yield from grow(0, base)


def _rule3(adj_g: Sequence[int], ng: list[int], ngl: list[int], max_h: int | None = None) -> SpiderForce | None:
    n = len(ng)
    cap = n if max_h is None else max_h
    for c in range(n):
        nb = list(bits(adj_g[c]))
        if len(nb) < 3:
            continue
        for trio in itertools.combinations(nb, 3):
            a, b, d = trio
            if adj_g[a] >> b & 1 or adj_g[a] >> d & 1 or adj_g[b] >> d & 1:
                continue
            for h in range(1, cap + 1):
                found_any = False
                for legs in _induced_legs(adj_g, c, trio, h):
                    found_any = True
                    sp = Spider(c, legs)
                    if _spider_ok(sp, ng, ngl):
                        return SpiderForce(sp)
                if not found_any:
                    break
    return None


def find_rule3(g: Graph, gl: Graph, max_h: int | None = None) -> SpiderForce | None:
    """First induced spider (center, neighbour triple, h ascending) that forces."""
    _check_supergraph(g, gl)
    return _rule3(g.masks, _closed(g.masks), _closed(gl.masks), max_h)


# -- closure -----------------------------------------------------------

DEFAULT_RULE_ORDER = (1, 2, 3)


def close(g: Graph, rule_order: Sequence[int] = DEFAULT_RULE_ORDER, max_h: int | None = None) -> ForcingCertificate:
    """Apply the rules until K_n or a stall; restart at the first rule after each step."""
    adj_g = g.masks
    ng = _closed(adj_g)
    ngl = list(ng)
    full = (1 << g.n) - 1
    steps: list[ForcingStep] = []
    finders = {
        1: lambda: _rule1(ng, ngl),
        2: lambda: _rule2(adj_g, ng, ngl),
        3: lambda: _rule3(adj_g, ng, ngl, max_h),
    }
    while not all(m == full for m in ngl):
        step = None
        for r in rule_order:
            step = finders[r]()
            if step is not None:
                break
        if step is None:
            break
        for u, v in step.added_pairs:
            ngl[u] |= 1 << v
            ngl[v] |= 1 << u
        steps.append(step)
    final = Graph.from_masks([m & ~(1 << v) for v, m in enumerate(ngl)])
    return ForcingCertificate(g, steps, final)


# -- replay ------------------------------------------------------------


def _replay_edge(step: EdgeForce, ng: list[int], ngl: list[int]) -> bool:
    n = len(ng)
    i, j = step.via
    k = step.pivot
    if not all(0 <= x < n for x in (i, j, k)) or len({i, j, k}) < 3:
        return False
    if not ngl[i] >> j & 1:
        return False
    if ng[i] & ~ngl[j] != 1 << k or ng[j] & ~ngl[i]:
        return False
    return step.added == pair(j, k)


def _replay_cycle(step: OddCycleForce, adj_g: Sequence[int], ng: list[int], ngl: list[int]) -> bool:
    n = len(ng)
    i, cyc = step.vertex, step.cycle
    if not 0 <= i < n or len(cyc) < 3 or len(cyc) % 2 == 0 or len(set(cyc)) != len(cyc):
        return False
    if not all(0 <= v < n for v in cyc):
        return False
    comp = 0
    for v in cyc:
        comp |= 1 << v
    nb = adj_g[i]
    if comp & ~nb:
        return False
    # the cycle must be an entire component of the complement of G_l on N_G(i)
    for t, v in enumerate(cyc):
        hn = nb & ~ngl[v]
        expected = 1 << cyc[t - 1] | 1 << cyc[(t + 1) % len(cyc)]
        if hn != expected:
            return False
    return all(_focused(ng, ngl, i, j, comp) for j in cyc)


def _replay_spider(step: SpiderForce, adj_g: Sequence[int], ng: list[int], ngl: list[int]) -> bool:
    sp = step.spider
    n = len(ng)
    h = len(sp.legs[0]) if len(sp.legs) == 3 else 0
    if h < 1 or any(len(leg) != h for leg in sp.legs):
        return False
    verts = sp.vertices
    if len(set(verts)) != len(verts) or not all(0 <= v < n for v in verts):
        return False
    # induced subgraph of G on the spider must be exactly the spider
    tree_edges = set()
    for leg in sp.legs:
        chain = (sp.center,) + tuple(leg)
        tree_edges |= {pair(a, b) for a, b in zip(chain, chain[1:])}
    for u, v in itertools.combinations(verts, 2):
        if bool(adj_g[u] >> v & 1) != (pair(u, v) in tree_edges):
            return False
    return _spider_ok(sp, ng, ngl)


def replay(cert: ForcingCertificate) -> bool:
    """Re-derive every step from scratch; True iff all are sound and the final graph matches."""
    g = cert.base
    adj_g = g.masks
    ng = _closed(adj_g)
    ngl = list(ng)
    for step in cert.steps:
        if isinstance(step, EdgeForce):
            ok = _replay_edge(step, ng, ngl)
        elif isinstance(step, OddCycleForce):
            ok = _replay_cycle(step, adj_g, ng, ngl)
        elif isinstance(step, SpiderForce):
            ok = _replay_spider(step, adj_g, ng, ngl)
        else:
            ok = False
        if not ok:
            return False
        added = step.added_pairs
        if not added or any(ngl[u] >> v & 1 for u, v in added):
            return False
        for u, v in added:
            ngl[u] |= 1 << v
            ngl[v] |= 1 << u
    final = Graph.from_masks([m & ~(1 << v) for v, m in enumerate(ngl)])
    return cert.final is not None and final == cert.final
