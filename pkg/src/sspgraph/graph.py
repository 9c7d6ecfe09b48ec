"""Simple undirected graphs on vertices ``0..n-1``.

Adjacency is stored as one integer bitmask per vertex, which keeps the
forcing and partition searches cheap.  Graphs are immutable.

Builder labelings (all 0-based):

* ``path(n)``: ``0 - 1 - ... - n-1``.
* ``cycle(n)``: the path plus ``{0, n-1}``.
* ``complete_bipartite(m, n)``: parts ``0..m-1`` and ``m..m+n-1``.
* ``lollipop(m, n)``: pendant path ``0 - 1 - ... - n-1`` attached to clique
  vertex ``n``; the clique is ``n..n+m-1``.  For ``lollipop(3, 2)`` this is
  the one-based labeling 1..5 of L_{3,2} shifted down by one.
* ``spider(h1, h2, h3)``: center ``0``; leg ``q`` occupies consecutive labels
  in order from the center outward, legs listed in argument order.
* ``path_with_chord(n, m)``: path ``0..m-1, n-1, m..n-2`` plus the chord
  ``{m-1, m}`` (vertex ``n-1`` is the bridging vertex between them).
* ``corona_empty(G, k)``: ``G`` keeps its labels; pendant ``t`` of vertex
  ``v`` is ``n + t*n + v``.
* ``tensor(G, H)`` and ``join``/``disjoint_union``: pair ``(u, u')`` is
  ``u*|H| + u'``; the second graph of a union is shifted by ``|G|``.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from typing import Iterable, Iterator, Sequence

Pair = tuple[int, int]

INFINITE = math.inf  # distance between vertices in different components


class GraphFormatError(ValueError):
    """Raised for malformed graph6 or edge-list input."""


def pair(i: int, j: int) -> Pair:
    return (i, j) if i < j else (j, i)


def bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Graph:
    __slots__ = ("n", "_adj")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj = [0] * n
        for e in edges:
            i, j = e
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge {tuple(e)} out of range for n={n}")
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        self.n = n
        self._adj = tuple(adj)

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "Graph":
        g = cls.__new__(cls)
        g.n = len(masks)
        g._adj = tuple(masks)
        return g

    # -- basic queries -------------------------------------------------

    @property
    def masks(self) -> tuple[int, ...]:
        return self._adj

    def adj(self, v: int) -> int:
        return self._adj[v]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self._adj[v]))

    def has_edge(self, i: int, j: int) -> bool:
        return i != j and bool(self._adj[i] >> j & 1)

    def edges(self) -> list[Pair]:
        return [(i, j) for i in range(self.n) for j in bits(self._adj[i] >> (i + 1) << (i + 1))]

    def non_edges(self) -> list[Pair]:
        return [
            (i, j)
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if not self._adj[i] >> j & 1
        ]

    def num_edges(self) -> int:
        return sum(popcount(m) for m in self._adj) // 2

    def degree(self, v: int) -> int:
        return popcount(self._adj[v])

    def degrees(self) -> list[int]:
        return [popcount(m) for m in self._adj]

    def closed_neighborhood(self, v: int) -> set[int]:
        return set(bits(self._adj[v])) | {v}

    def is_complete(self) -> bool:
        return self.num_edges() == self.n * (self.n - 1) // 2

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# -- graph6 ------------------------------------------------------------


def to_graph6(g: Graph) -> str:
    """Short-form graph6 encoding (n <= 62, no header)."""
    n = g.n
    if n > 62:
        raise ValueError("short-form graph6 supports n <= 62")
    out = [chr(n + 63)]
    bitlist = [1 if g.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bitlist += [0] * (-len(bitlist) % 6)
    for k in range(0, len(bitlist), 6):
        v = 0
        for b in bitlist[k : k + 6]:
            v = (v << 1) | b
        out.append(chr(v + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if not s:
        raise GraphFormatError("empty graph6 string")
    if s.startswith(">>graph6<<"):
        raise GraphFormatError("graph6 header not supported")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"character {ch!r} outside graph6 range 63..126")
    n = ord(s[0]) - 63
    if n > 62:
        raise GraphFormatError("only short-form graph6 (n <= 62) is supported")
    nbits = n * (n - 1) // 2
    nchars = -(-nbits // 6)
    if len(s) != 1 + nchars:
        raise GraphFormatError(f"expected {1 + nchars} characters for n={n}, got {len(s)}")
    values = [ord(ch) - 63 for ch in s[1:]]
    flat = [(v >> (5 - t)) & 1 for v in values for t in range(6)]
    if any(flat[nbits:]):
        raise GraphFormatError("nonzero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if flat[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def parse_edge_list(text: str) -> Graph:
    """Parse ``n`` followed by whitespace-separated vertex pairs."""
    tokens = text.split()
    if not tokens:
        raise GraphFormatError("empty edge list")
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise GraphFormatError(f"unparsable token: {exc}") from None
    n, rest = values[0], values[1:]
    if n < 0:
        raise GraphFormatError("negative vertex count")
    if len(rest) % 2:
        raise GraphFormatError("odd number of endpoint tokens")
    edges = []
    for i, j in zip(rest[::2], rest[1::2]):
        if not (0 <= i < n and 0 <= j < n):
            raise GraphFormatError(f"vertex out of range in edge {i} {j}")
        if i == j:
            raise GraphFormatError(f"loop edge at {i}")
        edges.append((i, j))
    return Graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{i} {j}" for i, j in g.edges()]
    return "\n".join(lines) + "\n"


# -- operations --------------------------------------------------------


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph.from_masks([full & ~m & ~(1 << v) for v, m in enumerate(g.masks)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    s = g.n
    return Graph(g.n + h.n, g.edges() + [(i + s, j + s) for i, j in h.edges()])


def join(g: Graph, h: Graph) -> Graph:
    s = g.n
    cross = [(i, s + j) for i in range(g.n) for j in range(h.n)]
    return Graph(g.n + h.n, g.edges() + [(i + s, j + s) for i, j in h.edges()] + cross)


def tensor(g: Graph, h: Graph) -> Graph:
    m = h.n
    edges = []
    for u, v in g.edges():
        for a, b in h.edges():
            edges.append((u * m + a, v * m + b))
            edges.append((u * m + b, v * m + a))
    return Graph(g.n * m, edges)


def corona_empty(g: Graph, k: int) -> Graph:
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = g.n
    edges = g.edges() + [(v, n + t * n + v) for t in range(k) for v in range(n)]
    return Graph(n * (k + 1), edges)


def add_edges(g: Graph, pairs: Iterable[Sequence[int]]) -> Graph:
    return Graph(g.n, g.edges() + [tuple(p) for p in pairs])


def induced(g: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph, relabeled in increasing order of ``vertices``."""
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} not in graph")
    index = {v: k for k, v in enumerate(vs)}
    return Graph(len(vs), [(index[i], index[j]) for i, j in g.edges() if i in index and j in index])


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    return Graph(g.n, [(perm[i], perm[j]) for i, j in g.edges()])


# -- builders ----------------------------------------------------------


def empty(n: int) -> Graph:
    return Graph(n)


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise ValueError("parts must be nonempty")
    return Graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def lollipop(m: int, n: int) -> Graph:
    """K_m with a pendant path of n further vertices (see module docstring)."""
    if m < 1 or n < 0:
        raise ValueError("lollipop needs m >= 1, n >= 0")
    edges = [(i, i + 1) for i in range(n)]
    edges += [(n + a, n + b) for a, b in itertools.combinations(range(m), 2)]
    return Graph(m + n, edges)


def spider(h1: int, h2: int, h3: int) -> Graph:
    """Three legs of h1, h2, h3 vertices joined to the center 0."""
    if min(h1, h2, h3) < 1:
        raise ValueError("spider legs need length >= 1")
    edges = []
    nxt = 1
    for h in (h1, h2, h3):
        prev = 0
        for _ in range(h):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, edges)


def path_with_chord(n: int, m: int) -> Graph:
    """Path m-labels-then-bridge plus a chord across the bridge.

    The path visits ``0, ..., m-1, n-1, m, ..., n-2`` and the chord joins
    ``m-1`` and ``m``, which sit at distance 2 through ``n-1``.
    """
    if n < 3 or not 1 <= m <= n - 2:
        raise ValueError("path_with_chord needs n >= 3 and 1 <= m <= n-2")
    order = list(range(m)) + [n - 1] + list(range(m, n - 1))
    edges = list(zip(order, order[1:])) + [(m - 1, m)]
    return Graph(n, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


# -- structure ---------------------------------------------------------


def components(g: Graph, within: int | None = None) -> list[int]:
    """Connected components as bitmasks, ordered by smallest vertex.

    With ``within``, components of the subgraph induced on that mask.
    """
    remaining = (1 << g.n) - 1 if within is None else within
    out = []
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            nb = 0
            for v in bits(frontier):
                nb |= g.masks[v]
            nb &= remaining & ~comp
            comp |= nb
            frontier = nb
        out.append(comp)
        remaining &= ~comp
    return out


def component_sets(g: Graph) -> list[set[int]]:
    return [set(bits(c)) for c in components(g)]


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and is_connected(g) and g.num_edges() == g.n - 1


def is_regular(g: Graph) -> bool:
    return len(set(g.degrees())) <= 1


def is_unicyclic(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and g.num_edges() == g.n


def is_path_graph(g: Graph) -> bool:
    return is_tree(g) and max(g.degrees(), default=0) <= 2


def path_order(g: Graph) -> list[int]:
    """Vertices of a path graph in path order, starting at the smaller end."""
    if not is_path_graph(g):
        raise ValueError("graph is not a path")
    if g.n == 1:
        return [0]
    start = min(v for v in range(g.n) if g.degree(v) == 1)
    order, prev = [start], -1
    while len(order) < g.n:
        cur = order[-1]
        nxt = next(w for w in g.neighbors(cur) if w != prev)
        prev = cur
        order.append(nxt)
    return order


def unique_cycle(g: Graph) -> list[int]:
    """Cycle vertices of a unicyclic graph, in cyclic order."""
    if not is_unicyclic(g):
        raise ValueError("unique_cycle requires a connected unicyclic graph")
    deg = g.degrees()
    alive = (1 << g.n) - 1
    leaves = deque(v for v in range(g.n) if deg[v] == 1)
    while leaves:
        v = leaves.popleft()
        alive &= ~(1 << v)
        for w in bits(g.masks[v] & alive):
            deg[w] -= 1
            if deg[w] == 1:
                leaves.append(w)
    start = (alive & -alive).bit_length() - 1
    order, prev = [start], -1
    while True:
        cur = order[-1]
        nxt = next(w for w in bits(g.masks[cur] & alive) if w != prev)
        if nxt == start:
            return order
        prev = cur
        order.append(nxt)


def distances_from(g: Graph, s: int) -> list[float]:
    dist: list[float] = [INFINITE] * g.n
    dist[s] = 0
    queue = deque([s])
    while queue:
        v = queue.popleft()
        for w in bits(g.masks[v]):
            if dist[w] == INFINITE:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def distance_matrix(g: Graph) -> list[list[float]]:
    return [distances_from(g, s) for s in range(g.n)]


def distance_layer(g: Graph, r: int) -> set[Pair]:
    """Unordered pairs at shortest-path distance exactly ``r``."""
    if r < 1:
        raise ValueError("r must be >= 1")
    out = set()
    for i in range(g.n):
        d = distances_from(g, i)
        out.update((i, j) for j in range(i + 1, g.n) if d[j] == r)
    return out


def strong_power(g: Graph, r: int) -> Graph:
    return add_edges(g, distance_layer(g, r))


def power(g: Graph, r: int) -> Graph:
    pairs = set()
    for t in range(1, r + 1):
        pairs |= distance_layer(g, t)
    return add_edges(g, pairs)


# -- isomorphism -------------------------------------------------------

ISO_CAP = 8


def find_isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """Return ``perm`` with ``relabel(g, perm) == h`` or None (n <= 8)."""
    if g.n > ISO_CAP or h.n > ISO_CAP:
        raise NotImplementedError(f"isomorphism search is capped at n = {ISO_CAP}")
    if g.n != h.n or g.num_edges() != h.num_edges():
        return None
    dg, dh = g.degrees(), h.degrees()
    if sorted(dg) != sorted(dh):
        return None
    n = g.n
    order = sorted(range(n), key=lambda v: -dg[v])
    perm = [-1] * n
    used = 0

    def extend(k: int) -> bool:
        nonlocal used
        if k == n:
            return True
        v = order[k]
        for w in range(n):
            if used >> w & 1 or dh[w] != dg[v]:
                continue
            if any(g.has_edge(v, u) != h.has_edge(w, perm[u]) for u in order[:k]):
                continue
            perm[v] = w
            used |= 1 << w
            if extend(k + 1):
                return True
            used &= ~(1 << w)
        perm[v] = -1
        return False

    return list(perm) if extend(0) else None


def isomorphic_small(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None
