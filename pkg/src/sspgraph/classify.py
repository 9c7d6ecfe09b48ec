"""Verdicts on membership of a graph in the class where every matrix has the SSP.

``classify`` runs a fixed pipeline of stages, cheap structural tests
first and sampling last, and stops at the first conclusive one.  ``In``
verdicts carry a forcing certificate, a theorem tag, or a known-table
tag; ``Out`` verdicts carry a verified witness; ``Unknown`` records how
many sampled matrices passed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .forcing import ForcingCertificate, close
from .graph import (
    ISO_CAP,
    Graph,
    bits,
    complement,
    components,
    find_isomorphism,
    induced,
    is_connected,
    is_path_graph,
    is_tree,
    is_unicyclic,
    path_order,
    spider,
    strong_power,
    unique_cycle,
)
from .refute import (
    BARBELL_CAP,
    G_98,
    G_99,
    Witness,
    barbell_search,
    barbell_witness,
    cocktail_witness,
    complement_path_witness,
    cut_vertex_partition,
    kn_minus_c4_witness,
    named_witness,
    regular_witness,
    relabel_witness,
    sample_refute,
    tree_partition,
    unicyclic_partition,
)
from .strong import _forest_or_odd_unicyclic

IN, OUT, UNKNOWN = "in", "out", "unknown"
DEFAULT_TRIALS = 50


@dataclass
class Verdict:
    status: str
    stage: str
    reason: str
    certificate: ForcingCertificate | None = None
    witness: Witness | None = None
    samples_passed: int = 0
    parts: list = field(default_factory=list)

    @property
    def is_in(self) -> bool:
        return self.status == IN

    @property
    def is_out(self) -> bool:
        return self.status == OUT


@dataclass(frozen=True)
class Settings:
    seed: int = 0
    trials: int = DEFAULT_TRIALS
    barbell_cap: int = BARBELL_CAP


def _out(stage: str, reason: str, w: Witness) -> Verdict:
    return Verdict(OUT, stage, reason, witness=w)


def _forced_in(g: Graph, stage: str, reason: str) -> Verdict | None:
    cert = close(g)
    return Verdict(IN, stage, reason, certificate=cert) if cert.complete else None


# -- trees -------------------------------------------------------------


def tree_in_class(t: Graph) -> bool:
    deg = t.degrees()
    return max(deg, default=0) <= 3 and sum(1 for d in deg if d == 3) <= 1


def classify_tree(t: Graph, certificate: bool = False) -> Verdict:
    """Trees: In iff max degree <= 3 with at most one degree-3 vertex."""
    if not is_tree(t):
        raise ValueError("classify_tree needs a tree")
    if tree_in_class(t):
        cert = close(t) if certificate else None
        return Verdict(IN, "tree", "theorem:trees", certificate=cert)
    p = tree_partition(t)
    if p is None:
        raise RuntimeError("no barbell partition for an excluded tree")
    return _out("tree", "theorem:trees", barbell_witness(t, p))


# -- known graphs ------------------------------------------------------

C4_PENDANT = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])
Y2_STRONG_SQUARE = strong_power(spider(2, 2, 2), 2)

KNOWN_IN = {"c4-plus-pendant": C4_PENDANT, "Y2-strong-square": Y2_STRONG_SQUARE}
KNOWN_OUT = {"G98": G_98, "G99": G_99}


def _known_table(g: Graph, seed: int = 0) -> Verdict | None:
    if g.n <= ISO_CAP:
        for tag, h in KNOWN_IN.items():
            if find_isomorphism(h, g) is not None:
                return Verdict(IN, "known-table", f"known:{tag}")
        for tag, h in KNOWN_OUT.items():
            perm = find_isomorphism(h, g)
            if perm is not None:
                return _out("known-table", f"known:{tag}", relabel_witness(named_witness(tag), perm))
    return _family_table(g, seed)


def _family_table(g: Graph, seed: int = 0) -> Verdict | None:
    comp = complement(g)
    deg = comp.degrees()
    n = g.n
    touched = [v for v in range(n) if deg[v]]
    if n >= 4 and len(touched) == 4 and all(deg[v] == 2 for v in touched):
        sub = induced(comp, touched)
        if is_connected(sub):
            c = [touched[v] for v in unique_cycle(sub)]
            rest = [v for v in range(n) if v not in c]
            w = relabel_witness(kn_minus_c4_witness(n), c + rest)
            return _out("known-table", "family:kn-minus-c4", w)
    if n >= 4 and n % 2 == 0 and all(d == 1 for d in deg):
        perm = [v for e in comp.edges() for v in e]
        return _out("known-table", "family:cocktail", relabel_witness(cocktail_witness(n // 2, seed), perm))
    return None


# -- structural detections ---------------------------------------------


def is_lollipop(g: Graph) -> bool:
    """A clique on >= 3 vertices with one pendant path hanging off a clique vertex."""
    if not is_connected(g) or g.n < 4:
        return False
    deg = g.degrees()
    leaves = [v for v in range(g.n) if deg[v] == 1]
    if len(leaves) != 1:
        return False
    chain, prev = [leaves[0]], -1
    while True:
        cur = chain[-1]
        nxt = [w for w in g.neighbors(cur) if w != prev]
        if len(nxt) != 1:
            return False
        prev, cur = cur, nxt[0]
        if deg[cur] != 2:
            break
        chain.append(cur)
    clique = [v for v in range(g.n) if v not in chain]
    if len(clique) < 3:
        return False
    k = len(clique)
    if any(g.degree(v) != k - 1 for v in clique if v != cur):
        return False
    return g.degree(cur) == k and induced(g, clique).is_complete()


def is_path_with_chord(g: Graph) -> bool:
    """A degree-2 vertex with adjacent neighbours whose removal leaves a path through them."""
    for v in range(g.n):
        if g.degree(v) != 2:
            continue
        a, b = g.neighbors(v)
        if not g.has_edge(a, b):
            continue
        rest = [u for u in range(g.n) if u != v]
        if is_path_graph(induced(g, rest)):
            return True
    return False


def is_kn_minus_triangle(g: Graph) -> bool:
    comp = complement(g)
    touched = [v for v in range(g.n) if comp.degree(v)]
    return g.n >= 4 and len(touched) == 3 and comp.num_edges() == 3


# -- stages ------------------------------------------------------------


def _stage_complete(g, s):
    if g.is_complete():
        return Verdict(IN, "complete", "complete-graph", certificate=close(g))
    return None


def _stage_tree(g, s):
    if is_tree(g):
        return classify_tree(g, certificate=True)
    return None


def _stage_regular(g, s):
    w = regular_witness(g)
    return _out("regular", "regular-graph", w) if w is not None else None


def _stage_unicyclic(g, s):
    if not is_unicyclic(g):
        return None
    on_cycle = set(unique_cycle(g))
    deg = g.degrees()
    if max(deg) >= 4 or any(deg[v] >= 3 and v not in on_cycle for v in range(g.n)):
        p = unicyclic_partition(g)
        if p is not None:
            return _out("unicyclic", "barbell:unicyclic", barbell_witness(g, p))
    return None


def _stage_cut_vertex(g, s):
    p = cut_vertex_partition(g)
    return _out("cut-vertex", "barbell:cut-vertex", barbell_witness(g, p)) if p is not None else None


def _stage_complement_path(g, s):
    comp = complement(g)
    if g.n < 2 or not is_path_graph(comp):
        return None
    if g.n % 3 == 0:
        w = complement_path_witness(g.n // 3, seed=s.seed)
        return _out("complement-path", "theorem:complement-path", relabel_witness(w, path_order(comp)))
    return _forced_in(g, "complement-path", "theorem:complement-path")


def _stage_known(g, s):
    return _known_table(g, s.seed)


def _stage_structural_forcing(g, s):
    if is_lollipop(g):
        tag = "lollipop"
    elif is_path_with_chord(g):
        tag = "path-with-chord"
    elif is_kn_minus_triangle(g):
        tag = "kn-minus-triangle"
    else:
        return None
    return _forced_in(g, "structural-forcing", tag)


def _stage_join(g, s):
    if g.n < 2 or g.is_complete():
        return None
    comps = components(complement(g))
    if len(comps) < 2:
        return None
    full = (1 << g.n) - 1
    for comp in comps:
        h_vertices = list(bits(comp))
        g1_vertices = list(bits(full & ~comp))
        h = induced(g, h_vertices)
        g1 = induced(g, g1_vertices)
        v1 = classify(g1, s)
        if not v1.is_in:
            continue
        if _forest_or_odd_unicyclic(complement(h)):
            return Verdict(IN, "join", "corollary:join-forest", parts=[(g1_vertices, v1), (h_vertices, None)])
        vh = classify(h, s)
        if vh.is_in:
            return Verdict(IN, "join", "corollary:join", parts=[(g1_vertices, v1), (h_vertices, vh)])
    return None


def _stage_barbell(g, s):
    if g.n > s.barbell_cap:
        return None
    p = barbell_search(g, s.barbell_cap)
    return _out("barbell-search", "barbell:search", barbell_witness(g, p)) if p is not None else None


def _stage_forcing(g, s):
    return _forced_in(g, "forcing", "forcing-closure")


def _stage_sampling(g, s):
    if not g.non_edges():
        return None
    if s.trials < 1:
        return Verdict(UNKNOWN, "sampling", "samples-passed", samples_passed=0)
    w = sample_refute(g, s.trials, s.seed)
    if w is not None:
        return _out("sampling", "sampled-matrix", w)
    return Verdict(UNKNOWN, "sampling", "samples-passed", samples_passed=s.trials)


STAGES: list[tuple[str, Callable]] = [
    ("complete", _stage_complete),
    ("tree", _stage_tree),
    ("regular", _stage_regular),
    ("unicyclic", _stage_unicyclic),
    ("cut-vertex", _stage_cut_vertex),
    ("complement-path", _stage_complement_path),
    ("known-table", _stage_known),
    ("structural-forcing", _stage_structural_forcing),
    ("join", _stage_join),
    ("barbell-search", _stage_barbell),
    ("forcing", _stage_forcing),
    ("sampling", _stage_sampling),
]


def classify(g: Graph, settings: Settings | None = None) -> Verdict:
    s = settings or Settings()
    for _, stage in STAGES:
        v = stage(g, s)
        if v is not None:
            return v
    raise AssertionError("sampling stage always concludes")


def all_stage_verdicts(g: Graph, settings: Settings | None = None) -> list[Verdict]:
    """Run every stage without short-circuiting; keep the conclusive results."""
    s = settings or Settings()
    out = []
    for _, stage in STAGES:
        v = stage(g, s)
        if v is not None and v.status != UNKNOWN:
            out.append(v)
    return out
