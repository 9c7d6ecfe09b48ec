"""JSON documents for certificates, witnesses and verdict records.

Every document is self-contained: it embeds the graph it talks about, so
``replay_document`` needs nothing else.  Output is deterministic
(sorted keys, fixed indentation) so identical runs produce identical bytes.

Schemas, by ``kind``:

forcing-certificate
    ``base`` and ``final`` graphs, ``steps`` with a ``rule`` tag each
    (``edge``: via, pivot, added; ``odd-cycle``: vertex, cycle;
    ``spider``: center, legs).
witness
    ``graph``, matrices ``A`` and ``X`` as rows of ``p/q`` strings,
    ``provenance``.
property-witness
    ``property`` (ssp, smp or sap) with matrices ``A`` and ``X``; X is a
    nonzero solution of that property's constraint system.
claim
    ``graph``, ``stage`` and ``reason`` of an In verdict resting on a
    theorem or table entry; replay re-derives it.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .classify import Settings, Verdict, classify
from .forcing import EdgeForce, ForcingCertificate, OddCycleForce, Spider, SpiderForce, replay
from .graph import Graph, GraphFormatError, to_graph6
from .linalg import RatMatrix, ShapeError
from .refute import Witness, verify_witness
from .strong import PropertyKind, _kind, satisfies_constraints

FORMAT = 1


class DocumentError(ValueError):
    pass


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


# -- pieces ------------------------------------------------------------


def graph_to_json(g: Graph) -> dict:
    out: dict[str, Any] = {"n": g.n, "edges": [list(e) for e in g.edges()]}
    if g.n <= 62:
        out["graph6"] = to_graph6(g)
    return out


def graph_from_json(obj: Any) -> Graph:
    try:
        n = int(obj["n"])
        edges = [(int(i), int(j)) for i, j in obj["edges"]]
        return Graph(n, edges)
    except (KeyError, TypeError, ValueError, GraphFormatError) as exc:
        raise DocumentError(f"bad graph: {exc}") from exc


def matrix_to_json(m: RatMatrix) -> list[list[str]]:
    return [[str(x) for x in row] for row in m.tolist()]


def matrix_from_json(obj: Any) -> RatMatrix:
    try:
        return RatMatrix([[Fraction(str(x)) for x in row] for row in obj])
    except (TypeError, ValueError, ZeroDivisionError, ShapeError) as exc:
        raise DocumentError(f"bad matrix: {exc}") from exc


def step_to_json(step) -> dict:
    if isinstance(step, EdgeForce):
        return {"rule": "edge", "via": list(step.via), "pivot": step.pivot, "added": list(step.added)}
    if isinstance(step, OddCycleForce):
        return {"rule": "odd-cycle", "vertex": step.vertex, "cycle": list(step.cycle)}
    if isinstance(step, SpiderForce):
        sp = step.spider
        return {"rule": "spider", "center": sp.center, "legs": [list(leg) for leg in sp.legs]}
    raise TypeError(f"unknown step {step!r}")


def step_from_json(obj: Any):
    try:
        rule = obj["rule"]
        if rule == "edge":
            i, j = obj["via"]
            a, b = obj["added"]
            return EdgeForce((int(i), int(j)), int(obj["pivot"]), (int(a), int(b)))
        if rule == "odd-cycle":
            return OddCycleForce(int(obj["vertex"]), tuple(int(v) for v in obj["cycle"]))
        if rule == "spider":
            legs = tuple(tuple(int(v) for v in leg) for leg in obj["legs"])
            if len(legs) != 3:
                raise ValueError("a spider has three legs")
            return SpiderForce(Spider(int(obj["center"]), legs))
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"bad step: {exc}") from exc
    raise DocumentError(f"unknown rule {rule!r}")


# -- whole documents ---------------------------------------------------


def certificate_to_doc(cert: ForcingCertificate) -> dict:
    return {
        "kind": "forcing-certificate",
        "format": FORMAT,
        "base": graph_to_json(cert.base),
        "steps": [step_to_json(s) for s in cert.steps],
        "final": graph_to_json(cert.final) if cert.final is not None else None,
        "complete": cert.complete,
    }


def certificate_from_doc(doc: dict) -> ForcingCertificate:
    base = graph_from_json(doc.get("base"))
    steps = doc.get("steps")
    if not isinstance(steps, list):
        raise DocumentError("steps must be a list")
    final = doc.get("final")
    return ForcingCertificate(
        base, [step_from_json(s) for s in steps], graph_from_json(final) if final is not None else None
    )


def witness_to_doc(w: Witness) -> dict:
    return {
        "kind": "witness",
        "format": FORMAT,
        "graph": graph_to_json(w.graph),
        "A": matrix_to_json(w.A),
        "X": matrix_to_json(w.X),
        "provenance": w.provenance,
    }


def witness_from_doc(doc: dict) -> Witness:
    return Witness(
        graph_from_json(doc.get("graph")),
        matrix_from_json(doc.get("A")),
        matrix_from_json(doc.get("X")),
        str(doc.get("provenance", "")),
    )


def property_witness_to_doc(a: RatMatrix, x: RatMatrix, kind) -> dict:
    return {
        "kind": "property-witness",
        "format": FORMAT,
        "property": _kind(kind).value,
        "A": matrix_to_json(a),
        "X": matrix_to_json(x),
    }


def claim_to_doc(g: Graph, v: Verdict, settings: Settings) -> dict:
    return {
        "kind": "claim",
        "format": FORMAT,
        "graph": graph_to_json(g),
        "stage": v.stage,
        "reason": v.reason,
        "seed": settings.seed,
        "trials": settings.trials,
    }


def verdict_document(g: Graph, v: Verdict, settings: Settings) -> dict | None:
    """The full evidence behind a verdict, or None for Unknown."""
    if v.witness is not None:
        return witness_to_doc(v.witness)
    if v.certificate is not None and v.certificate.complete:
        return certificate_to_doc(v.certificate)
    if v.is_in:
        return claim_to_doc(g, v, settings)
    return None


def _evidence(v: Verdict) -> dict:
    if v.witness is not None:
        return {"type": "witness", "provenance": v.witness.provenance}
    if v.certificate is not None:
        return {
            "type": "forcing-certificate",
            "steps": len(v.certificate.steps),
            "trace": [s.rule for s in v.certificate.steps],
            "complete": v.certificate.complete,
        }
    if v.parts:
        return {
            "type": "join",
            "parts": [
                {"vertices": list(vs), "verdict": None if sub is None else sub.status,
                 "reason": "complement-forest" if sub is None else sub.reason}
                for vs, sub in v.parts
            ],
        }
    if v.is_in:
        return {"type": "tag", "tag": v.reason}
    return {"type": "samples", "passed": v.samples_passed}


def verdict_record(g: Graph, v: Verdict, settings: Settings, document: str | None = None) -> dict:
    return {
        "graph6": to_graph6(g) if g.n <= 62 else None,
        "n": g.n,
        "verdict": v.status,
        "stage": v.stage,
        "reason": v.reason,
        "evidence": _evidence(v),
        "document": document,
        "seeds": {"base": settings.seed, "trials": settings.trials},
    }


# -- loading and replay ------------------------------------------------


def loads(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not JSON: {exc}") from exc
    if not isinstance(doc, dict) or "kind" not in doc:
        raise DocumentError("document needs a 'kind' field")
    return doc


def parse_document(doc: dict):
    kind = doc.get("kind")
    if kind == "forcing-certificate":
        return certificate_from_doc(doc)
    if kind == "witness":
        return witness_from_doc(doc)
    if kind in ("claim", "property-witness"):
        return doc
    raise DocumentError(f"unknown document kind {kind!r}")


def replay_document(doc: dict) -> bool:
    """Check a document: replay certificates, verify witnesses, re-derive claims."""
    obj = parse_document(doc)
    if isinstance(obj, ForcingCertificate):
        return replay(obj) and obj.complete and bool(doc.get("complete", True))
    if isinstance(obj, Witness):
        return verify_witness(obj)
    if doc["kind"] == "property-witness":
        try:
            kind = PropertyKind(doc.get("property"))
        except ValueError as exc:
            raise DocumentError(str(exc)) from exc
        a, x = matrix_from_json(doc.get("A")), matrix_from_json(doc.get("X"))
        if not a.is_symmetric():
            raise DocumentError("A must be symmetric")
        return not x.is_zero() and satisfies_constraints(a, x, kind)
    g = graph_from_json(doc.get("graph"))
    try:
        settings = Settings(seed=int(doc.get("seed", 0)), trials=int(doc.get("trials", 50)))
    except (TypeError, ValueError) as exc:
        raise DocumentError(f"bad settings: {exc}") from exc
    v = classify(g, settings)
    return v.is_in and v.stage == doc.get("stage") and v.reason == doc.get("reason")
