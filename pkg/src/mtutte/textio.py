"""Line-based input format for matroids, graphs, perspectives and majors.

::

    perspective
    # comments start with '#'
    elements 1 2 3 4 5
    m circuits {1,2,3}
    mprime circuits {2,4} {3,5} {1,2,3} {1,2,5} {1,3,4} {1,4,5}

The first non-blank line names the kind.  ``elements`` fixes the linear
order; for graphs the order of ``edge`` lines does.  Set lines may repeat and
accumulate; ``{}`` is the empty set.  A ``major`` holds a matroid or graph
payload plus a ``ports {...}`` line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .matroid import (
    Graph,
    GroundSet,
    Matroid,
    graphic_matroid,
    matroid_from_bases,
    matroid_from_circuits,
)
from .perspective import Perspective, identity_perspective, major_to_perspective

KINDS = ("matroid", "graph", "perspective", "major")
_SET = re.compile(r"\{([^{}]*)\}")
_LABEL = re.compile(r"[^\s{},#]+")


class ParseError(ValueError):
    def __init__(self, lineno: int | None, message: str):
        self.lineno = lineno
        prefix = f"line {lineno}: " if lineno else ""
        super().__init__(prefix + message)


@dataclass
class SetFamily:
    """A basis or circuit list as label tuples, in input order."""

    form: str  # "bases" or "circuits"
    sets: list = field(default_factory=list)
    lineno: int = 0


@dataclass
class InputDocument:
    kind: str
    elements: list = field(default_factory=list)
    m: SetFamily | None = None
    mprime: SetFamily | None = None
    vertices: list = field(default_factory=list)
    edges: list = field(default_factory=list)
    ports: tuple | None = None

    # -- building ----------------------------------------------------------------

    @property
    def is_graph(self) -> bool:
        return bool(self.edges) or self.kind == "graph"

    def _family(self, fam: SetFamily, ground: GroundSet) -> Matroid:
        build = matroid_from_bases if fam.form == "bases" else matroid_from_circuits
        return build(ground, fam.sets)

    def base_matroid(self) -> Matroid:
        """The single matroid of a matroid/graph document or the major's matroid."""
        if self.is_graph:
            return graphic_matroid(Graph(self.vertices, self.edges))
        return self._family(self.m, GroundSet(self.elements))

    def perspective(self) -> Perspective:
        if self.kind == "perspective":
            ground = GroundSet(self.elements)
            return Perspective(self._family(self.m, ground), self._family(self.mprime, ground))
        if self.kind == "major":
            return major_to_perspective(self.base_matroid(), list(self.ports))
        return identity_perspective(self.base_matroid())

    # -- writing -------------------------------------------------------------------

    def dumps(self) -> str:
        lines = [self.kind]
        if self.is_graph:
            lines.append("vertex " + " ".join(self.vertices))
            lines.extend(f"edge {lab} {a} {b}" for lab, a, b in self.edges)
        else:
            lines.append("elements " + " ".join(self.elements))
            order = {lab: i for i, lab in enumerate(self.elements)}
            prefixes = ("m ", "mprime ") if self.kind == "perspective" else ("",)
            for prefix, fam in zip(prefixes, (self.m, self.mprime)):
                sets = " ".join(_fmt_set(s, order) for s in fam.sets)
                lines.append(f"{prefix}{fam.form} {sets}".rstrip())
        if self.kind == "major":
            order = {lab: i for i, lab in enumerate(self.labels)}
            lines.append("ports " + _fmt_set(self.ports, order))
        return "\n".join(lines) + "\n"

    @property
    def labels(self) -> list:
        return [e[0] for e in self.edges] if self.is_graph else list(self.elements)


def _fmt_set(labels, order) -> str:
    return "{" + ",".join(sorted(labels, key=order.__getitem__)) + "}"


def _parse_sets(text: str, lineno: int, known: dict) -> list[tuple]:
    out = []
    rest = _SET.sub(" ", text)
    if rest.strip():
        raise ParseError(lineno, f"expected brace-enclosed sets, found {rest.strip()!r}")
    for body in _SET.findall(text):
        labels = [tok.strip() for tok in body.split(",")] if body.strip() else []
        for lab in labels:
            if not _LABEL.fullmatch(lab):
                raise ParseError(lineno, f"malformed label {lab!r}")
            if lab not in known:
                raise ParseError(lineno, f"unknown label {lab!r}")
        if len(set(labels)) != len(labels):
            raise ParseError(lineno, f"repeated label in set {{{body}}}")
        out.append(tuple(labels))
    return out


def _declare(labels: list, new: list, lineno: int, what: str) -> None:
    for lab in new:
        if not _LABEL.fullmatch(lab):
            raise ParseError(lineno, f"malformed {what} {lab!r}")
        if lab in labels:
            raise ParseError(lineno, f"duplicate {what} {lab!r}")
        labels.append(lab)


def parse(text: str) -> InputDocument:
    """Parse the line format; declaration order becomes the ground-set order."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    if not lines:
        raise ParseError(None, "empty input")
    lineno, kind = lines[0]
    if kind not in KINDS:
        raise ParseError(lineno, f"first line must be one of {', '.join(KINDS)}, not {kind!r}")
    doc = InputDocument(kind)
    fams: dict = {}
    pending = []  # set lines are resolved once every label is declared
    for lineno, line in lines[1:]:
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "elements" and kind != "graph":
            _declare(doc.elements, rest.split(), lineno, "label")
        elif head == "vertex" and kind in ("graph", "major"):
            _declare(doc.vertices, rest.split(), lineno, "vertex")
        elif head == "edge" and kind in ("graph", "major"):
            parts = rest.split()
            if len(parts) != 3:
                raise ParseError(lineno, "edge lines read: edge LABEL V1 V2")
            lab, a, b = parts
            if lab in [e[0] for e in doc.edges]:
                raise ParseError(lineno, f"duplicate label {lab!r}")
            _declare([], [lab], lineno, "label")
            for w in (a, b):
                if w not in doc.vertices:
                    raise ParseError(lineno, f"unknown vertex {w!r}")
            doc.edges.append((lab, a, b))
        elif head == "ports" and kind == "major":
            if doc.ports is not None:
                raise ParseError(lineno, "ports declared twice")
            doc.ports = ()
            pending.append((lineno, "ports", None, rest))
        elif kind == "perspective" and head in ("m", "mprime"):
            form, _, sets = rest.partition(" ")
            pending.append((lineno, head, form, sets))
        elif kind in ("matroid", "major") and head in ("bases", "circuits"):
            pending.append((lineno, "m", head, rest))
        else:
            raise ParseError(lineno, f"unexpected {head!r} line in a {kind} document")
    if doc.elements and doc.edges:
        raise ParseError(None, "a document cannot mix elements and edge lines")
    known = {lab: i for i, lab in enumerate(doc.labels)}
    if not known:
        raise ParseError(None, "no elements declared")
    for lineno, slot, form, sets in pending:
        if slot == "ports":
            ports = _parse_sets(sets, lineno, known)
            if len(ports) != 1:
                raise ParseError(lineno, "ports takes exactly one set")
            doc.ports = ports[0]
            continue
        if form not in ("bases", "circuits"):
            raise ParseError(lineno, f"expected 'bases' or 'circuits', not {form!r}")
        fam = fams.get(slot)
        if fam is None:
            fam = fams[slot] = SetFamily(form, [], lineno)
        elif fam.form != form:
            raise ParseError(lineno, f"{slot} already given by {fam.form}")
        fam.sets.extend(_parse_sets(sets, lineno, known))
    doc.m, doc.mprime = fams.get("m"), fams.get("mprime")
    if doc.is_graph and doc.m is not None:
        raise ParseError(doc.m.lineno, "a graph payload cannot also list bases or circuits")
    if not doc.is_graph and doc.m is None:
        raise ParseError(None, "missing bases or circuits" + (" for m" if kind == "perspective" else ""))
    if kind == "perspective" and doc.mprime is None:
        raise ParseError(None, "missing mprime bases or circuits")
    if kind == "major" and doc.ports is None:
        raise ParseError(None, "a major needs a ports line")
    return doc


def load(path: str) -> InputDocument:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def from_matroid(m: Matroid) -> InputDocument:
    g = m.ground
    return InputDocument("matroid", list(g.labels), SetFamily("bases", [g.subset(b) for b in sorted(m.bases)]))


def from_perspective(p: Perspective) -> InputDocument:
    g = p.ground
    fam = lambda mat: SetFamily("bases", [g.subset(b) for b in sorted(mat.bases)])  # noqa: E731
    return InputDocument("perspective", list(g.labels), fam(p.m), fam(p.mprime))
