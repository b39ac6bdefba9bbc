"""Line-oriented hyperquiver files.

::

    # one tensor read two ways
    vertices: 3 3
    edge: target=1 sources=1,2 class=1 perm=1,2,3
    edge: target=1 sources=1,2 class=1 perm=2,1,3

``vertices:`` must be the first non-comment line. ``perm`` lists, for modes
``(target, s_1, ..., s_mu)`` of the edge, which mode of the class tensor each
one reads. An edge without ``class`` gets a fresh singleton class; without
``perm`` it gets the identity. Class labels are renumbered 1..M by first
appearance.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .model import (
    DimensionVector,
    EdgePartition,
    Hyperedge,
    Hyperquiver,
    validate_hyperquiver,
    validate_partition,
)


class ParseError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


@dataclass(frozen=True)
class HyperquiverFile:
    hyperquiver: Hyperquiver
    dims: DimensionVector
    partition: EdgePartition


_INTS = r"\d+(?:,\d+)*"
_EDGE_KEYS = {"target", "sources", "class", "perm"}


def _int_list(text: str, lineno: int, key: str) -> tuple[int, ...]:
    if not re.fullmatch(_INTS, text):
        raise ParseError(lineno, f"{key}= expects comma-separated integers, got {text!r}")
    return tuple(int(x) for x in text.split(","))


def parse(text: str, validate: bool = True) -> HyperquiverFile:
    dims = None
    edges, labels, perms = [], [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, rest = line.partition(":")
        if not sep:
            raise ParseError(lineno, f"expected 'vertices:' or 'edge:', got {line!r}")
        head = head.strip()
        if head == "vertices":
            if dims is not None:
                raise ParseError(lineno, "'vertices:' given more than once")
            if edges:
                raise ParseError(lineno, "'vertices:' must come before any edge")
            toks = rest.split()
            if not toks or not all(re.fullmatch(r"\d+", t) for t in toks):
                raise ParseError(lineno, "'vertices:' expects one or more positive integers")
            dims = tuple(int(t) for t in toks)
        elif head == "edge":
            if dims is None:
                raise ParseError(lineno, "'vertices:' must be the first non-comment line")
            fields = {}
            for tok in rest.split():
                key, eq, val = tok.partition("=")
                if not eq or key not in _EDGE_KEYS:
                    raise ParseError(lineno, f"unexpected token {tok!r}")
                if key in fields:
                    raise ParseError(lineno, f"duplicate key {key!r}")
                fields[key] = val
            for key in ("target", "sources"):
                if key not in fields:
                    raise ParseError(lineno, f"edge is missing {key}=")
            if not re.fullmatch(r"\d+", fields["target"]):
                raise ParseError(lineno, "target= expects one integer")
            target = int(fields["target"])
            sources = _int_list(fields["sources"], lineno, "sources")
            e = Hyperedge(sources, target)
            if "class" in fields:
                if not re.fullmatch(r"\d+", fields["class"]):
                    raise ParseError(lineno, "class= expects one integer")
                labels.append(("given", int(fields["class"])))
            else:
                labels.append(("fresh", len(edges)))
            if "perm" in fields:
                perm = _int_list(fields["perm"], lineno, "perm")
                if len(perm) != e.order:
                    raise ParseError(
                        lineno, f"perm has {len(perm)} entries, edge has {e.order} modes"
                    )
            else:
                perm = tuple(range(1, e.order + 1))
            edges.append(e)
            perms.append(perm)
        else:
            raise ParseError(lineno, f"unknown directive {head!r}")
    if dims is None:
        raise ParseError(0, "missing 'vertices:' line")

    renumber: dict = {}
    class_of = []
    for lab in labels:
        class_of.append(renumber.setdefault(lab, len(renumber) + 1))

    H = Hyperquiver(len(dims), tuple(edges))
    P = EdgePartition(tuple(class_of), tuple(perms))
    if validate:
        validate_hyperquiver(H, dims)
        validate_partition(H, P)
    return HyperquiverFile(H, DimensionVector(dims), P)


def render(f: HyperquiverFile) -> str:
    lines = ["vertices: " + " ".join(map(str, f.dims))]
    for e, c, p in zip(f.hyperquiver.edges, f.partition.class_of, f.partition.perm_of):
        lines.append(
            f"edge: target={e.target} sources={','.join(map(str, e.sources))} "
            f"class={c} perm={','.join(map(str, p))}"
        )
    return "\n".join(lines) + "\n"


def load(path) -> HyperquiverFile:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())
