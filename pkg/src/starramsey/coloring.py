"""Edge-colored complete graphs, possibly minus a star at one vertex."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

from .errors import MalformedInput

Pair = tuple[int, int]


@dataclass(frozen=True)
class ColoredGraph:
    """``edge_color`` maps every present pair ``(u, v)``, ``u < v``, to a
    color in ``1..t``; ``missing`` lists the absent pairs, all of which
    touch ``center``."""

    n: int
    t: int
    edge_color: Mapping[Pair, int]
    missing: frozenset = field(default_factory=frozenset)
    center: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "edge_color", MappingProxyType(dict(self.edge_color)))
        object.__setattr__(self, "missing", frozenset(self.missing))
        _validate(self)

    @property
    def edges(self):
        return self.edge_color.items()

    def color(self, u: int, v: int) -> int | None:
        return self.edge_color.get((u, v) if u < v else (v, u))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "t": self.t,
            "center": self.center,
            "missing": [list(p) for p in sorted(self.missing)],
            "edges": [[u, v, c] for (u, v), c in sorted(self.edge_color.items())],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data) -> ColoredGraph:
        if not isinstance(data, dict):
            raise MalformedInput("coloring JSON must be an object")
        for key in ("n", "t", "edges"):
            if key not in data:
                raise MalformedInput(f"coloring JSON lacks key '{key}'")
        n, t = data["n"], data["t"]
        if not _is_int(n) or not _is_int(t):
            raise MalformedInput("n and t must be integers")
        center = data.get("center")
        if center is not None and not _is_int(center):
            raise MalformedInput("center must be an integer or null")
        edge_color: dict[Pair, int] = {}
        seen: set[Pair] = set()
        for item in data["edges"]:
            if not isinstance(item, list) or len(item) != 3 or not all(_is_int(x) for x in item):
                raise MalformedInput(f"edge entry {item!r} must be [u, v, color]")
            u, v, c = item
            pair = _checked_pair(u, v, n)
            if pair in seen:
                raise MalformedInput(f"pair {list(pair)} appears twice")
            seen.add(pair)
            edge_color[pair] = c
        missing = set()
        for item in data.get("missing", []):
            if not isinstance(item, list) or len(item) != 2 or not all(_is_int(x) for x in item):
                raise MalformedInput(f"missing entry {item!r} must be [u, v]")
            pair = _checked_pair(item[0], item[1], n)
            if pair in seen:
                raise MalformedInput(f"pair {list(pair)} appears twice")
            seen.add(pair)
            missing.add(pair)
        return cls(n, t, edge_color, frozenset(missing), center)

    @classmethod
    def from_json(cls, text: str) -> ColoredGraph:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedInput(f"invalid JSON: {exc}") from None
        return cls.from_dict(data)


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _checked_pair(u: int, v: int, n: int) -> Pair:
    if u == v:
        raise MalformedInput(f"self-loop at {u}")
    if u > v:
        raise MalformedInput(f"pair [{u}, {v}] must be listed with u < v")
    if u < 0 or v >= n:
        raise MalformedInput(f"pair [{u}, {v}] out of range for n={n}")
    return (u, v)


def _validate(g: ColoredGraph) -> None:
    if g.n < 0:
        raise MalformedInput("n must be nonnegative")
    if g.t < 1:
        raise MalformedInput("t must be positive")
    if g.center is not None and not 0 <= g.center < g.n:
        raise MalformedInput(f"center {g.center} out of range")
    for (u, v), c in g.edge_color.items():
        if not 0 <= u < v < g.n:
            raise MalformedInput(f"bad pair {(u, v)}")
        if not _is_int(c) or not 1 <= c <= g.t:
            raise MalformedInput(f"color {c!r} on {(u, v)} outside 1..{g.t}")
    for u, v in g.missing:
        if not 0 <= u < v < g.n:
            raise MalformedInput(f"bad missing pair {(u, v)}")
        if g.center is None or g.center not in (u, v):
            raise MalformedInput(f"missing pair {(u, v)} does not touch the center")
        if (u, v) in g.edge_color:
            raise MalformedInput(f"pair {(u, v)} both colored and missing")
    if len(g.edge_color) + len(g.missing) != g.n * (g.n - 1) // 2:
        raise MalformedInput("edges and missing pairs do not cover every pair")
