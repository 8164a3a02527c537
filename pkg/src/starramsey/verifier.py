"""Star detection in edge-colored graphs.

A star ``K_{1,m_A}`` inside color set ``A`` centered at ``v`` exists exactly
when ``v`` has at least ``m_A`` incident edges colored in ``A``, so every
check here runs on color-degree vectors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coloring import ColoredGraph
from .errors import ColorCountMismatch
from .family import StarFamily, colors_to_mask, mask_to_colors
from .formulas import incidence_matrix


@dataclass(frozen=True)
class StarWitness:
    center: int
    colors: tuple[int, ...]
    leaves: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"center": self.center, "colors": list(self.colors), "leaves": list(self.leaves)}


def color_degree_vectors(g: ColoredGraph) -> np.ndarray:
    """``(n, t)`` array; entry ``[v, i-1]`` counts edges of color ``i`` at ``v``."""
    deg = np.zeros((g.n, g.t), dtype=np.int64)
    for (u, v), c in g.edge_color.items():
        deg[u, c - 1] += 1
        deg[v, c - 1] += 1
    return deg


def _top_s(row, s: int) -> tuple[int, ...]:
    order = sorted(range(len(row)), key=lambda i: (-row[i], i))
    return tuple(sorted(i + 1 for i in order[:s]))


def find_star(g: ColoredGraph, f: StarFamily, *, fast_uniform: bool = True) -> StarWitness | None:
    """First star witness in vertex order, or ``None``.

    For uniform families (with ``fast_uniform``) the color set is the
    ``s`` largest color degrees at the center; otherwise it is the first
    qualifying set in colex order.
    """
    if g.t != f.t:
        raise ColorCountMismatch(f"coloring uses t={g.t}, family has t={f.t}")
    if g.n == 0:
        return None
    deg = color_degree_vectors(g)
    if fast_uniform and f.is_uniform:
        m = f.values[0]
        top = -np.sort(-deg, axis=1)[:, : f.s].sum(axis=1)
        hits = np.nonzero(top >= m)[0]
        if len(hits) == 0:
            return None
        center = int(hits[0])
        colors = _top_s(deg[center].tolist(), f.s)
    else:
        ok = deg @ incidence_matrix(f) >= np.array(f.values, dtype=np.int64)
        rows = np.nonzero(ok.any(axis=1))[0]
        if len(rows) == 0:
            return None
        center = int(rows[0])
        colors = mask_to_colors(f.masks[int(np.argmax(ok[center]))])
    need = f.value(colors)
    mask = colors_to_mask(colors)
    leaves = []
    for w in range(g.n):
        if w == center:
            continue
        c = g.color(center, w)
        if c is not None and (mask >> (c - 1)) & 1:
            leaves.append(w)
            if len(leaves) == need:
                break
    return StarWitness(center, colors, tuple(leaves))


def verify_no_star(g: ColoredGraph, f: StarFamily) -> bool:
    return find_star(g, f) is None


def check_witness(g: ColoredGraph, f: StarFamily, w: StarWitness) -> bool:
    """Independent re-check of a witness against the graph."""
    if len(w.colors) != f.s or len(set(w.colors)) != f.s:
        return False
    if len(w.leaves) != f.value(w.colors) or len(set(w.leaves)) != len(w.leaves):
        return False
    return all(w.center != x and g.color(w.center, x) in w.colors for x in w.leaves)
