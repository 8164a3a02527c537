"""Extremal colorings certifying the lower bounds.

Every coloring is run through the verifier before it is returned; a star
found there is a bug, reported as ``InternalInconsistency``.
"""

from __future__ import annotations

from .coloring import ColoredGraph
from .decompositions import hamiltonian_decomposition, one_factorization, open_cycle, path_matchings, two_factorization
from .errors import InternalInconsistency, NotApplicable
from .family import StarFamily, ell_profile
from .formulas import U_ODD_PLUS_ONE_T_EVEN, uniform_case
from .verifier import find_star

CASE_PARITY = 1  # a = 1, k >= 1 even
CASE_EVEN_ELLS = 2  # a = 1, k = 0
CASE_APEX = 3  # a >= 2, sum(ell) + a odd
CASE_EVEN_ORDER = 4  # sum(ell) + a even


def construction_case(ell, a: int) -> int:
    k = sum(1 for x in ell if x % 2)
    if a == 1 and k >= 1 and k % 2 == 0:
        return CASE_PARITY
    if a == 1 and k == 0:
        return CASE_EVEN_ELLS
    if (sum(ell) + a) % 2:
        return CASE_APEX
    return CASE_EVEN_ORDER


def _color_factors(factors, counts) -> dict:
    """Give ``counts[i]`` consecutive factors to color ``i + 1``."""
    if sum(counts) != len(factors):
        raise InternalInconsistency(f"{len(factors)} factors for counts {list(counts)}")
    edge_color = {}
    pos = 0
    for color, cnt in enumerate(counts, start=1):
        for factor in factors[pos : pos + cnt]:
            for e in factor:
                edge_color[e] = color
        pos += cnt
    return edge_color


def _checked(g: ColoredGraph, f: StarFamily) -> ColoredGraph:
    w = find_star(g, f)
    if w is not None:
        raise InternalInconsistency(f"construction contains a star: {w}")
    return g


def lower_bound_coloring(f: StarFamily) -> ColoredGraph:
    """Star-free coloring of ``K_{N-1}``, ``N`` the Ramsey number of ``f``."""
    prof = ell_profile(f)
    ell, a, t = list(prof.ell), prof.a, f.t
    case = construction_case(ell, a)

    if case == CASE_PARITY:
        n = sum(ell)
        counts = list(ell)
        # The reduced color needs ell >= 1: color t when possible, else the
        # highest color with odd ell.
        drop = t - 1 if ell[-1] >= 1 else max(i for i, x in enumerate(ell) if x % 2)
        counts[drop] -= 1
        edge_color = _color_factors(one_factorization(n).factors, counts)
        return _checked(ColoredGraph(n, t, edge_color), f)

    if case == CASE_EVEN_ELLS:
        n = sum(ell) + 1
        if n == 1:
            return _checked(ColoredGraph(1, t, {}), f)
        counts = [x // 2 for x in ell]
        edge_color = _color_factors(two_factorization(n).factors, counts)
        return _checked(ColoredGraph(n, t, edge_color), f)

    if case == CASE_APEX:
        core = sum(ell) + a - 1
        counts = ell[:-1] + [ell[-1] + a - 2]
        edge_color = _color_factors(one_factorization(core).factors, counts)
        apex = core
        spokes = ell[:-1] + [ell[-1] + a - 1]
        w = 0
        for color, cnt in enumerate(spokes, start=1):
            for _ in range(cnt):
                edge_color[(w, apex)] = color
                w += 1
        return _checked(ColoredGraph(core + 1, t, edge_color), f)

    n = sum(ell) + a
    counts = ell[:-1] + [ell[-1] + a - 1]
    edge_color = _color_factors(one_factorization(n).factors, counts)
    return _checked(ColoredGraph(n, t, edge_color), f)


def star_critical_lower_coloring(m: int, s: int, t: int) -> ColoredGraph:
    """Star-free coloring of ``K_N`` minus a star at vertex ``N - 1``.

    Applies to ``m = (2k+1)s + 1`` with ``t`` even and ``2 <= s <= t - 1``;
    the center keeps ``2kt + t/2`` spokes (``s <= t/2``) or ``2kt + s``.
    """
    if t % 2 or not 2 <= s <= t - 1:
        raise NotApplicable(f"needs t even and 2 <= s <= t-1, got s={s}, t={t}")
    branch, k, _ = uniform_case(m, s, t)
    if branch != U_ODD_PLUS_ONE_T_EVEN:
        raise NotApplicable(f"m={m} is not of the form (2k+1)s+1")
    half = t // 2
    n = (2 * k + 1) * t + 1
    v = n - 1
    cycles = hamiltonian_decomposition(n).factors
    edge_color = {}
    deleted = []
    # Paths from the first t/2 cycles supply matchings M_1..M_t; the one
    # holding v in path i is M_{2i-1}.
    for i in range(half):
        edge, seq = open_cycle(cycles[i], v)
        deleted.append(edge)
        first, second = path_matchings(seq)
        for e in first:
            edge_color[e] = 2 * i + 1
        for e in second:
            edge_color[e] = 2 * i + 2
    for color in range(1, t + 1):
        for cycle in cycles[half + k * (color - 1) : half + k * color]:
            for e in cycle:
                edge_color[e] = color
    # A restored spoke takes the color v already has from that path;
    # its other end lacks exactly that color.
    for i in range(max(0, s - half)):
        edge_color[deleted[i]] = 2 * i + 1
    missing = frozenset(deleted[max(0, s - half) :])
    g = ColoredGraph(n, t, edge_color, missing, v)
    return _checked(g, StarFamily.uniform(m, s, t))
