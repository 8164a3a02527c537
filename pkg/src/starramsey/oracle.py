"""Exhaustive search for star-free colorings.

Edges of the host graph are colored one at a time in lexicographic order.
Each vertex carries its color-degree vector, encoded as a single mixed-radix
integer. A table computed once per problem gives, for every feasible
vector, the largest number of further edges the vertex can take without a
star; a branch is cut as soon as some vertex has more uncolored edges left
than that. This subsumes the plain "some A-sum reached m_A" test.

With ``parallel_width = w > 0`` the first ``w`` levels are expanded into
subtree roots which are searched independently, possibly in worker
processes. Results are merged in lexicographic order of the roots, so the
answer and the node count do not depend on scheduling.
"""

from __future__ import annotations

import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .coloring import ColoredGraph
from .errors import BudgetExhausted, InternalInconsistency, MalformedInput
from .family import StarFamily, mask_to_colors
from .formulas import ramsey_uniform

BUDGET_EXHAUSTED = "budget_exhausted"


def default_workers() -> int:
    env = os.environ.get("RAMSEY_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


@dataclass(frozen=True)
class SearchConfig:
    node_budget: int = 10**9
    break_color_symmetry: bool = False
    parallel_width: int = 0
    workers: int | None = None

    def __post_init__(self):
        if self.node_budget < 1:
            raise ValueError("node_budget must be at least 1")
        if self.parallel_width < 0:
            raise ValueError("parallel_width must be nonnegative")


@dataclass
class OracleResult:
    value: int | str
    nodes_explored: int
    witness_coloring: ColoredGraph | None = field(default=None, compare=False)

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "nodes_explored": self.nodes_explored,
            "witness_coloring": None
            if self.witness_coloring is None
            else self.witness_coloring.to_dict(),
        }


class _Problem:
    """Immutable search data; picklable so subtrees can go to workers."""

    def __init__(self, n: int, f: StarFamily, missing: frozenset, symmetric: bool):
        self.n = n
        self.t = t = f.t
        self.symmetric = symmetric
        self.edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in missing
        ]
        self.host_degree = [0] * n
        for u, v in self.edges:
            self.host_degree[u] += 1
            self.host_degree[v] += 1
        sets = [
            ([c - 1 for c in mask_to_colors(mask)], m) for mask, m in zip(f.masks, f.values)
        ]
        self.cap = [min(m - 1 for cs, m in sets if i in cs) for i in range(t)]
        self.stride = []
        acc = 1
        for i in range(t):
            self.stride.append(acc)
            acc *= self.cap[i] + 1
        self.slack = _slack_table(t, self.cap, self.stride, sets)


def _slack_table(t, cap, stride, sets) -> dict[int, int]:
    """Map each feasible degree-vector code to the most edges it can still absorb."""
    table: dict[int, int] = {}
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 10 * (sum(cap) + 50)))
    try:

        def visit(code: int, d: list[int]) -> int:
            hit = table.get(code)
            if hit is not None:
                return hit
            best = 0
            for i in range(t):
                if d[i] >= cap[i]:
                    continue
                d[i] += 1
                if all(sum(d[j] for j in cs) <= m - 1 for cs, m in sets if i in cs):
                    best = max(best, 1 + visit(code + stride[i], d))
                d[i] -= 1
            table[code] = best
            return best

        visit(0, [0] * t)
    finally:
        sys.setrecursionlimit(limit)
    return table


def _apply_prefix(prob: _Problem, prefix):
    t = prob.t
    code = [0] * prob.n
    deg = [0] * (prob.n * t)
    rem = list(prob.host_degree)
    for (u, v), c in zip(prob.edges, prefix):
        c -= 1
        for x in (u, v):
            code[x] += prob.stride[c]
            deg[x * t + c] += 1
            rem[x] -= 1
    return code, deg, rem


def _root_ok(prob: _Problem) -> bool:
    return all(prob.slack[0] >= d for d in prob.host_degree)


def _search(prob: _Problem, prefix: tuple[int, ...], budget: int):
    """Depth-first search below ``prefix``.

    Returns ``(assignment or None, nodes, exhausted)``; ``nodes`` counts
    the nodes strictly below the prefix.
    """
    edges = prob.edges
    E = len(edges)
    t = prob.t
    depth = len(prefix)
    if depth == E:
        return tuple(prefix), 0, False
    code, deg, rem = _apply_prefix(prob, prefix)
    stride, cap, slack = prob.stride, prob.cap, prob.slack
    symmetric = prob.symmetric
    assign = list(prefix) + [0] * (E - depth)
    used = [0] * (E + 1)
    used[depth] = max(prefix, default=0)
    nxt = [0] * E
    nodes = 0
    pos = depth
    while True:
        u, w = edges[pos]
        prev = assign[pos]
        if prev:
            c = prev - 1
            code[u] -= stride[c]
            code[w] -= stride[c]
            deg[u * t + c] -= 1
            deg[w * t + c] -= 1
            rem[u] += 1
            rem[w] += 1
            assign[pos] = 0
        limit = t
        if symmetric and used[pos] + 1 < t:
            limit = used[pos] + 1
        c = nxt[pos]
        ru = rem[u] - 1
        rw = rem[w] - 1
        while c < limit:
            if (
                deg[u * t + c] < cap[c]
                and deg[w * t + c] < cap[c]
                and slack.get(code[u] + stride[c], -1) >= ru
                and slack.get(code[w] + stride[c], -1) >= rw
            ):
                break
            c += 1
        if c >= limit:
            nxt[pos] = 0
            pos -= 1
            if pos < depth:
                return None, nodes, False
            continue
        code[u] += stride[c]
        code[w] += stride[c]
        deg[u * t + c] += 1
        deg[w * t + c] += 1
        rem[u] = ru
        rem[w] = rw
        assign[pos] = c + 1
        nxt[pos] = c + 1
        used[pos + 1] = used[pos] if used[pos] > c + 1 else c + 1
        nodes += 1
        if nodes > budget:
            return None, nodes, True
        pos += 1
        if pos == E:
            return tuple(assign), nodes, False
        nxt[pos] = 0


def _frontier(prob: _Problem, width: int):
    """Valid prefixes of length ``min(width, E)`` in lexicographic order.

    Each root comes with the number of frontier nodes visited up to and
    including it in preorder; the total is returned alongside. These are
    exactly the nodes a sequential search visits before entering that
    root's subtree, so merged node counts match the sequential ones.
    """
    width = min(width, len(prob.edges))
    out = []
    nodes = 0

    def grow(prefix):
        nonlocal nodes
        limit = prob.t
        if prob.symmetric:
            limit = min(prob.t, max(prefix, default=0) + 1)
        for c in range(1, limit + 1):
            candidate = prefix + [c]
            if not _prefix_ok(prob, candidate):
                continue
            nodes += 1
            if len(candidate) == width:
                out.append((tuple(candidate), nodes))
            else:
                grow(candidate)

    grow([])
    return out, nodes


def _prefix_ok(prob: _Problem, prefix) -> bool:
    code, deg, rem = _apply_prefix(prob, prefix)
    u, w = prob.edges[len(prefix) - 1]
    for x in (u, w):
        if any(deg[x * prob.t + c] > prob.cap[c] for c in range(prob.t)):
            return False
        if prob.slack.get(code[x], -1) < rem[x]:
            return False
    return True


def _run_subtree(args):
    prob, prefix, budget = args
    return _search(prob, prefix, budget)


def _star_center(n: int, missing) -> int | None:
    if not missing:
        return None
    common = set(next(iter(missing)))
    for pair in missing:
        common &= set(pair)
    if not common:
        raise MalformedInput("host_missing must be a star: all pairs share one vertex")
    return min(common)


def _normalize_missing(n: int, host_missing) -> frozenset:
    out = set()
    for u, v in host_missing or ():
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise MalformedInput(f"bad missing pair {(u, v)} for n={n}")
        out.add((min(u, v), max(u, v)))
    return frozenset(out)


def _avoid(n: int, f: StarFamily, host_missing, cfg: SearchConfig, budget: int):
    """Core of ``exists_avoidance_coloring``; returns ``(coloring, nodes)``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if cfg.break_color_symmetry and not f.is_uniform:
        raise ValueError("color symmetry breaking is only sound for uniform families")
    missing = _normalize_missing(n, host_missing)
    center = _star_center(n, missing)
    prob = _Problem(n, f, missing, cfg.break_color_symmetry)

    def coloring(assign):
        return ColoredGraph(n, f.t, dict(zip(prob.edges, assign)), missing, center)

    nodes = 1
    if nodes > budget:
        raise BudgetExhausted(f"node budget {cfg.node_budget} exhausted", nodes)
    if not _root_ok(prob):
        return None, nodes
    if not prob.edges:
        return coloring(()), nodes
    if cfg.parallel_width == 0:
        found, sub, exhausted = _search(prob, (), budget - nodes)
        nodes += sub
        if exhausted:
            raise BudgetExhausted(f"node budget {cfg.node_budget} exhausted", nodes)
        return (coloring(found) if found is not None else None), nodes

    roots, frontier_nodes = _frontier(prob, cfg.parallel_width)
    jobs = [(prob, prefix, budget) for prefix, _ in roots]
    workers = min(cfg.workers or default_workers(), max(1, len(jobs)))
    if workers <= 1:
        return _merge(map(_run_subtree, jobs), roots, frontier_nodes, nodes, budget, cfg, coloring)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_run_subtree, job) for job in jobs]
        try:
            results = (fu.result() for fu in futures)
            return _merge(results, roots, frontier_nodes, nodes, budget, cfg, coloring)
        finally:
            for fu in futures:
                fu.cancel()


def _merge(results, roots, frontier_nodes, base, budget, cfg, coloring):
    below = 0
    for (_, before), (found, sub, exhausted) in zip(roots, results):
        below += sub
        if exhausted or base + before + below > budget:
            raise BudgetExhausted(
                f"node budget {cfg.node_budget} exhausted", base + before + below
            )
        if found is not None:
            return coloring(found), base + before + below
    nodes = base + frontier_nodes + below
    if nodes > budget:
        raise BudgetExhausted(f"node budget {cfg.node_budget} exhausted", nodes)
    return None, nodes


def exists_avoidance_coloring(
    n: int, f: StarFamily, host_missing=(), cfg: SearchConfig | None = None
) -> ColoredGraph | None:
    """A star-free coloring of ``K_n`` minus ``host_missing``, or ``None``
    when none exists. Raises ``BudgetExhausted`` if the search is cut off."""
    cfg = cfg or SearchConfig()
    g, _ = _avoid(n, f, host_missing, cfg, cfg.node_budget)
    return g


def brute_force_ramsey(f: StarFamily, cfg: SearchConfig | None = None) -> OracleResult:
    """Smallest ``n`` such that every coloring of ``K_n`` has a star."""
    cfg = cfg or SearchConfig()
    total = 0
    witness = None
    n = 1
    while True:
        g, nodes = _avoid(n, f, (), cfg, cfg.node_budget - total)
        total += nodes
        if g is None:
            return OracleResult(n, total, witness)
        witness = g
        n += 1


def brute_force_star_critical(m: int, s: int, t: int, cfg: SearchConfig | None = None) -> OracleResult:
    """Smallest ``k`` such that every coloring of ``K_N`` minus a star
    leaving ``k`` spokes at one vertex has a star; ``N`` from the formula."""
    cfg = cfg or SearchConfig()
    f = StarFamily.uniform(m, s, t)
    N = ramsey_uniform(m, s, t).r
    center = N - 1
    total = 0
    witness = None
    for k in range(1, N):
        missing = [(w, center) for w in range(k, N - 1)]
        g, nodes = _avoid(N, f, missing, cfg, cfg.node_budget - total)
        total += nodes
        if g is None:
            return OracleResult(k, total, witness)
        witness = g
    raise InternalInconsistency(f"K_{N} has a star-free coloring, so {N} is not the Ramsey number")


def oracle_result_or_exhausted(fn, *args, **kwargs) -> OracleResult:
    """Run an oracle, turning ``BudgetExhausted`` into a result value."""
    try:
        return fn(*args, **kwargs)
    except BudgetExhausted as exc:
        return OracleResult(BUDGET_EXHAUSTED, exc.nodes_explored, None)
