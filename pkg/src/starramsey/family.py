"""Star families, the additivity (sum) condition and the ell-profile.

Color sets are bitmasks over colors ``1..t`` (color ``i`` is bit ``i - 1``).
Family values are stored densely, indexed by the colex rank of the
s-subset, which for bitmasks is plain numeric order.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import comb

from .errors import HypothesisViolated, InternalInconsistency, MalformedInput, OutOfTheoremRange

MAX_COLORS = 62

# Above this many s-subsets the multiset-pair search is skipped.
_PAIR_SEARCH_LIMIT = 120


def colors_to_mask(colors: Iterable[int]) -> int:
    mask = 0
    for c in colors:
        mask |= 1 << (c - 1)
    return mask


def mask_to_colors(mask: int) -> tuple[int, ...]:
    out = []
    c = 1
    while mask:
        if mask & 1:
            out.append(c)
        mask >>= 1
        c += 1
    return tuple(out)


@lru_cache(maxsize=None)
def s_subsets(t: int, s: int) -> tuple[int, ...]:
    """All s-subsets of ``[t]`` as bitmasks in colex order."""
    masks = [colors_to_mask(c) for c in combinations(range(1, t + 1), s)]
    return tuple(sorted(masks))


@lru_cache(maxsize=None)
def _rank_table(t: int, s: int) -> dict[int, int]:
    return {mask: r for r, mask in enumerate(s_subsets(t, s))}


def window(i: int, s: int, t: int) -> tuple[int, ...]:
    """Colors ``i+1, ..., i+s`` reduced cyclically into ``1..t``."""
    return tuple((i + j - 1) % t + 1 for j in range(1, s + 1))


@dataclass(frozen=True)
class StarFamily:
    """Star sizes ``m_A`` for every s-subset ``A`` of ``t`` colors.

    ``values[r]`` is ``m_A`` for the s-subset of colex rank ``r``.
    """

    t: int
    s: int
    values: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.t, int) or not isinstance(self.s, int):
            raise MalformedInput("t and s must be integers")
        if self.t < 2 or self.t > MAX_COLORS:
            raise MalformedInput(f"t must lie in [2, {MAX_COLORS}], got {self.t}")
        if not 1 <= self.s < self.t:
            raise MalformedInput(f"need 1 <= s < t, got s={self.s}, t={self.t}")
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if len(self.values) != comb(self.t, self.s):
            raise MalformedInput(
                f"expected {comb(self.t, self.s)} values, got {len(self.values)}"
            )
        if any(v < 1 for v in self.values):
            raise MalformedInput("every m_A must be a positive integer")

    @classmethod
    def uniform(cls, m: int, s: int, t: int) -> StarFamily:
        return cls(t, s, (m,) * comb(t, s))

    @classmethod
    def from_mapping(cls, t: int, s: int, mapping: Mapping) -> StarFamily:
        """Build from ``{colors: m_A}`` where keys are color iterables or masks."""
        ranks = _rank_table(t, s) if 1 <= s < t <= MAX_COLORS else {}
        values: list[int | None] = [None] * len(ranks)
        for key, value in mapping.items():
            if isinstance(key, int):
                mask = key
            else:
                colors = tuple(key)
                if any(not isinstance(c, int) or not 1 <= c <= t for c in colors):
                    raise MalformedInput(f"color set {list(colors)} has colors outside 1..{t}")
                if len(set(colors)) != len(colors):
                    raise MalformedInput(f"color set {list(colors)} repeats a color")
                mask = colors_to_mask(colors)
            if mask not in ranks:
                raise MalformedInput(f"{list(mask_to_colors(mask))} is not an {s}-subset of [{t}]")
            r = ranks[mask]
            if values[r] is not None:
                raise MalformedInput(f"color set {list(mask_to_colors(mask))} given twice")
            values[r] = value
        if not ranks:
            cls(t, s, ())  # raises with the right message
        missing = [mask_to_colors(m) for m, r in ranks.items() if values[r] is None]
        if missing:
            raise MalformedInput(f"missing color sets: {[list(c) for c in missing[:5]]}")
        return cls(t, s, tuple(values))

    @classmethod
    def from_weights(cls, weights: Sequence, s: int) -> StarFamily:
        """The additive family ``m_A = sum(weights[i-1] for i in A)``."""
        t = len(weights)
        ws = [Fraction(w) for w in weights]
        values = []
        for mask in s_subsets(t, s):
            total = sum(ws[c - 1] for c in mask_to_colors(mask))
            if total.denominator != 1:
                raise MalformedInput("weights do not give integral star sizes")
            values.append(int(total))
        return cls(t, s, tuple(values))

    @property
    def masks(self) -> tuple[int, ...]:
        return s_subsets(self.t, self.s)

    @property
    def is_uniform(self) -> bool:
        return len(set(self.values)) == 1

    def value(self, colors) -> int:
        mask = colors if isinstance(colors, int) else colors_to_mask(colors)
        return self.values[_rank_table(self.t, self.s)[mask]]

    def items(self):
        """Yield ``(colors, m_A)`` pairs in colex order."""
        for mask, v in zip(self.masks, self.values):
            yield mask_to_colors(mask), v

    def relabel(self, perm: Sequence[int]) -> StarFamily:
        """Rename color ``i`` to ``perm[i-1]`` (a permutation of ``1..t``)."""
        mapping = {tuple(perm[c - 1] for c in colors): v for colors, v in self.items()}
        return StarFamily.from_mapping(self.t, self.s, mapping)

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "s": self.s,
            "m": [{"colors": list(colors), "value": v} for colors, v in self.items()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data) -> StarFamily:
        if not isinstance(data, dict):
            raise MalformedInput("family JSON must be an object")
        try:
            t, s, entries = data["t"], data["s"], data["m"]
        except KeyError as exc:
            raise MalformedInput(f"family JSON lacks key {exc}") from None
        if not isinstance(t, int) or not isinstance(s, int) or isinstance(t, bool):
            raise MalformedInput("t and s must be integers")
        if not 1 <= s < t <= MAX_COLORS:
            raise MalformedInput(f"need 1 <= s < t <= {MAX_COLORS}")
        if not isinstance(entries, list):
            raise MalformedInput("'m' must be a list")
        mapping = {}
        seen = set()
        for entry in entries:
            if not isinstance(entry, dict) or "colors" not in entry or "value" not in entry:
                raise MalformedInput("each entry of 'm' needs 'colors' and 'value'")
            colors, value = entry["colors"], entry["value"]
            if not isinstance(colors, list) or len(colors) != s:
                raise MalformedInput(f"color set {colors!r} must be a list of {s} colors")
            if colors != sorted(colors):
                raise MalformedInput(f"color set {colors!r} must be sorted")
            if not isinstance(value, int) or isinstance(value, bool):
                raise MalformedInput(f"value for {colors!r} must be an integer")
            key = tuple(colors)
            if key in seen:
                raise MalformedInput(f"color set {colors!r} given twice")
            seen.add(key)
            mapping[key] = value
        return cls.from_mapping(t, s, mapping)

    @classmethod
    def from_json(cls, text: str) -> StarFamily:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedInput(f"invalid JSON: {exc}") from None
        return cls.from_dict(data)


@dataclass(frozen=True)
class SumCondition:
    """Outcome of the additivity test.

    ``weights`` certifies success. On failure ``violation`` holds two
    equal-union multisets of color sets with different sums, when the
    bounded search found one, and ``residual`` the inconsistent equation's
    right-hand side after elimination.
    """

    holds: bool
    weights: tuple[Fraction, ...] | None = None
    violation: tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]] | None = None
    residual: Fraction | None = None

    def __bool__(self):
        return self.holds

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "weights": None if self.weights is None else [str(w) for w in self.weights],
            "violation": None
            if self.violation is None
            else [[list(c) for c in side] for side in self.violation],
            "residual": None if self.residual is None else str(self.residual),
        }


def solve_rational(rows, rhs):
    """Solve ``rows @ x = rhs`` exactly over the rationals.

    Returns ``(x, None)`` for a consistent system with full column rank,
    ``(None, residual)`` if some equation reduces to ``0 = residual != 0``.
    Free variables (rank deficiency) are set to zero.
    """
    ncols = len(rows[0]) if rows else 0
    aug = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(aug)) if aug[i][c] != 0), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        pivot = aug[r][c]
        aug[r] = [v / pivot for v in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c] != 0:
                factor = aug[i][c]
                aug[i] = [vi - factor * vr for vi, vr in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for i in range(r, len(aug)):
        if aug[i][-1] != 0:
            return None, aug[i][-1]
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = aug[i][-1]
    return x, None


def find_violating_pair(f: StarFamily, max_b: int = 3):
    """Search multisets of at most ``max_b`` color sets for equal unions
    with unequal sums. Returns the pair or ``None``."""
    masks = f.masks
    if len(masks) > _PAIR_SEARCH_LIMIT:
        return None
    for b in range(2, max_b + 1):
        seen: dict[tuple[int, ...], tuple[int, tuple[int, ...]]] = {}
        for idx in combinations_with_replacement(range(len(masks)), b):
            counts = [0] * f.t
            for r in idx:
                for c in mask_to_colors(masks[r]):
                    counts[c - 1] += 1
            key = tuple(counts)
            total = sum(f.values[r] for r in idx)
            if key in seen:
                other_total, other_idx = seen[key]
                if other_total != total:
                    return (
                        tuple(mask_to_colors(masks[r]) for r in other_idx),
                        tuple(mask_to_colors(masks[r]) for r in idx),
                    )
            else:
                seen[key] = (total, idx)
    return None


def sum_condition(f: StarFamily) -> SumCondition:
    """Decide whether ``m_A = sum_{i in A} x_i`` has a rational solution."""
    rows = [[(mask >> i) & 1 for i in range(f.t)] for mask in f.masks]
    x, residual = solve_rational(rows, f.values)
    if x is not None:
        return SumCondition(True, weights=tuple(x))
    return SumCondition(False, violation=find_violating_pair(f), residual=residual)


@dataclass(frozen=True)
class EllProfile:
    ell: tuple[int, ...]
    a: int
    k: int

    @property
    def total(self) -> int:
        return sum(self.ell)

    def to_dict(self) -> dict:
        return {"ell": list(self.ell), "a": self.a, "k": self.k}


def window_sums(f: StarFamily) -> list[int]:
    """``n_i``: the sum over the sets ``{i} + B`` (``B`` an (s-1)-subset of
    the window of ``i``) minus ``(s-1)`` times the window's own value."""
    s, t = f.s, f.t
    out = []
    for i in range(1, t + 1):
        w = window(i, s, t)
        total = sum(f.value((i,) + b) for b in combinations(w, s - 1))
        out.append(total - (s - 1) * f.value(w))
    return out


def ell_profile(f: StarFamily) -> EllProfile:
    cond = sum_condition(f)
    if not cond.holds:
        if cond.violation is not None:
            left, right = ([list(c) for c in side] for side in cond.violation)
            detail = f"{left} and {right} have equal unions but unequal sums"
        else:
            detail = f"inconsistent weight system (residual {cond.residual})"
        raise HypothesisViolated(f"star sizes are not additive over colors: {detail}", cond)
    s = f.s
    ns = window_sums(f)
    ell = tuple((n - 1) // s for n in ns)
    remainders = {n - s * l for n, l in zip(ns, ell)}
    if len(remainders) != 1:
        raise InternalInconsistency(f"remainders differ across colors: {sorted(remainders)}")
    (a,) = remainders
    for mask, m in zip(f.masks, f.values):
        if sum(ell[c - 1] for c in mask_to_colors(mask)) != m - a:
            raise InternalInconsistency(
                f"ell sums disagree with m_A - a on {list(mask_to_colors(mask))}"
            )
    if min(ell) < 0:
        raise OutOfTheoremRange(f"negative ell entries {list(ell)}")
    k = sum(1 for l in ell if l % 2)
    return EllProfile(ell, a, k)
