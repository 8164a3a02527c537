"""Closed-form d-chromatic and star-critical Ramsey numbers for stars.

All arithmetic is on Python integers, so arbitrarily large ``m`` is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import NotApplicable, OutOfTheoremRange
from .family import EllProfile, StarFamily, ell_profile, mask_to_colors

# Branch labels of the general formula.
GENERAL_EVEN = "a=1,k-even"
GENERAL_OTHERWISE = "otherwise"

# Branch labels of the uniform piecewise formula, in the order matched.
U_EVEN_MULTIPLE = "m=2ks,s!=1"
U_EVEN_REM = "m=2ks+a,1<=a<=s-1"
U_ODD_MULTIPLE = "m=(2k+1)s"
U_ODD_PLUS_ONE_T_EVEN = "m=(2k+1)s+1,t-even"
U_ODD_PLUS_ONE_T_ODD = "m=(2k+1)s+1,t-odd"
U_ODD_REM = "m=(2k+1)s+a,2<=a<=s-1"

SC_HALF = "m=(2k+1)s+1,t-even,s<=t/2"
SC_HIGH = "m=(2k+1)s+1,t-even,s>=t/2+1"
SC_OTHERWISE = "otherwise"


def _answer_dict(r, rstar, branch, ell: EllProfile | None) -> dict:
    # one flat shape for every formula answer
    return {
        "r": r,
        "rstar": rstar,
        "branch": branch,
        "ell": None if ell is None else list(ell.ell),
        "a": None if ell is None else ell.a,
        "k": None if ell is None else ell.k,
    }


@dataclass(frozen=True)
class RamseyAnswer:
    r: int
    branch: str
    ell: EllProfile | None = None

    def to_dict(self) -> dict:
        return _answer_dict(self.r, None, self.branch, self.ell)


@dataclass(frozen=True)
class StarCriticalAnswer:
    rstar: int
    r: int
    branch: str

    def to_dict(self) -> dict:
        return _answer_dict(self.r, self.rstar, self.branch, None)


def ramsey_general(f: StarFamily) -> RamseyAnswer:
    prof = ell_profile(f)
    if prof.a == 1 and prof.k >= 1 and prof.k % 2 == 0:
        return RamseyAnswer(prof.total + 1, GENERAL_EVEN, prof)
    return RamseyAnswer(prof.total + prof.a + 1, GENERAL_OTHERWISE, prof)


def uniform_case(m: int, s: int, t: int) -> tuple[str, int, int]:
    """Match ``m`` against the six uniform forms.

    Returns ``(branch, k, a)``; ``a`` is the remainder term where the form
    has one and ``0`` otherwise. With ``s == 1`` every even ``m`` is read as
    ``(2k+1)*1 + 1``.
    """
    if not 1 <= s < t:
        raise OutOfTheoremRange(f"need 1 <= s < t, got s={s}, t={t}")
    if m < s:
        raise OutOfTheoremRange(f"need m >= s, got m={m}, s={s}")
    q, rem = divmod(m, s)
    if s == 1 and q % 2 == 0:
        q, rem = q - 1, 1
    if rem == 0:
        if q % 2 == 0:
            return U_EVEN_MULTIPLE, q // 2, 0
        return U_ODD_MULTIPLE, (q - 1) // 2, 0
    if q % 2 == 0:
        return U_EVEN_REM, q // 2, rem
    k = (q - 1) // 2
    if rem == 1:
        return (U_ODD_PLUS_ONE_T_EVEN if t % 2 == 0 else U_ODD_PLUS_ONE_T_ODD), k, 1
    return U_ODD_REM, k, rem


def ramsey_uniform(m: int, s: int, t: int) -> RamseyAnswer:
    branch, k, a = uniform_case(m, s, t)
    r = {
        U_EVEN_MULTIPLE: (2 * k - 1) * t + s + 1,
        U_EVEN_REM: 2 * k * t + a + 1,
        U_ODD_MULTIPLE: 2 * k * t + s + 1,
        U_ODD_PLUS_ONE_T_EVEN: (2 * k + 1) * t + 1,
        U_ODD_PLUS_ONE_T_ODD: (2 * k + 1) * t + 2,
        U_ODD_REM: (2 * k + 1) * t + a + 1,
    }[branch]
    return RamseyAnswer(r, branch)


def star_critical_uniform(m: int, s: int, t: int) -> StarCriticalAnswer:
    branch, k, _ = uniform_case(m, s, t)
    r = ramsey_uniform(m, s, t).r
    if branch == U_ODD_PLUS_ONE_T_EVEN:
        if s <= t // 2:
            return StarCriticalAnswer(2 * k * t + t // 2 + 1, r, SC_HALF)
        return StarCriticalAnswer(2 * k * t + s + 1, r, SC_HIGH)
    return StarCriticalAnswer(1, r, SC_OTHERWISE)


def _check_classical(ms: Sequence[int]) -> list[int]:
    ms = [int(x) for x in ms]
    if len(ms) < 1:
        raise OutOfTheoremRange("need at least one star")
    if any(x <= 1 for x in ms):
        raise OutOfTheoremRange("classical star sizes must exceed one")
    return ms


def ramsey_classical(ms: Sequence[int]) -> RamseyAnswer:
    """Ramsey number of stars ``K_{1,m_1}, ..., K_{1,m_t}``, one per color."""
    ms = _check_classical(ms)
    k = sum(1 for x in ms if x % 2 == 0)
    base = sum(ms) - len(ms)
    if k >= 2 and k % 2 == 0:
        return RamseyAnswer(base + 1, "k>=2-even")
    return RamseyAnswer(base + 2, "otherwise")


def star_critical_classical(ms: Sequence[int]) -> StarCriticalAnswer:
    ms = _check_classical(ms)
    k = sum(1 for x in ms if x % 2 == 0)
    r = ramsey_classical(ms).r
    if k >= 2 and k % 2 == 0:
        return StarCriticalAnswer(sum(ms) - len(ms) + 1 - k // 2, r, "k>=2-even")
    return StarCriticalAnswer(1, r, "otherwise")


def _xq(m: int, t: int) -> tuple[int, int, bool]:
    if t < 2 or m < 1:
        raise OutOfTheoremRange(f"need t >= 2 and m >= 1, got m={m}, t={t}")
    x = (m * t - 1) // (t - 1)
    q = x // t
    special = x == t * q + 1 and x % 2 == 1 and q % 2 == 1
    return x, q, special


def ramsey_tminus1_xq(m: int, t: int) -> RamseyAnswer:
    """Earlier closed form for ``s = t - 1``; used only as a cross-check."""
    x, _, special = _xq(m, t)
    if special:
        return RamseyAnswer(x, "x=tq+1,x-odd,q-odd")
    return RamseyAnswer(x + 1, "otherwise")


def star_critical_tminus1_xq(m: int, t: int) -> StarCriticalAnswer:
    x, _, special = _xq(m, t)
    r = ramsey_tminus1_xq(m, t).r
    if special:
        return StarCriticalAnswer(x - 1, r, "x=tq+1,x-odd,q-odd")
    return StarCriticalAnswer(1, r, "otherwise")


def b_threshold(m: int, s: int, t: int) -> int:
    """Degree at which every t-coloring forces a uniform star at a vertex.

    Undefined (``NotApplicable``) for ``m = (2k+1)s + 1`` with ``t`` even.
    """
    branch, k, a = uniform_case(m, s, t)
    if branch == U_ODD_PLUS_ONE_T_EVEN:
        raise NotApplicable("m=(2k+1)s+1 with t even has no degree threshold")
    return {
        U_EVEN_MULTIPLE: (2 * k - 1) * t + s,
        U_EVEN_REM: 2 * k * t + a,
        U_ODD_MULTIPLE: 2 * k * t + s,
        U_ODD_PLUS_ONE_T_ODD: (2 * k + 1) * t + 1,
        U_ODD_REM: (2 * k + 1) * t + a,
    }[branch]


def degree_forces_star(d: Sequence[int], f: StarFamily) -> tuple[int, ...] | None:
    """Return an s-subset ``A`` with ``sum(d[i] for i in A) >= m_A``, if any.

    Uniform families pick the ``s`` largest entries (ties to the lower
    color); otherwise the first qualifying set in colex order wins.
    """
    d = [int(x) for x in d]
    if len(d) != f.t:
        raise ValueError(f"degree vector has {len(d)} entries, family has t={f.t}")
    if f.is_uniform:
        top = sorted(range(f.t), key=lambda i: (-d[i], i))[: f.s]
        if sum(d[i] for i in top) >= f.values[0]:
            return tuple(sorted(i + 1 for i in top))
        return None
    for mask, m in zip(f.masks, f.values):
        colors = mask_to_colors(mask)
        if sum(d[c - 1] for c in colors) >= m:
            return colors
    return None


def incidence_matrix(f: StarFamily) -> np.ndarray:
    """``(t, C(t,s))`` 0/1 matrix; column ``r`` marks the colors of set ``r``."""
    cols = [[(mask >> i) & 1 for i in range(f.t)] for mask in f.masks]
    return np.array(cols, dtype=np.int64).T


def degrees_force_star(D, f: StarFamily) -> np.ndarray:
    """Vectorized existence test: row ``j`` of ``D`` forces a star."""
    D = np.asarray(D, dtype=np.int64)
    if D.ndim != 2 or D.shape[1] != f.t:
        raise ValueError("D must have shape (n, t)")
    sums = D @ incidence_matrix(f)
    return (sums >= np.array(f.values, dtype=np.int64)).any(axis=1)
