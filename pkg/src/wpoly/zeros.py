"""Roots, Mahler measures and equimodular curves of two-term families.

The equimodular curve of ``c1 l1^n + c2 l2^n`` is the set where
``|l1(z)| = |l2(z)|``.  Writing ``l1 = s l2`` with ``|s| = 1`` and
``t = s + 1/s + 2 = 4 cos^2(theta/2)`` gives

    v(t, z) = -(l1 + l2)^2 + t l1 l2,        t in [0, 4],

whose roots for ``t`` running over ``[0, 4]`` sweep out the curve.  A point
of the curve that is not isolated and lies outside the unit circle forces
the Mahler measures of the family to diverge.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .laurent import LaurentPoly, eval_complex

__all__ = [
    "RootError",
    "EquimodularError",
    "HypothesisError",
    "RootSet",
    "EquimodularPoint",
    "Certificate",
    "roots",
    "mahler",
    "euclidean_mahler",
    "v_poly",
    "t_star",
    "equimodular_points",
    "level_set_points",
    "divergence_certificate",
    "check_hypothesis",
    "mahler_trend",
    "default_t_grid",
    "TOL_RESID",
    "TOL_ZERO",
    "TOL_EQM",
    "MARGIN",
]

TOL_RESID = 1e-10
TOL_ZERO = 1e-8
TOL_EQM = 1e-8
MARGIN = 1e-2
WITNESS_T = Fraction(5, 4)


class RootError(ArithmeticError):
    """Root refinement did not reach the residual bound."""

    def __init__(self, message: str, best: "RootSet | None" = None):
        super().__init__(message)
        self.best = best


class EquimodularError(ArithmeticError):
    """A root of ``v`` failed the ``|l1| = |l2|`` cross-check."""


class HypothesisError(ValueError):
    """The two dominant terms are constant multiples of each other."""


@dataclass
class RootSet:
    values: np.ndarray
    residuals: np.ndarray
    lead_coeff_abs: float
    low_exp: int

    @property
    def moduli(self) -> np.ndarray:
        return np.abs(self.values)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(zip(self.values, self.residuals, self.moduli))


# -- root finding ----------------------------------------------------------------


def _as_coeffs(f) -> tuple[list, int]:
    if isinstance(f, LaurentPoly):
        if f.is_zero():
            raise ValueError("zero polynomial")
        return f.coefficients(), f.valuation
    coeffs = list(f)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        raise ValueError("zero polynomial")
    low = 0
    while coeffs[low] == 0:
        low += 1
    return coeffs[low:], low


def _horner(c: np.ndarray, z: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Value, derivative and ``sum |c_k||z|^k`` of ascending ``c`` at ``z``."""
    p = np.zeros_like(z)
    dp = np.zeros_like(z)
    s = np.zeros(z.shape)
    r = np.abs(z)
    ac = np.abs(c)
    for k in range(len(c) - 1, -1, -1):
        dp = dp * z + p
        p = p * z + c[k]
        s = s * r + ac[k]
    return p, dp, s


def _residuals(c, z):
    p, _, s = _horner(c, z)
    return np.abs(p) / np.where(s > 0, s, 1.0)


def _newton_polish(c, z, steps=3):
    for _ in range(steps):
        p, dp, _ = _horner(c, z)
        ok = dp != 0
        step = np.zeros_like(z)
        step[ok] = p[ok] / dp[ok]
        cand = z - step
        better = _residuals(c, cand) < _residuals(c, z)
        z = np.where(better, cand, z)
    return z


def _aberth(c, z, max_iter=500, tol=1e-15):
    for _ in range(max_iter):
        p, dp, _ = _horner(c, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = p / dp
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            inv = 1.0 / diff
            np.fill_diagonal(inv, 0.0)
            corr = ratio / (1.0 - ratio * inv.sum(axis=1))
        corr = np.where(np.isfinite(corr), corr, 0.0)
        z = z - corr
        if np.all(np.abs(corr) <= tol * np.maximum(1.0, np.abs(z))):
            break
    return z


def roots(f, tol_resid: float = TOL_RESID) -> RootSet:
    """All roots of the ordinary polynomial ``f / A^low`` with residuals.

    Companion eigenvalues are polished by Newton steps; any root still above
    ``tol_resid`` (relative to ``sum |c_k||z|^k``) triggers Aberth iteration
    started from the eigenvalues.
    """
    coeffs, low = _as_coeffs(f)
    c = np.array([complex(x) for x in coeffs])
    lead = abs(c[-1])
    if len(c) == 1:
        return RootSet(np.zeros(0, complex), np.zeros(0), float(lead), low)
    z = np.roots(c[::-1]).astype(complex)
    z = _newton_polish(c, z)
    res = _residuals(c, z)
    if np.any(res > tol_resid):
        z2 = _newton_polish(c, _aberth(c, z.copy()))
        res2 = _residuals(c, z2)
        if res2.max() < res.max():
            z, res = z2, res2
    out = RootSet(z, res, float(lead), low)
    if np.any(res > tol_resid):
        raise RootError(f"root residual {res.max():.3g} above {tol_resid:.3g}", out)
    order = np.lexsort((z.imag, z.real))
    return RootSet(z[order], res[order], float(lead), low)


def mahler(f, tol_resid: float = TOL_RESID) -> float:
    """``|lead| * prod max(1, |root|)``, accumulated in log space."""
    rs = roots(f, tol_resid)
    logm = math.log(rs.lead_coeff_abs) + float(np.sum(np.log(np.maximum(1.0, rs.moduli))))
    return math.exp(logm)


def euclidean_mahler(f, tol_resid: float = TOL_RESID) -> float:
    """Mahler measure without the leading-coefficient factor."""
    rs = roots(f, tol_resid)
    return math.exp(float(np.sum(np.log(np.maximum(1.0, rs.moduli)))))


# -- the v polynomial ------------------------------------------------------------


def v_poly(lambda1: LaurentPoly, lambda2: LaurentPoly, t=None):
    """``v(t, A) = -(l1 + l2)^2 + t l1 l2``.

    With ``t=None`` returns the pair ``(v0, v1)`` with ``v = v0 + t v1``.
    A rational ``t`` in ``[0, 4]`` gives an integer polynomial, scaled by
    the denominator of ``t``.
    """
    v0 = -((lambda1 + lambda2) ** 2)
    v1 = lambda1 * lambda2
    if t is None:
        return v0, v1
    t = Fraction(t)
    if not 0 <= t <= 4:
        raise ValueError("t must lie in [0, 4]")
    return v0.scale(t.denominator) + v1.scale(t.numerator)


def t_star(lambda1: LaurentPoly, lambda2: LaurentPoly, z: complex) -> complex:
    """The parameter ``(l1 + l2)^2 / (l1 l2)`` at which ``v`` vanishes at ``z``."""
    a, b = eval_complex(lambda1, z), eval_complex(lambda2, z)
    return (a + b) ** 2 / (a * b)


@dataclass(frozen=True)
class EquimodularPoint:
    t: float
    z: complex
    isolated_flag: bool
    lambda_mod: float

    @property
    def modulus(self) -> float:
        return abs(self.z)


def default_t_grid() -> list[Fraction]:
    """81 uniform points of ``[0, 4]`` together with ``0``, ``5/4`` and ``4``."""
    grid = {Fraction(k, 20) for k in range(81)} | {Fraction(0), WITNESS_T, Fraction(4)}
    return sorted(grid)


def _poly_int_coeffs(f: LaurentPoly) -> list[Fraction]:
    return [Fraction(c) for c in f.coefficients()]


def _pdiv_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = a[:]
    while len(a) >= len(b) and any(a):
        q = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] -= q * c
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


def _squarefree(f: LaurentPoly) -> list[Fraction]:
    """Ascending coefficients of ``f / gcd(f, f')`` over the rationals."""
    p = _poly_int_coeffs(f)
    dp = [k * c for k, c in enumerate(p)][1:]
    a, b = p, dp
    while b and any(b):
        a, b = b, _pdiv_rem(a, b)
    g = a
    if len(g) <= 1:
        return p
    # exact quotient p / g
    q = [Fraction(0)] * (len(p) - len(g) + 1)
    r = p[:]
    for i in range(len(q) - 1, -1, -1):
        q[i] = r[i + len(g) - 1] / g[-1]
        for j, c in enumerate(g):
            r[i + j] -= q[i] * c
    return q


def equimodular_points(lambda1: LaurentPoly, lambda2: LaurentPoly,
                       t_grid: Iterable | None = None, tol_zero: float = TOL_ZERO,
                       tol_eqm: float = TOL_EQM, tol_resid: float = TOL_RESID
                       ) -> list[EquimodularPoint]:
    """Points of the equimodular curve found as roots of ``v(t, .)`` per grid ``t``.

    Roots are taken from the squarefree part of ``v``; a root where ``dv/dz``
    vanishes (relative to its scale) is flagged as possibly isolated.
    """
    if t_grid is None:
        t_grid = default_t_grid()
    points: list[EquimodularPoint] = []
    for t in t_grid:
        t = Fraction(t).limit_denominator(10 ** 6) if isinstance(t, float) else Fraction(t)
        v = v_poly(lambda1, lambda2, t)
        if v.is_zero():
            continue
        sqf = _squarefree(v)
        if len(sqf) <= 1:
            continue
        rs = roots([complex(c) for c in sqf], tol_resid)
        vc = np.array([complex(c) for c in v.coefficients()])
        for z in rs.values:
            if abs(z) == 0:
                continue
            a, b = abs(eval_complex(lambda1, z)), abs(eval_complex(lambda2, z))
            if a < tol_zero or b < tol_zero:
                continue
            m = max(a, b)
            if abs(a - b) > tol_eqm * max(1.0, m):
                raise EquimodularError(
                    f"t={float(t)}: |l1|={a:.12g} and |l2|={b:.12g} differ at z={z}")
            _, dv, _ = _horner(vc, np.array([z]))
            dscale = float(sum(k * abs(c) * abs(z) ** (k - 1) for k, c in enumerate(vc) if k))
            isolated = abs(dv[0]) < tol_zero * max(dscale, 1e-300)
            points.append(EquimodularPoint(float(t), complex(z), bool(isolated), (a + b) / 2))
    points.sort(key=lambda p: (p.t, p.z.real, p.z.imag))
    return points


def level_set_points(lambda1: LaurentPoly, lambda2: LaurentPoly, rays: int = 16,
                     r_min: float = 0.2, r_max: float = 5.0, steps: int = 200
                     ) -> list[complex]:
    """Points with ``|l1| = |l2|`` found by sign changes and bisection along rays."""
    out = []
    radii = np.geomspace(r_min, r_max, steps)

    def g(z):
        a, b = abs(eval_complex(lambda1, z)), abs(eval_complex(lambda2, z))
        if a == 0 or b == 0:
            return None
        return math.log(a) - math.log(b)

    for j in range(rays):
        phi = 2 * math.pi * (j + 0.5) / rays
        u = complex(math.cos(phi), math.sin(phi))
        prev_r, prev_g = None, None
        for r in radii:
            cur = g(r * u)
            if cur is None:
                prev_r = None
                continue
            if prev_r is not None and prev_g * cur < 0:
                lo, hi, glo = prev_r, r, prev_g
                for _ in range(80):
                    mid = (lo + hi) / 2
                    gm = g(mid * u)
                    if gm is None:
                        break
                    if (gm < 0) == (glo < 0):
                        lo, glo = mid, gm
                    else:
                        hi = mid
                out.append(((lo + hi) / 2) * u)
            prev_r, prev_g = r, cur
    return out


# -- divergence certificate ------------------------------------------------------


@dataclass
class Certificate:
    diverges: bool
    witness: EquimodularPoint | None
    points: list[EquimodularPoint] = field(default_factory=list, repr=False)

    def summary(self) -> str:
        if self.diverges:
            w = self.witness
            return (f"DIVERGES; witness t={_fmt(w.t)} z={_fmt_complex(w.z)} "
                    f"|z|={_fmt(w.modulus)}")
        return "INCONCLUSIVE; no non-isolated equimodular point outside the unit circle"


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _fmt_complex(z: complex) -> str:
    sign = "+" if z.imag >= 0 else "-"
    return f"{_fmt(z.real)}{sign}{_fmt(abs(z.imag))}i"


def check_hypothesis(lambda1: LaurentPoly, lambda2: LaurentPoly) -> None:
    """Reject ``l1 = w l2`` for a constant ``w`` of modulus one.

    Over the integers that means ``l1 = +-l2``.  A monomial ratio ``A^k``
    with ``k != 0`` is allowed: its curve is the unit circle.
    """
    if lambda1.is_zero() or lambda2.is_zero():
        raise HypothesisError("certificate not applicable: a dominant term vanishes")
    if lambda1 == lambda2 or lambda1 == -lambda2:
        raise HypothesisError("certificate not applicable: l1 is a unit-modulus constant times l2")


def divergence_certificate(F, t_grid: Iterable | None = None, tol_zero: float = TOL_ZERO,
                           tol_eqm: float = TOL_EQM, tol_resid: float = TOL_RESID,
                           margin: float = MARGIN) -> Certificate:
    """Search the equimodular curve of ``F`` for a divergence witness.

    ``diverges=False`` means no witness was found on the grid; it does not
    prove that the Mahler measures stay bounded.
    """
    check_hypothesis(F.lambda1, F.lambda2)
    pts = equimodular_points(F.lambda1, F.lambda2, t_grid, tol_zero, tol_eqm, tol_resid)
    good = [p for p in pts if not p.isolated_flag and p.modulus > 1 + margin]
    if not good:
        return Certificate(False, None, pts)
    good.sort(key=lambda p: (p.t != float(WITNESS_T), -p.modulus, p.t, p.z.real, p.z.imag))
    return Certificate(True, good[0], pts)


def mahler_trend(F, n_list: Sequence[int], tol_resid: float = TOL_RESID
                 ) -> list[tuple[int, float, float]]:
    """``(n, M, M_e)`` of the family bracket for each ``n``."""
    if list(n_list) != sorted(n_list):
        raise ValueError("n_list must be ascending")
    out = []
    for n in n_list:
        f = F.bracket(n)
        out.append((n, mahler(f, tol_resid), euclidean_mahler(f, tol_resid)))
    return out
