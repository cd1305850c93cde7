"""Exact Laurent polynomials in ``A`` and their localization at ``d``.

``LaurentPoly`` is an immutable integer-coefficient Laurent polynomial
stored sparsely as ``{exponent: coefficient}``.  ``DRingElem`` is a
Laurent polynomial times an integer power of ``d = -A^-2 - A^2``; it is
the value ring for W-polynomials whose edge weights carry ``1/d``.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping

__all__ = [
    "LaurentPoly",
    "DRingElem",
    "NotDivisibleError",
    "NonInvertibleError",
    "A",
    "ONE",
    "ZERO",
    "D",
    "exact_div",
    "l2_norm_sq",
    "eval_complex",
    "parse_laurent",
]


class NotDivisibleError(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""


class NonInvertibleError(ArithmeticError):
    """Raised on a negative power of a non-unit."""


class LaurentPoly:
    """Integer Laurent polynomial in one variable ``A``.

    The zero polynomial has no terms; no stored coefficient is zero.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        if terms:
            for k, c in terms.items():
                if c:
                    clean[int(k)] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "LaurentPoly":
        # caller guarantees no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, coeff: int, exp: int) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], low: int = 0) -> "LaurentPoly":
        """Build from ascending coefficients starting at exponent ``low``."""
        return cls({low + i: c for i, c in enumerate(coeffs)})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        """True for ``±A^k``, the units of the Laurent ring."""
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    @property
    def degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    @property
    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no valuation")
        return min(self._terms)

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    @property
    def leading_coeff(self) -> int:
        return self._terms[self.degree]

    @property
    def trailing_coeff(self) -> int:
        return self._terms[self.valuation]

    def coefficients(self) -> list[int]:
        """Dense ascending coefficient list from valuation to degree."""
        if not self._terms:
            return []
        lo, hi = self.valuation, self.degree
        return [self._terms.get(k, 0) for k in range(lo, hi + 1)]

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(a) > len(b):
            a, b = b, a
        out: dict[int, int] = {}
        for ka, ca in a.items():
            for kb, cb in b.items():
                k = ka + kb
                out[k] = out.get(k, 0) + ca * cb
        return LaurentPoly._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_unit():
                raise NonInvertibleError("non-invertible")
            (k, c), = self._terms.items()
            return LaurentPoly._raw({k * n: c ** -n})
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``A^k``."""
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def scale(self, c: int) -> "LaurentPoly":
        return LaurentPoly({e: c * v for e, v in self._terms.items()})

    def mirror(self) -> "LaurentPoly":
        """Image under ``A -> A^-1``."""
        return LaurentPoly._raw({-e: c for e, c in self._terms.items()})

    def substitute_power(self, m: int) -> "LaurentPoly":
        """Image under ``A -> A^m``."""
        if m == 0:
            return LaurentPoly.constant(sum(self._terms.values()))
        return LaurentPoly._raw({e * m: c for e, c in self._terms.items()})

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- evaluation / text ------------------------------------------------

    def __call__(self, z):
        return eval_complex(self, z)

    def to_str(self, var: str = "A") -> str:
        if not self._terms:
            return "0"
        parts = []
        for k in sorted(self._terms, reverse=True):
            c = self._terms[k]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"LaurentPoly({self.to_str()!r})"


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.constant(x)
    return NotImplemented


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
A = LaurentPoly({1: 1})
D = LaurentPoly({-2: -1, 2: -1})


def parse_laurent(text: str, var: str = "A") -> LaurentPoly:
    """Parse the canonical text form, e.g. ``"-A^4 - A^-4"`` or ``"2*A^3 + 1"``."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    term = re.compile(
        rf"([+-]?)(?:(\d+)(?:\*(?={var}))?)?({var}(?:\^(-?\d+))?)?"
    )
    terms: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = term.match(s, pos)
        sign, num, sym, exp = m.groups()
        if m.end() == pos or (num is None and sym is None):
            raise ValueError(f"cannot parse polynomial {text!r}")
        if pos > 0 and not sign:
            raise ValueError(f"missing operator in {text!r}")
        c = int(num) if num is not None else 1
        k = 0 if sym is None else (int(exp) if exp is not None else 1)
        terms[k] = terms.get(k, 0) + (-c if sign == "-" else c)
        pos = m.end()
    return LaurentPoly(terms)


def exact_div(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Return ``q`` with ``f == q * g``; raise ``NotDivisibleError`` otherwise."""
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if f.is_zero():
        return ZERO
    if g.is_monomial():
        (kg, cg), = g._terms.items()
        out = {}
        for k, c in f._terms.items():
            q, r = divmod(c, cg)
            if r:
                raise NotDivisibleError("not divisible")
            out[k - kg] = q
        return LaurentPoly._raw(out)
    # shift both to ordinary polynomials and run integer long division from the top
    fl, gl = f.valuation, g.valuation
    fc = f.coefficients()
    gc = g.coefficients()
    n, m = len(fc) - 1, len(gc) - 1
    if n < m:
        raise NotDivisibleError("not divisible")
    rem = list(fc)
    lead = gc[-1]
    q = [0] * (n - m + 1)
    for i in range(n - m, -1, -1):
        c = rem[i + m]
        if c:
            qi, r = divmod(c, lead)
            if r:
                raise NotDivisibleError("not divisible")
            q[i] = qi
            for j in range(m + 1):
                rem[i + j] -= qi * gc[j]
    if any(rem):
        raise NotDivisibleError("not divisible")
    return LaurentPoly.from_coeffs(q, fl - gl)


def l2_norm_sq(f: LaurentPoly) -> int:
    """Sum of squared coefficients."""
    return sum(c * c for c in f._terms.values())


def eval_complex(f: LaurentPoly, z, tol: float | None = None) -> complex:
    """Evaluate ``f`` at a complex point by Horner's rule.

    The absolute rounding error is bounded by a small multiple of machine
    epsilon times ``sum |c_k| |z|^k``; ``tol`` is accepted for interface
    symmetry and not used by the computation.
    """
    z = complex(z)
    if not f._terms:
        return 0j
    lo = f.valuation
    if z == 0:
        if lo < 0:
            raise ZeroDivisionError("pole at origin")
        return complex(f._terms.get(0, 0))
    acc = 0j
    for c in reversed(f.coefficients()):
        acc = acc * z + c
    if lo:
        acc *= z ** lo
    return acc


def eval_scale(f: LaurentPoly, z) -> float:
    """``sum |c_k| |z|^k``, the natural scale for residuals at ``z``."""
    r = abs(complex(z))
    return float(sum(abs(c) * r ** k for k, c in f._terms.items()))


class DRingElem:
    """Element ``num * d**dexp`` of the Laurent ring localized at ``d``.

    Equality and hashing are representation independent; arithmetic only
    reduces when ``dexp < 0`` and ``d`` divides the numerator.
    """

    __slots__ = ("num", "dexp")

    def __init__(self, num: LaurentPoly | int, dexp: int = 0):
        if isinstance(num, int):
            num = LaurentPoly.constant(num)
        if num.is_zero():
            dexp = 0
        while dexp < 0:
            try:
                num = exact_div(num, D)
            except NotDivisibleError:
                break
            dexp += 1
        self.num = num
        self.dexp = dexp

    @classmethod
    def _lazy(cls, num: LaurentPoly, dexp: int) -> "DRingElem":
        obj = cls.__new__(cls)
        obj.num = num if not num.is_zero() else ZERO
        obj.dexp = dexp if not num.is_zero() else 0
        return obj

    def normalized(self) -> "DRingElem":
        return DRingElem(self.num, self.dexp)

    def canonical(self) -> tuple[LaurentPoly, int]:
        """Strip every factor of ``d`` from the numerator."""
        num, e = self.num, self.dexp
        if num.is_zero():
            return ZERO, 0
        while True:
            try:
                num = exact_div(num, D)
            except NotDivisibleError:
                return num, e
            e += 1

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.canonical()[1] >= 0

    def to_laurent(self) -> LaurentPoly:
        """The value as a plain Laurent polynomial; raises if ``d`` remains below."""
        num, e = self.canonical()
        if e < 0:
            raise NotDivisibleError("not divisible")
        return num * D ** e

    def _align(self, other: "DRingElem") -> tuple[LaurentPoly, LaurentPoly, int]:
        e = min(self.dexp, other.dexp)
        a = self.num if self.dexp == e else self.num * D ** (self.dexp - e)
        b = other.num if other.dexp == e else other.num * D ** (other.dexp - e)
        return a, b, e

    def __add__(self, other):
        other = _dcoerce(other)
        if other is NotImplemented:
            return other
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        a, b, e = self._align(other)
        return DRingElem._lazy(a + b, e)

    __radd__ = __add__

    def __neg__(self):
        return DRingElem._lazy(-self.num, self.dexp)

    def __sub__(self, other):
        other = _dcoerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _dcoerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _dcoerce(other)
        if other is NotImplemented:
            return other
        return DRingElem._lazy(self.num * other.num, self.dexp + other.dexp)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            num, e = self.canonical()
            if not num.is_unit():
                raise NonInvertibleError("non-invertible")
            return DRingElem._lazy(num ** n, e * n)
        return DRingElem._lazy(self.num ** n, self.dexp * n)

    def shift(self, k: int) -> "DRingElem":
        return DRingElem._lazy(self.num.shift(k), self.dexp)

    def __eq__(self, other):
        other = _dcoerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, _ = self._align(other)
        return a == b

    def __hash__(self):
        return hash(self.canonical())

    def __repr__(self):
        num, e = self.canonical()
        if e == 0:
            return f"DRingElem({num.to_str()!r})"
        return f"DRingElem({num.to_str()!r}, dexp={e})"

    def __str__(self):
        num, e = self.canonical()
        if e == 0:
            return num.to_str()
        return f"({num.to_str()})*d^{e}"


def _dcoerce(x):
    if isinstance(x, DRingElem):
        return x
    if isinstance(x, LaurentPoly):
        return DRingElem._lazy(x, 0)
    if isinstance(x, int):
        return DRingElem._lazy(LaurentPoly.constant(x), 0)
    return NotImplemented


DR_ONE = DRingElem(ONE)
DR_ZERO = DRingElem(ZERO)
DR_D = DRingElem(ONE, 1)
