"""Exact arithmetic in the Laurent polynomial ring Z[q, q^-1].

Elements are immutable and stored as a sparse map ``exponent -> coefficient``
with no zero coefficients, so equality of values is equality of maps.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

__all__ = [
    "LaurentPoly",
    "NotDivisibleError",
    "ZERO",
    "ONE",
    "Q",
    "qhat",
    "pow_neg_q",
    "neg_q_integer",
    "exact_div_q_minus_one",
    "eval_q_one",
]


class NotDivisibleError(ArithmeticError):
    """Raised when a Laurent polynomial is not divisible by (q - 1)."""


Scalar = Union["LaurentPoly", int]


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[int, int], int, None] = None):
        if terms is None:
            clean: Dict[int, int] = {}
        elif isinstance(terms, int):
            clean = {0: terms} if terms else {}
        else:
            clean = {}
            for e, c in terms.items():
                if not isinstance(e, int) or not isinstance(c, int):
                    raise TypeError("exponents and coefficients must be int")
                if c:
                    clean[e] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[int, int]) -> "LaurentPoly":
        # trusted constructor: caller guarantees no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls._raw({exp: coeff} if coeff else {})

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> Dict[int, int]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[int, int]]:
        return iter(sorted(self._terms.items()))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("degree of zero")
        return max(self._terms)

    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("valuation of zero")
        return min(self._terms)

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def as_monomial(self) -> Tuple[int, int] | None:
        """Return ``(coeff, exp)`` if this is a single term, else None."""
        if len(self._terms) != 1:
            return None
        (e, c), = self._terms.items()
        return c, e

    def is_unit(self) -> bool:
        m = self.as_monomial()
        return m is not None and m[0] in (1, -1)

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                del out[e]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return ZERO
            if other == 1:
                return self
            return LaurentPoly._raw({e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(a) < len(b):
            a, b = b, a
        out: Dict[int, int] = {}
        for e2, c2 in b.items():
            for e1, c1 in a.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            m = self.as_monomial()
            if m is None or m[0] not in (1, -1):
                raise ValueError("only units +-q^e have negative powers")
            c, e = m
            return LaurentPoly.monomial(e * k, c ** (-k))
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        if k == 0:
            return self
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def mirror(self) -> "LaurentPoly":
        """The image under the ring involution q -> q^-1."""
        return LaurentPoly._raw({-e: c for e, c in self._terms.items()})

    def evaluate(self, q) -> Fraction:
        """Exact value at a rational point q != 0."""
        q = Fraction(q)
        return sum((c * q ** e for e, c in self._terms.items()), Fraction(0))

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- rendering ----------------------------------------------------------

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({render(self)!r})"


def _render_power(e: int) -> str:
    if e == 1:
        return "q"
    return f"q^{e}"


def render(p: LaurentPoly) -> str:
    """Render terms in descending exponent order, e.g. ``q^2 - 2 + q^-2``."""
    if p.is_zero():
        return "0"
    parts = []
    for e, c in sorted(p._terms.items(), reverse=True):
        mag = abs(c)
        if e == 0:
            body = str(mag)
        elif mag == 1:
            body = _render_power(e)
        else:
            body = f"{mag}*{_render_power(e)}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: 1})
Q = LaurentPoly._raw({1: 1})
_QHAT = LaurentPoly._raw({1: 1, -1: -1})


def qhat() -> LaurentPoly:
    """q - q^-1."""
    return _QHAT


def pow_neg_q(lam: int) -> LaurentPoly:
    """(-q)^lam = (-1)^lam q^lam."""
    return LaurentPoly._raw({lam: -1 if lam % 2 else 1})


def neg_q_integer(d: int) -> LaurentPoly:
    """The (-q)-integer [d] = (-q)^(d-1) + (-q)^(d-3) + ... + (-q)^(1-d)."""
    if d < 1:
        raise ValueError(f"(-q)-integer needs d >= 1, got {d}")
    sign = -1 if (d - 1) % 2 else 1
    return LaurentPoly._raw({e: sign for e in range(d - 1, -d, -2)})


def exact_div_q_minus_one(p: LaurentPoly) -> LaurentPoly:
    """Return s with s*(q - 1) == p; raise NotDivisibleError otherwise."""
    if p.is_zero():
        return ZERO
    if eval_q_one(p) != 0:
        raise NotDivisibleError(f"{p} is not divisible by q - 1")
    lo, hi = p.valuation(), p.degree()
    out: Dict[int, int] = {}
    running = 0
    for e in range(lo, hi):
        running += p.coeff(e)
        if running:
            out[e] = -running
    return LaurentPoly._raw(out)


def eval_q_one(p: LaurentPoly) -> int:
    return sum(p._terms.values())


def product(factors: Iterable[Scalar]) -> LaurentPoly:
    result = ONE
    for f in factors:
        result = result * f
    return result
