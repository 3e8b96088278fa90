"""The quantum matrix algebra O_q(M_n) in PBW normal form.

A monomial is a word of generators ``(row, col)``.  It is in normal form when
the word is sorted lexicographically by (row, col).  Products are straightened
with the four defining relations, read as rewriting rules for an out-of-order
adjacent pair X_ab X_cd with (a, b) > (c, d):

    same row            X_ab X_ad = q^-1 X_ad X_ab
    same column         X_ab X_cb = q^-1 X_cb X_ab
    a > c, b < d        X_ab X_cd = X_cd X_ab
    a > c, b > d        X_ab X_cd = X_cd X_ab - qhat X_cb X_ad
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .laurent import ONE, ZERO, LaurentPoly, qhat, render as render_laurent

__all__ = [
    "Generator",
    "Word",
    "AlgebraElement",
    "normal_form_word",
    "is_normal",
    "linearly_independent",
    "clear_caches",
]

Generator = Tuple[int, int]
Word = Tuple[Generator, ...]
Terms = Tuple[Tuple[Word, LaurentPoly], ...]

_QINV = LaurentPoly.monomial(-1)
_MINUS_QHAT = -qhat()


def is_normal(word: Sequence[Generator]) -> bool:
    return all(word[k] <= word[k + 1] for k in range(len(word) - 1))


def _accumulate(acc: Dict[Word, LaurentPoly], word: Word, coeff: LaurentPoly) -> None:
    prev = acc.get(word)
    if prev is None:
        acc[word] = coeff
    else:
        s = prev + coeff
        if s:
            acc[word] = s
        else:
            del acc[word]


@lru_cache(maxsize=1 << 20)
def _insert(word: Word, g: Generator) -> Terms:
    """Normal form of ``word * g`` where ``word`` is already normal."""
    if not word or word[-1] <= g:
        return ((word + (g,), ONE),)
    h = word[-1]
    prefix = word[:-1]
    a, b = h
    c, d = g
    acc: Dict[Word, LaurentPoly] = {}

    def push(terms: Terms, last: Generator, scale: LaurentPoly) -> None:
        for w, k in terms:
            if not w or w[-1] <= last:
                _accumulate(acc, w + (last,), k * scale)
            else:
                for w2, k2 in _insert(w, last):
                    _accumulate(acc, w2, k * k2 * scale)

    if a == c or b == d:
        push(_insert(prefix, g), h, _QINV)
    elif b < d:
        push(_insert(prefix, g), h, ONE)
    else:
        push(_insert(prefix, g), h, ONE)
        # X_cb X_ad lies entirely below h, so no further reordering against h
        for w, k in _insert(prefix, (c, b)):
            for w2, k2 in _insert(w, (a, d)):
                _accumulate(acc, w2, k * k2 * _MINUS_QHAT)
    return tuple(acc.items())


@lru_cache(maxsize=1 << 18)
def _mul_words(u: Word, v: Word) -> Terms:
    """Normal form of ``u * v`` for a normal word ``u`` and any word ``v``."""
    if not v:
        return ((u, ONE),)
    if len(v) == 1:
        return _insert(u, v[0])
    acc: Dict[Word, LaurentPoly] = {}
    last = v[-1]
    for w, k in _mul_words(u, v[:-1]):
        for w2, k2 in _insert(w, last):
            _accumulate(acc, w2, k * k2)
    return tuple(acc.items())


def normal_form_word(word: Sequence[Generator]) -> Dict[Word, LaurentPoly]:
    """Straighten an arbitrary word into a linear combination of PBW monomials."""
    return dict(_mul_words((), tuple(tuple(g) for g in word)))


def clear_caches() -> None:
    _insert.cache_clear()
    _mul_words.cache_clear()


Scalar = Union[LaurentPoly, int]


class AlgebraElement:
    """An element of O_q(M_n): a map from normal words to nonzero coefficients."""

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Optional[Mapping[Sequence[Generator], Scalar]] = None):
        if n < 1:
            raise ValueError("ambient size n must be >= 1")
        self.n = n
        self._hash = None
        acc: Dict[Word, LaurentPoly] = {}
        for word, coeff in (terms or {}).items():
            word = tuple((int(i), int(j)) for i, j in word)
            for i, j in word:
                if not (1 <= i <= n and 1 <= j <= n):
                    raise ValueError(f"generator X[{i},{j}] outside 1..{n}")
            coeff = LaurentPoly(coeff) if isinstance(coeff, int) else coeff
            if not coeff:
                continue
            if is_normal(word):
                _accumulate(acc, word, coeff)
            else:
                for w, k in _mul_words((), word):
                    _accumulate(acc, w, k * coeff)
        self._terms = acc

    @classmethod
    def _raw(cls, n: int, terms: Dict[Word, LaurentPoly]) -> "AlgebraElement":
        obj = cls.__new__(cls)
        obj.n = n
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, n: int) -> "AlgebraElement":
        return cls._raw(n, {})

    @classmethod
    def one(cls, n: int) -> "AlgebraElement":
        return cls._raw(n, {(): ONE})

    @classmethod
    def scalar(cls, n: int, c: Scalar) -> "AlgebraElement":
        return cls(n, {(): c})

    @classmethod
    def generator(cls, n: int, i: int, j: int) -> "AlgebraElement":
        return cls(n, {((i, j),): ONE})

    @classmethod
    def word(cls, n: int, word: Sequence[Generator], coeff: Scalar = 1) -> "AlgebraElement":
        return cls(n, {tuple(word): coeff})

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> Dict[Word, LaurentPoly]:
        return dict(self._terms)

    def items(self) -> List[Tuple[Word, LaurentPoly]]:
        return sorted(self._terms.items())

    def coeff(self, word: Sequence[Generator]) -> LaurentPoly:
        return self._terms.get(tuple(word), ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def grading(self) -> Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
        """Common (row, column) degree of all terms, or None if inhomogeneous."""
        degree = None
        for word in self._terms:
            rows = [0] * self.n
            cols = [0] * self.n
            for i, j in word:
                rows[i - 1] += 1
                cols[j - 1] += 1
            d = (tuple(rows), tuple(cols))
            if degree is None:
                degree = d
            elif d != degree:
                return None
        if degree is None:
            zero = tuple([0] * self.n)
            return (zero, zero)
        return degree

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "AlgebraElement") -> None:
        if other.n != self.n:
            raise ValueError(f"ambient size mismatch: n={self.n} vs n={other.n}")

    def _lift(self, other) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            self._check(other)
            return other
        if isinstance(other, (int, LaurentPoly)):
            return AlgebraElement.scalar(self.n, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for w, k in other._terms.items():
            _accumulate(acc, w, k)
        return AlgebraElement._raw(self.n, acc)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement._raw(self.n, {w: -k for w, k in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c: Scalar) -> "AlgebraElement":
        if isinstance(c, int):
            c = LaurentPoly(c)
        if not c:
            return AlgebraElement.zero(self.n)
        return AlgebraElement._raw(self.n, {w: k * c for w, k in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        acc: Dict[Word, LaurentPoly] = {}
        for u, cu in self._terms.items():
            for v, cv in other._terms.items():
                c = cu * cv
                for w, k in _mul_words(u, v):
                    _accumulate(acc, w, k * c)
        return AlgebraElement._raw(self.n, acc)

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def map_generators(self, f: Callable[[Generator], Generator], reverse: bool = False) -> "AlgebraElement":
        """Apply ``f`` letterwise (reversing each word if ``reverse``) and renormalize."""
        acc: Dict[Word, LaurentPoly] = {}
        for word, k in self._terms.items():
            image = tuple(f(g) for g in (reversed(word) if reverse else word))
            for w, k2 in _mul_words((), image):
                _accumulate(acc, w, k * k2)
        return AlgebraElement._raw(self.n, acc)

    def map_coefficients(self, f: Callable[[LaurentPoly], LaurentPoly]) -> "AlgebraElement":
        acc = {}
        for w, k in self._terms.items():
            v = f(k)
            if v:
                acc[w] = v
        return AlgebraElement._raw(self.n, acc)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, (int, LaurentPoly)):
            return self == AlgebraElement.scalar(self.n, other)
        return NotImplemented

    def equals(self, other: "AlgebraElement") -> bool:
        self._check(other)
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    # -- rendering ----------------------------------------------------------

    def __str__(self) -> str:
        return render_element(self)

    def __repr__(self) -> str:
        return f"AlgebraElement(n={self.n}, {render_element(self)!r})"


def _render_word(word: Word) -> str:
    return "*".join(f"X[{i},{j}]" for i, j in word)


def render_element(a: AlgebraElement) -> str:
    """Render as ``X[1,1]*X[2,2] - q*X[1,2]*X[2,1]``; re-parseable."""
    if a.is_zero():
        return "0"
    out = []
    for word, coeff in a.items():
        mono = coeff.as_monomial()
        if mono is not None:
            c, e = mono
            negative = c < 0
            mag = render_laurent(LaurentPoly.monomial(e, abs(c)))
            if not word:
                body = mag
            elif mag == "1":
                body = _render_word(word)
            else:
                body = f"{mag}*{_render_word(word)}"
        else:
            negative = False
            body = f"({render_laurent(coeff)})"
            if word:
                body += "*" + _render_word(word)
        if not out:
            out.append(("-" if negative else "") + body)
        else:
            out.append((" - " if negative else " + ") + body)
    return "".join(out)


def linearly_independent(elements: Iterable[AlgebraElement], points: Sequence[int] = (2, 3, 5)) -> bool:
    """True if the elements are linearly independent over Q(q).

    Full rank of the coefficient matrix at one rational specialization of q
    proves generic full rank.  Returns False if no tested point gives full
    rank, which is conclusive only when the elements are in fact dependent.
    """
    elements = list(elements)
    if not elements:
        return True
    words = sorted({w for e in elements for w in e._terms})
    for qv in points:
        rows = [[e.coeff(w).evaluate(qv) for w in words] for e in elements]
        if _rank(rows) == len(elements):
            return True
    return False


def _rank(rows: List[List[Fraction]]) -> int:
    rows = [r[:] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank][col]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / p
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank
