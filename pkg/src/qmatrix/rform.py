"""The braiding form r on O_q(M_n).

:func:`r_oracle` follows the bialgebra recursion literally on words, and
:func:`r_minor_oracle` runs the same recursion on a pair of minors as a
transfer matrix so that minors of size 5 or 6 stay cheap.

:func:`r_minor_closed` evaluates the closed formula.  It shares nothing with
the recursive evaluators beyond :func:`r_base`.
"""

from __future__ import annotations

from itertools import product as cartesian
from typing import Dict, Optional, Sequence, Tuple

from .algebra import AlgebraElement, Generator, Word
from .indexsets import IndexSet, ell, leq_order, xi_q
from .laurent import ONE, Q, ZERO, LaurentPoly, pow_neg_q, qhat, render as render_laurent
from .minors import inversions, quantum_minor

__all__ = [
    "r_base",
    "r_oracle",
    "r_oracle_words",
    "r_minor_oracle",
    "r_minors_via_words",
    "r_minor_closed",
    "r_factored",
    "render_factored",
    "OutOfContractError",
]


class OutOfContractError(ValueError):
    """An evaluation the form does not define without the counit."""


_QHAT = qhat()


def r_base(g: Generator, h: Generator) -> LaurentPoly:
    """Value of r on a pair of generators."""
    (a, b), (c, d) = g, h
    if a == b and c == d:
        return Q if a == c else ONE
    if a == d and b == c and a > b:
        return _QHAT
    return ZERO


def _agree(n: int, words: Sequence[Word]) -> None:
    for w in words:
        for i, j in w:
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"generator X[{i},{j}] outside 1..{n}")


def r_oracle_words(u: Sequence[Generator], v: Sequence[Generator], n: int) -> LaurentPoly:
    """r(u, v) for words u, v, straight from the multiplicativity axioms."""
    u = tuple(tuple(g) for g in u)
    v = tuple(tuple(g) for g in v)
    _agree(n, (u, v))
    if not u and not v:
        return ONE
    if not u or not v:
        raise OutOfContractError("r on an empty word against a nonempty word is not evaluated")
    memo: Dict[Tuple[Word, Word], LaurentPoly] = {}
    indices = range(1, n + 1)

    def against_generator(w: Word, l: int, m: int) -> LaurentPoly:
        # chain sum l = k0, k1, ..., kt = m
        layer = {l: ONE}
        for s, g in enumerate(w):
            targets = [m] if s == len(w) - 1 else indices
            nxt: Dict[int, LaurentPoly] = {}
            for k, c in layer.items():
                for k2 in targets:
                    b = r_base(g, (k, k2))
                    if b:
                        nxt[k2] = nxt.get(k2, ZERO) + c * b
            layer = {k: c for k, c in nxt.items() if c}
            if not layer:
                return ZERO
        return layer.get(m, ZERO)

    def rec(w: Word, x: Word) -> LaurentPoly:
        key = (w, x)
        hit = memo.get(key)
        if hit is not None:
            return hit
        c, d = x[-1]
        if len(x) == 1:
            val = against_generator(w, c, d)
        else:
            rest = x[:-1]
            val = ZERO
            for ks in cartesian(indices, repeat=len(w)):
                left = tuple((g[0], k) for g, k in zip(w, ks))
                first = against_generator(left, c, d)
                if not first:
                    continue
                right = tuple((k, g[1]) for g, k in zip(w, ks))
                val = val + first * rec(right, rest)
        memo[key] = val
        return val

    return rec(u, v)


def r_oracle(a: AlgebraElement, b: AlgebraElement) -> LaurentPoly:
    """Bilinear extension of :func:`r_oracle_words` to algebra elements."""
    if a.n != b.n:
        raise ValueError(f"ambient size mismatch: n={a.n} vs n={b.n}")
    total = ZERO
    for u, cu in a.items():
        for v, cv in b.items():
            total = total + cu * cv * r_oracle_words(u, v, a.n)
    return total


def _sizes(I, J, M, N):
    I, J, M, N = map(IndexSet, (I, J, M, N))
    if len(I) != len(J) or len(M) != len(N):
        raise ValueError(f"need |I| == |J| and |M| == |N|, got [{I}|{J}], [{M}|{N}]")
    return I, J, M, N


def r_minor_oracle(I, J, M, N, n: Optional[int] = None) -> LaurentPoly:
    """r([I|J], [M|N]) by the word recursion, fused over both permutation sums.

    The letters of [M|N] are consumed right to left.  For each letter the
    chain sum threads through the t rows of [I|J]; the state carried between
    letters is the current column tuple of the left word together with the
    set of N-indices already used, whose relative order gives the sign of
    the right-hand permutation.  At the end the column tuple must be a
    rearrangement of J, weighted by its own sign.
    """
    I, J, M, N = _sizes(I, J, M, N)
    if n is not None:
        for S in (I, J, M, N):
            if not S.within(n):
                raise ValueError(f"index set {S} leaves the range 1..{n}")
    t = len(I)
    if not I and not M:
        return ONE
    if not I or not M:
        raise OutOfContractError("r on an empty minor against a nonempty one is not evaluated")
    targets = set(N)
    states: Dict[Tuple[Tuple[int, ...], frozenset], LaurentPoly] = {(tuple(I), frozenset()): ONE}
    for r in reversed(range(len(M))):
        new: Dict[Tuple[Tuple[int, ...], frozenset], LaurentPoly] = {}
        for (h, used), weight in states.items():
            # chain through rows p = 1..t, tracking (new columns, running index)
            partial: Dict[Tuple[Tuple[int, ...], int], LaurentPoly] = {((), M[r]): ONE}
            for p in range(t):
                hp = h[p]
                nxt: Dict[Tuple[Tuple[int, ...], int], LaurentPoly] = {}
                for (hs, w), c in partial.items():
                    key = (hs + (hp,), w)
                    nxt[key] = nxt.get(key, ZERO) + (c * Q if hp == w else c)
                    if w < hp:
                        key = (hs + (w,), hp)
                        nxt[key] = nxt.get(key, ZERO) + c * _QHAT
                partial = nxt
            for (hs, w), c in partial.items():
                if w not in targets or w in used or not c:
                    continue
                sign = pow_neg_q(sum(1 for x in used if x < w))
                key = (hs, used | {w})
                new[key] = new.get(key, ZERO) + weight * c * sign
        states = {k: v for k, v in new.items() if v}
    total = ZERO
    target = tuple(J)
    for (h, _), weight in states.items():
        if tuple(sorted(h)) == target and len(set(h)) == t:
            total = total + weight * pow_neg_q(inversions(h))
    return total


def _closed_exponents(I, J, M, N) -> Optional[Tuple[int, int, int, IndexSet, IndexSet]]:
    I, J, M, N = _sizes(I, J, M, N)
    if not leq_order(J, I):
        return None
    if (I & M) != (J & N) or (I | M) != (J | N):
        return None
    base = (J - N) | (M - I)
    lam = ell(base, I - J) - ell(base, J - I)
    return len(I & M), len(I - J), lam, I - J, J - I


def r_minor_closed(I, J, M, N) -> LaurentPoly:
    """Closed formula for r([I|J], [M|N])."""
    ex = _closed_exponents(I, J, M, N)
    if ex is None:
        return ZERO
    a, b, lam, A, B = ex
    return LaurentPoly.monomial(a) * _QHAT ** b * pow_neg_q(lam) * xi_q(A, B)


def r_factored(I, J, M, N) -> Optional[dict]:
    """The closed value as factors ``{"q": a, "qhat": b, "negq": c, "xi": poly}``; None if zero."""
    ex = _closed_exponents(I, J, M, N)
    if ex is None:
        return None
    a, b, lam, A, B = ex
    return {"q": a, "qhat": b, "negq": lam, "xi": xi_q(A, B)}


def _int_factors(A, B) -> list:
    # the (-q)-integer factors of xi, each rendered separately
    from .laurent import neg_q_integer

    out = []
    for l, r in enumerate(A, start=1):
        d = sum(1 for j in B if j <= r) - l + 1
        if d > 1:
            out.append(neg_q_integer(d))
    return out


def render_factored(I, J, M, N) -> str:
    """E.g. ``q^2 * qhat^3 * (-q)^-3 * (q^2 + 1 + q^-2) * (-q - q^-1)``."""
    ex = _closed_exponents(I, J, M, N)
    if ex is None:
        return "0"
    a, b, lam, A, B = ex
    parts = []
    if a:
        parts.append("q" if a == 1 else f"q^{a}")
    if b:
        parts.append("qhat" if b == 1 else f"qhat^{b}")
    if lam:
        parts.append("(-q)" if lam == 1 else f"(-q)^{lam}")
    parts.extend(f"({render_laurent(p)})" for p in _int_factors(A, B))
    return " * ".join(parts) if parts else "1"


def r_minors_via_words(I, J, M, N, n: int) -> LaurentPoly:
    """r([I|J], [M|N]) by expanding both minors into words; exponential, small cases only."""
    return r_oracle(quantum_minor(I, J, n), quantum_minor(M, N, n))
