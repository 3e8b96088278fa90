"""Index-set combinatorics: inversion counts, the partial order, xi_q,
natural complements, the families of sets below/above X, and the L exponents.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, List, Optional, Tuple

from .laurent import ONE, LaurentPoly, neg_q_integer

__all__ = [
    "IndexSet",
    "ell",
    "leq_order",
    "omega0",
    "xi_q",
    "natural_complement",
    "enum_less",
    "enum_greater",
    "enum_leq",
    "enum_geq",
    "L_exponent",
    "Lnat_exponent",
    "interval_count",
    "weakly_separated",
    "weak_separation_split",
    "parse_index_set",
    "subsets",
]


class IndexSet(tuple):
    """A strictly ascending tuple of positive integers.

    Supports ``|``, ``&``, ``-`` and ``^`` as set operations.  The built-in
    tuple comparison (lexicographic) is kept for deterministic sorting; the
    partial order on equal-size sets is :func:`leq_order`.
    """

    __slots__ = ()

    def __new__(cls, elements: Iterable[int] = ()):
        if isinstance(elements, IndexSet):
            return elements
        items = sorted(set(elements))
        for x in items:
            if not isinstance(x, int) or x < 1:
                raise ValueError(f"index set elements must be positive ints, got {x!r}")
        return super().__new__(cls, items)

    def __or__(self, other):
        return IndexSet(set(self) | set(other))

    def __and__(self, other):
        other = set(other)
        return IndexSet(x for x in self if x in other)

    def __sub__(self, other):
        other = set(other)
        return IndexSet(x for x in self if x not in other)

    def __xor__(self, other):
        return IndexSet(set(self) ^ set(other))

    def __repr__(self):
        return "{" + ",".join(map(str, self)) + "}"

    def within(self, n: int) -> bool:
        return not self or self[-1] <= n

    def compact(self, n: int) -> str:
        """``235`` when every element is a digit, else ``2,3,5``."""
        if n <= 9:
            return "".join(map(str, self))
        return ",".join(map(str, self))


def _as_set(S) -> IndexSet:
    return S if isinstance(S, IndexSet) else IndexSet(S)


def ell(S, T) -> int:
    """Number of pairs (s, t) in S x T with s > t."""
    T = sorted(T)
    count = 0
    for s in S:
        for t in T:
            if t < s:
                count += 1
            else:
                break
    return count


def leq_order(I, J) -> bool:
    """I <= J in the elementwise order on equal-size index sets."""
    I, J = _as_set(I), _as_set(J)
    if len(I) != len(J):
        raise ValueError(f"partial order needs equal sizes, got {I} and {J}")
    return all(a <= b for a, b in zip(I, J))


def omega0(S, n: int) -> IndexSet:
    return IndexSet(n + 1 - s for s in S)


def xi_q(I, J) -> LaurentPoly:
    """Product of (-q)-integers [d_l] with d_l = |[1, r_l] & J| - l + 1.

    Requires J <= I.  The empty pair gives 1.
    """
    I, J = _as_set(I), _as_set(J)
    if not leq_order(J, I):
        raise ValueError(f"xi_q needs J <= I, got I={I}, J={J}")
    result = ONE
    for l, r in enumerate(I, start=1):
        d = sum(1 for j in J if j <= r) - l + 1
        if d > 1:
            result = result * neg_q_integer(d)
    return result


def _check_between(S, X, Y) -> None:
    if not (set(X) & set(Y)) <= set(S) <= (set(X) | set(Y)):
        raise ValueError(f"need X&Y <= S <= X|Y, got S={S}, X={X}, Y={Y}")


def natural_complement(S, X, Y) -> IndexSet:
    """(X & Y) together with (X | Y) - S."""
    S, X, Y = _as_set(S), _as_set(X), _as_set(Y)
    _check_between(S, X, Y)
    return (X & Y) | ((X | Y) - S)


def _candidates(X, Y) -> List[IndexSet]:
    X, Y = _as_set(X), _as_set(Y)
    core = X & Y
    free = X ^ Y
    k = len(X) - len(core)
    return [IndexSet(core + c) for c in combinations(free, k)]


def enum_leq(X, Y) -> List[IndexSet]:
    """All S with X&Y <= S <= X|Y, |S| = |X| and S <= X, in lex order."""
    X = _as_set(X)
    return sorted(S for S in _candidates(X, Y) if leq_order(S, X))


def enum_geq(X, Y) -> List[IndexSet]:
    X = _as_set(X)
    return sorted(S for S in _candidates(X, Y) if leq_order(X, S))


def enum_less(X, Y) -> List[IndexSet]:
    """Like :func:`enum_leq` but without X itself."""
    X = _as_set(X)
    return [S for S in enum_leq(X, Y) if S != X]


def enum_greater(X, Y) -> List[IndexSet]:
    X = _as_set(X)
    return [S for S in enum_geq(X, Y) if S != X]


def _in_family(S, X, Y, below: bool) -> bool:
    S, X = _as_set(S), _as_set(X)
    if len(S) != len(X):
        return False
    if not (set(X) & set(Y)) <= set(S) <= (set(X) | set(Y)):
        return False
    return leq_order(S, X) if below else leq_order(X, S)


def L_exponent(S, X, Y) -> int:
    S, X, Y = _as_set(S), _as_set(X), _as_set(Y)
    if not _in_family(S, X, Y, below=True):
        raise ValueError(f"L exponent needs S <= X between X&Y and X|Y, got S={S}, X={X}, Y={Y}")
    Snat = natural_complement(S, X, Y)
    base = (S - Snat) | (Y - X)
    return ell(base, X - S) - ell(base, S - X)


def Lnat_exponent(T, X, Y) -> int:
    T, X, Y = _as_set(T), _as_set(X), _as_set(Y)
    if not _in_family(T, X, Y, below=False):
        raise ValueError(f"Lnat exponent needs T >= X between X&Y and X|Y, got T={T}, X={X}, Y={Y}")
    Tnat = natural_complement(T, X, Y)
    base = (Tnat - T) | (X - Y)
    return ell(base, T - X) - ell(base, X - T)


def interval_count(S, a: int, b: int) -> int:
    """|S & (a, b)| for the open interval (a, b)."""
    return sum(1 for s in S if a < s < b)


def weak_separation_split(J, N) -> Optional[Tuple[IndexSet, IndexSet]]:
    """Return (J', J'') splitting J - N around N - J, or None if impossible."""
    J, N = _as_set(J), _as_set(N)
    D, E = J - N, N - J
    if not E:
        return (D, IndexSet())
    lo, hi = E[0], E[-1]
    if any(lo < d < hi for d in D):
        return None
    return IndexSet(d for d in D if d < lo), IndexSet(d for d in D if d > hi)


def weakly_separated(J, N) -> bool:
    return weak_separation_split(J, N) is not None


def subsets(n: int, k: int) -> List[IndexSet]:
    return [IndexSet(c) for c in combinations(range(1, n + 1), k)]


def parse_index_set(text: str, n: Optional[int] = None) -> IndexSet:
    """Parse ``2,3,5`` or (for n <= 9) the compact form ``235``."""
    s = text.strip().strip("{}").strip()
    if not s:
        return IndexSet()
    if "," in s:
        parts = [p.strip() for p in s.split(",")]
    elif " " in s:
        parts = s.split()
    elif len(s) > 1:
        if n is not None and n > 9:
            raise ValueError(f"compact index set {text!r} is ambiguous for n={n}; use commas")
        parts = list(s)
    else:
        parts = [s]
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"bad index set literal {text!r}") from None
    if len(set(values)) != len(values):
        raise ValueError(f"repeated element in index set {text!r}")
    S = IndexSet(values)
    if n is not None and not S.within(n):
        raise ValueError(f"index set {text!r} leaves the range 1..{n}")
    return S
