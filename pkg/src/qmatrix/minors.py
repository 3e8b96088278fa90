"""Quantum minors, q-Laplace checks, the transpose symmetries and the minor coproduct."""

from __future__ import annotations

import threading
from itertools import combinations, permutations
from typing import Dict, List, Sequence, Tuple

from .algebra import AlgebraElement, Word
from .indexsets import IndexSet, ell, omega0
from .laurent import LaurentPoly, pow_neg_q

__all__ = [
    "Minor",
    "quantum_minor",
    "quantum_minor_columnwise",
    "laplace_row_check",
    "laplace_col_check",
    "transpose_map",
    "anti_transpose_map",
    "minor_coproduct",
    "inversions",
]


class Minor:
    """Descriptor [rows|cols] of a quantum minor."""

    __slots__ = ("rows", "cols")

    def __init__(self, rows, cols):
        rows, cols = IndexSet(rows), IndexSet(cols)
        if len(rows) != len(cols):
            raise ValueError(f"minor needs |rows| == |cols|, got [{rows}|{cols}]")
        if not rows:
            raise ValueError("minor must have at least one row")
        self.rows = rows
        self.cols = cols

    def check(self, n: int) -> "Minor":
        if not (self.rows.within(n) and self.cols.within(n)):
            raise ValueError(f"minor {self} leaves the range 1..{n}")
        return self

    @property
    def size(self) -> int:
        return len(self.rows)

    def transpose(self) -> "Minor":
        return Minor(self.cols, self.rows)

    def key(self) -> Tuple[IndexSet, IndexSet]:
        return (self.rows, self.cols)

    def render(self, n: int = 9) -> str:
        return f"[{self.rows.compact(n)}|{self.cols.compact(n)}]"

    def __eq__(self, other):
        if not isinstance(other, Minor):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols

    def __lt__(self, other):
        return self.key() < other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Minor({list(self.rows)}, {list(self.cols)})"

    def __str__(self):
        return self.render()


def inversions(perm: Sequence[int]) -> int:
    return sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b])


_memo: Dict[Tuple[int, IndexSet, IndexSet], AlgebraElement] = {}
_memo_lock = threading.Lock()


def quantum_minor(rows, cols=None, n: int = None) -> AlgebraElement:
    """The quantum minor [rows|cols] in O_q(M_n).

    Computed from the row expansion, whose words have strictly increasing
    rows and so are already in normal form.  Accepts a :class:`Minor` in
    place of ``rows, cols``.
    """
    if isinstance(rows, Minor):
        if n is None:
            n = cols
        d = rows
    else:
        d = Minor(rows, cols)
    if n is None:
        raise TypeError("ambient size n is required")
    d.check(n)
    key = (n, d.rows, d.cols)
    hit = _memo.get(key)
    if hit is not None:
        return hit
    terms: Dict[Word, LaurentPoly] = {}
    for perm in permutations(range(len(d.cols))):
        word = tuple((d.rows[p], d.cols[perm[p]]) for p in range(len(d.rows)))
        terms[word] = pow_neg_q(inversions(perm))
    value = AlgebraElement._raw(n, terms)
    with _memo_lock:
        _memo.setdefault(key, value)
    return _memo[key]


def quantum_minor_columnwise(rows, cols, n: int) -> AlgebraElement:
    """The column expansion of the same minor, straightened; a cross-check only."""
    d = Minor(rows, cols).check(n)
    terms = {}
    for perm in permutations(range(len(d.rows))):
        word = tuple((d.rows[perm[p]], d.cols[p]) for p in range(len(d.cols)))
        terms[word] = pow_neg_q(inversions(perm))
    return AlgebraElement(n, terms)


def _splits(S: IndexSet, k: int) -> List[Tuple[IndexSet, IndexSet]]:
    out = []
    for first in combinations(S, k):
        A = IndexSet(first)
        out.append((A, S - A))
    return out


def laplace_row_check(I, J, I1, I2, n: int) -> bool:
    """Check the row-split q-Laplace identity for subsets I1, I2 of I."""
    I, J, I1, I2 = IndexSet(I), IndexSet(J), IndexSet(I1), IndexSet(I2)
    if len(I) != len(J):
        raise ValueError("need |I| == |J|")
    if not I1 or not I2 or len(I1) + len(I2) != len(I) or not (set(I1) | set(I2)) <= set(I):
        raise ValueError(f"malformed row split {I1}, {I2} of {I}")
    total = AlgebraElement.zero(n)
    for J1, J2 in _splits(J, len(I1)):
        total = total + (quantum_minor(I1, J1, n) * quantum_minor(I2, J2, n)).scale(pow_neg_q(ell(J1, J2)))
    if set(I1) & set(I2):
        return total.is_zero()
    return total == quantum_minor(I, J, n).scale(pow_neg_q(ell(I1, I2)))


def laplace_col_check(I, J, J1, J2, n: int) -> bool:
    """Check the column-split q-Laplace identity for subsets J1, J2 of J."""
    I, J, J1, J2 = IndexSet(I), IndexSet(J), IndexSet(J1), IndexSet(J2)
    if len(I) != len(J):
        raise ValueError("need |I| == |J|")
    if not J1 or not J2 or len(J1) + len(J2) != len(J) or not (set(J1) | set(J2)) <= set(J):
        raise ValueError(f"malformed column split {J1}, {J2} of {J}")
    total = AlgebraElement.zero(n)
    for I1, I2 in _splits(I, len(J1)):
        total = total + (quantum_minor(I1, J1, n) * quantum_minor(I2, J2, n)).scale(pow_neg_q(ell(I1, I2)))
    if set(J1) & set(J2):
        return total.is_zero()
    return total == quantum_minor(I, J, n).scale(pow_neg_q(ell(J1, J2)))


def transpose_map(a: AlgebraElement) -> AlgebraElement:
    """The algebra automorphism X_ij -> X_ji."""
    return a.map_generators(lambda g: (g[1], g[0]))


def anti_transpose_map(a: AlgebraElement) -> AlgebraElement:
    """The anti-automorphism X_ij -> X_{n+1-i, n+1-j}, reversing products."""
    n = a.n
    return a.map_generators(lambda g: (n + 1 - g[0], n + 1 - g[1]), reverse=True)


def minor_coproduct(rows, cols=None, n: int = None) -> List[Tuple[Minor, Minor]]:
    """Formal coproduct of [I|J]: the pairs ([I|K], [K|J]) over |K| = |I|, K lexicographic."""
    if isinstance(rows, Minor):
        if n is None:
            n = cols
        d = rows
    else:
        d = Minor(rows, cols)
    d.check(n)
    return [(Minor(d.rows, K), Minor(K, d.cols)) for K in map(IndexSet, combinations(range(1, n + 1), d.size))]


def omega0_minor(d: Minor, n: int) -> Minor:
    return Minor(omega0(d.rows, n), omega0(d.cols, n))


def clear_minor_cache() -> None:
    with _memo_lock:
        _memo.clear()
