"""The standard Poisson bracket on the commutative coordinate ring O(M_n).

Polynomials are in commuting variables x_ij with integer coefficients.  The
bracket of two classical minors can be computed four ways: by the Leibniz
rule from the generator table, by two closed formulas coming from the two
quantum commutation relations, by their average (kept integral), and by the
semiclassical limit of a quantum commutator.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Dict, Iterable, Mapping, Optional, Tuple

from .algebra import AlgebraElement
from .indexsets import IndexSet, interval_count
from .laurent import eval_q_one, exact_div_q_minus_one
from .minors import inversions, quantum_minor

__all__ = [
    "CommutativePoly",
    "bracket_generators",
    "bracket",
    "bracket_minors",
    "classical_minor",
    "semiclassical_bracket",
    "specialize",
    "normalize_variant",
    "VARIANTS",
]

Var = Tuple[int, int]
Mono = Tuple[Tuple[Var, int], ...]

VARIANTS = ("T7_3", "T7_4", "C7_5")
_VARIANT_ALIASES = {"7.6": "T7_3", "7.8": "T7_4", "7.9": "C7_5"}


def normalize_variant(variant: str) -> str:
    v = variant.strip()
    if v in _VARIANT_ALIASES:
        return _VARIANT_ALIASES[v]
    tag = v.upper().replace(".", "_")
    if tag not in VARIANTS:
        raise ValueError(f"unknown bracket variant {variant!r}; expected one of {', '.join(VARIANTS)} or 7.6/7.8/7.9")
    return tag


def _mono_mul(a: Mono, b: Mono) -> Mono:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


class CommutativePoly:
    """Integer polynomial in the commuting variables x_ij."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Mono, int]] = None):
        clean: Dict[Mono, int] = {}
        for mono, c in (terms or {}).items():
            if c:
                key = tuple(sorted((tuple(v), e) for v, e in mono if e))
                clean[key] = clean.get(key, 0) + c
        self._terms = {k: c for k, c in clean.items() if c}

    @classmethod
    def _raw(cls, terms: Dict[Mono, int]) -> "CommutativePoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def var(cls, i: int, j: int) -> "CommutativePoly":
        return cls._raw({(((i, j), 1),): 1})

    @classmethod
    def const(cls, c: int) -> "CommutativePoly":
        return cls._raw({(): c} if c else {})

    @classmethod
    def monomial(cls, variables: Iterable[Var], coeff: int = 1) -> "CommutativePoly":
        d: Dict[Var, int] = {}
        for v in variables:
            v = tuple(v)
            d[v] = d.get(v, 0) + 1
        return cls._raw({tuple(sorted(d.items())): coeff} if coeff else {})

    @property
    def terms(self) -> Dict[Mono, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def _coerce(self, other):
        if isinstance(other, CommutativePoly):
            return other
        if isinstance(other, int):
            return CommutativePoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return CommutativePoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return CommutativePoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return CommutativePoly()
            return CommutativePoly._raw({m: c * other for m, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Mono, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return CommutativePoly._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def derivative(self, v: Var) -> "CommutativePoly":
        v = tuple(v)
        out: Dict[Mono, int] = {}
        for mono, c in self._terms.items():
            d = dict(mono)
            e = d.get(v, 0)
            if not e:
                continue
            if e == 1:
                del d[v]
            else:
                d[v] = e - 1
            key = tuple(sorted(d.items()))
            out[key] = out.get(key, 0) + c * e
        return CommutativePoly._raw({m: c for m, c in out.items() if c})

    def variables(self) -> set:
        return {v for mono in self._terms for v, _ in mono}

    def __eq__(self, other):
        if isinstance(other, CommutativePoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self == CommutativePoly.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def render(self) -> str:
        """Terms in graded-lexicographic order, e.g. ``2*x[1,2]*x[2,1] - x[1,1]^2``."""
        if not self._terms:
            return "0"

        def order(item):
            mono = item[0]
            return (-sum(e for _, e in mono), mono)

        out = []
        for mono, c in sorted(self._terms.items(), key=order):
            factors = [f"x[{i},{j}]" + (f"^{e}" if e > 1 else "") for (i, j), e in mono]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"CommutativePoly({self.render()!r})"


@lru_cache(maxsize=None)
def _gen_table(g: Var, h: Var) -> Tuple[Tuple[Mono, int], ...]:
    (i, j), (l, m) = g, h
    if g == h:
        return ()
    if (i, j) > (l, m):
        return tuple((mono, -c) for mono, c in _gen_table(h, g))
    if i == l:
        # same row, j < m
        return ((tuple(sorted({(i, j): 1, (i, m): 1}.items())), 1),)
    if j == m:
        return ((tuple(sorted({(i, j): 1, (l, j): 1}.items())), 1),)
    if j > m:
        return ()
    return ((tuple(sorted({(i, m): 1, (l, j): 1}.items())), 2),)


def bracket_generators(g: Var, h: Var) -> CommutativePoly:
    """{x_g, x_h} from the standard table, extended by antisymmetry."""
    return CommutativePoly._raw(dict(_gen_table(tuple(g), tuple(h))))


def bracket(f: CommutativePoly, g: CommutativePoly) -> CommutativePoly:
    """Bilinear Leibniz extension: sum of df/dx_u * dg/dx_v * {x_u, x_v}."""
    total = CommutativePoly()
    fv, gv = sorted(f.variables()), sorted(g.variables())
    gderiv = {v: g.derivative(v) for v in gv}
    for u in fv:
        du = f.derivative(u)
        for v in gv:
            table = bracket_generators(u, v)
            if table:
                total = total + du * gderiv[v] * table
    return total


@lru_cache(maxsize=None)
def _classical_minor(rows: IndexSet, cols: IndexSet) -> CommutativePoly:
    out: Dict[Mono, int] = {}
    for perm in permutations(range(len(cols))):
        mono = tuple(sorted(((rows[p], cols[perm[p]]), 1) for p in range(len(rows))))
        out[mono] = out.get(mono, 0) + (-1) ** inversions(perm)
    return CommutativePoly._raw({m: c for m, c in out.items() if c})


def classical_minor(rows, cols) -> CommutativePoly:
    rows, cols = IndexSet(rows), IndexSet(cols)
    if len(rows) != len(cols) or not rows:
        raise ValueError(f"need nonempty |rows| == |cols|, got [{rows}|{cols}]")
    return _classical_minor(rows, cols)


def _swap(S: IndexSet, out: int, into: int) -> IndexSet:
    return IndexSet((set(S) - {out}) | {into})


def _row_sum(I, J, M, N, want) -> CommutativePoly:
    # sum over i in I-M, m in M-I with want(i, m), signed by (I^M) strictly between i and m
    total = CommutativePoly()
    D = I ^ M
    for i in I - M:
        for m in M - I:
            if want(i, m):
                sign = (-1) ** interval_count(D, min(i, m), max(i, m))
                total = total + classical_minor(_swap(I, i, m), J) * classical_minor(_swap(M, m, i), N) * sign
    return total


def _col_sum(I, J, M, N, want) -> CommutativePoly:
    total = CommutativePoly()
    D = J ^ N
    for j in J - N:
        for m in N - J:
            if want(j, m):
                sign = (-1) ** interval_count(D, min(j, m), max(j, m))
                total = total + classical_minor(I, _swap(J, j, m)) * classical_minor(M, _swap(N, m, j)) * sign
    return total


def bracket_minors(variant: str, I, J, M, N) -> CommutativePoly:
    """Closed formula for {[I|J], [M|N]}.

    ``T7_3`` and ``T7_4`` carry a scalar multiple of the product plus doubled
    single-swap sums; ``C7_5`` is their average written with coefficients
    +-1 so no division is performed.
    """
    variant = normalize_variant(variant)
    I, J, M, N = map(IndexSet, (I, J, M, N))
    if len(I) != len(J) or len(M) != len(N):
        raise ValueError(f"need |I| == |J| and |M| == |N|, got [{I}|{J}], [{M}|{N}]")
    product = classical_minor(I, J) * classical_minor(M, N)
    lt = lambda a, b: a < b
    gt = lambda a, b: a > b
    if variant == "T7_3":
        return (
            product * (len(J & N) - len(I & M))
            + _col_sum(I, J, M, N, lt) * 2
            - _row_sum(I, J, M, N, gt) * 2
        )
    if variant == "T7_4":
        return (
            product * (len(I & M) - len(J & N))
            + _row_sum(I, J, M, N, lt) * 2
            - _col_sum(I, J, M, N, gt) * 2
        )
    return (
        _row_sum(I, J, M, N, lt)
        - _row_sum(I, J, M, N, gt)
        + _col_sum(I, J, M, N, lt)
        - _col_sum(I, J, M, N, gt)
    )


def specialize(a: AlgebraElement) -> CommutativePoly:
    """Image at q = 1 with X_ij -> x_ij."""
    out: Dict[Mono, int] = {}
    for word, coeff in a.items():
        c = eval_q_one(coeff)
        if not c:
            continue
        d: Dict[Var, int] = {}
        for g in word:
            d[g] = d.get(g, 0) + 1
        key = tuple(sorted(d.items()))
        out[key] = out.get(key, 0) + c
    return CommutativePoly._raw({m: c for m, c in out.items() if c})


def semiclassical_bracket(I, J, M, N, n: int) -> CommutativePoly:
    """(ab - ba)/(q - 1) at q = 1 for the quantum minors a = [I|J], b = [M|N].

    Raises NotDivisibleError if some commutator coefficient is not divisible
    by q - 1, which would mean the normal form is wrong.
    """
    a = quantum_minor(I, J, n)
    b = quantum_minor(M, N, n)
    comm = a * b - b * a
    return specialize(comm.map_coefficients(exact_div_q_minus_one))
