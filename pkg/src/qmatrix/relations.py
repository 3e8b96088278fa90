"""Commutation relations between quantum minors as checkable formal identities.

A relation is a pair of sums of ordered minor products.  Generated identities
carry their coefficients both factored (for display) and expanded (for
comparison); :func:`verify_relation` expands every product to normal form.

Kind tags:

* pair kinds ``T5_2 C5_4 T5_6 C5_7`` (one extra sum on each side) and
  ``T6_3 C6_4`` (reverse-ordered products, all extra terms on the right);
* generator-minor kinds ``E3_2 E3_3 E3_10 E3_12`` for X_ij against [I|J].
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .algebra import AlgebraElement
from .indexsets import (
    IndexSet,
    L_exponent,
    Lnat_exponent,
    enum_geq,
    enum_greater,
    enum_leq,
    enum_less,
    interval_count,
    natural_complement,
    subsets,
    weak_separation_split,
)
from .laurent import LaurentPoly, neg_q_integer, pow_neg_q, qhat, render as render_laurent
from .minors import Minor, quantum_minor

__all__ = [
    "PAIR_KINDS",
    "GENERATOR_KINDS",
    "ALL_KINDS",
    "Coefficient",
    "MinorProductTerm",
    "RelationIdentity",
    "ResourceLimitError",
    "gen_pair_relation",
    "gen_generator_minor_relation",
    "verify_relation",
    "quasicommutation_exponent",
    "quasicommutation_condition",
    "sweep_verify",
    "SweepReport",
    "normalize_kind",
    "term_ceiling",
]

PAIR_KINDS = ("T5_2", "C5_4", "T5_6", "C5_7", "T6_3", "C6_4")
GENERATOR_KINDS = ("E3_2", "E3_3", "E3_10", "E3_12")
ALL_KINDS = PAIR_KINDS + GENERATOR_KINDS

DEFAULT_TERM_CEILING = 5_000_000
SAMPLE_PER_KIND = 200
EXHAUSTIVE_MAX_N = 4
SAMPLED_MAX_N = 6


class ResourceLimitError(RuntimeError):
    """An expansion grew past the configured term ceiling."""


def term_ceiling() -> int:
    raw = os.environ.get("QMATRIX_TERM_CEILING")
    if raw is None:
        return DEFAULT_TERM_CEILING
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"QMATRIX_TERM_CEILING must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError("QMATRIX_TERM_CEILING must be positive")
    return value


def normalize_kind(kind: str) -> str:
    """Accept ``T5.2``, ``t5_2`` or ``T5_2``; return the canonical tag."""
    tag = kind.strip().upper().replace(".", "_")
    if tag not in ALL_KINDS:
        raise ValueError(f"unknown relation kind {kind!r}; expected one of {', '.join(ALL_KINDS)}")
    return tag


# -- coefficients ------------------------------------------------------------


class Coefficient:
    """sign * q^a * qhat^b * (-qhat)^c * (-q)^d * [e1][e2]... with (-q)-integers [e]."""

    __slots__ = ("sign", "q", "qhat", "neg_qhat", "neg_q", "ints", "_value")

    def __init__(self, sign=1, q=0, qhat=0, neg_qhat=0, neg_q=0, ints=()):
        self.sign = sign
        self.q = q
        self.qhat = qhat
        self.neg_qhat = neg_qhat
        self.neg_q = neg_q
        self.ints = tuple(d for d in ints if d > 1)
        self._value = None

    @property
    def value(self) -> LaurentPoly:
        if self._value is None:
            v = LaurentPoly.monomial(self.q, self.sign)
            if self.qhat:
                v = v * qhat() ** self.qhat
            if self.neg_qhat:
                v = v * (-qhat()) ** self.neg_qhat
            if self.neg_q:
                v = v * pow_neg_q(self.neg_q)
            for d in self.ints:
                v = v * neg_q_integer(d)
            self._value = v
        return self._value

    def times(self, other: "Coefficient") -> "Coefficient":
        return Coefficient(
            self.sign * other.sign,
            self.q + other.q,
            self.qhat + other.qhat,
            self.neg_qhat + other.neg_qhat,
            self.neg_q + other.neg_q,
            self.ints + other.ints,
        )

    def render(self) -> str:
        """Factor string without the sign, e.g. ``qhat^2 (-q)^-1 (-q - q^-1)``."""
        parts = []
        if self.q:
            parts.append("q" if self.q == 1 else f"q^{self.q}")
        if self.qhat:
            parts.append("qhat" if self.qhat == 1 else f"qhat^{self.qhat}")
        if self.neg_qhat:
            parts.append("(-qhat)" if self.neg_qhat == 1 else f"(-qhat)^{self.neg_qhat}")
        if self.neg_q:
            parts.append("(-q)" if self.neg_q == 1 else f"(-q)^{self.neg_q}")
        parts.extend(f"({render_laurent(neg_q_integer(d))})" for d in self.ints)
        return " ".join(parts)

    def __repr__(self):
        return f"Coefficient({'-' if self.sign < 0 else ''}{self.render() or '1'})"


def _xi_ints(A: IndexSet, B: IndexSet) -> Tuple[int, ...]:
    # the (-q)-integer arguments d_l of xi_q(A; B)
    return tuple(sum(1 for j in B if j <= r) - l + 1 for l, r in enumerate(A, start=1))


# -- terms and identities ----------------------------------------------------


class MinorProductTerm:
    """coeff * (ordered product of minors)."""

    __slots__ = ("coeff", "factors", "factored")

    def __init__(self, coeff, factors: Sequence[Minor], factored: Optional[Coefficient] = None):
        if isinstance(coeff, Coefficient):
            factored = coeff
            coeff = coeff.value
        elif isinstance(coeff, int):
            coeff = LaurentPoly(coeff)
        if not coeff:
            raise ValueError("a product term needs a nonzero coefficient")
        self.coeff = coeff
        self.factors = tuple(factors)
        self.factored = factored

    def key(self) -> Tuple[Tuple[IndexSet, IndexSet], ...]:
        return tuple(f.key() for f in self.factors)

    def render(self, n: int) -> Tuple[bool, str]:
        """(negative, text) with the sign split off for joining."""
        body = "".join(f.render(n) for f in self.factors)
        if self.factored is not None:
            text = self.factored.render()
            return self.factored.sign < 0, f"{text} {body}" if text else body
        mono = self.coeff.as_monomial()
        if mono is not None:
            c, e = mono
            mag = render_laurent(LaurentPoly.monomial(e, abs(c)))
            return c < 0, body if mag == "1" else f"{mag} {body}"
        return False, f"({render_laurent(self.coeff)}) {body}"

    def to_json(self) -> dict:
        return {
            "coeff": {str(e): c for e, c in self.coeff.items()},
            "factors": [{"rows": list(f.rows), "cols": list(f.cols)} for f in self.factors],
        }

    @classmethod
    def from_json(cls, data: dict) -> "MinorProductTerm":
        coeff = LaurentPoly({int(e): int(c) for e, c in data["coeff"].items()})
        return cls(coeff, [Minor(f["rows"], f["cols"]) for f in data["factors"]])

    def __eq__(self, other):
        if not isinstance(other, MinorProductTerm):
            return NotImplemented
        return self.coeff == other.coeff and self.factors == other.factors

    def __repr__(self):
        return f"MinorProductTerm({self.coeff!s}, {list(self.factors)})"


class RelationIdentity:
    """lhs == rhs, each a list of :class:`MinorProductTerm`."""

    def __init__(self, kind: str, n: int, inputs: dict, lhs: List[MinorProductTerm], rhs: List[MinorProductTerm]):
        self.kind = kind
        self.n = n
        self.inputs = inputs
        self.lhs = list(lhs)
        self.rhs = list(rhs)

    def term_map(self) -> Dict[Tuple, LaurentPoly]:
        """lhs - rhs as a map from factor tuples to coefficients (before expansion)."""
        out: Dict[Tuple, LaurentPoly] = {}
        for sign, side in ((1, self.lhs), (-1, self.rhs)):
            for t in side:
                k = t.key()
                v = out.get(k, LaurentPoly()) + t.coeff * sign
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
        return out

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "inputs": {k: (list(v) if isinstance(v, tuple) else v) for k, v in self.inputs.items()},
            "lhs": [t.to_json() for t in self.lhs],
            "rhs": [t.to_json() for t in self.rhs],
        }

    @classmethod
    def from_json(cls, data: dict) -> "RelationIdentity":
        inputs = {k: (IndexSet(v) if isinstance(v, list) else v) for k, v in data["inputs"].items()}
        return cls(
            data["kind"],
            int(data["n"]),
            inputs,
            [MinorProductTerm.from_json(t) for t in data["lhs"]],
            [MinorProductTerm.from_json(t) for t in data["rhs"]],
        )

    @staticmethod
    def _render_side(terms: List[MinorProductTerm], n: int) -> str:
        if not terms:
            return "0"
        out = []
        for t in terms:
            negative, text = t.render(n)
            if not out:
                out.append(("-" if negative else "") + text)
            else:
                out.append((" - " if negative else " + ") + text)
        return "".join(out)

    def render_text(self) -> str:
        return f"{self._render_side(self.lhs, self.n)} = {self._render_side(self.rhs, self.n)}"

    def __str__(self):
        return self.render_text()

    def __repr__(self):
        return f"RelationIdentity({self.kind}, n={self.n}, {len(self.lhs)}+{len(self.rhs)} terms)"


# -- generation --------------------------------------------------------------


def _check_pair(I, J, M, N, n):
    I, J, M, N = map(IndexSet, (I, J, M, N))
    if len(I) != len(J) or len(M) != len(N):
        raise ValueError(f"need |I| == |J| and |M| == |N|, got [{I}|{J}], [{M}|{N}]")
    if not I or not M:
        raise ValueError("minors must be nonempty")
    for S in (I, J, M, N):
        if not S.within(n):
            raise ValueError(f"index set {S} leaves the range 1..{n}")
    return I, J, M, N


def _lam(S, X, Y) -> Coefficient:
    # qhat^|X-S| (-q)^L(S,X,Y) xi(X-S; S-X)
    return Coefficient(qhat=len(X - S), neg_q=L_exponent(S, X, Y), ints=_xi_ints(X - S, S - X))


def _mu(T, X, Y) -> Coefficient:
    return Coefficient(qhat=len(T - X), neg_q=Lnat_exponent(T, X, Y), ints=_xi_ints(T - X, X - T))


def _lam_tilde(S, X, Y) -> Coefficient:
    return Coefficient(neg_qhat=len(X - S), neg_q=-L_exponent(S, X, Y), ints=_xi_ints(X - S, S - X))


def _mu_tilde(T, X, Y) -> Coefficient:
    return Coefficient(neg_qhat=len(T - X), neg_q=-Lnat_exponent(T, X, Y), ints=_xi_ints(T - X, X - T))


def _scaled(k: int, c: Coefficient) -> Coefficient:
    return Coefficient(q=k).times(c)


def gen_pair_relation(kind: str, I, J, M, N, n: int) -> RelationIdentity:
    """The commutation relation of the given kind between [I|J] and [M|N]."""
    kind = normalize_kind(kind)
    if kind not in PAIR_KINDS:
        raise ValueError(f"{kind} is not a minor-pair kind")
    I, J, M, N = _check_pair(I, J, M, N, n)
    a, b = len(I & M), len(J & N)
    IJ, MN = Minor(I, J), Minor(M, N)
    lhs: List[MinorProductTerm] = []
    rhs: List[MinorProductTerm] = []

    def nat(S, X, Y):
        return natural_complement(S, X, Y)

    if kind == "T5_2":
        lhs.append(MinorProductTerm(Coefficient(q=a), [IJ, MN]))
        for S in enum_less(I, M):
            lhs.append(MinorProductTerm(_scaled(a, _lam(S, I, M)), [Minor(S, J), Minor(nat(S, I, M), N)]))
        rhs.append(MinorProductTerm(Coefficient(q=b), [MN, IJ]))
        for T in enum_greater(J, N):
            rhs.append(MinorProductTerm(_scaled(b, _mu(T, J, N)), [Minor(M, nat(T, J, N)), Minor(I, T)]))
    elif kind == "C5_4":
        lhs.append(MinorProductTerm(Coefficient(q=b), [IJ, MN]))
        for S in enum_less(J, N):
            lhs.append(MinorProductTerm(_scaled(b, _lam(S, J, N)), [Minor(I, S), Minor(M, nat(S, J, N))]))
        rhs.append(MinorProductTerm(Coefficient(q=a), [MN, IJ]))
        for T in enum_greater(I, M):
            rhs.append(MinorProductTerm(_scaled(a, _mu(T, I, M)), [Minor(nat(T, I, M), N), Minor(T, J)]))
    elif kind == "T5_6":
        lhs.append(MinorProductTerm(Coefficient(q=b), [IJ, MN]))
        for S in enum_greater(I, M):
            lhs.append(MinorProductTerm(_scaled(b, _mu_tilde(S, I, M)), [Minor(S, J), Minor(nat(S, I, M), N)]))
        rhs.append(MinorProductTerm(Coefficient(q=a), [MN, IJ]))
        for T in enum_less(J, N):
            rhs.append(MinorProductTerm(_scaled(a, _lam_tilde(T, J, N)), [Minor(M, nat(T, J, N)), Minor(I, T)]))
    elif kind == "C5_7":
        lhs.append(MinorProductTerm(Coefficient(q=a), [IJ, MN]))
        for S in enum_greater(J, N):
            lhs.append(MinorProductTerm(_scaled(a, _mu_tilde(S, J, N)), [Minor(I, S), Minor(M, nat(S, J, N))]))
        rhs.append(MinorProductTerm(Coefficient(q=b), [MN, IJ]))
        for T in enum_less(I, M):
            rhs.append(MinorProductTerm(_scaled(b, _lam_tilde(T, I, M)), [Minor(nat(T, I, M), N), Minor(T, J)]))
    elif kind == "T6_3":
        lhs.append(MinorProductTerm(Coefficient(q=a), [IJ, MN]))
        rhs.append(MinorProductTerm(Coefficient(q=b), [MN, IJ]))
        for S in enum_leq(I, M):
            for T in enum_geq(J, N):
                if (S, T) == (I, J):
                    continue
                c = _scaled(b, _lam_tilde(S, I, M).times(_mu(T, J, N)))
                rhs.append(MinorProductTerm(c, [Minor(nat(S, I, M), nat(T, J, N)), Minor(S, T)]))
    else:  # C6_4
        lhs.append(MinorProductTerm(Coefficient(q=b), [IJ, MN]))
        rhs.append(MinorProductTerm(Coefficient(q=a), [MN, IJ]))
        for S in enum_geq(I, M):
            for T in enum_leq(J, N):
                if (S, T) == (I, J):
                    continue
                c = _scaled(a, _mu(S, I, M).times(_lam_tilde(T, J, N)))
                rhs.append(MinorProductTerm(c, [Minor(nat(S, I, M), nat(T, J, N)), Minor(S, T)]))
    return RelationIdentity(kind, n, {"I": I, "J": J, "M": M, "N": N}, lhs, rhs)


def _swap(S: IndexSet, out: int, into: int) -> IndexSet:
    # S with `out` removed and `into` added
    return IndexSet((set(S) - {out}) | {into})


def gen_generator_minor_relation(kind: str, i: int, j: int, I, J, n: int) -> RelationIdentity:
    """The relation of the given kind between X_ij and [I|J]."""
    kind = normalize_kind(kind)
    if kind not in GENERATOR_KINDS:
        raise ValueError(f"{kind} is not a generator-minor kind")
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"generator X[{i},{j}] outside 1..{n}")
    I, J, _, _ = _check_pair(I, J, [i], [j], n)
    X = Minor([i], [j])
    IJ = Minor(I, J)
    di, dj = int(i in I), int(j in J)
    lhs: List[MinorProductTerm] = []
    rhs: List[MinorProductTerm] = []

    def add(side, coeff: Coefficient, gate: int, factors):
        # factors is a thunk: the swapped index sets only exist when the gate is open
        # gate is the 0 or +-1 delta factor; gated-out terms vanish
        if gate == 0:
            return
        side.append(MinorProductTerm(Coefficient(sign=gate).times(coeff), factors()))

    if kind == "E3_2":
        lhs.append(MinorProductTerm(Coefficient(q=di), [X, IJ]))
        for l in I:
            if l < i:
                add(lhs, Coefficient(qhat=1, neg_q=-interval_count(I, l, i)), 1 - di,
                    lambda: [Minor([l], [j]), Minor(_swap(I, l, i), J)])
        rhs.append(MinorProductTerm(Coefficient(q=dj), [IJ, X]))
        for l in J:
            if l > j:
                add(rhs, Coefficient(qhat=1, neg_q=-interval_count(J, j, l)), 1 - dj,
                    lambda: [Minor(I, _swap(J, l, j)), Minor([i], [l])])
    elif kind == "E3_3":
        lhs.append(MinorProductTerm(Coefficient(q=dj), [X, IJ]))
        for l in J:
            if l < j:
                add(lhs, Coefficient(qhat=1, neg_q=-interval_count(J, l, j)), 1 - dj,
                    lambda: [Minor([i], [l]), Minor(I, _swap(J, l, j))])
        rhs.append(MinorProductTerm(Coefficient(q=di), [IJ, X]))
        for l in I:
            if l > i:
                add(rhs, Coefficient(qhat=1, neg_q=-interval_count(I, i, l)), 1 - di,
                    lambda: [Minor(_swap(I, l, i), J), Minor([l], [j])])
    elif kind == "E3_10":
        lhs.append(MinorProductTerm(Coefficient(q=-di), [X, IJ]))
        for l in I:
            if l > i:
                add(lhs, Coefficient(qhat=1, neg_q=interval_count(I, i, l)), di - 1,
                    lambda: [Minor([l], [j]), Minor(_swap(I, l, i), J)])
        rhs.append(MinorProductTerm(Coefficient(q=-dj), [IJ, X]))
        for l in J:
            if l < j:
                add(rhs, Coefficient(qhat=1, neg_q=interval_count(J, l, j)), dj - 1,
                    lambda: [Minor(I, _swap(J, l, j)), Minor([i], [l])])
    else:  # E3_12
        lhs.append(MinorProductTerm(Coefficient(q=-dj), [X, IJ]))
        for l in J:
            if l > j:
                add(lhs, Coefficient(qhat=1, neg_q=interval_count(J, j, l)), dj - 1,
                    lambda: [Minor([i], [l]), Minor(I, _swap(J, l, j))])
        rhs.append(MinorProductTerm(Coefficient(q=-di), [IJ, X]))
        for l in I:
            if l < i:
                add(rhs, Coefficient(qhat=1, neg_q=interval_count(I, l, i)), di - 1,
                    lambda: [Minor(_swap(I, l, i), J), Minor([l], [j])])
    return RelationIdentity(kind, n, {"i": i, "j": j, "I": I, "J": J}, lhs, rhs)


# -- verification ------------------------------------------------------------


def _expand_product(factors: Sequence[Minor], n: int) -> AlgebraElement:
    result = AlgebraElement.one(n)
    for f in factors:
        result = result * quantum_minor(f.rows, f.cols, n)
    return result


def expand_side(terms: Iterable[MinorProductTerm], n: int, ceiling: Optional[int] = None) -> AlgebraElement:
    ceiling = term_ceiling() if ceiling is None else ceiling
    total = AlgebraElement.zero(n)
    for t in terms:
        bound = 1
        for f in t.factors:
            bound *= len(quantum_minor(f.rows, f.cols, n))
        if bound > ceiling:
            raise ResourceLimitError(f"product {t.factors} may reach {bound} terms, ceiling is {ceiling}")
        total = total + _expand_product(t.factors, n).scale(t.coeff)
        if len(total) > ceiling:
            raise ResourceLimitError(f"expansion reached {len(total)} terms, ceiling is {ceiling}")
    return total


def relation_residual(rel: RelationIdentity, ceiling: Optional[int] = None) -> AlgebraElement:
    """Normal form of lhs - rhs."""
    return expand_side(rel.lhs, rel.n, ceiling) - expand_side(rel.rhs, rel.n, ceiling)


def verify_relation(rel: RelationIdentity, ceiling: Optional[int] = None) -> bool:
    return relation_residual(rel, ceiling).is_zero()


# -- quasicommutation --------------------------------------------------------

_INF = float("inf")


def _max(S) -> float:
    return max(S) if S else -_INF


def _min(S) -> float:
    return min(S) if S else _INF


def quasicommutation_condition(I, J, M, N) -> Optional[Tuple[int, str]]:
    """(m, condition name) with [I|J][M|N] = q^m [M|N][I|J], or None when no listed condition applies."""
    I, J, M, N = map(IndexSet, (I, J, M, N))
    if len(I) != len(J) or len(M) != len(N):
        raise ValueError(f"need |I| == |J| and |M| == |N|, got [{I}|{J}], [{M}|{N}]")
    a, b = len(I & M), len(J & N)
    if _max(M - I) < _min(I - M) and _max(J - N) < _min(N - J):
        return a - b, "ordered differences, rows of M below"
    if _max(I - M) < _min(M - I) and _max(N - J) < _min(J - N):
        return b - a, "ordered differences, rows of I below"
    if set(I) <= set(M):
        split = weak_separation_split(J, N)
        if split is not None:
            return len(split[0]) - len(split[1]), "row containment, weakly separated columns"
    if set(M) <= set(I):
        split = weak_separation_split(N, J)
        if split is not None:
            return len(split[1]) - len(split[0]), "row containment, weakly separated columns"
    if set(J) <= set(N):
        split = weak_separation_split(I, M)
        if split is not None:
            return len(split[0]) - len(split[1]), "column containment, weakly separated rows"
    if set(N) <= set(J):
        split = weak_separation_split(M, I)
        if split is not None:
            return len(split[1]) - len(split[0]), "column containment, weakly separated rows"
    return None


def quasicommutation_exponent(I, J, M, N) -> Optional[int]:
    """The exponent m with [I|J][M|N] = q^m [M|N][I|J] when a sufficient condition holds, else None.

    None means "no conclusion", not that the minors fail to quasicommute.
    """
    found = quasicommutation_condition(I, J, M, N)
    return None if found is None else found[0]


# -- sweeps ------------------------------------------------------------------


class SweepReport:
    def __init__(self, n: int, max_size: int, mode: str, seed: Optional[int]):
        self.n = n
        self.max_size = max_size
        self.mode = mode
        self.seed = seed
        self.passed: Dict[str, int] = {}
        self.failed: Dict[str, int] = {}
        self.first_failure: Optional[dict] = None

    @property
    def total_failed(self) -> int:
        return sum(self.failed.values())

    @property
    def total_passed(self) -> int:
        return sum(self.passed.values())

    @property
    def ok(self) -> bool:
        return self.total_failed == 0

    def record(self, kind: str, npass: int, failures: List[dict]) -> None:
        self.passed[kind] = self.passed.get(kind, 0) + npass
        self.failed[kind] = self.failed.get(kind, 0) + len(failures)
        if failures and self.first_failure is None:
            self.first_failure = failures[0]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "max_size": self.max_size,
            "mode": self.mode,
            "seed": self.seed,
            "passed": self.passed,
            "failed": self.failed,
            "ok": self.ok,
            "first_failure": self.first_failure,
        }

    def render_text(self) -> str:
        lines = []
        for kind in self.passed:
            lines.append(f"{kind}: {self.passed[kind]} passed, {self.failed.get(kind, 0)} failed")
        head = "PASS" if self.ok else "FAIL"
        lines.append(
            f"{head}: n={self.n} max-size={self.max_size} {self.mode}: "
            f"{self.total_passed} passed, {self.total_failed} failed"
        )
        if self.first_failure is not None:
            lines.append(f"first counterexample: {self.first_failure}")
        return "\n".join(lines)


def _minor_shapes(n: int, max_size: int) -> List[Tuple[IndexSet, IndexSet]]:
    out = []
    for k in range(1, min(max_size, n) + 1):
        rows = subsets(n, k)
        out.extend((R, C) for R in rows for C in rows)
    return out


def _inputs_for(kind: str, n: int, max_size: int) -> List[tuple]:
    shapes = _minor_shapes(n, max_size)
    if kind in PAIR_KINDS:
        return [(I, J, M, N) for (I, J) in shapes for (M, N) in shapes]
    return [(i, j, I, J) for i in range(1, n + 1) for j in range(1, n + 1) for (I, J) in shapes]


def _generate(kind: str, args: tuple, n: int) -> RelationIdentity:
    if kind in PAIR_KINDS:
        return gen_pair_relation(kind, *args, n)
    return gen_generator_minor_relation(kind, *args, n)


def _describe(args: tuple) -> dict:
    if isinstance(args[0], int):
        return {"i": args[0], "j": args[1], "I": list(args[2]), "J": list(args[3])}
    return {"I": list(args[0]), "J": list(args[1]), "M": list(args[2]), "N": list(args[3])}


def _run_chunk(kind: str, n: int, chunk: List[tuple], ceiling: Optional[int]) -> Tuple[int, List[dict]]:
    npass, failures = 0, []
    for args in chunk:
        rel = _generate(kind, args, n)
        if verify_relation(rel, ceiling):
            npass += 1
        else:
            failures.append({"kind": kind, "inputs": _describe(args)})
    return npass, failures


def sweep_verify(
    n: int,
    max_size: int,
    kinds: Iterable[str] = ALL_KINDS,
    seed: Optional[int] = None,
    samples: Optional[int] = None,
    jobs: int = 1,
    ceiling: Optional[int] = None,
) -> SweepReport:
    """Generate and verify every requested relation over the index quadruples.

    For n up to 4 the sweep is exhaustive unless ``samples`` is given.  For
    n = 5, 6 it draws ``samples`` (default 200) inputs per kind from a
    generator seeded with ``seed`` (default 0).  Larger n is refused.
    """
    if n < 1 or max_size < 1:
        raise ValueError("need n >= 1 and max_size >= 1")
    if n > SAMPLED_MAX_N:
        raise ResourceLimitError(f"sweeps are limited to n <= {SAMPLED_MAX_N}")
    kinds = [normalize_kind(k) for k in kinds]
    if samples is None and n > EXHAUSTIVE_MAX_N:
        samples = SAMPLE_PER_KIND
    if samples is not None and seed is None:
        seed = 0
    mode = "exhaustive" if samples is None else f"sampled {samples} per kind"
    report = SweepReport(n, max_size, mode, seed)
    rng = random.Random(seed)
    work: List[Tuple[str, List[tuple]]] = []
    for kind in kinds:
        inputs = _inputs_for(kind, n, max_size)
        if samples is not None and samples < len(inputs):
            inputs = rng.sample(inputs, samples)
        work.append((kind, inputs))
    if jobs <= 1:
        for kind, inputs in work:
            npass, failures = _run_chunk(kind, n, inputs, ceiling)
            report.record(kind, npass, failures)
        return report
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = []
        for kind, inputs in work:
            step = max(1, len(inputs) // (4 * jobs))
            for start in range(0, len(inputs), step):
                futures.append((kind, pool.submit(_run_chunk, kind, n, inputs[start:start + step], ceiling)))
        for kind, fut in futures:
            npass, failures = fut.result()
            report.record(kind, npass, failures)
    return report
