"""Exact computation in the quantum matrix algebra O_q(M_n): normal forms,
quantum minors, the braiding form r, minor commutation relations, and the
semiclassical Poisson bracket."""

from .algebra import AlgebraElement, linearly_independent
from .indexsets import IndexSet
from .laurent import LaurentPoly, NotDivisibleError, Q, qhat
from .minors import Minor, quantum_minor
from .parsing import ParseError, parse_expression, parse_laurent
from .poisson import CommutativePoly, bracket, bracket_minors, semiclassical_bracket
from .relations import RelationIdentity, gen_generator_minor_relation, gen_pair_relation, verify_relation
from .rform import r_minor_closed, r_minor_oracle, r_oracle

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "CommutativePoly",
    "IndexSet",
    "LaurentPoly",
    "Minor",
    "NotDivisibleError",
    "ParseError",
    "Q",
    "RelationIdentity",
    "bracket",
    "bracket_minors",
    "gen_generator_minor_relation",
    "gen_pair_relation",
    "linearly_independent",
    "parse_expression",
    "parse_laurent",
    "qhat",
    "quantum_minor",
    "r_minor_closed",
    "r_minor_oracle",
    "r_oracle",
    "semiclassical_bracket",
    "verify_relation",
]
