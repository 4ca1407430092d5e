"""A tiny term language for multilinear identities over basis tuples.

Every axiom in the engine is an equality of two sums of terms, quantified
over tuples of homogeneous basis vectors.  A term is a rational coefficient,
a product of commutation factors evaluated on sums of slot degrees, and a
multilinear expression built from slot variables, named even maps and named
operations.  Each slot variable occurs exactly once per term, which is what
makes both evaluation strategies (exact per-tuple and vectorized) valid.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union


@dataclass(frozen=True)
class Var:
    slot: int


@dataclass(frozen=True)
class MapApp:
    name: str
    arg: "Expr"


@dataclass(frozen=True)
class OpApp:
    name: str
    args: tuple["Expr", ...]


Expr = Union[Var, MapApp, OpApp]

EpsPair = tuple[tuple[int, ...], tuple[int, ...]]


@dataclass(frozen=True)
class Term:
    coeff: Fraction
    eps: tuple[EpsPair, ...]
    expr: Expr


TermSum = tuple[Term, ...]


@dataclass(frozen=True)
class Axiom:
    """lhs == rhs for every assignment of basis indices to the slots.

    ``slots`` names the space of each quantified variable (a key into the
    evaluation context, e.g. "g" or "V").
    """

    axiom_id: str
    slots: tuple[str, ...]
    lhs: TermSum
    rhs: TermSum


def var(i: int) -> TermSum:
    return (Term(Fraction(1), (), Var(i)),)


def m(name: str, ts: TermSum) -> TermSum:
    return tuple(Term(t.coeff, t.eps, MapApp(name, t.expr)) for t in ts)


def op(name: str, *args: TermSum) -> TermSum:
    """Distribute an operation application over sums of terms."""
    out: list[Term] = []
    stack = [((), Fraction(1), ())]
    for ts in args:
        stack = [
            (exprs + (t.expr,), coeff * t.coeff, eps + t.eps)
            for exprs, coeff, eps in stack
            for t in ts
        ]
    for exprs, coeff, eps in stack:
        out.append(Term(coeff, eps, OpApp(name, exprs)))
    return tuple(out)


def scale(c, ts: TermSum) -> TermSum:
    c = Fraction(c)
    return tuple(Term(c * t.coeff, t.eps, t.expr) for t in ts)


def neg(ts: TermSum) -> TermSum:
    return scale(-1, ts)


def add(*sums: TermSum) -> TermSum:
    out: list[Term] = []
    for ts in sums:
        out.extend(ts)
    return tuple(out)


def eps(a_slots: Iterable[int], b_slots: Iterable[int], ts: TermSum) -> TermSum:
    pair: EpsPair = (tuple(a_slots), tuple(b_slots))
    return tuple(Term(t.coeff, t.eps + (pair,), t.expr) for t in ts)


def slots_of(expr: Expr) -> tuple[int, ...]:
    if isinstance(expr, Var):
        return (expr.slot,)
    if isinstance(expr, MapApp):
        return slots_of(expr.arg)
    out: list[int] = []
    for a in expr.args:
        out.extend(slots_of(a))
    return tuple(out)


def _single(ts: TermSum) -> Term:
    if len(ts) != 1 or ts[0].coeff != 1 or ts[0].eps:
        raise ValueError("commutator arguments must be plain single terms")
    return ts[0]


def commutator3(
    a: TermSum,
    b: TermSum,
    c: TermSum,
    op_name: str = "bracket3_pre",
    ba_inv: str = "ba_inv",
    ab_inv: str = "ab_inv",
) -> TermSum:
    """The ternary twisted commutator of a ternary product:

    [a, b, c]^C = {a, b, c} - eps(b, c) {a, (b∘a^-1)(c), (a∘b^-1)(b)}
                            + eps(a, b+c) {b, (b∘a^-1)(c), (a∘b^-1)(a)}

    where the commutation factors are taken on the degrees of the arguments
    (all maps are even, so an argument's degree is the sum of its slots).
    """
    ta, tb, tc = _single(a), _single(b), _single(c)
    sa, sb, sc = slots_of(ta.expr), slots_of(tb.expr), slots_of(tc.expr)
    first = (Term(Fraction(1), (), OpApp(op_name, (ta.expr, tb.expr, tc.expr))),)
    second = (
        Term(
            Fraction(-1),
            ((sb, sc),),
            OpApp(op_name, (ta.expr, MapApp(ba_inv, tc.expr), MapApp(ab_inv, tb.expr))),
        ),
    )
    third = (
        Term(
            Fraction(1),
            ((sa, sb + sc),),
            OpApp(op_name, (tb.expr, MapApp(ba_inv, tc.expr), MapApp(ab_inv, ta.expr))),
        ),
    )
    return add(first, second, third)


def axiom(axiom_id: str, slots: Iterable[str], lhs: TermSum, rhs: TermSum) -> Axiom:
    return Axiom(axiom_id, tuple(slots), lhs, rhs)
