"""Axiom checkers for every algebra class handled by the engine.

Each checker assembles the defining identities as term-language axioms and
evaluates them over all basis tuples, returning a CheckReport with exact
witnesses.  Multiplicativity of the twisting maps is always reported as its
own entry, never assumed, so non-multiplicative structures are first-class.
"""

from __future__ import annotations

from .errors import SingularMapError
from .evaluate import EvalContext, check_axiom
from .linalg import MultiOp, check_grading
from .presentations import AlgebraPresentation, context_for
from .reporting import AxiomResult, CheckReport
from .terms import Axiom, add, axiom, commutator3, eps, m, neg, op, var


def _commute(axiom_id: str, f: str, g: str, slot: str = "g") -> Axiom:
    return axiom(axiom_id, (slot,), m(f, m(g, var(0))), m(g, m(f, var(0))))


def _multiplicative(axiom_id: str, op_name: str, map_name: str, arity: int,
                    slot: str = "g") -> Axiom:
    vs = [var(i) for i in range(arity)]
    lhs = m(map_name, op(op_name, *vs))
    rhs = op(op_name, *[m(map_name, v) for v in vs])
    return axiom(axiom_id, (slot,) * arity, lhs, rhs)


def _run(axioms, ctx: EvalContext, grading_ops=()) -> CheckReport:
    entries = [check_axiom(ax, ctx) for ax in axioms]
    for name, mop in grading_ops:
        entries.append(check_grading(mop, name))
    return CheckReport(tuple(entries))


# ---------------------------------------------------------------------------
# binary structures


def bihom_associativity_axiom() -> Axiom:
    lhs = op("mu", m("alpha", var(0)), op("mu", var(1), var(2)))
    rhs = op("mu", op("mu", var(0), var(1)), m("beta", var(2)))
    return axiom("assoc.bihom-associativity", ("g", "g", "g"), lhs, rhs)


def check_bihom_associative(p: AlgebraPresentation) -> CheckReport:
    """Twisted associativity plus multiplicativity of both twisting maps."""
    ctx = context_for(p)
    axioms = [
        _commute("assoc.maps-commute", "alpha", "beta"),
        _multiplicative("assoc.mult-alpha", "mu", "alpha", 2),
        _multiplicative("assoc.mult-beta", "mu", "beta", 2),
        bihom_associativity_axiom(),
    ]
    return _run(axioms, ctx, grading_ops=[("mu", p.ops["mu"])])


def check_bihom_commutative(p: AlgebraPresentation) -> CheckReport:
    lhs = op("mu", m("beta", var(0)), m("alpha", var(1)))
    rhs = eps((0,), (1,), op("mu", m("beta", var(1)), m("alpha", var(0))))
    ctx = context_for(p)
    return _run([axiom("assoc.bihom-commutativity", ("g", "g"), lhs, rhs)], ctx)


# ---------------------------------------------------------------------------
# ternary Lie structures


def check_3_lie_color(p: AlgebraPresentation) -> CheckReport:
    """Plain skew-symmetry and the untwisted fundamental identity.

    Runs on the bracket alone; meaningful for classical presentations
    (identity twisting maps) but executable on any bracket.
    """
    br = "bracket3"
    skew12 = axiom(
        "lie3.skew-12", ("g",) * 3,
        op(br, var(0), var(1), var(2)),
        neg(eps((0,), (1,), op(br, var(1), var(0), var(2)))),
    )
    skew23 = axiom(
        "lie3.skew-23", ("g",) * 3,
        op(br, var(0), var(1), var(2)),
        neg(eps((1,), (2,), op(br, var(0), var(2), var(1)))),
    )
    fund = axiom(
        "lie3.fundamental", ("g",) * 5,
        op(br, var(0), var(1), op(br, var(2), var(3), var(4))),
        add(
            op(br, op(br, var(0), var(1), var(2)), var(3), var(4)),
            eps((0, 1), (2,), op(br, var(2), op(br, var(0), var(1), var(3)), var(4))),
            eps((0, 1), (2, 3), op(br, var(2), var(3), op(br, var(0), var(1), var(4)))),
        ),
    )
    ctx = context_for(p)
    return _run([skew12, skew23, fund], ctx, grading_ops=[(br, p.ops[br])])


def bihom_jacobi_axiom(br: str = "bracket3") -> Axiom:
    """The twisted ternary Jacobi identity, slots (x, y, z, u, v)."""
    lhs = op(br, m("beta2", var(0)), m("beta2", var(1)),
             op(br, m("beta", var(2)), m("beta", var(3)), m("alpha", var(4))))
    rhs = add(
        eps((0, 1, 2), (3, 4),
            op(br, m("beta2", var(3)), m("beta2", var(4)),
               op(br, m("beta", var(0)), m("beta", var(1)), m("alpha", var(2))))),
        neg(eps((0, 1), (2, 4), eps((3,), (4,),
            op(br, m("beta2", var(2)), m("beta2", var(4)),
               op(br, m("beta", var(0)), m("beta", var(1)), m("alpha", var(3))))))),
        eps((0, 1), (2, 3),
            op(br, m("beta2", var(2)), m("beta2", var(3)),
               op(br, m("beta", var(0)), m("beta", var(1)), m("alpha", var(4))))),
    )
    return axiom("blie3.bihom-jacobi", ("g",) * 5, lhs, rhs)


def check_3_bihom_lie(p: AlgebraPresentation) -> CheckReport:
    """Twisted skew-symmetry, twisted Jacobi, multiplicativity, grading."""
    br = "bracket3"
    ctx = context_for(p, extra_maps={
        "beta2": p.beta.compose(p.beta),
    })
    skew1 = axiom(
        "blie3.bihom-skew-12", ("g",) * 3,
        op(br, m("beta", var(0)), m("beta", var(1)), m("alpha", var(2))),
        neg(eps((0,), (1,), op(br, m("beta", var(1)), m("beta", var(0)), m("alpha", var(2))))),
    )
    skew2 = axiom(
        "blie3.bihom-skew-23", ("g",) * 3,
        op(br, m("beta", var(0)), m("beta", var(1)), m("alpha", var(2))),
        neg(eps((1,), (2,), op(br, m("beta", var(0)), m("beta", var(2)), m("alpha", var(1))))),
    )
    axioms = [
        _commute("blie3.maps-commute", "alpha", "beta"),
        skew1,
        skew2,
        bihom_jacobi_axiom(br),
        _multiplicative("blie3.mult-alpha", br, "alpha", 3),
        _multiplicative("blie3.mult-beta", br, "beta", 3),
    ]
    return _run(axioms, ctx, grading_ops=[(br, p.ops[br])])


# ---------------------------------------------------------------------------
# Poisson structures


def leibniz_axiom() -> Axiom:
    lhs = op("bracket3", m("alphabeta", var(0)), m("alphabeta", var(1)),
             op("mu", var(2), var(3)))
    rhs = add(
        op("mu", op("bracket3", m("beta", var(0)), m("beta", var(1)), var(2)),
           m("beta", var(3))),
        eps((0, 1), (2,),
            op("mu", m("beta", var(2)),
               op("bracket3", m("alpha", var(0)), m("alpha", var(1)), var(3)))),
    )
    return axiom("poisson.leibniz", ("g",) * 4, lhs, rhs)


def check_leibniz(p: AlgebraPresentation) -> CheckReport:
    ctx = context_for(p, extra_maps={"alphabeta": p.alpha.compose(p.beta)})
    return _run([leibniz_axiom()], ctx)


def check_nc_3_bihom_poisson(p: AlgebraPresentation,
                             commutative: bool | None = None) -> CheckReport:
    """Associative part, ternary Lie part and the twisted Leibniz rule.

    ``commutative`` adds the twisted commutativity entry; defaults to the
    presentation's own flag.
    """
    assoc_view = AlgebraPresentation(
        p.space, p.eps, p.alpha, p.beta, {"mu": p.ops["mu"]}, "bihom-associative")
    lie_view = AlgebraPresentation(
        p.space, p.eps, p.alpha, p.beta, {"bracket3": p.ops["bracket3"]}, "3-bihom-lie")
    report = check_bihom_associative(assoc_view).merged(check_3_bihom_lie(lie_view))
    report = report.merged(check_leibniz(p))
    if commutative is None:
        commutative = p.commutative
    if commutative:
        report = report.merged(check_bihom_commutative(assoc_view))
    return report


# ---------------------------------------------------------------------------
# pre-Lie structures


def _pre_lie_context(p: AlgebraPresentation) -> EvalContext:
    alpha_inv = p.alpha.inverse()
    beta_inv = p.beta.inverse()
    return context_for(p, extra_maps={
        "alphabeta": p.alpha.compose(p.beta),
        "ba_inv": p.beta.compose(alpha_inv),
        "ab_inv": p.alpha.compose(beta_inv),
    })


def pre_lie_identity_axioms(pre: str = "bracket3_pre") -> tuple[Axiom, Axiom]:
    """The two quintuple identities; slots (x1, x2, x3, x4, x5)."""
    inner = op(pre, var(0), var(1), var(2))
    third = axiom(
        "prelie.identity-3", ("g",) * 5,
        op(pre, m("alphabeta", var(3)), m("alphabeta", var(4)), inner),
        add(
            op(pre, commutator3(m("beta", var(3)), m("beta", var(4)), var(0), pre),
               m("beta", var(1)), m("beta", var(2))),
            eps((0,), (3, 4),
                op(pre, m("beta", var(0)),
                   commutator3(m("beta", var(3)), m("beta", var(4)), var(1), pre),
                   m("beta", var(2)))),
            eps((0, 1), (3, 4),
                op(pre, m("beta", var(0)), m("beta", var(1)),
                   op(pre, m("alpha", var(3)), m("alpha", var(4)), var(2)))),
        ),
    )
    fourth = axiom(
        "prelie.identity-4", ("g",) * 5,
        op(pre, commutator3(m("beta", var(3)), m("beta", var(4)), var(0), pre),
           m("beta", var(1)), m("beta", var(2))),
        add(
            eps((3,), (0, 4),
                op(pre, m("alphabeta", var(4)), m("beta", var(0)),
                   op(pre, m("alpha", var(3)), var(1), var(2)))),
            eps((0,), (3, 4),
                op(pre, m("beta", var(0)), m("alphabeta", var(3)),
                   op(pre, m("alpha", var(4)), var(1), var(2)))),
            op(pre, m("alphabeta", var(3)), m("alphabeta", var(4)), inner),
        ),
    )
    return third, fourth


def check_3_bihom_pre_lie(p: AlgebraPresentation) -> CheckReport:
    """Multiplicativity, twisted left skew-symmetry and the two quintuple
    identities, with the ternary twisted commutator expanded internally.
    Raises SingularMapError when a twisting map is not invertible."""
    pre = "bracket3_pre"
    ctx = _pre_lie_context(p)
    skew = axiom(
        "prelie.skew-12", ("g",) * 3,
        op(pre, m("beta", var(0)), m("beta", var(1)), m("alpha", var(2))),
        neg(eps((0,), (1,),
                op(pre, m("beta", var(1)), m("beta", var(0)), m("alpha", var(2))))),
    )
    third, fourth = pre_lie_identity_axioms(pre)
    axioms = [
        _commute("prelie.maps-commute", "alpha", "beta"),
        _multiplicative("prelie.mult-alpha", pre, "alpha", 3),
        _multiplicative("prelie.mult-beta", pre, "beta", 3),
        skew,
        third,
        fourth,
    ]
    return _run(axioms, ctx, grading_ops=[(pre, p.ops[pre])])


# ---------------------------------------------------------------------------
# dendriform structures


def dendriform_axioms() -> list[Axiom]:
    both = add(op("prec", var(1), var(2)), op("succ", var(1), var(2)))
    one = axiom(
        "dend.axiom-1", ("g",) * 3,
        op("prec", op("prec", var(0), var(1)), m("beta", var(2))),
        op("prec", m("alpha", var(0)), both),
    )
    two = axiom(
        "dend.axiom-2", ("g",) * 3,
        op("prec", op("succ", var(0), var(1)), m("beta", var(2))),
        op("succ", m("alpha", var(0)), op("prec", var(1), var(2))),
    )
    three = axiom(
        "dend.axiom-3", ("g",) * 3,
        op("succ", m("alpha", var(0)), op("succ", var(1), var(2))),
        add(
            op("succ", op("prec", var(0), var(1)), m("beta", var(2))),
            op("succ", op("succ", var(0), var(1)), m("beta", var(2))),
        ),
    )
    return [one, two, three]


def check_bihom_dendriform(p: AlgebraPresentation) -> CheckReport:
    ctx = context_for(p)
    axioms = [
        _commute("dend.maps-commute", "alpha", "beta"),
        _multiplicative("dend.mult-alpha-prec", "prec", "alpha", 2),
        _multiplicative("dend.mult-beta-prec", "prec", "beta", 2),
        _multiplicative("dend.mult-alpha-succ", "succ", "alpha", 2),
        _multiplicative("dend.mult-beta-succ", "succ", "beta", 2),
        *dendriform_axioms(),
    ]
    return _run(axioms, ctx, grading_ops=[
        ("prec", p.ops["prec"]), ("succ", p.ops["succ"]),
    ])


# ---------------------------------------------------------------------------
# pre-Poisson structures


def pre_poisson_compat_axioms(pre: str = "bracket3_pre") -> list[Axiom]:
    """The three compatibility identities, implemented with the twist powers
    exactly as stated (including the asymmetric ones); slots (x, y, z, t)."""
    compat1 = axiom(
        "prepoisson.compat-1", ("g",) * 4,
        add(
            op(pre, m("ab2", var(0)), m("ab2", var(1)),
               op("prec", var(2), m("alpha", var(3)))),
            neg(op("prec",
                   op(pre, m("beta2", var(0)), m("beta2", var(1)), var(2)),
                   m("alphabeta", var(3)))),
        ),
        eps((2,), (0, 1), op("prec", m("beta", var(2)), add(
            op(pre, m("alphabeta", var(0)), m("alphabeta", var(1)), m("alpha", var(3))),
            neg(eps((1,), (3,),
                    op(pre, m("alphabeta", var(0)), m("beta", var(3)), m("alpha2", var(1))))),
            eps((0,), (1, 3),
                op(pre, m("alphabeta", var(1)), m("beta", var(3)), m("alpha2", var(0)))),
        ))),
    )
    compat2 = axiom(
        "prepoisson.compat-2", ("g",) * 4,
        add(
            op(pre, m("alphabeta", var(0)), m("a2b", var(1)),
               op("succ", m("alpha", var(2)), var(3))),
            neg(eps((0, 1), (2,),
                    op("succ", m("alphabeta", var(2)),
                       op(pre, m("alpha", var(0)), m("alpha2", var(1)), var(3))))),
        ),
        op("succ", add(
            op(pre, m("beta", var(0)), m("alphabeta", var(1)), m("alpha", var(2))),
            neg(eps((1,), (2,),
                    op(pre, m("beta", var(0)), m("beta", var(2)), m("alpha2", var(1))))),
            eps((0,), (1, 2),
                op(pre, m("alphabeta", var(1)), m("beta", var(2)), m("alpha", var(0)))),
        ), m("beta", var(3))),
    )
    compat3 = axiom(
        "prepoisson.compat-3", ("g",) * 4,
        add(
            op(pre, m("alphabeta", var(0)), m("beta", op("prec", var(1), var(2))),
               m("a2b", var(3))),
            op(pre, m("alphabeta", var(0)), m("beta", op("succ", var(1), var(2))),
               m("a2b", var(3))),
        ),
        add(
            eps((0,), (1,),
                op("succ", m("alphabeta", var(1)),
                   op(pre, m("alpha", var(0)), m("beta", var(2)), m("alpha2", var(3))))),
            eps((2,), (3,),
                op("prec",
                   op(pre, m("beta", var(0)), m("beta", var(1)), m("alphabeta", var(3))),
                   m("alphabeta", var(2)))),
        ),
    )
    return [compat1, compat2, compat3]


def check_nc_3_bihom_pre_poisson(p: AlgebraPresentation) -> CheckReport:
    """Compatibility identities plus the pre-Lie and dendriform sub-reports."""
    pre_view = AlgebraPresentation(
        p.space, p.eps, p.alpha, p.beta,
        {"bracket3_pre": p.ops["bracket3_pre"]}, "3-bihom-pre-lie")
    dend_view = AlgebraPresentation(
        p.space, p.eps, p.alpha, p.beta,
        {"prec": p.ops["prec"], "succ": p.ops["succ"]}, "bihom-dendriform")
    report = check_3_bihom_pre_lie(pre_view).merged(check_bihom_dendriform(dend_view))

    alpha2 = p.alpha.compose(p.alpha)
    beta2 = p.beta.compose(p.beta)
    ctx = context_for(p, extra_maps={
        "alphabeta": p.alpha.compose(p.beta),
        "alpha2": alpha2,
        "beta2": beta2,
        "ab2": p.alpha.compose(beta2),
        "a2b": alpha2.compose(p.beta),
    })
    compat = _run(pre_poisson_compat_axioms(), ctx)
    return report.merged(compat)
