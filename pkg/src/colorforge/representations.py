"""Bimodules, ternary-bracket representations and their checkers.

Both module actions are stored with signature (algebra, module) -> module;
for the right action, r(y, u) means acting on u by y from the right, and the
commutation factor of the doubled-product formula is applied at use sites.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Mapping

from .errors import ShapeError, SingularMapError
from .evaluate import EvalContext
from .grading import degree_sum
from .linalg import EvenLinearMap, GradedSpace, MultiOp, check_grading
from .presentations import AlgebraPresentation
from .reporting import CheckReport
from .structures import _commute, _run
from .terms import add, axiom, eps, m, neg, op, var


@dataclass(frozen=True, eq=False)
class AssocBimodule:
    """A two-sided module of a twisted associative presentation."""

    algebra: AlgebraPresentation
    module_space: GradedSpace
    l: MultiOp
    r: MultiOp
    alpha_V: EvenLinearMap
    beta_V: EvenLinearMap

    def __post_init__(self):
        _check_action(self.l, self.algebra, self.module_space, "l")
        _check_action(self.r, self.algebra, self.module_space, "r")
        _check_module_maps(self)

    def with_ops(self, **repl) -> "AssocBimodule":
        return AssocBimodule(self.algebra, self.module_space,
                             repl.get("l", self.l), repl.get("r", self.r),
                             self.alpha_V, self.beta_V)


@dataclass(frozen=True, eq=False)
class ThreeLieRep:
    """A representation of a ternary-bracket presentation: rho maps two
    algebra arguments and a module argument to the module."""

    algebra: AlgebraPresentation
    module_space: GradedSpace
    rho: MultiOp
    alpha_V: EvenLinearMap
    beta_V: EvenLinearMap

    def __post_init__(self):
        rho = self.rho
        g = self.algebra.space
        if rho.arity != 3 or rho.arg_spaces != (g, g, self.module_space) \
                or rho.result_space != self.module_space:
            raise ShapeError("rho must map (algebra, algebra, module) to module")
        _check_module_maps(self)

    def with_ops(self, **repl) -> "ThreeLieRep":
        return ThreeLieRep(self.algebra, self.module_space,
                           repl.get("rho", self.rho), self.alpha_V, self.beta_V)


@dataclass(frozen=True, eq=False)
class PoissonRep:
    """The union of a bimodule and a bracket representation over a
    presentation that carries both operations."""

    algebra: AlgebraPresentation
    module_space: GradedSpace
    rho: MultiOp
    l: MultiOp
    r: MultiOp
    alpha_V: EvenLinearMap
    beta_V: EvenLinearMap

    def __post_init__(self):
        g = self.algebra.space
        if self.rho.arg_spaces != (g, g, self.module_space):
            raise ShapeError("rho must map (algebra, algebra, module) to module")
        _check_action(self.l, self.algebra, self.module_space, "l")
        _check_action(self.r, self.algebra, self.module_space, "r")
        _check_module_maps(self)

    def bimodule(self) -> AssocBimodule:
        view = AlgebraPresentation(
            self.algebra.space, self.algebra.eps, self.algebra.alpha,
            self.algebra.beta, {"mu": self.algebra.ops["mu"]}, "bihom-associative")
        return AssocBimodule(view, self.module_space, self.l, self.r,
                             self.alpha_V, self.beta_V)

    def lie_rep(self) -> ThreeLieRep:
        view = AlgebraPresentation(
            self.algebra.space, self.algebra.eps, self.algebra.alpha,
            self.algebra.beta, {"bracket3": self.algebra.ops["bracket3"]},
            "3-bihom-lie")
        return ThreeLieRep(view, self.module_space, self.rho,
                           self.alpha_V, self.beta_V)

    def with_ops(self, **repl) -> "PoissonRep":
        return PoissonRep(self.algebra, self.module_space,
                          repl.get("rho", self.rho), repl.get("l", self.l),
                          repl.get("r", self.r), self.alpha_V, self.beta_V)


def _check_action(action: MultiOp, algebra: AlgebraPresentation,
                  module_space: GradedSpace, name: str):
    if action.arity != 2 or action.arg_spaces != (algebra.space, module_space) \
            or action.result_space != module_space:
        raise ShapeError(f"{name} must map (algebra, module) to module")


def _check_module_maps(m_obj):
    for f, name in ((m_obj.alpha_V, "alpha_V"), (m_obj.beta_V, "beta_V")):
        if f.domain != m_obj.module_space or f.codomain != m_obj.module_space:
            raise ShapeError(f"{name} must be an endomorphism of the module space")


def _module_context(algebra: AlgebraPresentation, module_space, alpha_V, beta_V,
                    ops: Mapping[str, MultiOp], extra_maps=None) -> EvalContext:
    maps = {"alpha": algebra.alpha, "beta": algebra.beta,
            "alpha_V": alpha_V, "beta_V": beta_V}
    if extra_maps:
        maps.update(extra_maps)
    all_ops = dict(algebra.ops)
    all_ops.update(ops)
    return EvalContext(
        spaces={"g": algebra.space, "V": module_space},
        maps=maps, ops=all_ops, eps=algebra.eps)


# ---------------------------------------------------------------------------
# checkers


def check_assoc_bimodule(mod: AssocBimodule) -> CheckReport:
    """Left/right module compatibility and the three mixed conditions."""
    ctx = _module_context(mod.algebra, mod.module_space, mod.alpha_V, mod.beta_V,
                          {"l": mod.l, "r": mod.r})
    gV = ("g", "V")
    axioms = [
        _commute("bimod.module-maps-commute", "alpha_V", "beta_V", slot="V"),
        axiom("bimod.left-alpha", gV,
              m("alpha_V", op("l", var(0), var(1))),
              op("l", m("alpha", var(0)), m("alpha_V", var(1)))),
        axiom("bimod.left-beta", gV,
              m("beta_V", op("l", var(0), var(1))),
              op("l", m("beta", var(0)), m("beta_V", var(1)))),
        axiom("bimod.right-alpha", gV,
              m("alpha_V", op("r", var(0), var(1))),
              op("r", m("alpha", var(0)), m("alpha_V", var(1)))),
        axiom("bimod.right-beta", gV,
              m("beta_V", op("r", var(0), var(1))),
              op("r", m("beta", var(0)), m("beta_V", var(1)))),
        axiom("bimod.mixed-1", ("g", "g", "V"),
              op("l", m("alpha", var(0)), op("l", var(1), var(2))),
              op("l", op("mu", var(0), var(1)), m("beta_V", var(2)))),
        axiom("bimod.mixed-2", ("g", "g", "V"),
              op("l", m("alpha", var(0)), op("r", var(1), var(2))),
              eps((0,), (1,),
                  op("r", m("beta", var(1)), op("l", var(0), var(2))))),
        axiom("bimod.mixed-3", ("g", "g", "V"),
              op("r", op("mu", var(0), var(1)), m("alpha_V", var(2))),
              eps((0,), (1,),
                  op("r", m("beta", var(1)), op("r", var(0), var(2))))),
    ]
    return _run(axioms, ctx, grading_ops=[("l", mod.l), ("r", mod.r)])


def check_3_lie_rep(rep: ThreeLieRep) -> CheckReport:
    """The four bracket-representation conditions plus commuting module maps."""
    albe = rep.algebra.alpha.compose(rep.algebra.beta)
    ctx = _module_context(rep.algebra, rep.module_space, rep.alpha_V, rep.beta_V,
                          {"rho": rep.rho}, extra_maps={"albe": albe})
    ggV = ("g", "g", "V")
    gggg_v = ("g", "g", "g", "g", "V")
    br = "bracket3"
    cond1 = axiom("lierep.cond-1", ggV,
                  op("rho", m("alpha", var(0)), m("alpha", var(1)), m("alpha_V", var(2))),
                  m("alpha_V", op("rho", var(0), var(1), var(2))))
    cond2 = axiom("lierep.cond-2", ggV,
                  op("rho", m("beta", var(0)), m("beta", var(1)), m("beta_V", var(2))),
                  m("beta_V", op("rho", var(0), var(1), var(2))))
    cond3 = axiom(
        "lierep.cond-3", gggg_v,
        op("rho", m("albe", var(0)), m("albe", var(1)),
           op("rho", var(2), var(3), var(4))),
        add(
            eps((2, 3), (0, 1),
                op("rho", m("beta", var(2)), m("beta", var(3)),
                   op("rho", m("alpha", var(0)), m("alpha", var(1)), var(4)))),
            op("rho", op(br, m("beta", var(0)), m("beta", var(1)), var(2)),
               m("beta", var(3)), m("beta_V", var(4))),
            eps((2,), (0, 1),
                op("rho", m("beta", var(2)),
                   op(br, m("beta", var(0)), m("beta", var(1)), var(3)),
                   m("beta_V", var(4)))),
        ),
    )
    cond4 = axiom(
        "lierep.cond-4", gggg_v,
        op("rho", op(br, m("beta", var(0)), m("beta", var(1)), var(2)),
           m("beta", var(3)), m("beta_V", var(4))),
        add(
            eps((0,), (2, 1),
                op("rho", m("albe", var(1)), m("beta", var(2)),
                   op("rho", m("alpha", var(0)), var(3), var(4)))),
            eps((2,), (0, 1),
                op("rho", m("beta", var(2)), m("albe", var(0)),
                   op("rho", m("alpha", var(1)), var(3), var(4)))),
            op("rho", m("albe", var(0)), m("albe", var(1)),
               op("rho", var(2), var(3), var(4))),
        ),
    )
    axioms = [
        _commute("lierep.module-maps-commute", "alpha_V", "beta_V", slot="V"),
        cond1, cond2, cond3, cond4,
    ]
    return _run(axioms, ctx, grading_ops=[("rho", rep.rho)])


def check_poisson_rep(rep: PoissonRep) -> CheckReport:
    """Bimodule part, bracket part and the three mixed compatibility laws."""
    report = check_assoc_bimodule(rep.bimodule())
    report = report.merged(check_3_lie_rep(rep.lie_rep()))

    alpha, beta = rep.algebra.alpha, rep.algebra.beta
    albe = alpha.compose(beta)
    aV, bV = rep.alpha_V, rep.beta_V
    ctx = _module_context(
        rep.algebra, rep.module_space, aV, bV,
        {"rho": rep.rho, "l": rep.l, "r": rep.r},
        extra_maps={
            "albe": albe,
            "beta2": beta.compose(beta),
            "aVbV": aV.compose(bV),
            "aV2": aV.compose(aV),
            "aV2bV": aV.compose(aV).compose(bV),
        })
    gggV = ("g", "g", "g", "V")
    mixed1 = axiom(
        "poissonrep.mixed-1", gggV,
        op("rho", m("albe", var(0)), m("albe", var(1)), op("l", var(2), var(3))),
        add(
            op("l", op("bracket3", m("beta", var(0)), m("beta", var(1)), var(2)),
               m("beta_V", var(3))),
            eps((0, 1), (2,),
                op("l", m("beta", var(2)),
                   op("rho", m("alpha", var(0)), m("alpha", var(1)), var(3)))),
        ),
    )
    mixed2 = axiom(
        "poissonrep.mixed-2", gggV,
        op("rho", m("albe", var(0)), m("albe", var(1)), op("r", var(2), var(3))),
        add(
            eps((0, 1), (2,),
                op("r", m("beta", var(2)),
                   op("rho", m("beta", var(0)), m("beta", var(1)), var(3)))),
            op("r", op("bracket3", m("alpha", var(0)), m("alpha", var(1)), var(2)),
               m("beta_V", var(3))),
        ),
    )
    mixed3 = axiom(
        "poissonrep.mixed-3", gggV,
        op("rho", m("albe", var(0)), op("mu", m("beta", var(1)), m("beta", var(2))),
           m("aV2bV", var(3))),
        add(
            eps((0, 1), (2,),
                op("r", m("albe", var(2)),
                   op("rho", var(0), m("beta2", var(1)), m("aVbV", var(3))))),
            eps((0,), (1,),
                op("l", m("albe", var(1)),
                   op("rho", m("alpha", var(0)), m("beta", var(2)), m("aV2", var(3))))),
        ),
    )
    mixed = _run([mixed1, mixed2, mixed3], ctx)
    return report.merged(mixed)


# ---------------------------------------------------------------------------
# constructions of representations


def adjoint_rep(p: AlgebraPresentation, r: int = 0, s: int = 0) -> ThreeLieRep:
    """rho(x, y) z = [alpha^r beta^s x, alpha^r beta^s y, z] on the algebra
    itself, with the twisting maps acting as the module maps.  Negative powers
    require the corresponding map to be invertible."""
    bracket = p.ops["bracket3"]
    twist = p.alpha.power(r).compose(p.beta.power(s))
    space = p.space
    constants: dict[tuple[int, ...], dict[int, Fraction]] = {}
    for i in range(space.dim):
        ti = twist.apply(space.basis_vector(i))
        for j in range(space.dim):
            tj = twist.apply(space.basis_vector(j))
            for k in range(space.dim):
                value = bracket.apply([ti, tj, space.basis_vector(k)])
                coeffs = {n: c for n, c in enumerate(value.coords) if c}
                if coeffs:
                    constants[(i, j, k)] = coeffs
    rho = MultiOp(3, (space, space, space), space, constants, label="rho")
    view = AlgebraPresentation(
        p.space, p.eps, p.alpha, p.beta, {"bracket3": bracket}, "3-bihom-lie")
    return ThreeLieRep(view, space, rho, p.alpha, p.beta)


def regular_bimodule(p: AlgebraPresentation) -> AssocBimodule:
    """The algebra acting on itself: l(x, v) = mu(x, v) and
    r(y, u) = eps(y, u) mu(u, y).

    The commutation factor in the right action is exactly what makes a
    weight-zero Rota-Baxter operator agree with a Kupershmidt operator for
    this bimodule.
    """
    mu = p.ops["mu"]
    space = p.space
    l_constants: dict[tuple[int, ...], dict[int, Fraction]] = {}
    r_constants: dict[tuple[int, ...], dict[int, Fraction]] = {}
    for (i, j), coeffs in mu.constants.items():
        l_constants[(i, j)] = dict(coeffs)
    for i in range(space.dim):
        for j in range(space.dim):
            coeffs = mu.constants.get((j, i))
            if coeffs:
                factor = p.eps.eval(space.degrees[i], space.degrees[j])
                r_constants[(i, j)] = {k: factor * v for k, v in coeffs.items()}
    l_op = MultiOp(2, (space, space), space, l_constants, label="l")
    r_op = MultiOp(2, (space, space), space, r_constants, label="r")
    view = AlgebraPresentation(
        p.space, p.eps, p.alpha, p.beta, {"mu": mu}, "bihom-associative")
    return AssocBimodule(view, space, l_op, r_op, p.alpha, p.beta)


def adjoint_poisson_rep(p: AlgebraPresentation) -> PoissonRep:
    """rho = adjoint bracket action, l and r the regular product actions."""
    ad = adjoint_rep(
        AlgebraPresentation(p.space, p.eps, p.alpha, p.beta,
                            {"bracket3": p.ops["bracket3"]}, "3-bihom-lie"))
    reg = regular_bimodule(
        AlgebraPresentation(p.space, p.eps, p.alpha, p.beta,
                            {"mu": p.ops["mu"]}, "bihom-associative"))
    return PoissonRep(p, p.space, ad.rho, reg.l, reg.r, p.alpha, p.beta)
