"""Kupershmidt and weight-zero Rota-Baxter operator checkers, the graph
criterion, and an exhaustive finite-grid enumerator for operator candidates.

Intertwining with the twisting maps is reported, not assumed, so near-miss
candidates stay diagnosable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import EnumerationBudgetError, ShapeError, SingularMapError
from .evaluate import EvalContext
from .linalg import EvenLinearMap, GradedSpace, MultiOp
from .presentations import AlgebraPresentation
from .reporting import CheckReport
from .representations import (
    AssocBimodule,
    PoissonRep,
    ThreeLieRep,
    _module_context,
    adjoint_poisson_rep,
    adjoint_rep,
    regular_bimodule,
)
from .structures import _run
from .terms import add, axiom, eps, m, neg, op, var

SETTINGS = (
    "assoc-bimodule",
    "3lie-rep",
    "poisson-rep",
    "assoc-RB",
    "3lie-RB",
    "poisson-RB",
)


@dataclass(frozen=True)
class OperatorCandidate:
    map: EvenLinearMap
    setting: str


def _check_operator_shape(T: EvenLinearMap, domain: GradedSpace,
                          codomain: GradedSpace, what: str):
    if T.domain != domain or T.codomain != codomain:
        raise ShapeError(f"{what} must map the module space into the algebra")


# ---------------------------------------------------------------------------
# associative setting


def check_kupershmidt_assoc(mod: AssocBimodule, T: EvenLinearMap) -> CheckReport:
    """T intertwines the twisting maps and transports the actions into the
    product: mu(T u, T v) = T( l(T u, v) + eps(u, v) r(T v, u) )."""
    _check_operator_shape(T, mod.module_space, mod.algebra.space, "T")
    ctx = _module_context(mod.algebra, mod.module_space, mod.alpha_V, mod.beta_V,
                          {"l": mod.l, "r": mod.r}, extra_maps={"T": T})
    axioms = [
        axiom("kup.intertwine-alpha", ("V",),
              m("T", m("alpha_V", var(0))), m("alpha", m("T", var(0)))),
        axiom("kup.intertwine-beta", ("V",),
              m("T", m("beta_V", var(0))), m("beta", m("T", var(0)))),
        axiom("kup.identity", ("V", "V"),
              op("mu", m("T", var(0)), m("T", var(1))),
              add(
                  m("T", op("l", m("T", var(0)), var(1))),
                  eps((0,), (1,), m("T", op("r", m("T", var(1)), var(0)))),
              )),
    ]
    return _run(axioms, ctx)


def check_rota_baxter_assoc(p: AlgebraPresentation, R: EvenLinearMap) -> CheckReport:
    """Weight-zero Rota-Baxter law for the product; equivalent to the
    Kupershmidt check against the regular bimodule."""
    _check_operator_shape(R, p.space, p.space, "R")
    ctx = EvalContext(
        spaces={"g": p.space},
        maps={"alpha": p.alpha, "beta": p.beta, "R": R},
        ops={"mu": p.ops["mu"]},
        eps=p.eps,
    )
    axioms = [
        axiom("rb.commute-alpha", ("g",),
              m("R", m("alpha", var(0))), m("alpha", m("R", var(0)))),
        axiom("rb.commute-beta", ("g",),
              m("R", m("beta", var(0))), m("beta", m("R", var(0)))),
        axiom("rb.identity", ("g", "g"),
              op("mu", m("R", var(0)), m("R", var(1))),
              add(
                  m("R", op("mu", m("R", var(0)), var(1))),
                  m("R", op("mu", var(0), m("R", var(1)))),
              )),
    ]
    return _run(axioms, ctx)


# ---------------------------------------------------------------------------
# ternary setting


def check_kupershmidt_3lie(rep: ThreeLieRep, T: EvenLinearMap) -> CheckReport:
    """The ternary Kupershmidt identity; needs invertible module maps."""
    _check_operator_shape(T, rep.module_space, rep.algebra.space, "T")
    aV, bV = rep.alpha_V, rep.beta_V
    aV_lbl = EvenLinearMap(aV.domain, aV.codomain, aV.entries, label="alpha_V")
    bV_lbl = EvenLinearMap(bV.domain, bV.codomain, bV.entries, label="beta_V")
    aVinv_bV = aV_lbl.inverse().compose(bV_lbl)
    aV_bVinv = aV_lbl.compose(bV_lbl.inverse())
    ctx = _module_context(rep.algebra, rep.module_space, aV, bV,
                          {"rho": rep.rho},
                          extra_maps={"T": T, "aVinv_bV": aVinv_bV,
                                      "aV_bVinv": aV_bVinv})
    identity = axiom(
        "kup3.identity", ("V", "V", "V"),
        op("bracket3", m("T", var(0)), m("T", var(1)), m("T", var(2))),
        add(
            m("T", op("rho", m("T", var(0)), m("T", var(1)), var(2))),
            neg(eps((1,), (2,),
                    m("T", op("rho", m("T", var(0)),
                              m("T", m("aVinv_bV", var(2))),
                              m("aV_bVinv", var(1)))))),
            eps((0,), (1, 2),
                m("T", op("rho", m("T", var(1)),
                          m("T", m("aVinv_bV", var(2))),
                          m("aV_bVinv", var(0))))),
        ),
    )
    axioms = [
        axiom("kup3.intertwine-alpha", ("V",),
              m("T", m("alpha_V", var(0))), m("alpha", m("T", var(0)))),
        axiom("kup3.intertwine-beta", ("V",),
              m("T", m("beta_V", var(0))), m("beta", m("T", var(0)))),
        identity,
    ]
    return _run(axioms, ctx)


def check_rota_baxter_3lie(p: AlgebraPresentation, R: EvenLinearMap) -> CheckReport:
    """Weight-zero Rota-Baxter law for the ternary bracket."""
    _check_operator_shape(R, p.space, p.space, "R")
    ctx = EvalContext(
        spaces={"g": p.space},
        maps={"alpha": p.alpha, "beta": p.beta, "R": R},
        ops={"bracket3": p.ops["bracket3"]},
        eps=p.eps,
    )
    br = "bracket3"
    axioms = [
        axiom("rb3.commute-alpha", ("g",),
              m("R", m("alpha", var(0))), m("alpha", m("R", var(0)))),
        axiom("rb3.commute-beta", ("g",),
              m("R", m("beta", var(0))), m("beta", m("R", var(0)))),
        axiom("rb3.identity", ("g", "g", "g"),
              op(br, m("R", var(0)), m("R", var(1)), m("R", var(2))),
              add(
                  m("R", op(br, m("R", var(0)), m("R", var(1)), var(2))),
                  m("R", op(br, m("R", var(0)), var(1), m("R", var(2)))),
                  m("R", op(br, var(0), m("R", var(1)), m("R", var(2)))),
              )),
    ]
    return _run(axioms, ctx)


def check_kupershmidt_poisson(rep: PoissonRep, T: EvenLinearMap) -> CheckReport:
    """Conjunction of the associative and ternary Kupershmidt checks."""
    return check_kupershmidt_assoc(rep.bimodule(), T).merged(
        check_kupershmidt_3lie(rep.lie_rep(), T))


# ---------------------------------------------------------------------------
# graph criterion


def check_graph_subalgebra(rep: ThreeLieRep, T: EvenLinearMap) -> CheckReport:
    """Is {(T u, u)} a subalgebra of the doubled bracket algebra?

    A subalgebra must be stable under both twisting maps and closed under the
    bracket; stability is exactly the intertwining of T, and closure says the
    algebra part of the doubled bracket of graph elements equals T of its
    module part.
    """
    from .constructions import semidirect_3lie

    _check_operator_shape(T, rep.module_space, rep.algebra.space, "T")
    doubled = semidirect_3lie(rep)
    g, V = rep.algebra.space, rep.module_space
    W = doubled.space
    n_g = g.dim

    def matrix(rows_cols, domain, codomain):
        return EvenLinearMap(domain, codomain, rows_cols)

    zero = Fraction(0)
    one = Fraction(1)
    # graph embedding u -> (T u, u)
    gamma_rows = [
        [T.entries[k][i] for i in range(V.dim)] for k in range(n_g)
    ] + [[one if i == k else zero for i in range(V.dim)] for k in range(V.dim)]
    gamma = matrix(gamma_rows, V, W)
    proj_g = matrix(
        [[one if i == k else zero for i in range(W.dim)] for k in range(n_g)],
        W, g)
    proj_V = matrix(
        [[one if i == k + n_g else zero for i in range(W.dim)] for k in range(V.dim)],
        W, V)

    ctx = EvalContext(
        spaces={"V": V, "W": W, "g": g},
        maps={"gamma": gamma, "proj_g": proj_g, "proj_V": proj_V, "T": T,
              "alpha": rep.algebra.alpha, "beta": rep.algebra.beta,
              "alpha_V": rep.alpha_V, "beta_V": rep.beta_V},
        ops={"doubled": doubled.ops["bracket3"]},
        eps=rep.algebra.eps,
    )
    inner = op("doubled", m("gamma", var(0)), m("gamma", var(1)), m("gamma", var(2)))
    axioms = [
        axiom("graph.closed-alpha", ("V",),
              m("alpha", m("T", var(0))), m("T", m("alpha_V", var(0)))),
        axiom("graph.closed-beta", ("V",),
              m("beta", m("T", var(0))), m("T", m("beta_V", var(0)))),
        axiom("graph.bracket-closure", ("V", "V", "V"),
              m("proj_g", inner), m("T", m("proj_V", inner))),
    ]
    return _run(axioms, ctx)


# ---------------------------------------------------------------------------
# finite-grid enumeration


def even_entry_positions(domain: GradedSpace,
                         codomain: GradedSpace) -> list[tuple[int, int]]:
    """Matrix positions an even map may fill, in deterministic order."""
    return [
        (k, i)
        for k in range(codomain.dim)
        for i in range(domain.dim)
        if codomain.degrees[k] == domain.degrees[i]
    ]


def iter_even_grid_maps(domain: GradedSpace, codomain: GradedSpace,
                        grid: Sequence[int] = (-2, -1, 0, 1, 2),
                        budget: int = 10**7,
                        label: str = "T") -> Iterator[EvenLinearMap]:
    """All even maps with free entries drawn from the grid, lexicographically."""
    positions = even_entry_positions(domain, codomain)
    total = len(grid) ** len(positions)
    if total > budget:
        raise EnumerationBudgetError(
            f"{total} candidates exceed the enumeration budget ({budget})")
    grid = [Fraction(v) for v in grid]
    zero_rows = [[Fraction(0)] * domain.dim for _ in range(codomain.dim)]
    for values in product(grid, repeat=len(positions)):
        rows = [row[:] for row in zero_rows]
        for (k, i), v in zip(positions, values):
            rows[k][i] = v
        yield EvenLinearMap(domain, codomain, tuple(tuple(r) for r in rows),
                            label=label)


def _operator_check(target, setting: str, T: EvenLinearMap) -> CheckReport:
    if setting == "assoc-bimodule":
        return check_kupershmidt_assoc(target, T)
    if setting == "3lie-rep":
        return check_kupershmidt_3lie(target, T)
    if setting == "poisson-rep":
        return check_kupershmidt_poisson(target, T)
    if setting == "assoc-RB":
        return check_rota_baxter_assoc(target, T)
    if setting == "3lie-RB":
        return check_rota_baxter_3lie(target, T)
    if setting == "poisson-RB":
        return check_rota_baxter_assoc(target, T).merged(
            check_rota_baxter_3lie(target, T))
    raise ShapeError(f"unknown operator setting {setting!r}")


def _operator_spaces(target, setting: str) -> tuple[GradedSpace, GradedSpace]:
    if setting in ("assoc-bimodule", "3lie-rep", "poisson-rep"):
        return target.module_space, target.algebra.space
    return target.space, target.space


def enumerate_operators(target, setting: str,
                        grid: Sequence[int] = (-2, -1, 0, 1, 2),
                        budget: int = 10**7,
                        max_dim: int = 4) -> list[OperatorCandidate]:
    """All grid-valued even maps whose checker passes, in deterministic order.

    ``target`` is the bimodule / representation / presentation matching the
    setting.  Exhaustive over the finite grid; no algebraic solving.
    """
    if setting not in SETTINGS:
        raise ShapeError(f"unknown operator setting {setting!r}")
    domain, codomain = _operator_spaces(target, setting)
    if domain.dim > max_dim or codomain.dim > max_dim:
        raise EnumerationBudgetError(
            f"enumeration limited to dimension <= {max_dim}")
    out = []
    for T in iter_even_grid_maps(domain, codomain, grid, budget):
        if _operator_check(target, setting, T).passed:
            out.append(OperatorCandidate(T, setting))
    return out
