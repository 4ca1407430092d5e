"""Structure-producing constructions: twists, doubled algebras, and the
operations induced by Kupershmidt / weight-zero Rota-Baxter operators.

Every constructor verifies its own hypotheses by running the relevant
checkers first and raises PreconditionFailedError (with the inner report) on
failure; the results are conditional, so silently constructing from invalid
input would only manufacture meaningless counterexamples.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Callable, Sequence

from .errors import PreconditionFailedError, ShapeError
from .evaluate import EvalContext, check_axiom
from .grading import Bicharacter
from .linalg import (
    EvenLinearMap,
    GradedSpace,
    MultiOp,
    Vector,
    check_even,
    identity_map,
)
from .presentations import AlgebraPresentation, context_for
from .reporting import AxiomResult, CheckReport
from .representations import (
    AssocBimodule,
    PoissonRep,
    ThreeLieRep,
    regular_bimodule,
)
from .structures import (
    check_3_bihom_lie,
    check_3_bihom_pre_lie,
    check_3_lie_color,
    check_bihom_associative,
    check_bihom_dendriform,
    check_nc_3_bihom_poisson,
    check_nc_3_bihom_pre_poisson,
)
from .operators import (
    check_kupershmidt_3lie,
    check_kupershmidt_assoc,
    check_kupershmidt_poisson,
    check_rota_baxter_3lie,
    check_rota_baxter_assoc,
)


def _require(report: CheckReport, hypothesis: str):
    if not report.passed:
        raise PreconditionFailedError(hypothesis, report)


def _op_from_values(arity: int, arg_spaces, result_space,
                    value_at: Callable[[tuple[int, ...]], Vector],
                    label: str) -> MultiOp:
    constants: dict[tuple[int, ...], dict[int, Fraction]] = {}
    for args in product(*(range(sp.dim) for sp in arg_spaces)):
        vec = value_at(args)
        coeffs = {k: c for k, c in enumerate(vec.coords) if c}
        if coeffs:
            constants[args] = coeffs
    return MultiOp(arity, tuple(arg_spaces), result_space, constants, label=label)


def _morphism_report(p: AlgebraPresentation, f: EvenLinearMap,
                     name: str) -> CheckReport:
    """f is an even morphism for every operation of the presentation."""
    entries = list(check_even(
        EvenLinearMap(f.domain, f.codomain, f.entries, label=name)).entries)
    for op_name in sorted(p.ops):
        mop = p.ops[op_name]
        witness = None
        for args in product(*(range(sp.dim) for sp in mop.arg_spaces)):
            lhs = f.apply(mop.value(args))
            rhs = mop.apply([f.apply(sp.basis_vector(a))
                             for a, sp in zip(args, mop.arg_spaces)])
            if lhs.coords != rhs.coords:
                from .reporting import Witness
                witness = Witness(args=args, lhs=lhs.coords, rhs=rhs.coords)
                break
        domain = 1
        for sp in mop.arg_spaces:
            domain *= sp.dim
        entries.append(AxiomResult(
            f"morphism.{name}.{op_name}", domain, witness is None, witness))
    return CheckReport(tuple(entries))


def _twist_preconditions(p: AlgebraPresentation, alpha, beta,
                         classical_check, class_name: str,
                         invertible: bool = False):
    if not p.is_classical():
        raise PreconditionFailedError(
            "twisting starts from a classical presentation "
            "(identity twisting maps)")
    _require(classical_check(p), f"input is a classical {class_name}")
    _require(_morphism_report(p, alpha, "alpha"), "alpha is an even morphism")
    _require(_morphism_report(p, beta, "beta"), "beta is an even morphism")
    if alpha.compose(beta) != beta.compose(alpha):
        raise PreconditionFailedError("alpha and beta commute")
    if invertible:
        alpha.inverse()
        beta.inverse()


def _twisted_binary(mu: MultiOp, alpha, beta, label: str) -> MultiOp:
    space = mu.arg_spaces[0]
    return _op_from_values(
        2, mu.arg_spaces, mu.result_space,
        lambda args: mu.apply([alpha.apply(space.basis_vector(args[0])),
                               beta.apply(space.basis_vector(args[1]))]),
        label)


def _twisted_ternary(br: MultiOp, alpha, beta, label: str) -> MultiOp:
    space = br.arg_spaces[0]
    return _op_from_values(
        3, br.arg_spaces, br.result_space,
        lambda args: br.apply([alpha.apply(space.basis_vector(args[0])),
                               alpha.apply(space.basis_vector(args[1])),
                               beta.apply(space.basis_vector(args[2]))]),
        label)


# ---------------------------------------------------------------------------
# twists


def twist_associative(p: AlgebraPresentation, alpha: EvenLinearMap,
                      beta: EvenLinearMap) -> AlgebraPresentation:
    """mu_twisted(x, y) = mu(alpha x, beta y) on a classical associative
    presentation, twisted by two commuting multiplicative even maps."""
    _twist_preconditions(p, alpha, beta, check_bihom_associative,
                         "associative color algebra")
    mu = _twisted_binary(p.ops["mu"], alpha, beta, "mu")
    return AlgebraPresentation(p.space, p.eps, alpha, beta, {"mu": mu},
                               "bihom-associative", p.commutative,
                               {"construction": "twist_associative"})


def twist_3lie(p: AlgebraPresentation, alpha: EvenLinearMap,
               beta: EvenLinearMap) -> AlgebraPresentation:
    """bracket_twisted(x, y, z) = bracket(alpha x, alpha y, beta z)."""
    _twist_preconditions(p, alpha, beta, check_3_lie_color,
                         "ternary Lie color algebra")
    br = _twisted_ternary(p.ops["bracket3"], alpha, beta, "bracket3")
    return AlgebraPresentation(p.space, p.eps, alpha, beta, {"bracket3": br},
                               "3-bihom-lie", False,
                               {"construction": "twist_3lie"})


def twist_poisson(p: AlgebraPresentation, alpha: EvenLinearMap,
                  beta: EvenLinearMap) -> AlgebraPresentation:
    """Twists both operations of a classical Poisson presentation."""
    _twist_preconditions(p, alpha, beta, check_nc_3_bihom_poisson,
                         "ternary Poisson color algebra")
    mu = _twisted_binary(p.ops["mu"], alpha, beta, "mu")
    br = _twisted_ternary(p.ops["bracket3"], alpha, beta, "bracket3")
    return AlgebraPresentation(p.space, p.eps, alpha, beta,
                               {"mu": mu, "bracket3": br},
                               "nc-3-bihom-poisson", p.commutative,
                               {"construction": "twist_poisson"})


def twist_pre_lie(p: AlgebraPresentation, alpha: EvenLinearMap,
                  beta: EvenLinearMap) -> AlgebraPresentation:
    _twist_preconditions(p, alpha, beta, check_3_bihom_pre_lie,
                         "ternary pre-Lie color algebra", invertible=True)
    pre = _twisted_ternary(p.ops["bracket3_pre"], alpha, beta, "bracket3_pre")
    return AlgebraPresentation(p.space, p.eps, alpha, beta,
                               {"bracket3_pre": pre}, "3-bihom-pre-lie", False,
                               {"construction": "twist_pre_lie"})


def twist_dendriform(p: AlgebraPresentation, alpha: EvenLinearMap,
                     beta: EvenLinearMap) -> AlgebraPresentation:
    _twist_preconditions(p, alpha, beta, check_bihom_dendriform,
                         "dendriform color algebra", invertible=True)
    prec = _twisted_binary(p.ops["prec"], alpha, beta, "prec")
    succ = _twisted_binary(p.ops["succ"], alpha, beta, "succ")
    return AlgebraPresentation(p.space, p.eps, alpha, beta,
                               {"prec": prec, "succ": succ},
                               "bihom-dendriform", False,
                               {"construction": "twist_dendriform"})


def twist_pre_poisson(p: AlgebraPresentation, alpha: EvenLinearMap,
                      beta: EvenLinearMap) -> AlgebraPresentation:
    _twist_preconditions(p, alpha, beta, check_nc_3_bihom_pre_poisson,
                         "ternary pre-Poisson color algebra", invertible=True)
    pre = _twisted_ternary(p.ops["bracket3_pre"], alpha, beta, "bracket3_pre")
    prec = _twisted_binary(p.ops["prec"], alpha, beta, "prec")
    succ = _twisted_binary(p.ops["succ"], alpha, beta, "succ")
    return AlgebraPresentation(p.space, p.eps, alpha, beta,
                               {"bracket3_pre": pre, "prec": prec, "succ": succ},
                               "nc-3-bihom-pre-poisson", False,
                               {"construction": "twist_pre_poisson"})


# ---------------------------------------------------------------------------
# doubled (semidirect) algebras


def direct_sum_space(g: GradedSpace, V: GradedSpace) -> GradedSpace:
    if g.group != V.group:
        raise ShapeError("summands must share the grading group")
    return GradedSpace(
        g.group, g.degrees + V.degrees,
        tuple(f"g.{n}" for n in g.names) + tuple(f"V.{n}" for n in V.names))


def direct_sum_map(f: EvenLinearMap, h: EvenLinearMap, W: GradedSpace,
                   label: str) -> EvenLinearMap:
    n_g, n_V = f.domain.dim, h.domain.dim
    zero = Fraction(0)
    rows = []
    for k in range(n_g):
        rows.append(tuple(f.entries[k]) + (zero,) * n_V)
    for k in range(n_V):
        rows.append((zero,) * n_g + tuple(h.entries[k]))
    return EvenLinearMap(W, W, tuple(rows), label=label)


def _embed(vec: Vector, W: GradedSpace, offset: int) -> Vector:
    coords = [Fraction(0)] * W.dim
    for i, c in enumerate(vec.coords):
        coords[offset + i] = c
    return Vector(W, tuple(coords))


def semidirect_assoc(mod: AssocBimodule) -> AlgebraPresentation:
    """Product on algebra + module:
    (x + u)(y + v) = mu(x, y) + l(x, v) + eps(y, u) r(y, u);
    basis layout: algebra basis first, then module basis."""
    p = mod.algebra
    g, V = p.space, mod.module_space
    W = direct_sum_space(g, V)
    n_g = g.dim
    eps = p.eps

    def value(args: tuple[int, ...]) -> Vector:
        a, b = args
        if a < n_g and b < n_g:
            return _embed(p.ops["mu"].value((a, b)), W, 0)
        if a < n_g and b >= n_g:
            return _embed(mod.l.value((a, b - n_g)), W, n_g)
        if a >= n_g and b < n_g:
            factor = eps.eval(g.degrees[b], V.degrees[a - n_g])
            return _embed(mod.r.value((b, a - n_g)), W, n_g).scale(factor)
        return W.zero_vector()

    mu = _op_from_values(2, (W, W), W, value, "mu")
    alpha = direct_sum_map(p.alpha, mod.alpha_V, W, "alpha")
    beta = direct_sum_map(p.beta, mod.beta_V, W, "beta")
    return AlgebraPresentation(W, eps, alpha, beta, {"mu": mu},
                               "bihom-associative", False,
                               {"construction": "semidirect_assoc",
                                "basis_layout": "algebra then module"})


def semidirect_3lie(rep: ThreeLieRep) -> AlgebraPresentation:
    """Doubled ternary bracket:

    [x+u, y+v, z+w] = [x, y, z] + rho(x, y) w
                      - eps(|v|, |z|) rho(x, a^-1 b z)(aV bV^-1 v)
                      + eps(|u|, |y| + |z|) rho(y, a^-1 b z)(aV bV^-1 u)

    Requires the algebra's first twisting map and the module's second to be
    invertible.
    """
    p = rep.algebra
    g, V = p.space, rep.module_space
    W = direct_sum_space(g, V)
    n_g = g.dim
    eps = p.eps
    alpha_lbl = EvenLinearMap(g, g, p.alpha.entries, label="alpha")
    bV_lbl = EvenLinearMap(V, V, rep.beta_V.entries, label="beta_V")
    ainv_b = alpha_lbl.inverse().compose(p.beta)
    aV_bVinv = rep.alpha_V.compose(bV_lbl.inverse())
    bracket = p.ops["bracket3"]
    rho = rep.rho

    def value(args: tuple[int, ...]) -> Vector:
        kinds = tuple(a >= n_g for a in args)
        a, b, c = args
        if kinds == (False, False, False):
            return _embed(bracket.value(args), W, 0)
        if kinds == (False, False, True):
            return _embed(rho.value((a, b, c - n_g)), W, n_g)
        if kinds == (False, True, False):
            x, v, z = a, b - n_g, c
            factor = -eps.eval(V.degrees[v], g.degrees[z])
            vec = rho.apply([g.basis_vector(x),
                             ainv_b.apply(g.basis_vector(z)),
                             aV_bVinv.apply(V.basis_vector(v))])
            return _embed(vec, W, n_g).scale(factor)
        if kinds == (True, False, False):
            u, y, z = a - n_g, b, c
            factor = eps.eval(V.degrees[u], g.degrees[y] + g.degrees[z])
            vec = rho.apply([g.basis_vector(y),
                             ainv_b.apply(g.basis_vector(z)),
                             aV_bVinv.apply(V.basis_vector(u))])
            return _embed(vec, W, n_g).scale(factor)
        return W.zero_vector()

    br = _op_from_values(3, (W, W, W), W, value, "bracket3")
    alpha = direct_sum_map(p.alpha, rep.alpha_V, W, "alpha")
    beta = direct_sum_map(p.beta, rep.beta_V, W, "beta")
    return AlgebraPresentation(W, eps, alpha, beta, {"bracket3": br},
                               "3-bihom-lie", False,
                               {"construction": "semidirect_3lie",
                                "basis_layout": "algebra then module"})


def semidirect_poisson(rep: PoissonRep) -> AlgebraPresentation:
    """Doubled Poisson presentation: the doubled product together with the
    doubled bracket.  Inherits the invertibility requirements of both."""
    doubled_mu = semidirect_assoc(rep.bimodule())
    doubled_br = semidirect_3lie(rep.lie_rep())
    W = doubled_mu.space
    return AlgebraPresentation(
        W, rep.algebra.eps, doubled_mu.alpha, doubled_mu.beta,
        {"mu": doubled_mu.ops["mu"], "bracket3": doubled_br.ops["bracket3"]},
        "nc-3-bihom-poisson", False,
        {"construction": "semidirect_poisson",
         "basis_layout": "algebra then module"})


# ---------------------------------------------------------------------------
# operator-induced structures


def rb_induced_assoc(p: AlgebraPresentation, R: EvenLinearMap) -> AlgebraPresentation:
    """mu_R(x, y) = mu(R x, y) + mu(x, R y) for a weight-zero Rota-Baxter R."""
    _require(check_rota_baxter_assoc(p, R),
             "R is a weight-zero Rota-Baxter operator for the product")
    mu = p.ops["mu"]
    space = p.space

    def value(args):
        x, y = (space.basis_vector(a) for a in args)
        return mu.apply([R.apply(x), y]) + mu.apply([x, R.apply(y)])

    mu_R = _op_from_values(2, (space, space), space, value, "mu")
    return AlgebraPresentation(space, p.eps, p.alpha, p.beta, {"mu": mu_R},
                               "bihom-associative", False,
                               {"construction": "rb_induced_assoc"})


def rb_induced_3lie(p: AlgebraPresentation, R: EvenLinearMap) -> AlgebraPresentation:
    """[x,y,z]_R = [Rx,Ry,z] + [Rx,y,Rz] + [x,Ry,Rz]."""
    _require(check_rota_baxter_3lie(p, R),
             "R is a weight-zero Rota-Baxter operator for the bracket")
    br = p.ops["bracket3"]
    space = p.space

    def value(args):
        x, y, z = (space.basis_vector(a) for a in args)
        return (br.apply([R.apply(x), R.apply(y), z])
                + br.apply([R.apply(x), y, R.apply(z)])
                + br.apply([x, R.apply(y), R.apply(z)]))

    br_R = _op_from_values(3, (space,) * 3, space, value, "bracket3")
    return AlgebraPresentation(space, p.eps, p.alpha, p.beta, {"bracket3": br_R},
                               "3-bihom-lie", False,
                               {"construction": "rb_induced_3lie"})


def rb_induced_poisson(p: AlgebraPresentation, R: EvenLinearMap) -> AlgebraPresentation:
    """Both induced operations from a joint weight-zero Rota-Baxter operator."""
    assoc_view = AlgebraPresentation(p.space, p.eps, p.alpha, p.beta,
                                     {"mu": p.ops["mu"]}, "bihom-associative")
    lie_view = AlgebraPresentation(p.space, p.eps, p.alpha, p.beta,
                                   {"bracket3": p.ops["bracket3"]}, "3-bihom-lie")
    mu_R = rb_induced_assoc(assoc_view, R).ops["mu"]
    br_R = rb_induced_3lie(lie_view, R).ops["bracket3"]
    return AlgebraPresentation(p.space, p.eps, p.alpha, p.beta,
                               {"mu": mu_R, "bracket3": br_R},
                               "nc-3-bihom-poisson", False,
                               {"construction": "rb_induced_poisson"})


def kupershmidt_induced_3lie(rep: ThreeLieRep, T: EvenLinearMap) -> AlgebraPresentation:
    """The bracket transported onto the module:

    [u,v,w]_T = rho(Tu, Tv) w - eps(v, w) rho(Tu, T aV^-1 bV w)(aV bV^-1 v)
                + eps(u, v+w) rho(Tv, T aV^-1 bV w)(aV bV^-1 u)
    """
    _require(check_kupershmidt_3lie(rep, T),
             "T is a Kupershmidt operator for the bracket representation")
    V = rep.module_space
    eps = rep.algebra.eps
    aV_lbl = EvenLinearMap(V, V, rep.alpha_V.entries, label="alpha_V")
    bV_lbl = EvenLinearMap(V, V, rep.beta_V.entries, label="beta_V")
    aVinv_bV = aV_lbl.inverse().compose(bV_lbl)
    aV_bVinv = aV_lbl.compose(bV_lbl.inverse())
    rho = rep.rho

    def value(args):
        u, v, w = (V.basis_vector(a) for a in args)
        du, dv, dw = (V.degrees[a] for a in args)
        tw = T.apply(aVinv_bV.apply(w))
        out = rho.apply([T.apply(u), T.apply(v), w])
        out = out + rho.apply([T.apply(u), tw, aV_bVinv.apply(v)]).scale(
            -eps.eval(dv, dw))
        out = out + rho.apply([T.apply(v), tw, aV_bVinv.apply(u)]).scale(
            eps.eval(du, dv + dw))
        return out

    br = _op_from_values(3, (V,) * 3, V, value, "bracket3")
    return AlgebraPresentation(V, eps, rep.alpha_V, rep.beta_V, {"bracket3": br},
                               "3-bihom-lie", False,
                               {"construction": "kupershmidt_induced_3lie"})


def kupershmidt_induced_pre_lie(rep: ThreeLieRep, T: EvenLinearMap) -> AlgebraPresentation:
    """{u, v, w} = rho(Tu, Tv) w on the module; its twisted commutator equals
    the transported bracket, which is verified exactly on construction."""
    _require(check_kupershmidt_3lie(rep, T),
             "T is a Kupershmidt operator for the bracket representation")
    V = rep.module_space
    rho = rep.rho

    def value(args):
        u, v, w = (V.basis_vector(a) for a in args)
        return rho.apply([T.apply(u), T.apply(v), w])

    pre = _op_from_values(3, (V,) * 3, V, value, "bracket3_pre")
    result = AlgebraPresentation(V, rep.algebra.eps, rep.alpha_V, rep.beta_V,
                                 {"bracket3_pre": pre}, "3-bihom-pre-lie", False,
                                 {"construction": "kupershmidt_induced_pre_lie"})
    transported = kupershmidt_induced_3lie(rep, T).ops["bracket3"]
    commutator = commutator_3lie_from_pre_lie(result,
                                              check_input=False).ops["bracket3"]
    if transported != commutator:
        raise PreconditionFailedError(
            "the commutator of the induced ternary product must equal the "
            "transported bracket")
    return result


def kupershmidt_induced_dendriform(mod: AssocBimodule,
                                   T: EvenLinearMap) -> AlgebraPresentation:
    """u prec v = eps(u, v) r(T v, u) and u succ v = l(T u, v) on the module.

    The operator transports their sum into the product:
    T(u prec v + u succ v) = mu(T u, T v), verified exactly on construction.
    """
    _require(check_kupershmidt_assoc(mod, T),
             "T is a Kupershmidt operator for the bimodule")
    V = mod.module_space
    eps = mod.algebra.eps

    def prec_value(args):
        u, v = (V.basis_vector(a) for a in args)
        factor = eps.eval(V.degrees[args[0]], V.degrees[args[1]])
        return mod.r.apply([T.apply(v), u]).scale(factor)

    def succ_value(args):
        u, v = (V.basis_vector(a) for a in args)
        return mod.l.apply([T.apply(u), v])

    prec = _op_from_values(2, (V, V), V, prec_value, "prec")
    succ = _op_from_values(2, (V, V), V, succ_value, "succ")

    mu = mod.algebra.ops["mu"]
    for i in range(V.dim):
        for j in range(V.dim):
            u, v = V.basis_vector(i), V.basis_vector(j)
            total = prec.apply([u, v]) + succ.apply([u, v])
            if T.apply(total).coords != mu.apply([T.apply(u), T.apply(v)]).coords:
                raise PreconditionFailedError(
                    "T must transport the sum of the induced products into "
                    "the algebra product")
    return AlgebraPresentation(V, eps, mod.alpha_V, mod.beta_V,
                               {"prec": prec, "succ": succ},
                               "bihom-dendriform", False,
                               {"construction": "kupershmidt_induced_dendriform"})


def kupershmidt_induced_pre_poisson(rep: PoissonRep,
                                    T: EvenLinearMap) -> AlgebraPresentation:
    """The induced ternary product and both split products on the module."""
    _require(check_kupershmidt_poisson(rep, T),
             "T is a Kupershmidt operator for the Poisson representation")
    pre = kupershmidt_induced_pre_lie(rep.lie_rep(), T).ops["bracket3_pre"]
    dend = kupershmidt_induced_dendriform(rep.bimodule(), T)
    return AlgebraPresentation(
        rep.module_space, rep.algebra.eps, rep.alpha_V, rep.beta_V,
        {"bracket3_pre": pre, "prec": dend.ops["prec"], "succ": dend.ops["succ"]},
        "nc-3-bihom-pre-poisson", False,
        {"construction": "kupershmidt_induced_pre_poisson"})


# ---------------------------------------------------------------------------
# sub-adjacent structures


def commutator_3lie_from_pre_lie(p: AlgebraPresentation,
                                 check_input: bool = True) -> AlgebraPresentation:
    """[x,y,z] = {x,y,z} - eps(y,z){x, (b a^-1) z, (a b^-1) y}
                 + eps(x, y+z){y, (b a^-1) z, (a b^-1) x}."""
    if check_input:
        _require(check_3_bihom_pre_lie(p),
                 "input is a ternary pre-Lie color presentation")
    pre = p.ops["bracket3_pre"]
    space = p.space
    eps = p.eps
    alpha_lbl = EvenLinearMap(space, space, p.alpha.entries, label="alpha")
    beta_lbl = EvenLinearMap(space, space, p.beta.entries, label="beta")
    ba_inv = beta_lbl.compose(alpha_lbl.inverse())
    ab_inv = alpha_lbl.compose(beta_lbl.inverse())

    def value(args):
        x, y, z = (space.basis_vector(a) for a in args)
        dx, dy, dz = (space.degrees[a] for a in args)
        out = pre.apply([x, y, z])
        out = out + pre.apply([x, ba_inv.apply(z), ab_inv.apply(y)]).scale(
            -eps.eval(dy, dz))
        out = out + pre.apply([y, ba_inv.apply(z), ab_inv.apply(x)]).scale(
            eps.eval(dx, dy + dz))
        return out

    br = _op_from_values(3, (space,) * 3, space, value, "bracket3")
    return AlgebraPresentation(space, eps, p.alpha, p.beta, {"bracket3": br},
                               "3-bihom-lie", False,
                               {"construction": "commutator_3lie_from_pre_lie"})


def sum_assoc_from_dendriform(p: AlgebraPresentation,
                              check_input: bool = True) -> AlgebraPresentation:
    """mu = prec + succ."""
    if check_input:
        _require(check_bihom_dendriform(p),
                 "input is a dendriform color presentation")
    prec, succ = p.ops["prec"], p.ops["succ"]
    space = p.space

    def value(args):
        u, v = (space.basis_vector(a) for a in args)
        return prec.apply([u, v]) + succ.apply([u, v])

    mu = _op_from_values(2, (space, space), space, value, "mu")
    return AlgebraPresentation(space, p.eps, p.alpha, p.beta, {"mu": mu},
                               "bihom-associative", False,
                               {"construction": "sum_assoc_from_dendriform"})


def subadjacent_poisson_from_pre_poisson(p: AlgebraPresentation) -> AlgebraPresentation:
    """Pairs the commutator bracket with the summed product."""
    _require(check_nc_3_bihom_pre_poisson(p),
             "input is a ternary pre-Poisson color presentation")
    pre_view = AlgebraPresentation(p.space, p.eps, p.alpha, p.beta,
                                   {"bracket3_pre": p.ops["bracket3_pre"]},
                                   "3-bihom-pre-lie")
    dend_view = AlgebraPresentation(p.space, p.eps, p.alpha, p.beta,
                                    {"prec": p.ops["prec"], "succ": p.ops["succ"]},
                                    "bihom-dendriform")
    br = commutator_3lie_from_pre_lie(pre_view, check_input=False).ops["bracket3"]
    mu = sum_assoc_from_dendriform(dend_view, check_input=False).ops["mu"]
    return AlgebraPresentation(p.space, p.eps, p.alpha, p.beta,
                               {"bracket3": br, "mu": mu},
                               "nc-3-bihom-poisson", False,
                               {"construction": "subadjacent_poisson_from_pre_poisson"})
