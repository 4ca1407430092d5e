"""Two interchangeable evaluators for axiom checks over basis tuples.

The exact evaluator walks every basis tuple with ``fractions.Fraction``
arithmetic; it is the reference semantics and produces witnesses.  The
vectorized evaluator compiles the same term lists to dense int64 numpy
contractions and is used automatically when every involved scalar is an
integer and a rigorous magnitude bound rules out int64 overflow; its verdict
is bit-exact, and on failure the witness values are recomputed exactly.

Checks quantify over homogeneous basis tuples only; multilinearity of all
operations makes this equivalent to quantifying over homogeneous elements.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Mapping

import numpy as np

from .errors import DimensionGuardError, ShapeError
from .grading import Bicharacter
from .linalg import EvenLinearMap, GradedSpace, MultiOp, Vector
from .reporting import AxiomResult, Witness
from .terms import Axiom, Expr, MapApp, OpApp, Term, Var

_BOUND_LIMIT = float(2**55)

DEFAULT_MAX_DIM = 12


def max_dim_limit() -> int:
    """Exhaustive-check dimension guard; COLORFORGE_MAX_DIM overrides."""
    raw = os.environ.get("COLORFORGE_MAX_DIM", "")
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return DEFAULT_MAX_DIM


@dataclass
class EvalContext:
    spaces: Mapping[str, GradedSpace]
    maps: Mapping[str, EvenLinearMap]
    ops: Mapping[str, MultiOp]
    eps: Bicharacter
    _dense: dict = field(default_factory=dict, repr=False)
    _eps_tables: dict = field(default_factory=dict, repr=False)

    def guard_dims(self):
        limit = max_dim_limit()
        for sp in self.spaces.values():
            if sp.dim > limit:
                raise DimensionGuardError(sp.dim, limit)

    def eps_table(self, key_a: str, key_b: str):
        """Matrix of commutation factors between two spaces' basis degrees."""
        k = (key_a, key_b)
        if k not in self._eps_tables:
            sa, sb = self.spaces[key_a], self.spaces[key_b]
            self._eps_tables[k] = tuple(
                tuple(self.eps.eval(da, db) for db in sb.degrees) for da in sa.degrees
            )
        return self._eps_tables[k]


def result_space(expr: Expr, ax: Axiom, ctx: EvalContext) -> GradedSpace:
    if isinstance(expr, Var):
        return ctx.spaces[ax.slots[expr.slot]]
    if isinstance(expr, MapApp):
        return ctx.maps[expr.name].codomain
    return ctx.ops[expr.name].result_space


# ---------------------------------------------------------------------------
# exact path


def _eval_expr_exact(expr: Expr, ax: Axiom, ctx: EvalContext,
                     args: tuple[int, ...]) -> Vector:
    if isinstance(expr, Var):
        return ctx.spaces[ax.slots[expr.slot]].basis_vector(args[expr.slot])
    if isinstance(expr, MapApp):
        return ctx.maps[expr.name].apply(_eval_expr_exact(expr.arg, ax, ctx, args))
    op = ctx.ops[expr.name]
    vectors = [_eval_expr_exact(a, ax, ctx, args) for a in expr.args]
    return op.apply(vectors)


def _eps_factor(term: Term, ax: Axiom, ctx: EvalContext,
                args: tuple[int, ...]) -> Fraction:
    factor = Fraction(1)
    for a_slots, b_slots in term.eps:
        for i in a_slots:
            for j in b_slots:
                factor *= ctx.eps_table(ax.slots[i], ax.slots[j])[args[i]][args[j]]
    return factor


def _eval_side_exact(terms, ax: Axiom, ctx: EvalContext, args: tuple[int, ...],
                     space: GradedSpace) -> Vector:
    total = space.zero_vector()
    for term in terms:
        vec = _eval_expr_exact(term.expr, ax, ctx, args)
        scalar = term.coeff * _eps_factor(term, ax, ctx, args)
        if scalar:
            total = total + vec.scale(scalar)
    return total


def evaluate_sides_at(ax: Axiom, ctx: EvalContext,
                      args: tuple[int, ...]) -> tuple[Vector, Vector]:
    """Exact values of both sides at one basis tuple (witness re-evaluation)."""
    space = _common_space(ax, ctx)
    lhs = _eval_side_exact(ax.lhs, ax, ctx, args, space)
    rhs = _eval_side_exact(ax.rhs, ax, ctx, args, space)
    return lhs, rhs


def _common_space(ax: Axiom, ctx: EvalContext) -> GradedSpace:
    spaces = {result_space(t.expr, ax, ctx) for t in ax.lhs + ax.rhs}
    if len(spaces) != 1:
        raise ShapeError(f"axiom {ax.axiom_id}: sides land in different spaces")
    return spaces.pop()


def _check_exact(ax: Axiom, ctx: EvalContext, dims: tuple[int, ...],
                 domain: int) -> AxiomResult:
    space = _common_space(ax, ctx)
    for args in product(*(range(d) for d in dims)):
        lhs = _eval_side_exact(ax.lhs, ax, ctx, args, space)
        rhs = _eval_side_exact(ax.rhs, ax, ctx, args, space)
        if lhs.coords != rhs.coords:
            return AxiomResult(
                ax.axiom_id, domain, False,
                Witness(args=args, lhs=lhs.coords, rhs=rhs.coords),
            )
    return AxiomResult(ax.axiom_id, domain, True, None)


# ---------------------------------------------------------------------------
# vectorized path


def _int_matrix(rows) -> np.ndarray | None:
    out = np.empty((len(rows), len(rows[0]) if rows else 0), dtype=np.int64)
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if v.denominator != 1 or abs(v.numerator) > 2**31:
                return None
            out[i, j] = v.numerator
    return out


def _dense_map(ctx: EvalContext, name: str) -> np.ndarray | None:
    key = ("map", name)
    if key not in ctx._dense:
        ctx._dense[key] = _int_matrix(ctx.maps[name].entries)
    return ctx._dense[key]


def _dense_op(ctx: EvalContext, name: str) -> np.ndarray | None:
    key = ("op", name)
    if key not in ctx._dense:
        op = ctx.ops[name]
        shape = tuple(sp.dim for sp in op.arg_spaces) + (op.result_space.dim,)
        arr = np.zeros(shape, dtype=np.int64)
        ok = True
        for args, coeffs in op.constants.items():
            for k, v in coeffs.items():
                if v.denominator != 1 or abs(v.numerator) > 2**31:
                    ok = False
                    break
                arr[args + (k,)] = v.numerator
            if not ok:
                break
        ctx._dense[key] = arr if ok else None
    return ctx._dense[key]


def _dense_eps(ctx: EvalContext, key_a: str, key_b: str) -> np.ndarray | None:
    key = ("eps", key_a, key_b)
    if key not in ctx._dense:
        ctx._dense[key] = _int_matrix(ctx.eps_table(key_a, key_b))
    return ctx._dense[key]


class _Overflow(Exception):
    pass


class _Compiler:
    """Evaluates one side to an int64 tensor over (slot axes..., component).

    Every intermediate is mirrored by a float64 bound computed from absolute
    values; the compilation aborts if any bound approaches int64 range.
    """

    def __init__(self, ax: Axiom, ctx: EvalContext, dims: tuple[int, ...]):
        self.ax = ax
        self.ctx = ctx
        self.dims = dims

    def _track(self, arr: np.ndarray, bound: np.ndarray):
        if float(bound.max(initial=0.0)) > _BOUND_LIMIT:
            raise _Overflow
        return arr, bound

    def expr(self, e: Expr):
        """Returns (array, bound, slot_order); array axes = slots + component."""
        if isinstance(e, Var):
            dim = self.dims[e.slot]
            eye = np.eye(dim, dtype=np.int64)
            return eye, eye.astype(np.float64), (e.slot,)
        if isinstance(e, MapApp):
            arr, bound, slots = self.expr(e.arg)
            mat = _dense_map(self.ctx, e.name)
            if mat is None:
                raise _Overflow
            out = np.tensordot(arr, mat, axes=([arr.ndim - 1], [1]))
            bout = np.tensordot(bound, np.abs(mat).astype(np.float64),
                                axes=([bound.ndim - 1], [1]))
            self._track(out, bout)
            return out, bout, slots
        tensor = _dense_op(self.ctx, e.name)
        if tensor is None:
            raise _Overflow
        res = tensor
        bres = np.abs(tensor).astype(np.float64)
        res_slots: tuple[int, ...] = ()
        for a in e.args:
            arr, bound, slots = self.expr(a)
            axis = len(res_slots)
            res = np.tensordot(arr, res, axes=([arr.ndim - 1], [axis]))
            bres = np.tensordot(bound, bres, axes=([bound.ndim - 1], [axis]))
            self._track(res, bres)
            res_slots = slots + res_slots
        return res, bres, res_slots

    def side(self, terms) -> tuple[np.ndarray, np.ndarray]:
        nslots = len(self.ax.slots)
        out_dim = _common_space(self.ax, self.ctx).dim
        full_shape = self.dims + (out_dim,)
        total = np.zeros(full_shape, dtype=np.int64)
        btotal = np.zeros(full_shape, dtype=np.float64)
        for term in terms:
            arr, bound, slots = self.expr(term.expr)
            # reshape to the full slot layout (size-1 axes for absent slots)
            shape = [1] * nslots + [out_dim]
            perm = sorted(range(len(slots)), key=lambda k: slots[k])
            arr = np.transpose(arr, perm + [len(slots)])
            bound = np.transpose(bound, perm + [len(slots)])
            for s in sorted(slots):
                shape[s] = self.dims[s]
            arr = arr.reshape(shape)
            bound = bound.reshape(shape)
            coeff = term.coeff
            if coeff.denominator != 1:
                raise _Overflow
            arr = arr * np.int64(coeff.numerator)
            bound = bound * float(abs(coeff.numerator))
            for a_slots, b_slots in term.eps:
                for i in a_slots:
                    for j in b_slots:
                        mat = _dense_eps(self.ctx, self.ax.slots[i], self.ax.slots[j])
                        if mat is None:
                            raise _Overflow
                        fshape = [1] * (nslots + 1)
                        fshape[i] = self.dims[i]
                        fshape[j] = self.dims[j]
                        if i == j:
                            factor = np.diagonal(mat).copy().reshape(fshape)
                        elif i < j:
                            factor = mat.reshape(fshape)
                        else:
                            factor = mat.T.copy().reshape(fshape)
                        arr = arr * factor
                        bound = bound * np.abs(factor).astype(np.float64)
            self._track(arr, bound)
            total = total + arr
            btotal = btotal + bound
            self._track(total, btotal)
        return total, btotal


def _check_fast(ax: Axiom, ctx: EvalContext, dims: tuple[int, ...],
                domain: int) -> AxiomResult | None:
    try:
        compiler = _Compiler(ax, ctx, dims)
        lhs, _ = compiler.side(ax.lhs)
        rhs, _ = compiler.side(ax.rhs)
    except _Overflow:
        return None
    diff = lhs != rhs
    if not diff.any():
        return AxiomResult(ax.axiom_id, domain, True, None)
    first = np.argwhere(diff)[0]
    args = tuple(int(v) for v in first[:-1])
    exact_l, exact_r = evaluate_sides_at(ax, ctx, args)
    return AxiomResult(
        ax.axiom_id, domain, False,
        Witness(args=args, lhs=exact_l.coords, rhs=exact_r.coords),
    )


# ---------------------------------------------------------------------------
# entry points


def check_axiom(ax: Axiom, ctx: EvalContext, exact_only: bool = False) -> AxiomResult:
    ctx.guard_dims()
    dims = tuple(ctx.spaces[s].dim for s in ax.slots)
    domain = 1
    for d in dims:
        domain *= d
    if domain == 0:
        return AxiomResult(ax.axiom_id, 0, True, None)
    if not exact_only:
        result = _check_fast(ax, ctx, dims, domain)
        if result is not None:
            return result
    return _check_exact(ax, ctx, dims, domain)


def check_axioms(axioms, ctx: EvalContext, exact_only: bool = False):
    return [check_axiom(ax, ctx, exact_only=exact_only) for ax in axioms]
