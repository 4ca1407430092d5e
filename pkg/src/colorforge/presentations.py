"""Algebra presentations: a graded space, a commutation factor, two twisting
maps and a named family of operations, one of six recognised shapes."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .errors import ShapeError
from .evaluate import EvalContext
from .grading import Bicharacter
from .linalg import EvenLinearMap, GradedSpace, MultiOp, check_even, check_grading, identity_map
from .reporting import AxiomResult, CheckReport

KIND_OPS: dict[str, tuple[str, ...]] = {
    "bihom-associative": ("mu",),
    "3-bihom-lie": ("bracket3",),
    "nc-3-bihom-poisson": ("bracket3", "mu"),
    "3-bihom-pre-lie": ("bracket3_pre",),
    "bihom-dendriform": ("prec", "succ"),
    "nc-3-bihom-pre-poisson": ("bracket3_pre", "prec", "succ"),
}

OP_ARITIES: dict[str, int] = {
    "mu": 2,
    "bracket3": 3,
    "bracket3_pre": 3,
    "prec": 2,
    "succ": 2,
    "l": 2,
    "r": 2,
    "rho": 3,
}


@dataclass(frozen=True, eq=False)
class AlgebraPresentation:
    space: GradedSpace
    eps: Bicharacter
    alpha: EvenLinearMap
    beta: EvenLinearMap
    ops: Mapping[str, MultiOp]
    kind: str
    commutative: bool = False
    meta: Mapping[str, object] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KIND_OPS:
            raise ShapeError(f"unknown presentation kind {self.kind!r}")
        expected = set(KIND_OPS[self.kind])
        if set(self.ops) != expected:
            raise ShapeError(
                f"kind {self.kind!r} needs operations {sorted(expected)}, "
                f"got {sorted(self.ops)}"
            )
        if self.eps.group != self.space.group:
            raise ShapeError("bicharacter group differs from the space's group")
        for f, name in ((self.alpha, "alpha"), (self.beta, "beta")):
            if f.domain != self.space or f.codomain != self.space:
                raise ShapeError(f"{name} must be an endomorphism of the space")
        for name, op in self.ops.items():
            if op.arity != OP_ARITIES[name]:
                raise ShapeError(f"operation {name!r} must have arity {OP_ARITIES[name]}")
            if any(sp != self.space for sp in op.arg_spaces) or op.result_space != self.space:
                raise ShapeError(f"operation {name!r} must act on the presentation space")

    def with_ops(self, **replacements: MultiOp) -> "AlgebraPresentation":
        ops = dict(self.ops)
        ops.update(replacements)
        return AlgebraPresentation(
            self.space, self.eps, self.alpha, self.beta, ops, self.kind,
            self.commutative, dict(self.meta),
        )

    def is_classical(self) -> bool:
        ident = identity_map(self.space)
        return self.alpha == ident and self.beta == ident


def make_presentation(space, eps, alpha, beta, kind, commutative=False, meta=None, **ops):
    return AlgebraPresentation(
        space, eps, alpha, beta, ops, kind, commutative, dict(meta or {})
    )


def context_for(p: AlgebraPresentation, extra_spaces=None, extra_maps=None,
                extra_ops=None) -> EvalContext:
    spaces = {"g": p.space}
    maps = {"alpha": p.alpha, "beta": p.beta}
    ops = dict(p.ops)
    if extra_spaces:
        spaces.update(extra_spaces)
    if extra_maps:
        maps.update(extra_maps)
    if extra_ops:
        ops.update(extra_ops)
    return EvalContext(spaces=spaces, maps=maps, ops=ops, eps=p.eps)


def validate_presentation(p: AlgebraPresentation) -> CheckReport:
    """Structural validation: bicharacter axioms, evenness, grading."""
    entries = list(p.eps.validate().entries)
    alpha = EvenLinearMap(p.alpha.domain, p.alpha.codomain, p.alpha.entries, label="alpha")
    beta = EvenLinearMap(p.beta.domain, p.beta.codomain, p.beta.entries, label="beta")
    entries.extend(check_even(alpha).entries)
    entries.extend(check_even(beta).entries)
    for name in sorted(p.ops):
        entries.append(check_grading(p.ops[name], name))
    return CheckReport(tuple(entries))
