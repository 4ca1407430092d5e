"""Graded spaces, even linear maps and structure-constant tensors, all exact.

Matrices act on coordinate columns: the image of basis vector e_i under a map
is the i-th column of its entry matrix.  Structure constants are stored
sparsely (only nonzero entries) but checks iterate densely over basis tuples;
at desk scale (dimension <= 12 under the guard) that is trivial.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product
from typing import Iterable, Mapping, Sequence

from .errors import ConflictingGeneratorsError, ShapeError, SingularMapError
from .grading import Bicharacter, Degree, GradingGroup, degree_sum
from .reporting import AxiomResult, CheckReport, Witness

Coeffs = Mapping[int, Fraction]


@dataclass(frozen=True)
class GradedSpace:
    """A space with a distinguished homogeneous basis, one degree per index."""

    group: GradingGroup
    degrees: tuple[Degree, ...]
    names: tuple[str, ...] = ()

    def __post_init__(self):
        if any(d.group != self.group for d in self.degrees):
            raise ShapeError("basis degrees must live over the space's group")
        if not self.names:
            object.__setattr__(
                self, "names", tuple(f"e{i+1}" for i in range(len(self.degrees)))
            )
        elif len(self.names) != len(self.degrees):
            raise ShapeError("one name per basis vector required")

    @property
    def dim(self) -> int:
        return len(self.degrees)

    def basis_vector(self, i: int) -> "Vector":
        coords = [Fraction(0)] * self.dim
        coords[i] = Fraction(1)
        return Vector(self, tuple(coords))

    def vector(self, coords: Sequence) -> "Vector":
        return Vector(self, tuple(Fraction(c) for c in coords))

    def zero_vector(self) -> "Vector":
        return Vector(self, (Fraction(0),) * self.dim)


@dataclass(frozen=True)
class Vector:
    space: GradedSpace
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coords) != self.space.dim:
            raise ShapeError("vector length does not match space dimension")
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def homogeneous_degree(self) -> Degree | None:
        """The common degree of the support, None if mixed; zero vector -> 0."""
        degs = {self.space.degrees[i] for i, c in enumerate(self.coords) if c}
        if not degs:
            return self.space.group.zero
        if len(degs) == 1:
            return degs.pop()
        return None

    def __add__(self, other: "Vector") -> "Vector":
        if other.space != self.space:
            raise ShapeError("vectors live in different spaces")
        return Vector(self.space, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Vector") -> "Vector":
        if other.space != self.space:
            raise ShapeError("vectors live in different spaces")
        return Vector(self.space, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def scale(self, c) -> "Vector":
        c = Fraction(c)
        return Vector(self.space, tuple(c * a for a in self.coords))


@dataclass(frozen=True)
class EvenLinearMap:
    """A linear map stored as an exact (codomain-dim x domain-dim) matrix.

    Degree-zero homogeneity is a check (``check_even``), not a constructor
    invariant, so deliberately broken maps can be used in mutation tests.
    """

    domain: GradedSpace
    codomain: GradedSpace
    entries: tuple[tuple[Fraction, ...], ...]
    label: str = ""

    def __post_init__(self):
        rows = tuple(tuple(Fraction(v) for v in row) for row in self.entries)
        if len(rows) != self.codomain.dim or any(
            len(row) != self.domain.dim for row in rows
        ):
            raise ShapeError(
                f"map {self.label!r}: entries must be "
                f"{self.codomain.dim}x{self.domain.dim}"
            )
        object.__setattr__(self, "entries", rows)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, EvenLinearMap)
            and self.domain == other.domain
            and self.codomain == other.codomain
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.domain, self.codomain, self.entries))

    def column(self, i: int) -> tuple[Fraction, ...]:
        return tuple(row[i] for row in self.entries)

    def apply(self, v: Vector) -> Vector:
        if v.space != self.domain:
            raise ShapeError(f"map {self.label!r} applied to a vector outside its domain")
        out = [Fraction(0)] * self.codomain.dim
        for i, x in enumerate(v.coords):
            if x:
                for k, row in enumerate(self.entries):
                    if row[i]:
                        out[k] += row[i] * x
        return Vector(self.codomain, tuple(out))

    def compose(self, other: "EvenLinearMap") -> "EvenLinearMap":
        """self after other."""
        if other.codomain != self.domain:
            raise ShapeError("composition shape mismatch")
        rows = tuple(
            tuple(
                sum(
                    (self.entries[k][m] * other.entries[m][i] for m in range(self.domain.dim)),
                    Fraction(0),
                )
                for i in range(other.domain.dim)
            )
            for k in range(self.codomain.dim)
        )
        return EvenLinearMap(other.domain, self.codomain, rows,
                             label=f"{self.label or '?'}∘{other.label or '?'}")

    def inverse(self) -> "EvenLinearMap":
        if self.domain.dim != self.codomain.dim:
            raise SingularMapError(self.label, f"map {self.label!r} is not square")
        n = self.domain.dim
        aug = [
            [Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(self.entries)
        ]
        for col in range(n):
            pivot = next((r for r in range(col, n) if aug[r][col]), None)
            if pivot is None:
                raise SingularMapError(self.label)
            aug[col], aug[pivot] = aug[pivot], aug[col]
            inv = Fraction(1) / aug[col][col]
            aug[col] = [x * inv for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        rows = tuple(tuple(row[n:]) for row in aug)
        return EvenLinearMap(self.codomain, self.domain, rows,
                             label=f"{self.label or '?'}⁻¹")

    def power(self, k: int) -> "EvenLinearMap":
        if self.domain != self.codomain:
            raise ShapeError("powers need an endomorphism")
        if k < 0:
            return self.inverse().power(-k)
        result = identity_map(self.domain, label="id")
        for _ in range(k):
            result = self.compose(result)
        return result


def identity_map(space: GradedSpace, label: str = "id") -> EvenLinearMap:
    n = space.dim
    return EvenLinearMap(
        space,
        space,
        tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)),
        label=label,
    )


def apply_map(f: EvenLinearMap, v: Vector) -> Vector:
    return f.apply(v)


def compose_maps(f: EvenLinearMap, g: EvenLinearMap) -> EvenLinearMap:
    return f.compose(g)


def invert_map(f: EvenLinearMap) -> EvenLinearMap:
    return f.inverse()


def maps_commute(f: EvenLinearMap, g: EvenLinearMap) -> bool:
    return f.compose(g) == g.compose(f)


def check_even(f: EvenLinearMap) -> CheckReport:
    """A map is even when entry (k, i) != 0 implies deg f_k == deg e_i."""
    witness = None
    for i in range(f.domain.dim):
        col = f.column(i)
        want = f.domain.degrees[i]
        bad = [k for k, v in enumerate(col) if v and f.codomain.degrees[k] != want]
        if bad:
            projected = tuple(
                v if f.codomain.degrees[k] == want else Fraction(0)
                for k, v in enumerate(col)
            )
            witness = Witness(args=(i,), lhs=col, rhs=projected)
            break
    label = f.label or "map"
    return CheckReport(
        (AxiomResult(f"even.{label}", f.domain.dim, witness is None, witness),)
    )


@dataclass(frozen=True, eq=False)
class MultiOp:
    """An arity-2 or arity-3 operation given by sparse structure constants.

    ``constants`` maps argument index tuples to ``{result index: coefficient}``.
    ``weight`` is a degree offset for the grading check; the operations here
    are all even, so it is zero throughout.
    """

    arity: int
    arg_spaces: tuple[GradedSpace, ...]
    result_space: GradedSpace
    constants: Mapping[tuple[int, ...], Coeffs]
    weight: Degree | None = None
    label: str = ""

    def __post_init__(self):
        if self.arity not in (2, 3):
            raise ShapeError("only arity 2 and 3 operations are supported")
        if len(self.arg_spaces) != self.arity:
            raise ShapeError("one argument space per arity slot required")
        cleaned: dict[tuple[int, ...], dict[int, Fraction]] = {}
        for args, coeffs in self.constants.items():
            args = tuple(int(a) for a in args)
            if len(args) != self.arity:
                raise ShapeError(f"constant key {args} does not match arity {self.arity}")
            for slot, (a, sp) in enumerate(zip(args, self.arg_spaces)):
                if not 0 <= a < sp.dim:
                    raise ShapeError(f"argument index {a} out of range in slot {slot}")
            entry = {
                int(k): Fraction(v)
                for k, v in coeffs.items()
                if Fraction(v)
            }
            for k in entry:
                if not 0 <= k < self.result_space.dim:
                    raise ShapeError(f"result index {k} out of range")
            if entry:
                cleaned[args] = entry
        object.__setattr__(self, "constants", cleaned)
        if self.weight is None:
            object.__setattr__(self, "weight", self.result_space.group.zero)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiOp)
            and self.arity == other.arity
            and self.arg_spaces == other.arg_spaces
            and self.result_space == other.result_space
            and self.constants == other.constants
        )

    def value(self, args: tuple[int, ...]) -> Vector:
        coeffs = self.constants.get(tuple(args), {})
        out = [Fraction(0)] * self.result_space.dim
        for k, v in coeffs.items():
            out[k] = v
        return Vector(self.result_space, tuple(out))

    def apply(self, vectors: Sequence[Vector]) -> Vector:
        if len(vectors) != self.arity:
            raise ShapeError(f"operation {self.label!r} expects {self.arity} arguments")
        for v, sp in zip(vectors, self.arg_spaces):
            if v.space != sp:
                raise ShapeError(f"operation {self.label!r}: argument space mismatch")
        supports = [
            [(i, c) for i, c in enumerate(v.coords) if c] for v in vectors
        ]
        out = [Fraction(0)] * self.result_space.dim
        for combo in product(*supports):
            args = tuple(i for i, _ in combo)
            coeffs = self.constants.get(args)
            if not coeffs:
                continue
            scalar = Fraction(1)
            for _, c in combo:
                scalar *= c
            for k, v in coeffs.items():
                out[k] += scalar * v
        return Vector(self.result_space, tuple(out))

    def scale(self, c) -> "MultiOp":
        c = Fraction(c)
        constants = {
            args: {k: c * v for k, v in coeffs.items()}
            for args, coeffs in self.constants.items()
        }
        return MultiOp(self.arity, self.arg_spaces, self.result_space, constants,
                       weight=self.weight, label=self.label)

    def is_zero(self) -> bool:
        return not self.constants


def apply_multiop(op: MultiOp, args: Sequence[Vector]) -> Vector:
    return op.apply(args)


def check_grading(op: MultiOp, op_name: str = "") -> AxiomResult:
    """Each constant must be homogeneous of the summed argument degree."""
    name = op_name or op.label or "op"
    witness = None
    group = op.result_space.group
    for args in sorted(op.constants):
        target = degree_sum(
            group,
            [sp.degrees[a] for a, sp in zip(args, op.arg_spaces)],
        ) + op.weight
        vec = op.value(args)
        bad = [k for k, c in enumerate(vec.coords) if c and op.result_space.degrees[k] != target]
        if bad:
            projected = tuple(
                c if op.result_space.degrees[k] == target else Fraction(0)
                for k, c in enumerate(vec.coords)
            )
            witness = Witness(args=args, lhs=vec.coords, rhs=projected)
            break
    domain = 1
    for sp in op.arg_spaces:
        domain *= sp.dim
    return AxiomResult(f"grading.{name}", domain, witness is None, witness)


def skew_extend_ternary(op: MultiOp, eps: Bicharacter) -> MultiOp:
    """Fill a generator-given ternary tensor by full Koszul antisymmetrization.

    Swapping two adjacent arguments multiplies the value by the negated
    commutation factor of their degrees.  The generators may contain at most
    one representative per orbit; a second one (even a numerically consistent
    duplicate) raises ``ConflictingGeneratorsError``, as does a generator that
    contradicts itself on a repeated-index orbit.
    """
    if op.arity != 3:
        raise ShapeError("skew extension is defined for ternary operations")
    space = op.arg_spaces[0]
    if any(sp != space for sp in op.arg_spaces):
        raise ShapeError("skew extension needs three equal argument spaces")

    full: dict[tuple[int, ...], dict[int, Fraction]] = {}
    orbit_owner: dict[tuple[int, ...], tuple[int, ...]] = {}

    for gen_args in sorted(op.constants):
        if gen_args in orbit_owner:
            raise ConflictingGeneratorsError(orbit_owner[gen_args], gen_args)
        gen_value = dict(op.constants[gen_args])
        # breadth-first over adjacent transpositions with Koszul factors
        seen: dict[tuple[int, ...], dict[int, Fraction]] = {gen_args: gen_value}
        frontier = [gen_args]
        while frontier:
            current = frontier.pop()
            value = seen[current]
            for pos in (0, 1):
                swapped = list(current)
                a, b = swapped[pos], swapped[pos + 1]
                swapped[pos], swapped[pos + 1] = b, a
                swapped = tuple(swapped)
                factor = -eps.eval(space.degrees[a], space.degrees[b])
                new_value = {k: factor * v for k, v in value.items()}
                if swapped in seen:
                    if seen[swapped] != new_value:
                        raise ConflictingGeneratorsError(
                            gen_args,
                            swapped,
                            message=(
                                f"orbit of {gen_args} assigns two different values "
                                f"at {swapped}; the generator violates skew-symmetry"
                            ),
                        )
                    continue
                seen[swapped] = new_value
                frontier.append(swapped)
        for args, value in seen.items():
            if args in orbit_owner:
                raise ConflictingGeneratorsError(orbit_owner[args], gen_args)
            orbit_owner[args] = gen_args
            value = {k: v for k, v in value.items() if v}
            if value:
                full[args] = value

    return MultiOp(3, op.arg_spaces, op.result_space, full,
                   weight=op.weight, label=op.label)
