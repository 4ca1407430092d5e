"""Finitely generated abelian grading groups, degrees and commutation factors.

A grading group is presented as Z^rank x Z/n_1 x ... x Z/n_k, so a degree is
a plain integer vector with the torsion coordinates reduced into [0, n_i).
A commutation factor (skew-symmetric bicharacter) is stored by its values on
the generators and extended biadditively.  All scalars are exact rationals;
bicharacters that would need irrational roots of unity are rejected by
validation with a dedicated diagnostic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import ShapeError
from .reporting import AxiomResult, CheckReport, Witness


@dataclass(frozen=True)
class GradingGroup:
    """Z^rank x prod Z/n_i; generator order: free generators first."""

    rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ShapeError("rank must be nonnegative")
        object.__setattr__(self, "torsion", tuple(int(n) for n in self.torsion))
        if any(n < 2 for n in self.torsion):
            raise ShapeError("torsion factors must be >= 2")

    @property
    def ngens(self) -> int:
        return self.rank + len(self.torsion)

    def reduce(self, coords: Sequence[int]) -> tuple[int, ...]:
        if len(coords) != self.ngens:
            raise ShapeError(
                f"degree needs {self.ngens} coordinates, got {len(coords)}"
            )
        free = tuple(int(c) for c in coords[: self.rank])
        tors = tuple(
            int(c) % n for c, n in zip(coords[self.rank :], self.torsion)
        )
        return free + tors

    def degree(self, *coords: int) -> "Degree":
        if len(coords) == 1 and isinstance(coords[0], (tuple, list)):
            coords = tuple(coords[0])
        return Degree(self, self.reduce(coords))

    @property
    def zero(self) -> "Degree":
        return Degree(self, (0,) * self.ngens)

    def generator(self, i: int) -> "Degree":
        coords = [0] * self.ngens
        coords[i] = 1
        return self.degree(*coords)

    def iter_degrees(self, box: int = 2) -> Iterator["Degree"]:
        """All degrees for torsion-only groups, else a [-box, box] coordinate box."""
        ranges = [range(-box, box + 1)] * self.rank + [range(n) for n in self.torsion]
        for coords in product(*ranges):
            yield Degree(self, self.reduce(coords))


@dataclass(frozen=True)
class Degree:
    """An element of a grading group, stored in reduced coordinates."""

    group: GradingGroup
    coords: tuple[int, ...]

    def __add__(self, other: "Degree") -> "Degree":
        if self.group != other.group:
            raise ShapeError("degrees belong to different grading groups")
        return Degree(
            self.group,
            self.group.reduce(tuple(a + b for a, b in zip(self.coords, other.coords))),
        )

    def __bool__(self) -> bool:
        return any(self.coords)

    def __repr__(self) -> str:
        return f"Degree{self.coords}"


def degree_add(a: Degree, b: Degree) -> Degree:
    return a + b


def degree_sum(group: GradingGroup, degrees: Iterable[Degree]) -> Degree:
    total = group.zero
    for d in degrees:
        total = total + d
    return total


@dataclass(frozen=True)
class Bicharacter:
    """Commutation factor on a grading group, given by generator values.

    eval(a, b) = prod_{i,j} gen_values[i][j] ** (a_i * b_j); biadditivity in
    each slot holds by construction, the remaining axioms (antisymmetry,
    torsion consistency, diagonal values +-1) are verified by ``validate``.
    """

    group: GradingGroup
    gen_values: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = self.group.ngens
        table = tuple(
            tuple(Fraction(v) for v in row) for row in self.gen_values
        )
        if len(table) != n or any(len(row) != n for row in table):
            raise ShapeError(
                f"bicharacter table must be {n}x{n} for this grading group"
            )
        if any(v == 0 for row in table for v in row):
            raise ShapeError("bicharacter values must be nonzero")
        object.__setattr__(self, "gen_values", table)

    def eval(self, a: Degree, b: Degree) -> Fraction:
        if a.group != self.group or b.group != self.group:
            raise ShapeError("degrees do not live over the bicharacter's group")
        result = Fraction(1)
        for i, ai in enumerate(a.coords):
            if not ai:
                continue
            for j, bj in enumerate(b.coords):
                if not bj:
                    continue
                result *= self.gen_values[i][j] ** (ai * bj)
        return result

    def validate(self) -> CheckReport:
        return validate_bicharacter(self)


def bicharacter_eval(eps: Bicharacter, a: Degree, b: Degree) -> Fraction:
    return eps.eval(a, b)


def trivial_bicharacter(group: GradingGroup) -> Bicharacter:
    one = Fraction(1)
    n = group.ngens
    return Bicharacter(group, tuple(tuple(one for _ in range(n)) for _ in range(n)))


def _scalar_witness(args: tuple[int, ...], lhs: Fraction, rhs: Fraction) -> Witness:
    return Witness(args=args, lhs=(lhs,), rhs=(rhs,))


def validate_bicharacter(eps: Bicharacter) -> CheckReport:
    """Check antisymmetry on generators, torsion consistency and diagonal signs.

    Failures are report entries with witnesses, never exceptions.  Torsion
    consistency over the rationals forces the value on an order-n generator
    pair to be 1 (n odd) or +-1 (n even); anything else would require an
    irrational root of unity, which the engine deliberately does not model.
    """
    group = eps.group
    n = group.ngens
    one = Fraction(1)

    entries = []

    anti = None
    for i in range(n):
        for j in range(n):
            prod_ = eps.gen_values[i][j] * eps.gen_values[j][i]
            if prod_ != one and anti is None:
                anti = _scalar_witness((i, j), prod_, one)
    entries.append(AxiomResult("bic.antisymmetry", n * n, anti is None, anti))

    orders = [0] * group.rank + list(group.torsion)
    tors = None
    for i in range(n):
        ni = orders[i]
        if not ni:
            continue
        for j in range(n):
            for value, args in (
                (eps.gen_values[i][j], (i, j)),
                (eps.gen_values[j][i], (j, i)),
            ):
                if value**ni != one and tors is None:
                    tors = _scalar_witness(args, value**ni, one)
    entries.append(
        AxiomResult(
            "bic.torsion",
            2 * n * len(group.torsion),
            tors is None,
            tors,
            note=(
                ""
                if tors is None
                else "value on a torsion generator must be a rational root of "
                "unity: 1 for odd order, +-1 for even order"
            ),
        )
    )

    diag = None
    for i in range(n):
        v = eps.gen_values[i][i]
        if v != one and v != -one:
            diag = _scalar_witness((i, i), v, one)
            break
    entries.append(AxiomResult("bic.diagonal", n, diag is None, diag))

    return CheckReport(tuple(entries))
