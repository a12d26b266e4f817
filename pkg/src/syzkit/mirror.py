"""SYZ mirror of a smoothing: wall factors, the defining function g, the disc
potential, and the open-invariant bookkeeping per chamber.

Symplectic areas and holonomies are replaced by the formal variables z0 and
z^v, so generating functions live in the exact Laurent ring; the chamber
position is the single integer l between -1 (below all walls) and p (above
all walls).
"""

import warnings
from dataclasses import dataclass
from itertools import product
from typing import NamedTuple

from .algebra import LaurentPolynomial, newton_polytope
from .errors import ShapeMismatchError
from .lattice import IntVec, UnimodularSimplex
from .minkowski import MinkowskiDecomposition

SECTOR_D0 = "D0"
SECTOR_DINF = "Dinf"
SECTOR_NONE = "none"

_SECTORS = (SECTOR_D0, SECTOR_DINF, SECTOR_NONE)


@dataclass(frozen=True)
class DiscClass:
    """Disc class: boundary sector plus the wall multiplicity table n^i_j.

    Classes in the D0 or Dinf sector have Maslov index two; sector "none"
    marks a bare Maslov-zero combination.
    """

    sector: str
    multiplicities: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.sector not in _SECTORS:
            raise ValueError(f"sector must be one of {_SECTORS}")
        rows = tuple(tuple(int(x) for x in row) for row in self.multiplicities)
        object.__setattr__(self, "multiplicities", rows)
        for row in rows:
            if any(x < 0 for x in row):
                raise ValueError("multiplicities must be nonnegative")

    @property
    def maslov_index(self) -> int:
        return 2 if self.sector in (SECTOR_D0, SECTOR_DINF) else 0

    def to_json_dict(self) -> dict:
        return {
            "sector": self.sector,
            "multiplicities": [list(row) for row in self.multiplicities],
        }

    @staticmethod
    def from_json_dict(data: dict) -> "DiscClass":
        return DiscClass(
            data["sector"], tuple(tuple(row) for row in data["multiplicities"])
        )


@dataclass(frozen=True, eq=True)
class GWTable:
    """Nonzero one-pointed invariants n_v indexed by lattice points."""

    entries: dict

    def __post_init__(self):
        clean = {}
        for point, n in dict(self.entries).items():
            n = int(n)
            if n <= 0:
                raise ValueError(f"invariant at {point} must be a positive integer")
            clean[tuple(int(x) for x in point)] = n
        object.__setattr__(self, "entries", clean)

    def count(self, point) -> int:
        return self.entries.get(tuple(point), 0)

    def __getitem__(self, point) -> int:
        return self.count(point)

    def points(self) -> list[IntVec]:
        return sorted(self.entries)

    def total(self) -> int:
        return sum(self.entries.values())

    def to_json_dict(self) -> dict:
        return {
            "entries": [{"point": list(v), "n": self.entries[v]} for v in self.points()]
        }


class SYZMirror(NamedTuple):
    factored: tuple[LaurentPolynomial, ...]
    expanded: LaurentPolynomial
    table: GWTable


def wall_factor(summand: UnimodularSimplex) -> LaurentPolynomial:
    """The wall-crossing function 1 + sum of z^u over the summand's generators."""
    terms = {(0,) * summand.dim: 1}
    for u in summand.generators:
        terms[u] = 1
    return LaurentPolynomial(summand.dim, terms)


def syz_mirror(decomposition: MinkowskiDecomposition) -> SYZMirror:
    """Wall factors in summand order, their exact product g, and the invariant table.

    The Newton polytope of the product is the decomposition's polytope, and
    the table holds the (positive integer) coefficients of g.
    """
    d = decomposition.polytope.dim
    factored = tuple(wall_factor(s) for s in decomposition.summands)
    expanded = LaurentPolynomial.constant(d, 1)
    for f in factored:
        expanded = expanded * f
    entries = {}
    for v, q in expanded.rational_terms().items():
        assert q.denominator == 1
        entries[v] = q.numerator
    table = GWTable(entries)
    assert newton_polytope(expanded) == decomposition.polytope
    return SYZMirror(factored, expanded, table)


def disc_potential(decomposition: MinkowskiDecomposition) -> LaurentPolynomial:
    """z0 times the expanded mirror; term exponents are (1, v)."""
    return syz_mirror(decomposition).expanded.prepend_variable(1)


def _check_chamber(decomposition: MinkowskiDecomposition, chamber: int) -> None:
    if not -1 <= chamber <= decomposition.p:
        raise ValueError(
            f"chamber {chamber} outside -1..{decomposition.p}"
        )


def _check_shape(decomposition: MinkowskiDecomposition, beta: DiscClass) -> None:
    ks = decomposition.ks
    rows = beta.multiplicities
    if len(rows) != len(ks) or any(len(row) != k for row, k in zip(rows, ks)):
        raise ShapeMismatchError(
            "multiplicity table shape does not match the decomposition"
        )


def gw_invariant(
    decomposition: MinkowskiDecomposition, chamber: int, beta: DiscClass
) -> int:
    """One-pointed invariant of the class: 1 when each wall contributes at most
    one unit and only walls on the class's side of the fiber are touched.

    D0 classes may touch walls i <= chamber only; Dinf classes walls
    i > chamber only.  Maslov-zero classes always count 0.
    """
    _check_shape(decomposition, beta)
    _check_chamber(decomposition, chamber)
    if beta.sector == SECTOR_NONE:
        warnings.warn(
            "one-pointed invariants are defined for Maslov-index-two classes; "
            "a Maslov-zero class counts 0",
            stacklevel=2,
        )
        return 0
    lower = beta.sector == SECTOR_D0
    for i, row in enumerate(beta.multiplicities):
        touched = sum(row)
        if touched > 1:
            return 0
        if touched:
            if lower and i > chamber:
                return 0
            if not lower and i <= chamber:
                return 0
    return 1


def enumerate_gw_classes(
    decomposition: MinkowskiDecomposition, chamber: int, sector: str
) -> list[DiscClass]:
    """All classes in the sector with invariant 1, in deterministic order.

    The count is the product of (1 + k_i) over the walls on the sector's side
    of the fiber.
    """
    if sector not in (SECTOR_D0, SECTOR_DINF):
        raise ValueError("sector must be 'D0' or 'Dinf'")
    _check_chamber(decomposition, chamber)
    lower = sector == SECTOR_D0
    options = []
    for i, k in enumerate(decomposition.ks):
        zero = (0,) * k
        active = (i <= chamber) if lower else (i > chamber)
        if active:
            rows = [zero] + [
                tuple(1 if j == t else 0 for j in range(k)) for t in range(k)
            ]
        else:
            rows = [zero]
        options.append(rows)
    return [DiscClass(sector, combo) for combo in product(*options)]


def chamber_uv(
    decomposition: MinkowskiDecomposition, chamber: int
) -> tuple[LaurentPolynomial, LaurentPolynomial]:
    """Generating functions of the two sectors for a fiber in the given chamber.

    u collects z0 times the wall factors below the fiber, v collects z0^-1
    times those above; their product is the expanded mirror with the z0
    exponent cancelled.
    """
    _check_chamber(decomposition, chamber)
    d = decomposition.polytope.dim
    low = LaurentPolynomial.constant(d, 1)
    high = LaurentPolynomial.constant(d, 1)
    for i, s in enumerate(decomposition.summands):
        if i <= chamber:
            low = low * wall_factor(s)
        else:
            high = high * wall_factor(s)
    return low.prepend_variable(1), high.prepend_variable(-1)
