"""Surface invariants and closed-form dimension/census formulas.

A ``SurfaceSpec`` records a compact connected nonorientable surface by its
nonorientable genus ``g`` (number of cross-caps) and number of boundary
circles ``n``.  The closed forms implemented here are the maximal-simplex
dimension range and the top-dimensional curve census; both are stated only
for ``g >= 2`` (and not for the closed genus-2 surface), so the operations
refuse other inputs rather than guessing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NoPantsDecomposition, OutOfHypothesis

__all__ = [
    "SurfaceSpec",
    "DimensionRange",
    "PieceSpec",
    "euler_characteristic",
    "pants_count",
    "max_simplex_dimension_range",
    "top_census_counts",
]


@dataclass(frozen=True, order=True)
class SurfaceSpec:
    """A nonorientable surface: ``genus`` cross-caps, ``boundary`` circles."""

    genus: int
    boundary: int = 0

    def __post_init__(self):
        if self.genus < 1:
            raise ValueError("nonorientable genus must be >= 1, got %r" % (self.genus,))
        if self.boundary < 0:
            raise ValueError("boundary count must be >= 0, got %r" % (self.boundary,))

    @property
    def chi(self) -> int:
        return 2 - self.genus - self.boundary

    @property
    def parity_r(self) -> int:
        """The parameter r with g = 2r+1 (g odd) or g = 2r (g even)."""
        return self.genus // 2

    def __str__(self):
        return "N%d.%d" % (self.genus, self.boundary)


@dataclass(frozen=True)
class DimensionRange:
    """Dimensions of maximal simplices: every q with ``lo <= q <= hi``."""

    r: int
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("empty dimension range")
        if self.hi - self.lo != self.r:
            raise ValueError("dimension range must have width r")

    def as_set(self) -> set[int]:
        return set(range(self.lo, self.hi + 1))


@dataclass(frozen=True, order=True)
class PieceSpec:
    """A (possibly orientable) homeomorphism type produced by cutting.

    ``genus`` uses the orientable convention when ``orientable`` is true and
    counts cross-caps otherwise.
    """

    orientable: bool
    genus: int
    boundary: int

    @property
    def chi(self) -> int:
        if self.orientable:
            return 2 - 2 * self.genus - self.boundary
        return 2 - self.genus - self.boundary

    def as_surface_spec(self) -> SurfaceSpec:
        if self.orientable:
            raise ValueError("orientable piece is not a SurfaceSpec")
        return SurfaceSpec(self.genus, self.boundary)

    def __str__(self):
        kind = "S" if self.orientable else "N"
        return "%s%d.%d" % (kind, self.genus, self.boundary)


def euler_characteristic(s: SurfaceSpec) -> int:
    """Euler characteristic 2 - g - n."""
    return s.chi


def pants_count(s: SurfaceSpec) -> int:
    """Number of pairs of pants in any pants decomposition of ``s``.

    Each pair of pants has Euler characteristic -1 and the curves carry none,
    so the count is forced to be ``-chi = g + n - 2``.  Raises
    :class:`NoPantsDecomposition` when ``chi >= 0``.
    """
    if s.chi >= 0:
        raise NoPantsDecomposition(
            "%s has chi = %d >= 0, no pants decomposition exists" % (s, s.chi)
        )
    return -s.chi


def max_simplex_dimension_range(s: SurfaceSpec) -> DimensionRange:
    """Closed-form range of maximal-simplex dimensions for g >= 2.

    For g = 2r+1 the range is [3r+n-2, 4r+n-2]; for g = 2r it is
    [3r+n-4, 4r+n-4].  The closed genus-2 surface and all genus-1 surfaces
    are outside the hypothesis (use the census enumeration for those).
    """
    g, n = s.genus, s.boundary
    if g < 2 or (g, n) == (2, 0):
        raise OutOfHypothesis(
            "dimension-range formula needs g >= 2 and (g,n) != (2,0); got %s" % s
        )
    r = s.parity_r
    if g % 2 == 1:
        return DimensionRange(r, 3 * r + n - 2, 4 * r + n - 2)
    return DimensionRange(r, 3 * r + n - 4, 4 * r + n - 4)


def top_census_counts(s: SurfaceSpec) -> tuple[int, int]:
    """Curve census of a top-dimensional decomposition: (one_sided, separating).

    Every curve of a top-dimensional decomposition is one-sided with
    nonorientable complement or separating; there are exactly g one-sided
    curves and 2r+n-2 (g = 2r+1) resp. 2r+n-3 (g = 2r) separating ones.
    """
    g, n = s.genus, s.boundary
    if g < 2 or not ((g, n) == (3, 0) or g + n >= 4):
        raise OutOfHypothesis(
            "census formula needs g >= 2 and ((g,n) = (3,0) or g+n >= 4); got %s" % s
        )
    r = s.parity_r
    separating = 2 * r + n - 2 if g % 2 == 1 else 2 * r + n - 3
    return g, separating
