"""curvelab: computable combinatorics of curves on nonorientable surfaces.

The package enumerates pants decompositions of N_{g,n} as decorated
trivalent graphs, realises isotopy classes of simple closed curves as
normal coordinates on fixed model triangulations, computes exact geometric
intersection numbers with an independent double-cover cross-check, and
searches finite portions of the curve complex for injective simplicial
self-maps together with geometricity certificates.
"""

from .errors import (
    CurvelabError,
    Disconnected,
    FormatError,
    IncompatibleSupport,
    NoPantsDecomposition,
    NotAPantsDecomposition,
    NotConnected,
    NotEssential,
    OutOfHypothesis,
    PropagatorHypothesisViolated,
    UnknownFixture,
    WrongTriangulation,
    ZeroIntersection,
)
from .surface_core import (
    DimensionRange,
    PieceSpec,
    SurfaceSpec,
    euler_characteristic,
    max_simplex_dimension_range,
    pants_count,
    top_census_counts,
)

__version__ = "0.1.0"
