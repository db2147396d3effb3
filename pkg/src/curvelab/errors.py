"""Exception types shared across curvelab."""


class CurvelabError(Exception):
    """Base class for all curvelab errors."""


class NoPantsDecomposition(CurvelabError):
    """The surface has no pants decomposition (Euler characteristic >= 0)."""


class OutOfHypothesis(CurvelabError):
    """A closed-form statement was requested outside its hypotheses."""


class Disconnected(CurvelabError):
    """A pants graph violates the connectivity invariant."""


class WrongTriangulation(CurvelabError):
    """Curve data refers to a different triangulation than expected."""


class NotConnected(CurvelabError):
    """A normal curve operation needs a single component."""


class NotEssential(CurvelabError):
    """An operation requires essential curves."""


class IncompatibleSupport(CurvelabError):
    """A mapping class generator cannot be realised on this model."""


class NotAPantsDecomposition(CurvelabError):
    """A clique was expected to be a true pants decomposition."""


class ZeroIntersection(CurvelabError):
    """Small intersection is only defined for curves with i != 0."""


class PropagatorHypothesisViolated(CurvelabError):
    """A search propagator was requested outside its surface hypothesis."""


class UnknownFixture(CurvelabError):
    """No fixture is registered under the requested name."""


class FormatError(CurvelabError):
    """A text-format file could not be parsed."""
