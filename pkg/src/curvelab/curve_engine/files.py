"""Text formats for curves and the model registry keys."""

from __future__ import annotations

from ..errors import FormatError
from .normal import NormalCurve
from .triangulation import Triangulation, model_surface, parse_model_key

__all__ = ["curve_to_text", "curve_from_text", "model_for_curve"]


def curve_to_text(curve: NormalCurve) -> str:
    lines = ["model %s" % curve.model]
    for e, w in enumerate(curve.weights):
        if w:
            lines.append("w e%d %d" % (e, w))
    return "\n".join(lines) + "\n"


def curve_from_text(text: str) -> NormalCurve:
    model = None
    weights = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "model" and len(parts) == 2:
            model = parts[1]
        elif parts[0] == "w" and len(parts) == 3:
            if not parts[1].startswith("e"):
                raise FormatError("bad edge id %r" % (parts[1],))
            try:
                e = int(parts[1][1:])
                w = int(parts[2])
            except ValueError:
                raise FormatError("bad weight line %r" % (line,)) from None
            if w < 0:
                raise FormatError("negative weight in %r" % (line,))
            weights[e] = w
        else:
            raise FormatError("bad curve record %r" % (line,))
    if model is None:
        raise FormatError("curve file lacks a model line")
    s = parse_model_key(model)
    tri = model_surface(s.genus, s.boundary)
    vec = [0] * tri.num_edges
    for e, w in weights.items():
        if not 0 <= e < tri.num_edges:
            raise FormatError("edge id e%d out of range for %s" % (e, model))
        vec[e] = w
    return NormalCurve(tri.name, tuple(vec))


def model_for_curve(curve: NormalCurve) -> Triangulation:
    s = parse_model_key(curve.model)
    return model_surface(s.genus, s.boundary)
