"""Mapping class generators acting on normal curve classes.

Dehn twists act by splicing: put the twisting curve and the argument in
minimal position, replace every crossing by a detour that runs once around
the twisting curve (coherently with its stored orientation), and tighten
the resulting dual walk by free cancellation.  On the bordered models the
dual graph is a spine, so the reduced walk's edge counts are exactly the
canonical weights of the image class.

Triangulation automorphisms act by permuting edge weights; they realise
boundary permutations and the crosscap-slide-like symmetries the models
possess.  Twists on closed models and general crosscap slides are not
synthesised and raise :class:`IncompatibleSupport`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..errors import IncompatibleSupport
from .cutting import is_essential
from .intersection import geometric_intersection
from .normal import (
    NormalCurve,
    ONE_SIDED,
    TWO_SIDED,
    canonical_weights,
    check_reference,
    sidedness,
    trace,
    validate_weights,
)
from .triangulation import Triangulation

__all__ = [
    "MappingClassGenerator",
    "dehn_twist",
    "crosscap_slide",
    "boundary_permutation",
    "model_automorphisms",
    "automorphism_generators",
    "apply_generator",
    "generator_dictionary",
]

_EVEN_PERMS = ((0, 1, 2), (1, 2, 0), (2, 0, 1))
_ODD_PERMS = ((0, 2, 1), (2, 1, 0), (1, 0, 2))


@dataclass(frozen=True)
class MappingClassGenerator:
    """One generator: a Dehn twist or a model automorphism."""

    kind: str  # "dehn_twist" or "automorphism"
    name: str
    model: str
    twist_curve: NormalCurve | None = None
    direction: int = 0
    automorphism: tuple | None = None

    def __str__(self):
        return self.name


def _perm_parity(sigma):
    return 0 if sigma in _EVEN_PERMS else 1


@lru_cache(maxsize=None)
def _automorphisms_cached(name):
    from .triangulation import model_surface, parse_model_key

    s = parse_model_key(name)
    tri = model_surface(s.genus, s.boundary)
    sides_all = _EVEN_PERMS + _ODD_PERMS
    autos = []
    for u0 in range(tri.num_triangles):
        for sigma0 in sides_all:
            table = {0: (u0, sigma0)}
            stack = [0]
            ok = True
            while stack and ok:
                t = stack.pop()
                u, sigma = table[t]
                for i in range(3):
                    side = (t, i)
                    image = (u, sigma[i])
                    if side in tri.glue:
                        if image not in tri.glue:
                            ok = False
                            break
                        (t2, i2), flag = tri.glue[side]
                        (v, j2), flag2 = tri.glue[image]
                        want_parity = (
                            _perm_parity(sigma)
                            ^ (0 if flag == flag2 else 1)
                        )
                        cand = None
                        for tau in sides_all:
                            if tau[i2] == j2 and _perm_parity(tau) == want_parity:
                                cand = tau
                                break
                        if cand is None:
                            ok = False
                            break
                        if t2 in table:
                            if table[t2] != (v, cand):
                                ok = False
                                break
                        else:
                            table[t2] = (v, cand)
                            stack.append(t2)
                    else:
                        if image in tri.glue:
                            ok = False
                            break
            if not ok or len(table) != tri.num_triangles:
                continue
            if len({u for u, _ in table.values()}) != tri.num_triangles:
                continue
            key = tuple(table[t] for t in range(tri.num_triangles))
            if key not in autos:
                autos.append(key)
    autos.sort()
    # edge permutation per automorphism
    out = []
    for key in autos:
        eperm = [None] * tri.num_edges
        consistent = True
        for t in range(tri.num_triangles):
            u, sigma = key[t]
            for i in range(3):
                src = tri.side_edge[(t, i)]
                dst = tri.side_edge[(u, sigma[i])]
                if eperm[src] is None:
                    eperm[src] = dst
                elif eperm[src] != dst:
                    consistent = False
        if consistent and len(set(eperm)) == tri.num_edges:
            out.append((key, tuple(eperm)))
    return tuple(out)


def model_automorphisms(tri: Triangulation):
    """All triangulation automorphisms as (triangle table, edge perm)."""
    return list(_automorphisms_cached(tri.name))


def automorphism_generators(tri: Triangulation):
    """Non-identity automorphisms as generators, deterministic order."""
    gens = []
    for idx, (key, eperm) in enumerate(model_automorphisms(tri)):
        if eperm == tuple(range(tri.num_edges)):
            continue
        gens.append(
            MappingClassGenerator(
                kind="automorphism",
                name="aut%d" % idx,
                model=tri.name,
                automorphism=(key, eperm),
            )
        )
    return gens


def dehn_twist(tri: Triangulation, curve: NormalCurve, direction: int) -> MappingClassGenerator:
    """Twist about a two-sided essential curve, direction relative to its trace."""
    check_reference(tri, curve)
    if direction not in (1, -1):
        raise ValueError("twist direction must be +1 or -1")
    if not tri.boundary_sides:
        raise IncompatibleSupport(
            "dehn twists are only realised on bordered models; use model"
            " automorphisms on %s" % tri.name
        )
    canon = NormalCurve(tri.name, canonical_weights(tri, curve.weights))
    if len(trace(tri, canon.weights)) != 1 or not is_essential(tri, canon):
        raise IncompatibleSupport("twist curve must be a valid essential curve")
    if sidedness(tri, canon) != TWO_SIDED:
        raise IncompatibleSupport("twist curve must be two-sided")
    return MappingClassGenerator(
        kind="dehn_twist",
        name="twist%s:%s" % ("+" if direction > 0 else "-", canon.ref()),
        model=tri.name,
        twist_curve=canon,
        direction=direction,
    )


def crosscap_slide(tri: Triangulation, one_sided: NormalCurve, two_sided: NormalCurve):
    """Y-homeomorphism generator; not synthesised on these models."""
    raise IncompatibleSupport(
        "crosscap slides are not synthesised; model automorphisms provide the"
        " crosscap symmetries available on %s" % tri.name
    )


def boundary_permutation(tri: Triangulation, perm: tuple) -> MappingClassGenerator:
    """Automorphism inducing the requested permutation of boundary circles."""
    circles = tri.boundary_circles()
    if len(perm) != len(circles) or sorted(perm) != list(range(len(circles))):
        raise ValueError("bad boundary permutation %r" % (perm,))
    side_circle = {}
    for ci, circle in enumerate(circles):
        for side in circle:
            side_circle[side] = ci
    for idx, (key, eperm) in enumerate(model_automorphisms(tri)):
        induced = {}
        good = True
        for ci, circle in enumerate(circles):
            t, i = circle[0]
            u, sigma = key[t]
            target = side_circle.get((u, sigma[i]))
            if target is None:
                good = False
                break
            induced[ci] = target
        if good and tuple(induced[ci] for ci in range(len(circles))) == tuple(perm):
            return MappingClassGenerator(
                kind="automorphism",
                name="aut%d" % idx,
                model=tri.name,
                automorphism=(key, eperm),
            )
    raise IncompatibleSupport(
        "no model automorphism of %s induces boundary permutation %r"
        % (tri.name, perm)
    )


# -- action -------------------------------------------------------------------


def _walk_of(comp):
    return [(e, 1 if fwd else -1) for e, _, _, fwd in comp.crossings]


def _reduce_walk(walk):
    """Cancel adjacent opposite crossings of one edge, cyclically."""
    out = list(walk)
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(out) - 1:
            if out[i][0] == out[i + 1][0] and out[i][1] == -out[i + 1][1]:
                del out[i : i + 2]
                changed = True
                i = max(i - 1, 0)
            else:
                i += 1
        while len(out) >= 2 and out[0][0] == out[-1][0] and out[0][1] == -out[-1][1]:
            out = out[1:-1]
            changed = True
    return out


def _apply_twist(tri, gen, c: NormalCurve) -> NormalCurve:
    tcurve = gen.twist_curve
    ov = geometric_intersection(tri, tcurve.weights, c.weights)
    if ov.count() == 0:
        return NormalCurve(tri.name, canonical_weights(tri, c.weights))
    comp_c = ov.comps_b[0]
    comp_t = ov.comps_a[0]
    walk_c = _walk_of(comp_c)
    walk_t = _walk_of(comp_t)
    Lc = len(comp_c.arcs)
    Lt = len(comp_t.arcs)
    # annulus framing of the two-sided twist curve: chart-compatibility sign
    # of each of its arcs, propagated through the gluing flags
    fsign = [1] * Lt
    for y in range(Lt - 1):
        _, _, flip, _ = comp_t.crossings[y]
        fsign[y + 1] = fsign[y] * (-1 if flip else 1)
    # crossings grouped by c-arc in traversal order; each carries the side
    # sign of the c-strand relative to the framed twist curve
    by_arc = {}
    for idx in ov.order["b"][0]:
        ra, rb, _, _, t = ov.crossings[idx]
        pa = ov._chord("a", ov.wa, ra[3])
        pb = ov._chord("b", ov.wb, rb[3])
        da = (pa[1][0] - pa[0][0], pa[1][1] - pa[0][1])
        db = (pb[1][0] - pb[0][0], pb[1][1] - pb[0][1])
        if ra[4] == 1:
            da = (-da[0], -da[1])
        if rb[4] == 1:
            db = (-db[0], -db[1])
        cross = da[0] * db[1] - da[1] * db[0]
        side = (1 if cross > 0 else -1) * fsign[ra[2]]
        by_arc.setdefault(rb[2], []).append((ra[2], side))
    spliced = []
    for x in range(Lc):
        for t_arc, side in by_arc.get(x, []):
            if gen.direction * side > 0:
                for k in range(Lt):
                    spliced.append(walk_t[(t_arc + k) % Lt])
            else:
                for k in range(Lt):
                    e, d = walk_t[(t_arc - 1 - k) % Lt]
                    spliced.append((e, -d))
        spliced.append(walk_c[x])
    reduced = _reduce_walk(spliced)
    vec = [0] * tri.num_edges
    for e, _ in reduced:
        vec[e] += 1
    vec = tuple(vec)
    if not validate_weights(tri, vec):
        raise AssertionError("twist image is not a valid normal vector")
    if len(trace(tri, vec)) != 1:
        raise AssertionError("twist image is not a single curve")
    return NormalCurve(tri.name, canonical_weights(tri, vec))


def apply_generator(tri: Triangulation, gen: MappingClassGenerator, c: NormalCurve) -> NormalCurve:
    """Canonical normal form of the image of ``c`` under the generator."""
    check_reference(tri, c)
    if gen.model != tri.name:
        raise IncompatibleSupport("generator lives on %r, curve on %r" % (gen.model, tri.name))
    if len(trace(tri, c.weights)) != 1:
        raise IncompatibleSupport("apply_generator needs a single curve")
    if gen.kind == "automorphism":
        _, eperm = gen.automorphism
        vec = [0] * tri.num_edges
        for e, w in enumerate(c.weights):
            vec[eperm[e]] = w
        return NormalCurve(tri.name, canonical_weights(tri, tuple(vec)))
    if gen.kind == "dehn_twist":
        return _apply_twist(tri, gen, c)
    raise IncompatibleSupport("unknown generator kind %r" % (gen.kind,))


def generator_dictionary(tri: Triangulation, twist_curves=()):
    """Deterministic generator list: twists (both directions) + symmetries."""
    gens = []
    if tri.boundary_sides:
        for curve in twist_curves:
            for direction in (1, -1):
                gens.append(dehn_twist(tri, curve, direction))
    gens.extend(automorphism_generators(tri))
    return gens
