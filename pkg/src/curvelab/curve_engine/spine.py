"""Dual-graph spine presentations of model fundamental groups.

The dual graph of a model (triangles as nodes, interior edges as links)
carries every traced curve as a closed walk.  With a spanning tree fixed,
non-tree links become free generators.  On bordered models the spine is a
deformation retract, so cyclically reduced walk words classify free
homotopy (hence isotopy classes of simple closed curves).  On closed
models the presentation acquires the vertex-link relator; for the Klein
bottle the group is Z semidirect Z and conjugacy is decided exactly
through an explicit isomorphism.
"""

from __future__ import annotations

from functools import lru_cache

from .triangulation import Triangulation

__all__ = [
    "Spine",
    "spine_of",
    "reduce_word",
    "reduce_cyclic",
    "klein_conjugacy_key",
]


class Spine:
    def __init__(self, tri: Triangulation):
        self.tri = tri
        parent = {0: None}
        tree = set()
        order = [0]
        idx = 0
        while idx < len(order):
            t = order[idx]
            idx += 1
            for e in tri.interior_edges:
                (a, _), (b, _) = tri.edge_sides[e]
                if a == t and b not in parent:
                    parent[b] = e
                    tree.add(e)
                    order.append(b)
                elif b == t and a not in parent:
                    parent[a] = e
                    tree.add(e)
                    order.append(a)
        self.tree_edges = tree
        self.generators = tuple(
            e for e in tri.interior_edges if e not in tree
        )
        self.gen_index = {e: i for i, e in enumerate(self.generators)}

    def word_of_walk(self, walk) -> tuple[int, ...]:
        """Word from a cyclic (edge, direction) walk.

        Letters are nonzero ints: +-(i+1) for generator i; tree edges
        contribute nothing.
        """
        word = []
        for edge, direction in walk:
            if edge in self.gen_index:
                g = self.gen_index[edge] + 1
                word.append(g if direction > 0 else -g)
        return tuple(word)


@lru_cache(maxsize=None)
def _spine_cached(name, key):
    from .triangulation import model_surface, parse_model_key

    s = parse_model_key(name)
    return Spine(model_surface(s.genus, s.boundary))


def spine_of(tri: Triangulation) -> Spine:
    return _spine_cached(tri.name, tri.num_edges)


def reduce_word(word):
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def reduce_cyclic(word):
    w = list(reduce_word(word))
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    return tuple(w)


# -- Klein bottle group: Z semidirect Z ------------------------------------
#
# K = <alpha, tau | tau alpha tau^-1 = alpha^-1>, elements (m, n) = alpha^m
# tau^n with (m, n)(m', n') = (m + (-1)^n m', n + n').


def _k_mul(x, y):
    m, n = x
    m2, n2 = y
    return (m + (m2 if n % 2 == 0 else -m2), n + n2)


def _k_inv(x):
    m, n = x
    return ((-m if n % 2 == 0 else m), -n)


def _k_eval(images, word):
    out = (0, 0)
    for letter in word:
        g = images[abs(letter) - 1]
        out = _k_mul(out, g if letter > 0 else _k_inv(g))
    return out


def _k_conjugacy_key(x):
    """Conjugacy-up-to-inversion invariant in the Klein group."""
    m, n = x
    if n % 2:
        return ("odd", m % 2, abs(n))
    return ("even", abs(m), abs(n))


def _vertex_link_relator(tri, spine):
    """Relator word: the interior vertex link read as a dual walk."""
    from .normal import _vertex_links

    links = _vertex_links(tri)
    if len(links) != 1:
        raise ValueError("expected exactly one interior vertex")
    _, ends = links[0]
    walk = [(edge, direction) for edge, _, direction in ends]
    return spine.word_of_walk(walk)


@lru_cache(maxsize=None)
def _klein_images(name):
    """Images of the spine generators in K, verified on the relator."""
    from .triangulation import model_surface, parse_model_key

    s = parse_model_key(name)
    if (s.genus, s.boundary) != (2, 0):
        raise ValueError("Klein machinery only applies to N2.0")
    tri = model_surface(2, 0)
    spine = spine_of(tri)
    if len(spine.generators) != 2:
        raise AssertionError("Klein spine should have 2 generators")
    relator = _vertex_link_relator(tri, spine)
    candidates = [
        (m, n) for m in range(-2, 3) for n in range(-2, 3) if (m, n) != (0, 0)
    ]
    for g1 in candidates:
        for g2 in candidates:
            images = (g1, g2)
            if _k_eval(images, relator) != (0, 0):
                continue
            if _generates_klein(images):
                return images
    raise AssertionError("no Klein homomorphism found for the model relator")


def _generates_klein(images):
    """Breadth-first check that the images generate alpha and tau."""
    gens = list(images) + [_k_inv(g) for g in images]
    seen = {(0, 0)}
    frontier = [(0, 0)]
    for _ in range(8):
        nxt = []
        for x in frontier:
            for g in gens:
                y = _k_mul(x, g)
                if abs(y[0]) > 8 or abs(y[1]) > 8:
                    continue
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return (1, 0) in seen and (0, 1) in seen


def klein_conjugacy_key(tri, component):
    """Exact isotopy key of a traced curve on the Klein model."""
    spine = spine_of(tri)
    word = spine.word_of_walk(component.edge_walk())
    x = _k_eval(_klein_images(tri.name), word)
    return _k_conjugacy_key(x)
