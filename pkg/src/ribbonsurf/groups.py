"""Fundamental groups read off a filling map.

Collapsing a spanning tree leaves one generator per remaining edge and one
relator per face (the face word with tree letters erased), a presentation of
the fundamental group of the filled surface.  For the one-vertex petal maps
this is literally the genus-g surface presentation
<a1, b1, ..., ag, bg | a1 b1 a1' b1' ... ag bg ag' bg'>.

The word problem is decided by presentation shape: free presentations by
free reduction, genus 1 (the abelian a b a' b' relator) by exponent sums,
genus >= 2 by Dehn's algorithm, which is complete because the surface
relator satisfies the C'(1/6) small-cancellation condition (no two distinct
cyclic shifts of the relator or its inverse share a two-letter piece).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .errors import (
    EndpointMismatchError,
    PreconditionError,
    UnknownLabelError,
    UnsupportedPresentationError,
)
from .maps import RibbonMap
from .surfaces import standard_pair_labels, trace_faces

Letter = Tuple[str, int]


# -- free group words --------------------------------------------------------


def invert_word(word: Sequence[Letter]) -> tuple:
    return tuple((lab, -sign) for lab, sign in reversed(tuple(word)))


def free_reduce(word: Sequence[Letter]) -> tuple:
    """Cancel adjacent inverse pairs until none remain."""
    stack = []
    for lab, sign in word:
        if stack and stack[-1][0] == lab and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((lab, sign))
    return tuple(stack)


def cyclic_reduce(word: Sequence[Letter]) -> tuple:
    """Freely reduce, then strip inverse first/last pairs."""
    w = list(free_reduce(word))
    while len(w) > 1 and w[0][0] == w[-1][0] and w[0][1] == -w[-1][1]:
        w = w[1:-1]
    return tuple(w)


def exponent_sums(word: Sequence[Letter], generators: Sequence[str]) -> tuple:
    sums = dict.fromkeys(generators, 0)
    for lab, sign in word:
        sums[lab] += sign
    return tuple(sums[g] for g in generators)


# -- presentations -----------------------------------------------------------


@dataclass(frozen=True)
class Presentation:
    """Generators with formal inverses, and one relator word per defining
    relation.  ``genus_hint`` marks the standard genus-g surface shape so
    the solver can dispatch without re-deriving it."""

    generators: tuple
    relators: tuple
    genus_hint: Optional[int] = None

    def __post_init__(self):
        gens = set(self.generators)
        if len(gens) != len(self.generators):
            raise PreconditionError("duplicate generator names")
        for rel in self.relators:
            for lab, sign in rel:
                if lab not in gens:
                    raise UnknownLabelError(
                        f"relator uses unknown generator {lab!r}")

    @property
    def deficiency(self) -> int:
        return len(self.generators) - len(self.relators)


def _letter_names(k: int) -> list:
    if k <= 26:
        return [chr(ord("a") + i) for i in range(k)]
    return [f"x{i}" for i in range(1, k + 1)]


def free_presentation(rank: int) -> Presentation:
    if rank < 0:
        raise PreconditionError("rank must be >= 0")
    return Presentation(tuple(_letter_names(rank)), ())


def _commutator_product(generators: Sequence[str]) -> tuple:
    word = []
    for i in range(0, len(generators), 2):
        a, b = generators[i], generators[i + 1]
        word.extend(((a, 1), (b, 1), (a, -1), (b, -1)))
    return tuple(word)


def surface_group(g: int) -> Presentation:
    """The genus-g surface group; g = 0 is the empty presentation."""
    if g < 0:
        raise PreconditionError("genus must be >= 0")
    gens = tuple(standard_pair_labels(g))
    if g == 0:
        return Presentation((), (), genus_hint=0)
    return Presentation(gens, (_commutator_product(gens),), genus_hint=g)


def zxz_presentation() -> Presentation:
    """<a, b | a b a' b'>, the free abelian plane group Z x Z."""
    return surface_group(1)


def _surface_shape_genus(pres: Presentation) -> Optional[int]:
    """Genus g when the presentation is exactly the standard A_g shape."""
    n = len(pres.generators)
    if n % 2:
        return None
    if n == 0:
        return 0 if not pres.relators else None
    if len(pres.relators) != 1:
        return None
    if pres.relators[0] != _commutator_product(pres.generators):
        return None
    return n // 2


# -- the word problem --------------------------------------------------------


def solver_kind(pres: Presentation) -> str:
    """Which decision procedure fits: 'free', 'abelian', or 'dehn'.

    Raises UnsupportedPresentationError for any other shape, mirroring
    is_trivial_word's dispatch.
    """
    if not pres.relators:
        return "free"
    g = _surface_shape_genus(pres)
    if pres.genus_hint is not None and g != pres.genus_hint:
        raise UnsupportedPresentationError(
            "genus_hint does not match the presentation shape")
    if g == 1:
        return "abelian"
    if g is not None and g >= 2:
        return "dehn"
    raise UnsupportedPresentationError(
        "solver handles free and standard surface presentations only")


def _dehn_trivial(word: Sequence[Letter], relator: tuple) -> bool:
    """Dehn's algorithm: repeatedly replace a cyclic subword that covers
    more than half of a relator shift by the shorter complement."""
    big_r = len(relator)
    need = big_r // 2 + 1
    prefixes = {}
    for base in (relator, invert_word(relator)):
        for s in range(big_r):
            rot = base[s:] + base[:s]
            for length in range(need, big_r + 1):
                prefixes.setdefault(rot[:length], rot)
    w = cyclic_reduce(word)
    while w:
        n = len(w)
        hit = None
        for length in range(min(n, big_r), need - 1, -1):
            for p in range(n):
                if p + length <= n:
                    piece = w[p:p + length]
                else:
                    piece = w[p:] + w[:p + length - n]
                rot = prefixes.get(piece)
                if rot is not None:
                    hit = (p, length, rot)
                    break
            if hit:
                break
        if hit is None:
            return False
        p, length, rot = hit
        rest = (w[p:] + w[:p])[length:]
        w = cyclic_reduce(invert_word(rot[length:]) + rest)
    return True


def is_trivial_word(word: Sequence[Letter], pres: Presentation) -> bool:
    """Does the word represent the identity?

    Supported shapes: free presentations, and the standard genus-g surface
    presentations (genus 1 is Z x Z).  Anything else raises
    UnsupportedPresentationError rather than guessing.
    """
    gens = set(pres.generators)
    for lab, sign in word:
        if lab not in gens:
            raise UnknownLabelError(f"word uses unknown generator {lab!r}")
        if sign not in (1, -1):
            raise PreconditionError(f"bad sign {sign!r} in word")
    w = free_reduce(word)
    if not w:
        return True
    if not pres.relators:
        return False
    g = pres.genus_hint
    if g is not None and _surface_shape_genus(pres) != g:
        raise UnsupportedPresentationError(
            "genus_hint does not match the presentation shape")
    if g is None:
        g = _surface_shape_genus(pres)
    if g is None:
        raise UnsupportedPresentationError(
            "solver handles free and standard surface presentations only")
    if g == 1:
        return not any(exponent_sums(w, pres.generators))
    return _dehn_trivial(w, pres.relators[0])


def homotopic_words(u: Sequence[Letter], v: Sequence[Letter],
                    pres: Presentation) -> bool:
    """Do two words represent the same group element?"""
    return is_trivial_word(tuple(u) + invert_word(v), pres)


# -- presentations from maps --------------------------------------------------


def spanning_tree(ribbon_map: RibbonMap, base: int = 0) -> set:
    """Edge labels of the breadth-first spanning tree rooted at ``base``.

    Vertices leave the queue in discovery order and stars are scanned from
    their smallest dart, so the tree is deterministic.
    """
    if not 0 <= base < ribbon_map.num_vertices:
        raise IndexError(f"vertex {base} out of range")
    seen = {base}
    tree = set()
    queue = deque([base])
    while queue:
        u = queue.popleft()
        for d in ribbon_map.star(u):
            head = ribbon_map.vertex_of(d ^ 1)
            if head not in seen:
                seen.add(head)
                tree.add(ribbon_map.edge_of(d))
                queue.append(head)
    if len(seen) != ribbon_map.num_vertices:
        raise PreconditionError("map is not connected")  # pragma: no cover
    return tree


def pi1_presentation(ribbon_map: RibbonMap, base: int = 0) -> Presentation:
    """Presentation of the fundamental group of the filled surface.

    Generators are the non-tree edges; each face contributes its boundary
    word with tree letters erased, freely and cyclically reduced.  Faces map
    to relators one for one (duplicates and empties are kept).
    """
    if ribbon_map.num_edges == 0:
        if base != 0:
            raise IndexError(f"vertex {base} out of range")
        return Presentation((), (), genus_hint=0)
    tree = spanning_tree(ribbon_map, base)
    gens = tuple(lab for lab in ribbon_map.edge_labels if lab not in tree)
    relators = []
    for face in trace_faces(ribbon_map):
        word = [(ribbon_map.edge_of(d), -1 if d & 1 else 1)
                for d in face.darts if ribbon_map.edge_of(d) not in tree]
        relators.append(cyclic_reduce(word))
    pres = Presentation(gens, tuple(relators))
    shape = _surface_shape_genus(pres)
    if shape is not None:
        pres = Presentation(gens, tuple(relators), genus_hint=shape)
    return pres


# -- discrete paths -----------------------------------------------------------


@dataclass(frozen=True)
class DiscretePath:
    """A walk given by darts, each ending where the next begins.  The empty
    (constant) path cannot infer a location, so it takes ``start``."""

    darts: tuple = ()
    start: Optional[int] = None

    def __len__(self):
        return len(self.darts)


def path_endpoints(ribbon_map: RibbonMap, path: DiscretePath) -> tuple:
    """(tail, head) of the walk; validates the chain."""
    if not path.darts:
        if path.start is None:
            raise PreconditionError("constant path needs an explicit start")
        if not 0 <= path.start < ribbon_map.num_vertices:
            raise IndexError(f"vertex {path.start} out of range")
        return path.start, path.start
    tail = ribbon_map.vertex_of(path.darts[0])
    if path.start is not None and path.start != tail:
        raise PreconditionError("start does not match the first dart")
    at = tail
    for d in path.darts:
        if ribbon_map.vertex_of(d) != at:
            raise PreconditionError("darts do not chain tail to head")
        at = ribbon_map.vertex_of(d ^ 1)
    return tail, at


def inverse_path(path: DiscretePath) -> DiscretePath:
    return DiscretePath(tuple(d ^ 1 for d in reversed(path.darts)), None)


def path_word(ribbon_map: RibbonMap, path: DiscretePath,
              drop: set = frozenset()) -> tuple:
    return tuple((ribbon_map.edge_of(d), -1 if d & 1 else 1)
                 for d in path.darts if ribbon_map.edge_of(d) not in drop)


def homotopic(ribbon_map: RibbonMap, p1: DiscretePath, p2: DiscretePath,
              base: int = 0) -> bool:
    """Are two walks with the same endpoints homotopic on the surface?

    The composite p1 . p2^-1 is a loop; it is projected through the
    spanning tree of ``base`` and decided in the resulting presentation.
    """
    ends1 = path_endpoints(ribbon_map, p1)
    ends2 = path_endpoints(ribbon_map, p2)
    if ends1 != ends2:
        raise EndpointMismatchError(
            f"paths run {ends1[0]}->{ends1[1]} and {ends2[0]}->{ends2[1]}")
    if ribbon_map.num_edges == 0:
        return True
    tree = spanning_tree(ribbon_map, base)
    word = (path_word(ribbon_map, p1, tree)
            + invert_word(path_word(ribbon_map, p2, tree)))
    return is_trivial_word(word, pi1_presentation(ribbon_map, base))
