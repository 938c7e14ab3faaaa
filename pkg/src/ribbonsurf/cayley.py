"""Bounded pieces of Cayley graphs and their relator cells.

Vertices are group elements, one directed edge u --a--> u*a per generator a
(the reverse arc along a' is implied, not stored), and one disc per (base
vertex, relator) pair whose full boundary loop stays inside the ball.  The
ball of radius r around the identity is grown breadth first; an element's
representative is the first word that reaches it in shortlex order, hence a
geodesic.  Element identity is decided by the word-problem solver alone
(u = v iff u v' is trivial); candidate comparisons are pruned to
representatives whose ball layer differs by at most one, which is sound
because one generator step changes the distance by at most one.  Fine for
desk-scale radii; no normal-form machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import InternalInvariantViolation, PreconditionError
from .groups import Presentation, free_reduce, invert_word, is_trivial_word, solver_kind


@dataclass(frozen=True)
class CayleyBall:
    """All elements within ``radius`` of the identity, identity first."""

    presentation: Presentation
    radius: int
    vertices: tuple  # representative words, shortlex-first-discovered
    edges: tuple     # (source index, generator label, target index)
    cells: tuple     # (base vertex index, relator index, boundary vertex cycle)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)


def _equal(u: tuple, v: tuple, pres: Presentation) -> bool:
    return is_trivial_word(u + invert_word(v), pres)


class _Ball:
    def __init__(self, pres: Presentation):
        self.pres = pres
        self.words = [()]
        self.dist = [0]
        self.layers = {0: [0]}

    def find(self, word: tuple, around: int) -> Optional[int]:
        """Index of the element ``word`` among layers within one of
        ``around``, or None if it lies outside them."""
        for r in (around - 1, around, around + 1):
            for vi in self.layers.get(r, ()):
                if _equal(word, self.words[vi], self.pres):
                    return vi
        return None

    def grow(self, radius: int, alphabet: list) -> None:
        for r in range(1, radius + 1):
            layer = []
            self.layers[r] = layer
            for ui in self.layers[r - 1]:
                base = self.words[ui]
                for letter in alphabet:
                    cand = free_reduce(base + (letter,))
                    if self.find(cand, r - 1) is not None:
                        continue
                    self.words.append(cand)
                    self.dist.append(r)
                    layer.append(len(self.words) - 1)


def cayley_ball(pres: Presentation, radius: int) -> CayleyBall:
    """The radius-``radius`` ball of the Cayley complex.

    Works for any presentation the word-problem solver supports; raises
    UnsupportedPresentationError otherwise.
    """
    if radius < 0:
        raise PreconditionError("radius must be >= 0")
    solver_kind(pres)
    alphabet = ([(g, 1) for g in pres.generators]
                + [(g, -1) for g in pres.generators])
    ball = _Ball(pres)
    ball.grow(radius, alphabet)

    edges = []
    for ui, base in enumerate(ball.words):
        for gen in pres.generators:
            target = ball.find(free_reduce(base + ((gen, 1),)), ball.dist[ui])
            if target is not None:
                edges.append((ui, gen, target))

    cells = []
    for base_index, base in enumerate(ball.words):
        for rj, relator in enumerate(pres.relators):
            cycle = [base_index]
            word = base
            at = base_index
            for step, letter in enumerate(relator):
                word = free_reduce(word + (letter,))
                if step == len(relator) - 1:
                    if not _equal(word, base, pres):  # pragma: no cover
                        raise InternalInvariantViolation(
                            "relator loop did not close")
                    at = base_index
                else:
                    at = ball.find(word, ball.dist[at])
                    if at is None:
                        break
                    cycle.append(at)
            if at is not None and len(cycle) == len(relator):
                cells.append((base_index, rj, tuple(cycle)))

    return CayleyBall(presentation=pres, radius=radius,
                      vertices=tuple(ball.words), edges=tuple(edges),
                      cells=tuple(cells))
