"""Faces and the closed oriented surface a map fills.

Walking a face follows the successor phi(e) = sigma(e-bar): arrive along e,
turn to the next dart counterclockwise around the head vertex, leave along
it.  The phi-orbits partition the darts, each orbit read once in boundary
order, so face degrees sum to 2m.  With V vertices, m edges and F faces the
filled surface has Euler characteristic chi = V - m + F and genus
(2 - chi) / 2.  The edgeless map stands for the sphere and counts one face.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import EmptyMapError, InternalInvariantViolation, PreconditionError
from .maps import RibbonMap, from_rotation_lists


@dataclass(frozen=True)
class Face:
    """One phi-orbit; ``darts`` starts at the orbit's smallest dart."""

    darts: tuple

    def __len__(self):
        return len(self.darts)

    def word(self, ribbon_map: RibbonMap) -> tuple:
        return tuple(ribbon_map.dart_ref(d) for d in self.darts)


@dataclass(frozen=True)
class SurfaceReport:
    num_vertices: int
    num_edges: int
    num_faces: int
    euler_characteristic: int
    genus: int
    face_words: tuple


def face_successor(ribbon_map: RibbonMap, dart: int) -> int:
    """phi(e) = sigma(e-bar): the dart after ``dart`` on the same face."""
    return ribbon_map.next_dart(ribbon_map.iota(dart))


def trace_faces(ribbon_map: RibbonMap) -> list:
    """All faces, sorted by smallest dart; the S0 map has one empty face."""
    if ribbon_map.num_edges == 0:
        return [Face(())]
    n = ribbon_map.num_darts
    seen = [False] * n
    faces = []
    for start in range(n):
        if seen[start]:
            continue
        orbit = []
        d = start
        while not seen[d]:
            seen[d] = True
            orbit.append(d)
            d = face_successor(ribbon_map, d)
        if d != start:
            raise InternalInvariantViolation("face walk left its orbit")
        faces.append(Face(tuple(orbit)))
    if sum(len(f) for f in faces) != n:
        raise InternalInvariantViolation("faces do not partition the darts")
    return faces


def face_of_dart(ribbon_map: RibbonMap, faces: Sequence[Face] = None) -> list:
    """Index of the face containing each dart."""
    if faces is None:
        faces = trace_faces(ribbon_map)
    where = [0] * ribbon_map.num_darts
    for i, face in enumerate(faces):
        for d in face.darts:
            where[d] = i
    return where


def euler_characteristic(ribbon_map: RibbonMap) -> int:
    v = ribbon_map.num_vertices
    m = ribbon_map.num_edges
    f = len(trace_faces(ribbon_map))
    return v - m + f


def genus(ribbon_map: RibbonMap) -> int:
    """Genus of the filled surface; chi = 2 - 2g is always even."""
    chi = euler_characteristic(ribbon_map)
    if chi % 2 != 0 or chi > 2:
        raise InternalInvariantViolation(f"impossible Euler characteristic {chi}")
    return (2 - chi) // 2


def surface_report(ribbon_map: RibbonMap) -> SurfaceReport:
    faces = trace_faces(ribbon_map)
    chi = ribbon_map.num_vertices - ribbon_map.num_edges + len(faces)
    return SurfaceReport(
        num_vertices=ribbon_map.num_vertices,
        num_edges=ribbon_map.num_edges,
        num_faces=len(faces),
        euler_characteristic=chi,
        genus=(2 - chi) // 2,
        face_words=tuple(f.word(ribbon_map) for f in faces),
    )


def standard_pair_labels(g: int) -> list:
    """Edge labels for g handle pairs: letters a,b,c,... while they last,
    a1,b1,a2,b2,... beyond that."""
    if g < 0:
        raise PreconditionError("genus must be >= 0")
    if 2 * g <= 26:
        return [chr(ord("a") + i) for i in range(2 * g)]
    labels = []
    for i in range(1, g + 1):
        labels.extend((f"a{i}", f"b{i}"))
    return labels


def petal(g: int) -> RibbonMap:
    """The one-vertex map with 2g loops filling the genus-g surface.

    Petal i contributes the rotation block (a_i, b_i-bar, a_i-bar, b_i), so
    the single face reads the boundary word a_1 b_1 a_1' b_1' ... in order.
    petal(0) is the edgeless sphere map.
    """
    labels = standard_pair_labels(g)
    if not labels:
        return from_rotation_lists((), [])
    rotation = []
    for i in range(g):
        a, b = labels[2 * i], labels[2 * i + 1]
        rotation.extend((a + "+", b + "-", a + "-", b + "+"))
    return from_rotation_lists(labels, [rotation])


def is_filling_one_face(ribbon_map: RibbonMap) -> bool:
    return len(trace_faces(ribbon_map)) == 1


def require_nonempty(ribbon_map: RibbonMap) -> None:
    if ribbon_map.num_edges == 0:
        raise EmptyMapError("operation needs a map with at least one edge")
