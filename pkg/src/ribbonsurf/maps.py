"""Rotation systems on labelled dart sets.

A map with m edges lives on the dart set {0, ..., 2m-1}.  Edge k (the k-th
entry of ``edge_labels``) owns dart 2k, its forward side, and dart 2k+1, its
backward side; the edge involution iota therefore flips the low bit and is
fixed-point free by construction.  The rotation sigma is a permutation of the
darts whose orbits are the vertex stars in cyclic successor order.  A valid
map is connected: the group generated by sigma and iota acts transitively on
darts.  The edgeless map is the single exception and stands for the sphere
with one isolated vertex.
"""

from __future__ import annotations

import re
from typing import NamedTuple, Optional, Sequence, Union

from .errors import (
    DisconnectedError,
    DuplicateDartError,
    DuplicateLabelError,
    MapError,
    MissingDartError,
    UnknownLabelError,
)

LABEL_PATTERN = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class DartRef(NamedTuple):
    """A dart named by its edge label and side: sign +1 forward, -1 backward."""

    label: str
    sign: int

    def token(self) -> str:
        return self.label + ("+" if self.sign > 0 else "-")

    def reversed(self) -> "DartRef":
        return DartRef(self.label, -self.sign)


DartLike = Union[str, DartRef, tuple]


def parse_dart_token(token: DartLike) -> DartRef:
    """Normalize a dart given as "a+"/"a-" text, a DartRef, or a pair."""
    if isinstance(token, DartRef):
        ref = token
    elif isinstance(token, tuple) and len(token) == 2:
        ref = DartRef(token[0], token[1])
    elif isinstance(token, str) and len(token) >= 2 and token[-1] in "+-":
        ref = DartRef(token[:-1], 1 if token[-1] == "+" else -1)
    else:
        raise MapError(f"bad dart token {token!r}: expected '<label>+' or '<label>-'")
    if not isinstance(ref.label, str) or not LABEL_PATTERN.match(ref.label):
        raise MapError(f"bad edge label {ref.label!r}")
    if ref.sign not in (1, -1):
        raise MapError(f"bad dart sign {ref.sign!r} for label {ref.label!r}")
    return ref


class ValidationReport:
    """All problems found in a proposed rotation system.

    ``issues`` is a list of (code, message) pairs; an empty list means the
    input describes a valid map.
    """

    def __init__(self, issues: Optional[list] = None):
        self.issues = list(issues or [])

    @property
    def ok(self) -> bool:
        return not self.issues

    def add(self, code: str, message: str) -> None:
        self.issues.append((code, message))

    def __repr__(self):
        return f"ValidationReport(ok={self.ok}, issues={self.issues!r})"


_ISSUE_EXCEPTIONS = {
    "DuplicateDart": DuplicateDartError,
    "MissingDart": MissingDartError,
    "UnknownLabel": UnknownLabelError,
    "DuplicateLabel": DuplicateLabelError,
    "Disconnected": DisconnectedError,
}


class RibbonMap:
    """An immutable connected map: labelled edges plus a rotation permutation.

    Instances are built through :func:`from_rotation_lists`; the constructor
    trusts its arguments.  Vertices are indexed 0..V-1 in order of their
    smallest dart, and each star tuple starts at that dart.
    """

    __slots__ = ("edge_labels", "sigma", "num_isolated_vertices",
                 "_stars", "_vertex_of", "_label_index")

    def __init__(self, edge_labels: Sequence[str], sigma: Sequence[int],
                 num_isolated_vertices: int = 0):
        self.edge_labels = tuple(edge_labels)
        self.sigma = tuple(sigma)
        self.num_isolated_vertices = num_isolated_vertices
        self._label_index = {lab: k for k, lab in enumerate(self.edge_labels)}
        self._stars, self._vertex_of = _sigma_orbits(self.sigma)

    # -- sizes ------------------------------------------------------------

    @property
    def num_edges(self) -> int:
        return len(self.edge_labels)

    @property
    def num_darts(self) -> int:
        return 2 * len(self.edge_labels)

    @property
    def num_vertices(self) -> int:
        return len(self._stars) + self.num_isolated_vertices

    # -- darts ------------------------------------------------------------

    def iota(self, dart: int) -> int:
        """The other side of the same edge."""
        self._check_dart(dart)
        return dart ^ 1

    def next_dart(self, dart: int) -> int:
        """sigma: the next dart counterclockwise around the same vertex."""
        self._check_dart(dart)
        return self.sigma[dart]

    def dart_ref(self, dart: int) -> DartRef:
        self._check_dart(dart)
        return DartRef(self.edge_labels[dart >> 1], -1 if dart & 1 else 1)

    def dart_index(self, ref: DartLike) -> int:
        ref = parse_dart_token(ref)
        k = self._label_index.get(ref.label)
        if k is None:
            raise UnknownLabelError(f"unknown edge label {ref.label!r}")
        return 2 * k + (0 if ref.sign > 0 else 1)

    def edge_of(self, dart: int) -> str:
        self._check_dart(dart)
        return self.edge_labels[dart >> 1]

    def _check_dart(self, dart: int) -> None:
        if not 0 <= dart < self.num_darts:
            raise IndexError(f"dart {dart} out of range for {self.num_edges} edges")

    # -- vertices ---------------------------------------------------------

    def star(self, vertex: int) -> tuple:
        """Darts at ``vertex`` in cyclic order, starting at the smallest."""
        if not 0 <= vertex < self.num_vertices:
            raise IndexError(f"vertex {vertex} out of range")
        if vertex >= len(self._stars):
            return ()
        return self._stars[vertex]

    def vertex_of(self, dart: int) -> int:
        self._check_dart(dart)
        return self._vertex_of[dart]

    def vertices(self) -> tuple:
        return tuple(range(self.num_vertices))

    def rotation_tokens(self) -> list:
        """Rotations as token-string lists, in canonical vertex order."""
        rotations = [[self.dart_ref(d).token() for d in star] for star in self._stars]
        if self.num_isolated_vertices:
            rotations.append([])
        return rotations

    # -- equality ---------------------------------------------------------

    def _canonical_stars(self) -> tuple:
        """Stars as token tuples, each at its least rotation, sorted.

        Independent of edge declaration order, vertex order, and the phase
        each rotation list was written at; two maps are equal exactly when
        they have the same labelled star structure.
        """
        out = []
        for star in self._stars:
            tokens = tuple(self.dart_ref(d).token() for d in star)
            out.append(min(tokens[i:] + tokens[:i]
                           for i in range(len(tokens))))
        out.sort()
        return tuple(out)

    def __eq__(self, other):
        if not isinstance(other, RibbonMap):
            return NotImplemented
        return (sorted(self.edge_labels) == sorted(other.edge_labels)
                and self.num_isolated_vertices == other.num_isolated_vertices
                and self._canonical_stars() == other._canonical_stars())

    def __hash__(self):
        return hash((tuple(sorted(self.edge_labels)),
                     self.num_isolated_vertices, self._canonical_stars()))

    def __repr__(self):
        if not self.edge_labels and self.num_isolated_vertices:
            return "RibbonMap(S0)"
        return (f"RibbonMap(edges={list(self.edge_labels)!r}, "
                f"rotations={self.rotation_tokens()!r})")


def _sigma_orbits(sigma: Sequence[int]):
    """Orbits of sigma sorted by smallest element, each starting there."""
    n = len(sigma)
    seen = [False] * n
    stars = []
    for start in range(n):
        if seen[start]:
            continue
        orbit = []
        d = start
        while not seen[d]:
            seen[d] = True
            orbit.append(d)
            d = sigma[d]
        stars.append(tuple(orbit))
    vertex_of = [0] * n
    for v, star in enumerate(stars):
        for d in star:
            vertex_of[d] = v
    return tuple(stars), tuple(vertex_of)


def validate_rotation_lists(edge_labels: Sequence[str],
                            rotations: Sequence[Sequence[DartLike]]) -> ValidationReport:
    """Check a proposed rotation system and report every problem found."""
    report = ValidationReport()
    labels = list(edge_labels)
    seen_labels = set()
    for lab in labels:
        if not isinstance(lab, str) or not LABEL_PATTERN.match(lab):
            report.add("BadLabel", f"bad edge label {lab!r}")
        elif lab in seen_labels:
            report.add("DuplicateLabel", f"edge label {lab!r} declared twice")
        else:
            seen_labels.add(lab)
    if not report.ok:
        return report

    label_index = {lab: k for k, lab in enumerate(labels)}
    n = 2 * len(labels)
    owner = [None] * n
    empty_rotations = 0
    parsed = []
    for vi, rotation in enumerate(rotations):
        row = []
        if len(rotation) == 0:
            empty_rotations += 1
        for token in rotation:
            try:
                ref = parse_dart_token(token)
            except MapError as exc:
                report.add("BadToken", f"vertex {vi}: {exc}")
                continue
            k = label_index.get(ref.label)
            if k is None:
                report.add("UnknownLabel",
                           f"vertex {vi}: dart {ref.token()} uses undeclared label")
                continue
            dart = 2 * k + (0 if ref.sign > 0 else 1)
            if owner[dart] is not None:
                report.add("DuplicateDart",
                           f"dart {ref.token()} appears more than once")
                continue
            owner[dart] = vi
            row.append(dart)
        parsed.append(row)
    for dart in range(n):
        if owner[dart] is None:
            lab = labels[dart >> 1]
            side = "-" if dart & 1 else "+"
            report.add("MissingDart", f"dart {lab}{side} appears in no rotation")
    if not report.ok and any(code in ("DuplicateDart", "MissingDart", "UnknownLabel",
                                      "BadToken") for code, _ in report.issues):
        return report

    if n == 0:
        # Edgeless sphere: at most one (empty) vertex.
        if len(rotations) > 1:
            report.add("Disconnected", "edgeless map may have only one vertex")
        return report
    if empty_rotations:
        report.add("IsolatedVertex",
                   "isolated vertices are only allowed in the edgeless map")
        return report

    # Connectivity under <sigma, iota>.
    sigma = [0] * n
    for row in parsed:
        for i, dart in enumerate(row):
            sigma[dart] = row[(i + 1) % len(row)]
    seen = [False] * n
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        d = stack.pop()
        for nxt in (sigma[d], d ^ 1):
            if not seen[nxt]:
                seen[nxt] = True
                count += 1
                stack.append(nxt)
    if count != n:
        report.add("Disconnected",
                   f"map splits into components ({count} of {n} darts reached)")
    return report


def from_rotation_lists(edge_labels: Sequence[str],
                        rotations: Sequence[Sequence[DartLike]]) -> RibbonMap:
    """Build a validated map from labelled rotation lists.

    ``rotations`` holds one dart sequence per vertex, each in cyclic
    successor order.  Raises the error for the first validation issue.
    """
    report = validate_rotation_lists(edge_labels, rotations)
    if not report.ok:
        code, message = report.issues[0]
        raise _ISSUE_EXCEPTIONS.get(code, MapError)(message)
    labels = tuple(edge_labels)
    if not labels:
        return RibbonMap((), (), num_isolated_vertices=1)
    label_index = {lab: k for k, lab in enumerate(labels)}
    sigma = [0] * (2 * len(labels))
    for rotation in rotations:
        row = []
        for token in rotation:
            ref = parse_dart_token(token)
            row.append(2 * label_index[ref.label] + (0 if ref.sign > 0 else 1))
        for i, dart in enumerate(row):
            sigma[dart] = row[(i + 1) % len(row)]
    return RibbonMap(labels, sigma)


def degree(ribbon_map: RibbonMap, vertex: int) -> int:
    """Number of darts at ``vertex``; a loop contributes both of its sides."""
    return len(ribbon_map.star(vertex))


def relabeled(ribbon_map: RibbonMap, mapping: dict) -> RibbonMap:
    """Rename edges by a bijective label mapping, keeping all structure."""
    missing = [lab for lab in ribbon_map.edge_labels if lab not in mapping]
    if missing:
        raise UnknownLabelError(f"mapping misses labels {missing!r}")
    new_labels = [mapping[lab] for lab in ribbon_map.edge_labels]
    if len(set(new_labels)) != len(new_labels):
        raise DuplicateLabelError("label mapping is not injective")
    rotations = [[DartRef(mapping[ribbon_map.edge_of(d)],
                          -1 if d & 1 else 1).token() for d in star]
                 for star in ribbon_map._stars]
    if ribbon_map.num_isolated_vertices:
        rotations.append([])
    return from_rotation_lists(new_labels, rotations)


def refine(ribbon_map: RibbonMap) -> RibbonMap:
    """Subdivide every edge at a fresh midpoint vertex.

    Edge ``e`` becomes ``e_1`` (tail half) and ``e_2`` (head half), meeting
    at a new degree-2 vertex whose rotation is the two-dart cycle
    ``(e_1-, e_2+)``.  The result has V+m vertices and 2m edges and is a
    subdivision of the same surface.
    """
    if ribbon_map.num_edges == 0:
        return ribbon_map
    new_labels = []
    for lab in ribbon_map.edge_labels:
        new_labels.extend((lab + "_1", lab + "_2"))
    rotations = []
    for star in ribbon_map._stars:
        row = []
        for d in star:
            lab = ribbon_map.edge_of(d)
            # Forward dart leaves along the tail half; backward dart leaves
            # along the head half, travelling it against its orientation.
            row.append(lab + "_1+" if d & 1 == 0 else lab + "_2-")
        rotations.append(row)
    for lab in ribbon_map.edge_labels:
        rotations.append([lab + "_1-", lab + "_2+"])
    return from_rotation_lists(new_labels, rotations)
