"""Reduction of a filling map to its canonical polygon.

Any connected map is carried to a one-vertex one-face map by deleting edges
whose two sides lie on distinct faces (merging the faces) and then
contracting non-loop edges (merging vertices); both moves preserve the Euler
characteristic.  The surviving map's single face spells a polygon word in
which every edge label appears once per sign.  Cut-and-glue rewriting brings
that word to the canonical form x1 y1 x1' y1' ... xg yg xg' yg', whose
length names the genus directly.  Every step is recorded in a replayable
MoveTrace, and every intermediate word is checked against the independent
chi oracle word_to_map.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .errors import (
    InternalInvariantViolation,
    LoopNotContractibleError,
    MalformedWordError,
    MapError,
    PreconditionError,
    UnknownLabelError,
)
from .maps import DartRef, RibbonMap, from_rotation_lists
from .surfaces import face_of_dart, genus, petal, trace_faces


class PolygonWord:
    """A cyclic word of signed edge labels, each label once per sign."""

    __slots__ = ("letters",)

    def __init__(self, letters: Sequence):
        normalized = tuple(DartRef(l[0], l[1]) for l in letters)
        counts = {}
        for ref in normalized:
            counts.setdefault(ref.label, []).append(ref.sign)
        for lab, signs in counts.items():
            if sorted(signs) != [-1, 1]:
                raise MalformedWordError(
                    f"label {lab!r} must appear exactly once per sign")
        self.letters = normalized

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other):
        if not isinstance(other, PolygonWord):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def cyclic_eq(self, other: "PolygonWord") -> bool:
        if len(self) != len(other):
            return False
        if not self.letters:
            return True
        doubled = other.letters + other.letters
        return any(doubled[i:i + len(self)] == self.letters
                   for i in range(len(other)))

    def tokens(self) -> list:
        return [ref.token() for ref in self.letters]

    def __repr__(self):
        return f"PolygonWord({' '.join(self.tokens())})"


# -- move records ----------------------------------------------------------


@dataclass(frozen=True)
class DeleteEdge:
    label: str


@dataclass(frozen=True)
class ContractEdge:
    label: str


@dataclass(frozen=True)
class Cancel:
    label: str


@dataclass(frozen=True)
class CutGlue:
    """Cut the polygon between two corners and reglue along an old edge.

    ``cut`` = (i, j) splits the current cyclic word into the arc [i, j) and
    its complement; the fresh chord edge enters the first piece with sign
    ``chord_sign``.  Regluing along ``old_label`` (one occurrence per piece)
    removes it, so the word keeps its length.
    """

    new_label: str
    old_label: str
    cut: Tuple[int, int]
    chord_sign: int


@dataclass(frozen=True)
class MoveTrace:
    moves: tuple = ()

    def __len__(self):
        return len(self.moves)

    def __iter__(self):
        return iter(self.moves)

    def extend(self, more) -> "MoveTrace":
        return MoveTrace(self.moves + tuple(more))


@dataclass(frozen=True)
class ClassificationResult:
    """genus, the canonical polygon word (None for the sphere), and the
    full move trace that turns the input into it."""

    genus: int
    canonical_word: Optional[PolygonWord]
    trace: MoveTrace


# -- map-level moves -------------------------------------------------------


def _rebuild(rotations_tokens: list) -> RibbonMap:
    labels = []
    seen = set()
    for row in rotations_tokens:
        for tok in row:
            lab = tok[:-1]
            if lab not in seen:
                seen.add(lab)
                labels.append(lab)
    rows = [row for row in rotations_tokens if row]
    if not labels:
        if len(rotations_tokens) > 1:
            raise InternalInvariantViolation("move isolated several vertices")
        return from_rotation_lists((), [])
    if len(rows) != len(rotations_tokens):
        raise InternalInvariantViolation("move isolated a vertex")
    return from_rotation_lists(labels, rows)


def delete_edge(ribbon_map: RibbonMap, label: str, check_faces: bool = True) -> RibbonMap:
    """Remove one edge.  With ``check_faces`` the edge's sides must lie on
    distinct faces, which merges them and keeps chi and connectedness."""
    if label not in ribbon_map.edge_labels:
        raise UnknownLabelError(f"unknown edge label {label!r}")
    if check_faces:
        where = face_of_dart(ribbon_map)
        d = ribbon_map.dart_index(label + "+")
        if where[d] == where[d ^ 1]:
            raise PreconditionError(
                f"edge {label!r} has both sides on one face; deleting it "
                "would not merge faces")
    rotations = []
    for v in range(ribbon_map.num_vertices - ribbon_map.num_isolated_vertices):
        row = [ribbon_map.dart_ref(d).token() for d in ribbon_map.star(v)
               if ribbon_map.edge_of(d) != label]
        rotations.append(row)
    try:
        result = _rebuild(rotations)
    except MapError as exc:
        raise InternalInvariantViolation(
            f"deleting {label!r} broke the map: {exc}") from exc
    return result


def delete_face_merging_edge(ribbon_map: RibbonMap):
    """Delete the smallest-dart edge whose sides lie on distinct faces.

    Returns (new map, deleted label), or None when every edge has both
    sides on one face -- in particular whenever F = 1.
    """
    if ribbon_map.num_edges == 0:
        return None
    where = face_of_dart(ribbon_map)
    old_faces = max(where) + 1
    for k, label in enumerate(ribbon_map.edge_labels):
        if where[2 * k] != where[2 * k + 1]:
            result = delete_edge(ribbon_map, label, check_faces=False)
            if len(trace_faces(result)) != old_faces - 1:
                raise InternalInvariantViolation("face deletion changed F by != 1")
            if result.num_vertices != ribbon_map.num_vertices:
                raise InternalInvariantViolation("face deletion changed V")
            return result, label
    return None


def contract_edge(ribbon_map: RibbonMap, label: str) -> RibbonMap:
    """Contract a non-loop edge, merging its endpoints.

    In the rotation at the tail, the edge's dart is replaced by the star of
    the head read cyclically from just after the opposite dart; V drops by
    one and F is untouched.
    """
    if label not in ribbon_map.edge_labels:
        raise UnknownLabelError(f"unknown edge label {label!r}")
    d = ribbon_map.dart_index(label + "+")
    dbar = d ^ 1
    u = ribbon_map.vertex_of(d)
    v = ribbon_map.vertex_of(dbar)
    if u == v:
        raise LoopNotContractibleError(f"edge {label!r} is a loop")
    star_v = ribbon_map.star(v)
    at = star_v.index(dbar)
    splice = star_v[at + 1:] + star_v[:at]
    old_faces = len(trace_faces(ribbon_map))
    rotations = []
    for w in range(ribbon_map.num_vertices - ribbon_map.num_isolated_vertices):
        if w == v:
            continue
        row = []
        for x in ribbon_map.star(w):
            if x == d:
                row.extend(ribbon_map.dart_ref(y).token() for y in splice)
            else:
                row.append(ribbon_map.dart_ref(x).token())
        rotations.append(row)
    try:
        result = _rebuild(rotations)
    except MapError as exc:
        raise InternalInvariantViolation(
            f"contracting {label!r} broke the map: {exc}") from exc
    if result.num_vertices != ribbon_map.num_vertices - 1:
        raise InternalInvariantViolation("contraction changed V by != 1")
    if len(trace_faces(result)) != old_faces:
        raise InternalInvariantViolation("contraction changed F")
    return result


def reduce_to_one_vertex_one_face(ribbon_map: RibbonMap):
    """Delete face-merging edges until one face remains, then contract
    non-loop edges until one vertex remains.  Returns (map, MoveTrace)."""
    moves = []
    current = ribbon_map
    while True:
        step = delete_face_merging_edge(current)
        if step is None:
            break
        current, label = step
        moves.append(DeleteEdge(label))
    if current.num_edges:
        if len(trace_faces(current)) != 1:
            raise InternalInvariantViolation(
                "several faces left but no edge separates two of them")
        while current.num_vertices > 1:
            for k, label in enumerate(current.edge_labels):
                if current.vertex_of(2 * k) != current.vertex_of(2 * k + 1):
                    current = contract_edge(current, label)
                    moves.append(ContractEdge(label))
                    break
            else:
                raise InternalInvariantViolation(
                    "several vertices left but every edge is a loop")
    return current, MoveTrace(tuple(moves))


def polygon_word(ribbon_map: RibbonMap) -> PolygonWord:
    """The single face of a one-vertex one-face map, starting at dart 0."""
    if ribbon_map.num_edges == 0:
        raise PreconditionError("edgeless map has no polygon word")
    if ribbon_map.num_vertices != 1:
        raise PreconditionError(
            f"map has {ribbon_map.num_vertices} vertices; reduce it first")
    faces = trace_faces(ribbon_map)
    if len(faces) != 1:
        raise PreconditionError(
            f"map has {len(faces)} faces; reduce it first")
    return PolygonWord(faces[0].word(ribbon_map))


def word_to_map(word) -> RibbonMap:
    """Rebuild the quotient map of a polygon word.

    Positions of the word are the darts, the face successor is the cyclic
    shift, and the rotation is recovered as sigma = phi o iota.  The result
    always has exactly one face, namely the word itself; its vertex count is
    the number of corner classes of the glued polygon.
    """
    if not isinstance(word, PolygonWord):
        word = PolygonWord(word)
    n = len(word)
    if n == 0:
        return from_rotation_lists((), [])
    partner = {}
    other = [0] * n
    for i, ref in enumerate(word.letters):
        j = partner.pop(ref.label, None)
        if j is None:
            partner[ref.label] = i
        else:
            other[i], other[j] = j, i
    sigma = [(other[i] + 1) % n for i in range(n)]
    seen = [False] * n
    rotations = []
    for start in range(n):
        if seen[start]:
            continue
        row = []
        i = start
        while not seen[i]:
            seen[i] = True
            row.append(word.letters[i].token())
            i = sigma[i]
        rotations.append(row)
    labels = []
    added = set()
    for ref in word.letters:
        if ref.label not in added:
            added.add(ref.label)
            labels.append(ref.label)
    return from_rotation_lists(labels, rotations)


# -- word-level moves ------------------------------------------------------


def _cyclic_slice(letters: list, i: int, j: int) -> list:
    if i == j:
        raise InternalInvariantViolation("empty or full cut arc")
    if i < j:
        return letters[i:j]
    return letters[i:] + letters[:j]


def apply_cancel(letters: list, move: Cancel) -> list:
    """Remove the (cyclically) adjacent inverse pair of ``move.label``."""
    n = len(letters)
    for i in range(n):
        j = (i + 1) % n
        a, b = letters[i], letters[j]
        if a.label == move.label == b.label and a.sign == -b.sign:
            if i < j:
                return letters[:i] + letters[j + 1:]
            return letters[1:i]  # pair wraps around the end
    raise PreconditionError(f"label {move.label!r} has no adjacent inverse pair")


def apply_cut_glue(letters: list, move: CutGlue) -> list:
    """Cut the cyclic word at ``move.cut`` and reglue along the old edge."""
    i, j = move.cut
    arc_a = _cyclic_slice(letters, i, j)
    arc_b = _cyclic_slice(letters, j, i)
    pos_a = [p for p, ref in enumerate(arc_a) if ref.label == move.old_label]
    pos_b = [p for p, ref in enumerate(arc_b) if ref.label == move.old_label]
    if len(pos_a) != 1 or len(pos_b) != 1:
        raise PreconditionError(
            f"cut must separate the two occurrences of {move.old_label!r}")
    if any(ref.label == move.new_label for ref in letters):
        raise PreconditionError(f"label {move.new_label!r} already in use")
    pa, pb = pos_a[0], pos_b[0]
    chord = DartRef(move.new_label, move.chord_sign)
    # Piece 1 is arc_a plus the chord, piece 2 the reversed chord plus arc_b;
    # gluing the pieces along old_label concatenates them read from just
    # after its two occurrences.
    return (arc_a[pa + 1:] + [chord] + arc_a[:pa]
            + arc_b[pb + 1:] + [chord.reversed()] + arc_b[:pb])


def apply_word_move(letters: list, move) -> list:
    if isinstance(move, Cancel):
        return apply_cancel(letters, move)
    if isinstance(move, CutGlue):
        return apply_cut_glue(letters, move)
    raise PreconditionError(f"not a word move: {move!r}")


def _strict_blocks(letters: list) -> list:
    """Start positions of gathered blocks (x+, y+, x-, y-), x != y."""
    n = len(letters)
    starts = []
    for p in range(n):
        a, b, c, d = (letters[p], letters[(p + 1) % n],
                      letters[(p + 2) % n], letters[(p + 3) % n])
        if (a.label == c.label and b.label == d.label
                and a.label != b.label
                and (a.sign, b.sign, c.sign, d.sign) == (1, 1, -1, -1)):
            starts.append(p)
    return starts


def _gathered_labels(letters: list) -> set:
    out = set()
    n = len(letters)
    for p in _strict_blocks(letters):
        out.add(letters[p].label)
        out.add(letters[(p + 1) % n].label)
    return out


def is_canonical_word(word) -> bool:
    """True when the word is exactly x1 y1 x1' y1' ... read from position 0."""
    letters = list(word)
    n = len(letters)
    if n % 4:
        return False
    return all(p in _strict_blocks(letters) or p % 4 for p in range(0, n, 4))


def canonical_rotation(letters: list) -> list:
    """Rotate a fully gathered word to its least block-aligned rotation."""
    if not letters:
        return []
    n = len(letters)
    candidates = []
    for p in _strict_blocks(letters):
        rotated = letters[p:] + letters[:p]
        if is_canonical_word(rotated):
            candidates.append(rotated)
    if not candidates:
        raise InternalInvariantViolation("word is not fully gathered")
    return min(candidates, key=lambda ls: [ref.token() for ref in ls])


def _oracle_genus(letters: list) -> int:
    return genus(word_to_map(PolygonWord(letters))) if letters else 0


def _fresh_label(used: set, counter: list) -> str:
    while True:
        name = f"z{counter[0]}"
        counter[0] += 1
        if name not in used:
            used.add(name)
            return name


def _find_adjacent_inverse(letters: list):
    n = len(letters)
    for i in range(n):
        a, b = letters[i], letters[(i + 1) % n]
        if a.label == b.label and a.sign == -b.sign:
            return a.label
    return None


def _linked_pairs(letters: list, ignore: set):
    """Labels (a, b) outside ``ignore`` whose occurrences interleave."""
    positions = {}
    for p, ref in enumerate(letters):
        positions.setdefault(ref.label, []).append(p)
    order = [ref.label for ref in letters]
    seen = set()
    labels = [lab for lab in order if lab not in ignore
              and not (lab in seen or seen.add(lab))]
    for a in labels:
        p1, p2 = positions[a]
        for b in labels:
            if b == a:
                continue
            q1, q2 = positions[b]
            if (p1 < q1 < p2) != (p1 < q2 < p2):
                yield a, b
    return


def _gather_pair(letters: list, a: str, b: str, used: set, counter: list):
    """Two cut-and-glue moves that fuse the linked pair (a, b) into a fresh
    gathered block, leaving every other arc of the word intact."""
    n = len(letters)
    p1, p2 = [p for p, ref in enumerate(letters) if ref.label == a]
    moves = []
    c = _fresh_label(used, counter)
    first = CutGlue(new_label=c, old_label=b, cut=(p1, (p2 + 1) % n),
                    chord_sign=-1)
    letters = apply_cut_glue(letters, first)
    moves.append(first)
    q1 = next(p for p, ref in enumerate(letters)
              if ref.label == c and ref.sign == -1)
    q2 = next(p for p, ref in enumerate(letters)
              if ref.label == c and ref.sign == 1)
    d = _fresh_label(used, counter)
    second = CutGlue(new_label=d, old_label=a, cut=(q1, (q2 + 1) % len(letters)),
                     chord_sign=1)
    letters = apply_cut_glue(letters, second)
    moves.append(second)
    return letters, moves


def normalize(word):
    """Rewrite a one-vertex polygon word into canonical form.

    Returns (canonical PolygonWord, MoveTrace).  Adjacent inverse pairs are
    cancelled, then linked pairs are gathered into blocks x y x' y' until the
    word is a concatenation of such blocks; the genus can then be read off as
    length/4.  Every intermediate word is checked against the word_to_map
    chi oracle.
    """
    if not isinstance(word, PolygonWord):
        word = PolygonWord(word)
    letters = list(word.letters)
    target = _oracle_genus(letters)
    used = {ref.label for ref in letters}
    counter = [1]
    moves = []

    def checked(new_letters, new_moves):
        if _oracle_genus(new_letters) != target:
            raise InternalInvariantViolation(
                f"move {new_moves[-1]!r} changed the surface")
        return new_letters

    while True:
        lab = _find_adjacent_inverse(letters)
        if lab is not None:
            move = Cancel(lab)
            letters = checked(apply_cancel(letters, move), [move])
            moves.append(move)
            continue
        if not letters:
            break
        gathered = _gathered_labels(letters)
        present = {ref.label for ref in letters}
        if gathered == present:
            break
        try:
            a, b = next(_linked_pairs(letters, gathered))
        except StopIteration:
            raise PreconditionError(
                "no linked pair among ungathered edges; the word does not "
                "come from a one-vertex map") from None
        letters, pair_moves = _gather_pair(letters, a, b, used, counter)
        if _oracle_genus(letters) != target:
            raise InternalInvariantViolation("gathering changed the surface")
        moves.append(pair_moves[0])
        moves.append(pair_moves[1])
    if letters:
        letters = canonical_rotation(letters)
    return PolygonWord(letters), MoveTrace(tuple(moves))


def replay_word_moves(word, moves) -> PolygonWord:
    """Apply recorded word moves and the final canonical rotation."""
    letters = list(PolygonWord(word).letters if not isinstance(word, PolygonWord)
                   else word.letters)
    for move in moves:
        letters = apply_word_move(letters, move)
    if letters:
        letters = canonical_rotation(letters)
    return PolygonWord(letters)


# -- full pipeline ---------------------------------------------------------


def classify(ribbon_map: RibbonMap) -> ClassificationResult:
    """Genus, canonical polygon word (None for the sphere) and move trace."""
    if ribbon_map.num_edges == 0:
        return ClassificationResult(0, None, MoveTrace())
    reduced, map_trace = reduce_to_one_vertex_one_face(ribbon_map)
    if reduced.num_edges == 0:
        return ClassificationResult(0, None, map_trace)
    word = polygon_word(reduced)
    canonical, word_trace = normalize(word)
    trace = map_trace.extend(word_trace.moves)
    if len(canonical) == 0:
        return ClassificationResult(0, None, trace)
    g = len(canonical) // 4
    if g != genus(ribbon_map):
        raise InternalInvariantViolation(
            f"canonical word says genus {g}, chi says {genus(ribbon_map)}")
    return ClassificationResult(g, canonical, trace)


def replay(ribbon_map: RibbonMap, trace: MoveTrace) -> Optional[PolygonWord]:
    """Re-run a recorded trace from scratch; None means the sphere."""
    current = ribbon_map
    moves = list(trace)
    at = 0
    while at < len(moves) and isinstance(moves[at], (DeleteEdge, ContractEdge)):
        move = moves[at]
        if isinstance(move, DeleteEdge):
            current = delete_edge(current, move.label)
        else:
            current = contract_edge(current, move.label)
        at += 1
    if current.num_edges == 0:
        if at != len(moves):
            raise PreconditionError("word moves recorded for an edgeless map")
        return None
    word = polygon_word(current)
    final = replay_word_moves(word, moves[at:])
    return final if len(final) else None


# -- randomized instance generator ------------------------------------------


def insert_edge(ribbon_map: RibbonMap, label: str, face_index: int,
                corner_a: int, corner_b: int) -> RibbonMap:
    """Split one face with a fresh chord between two of its corners.

    Corners are face positions; the chord's forward dart enters the rotation
    just before the dart at ``corner_a`` (V stays, m and F grow by one).
    The edgeless sphere admits one insertion: the single loop.
    """
    if ribbon_map.num_edges == 0:
        return from_rotation_lists([label], [[label + "+", label + "-"]])
    if label in ribbon_map.edge_labels:
        raise PreconditionError(f"label {label!r} already in use")
    faces = trace_faces(ribbon_map)
    face = faces[face_index]
    da = face.darts[corner_a % len(face)]
    db = face.darts[corner_b % len(face)]
    old_faces = len(faces)
    rotations = []
    for v in range(ribbon_map.num_vertices):
        row = []
        for x in ribbon_map.star(v):
            if x == da:
                row.append(label + "+")
            if x == db:
                row.append(label + "-")
            row.append(ribbon_map.dart_ref(x).token())
        rotations.append(row)
    labels = list(ribbon_map.edge_labels) + [label]
    result = from_rotation_lists(labels, rotations)
    if len(trace_faces(result)) != old_faces + 1:
        raise InternalInvariantViolation("chord insertion did not split the face")
    if result.num_vertices != ribbon_map.num_vertices:
        raise InternalInvariantViolation("chord insertion changed V")
    return result


def split_vertex(ribbon_map: RibbonMap, label: str, vertex: int,
                 cut_a: int, cut_b: int) -> RibbonMap:
    """Pull a vertex apart into two joined by a fresh edge.

    The star is cut at positions ``cut_a``/``cut_b``; each side keeps its
    cyclic order and gains one side of the new edge.  Inverse to contracting
    that edge (V and m grow by one, F stays).
    """
    if label in ribbon_map.edge_labels:
        raise PreconditionError(f"label {label!r} already in use")
    star = ribbon_map.star(vertex)
    if not star:
        raise PreconditionError("cannot split an isolated vertex")
    deg = len(star)
    i, j = cut_a % deg, cut_b % deg
    if i == j:
        # Degenerate cut: the new edge carries off a bare endpoint.
        arc_a = []
        arc_b = [star[(j + t) % deg] for t in range(deg)]
    else:
        arc_a = [star[(i + t) % deg] for t in range((j - i) % deg)]
        arc_b = [star[(j + t) % deg] for t in range((i - j) % deg)]
    old_faces = len(trace_faces(ribbon_map))
    rotations = []
    for v in range(ribbon_map.num_vertices):
        if v == vertex:
            row_a = [ribbon_map.dart_ref(x).token() for x in arc_a] + [label + "+"]
            row_b = [ribbon_map.dart_ref(x).token() for x in arc_b] + [label + "-"]
            rotations.extend((row_a, row_b))
        else:
            rotations.append([ribbon_map.dart_ref(x).token()
                              for x in ribbon_map.star(v)])
    labels = list(ribbon_map.edge_labels) + [label]
    result = from_rotation_lists(labels, rotations)
    if result.num_vertices != ribbon_map.num_vertices + 1:
        raise InternalInvariantViolation("vertex split changed V by != 1")
    if len(trace_faces(result)) != old_faces:
        raise InternalInvariantViolation("vertex split changed F")
    return result


def random_filling_map(g: int, moves: int, seed: int) -> RibbonMap:
    """A pseudorandom genus-g map: petal(g) blown up by ``moves`` inverse
    reduction moves (chord insertions and vertex splits).  Deterministic in
    ``seed``; the genus never changes."""
    rng = random.Random(seed)
    current = petal(g)
    for i in range(1, moves + 1):
        label = f"e{i}"
        if current.num_edges == 0 or rng.random() < 0.5:
            faces = trace_faces(current)
            f = rng.randrange(len(faces))
            size = max(1, len(faces[f]))
            current = insert_edge(current, label, f,
                                  rng.randrange(size), rng.randrange(size))
        else:
            v = rng.randrange(current.num_vertices)
            deg = len(current.star(v))
            current = split_vertex(current, label, v,
                                   rng.randrange(deg), rng.randrange(deg))
    if genus(current) != g:
        raise InternalInvariantViolation("random moves changed the genus")
    return current
