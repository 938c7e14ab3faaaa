"""Acceptance suite: one test per criterion, one pass/fail line each.

Run with  pytest -v tests/test_acceptance.py  and each criterion reports as
its own PASSED/FAILED line; add -s for the timing detail.  Bounds are wall
clock on a single core.
"""

import pathlib
import random
import time

from ribbonsurf import (
    Cancel,
    CutGlue,
    are_isomorphic,
    canonical_encoding,
    classify,
    contract_edge,
    delete_face_merging_edge,
    euler_characteristic,
    format_word,
    free_presentation,
    free_reduce,
    from_rotation_lists,
    genus,
    invert_word,
    is_trivial_word,
    cayley_ball,
    parse_document,
    parse_word,
    petal,
    pi1_presentation,
    polygon_word,
    random_filling_map,
    reduce_to_one_vertex_one_face,
    serialize_document,
    standard_pair_labels,
    surface_group,
    surface_report,
    trace_faces,
    zxz_presentation,
)
from ribbonsurf.classify import (
    PolygonWord,
    apply_word_move,
    canonical_rotation,
    word_to_map,
)
from ribbonsurf.cli import dispatch
from util import corpus, scramble

DATA = pathlib.Path(__file__).resolve().parent.parent / "demos" / "data"


def _timed(bound_s):
    start = time.perf_counter()

    def done(label):
        elapsed = time.perf_counter() - start
        assert elapsed < bound_s, f"{label} took {elapsed:.2f}s, bound {bound_s}s"
        return elapsed

    return done


def test_criterion_01_petal_family():
    done = _timed(1.0)
    for g in range(7):
        m = petal(g)
        report = surface_report(m)
        assert m.num_edges == 2 * g
        assert report.num_vertices == 1
        assert report.num_faces == 1
        assert report.euler_characteristic == 2 - 2 * g
        assert report.genus == g
        if g >= 1:
            labels = standard_pair_labels(g)
            expected = "".join(p + q + p.upper() + q.upper()
                               for p, q in zip(labels[::2], labels[1::2]))
            assert format_word(polygon_word(m)) == expected
    elapsed = done("petal family")
    print(f"\ncriterion 1 PASS: petal family g=0..6 exact ({elapsed:.2f}s)")


def test_criterion_02_face_partition():
    done = _timed(5.0)
    maps = corpus(1000, max_edges=12, seed=101)
    for _, m in maps:
        faces = trace_faces(m)
        darts = sorted(d for f in faces for d in f.darts)
        assert darts == list(range(m.num_darts))
        assert sum(len(f.darts) for f in faces) == 2 * m.num_edges
    elapsed = done("face partition")
    print(f"criterion 2 PASS: face partition on 1000 maps ({elapsed:.2f}s)")


def test_criterion_03_move_invariance():
    done = _timed(10.0)
    rng = random.Random(202)
    checked = 0
    while checked < 1000:
        g = rng.randrange(0, 4)
        m = random_filling_map(g, rng.randrange(0, 12 - 2 * g + 1),
                               rng.randrange(10 ** 6))
        chi = euler_characteristic(m)
        step = delete_face_merging_edge(m)
        if step is not None:
            smaller, _ = step
            assert smaller.num_vertices == m.num_vertices
            assert smaller.num_edges == m.num_edges - 1
            assert len(trace_faces(smaller)) == len(trace_faces(m)) - 1
            assert euler_characteristic(smaller) == chi
            checked += 1
        non_loops = [lab for lab in m.edge_labels
                     if m.vertex_of(m.dart_index((lab, 1)))
                     != m.vertex_of(m.dart_index((lab, -1)))]
        if non_loops:
            lab = rng.choice(non_loops)
            smaller = contract_edge(m, lab)
            assert smaller.num_vertices == m.num_vertices - 1
            assert smaller.num_edges == m.num_edges - 1
            assert len(trace_faces(smaller)) == len(trace_faces(m))
            assert euler_characteristic(smaller) == chi
            checked += 1
    elapsed = done("move invariance")
    print(f"criterion 3 PASS: 1000 move applications invariant ({elapsed:.2f}s)")


def test_criterion_04_classification_round_trip():
    done = _timed(30.0)
    rng = random.Random(303)
    for _ in range(300):
        g = rng.randrange(0, 6)
        k = rng.randrange(0, 31)
        m = random_filling_map(g, k, rng.randrange(10 ** 6))
        result = classify(m)
        assert result.genus == g == genus(m)
        if g == 0:
            assert result.canonical_word is None
            continue
        assert len(result.canonical_word) == 4 * g
        # replay the word-level moves, checking the chi oracle at each stage
        reduced, _ = reduce_to_one_vertex_one_face(m)
        letters = list(polygon_word(reduced).letters)
        for move in result.trace:
            if isinstance(move, (Cancel, CutGlue)):
                letters = apply_word_move(letters, move)
                assert genus(word_to_map(PolygonWord(letters))) == g
        assert PolygonWord(canonical_rotation(letters)) == result.canonical_word
    elapsed = done("classification")
    print(f"criterion 4 PASS: 300 round trips with oracle checks ({elapsed:.2f}s)")


def test_criterion_05_linkedness():
    done = _timed(10.0)
    rng = random.Random(404)
    count = 0
    for source in ([petal(g) for g in range(1, 7)]
                   + [random_filling_map(rng.randrange(1, 4),
                                         rng.randrange(0, 10),
                                         rng.randrange(10 ** 6))
                      for _ in range(100)]):
        reduced, _ = reduce_to_one_vertex_one_face(source)
        if reduced.num_edges == 0:
            continue
        letters = list(polygon_word(reduced))
        pos = {}
        for i, ref in enumerate(letters):
            pos.setdefault(ref.label, []).append(i)
        for lab, (i1, i2) in pos.items():
            lo, hi = min(i1, i2), max(i1, i2)
            inside = {letters[i].label for i in range(lo + 1, hi)} - {lab}
            outside = ({letters[i].label for i in range(lo)}
                       | {letters[i].label
                          for i in range(hi + 1, len(letters))}) - {lab}
            assert inside & outside, f"edge {lab} unlinked"
            count += 1
    elapsed = done("linkedness")
    print(f"criterion 5 PASS: all {count} edges linked ({elapsed:.2f}s)")


def test_criterion_06_presentations():
    done = _timed(10.0)
    for g in range(7):
        assert pi1_presentation(petal(g)) == surface_group(g)
    checked = 0
    for g, m in corpus(250, seed=505):
        if m.num_edges == 0:
            # the edgeless sphere has no faces to supply relators; the
            # deficiency identity concerns maps with edges
            continue
        pres = pi1_presentation(m)
        assert len(pres.generators) - len(pres.relators) == 2 * g - 1
        checked += 1
    assert checked >= 200
    elapsed = done("presentations")
    print(f"criterion 6 PASS: petal presentations standard, deficiency 2g-1 "
          f"({elapsed:.2f}s)")


def test_criterion_07_word_problem():
    done = _timed(10.0)
    for g in range(1, 5):
        pres = surface_group(g)
        assert is_trivial_word(pres.relators[0], pres)
    commutator = parse_word("abAB")
    assert is_trivial_word(commutator, surface_group(1))
    assert not is_trivial_word(commutator, surface_group(2))

    rng = random.Random(606)
    found = 0
    while found < 1000:
        g = rng.choice((1, 2, 3))
        pres = surface_group(g)
        w = free_reduce(tuple((rng.choice(pres.generators),
                               rng.choice((1, -1)))
                              for _ in range(rng.randrange(1, 9))))
        sums = {}
        for lab, s in w:
            sums[lab] = sums.get(lab, 0) + s
        if not any(sums.values()):
            continue
        assert not is_trivial_word(w, pres)
        found += 1

    for g in (2, 3):
        pres = surface_group(g)
        relator = pres.relators[0]
        for _ in range(50):
            w = ()
            for _ in range(rng.randrange(1, 5)):
                conj = tuple((rng.choice(pres.generators),
                              rng.choice((1, -1)))
                             for _ in range(rng.randrange(0, 4)))
                w = w + conj + relator + invert_word(conj)
            assert is_trivial_word(w, pres)
    elapsed = done("word problem")
    print(f"criterion 7 PASS: word battery exact ({elapsed:.2f}s)")


def test_criterion_08_cayley_counts():
    done = _timed(5.0)
    free_counts = [1, 5, 17, 53, 161, 485]
    for r, expected in enumerate(free_counts):
        ball = cayley_ball(free_presentation(2), r)
        assert ball.num_vertices == expected
        assert len(ball.edges) == expected - 1
        assert len(ball.cells) == 0
    for r in range(11):
        ball = cayley_ball(zxz_presentation(), r)
        assert ball.num_vertices == 2 * r * r + 2 * r + 1
        assert all(len(cycle) == 4 for _, _, cycle in ball.cells)
    assert cayley_ball(surface_group(2), 1).num_vertices == 9
    elapsed = done("cayley")
    print(f"criterion 8 PASS: Cayley counts exact ({elapsed:.2f}s)")


def test_criterion_09_isomorphism_invariance():
    done = _timed(60.0)
    rng = random.Random(707)
    shipped = [parse_document((DATA / p.name).read_text())
               for p in sorted(DATA.glob("*.json"))]
    maps = []
    for doc in shipped:
        m = from_rotation_lists(doc.edges, doc.rotations)
        if m.num_edges:
            maps.append(m)
    for m in maps:
        base = canonical_encoding(m)
        for _ in range(200):
            copy = scramble(m, rng)
            assert canonical_encoding(copy) == base
        bijection = are_isomorphic(m, scramble(m, rng))
        assert bijection is not None
    interleaved = from_rotation_lists(["a", "b"], [["a+", "b+", "a-", "b-"]])
    nested = from_rotation_lists(["a", "b"], [["a+", "a-", "b+", "b-"]])
    assert are_isomorphic(interleaved, nested) is None
    # witnesses must commute with both structure maps
    for m in maps[:4]:
        copy = scramble(m, rng)
        bijection = are_isomorphic(m, copy)
        assert bijection.commutes(m, copy)
    elapsed = done("isomorphism")
    print(f"criterion 9 PASS: encodings invariant, wedge pair split, "
          f"witnesses verified ({elapsed:.2f}s)")


def test_criterion_10_cli_round_trip():
    done = _timed(20.0)
    shipped = sorted(DATA.glob("*.json"))
    assert shipped, "no shipped documents"
    for path in shipped:
        text = path.read_text()
        assert serialize_document(parse_document(text)) == text, path.name
    for path in shipped:
        for args in (["classify", str(path)], ["report", str(path)]):
            first = dispatch(args)
            second = dispatch(args)
            assert first.exit_code == second.exit_code == 0
            assert first.output == second.output
    gen = ["random", "--genus", "2", "--moves", "9", "--seed", "77"]
    assert dispatch(gen).output == dispatch(gen).output
    elapsed = done("cli")
    print(f"criterion 10 PASS: {len(shipped)} documents byte-stable, "
          f"outputs deterministic ({elapsed:.2f}s)")
