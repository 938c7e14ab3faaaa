import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ribbonsurf import (
    DiscretePath,
    EndpointMismatchError,
    Presentation,
    PreconditionError,
    UnknownLabelError,
    UnsupportedPresentationError,
    free_presentation,
    free_reduce,
    from_rotation_lists,
    homotopic,
    homotopic_words,
    invert_word,
    is_trivial_word,
    parse_word,
    path_endpoints,
    petal,
    pi1_presentation,
    solver_kind,
    spanning_tree,
    surface_group,
    zxz_presentation,
)
from util import corpus

letter = st.tuples(st.sampled_from("abcd"), st.sampled_from([1, -1]))
words = st.lists(letter, max_size=30).map(tuple)


@settings(max_examples=80, deadline=None)
@given(words)
def test_free_reduce_idempotent_and_shorter(w):
    r = free_reduce(w)
    assert free_reduce(r) == r
    assert len(r) <= len(w)
    # no adjacent inverse pair survives
    for x, y in zip(r, r[1:]):
        assert not (x[0] == y[0] and x[1] == -y[1])


@settings(max_examples=60, deadline=None)
@given(words)
def test_word_times_inverse_reduces_to_identity(w):
    assert free_reduce(w + invert_word(w)) == ()


def test_surface_group_presentations():
    assert surface_group(0) == Presentation((), (), genus_hint=0)
    g1 = surface_group(1)
    assert g1.generators == ("a", "b")
    assert g1.relators == (parse_word("abAB"),)
    g2 = surface_group(2)
    assert g2.relators == (parse_word("abABcdCD"),)
    assert g2.deficiency == 3
    assert zxz_presentation() == g1


def test_solver_dispatch():
    assert solver_kind(free_presentation(3)) == "free"
    assert solver_kind(surface_group(1)) == "abelian"
    assert solver_kind(surface_group(4)) == "dehn"
    with pytest.raises(UnsupportedPresentationError):
        solver_kind(Presentation(("a",), (parse_word("aa"),)))


def test_trivial_words_free_group():
    free2 = free_presentation(2)
    assert is_trivial_word((), free2)
    assert is_trivial_word(parse_word("abBA"), free2)
    assert not is_trivial_word(parse_word("ab"), free2)
    with pytest.raises(UnknownLabelError):
        is_trivial_word(parse_word("x"), free2)


def test_trivial_words_torus():
    torus = surface_group(1)
    assert is_trivial_word(parse_word("abAB"), torus)
    assert is_trivial_word(parse_word("abABabAB"), torus)
    assert not is_trivial_word(parse_word("a"), torus)
    assert not is_trivial_word(parse_word("aabb"), torus)


def test_trivial_words_higher_genus():
    g2 = surface_group(2)
    relator = parse_word("abABcdCD")
    assert is_trivial_word(relator, g2)
    assert not is_trivial_word(parse_word("abAB"), g2)
    assert not is_trivial_word(parse_word("ab"), g2)
    # conjugates and products of conjugates of the relator are trivial
    rng = random.Random(7)
    gens = "abcd"
    for _ in range(30):
        w = ()
        for _ in range(rng.randrange(1, 4)):
            conj = tuple((rng.choice(gens), rng.choice((1, -1)))
                         for _ in range(rng.randrange(0, 4)))
            w = w + conj + relator + invert_word(conj)
        assert is_trivial_word(w, g2)


def test_dehn_needs_more_than_half_relator():
    # length-4 subwords of the octagon relator make no Dehn move
    g2 = surface_group(2)
    assert not is_trivial_word(parse_word("abAB"), g2)
    assert not is_trivial_word(parse_word("cdCD"), g2)


def test_abelianization_detects_nontrivial():
    rng = random.Random(11)
    for g in (2, 3):
        pres = surface_group(g)
        gens = pres.generators
        for _ in range(50):
            w = free_reduce(tuple((rng.choice(gens), rng.choice((1, -1)))
                                  for _ in range(rng.randrange(1, 9))))
            sums = {}
            for lab, s in w:
                sums[lab] = sums.get(lab, 0) + s
            if any(v != 0 for v in sums.values()):
                assert not is_trivial_word(w, pres)


def test_homotopic_words_wrapper():
    torus = surface_group(1)
    assert homotopic_words(parse_word("ab"), parse_word("ba"), torus)
    assert not homotopic_words(parse_word("a"), parse_word("b"), torus)


def test_spanning_tree_theta():
    theta = from_rotation_lists(
        ["e1", "e2", "e3"],
        [["e1+", "e2+", "e3+"], ["e1-", "e3-", "e2-"]])
    tree = spanning_tree(theta, 0)
    assert tree == {"e1"}
    assert spanning_tree(petal(2), 0) == set()


def test_pi1_matches_surface_groups_on_petals():
    for g in range(7):
        assert pi1_presentation(petal(g)) == surface_group(g)


def test_pi1_theta_sphere():
    theta = from_rotation_lists(
        ["e1", "e2", "e3"],
        [["e1+", "e2+", "e3+"], ["e1-", "e3-", "e2-"]])
    pres = pi1_presentation(theta)
    assert pres.generators == ("e2", "e3")
    assert len(pres.relators) == 3
    assert pres.genus_hint is None


def test_deficiency_identity_on_corpus():
    for g, m in corpus(40, seed=19):
        if m.num_edges == 0:
            assert pi1_presentation(m) == surface_group(0)
            continue
        pres = pi1_presentation(m)
        assert len(pres.generators) - len(pres.relators) == 2 * g - 1


def test_path_endpoints_and_validation():
    theta = from_rotation_lists(
        ["e1", "e2", "e3"],
        [["e1+", "e2+", "e3+"], ["e1-", "e3-", "e2-"]])
    p = DiscretePath((theta.dart_index(("e1", 1)), theta.dart_index(("e2", -1))))
    assert path_endpoints(theta, p) == (0, 0)
    with pytest.raises(PreconditionError):
        # e1+ then e3+ does not chain: e3+ starts where e1+ started
        path_endpoints(theta, DiscretePath((0, theta.dart_index(("e3", 1)))))
    constant = DiscretePath((), start=1)
    assert path_endpoints(theta, constant) == (1, 1)
    with pytest.raises(PreconditionError):
        path_endpoints(theta, DiscretePath(()))


def test_homotopic_loops_on_torus():
    m = petal(1)
    a = DiscretePath((m.dart_index(("a", 1)),))
    b = DiscretePath((m.dart_index(("b", 1)),))
    ab = DiscretePath((m.dart_index(("a", 1)), m.dart_index(("b", 1))))
    ba = DiscretePath((m.dart_index(("b", 1)), m.dart_index(("a", 1))))
    const = DiscretePath((), start=0)
    face = DiscretePath(tuple(m.dart_index(l) for l in parse_word("abAB")))
    assert not homotopic(m, a, b)
    assert homotopic(m, ab, ba)
    assert homotopic(m, face, const)
    assert homotopic(m, a, a)


def test_homotopic_face_loop_genus2():
    m = petal(2)
    face = DiscretePath(tuple(m.dart_index(l) for l in parse_word("abABcdCD")))
    const = DiscretePath((), start=0)
    assert homotopic(m, face, const)
    half = DiscretePath(tuple(m.dart_index(l) for l in parse_word("abAB")))
    assert not homotopic(m, half, const)


def test_homotopic_endpoint_mismatch():
    theta = from_rotation_lists(
        ["e1", "e2", "e3"],
        [["e1+", "e2+", "e3+"], ["e1-", "e3-", "e2-"]])
    p1 = DiscretePath((theta.dart_index(("e1", 1)),))
    const = DiscretePath((), start=0)
    with pytest.raises(EndpointMismatchError):
        homotopic(theta, p1, const)


def test_homotopic_free_reduction_before_dispatch():
    # identical paths succeed even where the presentation has no solver
    theta = from_rotation_lists(
        ["e1", "e2", "e3"],
        [["e1+", "e2+", "e3+"], ["e1-", "e3-", "e2-"]])
    p = DiscretePath((theta.dart_index(("e1", 1)), theta.dart_index(("e2", -1))))
    assert homotopic(theta, p, p)
    q = DiscretePath((theta.dart_index(("e1", 1)), theta.dart_index(("e3", -1))))
    with pytest.raises(UnsupportedPresentationError):
        homotopic(theta, p, q)


def test_homotopic_on_tree_is_always_true():
    path = from_rotation_lists(
        ["e1", "e2"], [["e1-"], ["e1+", "e2+"], ["e2-"]])
    out = DiscretePath((path.dart_index(("e1", -1)),))
    back = DiscretePath((path.dart_index(("e1", -1)),
                         path.dart_index(("e2", 1)),
                         path.dart_index(("e2", -1))))
    assert homotopic(path, out, back)


def test_genus_hint_mismatch_rejected():
    bogus = Presentation(("a", "b"), (parse_word("abAB"),), genus_hint=2)
    with pytest.raises(UnsupportedPresentationError):
        is_trivial_word(parse_word("a"), bogus)
