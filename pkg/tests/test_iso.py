import random

import pytest

from ribbonsurf import (
    EmptyMapError,
    are_isomorphic,
    canonical_encoding,
    from_rotation_lists,
    petal,
    refine,
    relabeled,
)
from util import corpus, scramble


def test_relabeled_copies_are_isomorphic():
    m = petal(2)
    copy = relabeled(m, {"a": "w", "b": "x", "c": "y", "d": "z"})
    bijection = are_isomorphic(m, copy)
    assert bijection is not None
    assert bijection.commutes(m, copy)


def test_encoding_invariant_under_scrambling():
    rng = random.Random(17)
    for _, m in corpus(12, seed=23):
        if m.num_edges == 0:
            continue
        base = canonical_encoding(m)
        for _ in range(20):
            assert canonical_encoding(scramble(m, rng)) == base


def test_wedge_embeddings_not_isomorphic():
    interleaved = from_rotation_lists(["a", "b"], [["a+", "b+", "a-", "b-"]])
    nested = from_rotation_lists(["a", "b"], [["a+", "a-", "b+", "b-"]])
    assert are_isomorphic(interleaved, nested) is None
    assert canonical_encoding(interleaved) != canonical_encoding(nested)


def test_different_sizes_fast_reject():
    assert are_isomorphic(petal(1), petal(2)) is None


def test_refined_map_not_isomorphic_to_original():
    m = petal(1)
    assert are_isomorphic(m, refine(m)) is None


def test_encoding_equality_iff_isomorphic_on_small_family():
    maps = [petal(1),
            from_rotation_lists(["a", "b"], [["a+", "b+", "a-", "b-"]]),
            from_rotation_lists(["a", "b"], [["a+", "a-", "b+", "b-"]]),
            from_rotation_lists(["a", "b"], [["a+", "b-", "a-", "b+"]])]
    for i, m1 in enumerate(maps):
        for j, m2 in enumerate(maps):
            same_encoding = (canonical_encoding(m1) == canonical_encoding(m2))
            assert same_encoding == (are_isomorphic(m1, m2) is not None)


def test_empty_maps_isomorphic_but_not_encodable():
    empty = from_rotation_lists([], [[]])
    assert are_isomorphic(empty, empty) is not None
    with pytest.raises(EmptyMapError):
        canonical_encoding(empty)


def test_bijection_maps_darts_consistently():
    m = petal(2)
    rng = random.Random(5)
    copy = scramble(m, rng)
    bijection = are_isomorphic(m, copy)
    assert bijection is not None
    seen = sorted(bijection(d) for d in range(m.num_darts))
    assert seen == list(range(m.num_darts))
    assert bijection.commutes(m, copy)
