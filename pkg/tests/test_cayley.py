import pytest

from ribbonsurf import (
    Presentation,
    PreconditionError,
    UnsupportedPresentationError,
    cayley_ball,
    free_presentation,
    free_reduce,
    parse_word,
    surface_group,
    zxz_presentation,
)


def test_free_rank2_ball_is_a_tree():
    expected = [1, 5, 17, 53, 161, 485]
    for r, count in enumerate(expected):
        ball = cayley_ball(free_presentation(2), r)
        assert ball.num_vertices == count
        assert len(ball.edges) == count - 1
        assert len(ball.cells) == 0


def test_zxz_ball_taxicab_counts():
    for r in range(6):
        ball = cayley_ball(zxz_presentation(), r)
        assert ball.num_vertices == 2 * r * r + 2 * r + 1


def test_zxz_cells_are_squares():
    ball = cayley_ball(zxz_presentation(), 2)
    assert len(ball.edges) == 16
    assert len(ball.cells) == 4
    for base_index, relator_index, cycle in ball.cells:
        assert relator_index == 0
        assert len(cycle) == 4
        assert cycle[0] == base_index
        assert len(set(cycle)) == 4


def test_genus2_radius1_count():
    ball = cayley_ball(surface_group(2), 1)
    assert ball.num_vertices == 9
    assert len(ball.edges) == 8
    assert len(ball.cells) == 0


def test_identity_first_and_reps_geodesic():
    ball = cayley_ball(zxz_presentation(), 3)
    assert ball.vertices[0] == ()
    for word in ball.vertices:
        assert free_reduce(word) == word
        # taxicab distance of the representative equals its length
        sums = {}
        for lab, s in word:
            sums[lab] = sums.get(lab, 0) + s
        assert sum(abs(v) for v in sums.values()) == len(word)


def test_edges_connect_adjacent_elements():
    # in a free group representatives are unique reduced words, so the
    # target representative is literally source * generator reduced
    ball = cayley_ball(free_presentation(2), 3)
    for u, gen, v in ball.edges:
        assert free_reduce(ball.vertices[u] + ((gen, 1),)) == ball.vertices[v]


def test_vertex_layering_by_radius():
    ball = cayley_ball(free_presentation(1), 4)
    lengths = [len(w) for w in ball.vertices]
    assert lengths == sorted(lengths)
    assert max(lengths) == 4
    assert ball.num_vertices == 9


def test_rejects_unsupported_presentation():
    with pytest.raises(UnsupportedPresentationError):
        cayley_ball(Presentation(("a",), (parse_word("aaa"),)), 2)


def test_rejects_negative_radius():
    with pytest.raises(PreconditionError):
        cayley_ball(free_presentation(2), -1)


def test_trivial_group_ball():
    ball = cayley_ball(surface_group(0), 3)
    assert ball.num_vertices == 1
    assert ball.vertices == (() ,)
    assert len(ball.edges) == 0
