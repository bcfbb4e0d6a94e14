import pytest
from hypothesis import given, settings, strategies as st

from earring.graph import (
    Vertex,
    base_vertex,
    classify,
    e_set,
    formula_removes,
    in_line,
    island_data,
    island_of,
    neighbor,
    ray_agreement,
    removal_cross_check,
    survives,
)
from earring.words import anchor, invert, nth_word, reduce_word


class TestIslandData:
    def test_zpath_of_first_island(self):
        d = island_data(1)
        assert d.word == (1,)
        assert d.z_path == ((1, 2, 1, 2), (1, 2, 1, 2, 1))

    def test_zpath_cancellation(self):
        d = island_data(2)
        assert d.word == (-1,)
        assert d.z_path[1] == (1, 2, 1, 2, 1, 2, 1, 2)

    def test_zpath_starts_at_anchor(self):
        for j in (1, 7, 23, 60):
            d = island_data(j)
            assert d.z_path[0] == anchor(j)
            assert len(d.z_path) == len(d.word) + 1

    def test_consecutive_zpath_entries_adjacent(self):
        for j in (1, 5, 9, 31):
            d = island_data(j)
            for a, b in zip(d.z_path, d.z_path[1:]):
                assert abs(len(a) - len(b)) == 1

    def test_level(self):
        assert island_data(1).level == 2
        assert island_data(9).level == 3


class TestInLine:
    def test_same_vertex(self):
        assert in_line((1, 2), (1, 2), 3) == 0

    def test_forward(self):
        assert in_line((1, 2, 3, 3), (1, 2), 3) == 2

    def test_backward_with_cancellation(self):
        assert in_line((1,), (1, 2), 2) == -1

    def test_absent(self):
        assert in_line((1, 2), (2, 1), 3) is None

    def test_agrees_with_fast_path(self):
        # the membership oracle's suffix-run shortcut against the definition
        d = island_data(9)
        for z in d.z_set:
            for s in range(1, d.level + 1):
                for r in range(-4, 5):
                    v = reduce_word(z + ((s,) * r if r > 0 else (-s,) * (-r)))
                    assert in_line(v, z, s) is not None


class TestIslandOf:
    def test_base_point_on_no_island(self):
        assert island_of(()) is None

    def test_anchors(self):
        for j in range(1, 51):
            assert island_of(anchor(j)) == j

    def test_line_vertex(self):
        v = reduce_word(anchor(9) + (3, 3))
        assert island_of(v) == 9

    def test_ray_vertices_between_islands(self):
        # ray prefixes 11 and 12 fall in the gap between the reach of
        # island 2 (lines end at prefix 10) and island 3 (starts at 13)
        from earring.words import zigzag_prefix
        assert island_of(zigzag_prefix(11)) is None
        assert island_of(zigzag_prefix(12)) is None

    def test_ray_vertices_on_island_lines(self):
        # nearby ray prefixes do lie on lines through the islands:
        # prefix 6 = reduce(anchor(1) a_2^-1 ... ) etc.
        from earring.words import zigzag_prefix
        assert island_of(zigzag_prefix(6)) == 1
        assert island_of(zigzag_prefix(7)) == 2


class TestSurvives:
    def test_base_point(self):
        assert survives(())

    def test_bare_high_letter_dies(self):
        assert not survives((3,))
        assert not survives((5,))

    def test_ray_always_survives(self):
        from earring.words import zigzag_prefix
        for n in (1, 10, 100, 500):
            assert survives(zigzag_prefix(n))

    def test_line_vertex_survives(self):
        assert survives(reduce_word(anchor(9) + (3,)))
        assert survives(reduce_word(anchor(9) + (3, 3, 3)))

    def test_leaving_line_with_high_label_dies(self):
        assert not survives(reduce_word(anchor(9) + (3, 4)))

    def test_high_label_at_anchor_dies(self):
        assert not survives(reduce_word(anchor(9) + (4,)))

    def test_unreduced_rejected(self):
        with pytest.raises(ValueError):
            survives((1, -1))

    def test_prefix_closed(self):
        v = reduce_word(anchor(9) + (3, 3))
        for t in range(len(v) + 1):
            assert survives(v[:t])


class TestESet:
    def test_base_point(self):
        assert e_set(()) == {1, 2}

    def test_anchor_nine(self):
        assert e_set(anchor(9)) == {1, 2, 3}

    def test_line_vertex(self):
        assert e_set(reduce_word(anchor(9) + (3, 3))) == {1, 2, 3}

    def test_off_island_ray_vertex(self):
        from earring.words import zigzag_prefix
        assert e_set(zigzag_prefix(11)) == {1, 2}

    def test_requires_survival(self):
        with pytest.raises(ValueError):
            e_set((3,))


class TestNeighbor:
    def test_tree_step_from_base(self):
        kind, v = neighbor(base_vertex(), 1)
        assert kind == "tree"
        assert v.word == (1,)

    def test_loop_at_base(self):
        kind, v = neighbor(base_vertex(), 3)
        assert kind == "loop"
        assert v is base_vertex()

    def test_tree_edges_involutive(self):
        v = Vertex.make(anchor(9))
        for s in sorted(v.e_set):
            _, u = neighbor(v, s)
            _, back = neighbor(u, -s)
            assert back == v

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            neighbor(base_vertex(), 0)


class TestCrossCheck:
    @pytest.mark.parametrize("j", [1, 2, 9])
    def test_no_disagreements(self, j):
        report = removal_cross_check(j, 2)
        assert report.examined > 0
        assert report.disagreements == ()

    def test_a1_neighbor_of_zpath_never_removed(self):
        d = island_data(1)
        for z in d.z_set:
            for letter in (1, -1, 2, -2):
                v = reduce_word(z + (letter,))
                if classify(v) is None:
                    assert not formula_removes(v, 1)


# --- sampled invariants ----------------------------------------------------

def _island_sample(j, extent=6):
    d = island_data(j)
    out = set(d.z_set)
    for z in d.z_set:
        for s in range(1, d.level + 1):
            for r in range(1, extent + 1):
                out.add(reduce_word(z + (s,) * r))
                out.add(reduce_word(z + (-s,) * r))
    return out


class TestIslandInvariants:
    def test_disjointness(self):
        owners = {}
        for j in range(1, 51):
            for v in _island_sample(j):
                assert owners.setdefault(v, j) == j

    def test_membership_of_samples(self):
        for j in (1, 2, 9, 17, 40):
            for v in _island_sample(j):
                assert island_of(v) == j

    def test_island_bound_on_labels(self):
        for j in (1, 9, 17):
            nj = island_data(j).level
            for v in _island_sample(j):
                es = e_set(v)
                assert {1, 2} <= es <= set(range(1, nj + 1))

    def test_high_label_neighbors_stay_on_island(self):
        for j in (9, 17, 40):
            for v in _island_sample(j, extent=3):
                for i in e_set(v):
                    if i < 3:
                        continue
                    for letter in (i, -i):
                        w = reduce_word(v + (letter,))
                        assert island_of(w) == j

    def test_zpath_in_pruned_tree(self):
        for j in range(1, 41):
            for z in island_data(j).z_path:
                assert survives(z)


class TestLabelSymmetry:
    def test_in_out_symmetry(self):
        samples = [(), anchor(1), anchor(9), reduce_word(anchor(9) + (3, 3))]
        from earring.words import zigzag_prefix
        samples += [zigzag_prefix(n) for n in (3, 6, 11)]
        for v in samples:
            hit = classify(v)
            top = island_data(hit.j).level + 2 if hit else 4
            for i in range(1, top + 1):
                fwd = survives(reduce_word(v + (i,)))
                bwd = survives(reduce_word(v + (-i,)))
                assert fwd == bwd == (i in e_set(v))


class TestRayAgreement:
    @given(st.lists(st.integers(min_value=-3, max_value=3).filter(bool), max_size=40).map(tuple))
    def test_matches_naive(self, w):
        p = 0
        while p < len(w) and w[p] == (1 if p % 2 == 0 else 2):
            p += 1
        assert ray_agreement(w) == p
