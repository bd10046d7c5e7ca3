import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gridplan import (Field, InvalidCellError, InvalidPlacementError,
                      build_weight_matrix, dispatch, floyd, select_closest)
from gridplan import apsp
from helpers import enclosed_dest_field, small_fields, worked_field


class TestDispatch:
    def test_worked_example(self):
        result = dispatch(worked_field(), {1, 14}, 16)
        assert result.winner == 14
        assert abs(result.per_source[1][0] - 6.0) <= 1e-9
        assert abs(result.per_source[14][0] - 2.0) <= 1e-9
        assert result.per_source[14][1].cells == (14, 16)

    def test_source_is_destination(self):
        result = dispatch(worked_field(), {16}, 16)
        assert result.winner == 16
        dist, path = result.per_source[16]
        assert dist == 0.0 and path.cells == (16,)

    def test_enclosed_destination_has_no_winner(self):
        field, dest = enclosed_dest_field()
        result = dispatch(field, {1, 5, 25}, dest)
        assert result.winner is None
        for dist, path in result.per_source.values():
            assert np.isinf(dist) and path is None

    def test_tie_breaks_to_smallest_id(self):
        # sources 1 and 3 both sit one cell from dest 2
        result = dispatch(Field(3, 3), {3, 1}, 2)
        assert result.per_source[1][0] == result.per_source[3][0] == 1.0
        assert result.winner == 1

    def test_duplicate_sources_collapse(self):
        result = dispatch(worked_field(), (14, 14, 1), 16)
        assert sorted(result.per_source) == [1, 14]

    def test_rejects_obstacle_source(self):
        with pytest.raises(InvalidPlacementError):
            dispatch(worked_field(), {2}, 16)

    def test_rejects_obstacle_destination(self):
        with pytest.raises(InvalidPlacementError):
            dispatch(worked_field(), {1}, 7)

    def test_rejects_empty_sources(self):
        with pytest.raises(ValueError):
            dispatch(worked_field(), set(), 16)

    def test_rejects_invalid_ids(self):
        with pytest.raises(InvalidCellError):
            dispatch(worked_field(), {0}, 16)
        with pytest.raises(InvalidCellError):
            dispatch(worked_field(), {1}, 99)

    def test_single_solve_regardless_of_source_count(self, monkeypatch):
        calls = []
        real = apsp.floyd

        def counting(w):
            calls.append(1)
            return real(w)

        monkeypatch.setattr(apsp, "floyd", counting)
        field = Field(5, 5, frozenset({13}))
        for sources in ({1}, {1, 2, 3}, set(range(1, 13))):
            calls.clear()
            dispatch(field, sources, 25)
            assert len(calls) == 1

    def test_deterministic(self):
        a = dispatch(worked_field(), {1, 14, 15}, 16)
        b = dispatch(worked_field(), {1, 14, 15}, 16)
        assert a == b

    @given(small_fields(max_side=5), st.data())
    @settings(max_examples=50)
    def test_winner_optimality(self, field, data):
        free = sorted(set(range(1, field.n_cells + 1)) - field.obstacles)
        dest = data.draw(st.sampled_from(free))
        sources = data.draw(st.sets(st.sampled_from(free), min_size=1))
        result = dispatch(field, sources, dest)
        dists = {s: d for s, (d, _) in result.per_source.items()}
        if result.winner is None:
            assert all(np.isinf(d) for d in dists.values())
        else:
            best = dists[result.winner]
            assert np.isfinite(best)
            assert all(best <= d for d in dists.values())
            ties = [s for s, d in dists.items() if d == best]
            assert result.winner == min(ties)


class TestSelectClosest:
    def test_reuses_existing_solve(self):
        field = worked_field()
        result = floyd(build_weight_matrix(field))
        picked = select_closest(result, field, {1, 14}, 16)
        assert picked.winner == 14
        assert picked == dispatch(field, {1, 14}, 16)

    def test_validates_against_field(self):
        field = worked_field()
        result = floyd(build_weight_matrix(field))
        with pytest.raises(InvalidPlacementError):
            select_closest(result, field, {2}, 16)
