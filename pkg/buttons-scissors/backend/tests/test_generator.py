import pytest
from pydantic import ValidationError

from bench.errors import GeneratorError
from bench.generator import PRNG_NAME, GenParams, generate_counterexample, generate_instance
from board.codec import serialize_board


def params(**overrides):
    values = dict(rows=6, cols=5, colors=3, density=0.5, seed=7)
    values.update(overrides)
    return GenParams(**values)


class TestGenParams:
    def test_fraction_density(self):
        assert params(density="1/2").density == 0.5

    @pytest.mark.parametrize(
        "overrides",
        [{"rows": 0}, {"cols": 0}, {"colors": 0}, {"density": 1.5}, {"density": -0.1}, {"seed": -1}, {"seed": 2 ** 64}],
    )
    def test_rejects_invalid(self, overrides):
        with pytest.raises(ValidationError):
            params(**overrides)


class TestGenerateInstance:
    def test_zero_density(self):
        b = generate_instance(params(density=0))
        assert (b.rows, b.cols, b.button_count) == (6, 5, 0)

    def test_full_density_single_color(self):
        b = generate_instance(params(density=1, colors=1))
        assert b.to_rows() == [[1] * 5 for _ in range(6)]

    def test_deterministic(self):
        assert serialize_board(generate_instance(params())) == serialize_board(generate_instance(params()))

    def test_seed_changes_board(self):
        a = generate_instance(params(rows=10, cols=10, seed=1))
        b = generate_instance(params(rows=10, cols=10, seed=2))
        assert a != b

    def test_colors_in_range(self):
        b = generate_instance(params(rows=20, cols=20, colors=3, density=1))
        assert set(b.cells.values()) <= {1, 2, 3}
        assert b.button_count == 400

    def test_prng_name(self):
        assert PRNG_NAME == "numpy.PCG64"


class TestCounterexample:
    def test_four_rows(self):
        assert serialize_board(generate_counterexample(4)) == "4 2\n1 0\n0 2\n1 0\n0 2\n"

    @pytest.mark.parametrize("n", [0, 1, 3, 7, -2])
    def test_rejects_odd_or_small(self, n):
        with pytest.raises(GeneratorError):
            generate_counterexample(n)

    def test_shape(self):
        b = generate_counterexample(50)
        assert (b.rows, b.cols, b.button_count) == (50, 2, 50)
