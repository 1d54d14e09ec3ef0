"""Unit tests for tdc/run.py — batch orchestration."""

from tdc.run import run_batch


class TestRunBatch:
    def test_sequential_results_in_order(self):
        assert run_batch(abs, [-3, 1, -2]) == [3, 1, 2]

    def test_callback_sees_every_result(self):
        seen = []
        run_batch(abs, [-1, -2], on_result=lambda i, r: seen.append((i, r)))
        assert seen == [(0, 1), (1, 2)]

    def test_pool_keeps_input_order(self):
        seen = []
        results = run_batch(abs, range(-8, 0), workers=3, on_result=lambda i, r: seen.append(i))
        assert results == [8, 7, 6, 5, 4, 3, 2, 1]
        assert sorted(seen) == list(range(8))

    def test_single_item_skips_the_pool(self):
        assert run_batch(abs, [-4], workers=4) == [4]

    def test_empty(self):
        assert run_batch(abs, [], workers=2) == []
