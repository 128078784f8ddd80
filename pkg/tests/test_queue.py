import math
import random

import pytest

from minq import (
    EmptyQueueError,
    IndirectQueue,
    Interval,
    LinearScanQueue,
    ListStream,
    advance,
    cmp_end,
    cmp_start,
)

iv = lambda l, r: Interval(l, r)


def loaded_queue(intervals, order, cls=IndirectQueue):
    q = cls(len(intervals), order)
    for i, item in enumerate(intervals):
        q.load(i, item)
        q.enqueue(i)
    return q


def test_start_order_top_prefers_prolonging_interval():
    q = loaded_queue([iv(0, 0), iv(1, 1), iv(0, 2)], cmp_start)
    # [0..2] starts with [0..0] but prolongs it, so it is strictly smaller
    assert q.top_index() == 2
    assert q.top() == iv(0, 2)


def test_equal_intervals_tie_break_to_smallest_index():
    q = loaded_queue([iv(0, 0), iv(1, 1), iv(0, 0)], cmp_start)
    assert q.top_index() == 0
    q2 = loaded_queue([iv(3, 3), iv(3, 3)], cmp_end)
    assert q2.top_index() == 0


def test_single_index():
    q = loaded_queue([iv(5, 6)], cmp_end)
    assert q.top_index() == 0
    assert q.size() == 1


def test_dequeue_all_then_empty_errors():
    q = loaded_queue([iv(0, 0), iv(1, 1), iv(2, 2)], cmp_end)
    seen = {q.dequeue() for _ in range(3)}
    assert seen == {0, 1, 2}
    assert q.size() == 0
    with pytest.raises(EmptyQueueError):
        q.top()
    with pytest.raises(EmptyQueueError):
        q.top_index()
    with pytest.raises(EmptyQueueError):
        q.dequeue()


def test_advance_replaces_top_interval():
    streams = [ListStream([iv(5, 5)]), ListStream([])]
    q = loaded_queue([iv(0, 0), iv(1, 1)], cmp_end)
    assert q.top_index() == 0
    advance(q, streams)
    assert q.reference[0] == iv(5, 5)
    assert q.size() == 2


def test_advance_dequeues_exhausted_list():
    streams = [ListStream([]), ListStream([])]
    q = loaded_queue([iv(0, 0), iv(1, 1)], cmp_end)
    advance(q, streams)
    assert q.size() == 1
    assert q.top_index() == 1


def test_right_extreme_is_running_max():
    q = loaded_queue([iv(0, 9), iv(1, 1)], cmp_start)
    assert q.right_extreme == 9
    streams = [ListStream([iv(2, 3)]), ListStream([])]
    advance(q, streams)  # top is [0..9], replaced by [2..3]
    assert q.reference[0] == iv(2, 3)
    assert q.right_extreme == 9  # never decreases


def test_span_of():
    q = loaded_queue([iv(0, 0), iv(1, 1), iv(0, 0)], cmp_start)
    assert q.span_of() == iv(0, 1)
    assert loaded_queue([iv(3, 7)], cmp_start).span_of() == iv(3, 7)
    assert loaded_queue([iv(2, 2), iv(1, 1)], cmp_start).span_of() == iv(1, 2)


@pytest.mark.parametrize("order", [cmp_end, cmp_start])
def test_differential_against_linear_scan(order):
    rng = random.Random(order is cmp_end)
    for _ in range(200):
        m = rng.randint(1, 6)
        q = IndirectQueue(m, order)
        ref = LinearScanQueue(m, order)
        outside = list(range(m))
        inside = []

        def rand_iv():
            l = rng.randint(0, 30)
            return iv(l, l + rng.randint(0, 5))

        for _ in range(50):
            choices = ["enqueue"] if outside else []
            if inside:
                choices += ["dequeue", "change", "inspect"]
            op = rng.choice(choices)
            if op == "enqueue":
                i = outside.pop(rng.randrange(len(outside)))
                item = rand_iv()
                for target in (q, ref):
                    target.load(i, item)
                    target.enqueue(i)
                inside.append(i)
            elif op == "dequeue":
                got, expected = q.dequeue(), ref.dequeue()
                assert got == expected
                inside.remove(got)
                outside.append(got)
            elif op == "change":
                top = q.top_index()
                item = rand_iv()
                for target in (q, ref):
                    target.load(top, item)
                    target.change()
            else:
                assert q.top_index() == ref.top_index()
                assert q.top() == ref.top()
                assert q.right_extreme == ref.right_extreme
                assert q.size() == ref.size()


def test_top_monotone_under_start_order_advances():
    rng = random.Random(17)
    for _ in range(100):
        m = rng.randint(1, 4)
        lists = []
        for _ in range(m):
            n = rng.randint(1, 8)
            positions = sorted(rng.sample(range(40), n))
            lists.append([iv(p, p + rng.randint(0, 2)) for p in positions])
            # keep rights strictly increasing too
            fixed = []
            right = -1
            for item in lists[-1]:
                r = max(item.right, right + 1)
                fixed.append(iv(item.left, r))
                right = r
            lists[-1] = fixed
        streams = [ListStream(a) for a in lists]
        q = IndirectQueue(m, cmp_start)
        for i, s in enumerate(streams):
            first = s.next()
            q.load(i, first)
            q.enqueue(i)
        prev = q.top()
        while q.size() == m:
            advance(q, streams)
            if q.size() == m:
                assert cmp_start(prev, q.top()) <= 0
                prev = q.top()


def test_span_contains_enqueued_slots_and_is_left_tight():
    rng = random.Random(23)
    for _ in range(200):
        m = rng.randint(1, 5)
        items = []
        for i in range(m):
            l = rng.randint(0, 20)
            items.append(iv(l, l + rng.randint(0, 6)))
        q = loaded_queue(items, cmp_start)
        s = q.span_of()
        assert all(s.left <= item.left and item.right <= s.right for item in items)
        assert s.left == min(item.left for item in items)


def test_mutation_comparison_budget():
    rng = random.Random(31)
    for m in range(1, 8):
        limit = (math.ceil(math.log2(m)) if m > 1 else 0) + 1
        q = IndirectQueue(m, cmp_end)
        for i in range(m):
            l = rng.randint(0, 50)
            q.load(i, iv(l, l + rng.randint(0, 3)))
            q.enqueue(i)
        for _ in range(200):
            if q.size() == 0:
                break
            if rng.random() < 0.3:
                q.dequeue()
            else:
                top = q.top_index()
                old = q.reference[top]
                left = old.left + rng.randint(1, 3)
                right = max(left, old.right + rng.randint(1, 3))
                q.load(top, iv(left, right))
                q.change()
        assert q.max_mutation_comparisons <= limit
