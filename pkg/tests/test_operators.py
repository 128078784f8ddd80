import random

from minq import (
    Interval,
    ListStream,
    and_span,
    block,
    difference,
    from_positions,
    lowpass,
    materialize,
    or_merge,
    ordered_and,
    oracle_and,
    oracle_block,
    oracle_difference,
    oracle_lowpass,
    oracle_or,
    oracle_ordered_and,
    profile,
)

from helpers import (
    HOT_OR_COLD,
    PEASE,
    PORRIDGE,
    RHYME_ANTICHAIN,
    random_inputs,
    singleton_antichain,
    singletons,
)

iv = lambda l, r: Interval(l, r)


def run(op, inputs, **kwargs):
    return materialize(op([ListStream(a) for a in inputs], **kwargs))


def test_or_merges_sorted_singletons():
    assert run(or_merge, [[iv(3, 3)], [iv(1, 1)], [iv(2, 2)]]) == [
        iv(1, 1), iv(2, 2), iv(3, 3)
    ]


def test_or_drops_non_minimal():
    assert run(or_merge, [[iv(0, 3)], [iv(1, 2)]]) == [iv(1, 2)]


def test_or_mixed():
    assert run(or_merge, [[iv(0, 1), iv(2, 5)], [iv(0, 1), iv(3, 4)]]) == [
        iv(0, 1), iv(3, 4)
    ]


def test_or_single_input_is_identity():
    a = [iv(0, 1), iv(2, 4)]
    assert run(or_merge, [a]) == a


def test_and_worked_remark_case():
    inputs = [[iv(0, 0), iv(2, 2)], [iv(1, 1)], [iv(0, 0), iv(2, 2)]]
    out = run(and_span, inputs)
    assert out[0] == iv(0, 1)
    assert out == [iv(0, 1), iv(1, 2)]


def test_and_reproduces_rhyme_antichain():
    streams = [from_positions(p) for p in (PEASE, PORRIDGE, HOT_OR_COLD)]
    assert materialize(and_span(streams)) == RHYME_ANTICHAIN


def test_and_single_input_is_identity():
    a = [iv(0, 2), iv(1, 5), iv(4, 9)]
    assert run(and_span, [a]) == a


def test_block_rhyme_bigram():
    assert run(block, [singletons(PEASE), singletons(PORRIDGE)]) == [
        iv(0, 1), iv(3, 4), iv(6, 7), iv(31, 32), iv(34, 35)
    ]


def test_block_gap_yields_nothing():
    assert run(block, [[iv(0, 0)], [iv(2, 2)]]) == []


def test_block_single_chain():
    assert run(block, [[iv(0, 1)], [iv(2, 2)], [iv(3, 5)]]) == [iv(0, 5)]


def test_ordered_and_skips_backwards_pairs():
    assert run(ordered_and, [[iv(2, 2), iv(5, 5)], [iv(3, 3)]]) == [iv(2, 3)]


def test_ordered_and_single_input_is_identity():
    a = [iv(0, 0), iv(2, 3)]
    assert run(ordered_and, [a]) == a


def test_ordered_and_three_lists():
    inputs = [singletons((0, 4)), singletons((1, 5)), singletons((2, 6))]
    assert run(ordered_and, inputs) == [iv(0, 2), iv(4, 6)]


def test_lowpass_filters_by_width():
    a = [iv(0, 2), iv(3, 5), iv(6, 17), iv(21, 32), iv(31, 33)]
    assert materialize(lowpass(ListStream(a), 3)) == [iv(0, 2), iv(3, 5), iv(31, 33)]
    assert materialize(lowpass(ListStream(a), 40)) == a
    assert materialize(lowpass(ListStream([iv(0, 1)]), 1)) == []


def test_difference_examples():
    assert materialize(
        difference(ListStream([iv(0, 2), iv(3, 5)]), ListStream([iv(4, 4)]))
    ) == [iv(0, 2)]
    m = [iv(0, 2), iv(3, 5)]
    assert materialize(difference(ListStream(m), ListStream([]))) == m
    assert materialize(
        difference(ListStream([iv(1, 1)]), ListStream([iv(1, 1)]))
    ) == []


def test_operators_tolerate_empty_inputs():
    assert run(or_merge, [[], []]) == []
    assert run(or_merge, [[], [iv(1, 1)]]) == [iv(1, 1)]
    assert run(and_span, [[], [iv(1, 1)]]) == []
    assert run(block, [[], [iv(1, 1)]]) == []
    assert run(ordered_and, [[], [iv(1, 1)]]) == []
    assert materialize(difference(ListStream([]), ListStream([iv(1, 1)]))) == []


def test_outputs_keep_returning_terminal():
    op = and_span([ListStream([iv(0, 0)]), ListStream([iv(1, 1)])])
    assert op.next() == iv(0, 1)
    assert op.next() is None
    assert op.next() is None


def test_oracle_equivalence_randomized():
    rng = random.Random(2024)
    for _ in range(400):
        inputs = random_inputs(rng)
        assert run(or_merge, inputs) == oracle_or(inputs)
        assert run(and_span, inputs) == oracle_and(inputs)
        assert run(block, inputs) == oracle_block(inputs)
        assert run(ordered_and, inputs) == oracle_ordered_and(inputs)
        minuend = inputs[0]
        subtrahend = inputs[1] if len(inputs) > 1 else []
        assert materialize(
            difference(ListStream(minuend), ListStream(subtrahend))
        ) == oracle_difference(minuend, subtrahend)
        k = rng.randint(1, 8)
        assert materialize(lowpass(ListStream(minuend), k)) == oracle_lowpass(
            minuend, k
        )


def test_block_fast_forward_is_behavior_preserving():
    rng = random.Random(11)
    for _ in range(300):
        inputs = random_inputs(rng)
        plain = profile(block, inputs)
        fast = profile(lambda ss: block(ss, fast_forward=True), inputs)
        assert fast.outputs == plain.outputs
        for fast_row, plain_row in zip(fast.rho, plain.rho):
            assert all(f <= p for f, p in zip(fast_row, plain_row))


def test_ordered_and_tight_bounds_is_behavior_preserving():
    rng = random.Random(13)
    for _ in range(300):
        inputs = random_inputs(rng)
        plain = profile(ordered_and, inputs)
        tight = profile(lambda ss: ordered_and(ss, tight_bounds=True), inputs)
        assert tight.outputs == plain.outputs
        for tight_row, plain_row in zip(tight.rho, plain.rho):
            assert all(t <= p for t, p in zip(tight_row, plain_row))


def test_ordered_and_variants_agree_on_singleton_inputs():
    # Singleton inputs are the phrasal-query case where the mid-alignment
    # barrier check is redundant; both variants must emit the same list.
    rng = random.Random(19)
    for _ in range(200):
        m = rng.randint(1, 5)
        inputs = [singleton_antichain(rng) for _ in range(m)]
        plain = profile(ordered_and, inputs)
        tight = profile(lambda ss: ordered_and(ss, tight_bounds=True), inputs)
        assert tight.outputs == plain.outputs
        for tight_row, plain_row in zip(tight.rho, plain.rho):
            assert all(t <= p for t, p in zip(tight_row, plain_row))
