"""The six lazy operators over antichain streams.

Each operator is an :class:`~minq.streams.IntervalStream` that pulls from
its inputs as little as possible per emitted interval:

* :func:`or_merge` / :func:`and_span` ride an indirect priority queue (end
  order for the merge, start order for the span conjunction) and advance it
  one element at a time.
* :func:`block`, :func:`ordered_and` and :func:`difference` advance their
  inputs greedily, keeping one current interval per list.
* :func:`lowpass` is a plain length filter.

Inputs must be valid antichain streams; outputs are again antichains in
natural order, duplicate-free. Empty inputs are tolerated (the merge drops
them, everything else terminates), though the evaluation layer normally
rules them out up front with :func:`~minq.streams.star_compose` and an
emptiness check. Construction reads nothing; the first pull does.

Operator state is one reference slot plus a few scalars per input list, so
space stays linear in the operand count no matter how long the inputs are.
Instances are single-consumer and own their input streams; independent
operator trees can run on different threads.

The integer-position shortcuts of ``block`` (first-list fast-forward) and
``ordered_and`` (tightened barrier checks) sit behind constructor flags,
default off, so that read profiles of the plain algorithms stay pinned;
they never change what is emitted, only how soon advancing stops.
"""

from .intervals import (
    Interval,
    NEG_INF,
    POS_INF,
    cmp_end,
    cmp_start,
    contains,
    length,
)
from .queue import IndirectQueue, advance
from .streams import IntervalStream

_BOTTOM = Interval(NEG_INF, NEG_INF)


def _require_inputs(streams):
    if not streams:
        raise ValueError("operator needs at least one input stream")
    return list(streams)


class OrMerge(IntervalStream):
    """Minimal intervals of the union of the inputs, merged lazily.

    Keeps the last returned interval and advances the queue while the top
    still contains it; because the top's right extreme only grows, that
    containment test collapses to a single left-extreme comparison.
    """

    def __init__(self, streams):
        self._streams = _require_inputs(streams)
        self.queue = IndirectQueue(len(self._streams), cmp_end)
        self._last = _BOTTOM
        self._started = False
        self._done = False

    def _start(self):
        for i, stream in enumerate(self._streams):
            first = stream.next()
            if first is not None:
                self.queue.load(i, first)
                self.queue.enqueue(i)
        self._started = True

    def next(self):
        if self._done:
            return None
        if not self._started:
            self._start()
        q = self.queue
        while q.size() > 0 and q.top().left <= self._last.left:
            advance(q, self._streams)
        if q.size() == 0:
            self._done = True
            return None
        self._last = q.top()
        return self._last


class AndSpan(IntervalStream):
    """Minimal intervals spanned by one interval per input.

    The queue is ordered by start; the candidate is the interval from the
    top's left extreme to the queue's right extreme, refined while further
    advances keep the span inside it. Both monotonicity shortcuts apply:
    the skip-past-last-output test compares left extremes only, and the
    still-contained test compares right extremes only. Output ends for good
    the moment the queue stops being full.
    """

    def __init__(self, streams):
        self._streams = _require_inputs(streams)
        self.queue = IndirectQueue(len(self._streams), cmp_start)
        self._last = _BOTTOM
        self._started = False
        self._done = False

    def _start(self):
        for i, stream in enumerate(self._streams):
            first = stream.next()
            if first is not None:
                self.queue.load(i, first)
                self.queue.enqueue(i)
        self._started = True

    def next(self):
        if self._done:
            return None
        if not self._started:
            self._start()
        q = self.queue
        m = len(self._streams)
        while q.size() == m and q.top().left == self._last.left:
            advance(q, self._streams)
        if q.size() < m:
            self._done = True
            return None
        while True:
            candidate = q.span_of()
            if candidate == q.top():
                break
            advance(q, self._streams)
            if not (q.size() == m and q.right_extreme == candidate.right):
                break
        self._last = candidate
        return candidate


class BlockConcat(IntervalStream):
    """Spans of chains of exactly adjacent intervals, one per input.

    Advances the first list once per attempt, then aligns each later list
    until its interval starts past the previous one's right extreme; an
    exact +1 adjacency extends the chain, a gap restarts from the first
    list. With ``fast_forward`` the restart also skips first-list intervals
    ending more than one position before the second list's current start:
    no remaining chain can touch them, since second components at or past
    that start are all that is left. (Sharper skips keyed to deeper lists
    are only sound when every input is made of single positions, so they
    are not attempted.)
    """

    def __init__(self, streams, fast_forward: bool = False):
        self._streams = _require_inputs(streams)
        self._cur = [_BOTTOM] * len(self._streams)
        self._fast_forward = fast_forward
        self._done = False

    def next(self):
        if self._done:
            return None
        cur = self._cur
        streams = self._streams
        m = len(streams)
        head = streams[0].next()
        if head is None:
            self._done = True
            return None
        cur[0] = head
        i = 1
        while i < m:
            while cur[i].left <= cur[i - 1].right:
                item = streams[i].next()
                if item is None:
                    self._done = True
                    return None
                cur[i] = item
            if cur[i].left == cur[i - 1].right + 1:
                i += 1
            else:
                while True:
                    head = streams[0].next()
                    if head is None:
                        self._done = True
                        return None
                    cur[0] = head
                    if not self._fast_forward or cur[0].right >= cur[1].left - 1:
                        break
                i = 1
        return Interval(cur[0].left, cur[m - 1].right)


class OrderedSpan(IntervalStream):
    """Minimal spans of strictly-ordered non-overlapping chains.

    Greedily aligns list ``i`` until its interval starts past list
    ``i-1``'s; a completed chain becomes the candidate and its last
    component's left extreme the barrier. The candidate is final (and
    returned) as soon as any aligning read would have to land at or past
    the barrier, or an input runs dry. A candidate refines only while new
    chains keep the same right extreme.

    ``tight_bounds`` sharpens the barrier checks by the minimum room the
    remaining chain components need, never loosening them past the plain
    checks, so outputs are identical and reads can only drop.
    """

    def __init__(self, streams, tight_bounds: bool = False):
        self._streams = _require_inputs(streams)
        self._cur = [_BOTTOM] * len(self._streams)
        self._i = 1
        self._tight = tight_bounds
        self._started = False
        self._done = False

    def _emit(self, candidate):
        if candidate is None:
            self._done = True
        return candidate

    def next(self):
        if self._done:
            return None
        cur = self._cur
        streams = self._streams
        m = len(streams)
        if not self._started:
            self._started = True
            head = streams[0].next()
            if head is None:
                self._done = True
                return None
            cur[0] = head
        candidate = None
        barrier = POS_INF
        i = self._i
        try:
            while True:
                while True:
                    bound = barrier - (max(0, m - i - 1) if self._tight else 0)
                    if cur[i - 1].right >= bound:
                        return self._emit(candidate)
                    if i == m or cur[i].left > cur[i - 1].right:
                        break
                    while True:
                        bound = barrier - (max(0, m - i - 2) if self._tight else 0)
                        if cur[i].right >= bound:
                            return self._emit(candidate)
                        item = streams[i].next()
                        if item is None:
                            self._done = True
                            return candidate
                        cur[i] = item
                        if cur[i].left > cur[i - 1].right:
                            break
                    i += 1
                candidate = Interval(cur[0].left, cur[m - 1].right)
                barrier = cur[m - 1].left
                i = 1
                head = streams[0].next()
                if head is None:
                    self._done = True
                    return candidate
                cur[0] = head
        finally:
            self._i = i


class LowPassFilter(IntervalStream):
    """Passes through only intervals covering at most ``k`` positions."""

    def __init__(self, stream: IntervalStream, k: int):
        if k < 1:
            raise ValueError(f"lowpass threshold must be positive, got {k}")
        self._stream = stream
        self._k = k
        self._done = False

    def next(self):
        if self._done:
            return None
        while True:
            item = self._stream.next()
            if item is None:
                self._done = True
                return None
            if length(item) <= self._k:
                return item


class Difference(IntervalStream):
    """Minuend intervals containing no subtrahend interval.

    For each minuend interval, the subtrahend is advanced only while its
    current interval starts and ends strictly before the minuend's
    extremes; the minuend interval survives unless the stopping interval
    sits inside it.
    """

    def __init__(self, minuend: IntervalStream, subtrahend: IntervalStream):
        self._minuend = minuend
        self._subtrahend = subtrahend
        self._last_sub = _BOTTOM
        self._sub_exhausted = False
        self._done = False

    def next(self):
        if self._done:
            return None
        while True:
            item = self._minuend.next()
            if item is None:
                self._done = True
                return None
            while (
                not self._sub_exhausted
                and self._last_sub.left < item.left
                and self._last_sub.right < item.right
            ):
                sub = self._subtrahend.next()
                if sub is None:
                    self._sub_exhausted = True
                else:
                    self._last_sub = sub
            if self._sub_exhausted or not contains(item, self._last_sub):
                return item


def or_merge(streams) -> IntervalStream:
    return OrMerge(streams)

def and_span(streams) -> IntervalStream:
    return AndSpan(streams)

def block(streams, fast_forward: bool = False) -> IntervalStream:
    return BlockConcat(streams, fast_forward=fast_forward)

def ordered_and(streams, tight_bounds: bool = False) -> IntervalStream:
    return OrderedSpan(streams, tight_bounds=tight_bounds)

def lowpass(stream, k: int) -> IntervalStream:
    return LowPassFilter(stream, k)

def difference(minuend, subtrahend) -> IntervalStream:
    return Difference(minuend, subtrahend)
