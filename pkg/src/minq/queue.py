"""Indirect priority queue over a reference array of per-list intervals.

The queue holds *indices* into a reference array with one interval slot per
input list; priorities come from a three-way comparator over the slots,
with ties broken toward the smallest list index so that runs are exactly
reproducible. Only the top slot may change value between :meth:`change`
notifications.

The queue also maintains ``right_extreme``, the running maximum right
extreme over every interval ever loaded into the reference array, so that
:meth:`span_of` can produce the interval stretching from the current top's
left extreme to that maximum.

The backing structure is a binary min-heap over indices plus an inverse
position map, giving O(log m) mutations and O(1) top access. Mutation and
comparison counts are tracked so tests can pin the operation-count bounds.
:class:`LinearScanQueue` is the deliberately naive reference used for
differential testing. Instances are single-threaded.
"""

from .intervals import Interval, NEG_INF


class EmptyQueueError(Exception):
    """top/dequeue requested on a queue holding no indices."""


class IndirectQueue:
    def __init__(self, size: int, compare):
        self.reference: list[Interval | None] = [None] * size
        self.right_extreme = NEG_INF
        self._cmp = compare
        self._heap: list[int] = []
        self._pos = [-1] * size
        self.mutations = 0
        self.comparisons = 0
        self.max_mutation_comparisons = 0

    def load(self, index: int, interval: Interval) -> None:
        """Place an interval in a reference slot, tracking right_extreme."""
        self.reference[index] = interval
        if interval.right > self.right_extreme:
            self.right_extreme = interval.right

    def size(self) -> int:
        return len(self._heap)

    def __len__(self):
        return len(self._heap)

    def top_index(self) -> int:
        if not self._heap:
            raise EmptyQueueError("top of empty queue")
        return self._heap[0]

    def top(self) -> Interval:
        return self.reference[self.top_index()]

    def span_of(self) -> Interval:
        """Interval from the top's left extreme to the queue right extreme."""
        return Interval(self.top().left, self.right_extreme)

    def enqueue(self, index: int) -> None:
        before = self.comparisons
        self._pos[index] = len(self._heap)
        self._heap.append(index)
        self._sift_up(len(self._heap) - 1)
        self._account(before)

    def dequeue(self) -> int:
        if not self._heap:
            raise EmptyQueueError("dequeue of empty queue")
        before = self.comparisons
        result = self._heap[0]
        self._pos[result] = -1
        last = self._heap.pop()
        if self._heap:
            self._heap[0] = last
            self._pos[last] = 0
            self._sift_down(0)
        self._account(before)
        return result

    def change(self) -> None:
        """Restore heap order after the top slot's value was replaced."""
        if not self._heap:
            raise EmptyQueueError("change on empty queue")
        before = self.comparisons
        self._sift_down(0)
        self._account(before)

    def _account(self, before):
        used = self.comparisons - before
        if used > self.max_mutation_comparisons:
            self.max_mutation_comparisons = used
        self.mutations += 1

    def _slot_less(self, a: int, b: int) -> bool:
        c = self._cmp(self.reference[a], self.reference[b])
        self.comparisons += 1
        return c < 0 or (c == 0 and a < b)

    def _sift_up(self, slot: int) -> None:
        heap, pos = self._heap, self._pos
        while slot > 0:
            parent = (slot - 1) // 2
            if not self._slot_less(heap[slot], heap[parent]):
                break
            heap[slot], heap[parent] = heap[parent], heap[slot]
            pos[heap[slot]] = slot
            pos[heap[parent]] = parent
            slot = parent

    def _sift_down(self, slot: int) -> None:
        heap, pos = self._heap, self._pos
        n = len(heap)
        while True:
            child = 2 * slot + 1
            if child >= n:
                break
            if child + 1 < n and self._slot_less(heap[child + 1], heap[child]):
                child += 1
            if not self._slot_less(heap[child], heap[slot]):
                break
            heap[slot], heap[child] = heap[child], heap[slot]
            pos[heap[slot]] = slot
            pos[heap[child]] = child
            slot = child


class LinearScanQueue:
    """Array-backed variant: O(1) mutations, O(m) top retrieval.

    Same contract and tie-breaking as :class:`IndirectQueue`; kept as the
    obviously-correct reference for differential tests.
    """

    def __init__(self, size: int, compare):
        self.reference: list[Interval | None] = [None] * size
        self.right_extreme = NEG_INF
        self._cmp = compare
        self._members: list[int] = []

    def load(self, index, interval):
        self.reference[index] = interval
        if interval.right > self.right_extreme:
            self.right_extreme = interval.right

    def size(self):
        return len(self._members)

    def __len__(self):
        return len(self._members)

    def top_index(self):
        if not self._members:
            raise EmptyQueueError("top of empty queue")
        best = self._members[0]
        for index in self._members[1:]:
            c = self._cmp(self.reference[index], self.reference[best])
            if c < 0 or (c == 0 and index < best):
                best = index
        return best

    def top(self):
        return self.reference[self.top_index()]

    def span_of(self):
        return Interval(self.top().left, self.right_extreme)

    def enqueue(self, index):
        self._members.append(index)

    def dequeue(self):
        result = self.top_index()
        self._members.remove(result)
        return result

    def change(self):
        if not self._members:
            raise EmptyQueueError("change on empty queue")


def advance(queue, streams) -> None:
    """Replace the top slot with its list's next interval, or drop the list.

    Reads exactly one element from the list bound to the top index: a real
    interval lands in the reference array (notifying the queue), a terminal
    dequeues the index for good.
    """
    index = queue.top_index()
    item = streams[index].next()
    if item is None:
        queue.dequeue()
    else:
        queue.load(index, item)
        queue.change()
