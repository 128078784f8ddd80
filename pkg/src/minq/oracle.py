"""Brute-force reference semantics and read-bound checking.

Everything here trades speed for being obviously correct: the oracles work
on materialized sets, enumerate candidate tuples directly from the operator
definitions, and are meant for desk-scale inputs (a handful of lists, a
dozen intervals each). Tuple enumeration shares prefixes through memoized
(list, span) states, which changes nothing about which spans are produced.

:func:`check_read_bounds` turns the per-operator laziness guarantees into
concrete inequalities over a measured :class:`~minq.streams.RhoProfile`:

* merge: reads from list i while output p is produced never exceed the
  number of list-i intervals at or below p-th output in the end order,
  plus one resident;
* span conjunction: reads sit within one of the index of the first list-i
  interval inside the output, and hit it exactly whenever some input
  interval equals the output;
* concatenation: reads equal the (unique) producing chain's indices;
* ordered conjunction: reads for output p never pass the leftmost chain
  spanning output p+1;
* difference and lowpass: reads are pinned exactly.

All functions are pure.
"""

from dataclasses import dataclass, field

from .intervals import Interval, contains, cmp_end, length


class NotProducible(ValueError):
    """The target interval is not an output of the given inputs."""


def minimal_filter(intervals) -> list[Interval]:
    """Containment-minimal elements, in natural order."""
    items = sorted(set(intervals), key=lambda iv: (iv.left, iv.right))
    return [
        iv
        for iv in items
        if not any(other != iv and contains(iv, other) for other in items)
    ]


def oracle_or(inputs) -> list[Interval]:
    merged = set()
    for antichain in inputs:
        merged.update(antichain)
    return minimal_filter(merged)


def oracle_and(inputs) -> list[Interval]:
    """Spans of every tuple drawing one interval per input, minimized."""
    if any(len(a) == 0 for a in inputs):
        return []
    spans = {(iv.left, iv.right) for iv in inputs[0]}
    for antichain in inputs[1:]:
        spans = {
            (min(left, iv.left), max(right, iv.right))
            for left, right in spans
            for iv in antichain
        }
    return minimal_filter(Interval(l, r) for l, r in spans)


def _chains(inputs, adjacent):
    """Spans of all chains, one interval per input in order.

    ``adjacent`` True demands exact +1 adjacency between consecutive
    components, False just strict precedence. A chain's span is its first
    component's left extreme through its last component's right extreme,
    so partial chains collapse to (first_left, prev_right) states.
    """
    states = {(iv.left, iv.right) for iv in inputs[0]}
    for antichain in inputs[1:]:
        nxt = set()
        for first_left, prev_right in states:
            for iv in antichain:
                if adjacent:
                    if iv.left == prev_right + 1:
                        nxt.add((first_left, iv.right))
                elif iv.left > prev_right:
                    nxt.add((first_left, iv.right))
        states = nxt
    return [Interval(l, r) for l, r in states]


def oracle_block(inputs) -> list[Interval]:
    """All concatenations of exactly adjacent chains (already minimal)."""
    if any(len(a) == 0 for a in inputs):
        return []
    results = _chains(inputs, adjacent=True)
    return sorted(results, key=lambda iv: (iv.left, iv.right))


def oracle_ordered_and(inputs) -> list[Interval]:
    """Spans of strictly-ordered chains, minimized."""
    if any(len(a) == 0 for a in inputs):
        return []
    return minimal_filter(_chains(inputs, adjacent=False))


def oracle_lowpass(antichain, k: int) -> list[Interval]:
    return [iv for iv in antichain if length(iv) <= k]


def oracle_difference(minuend, subtrahend) -> list[Interval]:
    """Minuend intervals not poisoned by any subtrahend interval."""
    return [
        iv for iv in minuend if not any(contains(iv, sub) for sub in subtrahend)
    ]


def leftmost_sequences(inputs, target: Interval, mode: str) -> tuple[int, ...]:
    """1-based per-list indices of the earliest chain producing ``target``.

    ``mode`` is ``"block"`` (exact adjacency; the producing chain is
    unique) or ``"ordered"`` (strict precedence; the leftmost chain picks,
    after the forced first component, the earliest aligned interval of each
    list). ``target`` must be an output of the corresponding operator on
    ``inputs``; otherwise :class:`NotProducible` is raised.
    """
    if mode not in ("block", "ordered"):
        raise ValueError(f"unknown mode {mode!r}")
    indices = []
    prev_right = None
    for antichain in inputs:
        found = None
        for pos, iv in enumerate(antichain):
            if prev_right is None:
                if iv.left == target.left:
                    found = pos
                    break
            elif mode == "block":
                if iv.left == prev_right + 1:
                    found = pos
                    break
            elif iv.left > prev_right:
                found = pos
                break
        if found is None:
            raise NotProducible(f"{target!r} has no producing chain")
        indices.append(found)
        prev_right = antichain[found].right
    if prev_right != target.right:
        raise NotProducible(f"leftmost chain ends at {prev_right}, not {target!r}")
    return tuple(i + 1 for i in indices)


def first_included_index(antichain, output: Interval) -> int:
    """1-based index of the first interval contained in ``output``."""
    for pos, iv in enumerate(antichain):
        if contains(output, iv):
            return pos + 1
    raise NotProducible(f"no interval of the list fits in {output!r}")


@dataclass
class ReadBoundReport:
    """Outcome of checking one profile against one operator's bounds."""

    kind: str
    checks: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def lines(self):
        """Line-oriented rendering for CI logs."""
        status = "ok" if self.ok else "FAIL"
        yield f"{status} {self.kind}: {self.checks} checks, {len(self.violations)} violations"
        yield from self.violations

    def __str__(self):
        return "\n".join(self.lines())


def check_read_bounds(profile, inputs, kind: str) -> ReadBoundReport:
    """Evaluate every read bound applicable to ``kind`` on ``profile``.

    ``inputs`` must be the same materialized antichains the profile was
    measured on. Recognized kinds: ``or``, ``and``, ``block``,
    ``ordered_and``, ``difference``, ``lowpass``.
    """
    report = ReadBoundReport(kind=kind)

    def check(ok: bool, p: int, i: int, detail: str):
        report.checks += 1
        if not ok:
            rho = profile.rho[p][i]
            report.violations.append(
                f"{kind}: output {p + 1}, list {i}: reads={rho} breaks {detail}"
            )

    prev = (0,) * profile.m
    for p, row in enumerate(profile.rho):
        for i, reads in enumerate(row):
            check(reads >= prev[i], p, i, "monotone reads")
            check(reads <= len(inputs[i]) + 1, p, i, "list length + terminal")
        prev = row

    for p, output in enumerate(profile.outputs):
        row = profile.rho[p]
        if kind == "or":
            for i, antichain in enumerate(inputs):
                below = sum(1 for iv in antichain if cmp_end(iv, output) <= 0)
                check(row[i] <= below + 1, p, i, f"end-order count {below} + 1")
        elif kind == "and":
            s = [first_included_index(a, output) for a in inputs]
            exact = any(
                a[s[i] - 1] == output for i, a in enumerate(inputs)
            )
            for i in range(profile.m):
                check(
                    s[i] <= row[i] <= s[i] + 1,
                    p,
                    i,
                    f"first-inclusion index {s[i]} (+1 slack)",
                )
                if exact:
                    check(row[i] == s[i], p, i, f"exact-output equality {s[i]}")
        elif kind == "block":
            chain = leftmost_sequences(inputs, output, "block")
            for i in range(profile.m):
                check(row[i] == chain[i], p, i, f"producing-chain index {chain[i]}")
        elif kind == "ordered_and":
            if p + 1 < len(profile.outputs):
                chain = leftmost_sequences(
                    inputs, profile.outputs[p + 1], "ordered"
                )
                for i in range(profile.m):
                    check(
                        row[i] <= chain[i],
                        p,
                        i,
                        f"next-output leftmost chain index {chain[i]}",
                    )
        elif kind == "difference":
            minuend, subtrahend = inputs
            check(row[0] == minuend.index(output) + 1, p, 0, "minuend position")
            stop = len(subtrahend) + 1
            for pos, iv in enumerate(subtrahend):
                if iv.left >= output.left or iv.right >= output.right:
                    stop = pos + 1
                    break
            check(row[1] == stop, p, 1, f"subtrahend stop index {stop}")
        elif kind == "lowpass":
            check(row[0] == inputs[0].index(output) + 1, p, 0, "input position")
        else:
            raise ValueError(f"unknown operator kind {kind!r}")
    return report
