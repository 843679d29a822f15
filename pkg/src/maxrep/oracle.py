"""Brute-force ground truth for maximal repeats, measures, and the CDAWG.

Everything here is computed by exhaustive enumeration and literal counting,
independent of the suffix-array engine, so it can serve as the oracle the
fast paths are validated against. Inputs are capped in size; callers that
outgrow the cap should use the engine instead.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Iterator

from .cdawg import Cdawg
from .errors import MissingTerminator, OracleInconsistency, SizeCapExceeded
from .text import (
    EPSILON,
    MeasureReport,
    RepeatRecord,
    Substring,
    Text,
    as_text,
    epsilon_record,
    occurrences,
    record_from_positions,
)

ORACLE_CAP = 2000


@dataclass(frozen=True)
class OracleResult:
    """All maximal repeats of a text plus the derived measure report."""

    repeats: tuple[RepeatRecord, ...]
    report: MeasureReport


def _repeat_groups(data: bytes) -> Iterator[tuple[int, list[int]]]:
    """Yield (length, starts) for every distinct substring occurring >= 2 times.

    Starts are 0-based and sorted. Groups are refined length by length, so
    each group carries the complete occurrence list of one substring.
    """
    n = len(data)
    by_char = defaultdict(list)
    for i, c in enumerate(data):
        by_char[c].append(i)
    groups = [g for _, g in sorted(by_char.items()) if len(g) >= 2]
    length = 1
    while groups:
        for starts in groups:
            yield length, starts
        refined = []
        for starts in groups:
            sub = defaultdict(list)
            for i in starts:
                if i + length < n:
                    sub[data[i + length]].append(i)
            refined.extend(g for _, g in sorted(sub.items()) if len(g) >= 2)
        groups = refined
        length += 1


def _strict_count_maximal(data: bytes, length: int, starts: list[int]) -> bool:
    """Primary definition: every one-letter extension occurs strictly fewer times.

    occ(aS) equals the number of occurrences of S preceded by a, and occ(Sa)
    the number followed by a, so both are countable from the occurrence list.
    """
    total = len(starts)
    if total < 2:
        return False
    left = Counter(data[i - 1] for i in starts if i > 0)
    right = Counter(data[i + length] for i in starts if i + length < len(data))
    return all(c < total for c in left.values()) and all(c < total for c in right.values())


def enumerate_maximal_repeats(t: Text | bytes, cap: int = ORACLE_CAP) -> OracleResult:
    """Enumerate M(T) exhaustively and compute (mr, er, el).

    Each candidate is classified twice: by the prefix/suffix-or-two-extensions
    characterization and by the strict-count definition. The two must agree
    on every substring; a disagreement raises OracleInconsistency.
    """
    t = as_text(t)
    if t.n > cap:
        raise SizeCapExceeded(t.n, cap)
    data = t.data
    records = [epsilon_record(t)]
    for length, starts in _repeat_groups(data):
        rec = record_from_positions(t, length, [i + 1 for i in starts])
        by_characterization = (rec.is_prefix or len(rec.left_ext) >= 2) and (
            rec.is_suffix or len(rec.right_ext) >= 2
        )
        by_counting = _strict_count_maximal(data, length, starts)
        if by_characterization != by_counting:
            raise OracleInconsistency(
                f"definitions disagree on {rec.string(t)!r}: "
                f"characterization={by_characterization} counting={by_counting}"
            )
        if by_counting:
            records.append(rec)
    records.sort(key=lambda r: (r.length, r.string(t)))
    mr = len(records)
    er = sum(len(r.right_ext) for r in records)
    el = sum(len(r.left_ext) for r in records)
    return OracleResult(
        repeats=tuple(records),
        report=MeasureReport.from_counts(t.n, t.sigma, mr, er, el),
    )


def is_maximal_repeat(t: Text | bytes, s: Substring | bytes) -> bool:
    """Strict-count test, computed literally by scanning for aS and Sa.

    The empty string is always a maximal repeat: it occurs more often than
    any of its one-letter extensions.
    """
    t = as_text(t)
    pattern = s.materialize(t) if isinstance(s, Substring) else bytes(s)
    if len(pattern) == 0:
        return True
    total = len(occurrences(t, pattern))
    if total < 2:
        return False
    for a in sorted(t.alphabet):
        letter = bytes([a])
        if len(occurrences(t, letter + pattern)) >= total:
            return False
        if len(occurrences(t, pattern + letter)) >= total:
            return False
    return True


def build_reference_cdawg(t: Text | bytes, cap: int = ORACLE_CAP) -> Cdawg:
    """Reference CDAWG by brute force over ending-position equivalence classes.

    Substrings are equivalent when their sets of ending positions coincide;
    nodes are the classes whose longest member is a maximal repeat, plus the
    sink class of strings occurring exactly once, as a suffix. Edges extend
    each right extension maximally until the next node class.
    """
    t = as_text(t)
    n = t.n
    if n > cap:
        raise SizeCapExceeded(n, cap)
    data = t.data
    if data.count(data[-1:]) != 1:
        raise MissingTerminator("last symbol recurs; append a unique terminator first")

    result = enumerate_maximal_repeats(t, cap)
    maximal = {r.string(t) for r in result.repeats}

    # endpos-class table over all substrings occurring >= 2 times; classes of
    # unique substrings never qualify as nodes (their longest member occurs
    # once), except the sink class which is handled by its key directly
    class_longest: dict[tuple[int, ...], bytes] = {}
    for length, starts in _repeat_groups(data):
        key = tuple(i + length - 1 for i in starts)
        member = data[starts[0] : starts[0] + length]
        cur = class_longest.get(key)
        if cur is None or length > len(cur):
            class_longest[key] = member

    internal = sorted((s for s in maximal if s), key=lambda s: (len(s), s))
    node_of = {s: i + 1 for i, s in enumerate(internal)}
    sink_id = len(internal) + 1
    sink_key = (n - 1,)

    edges = []
    for uid, w in [(0, b"")] + [(node_of[s], s) for s in internal]:
        occ_w = [i - 1 for i in occurrences(t, w)]
        right_letters = sorted({data[i + len(w)] for i in occ_w if i + len(w) < n})
        for a in right_letters:
            s = w + bytes([a])
            while True:
                occ0 = [i - 1 for i in occurrences(t, s)]
                ends = tuple(i + len(s) - 1 for i in occ0)
                if ends == sink_key:
                    target = sink_id
                    break
                if len(occ0) >= 2 and class_longest[ends] in maximal:
                    target = node_of[class_longest[ends]]
                    break
                followers = {data[e + 1] for e in ends}
                if len(followers) != 1:
                    raise OracleInconsistency(
                        f"non-node class of {s!r} branches; endpos grouping is broken"
                    )
                s += bytes([followers.pop()])
            label = Substring(occ0[0] + len(w) + 1, len(s) - len(w))
            edges.append((uid, label, target))

    nodes = (
        [EPSILON]
        + [Substring(occurrences(t, s)[0], len(s)) for s in internal]
        + [Substring(1, n)]
    )
    return Cdawg(text=t, nodes=nodes, edges=edges)
