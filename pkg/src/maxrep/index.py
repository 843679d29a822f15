"""Suffix-array engine: near-linear computation of maximal-repeat measures.

The engine builds a suffix array (SA-IS) plus LCP array and sweeps the LCP
interval tree bottom-up. Every LCP interval is a right-maximal repeat; the
sweep keeps those that are also prefix-anchored or left-branching, counting
right extensions from child splits and left extensions from distinct
preceding symbols. The empty repeat contributes the alphabet on both sides
and is added outside the sweep.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import _kasai, _measure_sweep, _sais
from .text import (
    MeasureReport,
    RepeatRecord,
    Text,
    as_text,
    epsilon_record,
    record_from_positions,
)

BEGIN_SENTINEL = -1


@dataclass(frozen=True)
class SuffixArrayIndex:
    """Suffix array of a text with LCP and preceding-symbol annotations.

    sa holds 1-based suffix start positions in lexicographic order. lcp[p]
    is the length of the longest common prefix of the suffixes at sa[p-1]
    and sa[p] (lcp[0] = 0). prev_char[p] is the symbol before suffix sa[p],
    or BEGIN_SENTINEL when sa[p] = 1.
    """

    text: Text
    sa: np.ndarray
    lcp: np.ndarray
    prev_char: np.ndarray


def build_index(t: Text | bytes) -> SuffixArrayIndex:
    t = as_text(t)
    s = np.frombuffer(t.data, dtype=np.uint8).astype(np.int64)
    sa0 = _sais(s, 256)[1:]
    _, lcp = _kasai(s, sa0)
    prev = np.where(sa0 > 0, s[sa0 - 1], BEGIN_SENTINEL)
    return SuffixArrayIndex(text=t, sa=sa0 + 1, lcp=lcp, prev_char=prev)


def _sweep(t: Text, index: SuffixArrayIndex | None, collect: bool):
    s = np.frombuffer(t.data, dtype=np.uint8).astype(np.int64)
    if index is None:
        sa0 = _sais(s, 256)[1:]
        _, lcp = _kasai(s, sa0)
    else:
        sa0 = index.sa - 1
        lcp = index.lcp
    rank0 = int(np.argmax(sa0 == 0))
    if collect:
        out_d = np.empty(t.n + 1, np.int64)
        out_lo = np.empty(t.n + 1, np.int64)
        out_hi = np.empty(t.n + 1, np.int64)
    else:
        out_d = out_lo = out_hi = np.empty(1, np.int64)
    mr, er, el, bad, found = _measure_sweep(s, sa0, lcp, rank0, out_d, out_lo, out_hi, collect)
    if bad:
        raise AssertionError(
            f"{bad} LCP intervals were not right-maximal; the sweep visited a bogus node"
        )
    return sa0, (mr, er, el), (out_d[:found], out_lo[:found], out_hi[:found])


def measures(t: Text | bytes, index: SuffixArrayIndex | None = None) -> MeasureReport:
    """The measure report of a text: n, sigma, mr, er, el and the ratio el/er."""
    t = as_text(t)
    _, (mr, er, el), _ = _sweep(t, index, collect=False)
    sigma = t.sigma
    return MeasureReport.from_counts(t.n, sigma, mr + 1, er + sigma, el + sigma)


def measures_via_reversal(t: Text | bytes) -> MeasureReport:
    """Compute el as the number of right extensions of the reversed text.

    Left extensions of T are right extensions of reverse(T), so this path
    never inspects preceding symbols of the forward text. Used as an
    independent route to cross-check measures().
    """
    t = as_text(t)
    rev = measures(t.reversed())
    return MeasureReport.from_counts(t.n, t.sigma, rev.mr, er=rev.el, el=rev.er)


def list_maximal_repeats(
    t: Text | bytes, index: SuffixArrayIndex | None = None
) -> list[RepeatRecord]:
    """Full repeat records, ordered by (length, repeat string); the empty
    repeat comes first."""
    t = as_text(t)
    sa0, _, (depths, los, his) = _sweep(t, index, collect=True)
    records = [epsilon_record(t)]
    for d, lo, hi in zip(depths.tolist(), los.tolist(), his.tolist()):
        starts = sorted(int(p) + 1 for p in sa0[lo : hi + 1])
        records.append(record_from_positions(t, d, starts))
    records.sort(key=lambda r: (r.length, r.string(t)))
    return records
