"""Deterministic generators for extremal and standard repetitive families.

Two families come with exact predicted measures derived from per-repeat
extension counts:

* eq1_tk — the staircase $1 a1 $2 a1 a2 $3 a1 a2 a3 ... with 2k distinct
  symbols; its ratio el/er grows like k, i.e. like sqrt(n).
* thm2 — b1 a^k $ b2 a^k $ ... b_sigma a^k $; with k = ceil(n / sigma) its
  ratio tracks min{n/sigma, sigma} in both alphabet regimes.

Multi-symbol letters are mapped to single distinct byte values, keeping the
alphabet sizes exact (2k and sigma + 2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterOutOfRange
from .text import Text

FAMILY_NAMES = (
    "eq1_tk",
    "thm2",
    "unary",
    "all_distinct",
    "fibonacci",
    "thue_morse",
    "random",
)

REGIME_N_OVER_SIGMA = "n_over_sigma"
REGIME_SIGMA = "sigma"


@dataclass(frozen=True)
class FamilySpec:
    """Parameters identifying one generated string."""

    family: str
    k: int | None = None
    sigma: int | None = None
    n: int | None = None
    seed: int | None = None

    def __post_init__(self):
        if self.family not in FAMILY_NAMES:
            raise ParameterOutOfRange(f"unknown family {self.family!r}")


@dataclass(frozen=True)
class PredictedMeasures:
    """Exact closed-form measures of a generated string.

    sigma is the actual alphabet size of the text. ratio_regime names the
    active branch of min{2n/sigma, sigma}: "n_over_sigma" when the alphabet
    is at least sqrt(n), "sigma" otherwise.
    """

    n: int
    sigma: int
    mr: int
    er: int
    el: int
    ratio_regime: str


def _regime(n: int, sigma: int) -> str:
    return REGIME_N_OVER_SIGMA if sigma * sigma >= n else REGIME_SIGMA


def gen_eq1(k: int) -> tuple[Text, PredictedMeasures]:
    """The staircase family: blocks $_i a_1 a_2 ... a_i for i = 1..k.

    Separators map to bytes 0..k-1 and letters a_i to bytes 128..128+k-1,
    so k is capped at 127.
    """
    if not 1 <= k <= 127:
        raise ParameterOutOfRange(f"eq1_tk needs 1 <= k <= 127, got {k}")
    buf = bytearray()
    for i in range(1, k + 1):
        buf.append(i - 1)
        buf.extend(128 + j for j in range(i))
    t = Text(bytes(buf))
    n = k * (k + 3) // 2
    pred = PredictedMeasures(
        n=n,
        sigma=2 * k,
        mr=k,
        er=4 * k - 2,
        el=2 * k + k * (k + 1) // 2 - 1,
        ratio_regime=_regime(n, 2 * k),
    )
    assert t.n == pred.n and t.sigma == pred.sigma
    return t, pred


def gen_thm2(k: int, sigma: int) -> tuple[Text, PredictedMeasures]:
    """The run family: b_1 a^k $ b_2 a^k $ ... b_sigma a^k $.

    Maps $ to byte 0, a to byte 1 and b_i to bytes 2..sigma+1. Requires
    sigma >= 2: with a single block the repeat a^k $ occurs only once and
    the closed forms below stop holding.
    """
    if k < 1:
        raise ParameterOutOfRange(f"thm2 needs k >= 1, got {k}")
    if not 2 <= sigma <= 254:
        raise ParameterOutOfRange(f"thm2 needs 2 <= sigma <= 254, got {sigma}")
    buf = bytearray()
    for i in range(sigma):
        buf.append(2 + i)
        buf.extend(b"\x01" * k)
        buf.append(0)
    t = Text(bytes(buf))
    n = sigma * (k + 2)
    pred = PredictedMeasures(
        n=n,
        sigma=sigma + 2,
        mr=k + 1,
        er=2 * k + 2 * sigma - 1,
        el=(k - 1) * (sigma + 1) + 2 * sigma + 2,
        ratio_regime=_regime(n, sigma + 2),
    )
    assert t.n == pred.n and t.sigma == pred.sigma
    return t, pred


def thm2_k_for(n: int, sigma: int) -> int:
    """The block length that makes the thm2 text about n long: ceil(n/sigma)."""
    return math.ceil(n / sigma)


def gen_unary(n: int) -> Text:
    if n < 1:
        raise ParameterOutOfRange("unary needs n >= 1")
    return Text(b"a" * n)


def gen_all_distinct(n: int) -> Text:
    if not 1 <= n <= 256:
        raise ParameterOutOfRange("all_distinct needs 1 <= n <= 256")
    return Text(bytes(range(n)))


def gen_fibonacci(n: int) -> Text:
    """Prefix of the infinite Fibonacci word abaababa..."""
    if n < 1:
        raise ParameterOutOfRange("fibonacci needs n >= 1")
    prev, cur = b"b", b"a"
    while len(cur) < n:
        prev, cur = cur, cur + prev
    return Text(cur[:n])


def gen_thue_morse(n: int) -> Text:
    if n < 1:
        raise ParameterOutOfRange("thue_morse needs n >= 1")
    return Text(bytes(97 + (i.bit_count() & 1) for i in range(n)))


def gen_random(n: int, sigma: int, seed: int) -> Text:
    """Seeded uniform text over symbols 0..sigma-1; identical bytes on
    every platform (PCG64 stream)."""
    if n < 1:
        raise ParameterOutOfRange("random needs n >= 1")
    if not 1 <= sigma <= 256:
        raise ParameterOutOfRange("random needs 1 <= sigma <= 256")
    rng = np.random.Generator(np.random.PCG64(seed))
    return Text(rng.integers(0, sigma, n, dtype=np.uint16).astype(np.uint8).tobytes())


def gen_classic(family: str, n: int, sigma: int | None = None, seed: int | None = None) -> Text:
    if family == "unary":
        return gen_unary(n)
    if family == "all_distinct":
        return gen_all_distinct(n)
    if family == "fibonacci":
        return gen_fibonacci(n)
    if family == "thue_morse":
        return gen_thue_morse(n)
    if family == "random":
        if sigma is None or seed is None:
            raise ParameterOutOfRange("random needs sigma and seed")
        return gen_random(n, sigma, seed)
    raise ParameterOutOfRange(f"unknown classic family {family!r}")


def generate(spec: FamilySpec) -> tuple[Text, PredictedMeasures | None]:
    """Dispatch a FamilySpec to its generator; classics carry no prediction."""
    if spec.family == "eq1_tk":
        if spec.k is None:
            raise ParameterOutOfRange("eq1_tk needs k")
        return gen_eq1(spec.k)
    if spec.family == "thm2":
        if spec.sigma is None:
            raise ParameterOutOfRange("thm2 needs sigma")
        k = spec.k if spec.k is not None else thm2_k_for(spec.n or 0, spec.sigma)
        return gen_thm2(k, spec.sigma)
    if spec.n is None:
        raise ParameterOutOfRange(f"{spec.family} needs n")
    return gen_classic(spec.family, spec.n, spec.sigma, spec.seed), None


def sidecar(spec: FamilySpec, t: Text, measured) -> dict:
    """Sidecar JSON payload for a generated text.

    `measured` is anything with mr/er/el attributes: the family prediction
    when one exists, otherwise a computed MeasureReport.
    """
    return {
        "family": spec.family,
        "k": spec.k,
        "sigma": spec.sigma,
        "n": t.n,
        "mr": measured.mr,
        "er": measured.er,
        "el": measured.el,
    }
