"""Maximal-repeat extension measures, CDAWG sizes, and extremal families.

The package computes the repetitiveness measures er and el of a byte text
(total right/left extensions over all maximal repeats), builds the CDAWG of
terminator-ended texts, generates families of strings with extreme el/er
ratios, and verifies the inequalities those measures always satisfy.
"""

from .bounds import (
    BoundCheck,
    BoundVerdict,
    SweepRow,
    check_bounds,
    ratio_bound,
    sweep,
)
from .cdawg import Cdawg, CdawgStats, build_cdawg, contains, stats
from .errors import (
    BoundViolation,
    MaxrepError,
    MissingTerminator,
    OracleInconsistency,
    ParameterOutOfRange,
    SizeCapExceeded,
    StatsMismatch,
)
from .families import (
    FamilySpec,
    PredictedMeasures,
    gen_classic,
    gen_eq1,
    gen_thm2,
    generate,
)
from .index import (
    SuffixArrayIndex,
    build_index,
    list_maximal_repeats,
    measures,
    measures_via_reversal,
)
from .oracle import (
    ORACLE_CAP,
    OracleResult,
    build_reference_cdawg,
    enumerate_maximal_repeats,
    is_maximal_repeat,
)
from .text import (
    EPSILON,
    MeasureReport,
    RepeatRecord,
    Substring,
    Text,
    alphabet,
    occurrences,
)

__version__ = "0.1.0"

__all__ = [
    "BoundCheck",
    "BoundVerdict",
    "BoundViolation",
    "Cdawg",
    "CdawgStats",
    "EPSILON",
    "FamilySpec",
    "MaxrepError",
    "MeasureReport",
    "MissingTerminator",
    "ORACLE_CAP",
    "OracleInconsistency",
    "OracleResult",
    "ParameterOutOfRange",
    "PredictedMeasures",
    "RepeatRecord",
    "SizeCapExceeded",
    "StatsMismatch",
    "Substring",
    "SuffixArrayIndex",
    "SweepRow",
    "Text",
    "alphabet",
    "build_cdawg",
    "build_index",
    "build_reference_cdawg",
    "check_bounds",
    "contains",
    "enumerate_maximal_repeats",
    "gen_classic",
    "gen_eq1",
    "gen_thm2",
    "generate",
    "is_maximal_repeat",
    "list_maximal_repeats",
    "measures",
    "measures_via_reversal",
    "occurrences",
    "ratio_bound",
    "stats",
    "sweep",
]
