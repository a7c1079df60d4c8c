"""mawlab: minimal absent words, sliding-window change analysis, and bound verification."""

from .core import (
    Alphabet,
    ConsistencyError,
    InputError,
    TheoremViolationError,
    Window,
    WindowStats,
    canonical_words,
    occurs,
    window_stats,
)
from .oracle import MawSet, enumerate_maws_naive, is_maw
from .automaton import SuffixAutomaton, build_automaton, enumerate_maws_fast
from .slide import (
    DeltaReport,
    MawEngine,
    MawType,
    SlideSummary,
    append_delta,
    classify_added,
    delete_delta,
    slide_totals,
    type3_injection,
)
from .bounds import (
    BoundId,
    BoundVerdict,
    bound_binary_append,
    bound_general_append,
    bound_general_delete,
    bound_occurring_append,
    bound_prior_append,
    bound_prior_delete,
    bound_total,
    check_step,
    check_totals,
)
from .families import (
    FAMILY_IDS,
    FamilyInstance,
    gen_alternating,
    gen_binary_extremal,
    gen_binary_onezeros,
    gen_total_distinct,
    gen_total_sigma,
    gen_unary_v,
    gen_Z,
)
from .verify import (
    PRESETS,
    CampaignConfig,
    CampaignReport,
    run_exhaustive,
    run_random,
    tightness_scan,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "BoundId",
    "BoundVerdict",
    "CampaignConfig",
    "CampaignReport",
    "ConsistencyError",
    "DeltaReport",
    "FAMILY_IDS",
    "FamilyInstance",
    "InputError",
    "MawEngine",
    "MawSet",
    "MawType",
    "PRESETS",
    "SlideSummary",
    "SuffixAutomaton",
    "TheoremViolationError",
    "Window",
    "WindowStats",
    "append_delta",
    "bound_binary_append",
    "bound_general_append",
    "bound_general_delete",
    "bound_occurring_append",
    "bound_prior_append",
    "bound_prior_delete",
    "bound_total",
    "build_automaton",
    "canonical_words",
    "check_step",
    "check_totals",
    "classify_added",
    "delete_delta",
    "enumerate_maws_fast",
    "enumerate_maws_naive",
    "gen_Z",
    "gen_alternating",
    "gen_binary_extremal",
    "gen_binary_onezeros",
    "gen_total_distinct",
    "gen_total_sigma",
    "gen_unary_v",
    "is_maw",
    "occurs",
    "run_exhaustive",
    "run_random",
    "slide_totals",
    "tightness_scan",
    "type3_injection",
    "window_stats",
]
