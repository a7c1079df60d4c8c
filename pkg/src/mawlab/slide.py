"""Exact MAW-set change for one slide step, and totals over a whole text.

A step is either an append (window S gains a character alpha on the right) or
a delete (the leftmost character beta is removed).  Deltas are literal set
differences of two full MAW sets; the structural facts below are asserted on
every step rather than assumed:

* an append deletes exactly one MAW;
* the added MAWs partition into three types by which maximal proper factor
  already occurred in S (neither / right only / left only);
* each Type-3 word maps injectively to the end of the leftmost occurrence of
  its long prefix in S, and that end is never the last window position (nor
  the first one when the extended window uses only two symbols).

Deletes are computed by the reversal reduction: reverse, run the append
analysis, reverse every reported word.  Type labels on a delete report are
therefore mirrored, with prefix and suffix roles swapped.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import IntEnum
from typing import Mapping

from .core import (
    Alphabet,
    ConsistencyError,
    InputError,
    TheoremViolationError,
    WindowStats,
    canonical_words,
    window_stats,
)
from .automaton import enumerate_maws_fast
from .oracle import MawSet, enumerate_maws_naive


class MawType(IntEnum):
    TYPE1 = 1
    TYPE2 = 2
    TYPE3 = 3

    @property
    def label(self) -> str:
        return f"m{self.value}"


_ENUMERATORS = {
    "automaton": enumerate_maws_fast,
    "oracle": enumerate_maws_naive,
}


class MawEngine:
    """Cached MAW enumeration for one alphabet with a selectable backend."""

    def __init__(self, alphabet: Alphabet, engine: str = "automaton") -> None:
        if engine not in _ENUMERATORS:
            raise InputError(f"unknown engine {engine!r}; expected one of {sorted(_ENUMERATORS)}")
        self.alphabet = alphabet
        self.engine = engine
        self._enumerate = _ENUMERATORS[engine]
        self._cache: dict[str, tuple[str, ...]] = {}

    def words(self, subject: str) -> tuple[str, ...]:
        got = self._cache.get(subject)
        if got is None:
            got = self._cache[subject] = self._enumerate(subject, self.alphabet).words
        return got

    def maw_set(self, subject: str) -> MawSet:
        return MawSet(len(subject), self.alphabet, self.words(subject))


def _as_engine(engine: str | MawEngine, alphabet: Alphabet) -> MawEngine:
    if isinstance(engine, MawEngine):
        if engine.alphabet is not alphabet and engine.alphabet.symbols != alphabet.symbols:
            raise ConsistencyError("engine alphabet does not match the requested alphabet")
        return engine
    return MawEngine(alphabet, engine)


@dataclass(frozen=True)
class DeltaReport:
    """Full record of one slide step.

    ``d`` and ``sigma_window`` always refer to the short (length-d) window of
    the step, and ``sigma_ext`` to the extended (d+1)-length string, for both
    directions; every bound formula is stated in those terms.  ``deleted`` and
    ``added`` are relative to the step's before -> after evolution, so on a
    delete the added side is the singleton.  ``added_by_type`` partitions the
    multi-word side (the added words on an append, the mirrored classification
    of the removed words on a delete).
    """

    direction: str
    before: str
    after: str
    d: int
    sigma_window: int
    sigma_ext: int
    deleted: tuple[str, ...]
    added: tuple[str, ...]
    added_by_type: Mapping[MawType, tuple[str, ...]]
    injection_witness: Mapping[str, int]
    stats: WindowStats
    verdicts: tuple = field(default=())

    @property
    def delta_size(self) -> int:
        return len(self.deleted) + len(self.added)

    @property
    def type_counts(self) -> tuple[int, int, int]:
        return tuple(len(self.added_by_type[t]) for t in MawType)  # type: ignore[return-value]

    @property
    def alpha_occurs(self) -> bool:
        """True when the step's new/removed character already occurs in the short window."""
        return self.sigma_window == self.sigma_ext

    def with_verdicts(self, verdicts) -> "DeltaReport":
        return replace(self, verdicts=tuple(verdicts))

    def to_payload(self) -> dict:
        return {
            "direction": self.direction,
            "before": self.before,
            "after": self.after,
            "d": self.d,
            "sigma_window": self.sigma_window,
            "sigma_ext": self.sigma_ext,
            "deleted": list(self.deleted),
            "added": list(self.added),
            "added_by_type": {t.label: list(ws) for t, ws in self.added_by_type.items()},
            "injection_witness": dict(sorted(self.injection_witness.items())),
            "delta": self.delta_size,
            "verdicts": [v.to_payload() for v in self.verdicts],
        }


def classify_added(word: str, pre_window: str) -> MawType:
    """Type of a MAW newly created by an append, judged against the pre-append window.

    Type 1: neither ``word[1:]`` nor ``word[:-1]`` occurs in the window;
    Type 2: only ``word[1:]`` occurs;  Type 3: only ``word[:-1]`` occurs.
    A length-1 word has both proper parts empty and is Type 1 by the run-word
    convention.  Both parts occurring means the word was already a MAW before
    the append, so it cannot be an added one.
    """
    if len(word) == 1:
        return MawType.TYPE1
    suffix_occurs = word[1:] in pre_window
    prefix_occurs = word[:-1] in pre_window
    if suffix_occurs and prefix_occurs:
        raise ConsistencyError(
            f"{word!r} has both proper parts occurring in {pre_window!r}; it is not an added MAW"
        )
    if suffix_occurs:
        return MawType.TYPE2
    if prefix_occurs:
        return MawType.TYPE3
    return MawType.TYPE1


def type3_injection(m3: list[str] | tuple[str, ...], pre_window: str) -> dict[str, int]:
    """Map each Type-3 word to the 0-based end of the leftmost occurrence of its long prefix.

    Asserts the map is injective with range within [0, d-2], and within
    [1, d-2] when the extended window uses exactly two distinct symbols.
    Violations raise :class:`TheoremViolationError` (campaign-level alarm).
    """
    d = len(pre_window)
    mapping: dict[str, int] = {}
    used: dict[int, str] = {}
    alpha: str | None = None
    for word in canonical_words(m3):
        if alpha is None:
            alpha = word[-1]
        elif word[-1] != alpha:
            raise ConsistencyError("Type-3 words of one step must share their final symbol")
        prefix = word[:-1]
        pos = pre_window.find(prefix)
        if pos < 0:
            raise ConsistencyError(f"{word!r} is not Type 3 for window {pre_window!r}")
        end = pos + len(prefix) - 1
        if end > d - 2:
            raise TheoremViolationError(
                f"Type-3 witness end {end} reaches the last window position: "
                f"word {word!r}, window {pre_window!r}"
            )
        clash = used.get(end)
        if clash is not None:
            raise TheoremViolationError(
                f"Type-3 injection collision at position {end}: {clash!r} vs {word!r} "
                f"in window {pre_window!r}"
            )
        used[end] = word
        mapping[word] = end

    if mapping:
        sigma_ext = len(set(pre_window) | {alpha})
        if sigma_ext == 2 and d >= 3 and min(mapping.values()) < 1:
            raise TheoremViolationError(
                f"Type-3 witness uses the first window position in the two-symbol regime: "
                f"window {pre_window!r}, mapping {mapping}"
            )
    return mapping


def append_delta(
    window: str,
    alpha: str,
    alphabet: Alphabet,
    engine: str | MawEngine = "automaton",
) -> DeltaReport:
    """Delta report for appending ``alpha`` to ``window``."""
    if not window:
        raise InputError("append step needs a non-empty window")
    alphabet.require_text(window)
    alphabet.require_symbol(alpha)
    eng = _as_engine(engine, alphabet)

    extended = window + alpha
    before_set = set(eng.words(window))
    after_set = set(eng.words(extended))
    deleted = canonical_words(before_set - after_set)
    added = canonical_words(after_set - before_set)
    if len(deleted) != 1:
        raise TheoremViolationError(
            f"append must delete exactly one MAW, got {len(deleted)}: "
            f"window {window!r} + {alpha!r}, deleted {deleted}"
        )

    buckets: dict[MawType, list[str]] = {t: [] for t in MawType}
    for word in added:
        buckets[classify_added(word, window)].append(word)
    by_type = {t: canonical_words(ws) for t, ws in buckets.items()}
    witness = type3_injection(by_type[MawType.TYPE3], window)

    return DeltaReport(
        direction="append",
        before=window,
        after=extended,
        d=len(window),
        sigma_window=len(set(window)),
        sigma_ext=len(set(window) | {alpha}),
        deleted=deleted,
        added=added,
        added_by_type=by_type,
        injection_witness=witness,
        stats=window_stats(window, next_sym=alpha),
    )


def delete_delta(
    window: str,
    alphabet: Alphabet,
    engine: str | MawEngine = "automaton",
) -> DeltaReport:
    """Delta report for deleting the leftmost character of ``window``.

    Computed by the reversal reduction.  The reported injection witness maps
    each mirrored Type-3 word to the 0-based start of the rightmost occurrence
    of ``word[1:]`` in the shrunken window.
    """
    if len(window) < 2:
        raise InputError("delete step needs a window of length >= 2")
    alphabet.require_text(window)
    eng = _as_engine(engine, alphabet)

    beta, kept = window[0], window[1:]
    mirror = append_delta(kept[::-1], beta, alphabet, eng)

    d = len(kept)
    return DeltaReport(
        direction="delete",
        before=window,
        after=kept,
        d=d,
        sigma_window=len(set(kept)),
        sigma_ext=len(set(window)),
        deleted=canonical_words(w[::-1] for w in mirror.added),
        added=canonical_words(w[::-1] for w in mirror.deleted),
        added_by_type={
            t: canonical_words(w[::-1] for w in ws) for t, ws in mirror.added_by_type.items()
        },
        injection_witness={w[::-1]: d - 1 - e for w, e in mirror.injection_witness.items()},
        stats=window_stats(kept, prev_sym=beta),
    )


@dataclass(frozen=True)
class SlideSummary:
    """Per-step symmetric-difference sizes for a full left-to-right slide."""

    text_length: int
    d: int
    per_step: tuple[int, ...]
    total: int
    sigma_max_window: int

    def __post_init__(self) -> None:
        if self.total != sum(self.per_step):
            raise ConsistencyError("total must equal the sum of per-step sizes")

    def to_payload(self) -> dict:
        return {
            "n": self.text_length,
            "d": self.d,
            "per_step": list(self.per_step),
            "total": self.total,
            "sigma_max_window": self.sigma_max_window,
            "tightness_ratio": {
                "numerator": self.total,
                "denominator": (self.text_length - self.d) * min(self.d, self.sigma_max_window),
            },
        }


def slide_totals(
    text: str,
    d: int,
    alphabet: Alphabet,
    engine: str | MawEngine = "automaton",
) -> SlideSummary:
    """Sizes of MAW(T[i..i+d)) symmetric-difference MAW(T[i+1..i+d+1)) for all i."""
    n = len(text)
    if not 1 <= d < n:
        raise InputError(f"window length must satisfy 1 <= d < n, got d={d}, n={n}")
    alphabet.require_text(text)
    eng = _as_engine(engine, alphabet)

    sigma_max = 0
    prev = set(eng.words(text[:d]))
    sigma_max = max(sigma_max, len(set(text[:d])))
    sizes: list[int] = []
    for i in range(1, n - d + 1):
        window = text[i : i + d]
        sigma_max = max(sigma_max, len(set(window)))
        cur = set(eng.words(window))
        sizes.append(len(prev ^ cur))
        prev = cur

    return SlideSummary(
        text_length=n,
        d=d,
        per_step=tuple(sizes),
        total=sum(sizes),
        sigma_max_window=sigma_max,
    )
