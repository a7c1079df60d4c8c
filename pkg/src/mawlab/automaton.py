"""Suffix-automaton (DAWG) index and the fast MAW enumerator built on it.

The automaton is built online in the standard way.  Each state keeps, besides
the transition map, suffix link and maximum substring length, one sample end
position in the subject, which lets us reconstruct the shortest word of the
state in O(1) as a slice of the subject.

MAW extraction rests on the factor-equivalence structure: a word a+u+b of
length >= 2 is a MAW exactly when a+u is the *shortest* word of some state q
(otherwise u sits in the same state and extends identically), u+b is a factor
(a b-transition exists from q's suffix link) and a+u+b is not (no b-transition
from q itself).  Scanning every state against its suffix link therefore yields
every MAW of length >= 2 exactly once.
"""

from __future__ import annotations

from .core import Alphabet, canonical_words
from .oracle import MawSet


class _State:
    __slots__ = ("max_len", "link", "trans", "end")

    def __init__(self, max_len: int, link: "_State | None", end: int) -> None:
        self.max_len = max_len
        self.link = link
        self.trans: dict[str, _State] = {}
        self.end = end  # sample end position: subject[end - max_len : end] is the longest word


class SuffixAutomaton:
    """Minimal automaton recognizing exactly the substrings of ``subject``."""

    def __init__(self, subject: str) -> None:
        self.subject = subject
        root = _State(0, None, 0)
        self.states: list[_State] = [root]
        last = root
        for i, ch in enumerate(subject):
            cur = _State(last.max_len + 1, None, i + 1)
            self.states.append(cur)
            p = last
            while p is not None and ch not in p.trans:
                p.trans[ch] = cur
                p = p.link
            if p is None:
                cur.link = root
            else:
                q = p.trans[ch]
                if q.max_len == p.max_len + 1:
                    cur.link = q
                else:
                    clone = _State(p.max_len + 1, q.link, q.end)
                    clone.trans = dict(q.trans)
                    self.states.append(clone)
                    q.link = clone
                    cur.link = clone
                    while p is not None and p.trans.get(ch) is q:
                        p.trans[ch] = clone
                        p = p.link
            last = cur
        self.last = last

    @property
    def initial(self) -> _State:
        return self.states[0]

    @property
    def state_count(self) -> int:
        return len(self.states)

    @property
    def transition_count(self) -> int:
        return sum(len(st.trans) for st in self.states)

    def accepts(self, word: str) -> bool:
        """True iff ``word`` is a substring of the subject (empty word included)."""
        node = self.states[0]
        for ch in word:
            nxt = node.trans.get(ch)
            if nxt is None:
                return False
            node = nxt
        return True


def build_automaton(subject: str) -> SuffixAutomaton:
    return SuffixAutomaton(subject)


def enumerate_maws_fast(subject: str, alphabet: Alphabet) -> MawSet:
    """Same set, same canonical order as :func:`mawlab.oracle.enumerate_maws_naive`."""
    alphabet.require_text(subject)
    present = set(subject)
    words: list[str] = [a for a in alphabet if a not in present]

    sam = SuffixAutomaton(subject)
    for state in sam.states[1:]:
        link = state.link
        assert link is not None
        shortest_len = link.max_len + 1
        stem = subject[state.end - shortest_len : state.end]
        trans = state.trans
        for ch in link.trans:
            if ch not in trans:
                words.append(stem + ch)

    return MawSet(len(subject), alphabet, canonical_words(words))
