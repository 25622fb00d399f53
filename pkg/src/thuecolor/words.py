"""Squarefree-word primitives: square detection and a ternary squarefree stream.

A square is a factor of the form xx with x non-empty.  Detection scans every
half-length with a vectorized run-length test, O(n^2) overall, which is fast
far beyond the word lengths used anywhere in this project.
"""

from __future__ import annotations

from typing import Optional, Sequence

import numpy as np

# Prefix-preserving morphism on {0,1,2} whose fixed point is squarefree.
_MORPHISM = {0: (0, 1, 2), 1: (0, 2), 2: (1,)}


def find_square(word: Sequence[int]) -> Optional[tuple[int, int]]:
    """Locate a square factor word[s:s+h] == word[s+h:s+2h].

    Returns the (start, half_len) pair with minimal start, ties broken by
    minimal half_len, or None when the word is squarefree.
    """
    n = len(word)
    if n < 2:
        return None
    arr = np.asarray(word, dtype=np.int64)
    best: Optional[tuple[int, int]] = None
    for h in range(1, n // 2 + 1):
        eq = arr[: n - h] == arr[h:]
        # run[i] = number of matches in eq[i : i+h]; a full run is a square.
        pref = np.concatenate(([0], np.cumsum(eq, dtype=np.int64)))
        run = pref[h : n - h + 1] - pref[: n - 2 * h + 1]
        hits = np.flatnonzero(run == h)
        if hits.size:
            cand = (int(hits[0]), h)
            if best is None or cand < best:
                best = cand
    return best


def is_squarefree(word: Sequence[int]) -> bool:
    return find_square(word) is None


def squarefree_ternary_word(n: int) -> list[int]:
    """Length-n prefix of the fixed point of 0->012, 1->02, 2->1 from "0"."""
    if n < 0:
        raise ValueError("length must be non-negative")
    if n == 0:
        return []
    word = [0]
    while len(word) < n:
        word = [s for sym in word for s in _MORPHISM[sym]]
    return word[:n]
