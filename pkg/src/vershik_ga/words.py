"""Words in the Vershik group V_n.

A word is a tuple of nonzero ints: ``+i`` is the generator x_i and ``-i`` its
inverse. Two generators x_i, x_j commute iff ``|i - j| >= 2``.

Reduction works in two phases. Cancellation deletes pairs ``x_i^a ... x_i^-a``
whose interior commutes with x_i, keeping the order of the survivors (this is
the pseudo-normal form). Linearization then reorders the survivors into the
lexicographically least word under ``x_1 < x_1^-1 < x_2 < ... < x_n^-1`` that
respects the non-commuting order; that word is the normal form.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from . import _kernels

Word = tuple  # tuple[int, ...]


@dataclass(frozen=True)
class GroupSpec:
    """Rank-n Vershik group. Commutation is |i - j| >= 2."""

    rank: int
    _blockers: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.rank, int) or self.rank < 2:
            raise ValueError(f"rank must be an integer >= 2, got {self.rank!r}")
        # blockers[i]: indices that do not commute with i (i itself included)
        blockers = [()]
        for i in range(1, self.rank + 1):
            blockers.append(tuple(j for j in (i - 1, i, i + 1) if 1 <= j <= self.rank))
        object.__setattr__(self, "_blockers", tuple(blockers))

    def commute(self, i: int, j: int) -> bool:
        return abs(abs(i) - abs(j)) >= 2

    def blockers(self, i: int) -> tuple:
        return self._blockers[abs(i)]

    def letters(self, indices: Optional[Iterable[int]] = None) -> tuple:
        """All signed generators over ``indices`` (default: every generator)."""
        if indices is None:
            indices = range(1, self.rank + 1)
        out = []
        for i in sorted(indices):
            out.extend((i, -i))
        return tuple(out)

    def validate(self, word: Iterable[int]) -> Word:
        w = tuple(word)
        for v in w:
            if not isinstance(v, int) or v == 0 or abs(v) > self.rank:
                raise ValueError(f"invalid letter {v!r} for rank {self.rank}")
        return w


def letter_key(v: int) -> int:
    """Sort key for the ordering x_1 < x_1^-1 < x_2 < x_2^-1 < ..."""
    return 2 * v if v > 0 else -2 * v + 1


def invert(u: Sequence[int]) -> Word:
    return tuple(-v for v in reversed(u))


def as_array(u: Sequence[int], spec: Optional[GroupSpec] = None) -> np.ndarray:
    """int64 copy of ``u``; checks letters against ``spec`` when given."""
    arr = np.asarray(u, dtype=np.int64).reshape(-1)
    if spec is not None and arr.size:
        mag = np.abs(arr)
        if mag.min() == 0 or mag.max() > spec.rank:
            bad = arr[(mag == 0) | (mag > spec.rank)][0]
            raise ValueError(f"invalid letter {bad} for rank {spec.rank}")
    return arr


def _surviving(u: Sequence[int], spec: GroupSpec) -> np.ndarray:
    """Positions of ``u`` left after cancellation, in input order.

    Scans left to right keeping, per generator index, a stack of the positions
    still alive. A new letter can only cancel against the latest surviving
    letter that does not commute with it; the prefix stays reduced so one look
    suffices. Linear in ``len(u)``.
    """
    return _kernels.surviving(as_array(u, spec), spec.rank)


def reduced_length(u: Sequence[int], spec: GroupSpec) -> int:
    """Geodesic length l(u)."""
    return len(_surviving(u, spec))


def cancel_geodesic(u: Sequence[int], spec: GroupSpec) -> Word:
    arr = as_array(u, spec)
    return tuple(arr[_kernels.surviving(arr, spec.rank)].tolist())


pseudo_normal_form = cancel_geodesic


def normal_form(u: Sequence[int], spec: GroupSpec) -> Word:
    arr = as_array(u, spec)
    reduced = arr[_kernels.surviving(arr, spec.rank)]
    return tuple(reduced[_kernels.linear_order(reduced, spec.rank)].tolist())


def labeled_normal_form_arrays(letters: np.ndarray, labels: np.ndarray, rank: int) -> tuple:
    """Array version of :func:`labeled_normal_form`; ``-1`` marks no label."""
    keep = _kernels.surviving(letters, rank)
    reduced = letters[keep]
    order = _kernels.linear_order(reduced, rank)
    return reduced[order], labels[keep][order]


def labeled_normal_form(letters: Sequence[int], labels: Sequence[Optional[int]],
                        spec: GroupSpec) -> tuple:
    """Normal form of a word whose letters carry labels.

    Returns ``(word, labels)`` where each surviving letter keeps its label and
    cancelled letters drop theirs. ``None`` marks an unlabeled letter.
    """
    if len(letters) != len(labels):
        raise ValueError("letters and labels differ in length")
    lab = np.array([-1 if x is None else x for x in labels], dtype=np.int64)
    word, out = labeled_normal_form_arrays(as_array(letters, spec), lab, spec.rank)
    return tuple(word.tolist()), tuple(None if x < 0 else x for x in out.tolist())


def run_length(u: Sequence[int]) -> list:
    """``[(index, exponent), ...]`` with consecutive equal letters merged."""
    out = []
    for v in u:
        i, e = abs(v), (1 if v > 0 else -1)
        if out and out[-1][0] == i and (out[-1][1] > 0) == (e > 0):
            out[-1] = (i, out[-1][1] + e)
        else:
            out.append((i, e))
    return out


def satisfies_normal_conditions(u: Sequence[int], rank: int) -> bool:
    """Direct scan of the three syntactic conditions on a run-length encoding."""
    runs = run_length(u)
    for (i, mu), (j, _) in zip(runs, runs[1:]):
        if mu == 0:
            return False
        if i == 1 and not j > 1:
            return False
        if 1 < i < rank and not (j == i - 1 or j > i):
            return False
        if i == rank and j != rank - 1:
            return False
    return True


def roof(u: Sequence[int], spec: GroupSpec) -> set:
    """Signed generators g such that appending g^-1 to u shortens it.

    These are the letters of the reduced word with nothing non-commuting after
    them.
    """
    arr = as_array(u, spec)
    reduced = arr[_kernels.surviving(arr, spec.rank)]
    return set(_kernels.extremal(reduced, spec.rank, False).tolist())


def floor(u: Sequence[int], spec: GroupSpec) -> set:
    """Signed generators g such that prepending g^-1 to u shortens it."""
    arr = as_array(u, spec)
    reduced = arr[_kernels.surviving(arr, spec.rank)]
    return set(_kernels.extremal(reduced, spec.rank, True).tolist())


def random_letters(length: int, alphabet: Sequence[int], rng: random.Random) -> Word:
    """``length`` independent uniform draws from ``alphabet`` x {+1, -1}."""
    alphabet = sorted(alphabet)
    return tuple(rng.choice(alphabet) * rng.choice((1, -1)) for _ in range(length))


def random_word(k: int, alphabet: Iterable[int], spec: GroupSpec, rng: random.Random) -> Word:
    """Random walk word whose geodesic length is exactly ``k``.

    Draws ``k`` letters, then keeps appending ``k - l(u)`` fresh letters until
    the reduced length reaches ``k``. The result is generally unreduced.
    """
    alphabet = sorted(set(alphabet))
    if k < 0:
        raise ValueError("target length must be non-negative")
    if k > 0 and not alphabet:
        raise ValueError("cannot build a non-empty word over an empty alphabet")
    u = random_letters(k, alphabet, rng)
    short = k - reduced_length(u, spec)
    while short > 0:
        u = u + random_letters(short, alphabet, rng)
        short = k - reduced_length(u, spec)
    return u


def parse_word(text: str, spec: GroupSpec) -> Word:
    """Parse the space-separated integer form, e.g. ``"-1 4 2 3 3 7"``."""
    try:
        letters = tuple(int(tok) for tok in text.split())
    except ValueError:
        raise ValueError(f"not a word: {text!r}") from None
    return spec.validate(letters)


def format_word(u: Sequence[int]) -> str:
    return " ".join(str(v) for v in u)
