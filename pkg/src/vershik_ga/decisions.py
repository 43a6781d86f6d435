"""Sources of the random choices made by traceback and the GA.

Production code draws from a seeded ``random.Random``; tests substitute a
``ScriptedSource`` that replays a fixed list of answers.
"""
from __future__ import annotations

import random
from typing import Sequence


class RandomSource:
    def __init__(self, seed=None):
        self.rng = random.Random(seed)

    def choose_index(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)``."""
        return self.rng.randrange(bound)

    def choose_bool(self) -> bool:
        return self.rng.random() < 0.5

    def choose_element(self, items: Sequence):
        return items[self.rng.randrange(len(items))]

    def uniform(self) -> float:
        """Uniform float in ``[0, 1]``."""
        return self.rng.random()


class ScriptExhausted(RuntimeError):
    pass


class ScriptedSource:
    """Replays answers in order.

    For ``choose_element`` the script holds the element itself, which must be
    one of the offered items.
    """

    def __init__(self, script):
        self.script = list(script)
        self.calls = []

    def _next(self, kind):
        if not self.script:
            raise ScriptExhausted(f"no scripted answer left for {kind}")
        value = self.script.pop(0)
        self.calls.append((kind, value))
        return value

    def choose_index(self, bound):
        value = self._next("index")
        if not 0 <= value < bound:
            raise ValueError(f"scripted index {value} outside [0, {bound})")
        return value

    def choose_bool(self):
        return bool(self._next("bool"))

    def choose_element(self, items):
        value = self._next("element")
        if value not in items:
            raise ValueError(f"scripted element {value!r} not among {list(items)!r}")
        return value

    def uniform(self):
        return float(self._next("uniform"))
