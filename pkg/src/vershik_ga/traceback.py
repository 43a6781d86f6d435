"""Traceback: follow chromosome letters through the reduction of E.

Letters of chi and zeta are labeled by their position in chi+zeta, E is
reduced with the labels attached, and the surviving labeled letters are
grouped into blocks. A block end and a direction pick out the unlabeled
subword delta next to it; inverting an element of delta's floor (or roof)
gives a generator that, inserted beside the block end, should cancel into
delta.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _kernels
from .dcsp import Chromosome, DcspInstance, expression_array
from .words import labeled_normal_form_arrays, letter_key

CHI, ZETA = "chi", "zeta"
LEFT, RIGHT = "left", "right"


@dataclass(frozen=True)
class Block:
    labels: tuple
    side: str
    start: int  # first position in Ebar
    end: int  # one past the last position


@dataclass(frozen=True)
class Recommendation:
    g: int
    q: Optional[int]  # label in chi+zeta; None only for a fallback on an empty word
    side: str
    direction: str
    fallback: bool = False

    def position(self, c: Chromosome) -> Optional[int]:
        """Index of ``q`` inside its side's word."""
        if self.q is None:
            return None
        return self.q if self.side == CHI else self.q - len(c.chi)


@dataclass
class TracebackReport:
    cost: int
    ebar: tuple
    labels: tuple
    blocks: list
    recommendation: Recommendation
    block_index: Optional[int] = None
    delta: Optional[tuple] = None
    candidates: tuple = ()


def compute_blocks(labels, chi_len: int) -> list:
    """Maximal runs of adjacent labeled letters of Ebar belonging to one side.

    ``labels`` holds one entry per letter of Ebar; None or a negative value
    means unlabeled.
    """
    blocks = []
    run = []
    run_side = start = prev = None
    for pos, lab in enumerate(labels):
        if lab is None or lab < 0:
            continue
        side = CHI if lab < chi_len else ZETA
        if run and (pos != prev + 1 or side != run_side):
            blocks.append(Block(tuple(run), run_side, start, prev + 1))
            run = []
        if not run:
            start, run_side = pos, side
        run.append(lab)
        prev = pos
    if run:
        blocks.append(Block(tuple(run), run_side, start, prev + 1))
    return blocks


def _blocks_from_array(labels: np.ndarray, chi_len: int) -> list:
    positions = np.flatnonzero(labels >= 0)
    sparse = [None] * len(labels)
    for pos, lab in zip(positions.tolist(), labels[positions].tolist()):
        sparse[pos] = lab
    return compute_blocks(sparse, chi_len) if len(positions) else []


def _fallback(inst: DcspInstance, c: Chromosome, ds) -> Recommendation:
    side = CHI if ds.choose_bool() else ZETA
    gens = inst.spec.letters(inst.y_set if side == CHI else inst.z_set)
    g = ds.choose_element(gens)
    word = c.side(side)
    q = None
    if word:
        q = ds.choose_index(len(word)) + (0 if side == CHI else len(c.chi))
    direction = RIGHT if ds.choose_bool() else LEFT
    return Recommendation(g, q, side, direction, fallback=True)


def trace(inst: DcspInstance, c: Chromosome, ds) -> TracebackReport:
    """Full traceback on a pseudo-reduced chromosome, keeping intermediate data."""
    spec = inst.spec
    n_chi, n_zeta = len(c.chi), len(c.zeta)
    letters = expression_array(inst, c)
    labels = np.full(len(letters), -1, np.int64)
    labels[:n_chi] = np.arange(n_chi)
    offset = n_chi + len(inst.a)
    labels[offset:offset + n_zeta] = np.arange(n_chi, n_chi + n_zeta)
    ebar_arr, label_arr = labeled_normal_form_arrays(letters, labels, spec.rank)
    blocks = _blocks_from_array(label_arr, n_chi)
    ebar = tuple(ebar_arr.tolist())
    report = TracebackReport(len(ebar), ebar,
                             tuple(None if x < 0 else x for x in label_arr.tolist()),
                             blocks, None)

    for _ in range(1 + 2 * len(blocks) if blocks else 0):
        m = ds.choose_index(len(blocks))
        block = blocks[m]
        if ds.choose_bool():
            direction, q = RIGHT, block.labels[-1]
            stop = blocks[m + 1].start if m + 1 < len(blocks) else len(ebar)
            delta = ebar_arr[block.end:stop]
            pool = _kernels.extremal(delta, spec.rank, True)
        else:
            direction, q = LEFT, block.labels[0]
            begin = blocks[m - 1].end if m > 0 else 0
            delta = ebar_arr[begin:block.start]
            pool = _kernels.extremal(delta, spec.rank, False)
        allowed = inst.y_set if block.side == CHI else inst.z_set
        # delta is a factor of a reduced word, so its extremal letters are
        # exactly its floor (roof); the set dedups repeated letters
        candidates = tuple(sorted({h for h in pool.tolist() if abs(h) in allowed}, key=letter_key))
        report.block_index, report.delta, report.candidates = m, tuple(delta.tolist()), candidates
        if candidates:
            h = ds.choose_element(candidates)
            report.recommendation = Recommendation(-h, q, block.side, direction)
            return report

    report.recommendation = _fallback(inst, c, ds)
    return report


def evaluate(inst: DcspInstance, c: Chromosome, ds) -> tuple:
    """``(cost, recommendation)`` for a pseudo-reduced chromosome."""
    report = trace(inst, c, ds)
    return report.cost, report.recommendation


def format_trace(report: TracebackReport) -> str:
    """Ebar as a label row over a letter row, followed by the block table."""
    cells = [(("" if lab is None else str(lab)), str(v)) for v, lab in zip(report.ebar, report.labels)]
    widths = [max(len(a), len(b)) for a, b in cells]
    top = " ".join(a.rjust(w) for (a, _), w in zip(cells, widths))
    bottom = " ".join(b.rjust(w) for (_, b), w in zip(cells, widths))
    lines = [f"cost {report.cost}", top, bottom, "blocks:"]
    for k, b in enumerate(report.blocks, start=1):
        lines.append(f"  beta_{k}: side={b.side} labels={list(b.labels)} span=[{b.start},{b.end})")
    rec = report.recommendation
    lines.append(f"recommend g={rec.g} q={rec.q} side={rec.side} direction={rec.direction}"
                 + (" (fallback)" if rec.fallback else ""))
    return "\n".join(lines)
