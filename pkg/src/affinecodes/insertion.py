"""Row insertion on codes, recording tableaux, and reduced-word enumeration.

Multiplying an affine permutation by a single generator a_p on the right
corresponds to inserting the residue p into the rows of its decreasing
decomposition.  The carried residue drops by one each time it passes a row:
it is included when neither it nor its predecessor is present, bumps the
predecessor upward when only the predecessor is present, and passes through
unchanged (a braid) when both are present.  Labelling each inserted cell with
its step number yields a recording tableau; the map from reduced words to
recording tableaux of the final code is a bijection, inverted by
reverse_insert.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import DECREASING, CyclicDecomposition, code_of
from .permutations import AffinePermutation


class DescentViolation(ValueError):
    """Inserting this residue multiplies by a current right descent (product 0)."""


class NotReduced(ValueError):
    """The word stops being reduced at the stored 0-based position."""

    def __init__(self, position):
        super().__init__(f"word is not reduced at position {position}")
        self.position = position


class NotStandard(ValueError):
    """The labels do not record any insertion history for this code."""


class BoundExceeded(ValueError):
    """More reduced words than the caller's bound."""


@dataclass(frozen=True)
class InsertionTrace:
    """Actions of one insertion, bottom row first.

    steps holds (row, action, residue) triples where residue is the value
    carried into that row and action is 'include', 'bump', or 'braid'.
    final_cell is the (column, row) of the included box.
    """

    steps: tuple
    final_cell: tuple


@dataclass(frozen=True)
class RecordingTableau:
    """Step labels on the cells of a code, as sorted ((column, row), label) pairs."""

    k: int
    cells: tuple

    def as_dict(self):
        return dict(self.cells)


def _rows_of_code(code):
    """Row sets of the decreasing decomposition with this code."""
    n = len(code)
    rows = []
    for j in range(1, max(code, default=0) + 1):
        rows.append(frozenset((i - j + 1) % n for i in range(n) if code[i] >= j))
    return rows


def _code_of_rows(k, rows):
    return code_of(CyclicDecomposition(k, tuple(rows), DECREASING, "right"))


def insert(code, p):
    """Insert residue p into a code; returns (new code, trace).

    Raises DescentViolation when p is a descent of the coded element, which
    is exactly when the insertion meets a row containing p but not p - 1.
    """
    n = len(code)
    p %= n
    rows = _rows_of_code(code)
    steps = []
    carry = p
    j = 1
    while True:
        row = rows[j - 1] if j <= len(rows) else frozenset()
        has = carry in row
        has_prev = (carry - 1) % n in row
        if has and not has_prev:
            raise DescentViolation(f"residue {carry} at row {j}")
        if not has and not has_prev:
            steps.append((j, "include", carry))
            new_row = row | {carry}
            if j <= len(rows):
                rows[j - 1] = new_row
            else:
                rows.append(new_row)
            cell = ((carry + j - 1) % n, j)
            return _code_of_rows(n - 1, rows), InsertionTrace(tuple(steps), cell)
        if has_prev and not has:
            steps.append((j, "bump", carry))
            rows[j - 1] = row - {(carry - 1) % n} | {carry}
        else:
            steps.append((j, "braid", carry))
        carry = (carry - 1) % n
        j += 1


def insert_word(k, word):
    """Insert a whole word; returns (code, RecordingTableau).

    Raises NotReduced at the first letter whose insertion hits a descent.
    """
    n = k + 1
    code = (0,) * n
    labels = {}
    for step, letter in enumerate(word):
        try:
            code, trace = insert(code, letter)
        except DescentViolation:
            raise NotReduced(step) from None
        for j, action, carry in trace.steps:
            if action == "bump":
                source = (((carry - 1) % n + j - 1) % n, j)
                labels[((carry + j - 1) % n, j)] = labels.pop(source)
        labels[trace.final_cell] = step + 1
    return code, RecordingTableau(k, tuple(sorted(labels.items())))


def reverse_insert(code, tableau):
    """Recover the reduced word that produced (code, tableau).

    Peels the highest label: its cell fixes the included residue, and walking
    back down the rows undoes bumps and braids, raising NotStandard whenever
    the cells cannot have recorded an insertion.
    """
    n = len(code)
    labels = tableau.as_dict()
    if sorted(labels.values()) != list(range(1, len(labels) + 1)):
        raise NotStandard("labels must be 1..N without repeats")
    diagram = {(i, j) for i in range(n) for j in range(1, code[i] + 1)}
    if set(labels) != diagram:
        raise NotStandard("labelled cells differ from the cells of the code")
    rows = _rows_of_code(code)
    word = []
    for step in range(len(labels), 0, -1):
        (col, j), = (cell for cell, lab in labels.items() if lab == step)
        carry = (col - j + 1) % n
        row = rows[j - 1]
        if carry not in row or (carry - 1) % n in row:
            raise NotStandard(f"label {step} does not sit on an includable cell")
        rows[j - 1] = row - {carry}
        del labels[(col, j)]
        for t in range(j - 1, 0, -1):
            carry = (carry + 1) % n
            row = rows[t - 1]
            has = carry in row
            has_prev = (carry - 1) % n in row
            if has and not has_prev:
                rows[t - 1] = row - {carry} | {(carry - 1) % n}
                moved = labels.pop(((carry + t - 1) % n, t))
                labels[(((carry - 1) % n + t - 1) % n, t)] = moved
            elif has and has_prev:
                pass
            else:
                raise NotStandard(f"undoing label {step} fails at row {t}")
        word.append(carry)
        while rows and not rows[-1]:
            rows.pop()
    assert not rows, "all cells must be consumed"
    return list(reversed(word))


def enumerate_reduced_words(x, bound=None):
    """All reduced words for x, via its right descents; sorted lexicographically.

    Raises BoundExceeded when the count passes bound.
    """
    if bound is not None and count_reduced_words(x) > bound:
        raise BoundExceeded(f"more than {bound} reduced words")
    words = []

    def walk(y, suffix):
        descents = y.right_descents()
        if not descents:
            words.append(list(reversed(suffix)))
            return
        for i in sorted(descents):
            suffix.append(i)
            walk(y.times_s(i), suffix)
            suffix.pop()

    walk(x, [])
    return sorted(words)


def count_reduced_words(x, bound=None):
    """Number of reduced words for x, by summing over right descents."""
    memo = {}

    def count(y):
        if y.is_identity():
            return 1
        if y in memo:
            return memo[y]
        total = sum(count(y.times_s(i)) for i in y.right_descents())
        memo[y] = total
        return total

    total = count(x)
    if bound is not None and total > bound:
        raise BoundExceeded(f"{total} reduced words exceeds bound {bound}")
    return total
