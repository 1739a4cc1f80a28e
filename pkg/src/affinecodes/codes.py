"""Canonical cyclic decompositions of affine permutations and their codes.

Every nonidentity affine permutation x factors uniquely as a product of
cyclically decreasing elements d_{A_m} ... d_{A_1} whose size vector
(|A_1|, ..., |A_m|) is lexicographically maximal; likewise with increasing
factors, and from the left (maximizing leftmost sizes first).  Rows are stored
rightmost factor first.

The code of a decomposition is a vector alpha indexed by Z_{k+1} with at least
one zero entry: column i counts the rows whose residue set contains the residue
belonging to column i at that row's level.  Cell (column i, row j) holds
residue i - j + 1 for decreasing rows and i + j - 1 for increasing rows, mod
k+1.  Left-side codes reuse the right-side formulas after reversing the row
list (which is the opposite-direction right decomposition of the inverse).

The same four vectors arise from window statistics alone (affine_code): counts
of larger values to the left or smaller values to the right of a fixed
position or value, taken per residue class.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclic import connected_components, d_word, u_word
from .permutations import AffinePermutation


class IdentityInput(ValueError):
    """The identity has no maximal factor to extract."""


class NotMaximal(ValueError):
    """Row sets violate the shifted-containment law of a maximal decomposition."""


class NotContained(ValueError):
    """Skew pair (beta, alpha) needs alpha <= beta entrywise."""


class _ZeroType:
    """Sentinel for a vanishing product in the nil-Coxeter monoid."""

    def __repr__(self):
        return "ZERO"


ZERO = _ZeroType()

DECREASING = "decreasing"
INCREASING = "increasing"


def max_right_set(x, direction=DECREASING):
    """The unique largest proper residue set peelable off the right of x.

    For each right descent i the connected run is grown away from i (upward
    for decreasing factors, downward for increasing) while the next letter
    stays a descent of the partially peeled element, capped at k residues so
    the set stays proper.  The union over descents is the answer.
    """
    n = x.n
    descents = x.right_descents()
    if not descents:
        raise IdentityInput("identity has no right descents")
    step = 1 if direction == DECREASING else -1
    result = set()
    for i in descents:
        t = i
        z = x.times_s(i)
        size = 1
        while size < n - 1 and (t + step) % n in z.right_descents():
            t = (t + step) % n
            z = z.times_s(t)
            size += 1
        result.update((i + step * s) % n for s in range(size))
    return frozenset(result)


@dataclass(frozen=True)
class CyclicDecomposition:
    """Factorization of an affine permutation into cyclic elements.

    rows lists residue sets with the rightmost factor first; direction says
    whether factors are decreasing or increasing; side records whether sizes
    were maximized from the right or the left.
    """

    k: int
    rows: tuple
    direction: str
    side: str

    def word(self):
        """Reduced word of the product, leftmost factor first."""
        letters = []
        make = d_word if self.direction == DECREASING else u_word
        for row in reversed(self.rows):
            letters.extend(make(self.k, row))
        return letters

    def element(self):
        return AffinePermutation.from_word(self.k, self.word())

    def code(self):
        return code_of(self)


def _peel(x, residues, direction):
    """Remove the factor on residues from the right of x, one letter at a time."""
    word = d_word(x.k, residues) if direction == DECREASING else u_word(x.k, residues)
    for letter in reversed(word):
        assert letter in x.right_descents(), "peeled letter must shorten the element"
        x = x.times_s(letter)
    return x


def canonical_decomposition(x, direction=DECREASING, side="right"):
    """Maximal decomposition of x into cyclic factors of the given kind."""
    if side == "left":
        flipped = INCREASING if direction == DECREASING else DECREASING
        inner = canonical_decomposition(x.inverse(), flipped, "right")
        return CyclicDecomposition(x.k, tuple(reversed(inner.rows)), direction, "left")
    rows = []
    while not x.is_identity():
        top = max_right_set(x, direction)
        rows.append(top)
        x = _peel(x, top, direction)
    return CyclicDecomposition(x.k, tuple(rows), direction, "right")


def filling_residue(k, direction, column, row):
    """Residue marking the cell at (column, row), rows counted from 1."""
    n = k + 1
    if direction == DECREASING:
        return (column - row + 1) % n
    return (column + row - 1) % n


def code_of(decomp):
    """Code vector of a maximal decomposition; NotMaximal if rows disobey it.

    Right-side maximality means each row is contained in the previous row
    shifted one step toward it (down for decreasing, up for increasing).
    Left-side rows are reversed and checked against the opposite direction,
    matching the right decomposition of the inverse element.
    """
    n = decomp.k + 1
    rows = decomp.rows
    direction = decomp.direction
    if decomp.side == "left":
        rows = tuple(reversed(rows))
        direction = INCREASING if direction == DECREASING else DECREASING
    shift = -1 if direction == DECREASING else 1
    for j in range(len(rows) - 1):
        allowed = {(r + shift) % n for r in rows[j]}
        if not set(rows[j + 1]) <= allowed:
            raise NotMaximal(f"row {j + 2} is not contained in row {j + 1} shifted")
    return tuple(
        sum(
            1
            for j, row in enumerate(rows, start=1)
            if filling_residue(decomp.k, direction, i, j) in row
        )
        for i in range(n)
    )


def rd(x):
    """Code of the right decreasing decomposition."""
    return code_of(canonical_decomposition(x, DECREASING, "right"))


def ri(x):
    """Code of the right increasing decomposition."""
    return code_of(canonical_decomposition(x, INCREASING, "right"))


def ld(x):
    """Code of the left decreasing decomposition."""
    return code_of(canonical_decomposition(x, DECREASING, "left"))


def li(x):
    """Code of the left increasing decomposition."""
    return code_of(canonical_decomposition(x, INCREASING, "left"))


def _count_before_greater(x, position, threshold):
    """Number of integers j < position with x(j) > threshold."""
    n = x.n
    total = 0
    for r in range(1, n + 1):
        xr = x.window[r - 1]
        hi = (position - r - 1) // n
        lo = (threshold - xr) // n + 1
        total += max(0, hi - lo + 1)
    return total


def _count_after_less(x, position, threshold):
    """Number of integers j > position with x(j) < threshold."""
    n = x.n
    total = 0
    for r in range(1, n + 1):
        xr = x.window[r - 1]
        lo = (position - r) // n + 1
        hi = (threshold - xr - 1) // n
        total += max(0, hi - lo + 1)
    return total


def affine_code(x, variant):
    """Code computed from window statistics, no factorization involved.

    Entry i of each variant counts, per residue class:
      rd: positions left of i+1 holding values above x(i+1)
      ri: positions right of i holding values below x(i)
      ld: positions left of the preimage of i holding values above i
      li: positions right of the preimage of i+1 holding values below i+1
    The anchor may be shifted by any multiple of k+1 without changing the
    count, so entries depend only on the residue of the anchor.
    """
    n = x.n
    if variant == "rd":
        return tuple(
            _count_before_greater(x, i + 1, x.value_at(i + 1)) for i in range(n)
        )
    if variant == "ri":
        return tuple(_count_after_less(x, i, x.value_at(i)) for i in range(n))
    if variant == "ld":
        return tuple(_count_before_greater(x, x.position_of(i), i) for i in range(n))
    if variant == "li":
        return tuple(
            _count_after_less(x, x.position_of(i + 1), i + 1) for i in range(n)
        )
    raise ValueError(f"unknown variant {variant!r}")


def code_descents(code):
    """Descent set of a code: columns strictly taller than their predecessor."""
    n = len(code)
    return frozenset(i for i in range(n) if code[(i - 1) % n] < code[i])


def code_to_permutation(code):
    """The affine permutation whose right decreasing decomposition has this code.

    The diagram is cut at the smallest zero column, rows are read from the top
    row down, each right to left in the cut order, and the resulting word is
    multiplied out.
    """
    n = len(code)
    if min(code) != 0:
        raise ValueError("a code needs at least one zero column")
    z = code.index(0)
    columns = [(z + 1 + t) % n for t in range(n)]
    word = []
    for j in range(max(code), 0, -1):
        for c in reversed(columns):
            if code[c] >= j:
                word.append((c - j + 1) % n)
    return AffinePermutation.from_word(n - 1, word)


def two_row_maximize(k, b_set, a_set):
    """Maximize the two-row decreasing product d_B * d_A.

    Returns ZERO when the product vanishes, otherwise the pair
    (b_new, a_new) with d_{b_new} * d_{a_new} the same element, a_new the
    maximal right set, and b_new possibly empty.
    """
    word = d_word(k, b_set) + d_word(k, a_set)
    x = AffinePermutation.from_word(k, word)
    if x.length() != len(word):
        return ZERO
    a_new = max_right_set(x, DECREASING)
    y = _peel(x, a_new, DECREASING)
    if y.is_identity():
        b_new = frozenset()
    else:
        b_new = max_right_set(y, DECREASING)
        y = _peel(y, b_new, DECREASING)
        assert y.is_identity(), "two reduced rows maximize to at most two rows"
    return b_new, a_new


def _check_contained(beta, alpha):
    if len(beta) != len(alpha):
        raise NotContained(f"codes of different lengths: {len(beta)} vs {len(alpha)}")
    if any(a > b for a, b in zip(alpha, beta)):
        raise NotContained(f"{alpha} is not contained in {beta}")


def is_horizontal_strip(beta, alpha):
    """No column of the skew diagram beta minus alpha holds two cells."""
    _check_contained(beta, alpha)
    return all(b - a <= 1 for a, b in zip(alpha, beta))


def is_vertical_strip(beta, alpha):
    """No row of the skew diagram beta minus alpha holds two cells.

    Codes live on a cylinder, so a row at a given level is a maximal cyclic
    run of columns of beta reaching that level; an empty column ends the row.
    When every column reaches the level the whole circle is a single row.
    """
    _check_contained(beta, alpha)
    n = len(beta)
    for level in range(1, max(beta, default=0) + 1):
        present = {i for i in range(n) if beta[i] >= level}
        if not present:
            break
        skew = {i for i in present if alpha[i] < level}
        if len(present) == n:
            if len(skew) > 1:
                return False
            continue
        for i in present:
            if (i - 1) % n in present:
                continue
            count, t = 0, i
            while t in present:
                if t in skew:
                    count += 1
                t = (t + 1) % n
            if count > 1:
                return False
    return True


def mirror_code(code):
    """Reverse a code about column 0: entry i moves to column -i mod n."""
    n = len(code)
    return tuple(code[(-i) % n] for i in range(n))


def k_conjugate_perm(x):
    """The box-complement symmetry x(q) -> 1 - x(1 - q).

    An involution that preserves length and trades the two code
    directions up to the column mirror: the decreasing code of the
    result is mirror_code(ri(x)) and its increasing code is
    mirror_code(rd(x)).  Right descents move to their mirrored
    positions i -> -i mod n.  A dominant element (reading word of a
    bounded shape) is sent to the dominant element of the shape's
    k-conjugate.
    """
    n = x.n
    window = [1 - x.value_at(1 - q) for q in range(1, n + 1)]
    return AffinePermutation.from_window(window)
