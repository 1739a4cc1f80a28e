"""Cyclically decreasing and increasing elements indexed by proper subsets of Z_{k+1}.

A proper subset A of the residues 0..k decomposes into connected cyclic
intervals [p, q] (p, p+1, ..., q mod k+1).  The decreasing element d_A is the
product of one letter per residue, each interval read from its top q down to
its bottom p; the increasing element u_A reads each interval upward.  Words
for distinct intervals commute, so the canonical interval order only fixes a
display form.

normalize_ud rewrites u_B * d_A (connected B, A) into the normal form
d_{A'} * u_{B'} or detects that the product is zero in the nil-Coxeter monoid.
"""

from __future__ import annotations

from dataclasses import dataclass

from .permutations import AffinePermutation


class ImproperSet(ValueError):
    """The residue set is all of Z_{k+1}; cyclic elements need a proper subset."""


class NotConnected(ValueError):
    """The residue set is empty or spans more than one cyclic interval."""


class WouldBeImproper(ValueError):
    """Growing the interval would cover every residue."""


class WouldBeEmpty(ValueError):
    """Shrinking the interval would remove its last residue."""


class SizeTooSmall(ValueError):
    """The dominance test needs |A| + |B| >= k + 1."""


def connected_components(k, residues):
    """Connected cyclic intervals of a residue set, as (bottom, top) pairs.

    Components are returned sorted by bottom residue.  Raises ImproperSet when
    the set is all of Z_{k+1}.
    """
    n = k + 1
    s = {r % n for r in residues}
    if len(s) == n:
        raise ImproperSet(f"set covers all residues mod {n}")
    comps = []
    for p in sorted(s):
        if (p - 1) % n in s:
            continue
        q = p
        while (q + 1) % n in s:
            q = (q + 1) % n
        comps.append((p, q))
    return comps


def interval_size(k, interval):
    p, q = interval
    return (q - p) % (k + 1) + 1


def _interval_set(k, interval):
    n = k + 1
    p, q = interval
    return frozenset((p + t) % n for t in range(interval_size(k, interval)))


def d_word(k, residues):
    """Word of the cyclically decreasing element on a proper residue set.

    Each component is read from top to bottom; components are emitted in
    increasing order of their top residue.  The empty set gives the empty word.
    """
    comps = connected_components(k, residues)
    word = []
    for p, q in sorted(comps, key=lambda c: c[1]):
        size = interval_size(k, (p, q))
        word.extend((q - t) % (k + 1) for t in range(size))
    return word


def u_word(k, residues):
    """Word of the cyclically increasing element: the reversed decreasing word."""
    return list(reversed(d_word(k, residues)))


def d_element(k, residues):
    return AffinePermutation.from_word(k, d_word(k, residues))


def u_element(k, residues):
    return AffinePermutation.from_word(k, u_word(k, residues))


def _as_interval(k, residues):
    comps = connected_components(k, residues)
    if len(comps) != 1:
        raise NotConnected(f"{sorted(set(residues))} is not a single cyclic interval")
    return comps[0]


def interval_adjust(k, residues, which):
    """Grow or shrink a connected set at one end.

    which picks the end: 'plus_hi' adds top+1, 'minus_hi' removes the top,
    'plus_lo' adds bottom-1, 'minus_lo' removes the bottom.
    """
    n = k + 1
    p, q = _as_interval(k, residues)
    size = (q - p) % n + 1
    if which in ("plus_hi", "plus_lo"):
        if size == k:
            raise WouldBeImproper("cannot grow a k-element subset of k+1 residues")
        p, q = (p, (q + 1) % n) if which == "plus_hi" else ((p - 1) % n, q)
    elif which in ("minus_hi", "minus_lo"):
        if size == 1:
            raise WouldBeEmpty("cannot shrink a singleton")
        p, q = (p, (q - 1) % n) if which == "minus_hi" else ((p + 1) % n, q)
    else:
        raise ValueError(f"unknown adjustment {which!r}")
    return _interval_set(k, (p, q))


@dataclass(frozen=True)
class UdNormalForm:
    """Result of rewriting u_B * d_A as d_{A'} * u_{B'}.

    is_zero marks a vanishing product (then a_prime and b_prime are None).
    case_tag records which rewrite applied: ZERO, B_IN_A, A_IN_B,
    DISJOINT_LEFT, DISJOINT_RIGHT, DISJOINT_BOTH, COMMUTE, or OVERLAP.
    """

    a_prime: frozenset | None
    b_prime: frozenset | None
    is_zero: bool
    case_tag: str


def _shift(k, s, delta=1):
    n = k + 1
    return frozenset((r + delta) % n for r in s)


def normalize_ud(k, b_set, a_set):
    """Normal form of u_B * d_A for connected proper B and A.

    The product vanishes exactly when the two interval tops agree.  Otherwise
    there is a unique rewrite d_{A'} * u_{B'} with |A'| + |B'| = |A| + |B|;
    the new pair is found among six end-adjustments of (A, B) and verified by
    multiplying out both sides before returning.
    """
    n = k + 1
    bi, bj = _as_interval(k, b_set)
    ap, aq = _as_interval(k, a_set)
    a = _interval_set(k, (ap, aq))
    b = _interval_set(k, (bi, bj))

    if bj == aq:
        return UdNormalForm(None, None, True, "ZERO")

    if b <= a:
        tag = "B_IN_A"
    elif a <= b:
        tag = "A_IN_B"
    elif a & b:
        tag = "OVERLAP"
    else:
        below = bj == (ap - 1) % n
        above = bi == (aq + 1) % n
        tag = {
            (True, True): "DISJOINT_BOTH",
            (True, False): "DISJOINT_LEFT",
            (False, True): "DISJOINT_RIGHT",
            (False, False): "COMMUTE",
        }[(below, above)]

    target = AffinePermutation.from_word(k, u_word(k, b) + d_word(k, a))
    total = len(a) + len(b)
    assert target.length() == total, "nonzero case must be a reduced product"

    shift_a = _shift(k, a)
    shift_b = _shift(k, b)
    grow_a = (frozenset(a | {(aq + 1) % n}), frozenset(b - {bi}))
    grow_b = (frozenset(a - {ap}), frozenset(b | {(bj + 1) % n}))
    if tag == "OVERLAP":
        candidates = [(shift_a, shift_b), (a, shift_b), (shift_a, b), grow_a, grow_b, (a, b)]
    else:
        candidates = [
            {
                "B_IN_A": (a, shift_b),
                "A_IN_B": (shift_a, b),
                "DISJOINT_LEFT": grow_b,
                "DISJOINT_RIGHT": grow_a,
                "DISJOINT_BOTH": (shift_a, shift_b),
                "COMMUTE": (a, b),
            }[tag]
        ]
    for a_new, b_new in candidates:
        if len(a_new) > k or len(b_new) > k:
            continue
        if AffinePermutation.from_word(k, d_word(k, a_new) + u_word(k, b_new)) == target:
            return UdNormalForm(a_new, b_new, False, tag)
    raise AssertionError("no candidate normal form matched a nonzero product")


def is_i_dominant_ud(k, b_set, a_set, i):
    """Whether u_B * d_A has every right descent at i, given |A| + |B| >= k + 1.

    Holds exactly when A is a connected interval with bottom i and B is a
    connected interval with top i - 1.
    """
    n = k + 1
    a = {r % n for r in a_set}
    b = {r % n for r in b_set}
    if len(a) + len(b) < n:
        raise SizeTooSmall(f"|A| + |B| = {len(a) + len(b)} < {n}")
    a_comps = connected_components(k, a)
    b_comps = connected_components(k, b)
    return (
        len(a_comps) == 1
        and len(b_comps) == 1
        and a_comps[0][0] == i % n
        and b_comps[0][1] == (i - 1) % n
    )
