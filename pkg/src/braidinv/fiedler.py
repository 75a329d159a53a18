"""The Fiedler polynomial of a braided knot and its exchange-move behaviour.

Smoothing a crossing of a closed braid whose closure is a knot splits the
closure into exactly two components; the polynomial collects, over all
crossings, the term sign * x^(2m - n) where m is the winding number of the
tracked component and n the braid index.

Winding convention.  Smoothing is letter deletion after rotating the word
so the crossing sits first; the tracked ("ascending") strand at the top of
a positive crossing on strands (i, i+1) is the one at position i+1, and at
a negative crossing the one at position i.  The two choices at one site
always carry complementary windings m and n - m, so the polynomial itself
is insensitive to the global convention (it is symmetric under x -> 1/x);
the convention fixes which representative the per-site winding reports.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import LaurentPoly, symmetric_pair
from .braid import BraidWord, ExchangePair


class NotAKnotError(ValueError):
    """The closure has more than one component."""

    def __init__(self, word, permutation):
        self.cycle_type = permutation.cycle_type()
        components = len(self.cycle_type)
        super().__init__(
            f"closure is a {components}-component link (cycle type {list(self.cycle_type)})"
        )


def _require_knot(w):
    p = w.permutation(allow_singular=True)
    if not p.is_full_cycle():
        raise NotAKnotError(w, p)
    return p


def ascending_index(letter):
    """Boundary position of the tracked strand at the top of a crossing."""
    if letter.is_singular:
        raise ValueError("singular letters have no crossing resolution")
    return letter.index + 1 if letter.sign > 0 else letter.index


def winding_m(w, position):
    """Winding number of the tracked strand after smoothing one crossing.

    Rotate the word so the crossing is first, delete it, and return the
    length of the cycle of the remaining word's permutation through the
    tracked strand's position.
    """
    _require_knot(w)
    letter = w.letters[position]
    if letter.is_singular:
        raise ValueError("cannot smooth a singular letter")
    rotated = w.cyclic_rotate(position)
    smoothed = BraidWord(w.n, rotated.letters[1:])
    perm = smoothed.permutation(allow_singular=True)
    return len(perm.cycle_containing(ascending_index(letter)))


def fiedler_poly(w):
    """The conjugacy-class invariant sum of sign * x^(2m - n) over crossings."""
    if w.has_singular:
        raise ValueError("word has singular letters")
    _require_knot(w)
    out = LaurentPoly.zero("x")
    for r, letter in enumerate(w.letters):
        m = winding_m(w, r)
        out = out + LaurentPoly({2 * m - w.n: letter.sign}, "x")
    return out


def skein_difference(prefix, j, suffix):
    """F(prefix * s_j * suffix) - F(prefix * s_j^-1 * suffix).

    Both resolutions share one permutation, and the difference is the
    symmetric pair x^(2m-n) + x^(n-2m) at the resolved site; the two routes
    are computed independently and checked against each other.
    """
    if prefix.n != suffix.n:
        raise ValueError("strand count mismatch")
    n = prefix.n
    pos_word = prefix * BraidWord.from_ints(n, [j]) * suffix
    neg_word = prefix * BraidWord.from_ints(n, [-j]) * suffix
    direct = fiedler_poly(pos_word) - fiedler_poly(neg_word)
    m = winding_m(pos_word, len(prefix))
    pair = symmetric_pair(m, n)
    assert direct == pair, f"skein routes disagree: {direct} vs {pair}"
    return direct


def order1_alternating_sum(A, i, B, j, C):
    """The four-term alternating sum over both resolutions of two sites.

    Vanishes identically: resolving two marked crossings in all four sign
    patterns and summing with alternating signs kills every contribution.
    """
    n = A.n
    out = LaurentPoly.zero("x")
    for si in (1, -1):
        for sj in (1, -1):
            word = (
                A
                * BraidWord.from_ints(n, [si * i])
                * B
                * BraidWord.from_ints(n, [sj * j])
                * C
            )
            out = out + si * sj * fiedler_poly(word)
    return out


@dataclass(frozen=True)
class ExchangeAnalysis:
    """Cycle-length data of an exchange pair's two smoothing sites.

    m1 and m2 are the site windings (tracked strand through the newest
    position n+1); when the two smoothed permutations coincide the sites are
    indistinguishable and m2 is normalized to the complementary
    representative n+1-m so the reported pair exhibits the split.  l is the
    length of the first-site cycle through position n+1.
    """

    strands: int
    m1: int
    m2: int
    l: int
    first_lengths: tuple[int, ...]
    second_lengths: tuple[int, ...]
    difference: LaurentPoly

    @property
    def vanishes(self):
        return self.difference.is_zero

    def to_json(self):
        return {
            "strands": self.strands,
            "m1": self.m1,
            "m2": self.m2,
            "l": self.l,
            "first_lengths": list(self.first_lengths),
            "second_lengths": list(self.second_lengths),
            "difference": self.difference.to_json(),
            "vanishes": self.vanishes,
        }


def _smoothed_perm(word, position):
    rotated = word.cyclic_rotate(position)
    return BraidWord(word.n, rotated.letters[1:]).permutation(allow_singular=True)


def exchange_analysis(pair):
    """Windings, cycle lengths and the polynomial difference for a pair."""
    beta = pair.beta_positive
    _require_knot(beta)
    first_pos, second_pos = pair.site_positions
    strands = pair.strands

    u1 = _smoothed_perm(beta, first_pos)
    u2 = _smoothed_perm(beta, second_pos)
    m1 = len(u1.cycle_containing(strands))
    m2 = len(u2.cycle_containing(strands))
    if u1 == u2:
        m2 = strands - m2
    first_lengths = tuple(sorted(len(c) for c in u1.cycles()))
    second_lengths = tuple(sorted(len(c) for c in u2.cycles()))

    direct = fiedler_poly(pair.beta1) - fiedler_poly(pair.beta2)
    via_pairs = symmetric_pair(m2, strands) - symmetric_pair(m1, strands)
    assert direct == via_pairs, f"exchange routes disagree: {direct} vs {via_pairs}"
    return ExchangeAnalysis(
        strands=strands,
        m1=m1,
        m2=m2,
        l=m1,
        first_lengths=first_lengths,
        second_lengths=second_lengths,
        difference=direct,
    )


def exchange_fiedler_difference(pair):
    """F(beta1) - F(beta2), cross-checked against the two-site winding formula."""
    return exchange_analysis(pair).difference
