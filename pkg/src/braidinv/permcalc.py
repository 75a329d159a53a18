"""Cycle calculus for products of two cycles.

Given two cycles A, B written as digit sequences, the intersection order
data nu_A, nu_B, nu_AB decides whether A*B is a full cycle: the product is
a full cycle iff |A n B| is odd and nu_AB is an even permutation.  The
exchange-length computation records how inserting a transposition s_n into
the product splits the full cycle.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .braid import Permutation


def cycles(p):
    """Canonical disjoint-cycle decomposition (fixed points included)."""
    return CycleDecomposition(p.cycles())


@dataclass(frozen=True)
class CycleDecomposition:
    cycles: tuple[tuple[int, ...], ...]

    def lengths(self):
        return tuple(sorted(len(c) for c in self.cycles))

    def __str__(self):
        return format_cycles(self.cycles)


def format_cycles(cycs):
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text):
    """Parse "(1 7 3)(2 8 6)" into a tuple of digit tuples."""
    text = text.strip()
    if text and not _CYCLE.search(text):
        raise ValueError(f"no cycles found in {text!r}")
    out = []
    for body in _CYCLE.findall(text):
        digits = tuple(int(tok) for tok in body.split())
        if digits:
            out.append(digits)
    return tuple(out)


def perm_from_cycles(n, cycs):
    return Permutation.from_cycles(n, cycs)


def _validate_cycle(c, name):
    c = tuple(int(x) for x in c)
    if not c:
        raise ValueError(f"{name} must be a nonempty cycle")
    if len(set(c)) != len(c):
        raise ValueError(f"{name} repeats a digit: {c}")
    if min(c) < 1:
        raise ValueError(f"{name} digits must be >= 1")
    return c


def _appearance_ranks(cycle, support_rank):
    """Ranks (1-based positions in the sorted support) in order of appearance.

    The cycle is read in the rotation it was given; callers who want a
    different anchor rotate first.
    """
    return [support_rank[d] for d in cycle if d in support_rank]


@dataclass(frozen=True)
class IntersectionOrder:
    """The common digits of two cycles and their relative appearance orders.

    nu_a maps rank k to the rank of the k-th common digit met while reading
    cycle A as written; likewise nu_b.  nu_ab = nu_a^-1 * nu_b, the only part
    the full-cycle criterion consumes (through its inversion parity).
    """

    support: tuple[int, ...]
    nu_a: Permutation
    nu_b: Permutation

    @property
    def nu_ab(self):
        return self.nu_a.inverse() * self.nu_b

    def _digit_cycles(self, perm):
        return tuple(
            tuple(self.support[k - 1] for k in cyc)
            for cyc in perm.cycles()
            if len(cyc) > 1
        )

    def nu_a_digits(self):
        return self._digit_cycles(self.nu_a)

    def nu_b_digits(self):
        return self._digit_cycles(self.nu_b)

    def nu_ab_digits(self):
        return self._digit_cycles(self.nu_ab)


def intersection_order(A, B):
    A = _validate_cycle(A, "A")
    B = _validate_cycle(B, "B")
    common = sorted(set(A) & set(B))
    if not common:
        raise ValueError("cycles share no digits")
    rank = {d: i + 1 for i, d in enumerate(common)}
    ra = _appearance_ranks(A, rank)
    rb = _appearance_ranks(B, rank)
    m = len(common)
    nu_a = Permutation(tuple(ra))
    nu_b = Permutation(tuple(rb))
    assert nu_a.size == m and nu_b.size == m
    return IntersectionOrder(tuple(common), nu_a, nu_b)


def _cycle_to_perm(c, n):
    return Permutation.from_cycles(n, [c])


def is_full_cycle_product(A, B):
    """Whether A*B is a single cycle on {1..N}, via the intersection order.

    Requires the digits of A and B to jointly cover {1..N} for N their
    maximum.  Digits belonging to only one cycle splice out of the product
    without changing its cycle count, so fullness depends only on the two
    appearance orders of the common digits: the product is full iff the two
    contracted cycles on A n B multiply to a single cycle.
    """
    A = _validate_cycle(A, "A")
    B = _validate_cycle(B, "B")
    digits = set(A) | set(B)
    n = max(digits)
    if len(digits) != n:
        missing = sorted(set(range(1, n + 1)) - digits)
        raise ValueError(f"cycles do not cover 1..{n}; missing {missing}")
    common = set(A) & set(B)
    m = len(common)
    if m == 0 or m % 2 == 0:
        return False
    rank = {d: i for i, d in enumerate(sorted(common))}
    a_seq = [rank[d] for d in A if d in rank]
    b_seq = [rank[d] for d in B if d in rank]
    pa = [0] * m
    for i, r in enumerate(a_seq):
        pa[r] = a_seq[(i + 1) % m]
    pb = [0] * m
    for i, r in enumerate(b_seq):
        pb[r] = b_seq[(i + 1) % m]
    x = pb[pa[0]]
    steps = 1
    while x:
        x = pb[pa[x]]
        steps += 1
    return steps == m


def full_cycle_parity_criterion(A, B):
    """The parity test: |A n B| odd and nu_AB an even permutation.

    Necessary in its first clause (a full product forces odd overlap) but
    not equivalent to fullness: both directions admit counterexamples on
    ground sets of size 5, e.g. (1 2 3 4 5) * (1 3 2 5 4) splits yet passes,
    while (1 2 3 4 5) * (1 3 5 2 4) is full yet has an odd nu_AB.  Exposed
    for study; use is_full_cycle_product for the exact answer.
    """
    A = _validate_cycle(A, "A")
    B = _validate_cycle(B, "B")
    common = set(A) & set(B)
    if len(common) % 2 == 0:
        return False
    return intersection_order(A, B).nu_ab.sign() == 1


def product_is_full_cycle(A, B):
    """Direct multiplication check (independent of the parity criterion)."""
    A = _validate_cycle(A, "A")
    B = _validate_cycle(B, "B")
    n = max(max(A), max(B))
    p = _cycle_to_perm(A, n) * _cycle_to_perm(B, n)
    return p.is_full_cycle()


@dataclass(frozen=True)
class ExchangeLengths:
    """Cycle-length data of A s_n B and A B s_n for a full-cycle product A*B.

    first_lengths always has the form {l, n+1-l} with l the length of the
    cycle through n+1; second_lengths is {l-1, n+2-l}, possibly met with the
    roles of the two products swapped (flagged).
    """

    n: int
    first_lengths: tuple[int, ...]
    second_lengths: tuple[int, ...]
    l: int
    swapped: bool

    def to_json(self):
        return {
            "n": self.n,
            "first_lengths": list(self.first_lengths),
            "second_lengths": list(self.second_lengths),
            "l": self.l,
            "swapped": self.swapped,
        }


def exchange_lengths(A, B, n):
    """Split data for the two ways of absorbing s_n into a full-cycle product.

    A must move n and B must move n+1; A*B must be a full cycle on
    {1..n+1}.  Returns the two length multisets, the distinguished length l
    (the cycle of A s_n B through n+1), and whether the expected pairing
    {l, n+1-l} / {l-1, n+2-l} only holds with the two products swapped.
    """
    A = _validate_cycle(A, "A")
    B = _validate_cycle(B, "B")
    size = n + 1
    if max(max(A), max(B)) > size:
        raise ValueError(f"digits exceed {size}")
    if n not in A:
        raise ValueError(f"A must contain {n}")
    if size not in B:
        raise ValueError(f"B must contain {size}")
    pa = _cycle_to_perm(A, size)
    pb = _cycle_to_perm(B, size)
    if not (pa * pb).is_full_cycle():
        raise ValueError("A*B is not a full cycle")
    s = Permutation.transposition(size, n)
    first = pa * s * pb
    second = pa * pb * s
    first_lengths = tuple(sorted(len(c) for c in first.cycles()))
    second_lengths = tuple(sorted(len(c) for c in second.cycles()))
    l = len(first.cycle_containing(size))
    if second_lengths == tuple(sorted((l - 1, size + 1 - l))):
        swapped = False
    elif second_lengths == tuple(sorted((l + 1, size - 1 - l))):
        swapped = True
    else:
        raise ValueError(
            f"length pattern violated: first {first_lengths}, second {second_lengths}"
        )
    return ExchangeLengths(n, first_lengths, second_lengths, l, swapped)
