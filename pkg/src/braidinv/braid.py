"""Braid words, the permutation homomorphism, and the closure move set.

Words are read left to right, top to bottom; the strand entering at
position p at the top of a word exits at position pi(p) at the bottom,
so permutations compose left-to-right in word order:
``permutation_of(u * v) == permutation_of(u) * permutation_of(v)``.

Moves implemented: cyclic rotation and general conjugation (closure
move 1), free reduction, the defining relations (same-sign triples and
far commutation), stabilization/destabilization (closure move 2), and
the exchange move X s^-1 Y s -> X s Y s^-1 on a top or bottom generator.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field


class ParseError(ValueError):
    """Malformed braid text."""


class MoveError(ValueError):
    """A move was requested at a position where its pattern is not present."""


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}; images[i-1] is the image of i.

    ``p * q`` applies p first, then q (word order).
    """

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n, i):
        if not 1 <= i <= n - 1:
            raise ValueError(f"transposition index {i} out of range for n={n}")
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(tuple(images))

    @classmethod
    def from_cycles(cls, n, cycles):
        images = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + type(cyc)((cyc[0],))):
                images[a - 1] = b
        p = cls(tuple(images))
        return p

    @property
    def size(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i - 1]

    def __mul__(self, other):
        if self.size != other.size:
            raise ValueError("size mismatch")
        return Permutation(tuple(other.images[x - 1] for x in self.images))

    def inverse(self):
        inv = [0] * self.size
        for i, x in enumerate(self.images, start=1):
            inv[x - 1] = i
        return Permutation(tuple(inv))

    def cycles(self):
        """Disjoint cycles, each starting at its minimal element, sorted by it.

        Fixed points appear as length-1 cycles.
        """
        seen = [False] * (self.size + 1)
        out = []
        for start in range(1, self.size + 1):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self(start)
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self(x)
            out.append(tuple(cyc))
        return tuple(out)

    def cycle_containing(self, x):
        cyc = [x]
        y = self(x)
        while y != x:
            cyc.append(y)
            y = self(y)
        return tuple(cyc)

    def is_full_cycle(self):
        return len(self.cycle_containing(1)) == self.size

    def sign(self):
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def cycle_type(self):
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def __str__(self):
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())


@dataclass(frozen=True)
class BraidLetter:
    """One generator occurrence: index i with kind '+', '-' or 's' (singular)."""

    index: int
    kind: str

    def __post_init__(self):
        if self.index < 1:
            raise ValueError(f"generator index must be >= 1, got {self.index}")
        if self.kind not in ("+", "-", "s"):
            raise ValueError(f"letter kind must be '+', '-' or 's', got {self.kind!r}")

    @classmethod
    def from_int(cls, v):
        if v == 0:
            raise ParseError("generator index 0 is not allowed")
        return cls(abs(v), "+" if v > 0 else "-")

    @property
    def is_singular(self):
        return self.kind == "s"

    @property
    def sign(self):
        if self.kind == "+":
            return 1
        if self.kind == "-":
            return -1
        raise ValueError("singular letter has no crossing sign")

    def inverse(self):
        if self.is_singular:
            raise ValueError("singular letter has no inverse")
        return BraidLetter(self.index, "-" if self.kind == "+" else "+")

    def __str__(self):
        if self.is_singular:
            return f"S{self.index}"
        return str(self.index if self.kind == "+" else -self.index)


_HEADER = re.compile(r"^\s*n\s*=\s*(\d+)\s*;(.*)$", re.DOTALL)
_SINGULAR = re.compile(r"^[sS](\d+)$")


@dataclass(frozen=True)
class BraidWord:
    """A word in the generators of the braid group on ``n`` strands."""

    n: int
    letters: tuple[BraidLetter, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"strand count must be >= 1, got {self.n}")
        for let in self.letters:
            if let.index > self.n - 1:
                raise ValueError(
                    f"letter index {let.index} out of range for {self.n} strands"
                )

    @classmethod
    def from_ints(cls, n, ints):
        return cls(n, tuple(BraidLetter.from_int(v) for v in ints))

    @classmethod
    def empty(cls, n):
        return cls(n, ())

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    @property
    def has_singular(self):
        return any(let.is_singular for let in self.letters)

    def singular_count(self):
        return sum(1 for let in self.letters if let.is_singular)

    def signed_ints(self):
        return [
            let.index if let.kind == "+" else -let.index
            for let in self.letters
            if not let.is_singular
        ]

    def uses_index(self, i):
        return any(let.index == i for let in self.letters)

    def to_text(self):
        body = " ".join(str(let) for let in self.letters)
        return f"n={self.n}; {body}".rstrip()

    def to_json(self):
        return {"n": self.n, "letters": [[let.index, let.kind] for let in self.letters]}

    def __str__(self):
        return self.to_text()

    # -- group structure ---------------------------------------------------

    def __mul__(self, other):
        if self.n != other.n:
            raise ValueError("strand count mismatch")
        return BraidWord(self.n, self.letters + other.letters)

    def inverse(self):
        return BraidWord(self.n, tuple(let.inverse() for let in reversed(self.letters)))

    def embed(self, m):
        """The same word viewed in the braid group on m >= n strands."""
        if m < self.n:
            raise ValueError("cannot embed into fewer strands")
        return BraidWord(m, self.letters)

    def flip(self):
        """The image under the symmetry i -> n - i of the strand positions."""
        return BraidWord(
            self.n, tuple(BraidLetter(self.n - let.index, let.kind) for let in self.letters)
        )

    # -- invariant-facing --------------------------------------------------

    def permutation(self, allow_singular=False):
        """Product of transpositions in word order; letter sign is irrelevant."""
        if not allow_singular and self.has_singular:
            raise ValueError("word has singular letters; pass allow_singular=True")
        images = list(range(1, self.n + 1))
        for let in self.letters:
            i = let.index
            for p in range(self.n):
                if images[p] == i:
                    images[p] = i + 1
                elif images[p] == i + 1:
                    images[p] = i
        return Permutation(tuple(images))

    def writhe(self):
        if self.has_singular:
            raise ValueError("writhe undefined for words with singular letters")
        return sum(let.sign for let in self.letters)

    def is_knot(self):
        """True iff the closure is a single component."""
        return self.permutation(allow_singular=True).is_full_cycle()

    # -- moves ---------------------------------------------------------------

    def cyclic_rotate(self, k):
        if not self.letters:
            return self
        k %= len(self.letters)
        return BraidWord(self.n, self.letters[k:] + self.letters[:k])

    def conjugate(self, g):
        """g * self * g^-1, freely reduced."""
        if g.n != self.n:
            raise ValueError("strand count mismatch")
        return (g * self * g.inverse()).free_reduce()

    def free_reduce(self):
        out: list[BraidLetter] = []
        for let in self.letters:
            if (
                out
                and not let.is_singular
                and not out[-1].is_singular
                and out[-1].index == let.index
                and out[-1].kind != let.kind
            ):
                out.pop()
            else:
                out.append(let)
        return BraidWord(self.n, tuple(out))

    def apply_braid_relation(self, position):
        """Rewrite at ``position``: same-sign triple i,i+-1,i or a commuting swap.

        Triples rewrite (i, j, i) -> (j, i, j) for |i-j| = 1 with all three
        letters of equal sign; pairs with |i-j| >= 2 swap.
        """
        lets = self.letters
        if 0 <= position <= len(lets) - 3:
            a, b, c = lets[position : position + 3]
            if (
                not a.is_singular
                and a == c
                and a.kind == b.kind
                and abs(a.index - b.index) == 1
            ):
                new = (b, a, b)
                return BraidWord(self.n, lets[:position] + new + lets[position + 3 :])
        if 0 <= position <= len(lets) - 2:
            a, b = lets[position : position + 2]
            if abs(a.index - b.index) >= 2:
                return BraidWord(
                    self.n, lets[:position] + (b, a) + lets[position + 2 :]
                )
        raise MoveError(f"no relation pattern at position {position}")

    def stabilize(self, sign=1):
        """Append the new top generator; strand count grows by one."""
        kind = "+" if sign > 0 else "-"
        return BraidWord(self.n + 1, self.letters + (BraidLetter(self.n, kind),))

    def destabilize(self):
        """Remove a final top-generator letter; requires it to be the unique one."""
        if not self.letters:
            raise MoveError("empty word cannot be destabilized")
        top = self.n - 1
        last = self.letters[-1]
        if last.index != top or last.is_singular:
            raise MoveError("last letter is not the top generator")
        if any(let.index == top for let in self.letters[:-1]):
            raise MoveError("top generator occurs more than once")
        return BraidWord(self.n - 1, self.letters[:-1])

    def exchange_move(self, position):
        """Flip the exchange pattern X s^e Y s^-e (final letter) at a boundary generator.

        The letter at ``position`` and the final letter must be opposite
        crossings of the same generator j, with j either 1 or n-1, and the
        segments between them must avoid j.
        """
        lets = self.letters
        if not 0 <= position < len(lets) - 1:
            raise MoveError("exchange position out of range")
        a, b = lets[position], lets[-1]
        if a.is_singular or b.is_singular:
            raise MoveError("exchange move undefined on singular letters")
        if a.index != b.index or a.kind == b.kind:
            raise MoveError("marked letters are not opposite crossings of one generator")
        j = a.index
        if j not in (1, self.n - 1):
            raise MoveError("exchange move requires a boundary generator")
        segs = lets[:position] + lets[position + 1 : -1]
        if any(let.index == j for let in segs):
            raise MoveError("segments between the marked letters must avoid the generator")
        out = list(lets)
        out[position] = a.inverse()
        out[-1] = b.inverse()
        return BraidWord(self.n, tuple(out))


def parse_braid(text):
    """Parse braid text: optional ``n=<int>;`` header, then signed indices.

    Tokens are whitespace- or comma-separated nonzero integers (the sign is
    the crossing sign) or ``S<int>`` for a singular letter.  Without a
    header the strand count is 1 + the largest index.
    """
    declared = None
    m = _HEADER.match(text)
    if m:
        declared = int(m.group(1))
        text = m.group(2)
    letters = []
    for tok in re.split(r"[\s,]+", text.strip()):
        if not tok:
            continue
        sm = _SINGULAR.match(tok)
        if sm:
            letters.append(BraidLetter(int(sm.group(1)), "s"))
            continue
        try:
            v = int(tok)
        except ValueError:
            raise ParseError(f"bad token {tok!r}") from None
        if v == 0:
            raise ParseError("generator index 0 is not allowed")
        letters.append(BraidLetter.from_int(v))
    if declared is None:
        n = 1 + max((let.index for let in letters), default=0)
    else:
        n = declared
        for let in letters:
            if let.index >= n:
                raise ParseError(
                    f"letter index {let.index} requires more than the declared {n} strands"
                )
    return BraidWord(n, tuple(letters))


def permutation_of(w, allow_singular=False):
    return w.permutation(allow_singular=allow_singular)


def writhe(w):
    return w.writhe()


def is_knot(w):
    return w.is_knot()


@dataclass(frozen=True)
class ExchangePair:
    """Two braids related by an exchange move at the top generator.

    From X, Y on n strands the pair lives on n + 1 strands:
    beta1 = X s^-1 Y s and beta2 = X s Y s^-1 with s the new top generator.
    """

    X: BraidWord
    Y: BraidWord

    def __post_init__(self):
        if self.X.n != self.Y.n:
            raise ValueError("X and Y must share a strand count")

    @property
    def n(self):
        return self.X.n

    @property
    def strands(self):
        return self.X.n + 1

    def _halves(self):
        m = self.strands
        s_pos = BraidWord(m, (BraidLetter(m - 1, "+"),))
        s_neg = BraidWord(m, (BraidLetter(m - 1, "-"),))
        return self.X.embed(m), self.Y.embed(m), s_pos, s_neg

    @property
    def beta1(self):
        x, y, sp, sn = self._halves()
        return x * sn * y * sp

    @property
    def beta2(self):
        x, y, sp, sn = self._halves()
        return x * sp * y * sn

    @property
    def beta_positive(self):
        """The companion word with both exchange-site crossings positive."""
        x, y, sp, _ = self._halves()
        return x * sp * y * sp

    @property
    def site_positions(self):
        """Positions of the two exchange-site letters inside each word."""
        return len(self.X), len(self.X) + 1 + len(self.Y)


def exchange_pair(X, Y):
    return ExchangePair(X, Y)


@dataclass(frozen=True)
class TrivialityReport:
    """Degeneracy flags for a prospective exchange pair."""

    x_avoids_top: bool
    y_avoids_top: bool
    parity_obstruction: bool

    @property
    def conjugate_pair(self):
        return self.x_avoids_top or self.y_avoids_top

    @property
    def clean(self):
        return not (self.conjugate_pair or self.parity_obstruction)

    @property
    def flags(self):
        out = []
        if self.x_avoids_top:
            out.append("X avoids the top generator: the pair is conjugate")
        if self.y_avoids_top:
            out.append("Y avoids the top generator: the pair is conjugate")
        if self.parity_obstruction:
            out.append("every top-generator run is even: closure cannot be a knot")
        return out

    def to_json(self):
        return {
            "x_avoids_top": self.x_avoids_top,
            "y_avoids_top": self.y_avoids_top,
            "parity_obstruction": self.parity_obstruction,
            "conjugate_pair": self.conjugate_pair,
        }


def _all_top_runs_even(w):
    top = w.n - 1
    run = 0
    for let in w.letters:
        if let.index == top:
            run += 1
        else:
            if run % 2:
                return False
            run = 0
    return run % 2 == 0


def triviality_filters(X, Y):
    """Flag exchange pairs that are degenerate before any invariant is computed.

    If X or Y avoids the top generator the two braids of the pair are
    conjugate outright.  If every maximal run of top-generator letters in
    both X and Y has even length, the closure fixes a strand and cannot be
    a knot.
    """
    if X.n != Y.n:
        raise ValueError("X and Y must share a strand count")
    top = X.n - 1
    x_avoids = not X.uses_index(top)
    y_avoids = not Y.uses_index(top)
    parity = _all_top_runs_even(X) and _all_top_runs_even(Y)
    return TrivialityReport(x_avoids, y_avoids, parity)


# -- scripted move replay ----------------------------------------------------


@dataclass(frozen=True)
class ReplayStep:
    index: int
    move: str
    args: tuple
    before: BraidWord
    after: BraidWord

    def to_json(self):
        return {
            "index": self.index,
            "move": self.move,
            "args": list(self.args),
            "before": self.before.to_text(),
            "after": self.after.to_text(),
            "n_after": self.after.n,
        }


def apply_move(w, move, *args):
    """Apply one named move, validating its pattern; raises MoveError if illegal."""
    if move == "rotate":
        (k,) = args
        return w.cyclic_rotate(k)
    if move == "conjugate":
        (g_text,) = args
        g = parse_braid(g_text if "n=" in g_text else f"n={w.n}; {g_text}")
        return w.conjugate(g)
    if move == "relation":
        (pos,) = args
        return w.apply_braid_relation(pos)
    if move == "reduce":
        out = w.free_reduce()
        if out.letters == w.letters:
            raise MoveError("no free reduction applies")
        return out
    if move == "stabilize":
        (sign,) = args
        return w.stabilize(sign)
    if move == "destabilize":
        return w.destabilize()
    if move == "exchange":
        (pos,) = args
        return w.exchange_move(pos)
    raise MoveError(f"unknown move {move!r}")


def run_script(word, script):
    """Run a move script, returning the ReplayStep log; aborts on the first illegal step."""
    log = []
    cur = word
    for i, step in enumerate(script):
        move, *args = step
        try:
            nxt = apply_move(cur, move, *args)
        except MoveError as exc:
            raise MoveError(f"step {i} ({move}): {exc}") from exc
        log.append(ReplayStep(i, move, tuple(args), cur, nxt))
        cur = nxt
    return log
