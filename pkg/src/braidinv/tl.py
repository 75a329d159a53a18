"""The Temperley-Lieb algebra as planar diagrams, the braid representation,
and the solid-torus closure trace.

A basis state on n strands is a non-crossing perfect matching of 2n
boundary points: top points 1..n left to right, bottom points n+1..2n left
to right.  Diagrams multiply by stacking (left factor on top); every closed
loop formed in the middle contributes the scalar d = -a^2 - a^-2.

The closure trace sends a state to d^p x^q where p and q count the
contractible and the essential components of its closure in the solid
torus.  A component is essential iff its net winding around the axis is
nonzero; traversing a closure arc bottom-to-top winds +1, top-to-bottom
winds -1, and chords do not wind.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import BiLaurent, LaurentPoly


def loop_value():
    """The scalar a closed loop evaluates to: -a^2 - a^-2."""
    return LaurentPoly({2: -1, -2: -1}, var="a")


def _circular(point, n):
    # Boundary order around the rectangle: 1..n along the top, then the
    # bottom read right to left.
    return point if point <= n else 3 * n + 1 - point


@dataclass(frozen=True)
class TLState:
    """A planar matching of the 2n boundary points, canonically encoded.

    Chords are (min, max) pairs sorted by first endpoint.
    """

    n: int
    chords: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pts = [p for ch in self.chords for p in ch]
        if sorted(pts) != list(range(1, 2 * self.n + 1)):
            raise ValueError("chords are not a perfect matching of the boundary")
        canon = tuple(sorted((min(a, b), max(a, b)) for a, b in self.chords))
        if canon != self.chords:
            raise ValueError("chords not in canonical order; use TLState.make")
        spans = sorted(
            (
                min(_circular(a, self.n), _circular(b, self.n)),
                max(_circular(a, self.n), _circular(b, self.n)),
            )
            for a, b in self.chords
        )
        for i in range(len(spans)):
            for j in range(i + 1, len(spans)):
                a, b = spans[i]
                c, d = spans[j]
                if a < c < b < d:
                    raise ValueError("matching is not planar")

    @classmethod
    def make(cls, n, pairs):
        return cls(n, tuple(sorted((min(a, b), max(a, b)) for a, b in pairs)))

    @classmethod
    def identity(cls, n):
        return cls.make(n, [(i, n + i) for i in range(1, n + 1)])

    @classmethod
    def cap_cup(cls, n, i):
        """The diagram of the generator e_i."""
        if not 1 <= i <= n - 1:
            raise ValueError(f"generator index {i} out of range for n={n}")
        pairs = [(i, i + 1), (n + i, n + i + 1)]
        pairs += [(j, n + j) for j in range(1, n + 1) if j not in (i, i + 1)]
        return cls.make(n, pairs)

    def partner(self):
        out = {}
        for a, b in self.chords:
            out[a] = b
            out[b] = a
        return out

    def __str__(self):
        return "[" + " ".join(f"({a} {b})" for a, b in self.chords) + "]"


@lru_cache(maxsize=None)
def all_states(n):
    """All planar matchings on n strands (Catalan(n) of them)."""
    # Boundary sequence in circular order: tops 1..n, then bottoms 2n..n+1.
    seq = list(range(1, n + 1)) + list(range(2 * n, n, -1))

    def rec(points):
        if not points:
            yield []
            return
        first = points[0]
        for k in range(1, len(points), 2):
            mate = points[k]
            left = points[1:k]
            right = points[k + 1 :]
            for lm in rec(left):
                for rm in rec(right):
                    yield [(first, mate)] + lm + rm

    return tuple(TLState.make(n, m) for m in rec(seq))


@lru_cache(maxsize=None)
def compose_states(s, t):
    """Stack s on top of t; return (resulting state, number of closed loops)."""
    if s.n != t.n:
        raise ValueError("strand count mismatch")
    n = s.n
    ps = s.partner()
    pt = t.partner()
    used = [False] * (n + 1)

    def walk(layer, point):
        # Follow chords through the middle until an outer point is reached.
        while True:
            nxt = ps[point] if layer == "s" else pt[point]
            if layer == "s":
                if nxt <= n:
                    return ("top", nxt)
                mid = nxt - n
                used[mid] = True
                layer, point = "t", mid
            else:
                if nxt > n:
                    return ("bottom", nxt - n)
                mid = nxt
                used[mid] = True
                layer, point = "s", n + mid

    pairs = []
    seen = set()
    for i in range(1, n + 1):
        if ("top", i) in seen:
            continue
        seen.add(("top", i))
        end = walk("s", i)
        seen.add(end)
        a = i
        b = end[1] if end[0] == "top" else n + end[1]
        pairs.append((a, b))
    for i in range(1, n + 1):
        if ("bottom", i) in seen:
            continue
        seen.add(("bottom", i))
        end = walk("t", n + i)
        seen.add(end)
        b = end[1] if end[0] == "top" else n + end[1]
        pairs.append((n + i, b))

    loops = 0
    for k in range(1, n + 1):
        if used[k]:
            continue
        loops += 1
        cur = k
        while True:
            used[cur] = True
            j = pt[cur]
            used[j] = True
            cur = ps[n + j] - n
            if cur == k:
                break
    return TLState.make(n, pairs), loops


@lru_cache(maxsize=None)
def closure_components(state):
    """(contractible count, essential count) for the closure of a state.

    Components alternate chords and closure arcs; the net signed number of
    closure-arc traversals is the winding, and a component is essential iff
    it is nonzero.
    """
    n = state.n
    partner = state.partner()
    seen = set()
    p = q = 0
    for start in range(1, 2 * n + 1):
        if start in seen:
            continue
        wind = 0
        cur = start
        while True:
            seen.add(cur)
            nxt = partner[cur]
            seen.add(nxt)
            if nxt <= n:
                wind -= 1
                cur = nxt + n
            else:
                wind += 1
                cur = nxt - n
            if cur == start:
                break
        if wind == 0:
            p += 1
        else:
            q += 1
    return p, q


class TLElement:
    """A formal combination of planar-matching states with coefficients in a."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        clean: dict[TLState, LaurentPoly] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for st, coeff in items:
                if st.n != n:
                    raise ValueError("state strand count mismatch")
                if isinstance(coeff, int):
                    coeff = LaurentPoly({0: coeff}, var="a")
                if coeff.var != "a":
                    raise ValueError("coefficients must be polynomials in a")
                if st in clean:
                    coeff = clean[st] + coeff
                if coeff.is_zero:
                    clean.pop(st, None)
                else:
                    clean[st] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, n):
        return cls(n, {})

    @classmethod
    def identity(cls, n):
        return cls(n, {TLState.identity(n): LaurentPoly.one("a")})

    @classmethod
    def generator(cls, n, i):
        return cls(n, {TLState.cap_cup(n, i): LaurentPoly.one("a")})

    @classmethod
    def from_state(cls, state, coeff=None):
        return cls(state.n, {state: coeff if coeff is not None else LaurentPoly.one("a")})

    @property
    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        if isinstance(other, TLElement):
            if self.n != other.n:
                raise ValueError("strand count mismatch")
            out = dict(self.terms)
            for st, c in other.terms.items():
                s = out.get(st)
                s = c if s is None else s + c
                if s.is_zero:
                    out.pop(st, None)
                else:
                    out[st] = s
            return TLElement(self.n, out)
        return NotImplemented

    def __neg__(self):
        return TLElement(self.n, {st: -c for st, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return TLElement(self.n, {st: c * other for st, c in self.terms.items()})
        if not isinstance(other, TLElement):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("strand count mismatch")
        d = loop_value()
        out: dict[TLState, LaurentPoly] = {}
        for s1, c1 in self.terms.items():
            for s2, c2 in other.terms.items():
                state, loops = compose_states(s1, s2)
                coeff = c1 * c2
                if loops:
                    coeff = coeff * d**loops
                acc = out.get(state)
                acc = coeff if acc is None else acc + coeff
                if acc.is_zero:
                    out.pop(state, None)
                else:
                    out[state] = acc
        return TLElement(self.n, out)

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        return (
            isinstance(other, TLElement)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for st in sorted(self.terms, key=lambda s: s.chords):
            bits.append(f"({self.terms[st]}) * {st}")
        return " + ".join(bits)

    def to_json(self):
        return {
            "n": self.n,
            "terms": [
                {"coeff": c.to_json(), "chords": [list(ch) for ch in st.chords]}
                for st, c in sorted(self.terms.items(), key=lambda t: t[0].chords)
            ],
        }


def tl_generator(n, i):
    return TLElement.generator(n, i)


def tl_mul(u, v):
    return u * v


def phi_letter(n, letter):
    """The algebra image of one braid letter (non-singular)."""
    if letter.is_singular:
        raise ValueError("singular letter has no two-term image; resolve it first")
    e = TLElement.generator(n, letter.index)
    one = TLElement.identity(n)
    if letter.sign > 0:
        return e * LaurentPoly({-1: 1}, "a") + one * LaurentPoly({1: 1}, "a")
    return e * LaurentPoly({1: 1}, "a") + one * LaurentPoly({-1: 1}, "a")


def phi(w):
    """The multiplicative image of a braid word in the diagram algebra."""
    if w.has_singular:
        raise ValueError("word has singular letters; use the singular resolution")
    acc = TLElement.identity(w.n)
    for let in w.letters:
        acc = acc * phi_letter(w.n, let)
    return acc


def power_coefficient(k):
    """p_k(a): the e_i coefficient in the closed form of a generator power.

    p_k = sum_{l=0}^{k-1} (-1)^l a^{k-2-4l} for k > 0, the mirrored sum for
    k < 0, and 1 for k = 0 (only meaningful inside the k != 0 closed form).
    """
    if k == 0:
        return LaurentPoly.one("a")
    terms = {}
    if k > 0:
        for l in range(k):
            terms[k - 2 - 4 * l] = terms.get(k - 2 - 4 * l, 0) + (-1) ** l
    else:
        for l in range(-k):
            terms[k + 2 + 4 * l] = terms.get(k + 2 + 4 * l, 0) + (-1) ** l
    return LaurentPoly(terms, "a")


def phi_power(n, i, k):
    """Closed form for the image of the k-th power of one generator.

    For k = 0 this is the identity element; otherwise p_k(a) e_i + a^k.
    """
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for n={n}")
    if k == 0:
        return TLElement.identity(n)
    e = TLElement.generator(n, i)
    one = TLElement.identity(n)
    return e * power_coefficient(k) + one * LaurentPoly({k: 1}, "a")


def trace_f(u):
    """The closure trace: each state maps to d^p x^q, extended linearly."""
    d = loop_value()
    out = BiLaurent.zero()
    for st, coeff in u.terms.items():
        p, q = closure_components(st)
        out = out + BiLaurent.from_a_poly(coeff * d**p, q)
    return out
