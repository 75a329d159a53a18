"""Finite-type invariants from the closure trace of the diagram representation.

Substituting a = e^t into the closure trace of a braid's algebra image and
truncating yields, in the coefficient of t^k, a polynomial in x that is a
conjugacy-class invariant of order k.  On an exchange pair the difference
of images factors as (a^2 - a^-2) [Phi(X) e Phi(Y) - Phi(X) Phi(Y) e]
with e the cap-cup diagram at the exchanged generator, so the order-0
coefficient never separates a pair and the order-1 coefficient reduces to
an evaluation at a = 1.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

from .algebra import BiLaurent, LaurentPoly, RationalPoly, exp_substitute
from .braid import BraidWord, ExchangePair, triviality_filters
from .fiedler import exchange_analysis
from .tl import TLElement, closure_components, compose_states, phi, phi_letter

DEFAULT_TRUNCATION_FLOOR = 2


def _truncation(k, trunc):
    if trunc is not None:
        if trunc < k:
            raise ValueError(f"truncation order {trunc} below requested degree {k}")
        return trunc
    return max(k, DEFAULT_TRUNCATION_FLOOR)


def q_invariant(w, k, trunc=None):
    """The coefficient of t^k in the a = e^t expansion of the closure trace."""
    if k < 0:
        raise ValueError("order must be >= 0")
    if w.has_singular:
        raise ValueError("word has singular letters; use singular_phi directly")
    series = exp_substitute(trace_of(w), _truncation(k, trunc))
    return series.coefficient(k)


def trace_of(w):
    from .tl import trace_f

    return trace_f(phi(w))


def singular_phi(w):
    """Algebra image of a word with singular letters.

    Each singular letter resolves to the difference of its two crossings,
    (a^-1 - a) e_i + (a - a^-1); ordinary letters map as usual.
    """
    n = w.n
    acc = TLElement.identity(n)
    amin = LaurentPoly({-1: 1, 1: -1}, "a")  # a^-1 - a
    for let in w.letters:
        if let.is_singular:
            term = TLElement.generator(n, let.index) * amin + TLElement.identity(n) * (
                -amin
            )
            acc = acc * term
        else:
            acc = acc * phi_letter(n, let)
    return acc


def vanishing_order_check(w, k=None):
    """True iff the trace expansion vanishes through t^k (default t^(s-1))."""
    s = w.singular_count()
    if s < 1:
        raise ValueError("word has no singular letters")
    if k is None:
        k = s - 1
    from .tl import trace_f

    series = exp_substitute(trace_f(singular_phi(w)), max(k, 1))
    return all(series.coefficient(j).is_zero for j in range(k + 1))


def exchange_delta(pair):
    """Difference of the two algebra images of an exchange pair, factored form.

    Evaluates (a^2 - a^-2) [Phi(X) e Phi(Y) - Phi(X) Phi(Y) e] on n+1
    strands, which equals Phi(beta1) - Phi(beta2).
    """
    m = pair.strands
    px = phi(pair.X.embed(m))
    py = phi(pair.Y.embed(m))
    e = TLElement.generator(m, m - 1)
    factor = LaurentPoly({2: 1, -2: -1}, "a")
    return (px * e * py - px * py * e) * factor


def q_difference(pair, k, trunc=None):
    """q_invariant(beta1, k) - q_invariant(beta2, k), via the factored difference."""
    from .tl import trace_f

    series = exp_substitute(trace_f(exchange_delta(pair)), _truncation(k, trunc))
    return series.coefficient(k)


# -- fast order-1 path (coefficients evaluated at a = 1) ---------------------


def _phi_at_one(w, n):
    """Algebra image with a = 1: states with integer coefficients."""
    from .tl import TLState

    acc = {TLState.identity(n): 1}
    for let in w.letters:
        if let.is_singular:
            raise ValueError("singular letters not supported here")
        gen = TLState.cap_cup(n, let.index)
        out = {}
        for st, c in acc.items():
            # (e_i + 1) at a = 1, independent of sign
            for piece, cc in ((gen, c), (None, c)):
                if piece is None:
                    key, mult = st, 1
                else:
                    key, loops = compose_states(st, piece)
                    mult = (-2) ** loops
                out[key] = out.get(key, 0) + cc * mult
        acc = {st: c for st, c in out.items() if c}
    return acc


def _trace_at_one(terms):
    out = {}
    for st, c in terms.items():
        p, q = closure_components(st)
        v = c * (-2) ** p
        out[q] = out.get(q, 0) + v
    return {q: c for q, c in out.items() if c}


def _mul_at_one(u, v):
    out = {}
    for s1, c1 in u.items():
        for s2, c2 in v.items():
            st, loops = compose_states(s1, s2)
            out[st] = out.get(st, 0) + c1 * c2 * (-2) ** loops
    return {st: c for st, c in out.items() if c}


def q1_difference_fast(pair):
    """Order-1 difference via 4 * [trace(Phi(X) e Phi(Y)) - trace(Phi(X) Phi(Y) e)] at a = 1."""
    from .tl import TLState

    m = pair.strands
    px = _phi_at_one(pair.X.embed(m), m)
    py = _phi_at_one(pair.Y.embed(m), m)
    e = {TLState.cap_cup(m, m - 1): 1}
    g1 = _trace_at_one(_mul_at_one(_mul_at_one(px, e), py))
    g2 = _trace_at_one(_mul_at_one(_mul_at_one(px, py), e))
    diff = {q: 4 * (g1.get(q, 0) - g2.get(q, 0)) for q in set(g1) | set(g2)}
    return RationalPoly(diff)


# -- conjecture scanner -------------------------------------------------------


@dataclass(frozen=True)
class ScanRecord:
    index: int
    n: int
    X: str
    Y: str
    fiedler_diff_zero: bool
    q1_diff_zero: bool
    l: int
    m1: int
    m2: int
    seed: int | None
    injected: bool = False

    @property
    def agreement(self):
        return self.fiedler_diff_zero == self.q1_diff_zero

    def to_json(self):
        return {
            "schema": 1,
            "index": self.index,
            "n": self.n,
            "X": self.X,
            "Y": self.Y,
            "fiedler_diff_zero": self.fiedler_diff_zero,
            "q1_diff_zero": self.q1_diff_zero,
            "l": self.l,
            "m1": self.m1,
            "m2": self.m2,
            "seed": self.seed,
            "injected": self.injected,
            "agreement": self.agreement,
        }


def evaluate_pair(pair, index=-1, seed=None, injected=False):
    """One scanner record: compare vanishing of the two differences."""
    analysis = exchange_analysis(pair)
    q1 = q1_difference_fast(pair)
    return ScanRecord(
        index=index,
        n=pair.n,
        X=" ".join(map(str, pair.X.signed_ints())),
        Y=" ".join(map(str, pair.Y.signed_ints())),
        fiedler_diff_zero=analysis.vanishes,
        q1_diff_zero=q1.is_zero,
        l=analysis.l,
        m1=analysis.m1,
        m2=analysis.m2,
        seed=seed,
        injected=injected,
    )


def _sample_word(rng, n, length):
    choices = [i for i in range(1, n)] + [-i for i in range(1, n)]
    return BraidWord.from_ints(n, [rng.choice(choices) for _ in range(length)])


def sample_exchange_pair(rng, n, length, max_tries=10000):
    """Draw (X, Y) uniformly at the given length, rejecting degenerate pairs."""
    for _ in range(max_tries):
        X = _sample_word(rng, n, length)
        Y = _sample_word(rng, n, length)
        report = triviality_filters(X, Y)
        if not report.clean:
            continue
        pair = ExchangePair(X, Y)
        if not pair.beta1.is_knot():
            continue
        return pair
    raise RuntimeError("could not sample a non-degenerate knotted exchange pair")


def conjecture_scan(n, length, samples, seed, include=()):
    """Yield scanner records for injected pairs, then sampled ones, then a summary.

    Each sample derives its own generator from (seed, index) so the stream
    is reproducible and order-independent to assemble.
    """
    include = tuple(include)
    records = []
    for i, pair in enumerate(include):
        records.append(evaluate_pair(pair, index=-(i + 1), seed=seed, injected=True))
    for i in range(samples):
        rng = random.Random(f"{seed}:{i}")
        pair = sample_exchange_pair(rng, n, length)
        records.append(evaluate_pair(pair, index=i, seed=seed))
    agreements = sum(1 for r in records if r.agreement)
    summary = {
        "schema": 1,
        "summary": True,
        "n": n,
        "length": length,
        "samples": samples,
        "seed": seed,
        "injected": len(include),
        "agreements": agreements,
        "disagreements": len(records) - agreements,
        "counterexamples": [r.to_json() for r in records if not r.agreement],
    }
    return records, summary


def scan_to_jsonl(records, summary):
    lines = [json.dumps(r.to_json(), sort_keys=True) for r in records]
    lines.append(json.dumps(summary, sort_keys=True))
    return "\n".join(lines) + "\n"
