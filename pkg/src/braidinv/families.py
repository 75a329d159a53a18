"""Named braid families and the scripted unknot simplification replay."""

from __future__ import annotations

from .braid import BraidWord, ExchangePair, parse_braid, run_script


def example1(k=0):
    """Pairs on 5 strands the polynomial invariant cannot separate.

    X = s3 s2 s1 and Y = s3 s2^(2k+1) s1 on 4 strands, for k >= 0.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    X = BraidWord.from_ints(4, [3, 2, 1])
    Y = BraidWord.from_ints(4, [3] + [2] * (2 * k + 1) + [1])
    return ExchangePair(X, Y)


def example2():
    """A pair on 5 strands separated by the polynomial invariant."""
    X = BraidWord.from_ints(4, [3, 2, 1])
    Y = BraidWord.from_ints(4, [2, 1, 3])
    return ExchangePair(X, Y)


def example3(n, i):
    """The descending-word family on n+1 strands, parametrized by 1 <= i <= n-1.

    X = s_{n-1} ... s_1 and Y = s_{n-1} ... s_{i+1} s_i s_{i+1}^-1 ... s_{n-1}^-1.
    The pair's difference vanishes exactly when i = n/2.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    if not 1 <= i <= n - 1:
        raise ValueError(f"i must be in 1..{n - 1}")
    X = BraidWord.from_ints(n, list(range(n - 1, 0, -1)))
    descend = list(range(n - 1, i, -1))
    Y = BraidWord.from_ints(n, descend + [i] + [-j for j in reversed(descend)])
    return ExchangePair(X, Y)


MORTON_UNKNOT_TEXT = "n=4; 2 2 2 -1 2 -3 -2 -2 1 -2 3"

MORTON_PAIR_TEXTS = (
    "n=4; -2 3 2 2 2 -1 2 -3 -2 -2 1",
    "n=4; -2 3 2 2 2 1 2 -3 -2 -2 -1",
)


def morton_unknot():
    """A 4-strand unknot representative that cannot be destabilized directly."""
    return parse_braid(MORTON_UNKNOT_TEXT)


def morton_pair():
    """The exchange-related rotations of the 4-strand unknot word."""
    return tuple(parse_braid(t) for t in MORTON_PAIR_TEXTS)


# One exchange move, the defining relations, conjugations and free
# reductions, and three strand-count reductions take the 4-strand unknot
# word down to the empty 1-strand word.  Positions are 0-based.
MORTON_REPLAY_SCRIPT = (
    ("rotate", 4),
    ("exchange", 4),
    ("rotate", 7),
    ("relation", 7),
    ("relation", 6),
    ("relation", 5),
    ("relation", 9),
    ("relation", 8),
    ("rotate", 6),
    ("conjugate", "-2"),
    ("relation", 0),
    ("reduce",),
    ("rotate", 1),
    ("destabilize",),
    ("conjugate", "2"),
    ("relation", 4),
    ("reduce",),
    ("relation", 3),
    ("conjugate", "1"),
    ("relation", 1),
    ("reduce",),
    ("rotate", 1),
    ("destabilize",),
    ("destabilize",),
)


def morton_replay():
    """Run the scripted simplification; returns the validated step log."""
    return run_script(morton_unknot(), MORTON_REPLAY_SCRIPT)
