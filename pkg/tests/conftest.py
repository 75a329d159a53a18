from braidinv.braid import BraidWord


def random_word(rng, n, length):
    if n < 2 or length == 0:
        return BraidWord.empty(n)
    choices = [i for i in range(1, n)] + [-i for i in range(1, n)]
    return BraidWord.from_ints(n, [rng.choice(choices) for _ in range(length)])


def knot_length(n, length):
    # A full-cycle permutation needs letter count congruent to n-1 mod 2.
    if (length - (n - 1)) % 2:
        length += 1
    return max(length, n - 1)


def random_knot_word(rng, n, length):
    length = knot_length(n, length)
    while True:
        w = random_word(rng, n, length)
        if w.is_knot():
            return w
