"""Shared test helpers."""

from fractions import Fraction

from elliptica.diffpoly import DiffPoly


def rank_monomials(rank):
    """All exponent tuples of the given rank (partitions into parts >= 2)."""
    out = []

    def rec(remaining, max_part, acc):
        if remaining == 0:
            width = max(acc) - 1 if acc else 0
            exp = [0] * width
            for part in acc:
                exp[part - 2] += 1
            out.append(tuple(exp))
            return
        for part in range(min(max_part, remaining), 1, -1):
            if remaining - part != 1:
                rec(remaining - part, part, acc + [part])

    rec(rank, rank, [])
    return out


def random_rank_homogeneous(rank, rng):
    """A random rank-homogeneous differential polynomial of the given rank."""
    monos = rank_monomials(rank)
    terms = {}
    for exp in rng.sample(monos, k=min(len(monos), 4)):
        terms[exp] = Fraction(rng.randint(-5, 5))
    return DiffPoly(terms)
