"""Numerical semigroups with four generators: membership, gaps, symmetry, order."""

from __future__ import annotations

import math
import threading

from .errors import GcdNotOne


class NumericalSemigroup:
    """Semigroup generated by four positive integers with gcd 1.

    Generators are deduplicated and sorted; the caller's order is kept in
    ``input_generators``. Membership and order tables grow on demand.
    """

    def __init__(self, generators):
        gens = [int(g) for g in generators]
        if any(g <= 0 for g in gens):
            raise ValueError(f"generators must be positive: {gens}")
        self.input_generators = tuple(gens)
        self.generators = tuple(sorted(set(gens)))
        if math.gcd(*self.generators) != 1:
            raise GcdNotOne(f"gcd of {self.generators} is not 1")
        self._lock = threading.Lock()
        self._member = [True]
        self._order = [0]
        self._frobenius = None

    def __repr__(self):
        return "<" + ",".join(map(str, self.generators)) + ">"

    def __eq__(self, other):
        return isinstance(other, NumericalSemigroup) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    @property
    def multiplicity(self):
        return self.generators[0]

    def _extend(self, n):
        with self._lock:
            member, order = self._member, self._order
            for s in range(len(member), n + 1):
                best = -1
                for g in self.generators:
                    if g <= s and member[s - g]:
                        best = max(best, order[s - g] + 1)
                member.append(best >= 0)
                order.append(best)

    def contains(self, n):
        if n < 0:
            raise ValueError(f"negative integer {n}")
        if n >= len(self._member):
            self._extend(max(n, 2 * len(self._member)))
        return self._member[n]

    __contains__ = contains

    @property
    def frobenius(self):
        """Largest integer outside the semigroup (-1 if none)."""
        if self._frobenius is None:
            run, n, last_gap = 0, 0, -1
            m = self.generators[0]
            while run < m:
                if self.contains(n):
                    run += 1
                else:
                    run, last_gap = 0, n
                n += 1
            self._frobenius = last_gap
        return self._frobenius

    def gaps(self):
        return {n for n in range(1, self.frobenius + 1) if not self.contains(n)}

    @property
    def gap_count(self):
        return len(self.gaps())

    def nongaps(self):
        return {n for n in range(0, max(self.frobenius, 0)) if self.contains(n)}

    def is_symmetric(self):
        c = self.frobenius
        if c < 0:
            return False
        return len(self.gaps()) == len(self.nongaps())

    def is_minimally_generated(self):
        if len(self.input_generators) != len(set(self.input_generators)):
            return False
        return all(not in_subsemigroup(g, [h for h in self.generators if h != g]) for g in self.generators)

    def order(self, s):
        """Maximal factorization length of s."""
        if not self.contains(s):
            raise ValueError(f"{s} is not in {self!r}")
        return self._order[s]

    def elements_up_to(self, bound):
        self.contains(bound)
        return [s for s in range(bound + 1) if self._member[s]]

    def hilbert_oracle(self, i):
        """Number of semigroup elements of order exactly i."""
        if i < 0:
            raise ValueError("negative degree")
        bound = i * self.generators[-1]
        self.contains(bound)
        return sum(1 for s in range(bound + 1) if self._member[s] and self._order[s] == i)

    def hilbert_oracle_values(self, upto):
        bound = upto * self.generators[-1]
        self.contains(bound)
        counts = [0] * (upto + 1)
        for s in range(bound + 1):
            if self._member[s] and self._order[s] <= upto:
                counts[self._order[s]] += 1
        return counts


def in_subsemigroup(n, gens):
    """Is n a nonnegative combination of gens? Plain DP, no caching."""
    if n < 0:
        return False
    reach = [False] * (n + 1)
    reach[0] = True
    for s in range(1, n + 1):
        reach[s] = any(g <= s and reach[s - g] for g in gens)
    return reach[n]
