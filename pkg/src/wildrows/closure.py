"""Closure of a set under an implication family, by forward chaining.

The chaining is counter-based: one countdown per implication plus a queue of
newly added elements, so a single call costs time proportional to the total
written length of the family plus the universe size.  Repeated sweeps over
the family (which would multiply the cost by the family size) are avoided.
"""

from __future__ import annotations

from .core import ImplicationFamily, bit_positions, from_mask, to_mask


class Closer:
    """Reusable forward-chaining engine for one fixed family.

    Precomputes, per element, which implication premises mention it, so that
    repeated closure queries skip the per-call indexing cost.  `decrements`
    accumulates the number of premise-counter decrements across calls (each
    implication's counter is touched at most once per premise element), which
    tests use to assert the linear-time behaviour.
    """

    def __init__(self, family: ImplicationFamily):
        self.family = family
        self._sizes = []
        self._concs = []
        self._touch: list[list[int]] = [[] for _ in range(family.w + 1)]
        self._instant = 0  # conclusions of empty-premise implications
        for idx, (prem, conc) in enumerate(family.masks):
            self._sizes.append(prem.bit_count())
            self._concs.append(conc)
            if prem == 0:
                self._instant |= conc
            for e in bit_positions(prem):
                self._touch[e].append(idx)
        self.decrements = 0

    def close_mask(self, seed: int) -> int:
        x = seed | self._instant
        counts = self._sizes.copy()
        concs = self._concs
        queue = list(bit_positions(x))
        while queue:
            e = queue.pop()
            for i in self._touch[e]:
                counts[i] -= 1
                self.decrements += 1
                if counts[i] == 0:
                    new = concs[i] & ~x
                    if new:
                        x |= new
                        queue.extend(bit_positions(new))
        return x

    def close(self, seed) -> frozenset[int]:
        return from_mask(self.close_mask(to_mask(seed)))


def close(seed, family: ImplicationFamily) -> frozenset[int]:
    """Smallest superset of `seed` closed under every implication.

    Extensive, monotone and idempotent in `seed`.
    """
    return Closer(family).close(seed)


def is_model(x, family: ImplicationFamily) -> bool:
    """True iff `x` satisfies every implication of the family."""
    m = to_mask(x)
    for prem, conc in family.masks:
        if m & prem == prem and m & conc != conc:
            return False
    return True


def is_model_mask(m: int, masks) -> bool:
    """Mask-level variant for hot loops; `masks` as ImplicationFamily.masks."""
    for prem, conc in masks:
        if m & prem == prem and m & conc != conc:
            return False
    return True
