"""Terminality of cyclic quotient singularities and weighted blowups.

A cyclic quotient singularity 1/r(a_1,...,a_n) is the quotient of affine
n-space by the order-r diagonal action with weights a_i.  Terminality is
decided by the residue-sum criterion: the singularity is terminal iff

    sum_i smallest_residue(k * a_i, r)  >  r    for every k = 1,...,r-1.

Everything here is exact integer arithmetic on immutable values; all
functions are pure and thread-safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

# The subset-gcd enumeration is exponential in the number of entries > 1.
# Inputs in this artifact have at most 6 such entries; the cap just turns
# an accidental misuse into a clear error.
_SUBSET_CAP = 20


def _validate_weights(weights) -> tuple[int, ...]:
    ws = tuple(int(w) for w in weights)
    if not ws:
        raise ValueError("weight list must be nonempty")
    return ws


def is_terminal_cqs(weights, index: int) -> bool:
    """Return True iff the cyclic quotient 1/index(weights) is terminal.

    Residues are always taken as the smallest nonnegative representative,
    so negative weights are allowed.  An index of 1 is smooth, hence
    vacuously terminal.
    """
    ws = _validate_weights(weights)
    r = int(index)
    if r < 1:
        raise ValueError(f"index must be positive, got {r}")
    for k in range(1, r):
        s = 0
        for w in ws:
            s += (k * w) % r
        if s <= r:
            return False
    return True


def is_terminal_blowup(weights) -> bool:
    """Return True iff the weighted blowup of a smooth point is terminal.

    The blowup with positive weights (a_1,...,a_n) has terminal
    singularities iff 1/V(a_1,...,a_n) is terminal, V = sum(a_i) - 1.
    """
    ws = _validate_weights(weights)
    if len(ws) < 2:
        raise ValueError("blowup needs at least 2 weights")
    if any(w < 1 for w in ws):
        raise ValueError(f"blowup weights must be positive, got {list(ws)}")
    return is_terminal_cqs(ws, sum(ws) - 1)


def singularity_indices(weights) -> tuple[int, ...]:
    """Indices of the singularities of the weighted projective space P(weights).

    Returns the ascending deduplicated gcds g > 1 over all nonempty subsets
    of the entries strictly greater than 1.  Entries <= 1 (zeros, negatives)
    never contribute.
    """
    ws = _validate_weights(weights)
    big = [w for w in ws if w > 1]
    if len(big) > _SUBSET_CAP:
        raise ValueError(
            f"too many entries > 1 ({len(big)} > {_SUBSET_CAP}); "
            "subset-gcd enumeration would be intractable"
        )
    # Incremental subset-gcd closure: after processing x, `seen` holds the
    # gcd of every nonempty subset processed so far.
    seen: set[int] = set()
    for x in big:
        seen |= {gcd(x, g) for g in seen} | {x}
    return tuple(sorted(g for g in seen if g > 1))


def is_terminal_wps(weights) -> bool:
    """Terminality of a weighted projective space (or any integer weight list).

    Checks the residue-sum criterion at every singularity index of the list.
    Vacuously true when there are no indices.
    """
    ws = _validate_weights(weights)
    return all(is_terminal_cqs(ws, g) for g in singularity_indices(ws))


@dataclass(frozen=True, eq=False)
class CyclicQuotient:
    """The cyclic quotient singularity 1/index(weights).

    Values are equal up to permutation of the weights and up to reduction
    of each weight modulo the index.
    """

    index: int
    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", _validate_weights(self.weights))
        if self.index < 1:
            raise ValueError(f"index must be positive, got {self.index}")

    @property
    def canonical_weights(self) -> tuple[int, ...]:
        return tuple(sorted(w % self.index for w in self.weights))

    def __eq__(self, other) -> bool:
        if not isinstance(other, CyclicQuotient):
            return NotImplemented
        return (self.index, self.canonical_weights) == (
            other.index,
            other.canonical_weights,
        )

    def __hash__(self) -> int:
        return hash((self.index, self.canonical_weights))

    @property
    def is_smooth(self) -> bool:
        return self.index == 1

    @property
    def is_terminal(self) -> bool:
        return is_terminal_cqs(self.weights, self.index)

    def __str__(self) -> str:
        return f"1/{self.index}({','.join(str(w) for w in self.weights)})"


def exceptional_patch_types(blowup_weights) -> list[CyclicQuotient]:
    """Affine-patch singularity types along the exceptional divisor.

    For the blowup with positive weights (a_1,...,a_d), the patch at the
    i-th coordinate is the quotient 1/a_i(-1, a_1, ..., â_i, ..., a_d).
    Index-1 patches are smooth and returned as such.
    """
    ws = _validate_weights(blowup_weights)
    if any(w < 1 for w in ws):
        raise ValueError(f"blowup weights must be positive, got {list(ws)}")
    patches = []
    for i, wi in enumerate(ws):
        rest = ws[:i] + ws[i + 1 :]
        patches.append(CyclicQuotient(wi, (-1,) + rest))
    return patches
