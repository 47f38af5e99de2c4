"""The rank-2 toric variety T given by a weighted blowup of P^d at a point.

T has class group Z[H] + Z[E] where H is the pullback of a hyperplane and
E the exceptional divisor.  With ascending blowup weights a_1 <= ... <= a_d:

    Eff(T) = R+[E] + R+[H - a_d E]
    Mov(T) = R+[H] + R+[H - a_{d-1} E]
    Nef(T) = R+[H] + R+[H - a_1 E]

and the movable cone splits into nef chambers at H - vE for each distinct
weight value v.  All cone data are exact integer pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

FANO = "fano"
WEAK_NOT_FANO = "weak_not_fano"
NOT_WEAK_FANO = "not_weak_fano"


@dataclass(frozen=True)
class DivisorClass:
    """The class h*H + e*E in Cl(T)."""

    h: int
    e: int

    def __str__(self) -> str:
        if self.h == 0 and self.e == 0:
            return "0"
        parts = []
        if self.h:
            parts.append("H" if self.h == 1 else f"{self.h}H")
        if self.e:
            if self.e == 1:
                parts.append("+E" if parts else "E")
            elif self.e == -1:
                parts.append("-E")
            else:
                parts.append(f"{self.e:+}E" if parts else f"{self.e}E")
        return "".join(parts)


H = DivisorClass(1, 0)
E = DivisorClass(0, 1)


@dataclass(frozen=True)
class BlowupVariety:
    """Weighted blowup of P^dim at a point; weights stored sorted ascending."""

    dim: int
    weights: tuple[int, ...]

    def __post_init__(self):
        if self.dim < 2:
            raise ValueError(f"dim must be >= 2, got {self.dim}")
        ws = tuple(sorted(int(w) for w in self.weights))
        if len(ws) != self.dim:
            raise ValueError(f"expected {self.dim} weights, got {len(ws)}")
        if any(w < 1 for w in ws):
            raise ValueError(f"blowup weights must be positive, got {list(ws)}")
        object.__setattr__(self, "weights", ws)

    @property
    def weight_sum(self) -> int:
        return sum(self.weights)

    @property
    def second_largest(self) -> int:
        return self.weights[-2]

    def __str__(self) -> str:
        return f"Bl({','.join(str(w) for w in self.weights)})P^{self.dim}"


@dataclass(frozen=True)
class MoriStructure:
    """Eff/Mov cones and the nef-chamber decomposition of Mov(T).

    ``mov_boundary_big`` is False exactly when the two largest weights tie,
    i.e. the upper boundary of Mov coincides with the boundary of Eff and
    the link ends with a fibration.
    """

    eff_lo: DivisorClass
    eff_hi: DivisorClass
    mov_lo: DivisorClass
    mov_hi: DivisorClass
    nef_chambers: tuple[tuple[DivisorClass, DivisorClass], ...]
    walls: tuple[int, ...]
    mov_boundary_big: bool


def anticanonical_class(T: BlowupVariety) -> DivisorClass:
    """-K_T = (d+1)H - (sum(a_i) - 1)E."""
    return DivisorClass(T.dim + 1, -(T.weight_sum - 1))


def mori_structure(T: BlowupVariety) -> MoriStructure:
    """Cone structure of T; chamber boundaries at each distinct weight value."""
    a = T.weights
    boundary_values = sorted(set(v for v in a if v <= T.second_largest))
    rays = [H] + [DivisorClass(1, -v) for v in boundary_values]
    chambers = tuple(zip(rays[:-1], rays[1:]))
    return MoriStructure(
        eff_lo=E,
        eff_hi=DivisorClass(1, -a[-1]),
        mov_lo=H,
        mov_hi=DivisorClass(1, -T.second_largest),
        nef_chambers=chambers,
        walls=tuple(v for v in boundary_values if v < T.second_largest),
        mov_boundary_big=T.second_largest < a[-1],
    )


def antik_in_interior_mov(T: BlowupVariety) -> bool:
    """True iff -K_T lies in the open interior of Mov(T).

    Writing -K_T in the basis {H, H - a_{d-1}E} and clearing denominators,
    interiority is the single inequality (d+1) * a_{d-1} > sum(a_i) - 1.
    """
    return (T.dim + 1) * T.second_largest > T.weight_sum - 1


def is_weak_fano(T: BlowupVariety) -> str:
    """Classify -K_T: 'fano', 'weak_not_fano' (nef, not ample), or 'not_weak_fano'.

    T is weak Fano iff sum(a_i) - 1 <= (d+1) * min(a_i), with equality iff
    -K_T is nef but not ample.
    """
    lhs = T.weight_sum - 1
    rhs = (T.dim + 1) * T.weights[0]
    if lhs < rhs:
        return FANO
    if lhs == rhs:
        return WEAK_NOT_FANO
    return NOT_WEAK_FANO


def antik_degree(T: BlowupVariety) -> Fraction:
    """(-K_T)^d = (d+1)^d - (sum(a_i) - 1)^d / prod(a_i), exactly."""
    d = T.dim
    return Fraction((d + 1) ** d) - Fraction((T.weight_sum - 1) ** d, prod(T.weights))


def verify_degree_inequalities(T: BlowupVariety) -> bool:
    """Check the weak-Fano degree inequalities in exact integer arithmetic.

    (sum-1)/(d+1) < (prod)^(1/d) <= sum/d, the second strict unless the
    blowup is ordinary (all weights 1).  Roots are cleared by raising both
    sides to the d-th power.  Requires T weak Fano.
    """
    if is_weak_fano(T) == NOT_WEAK_FANO:
        raise ValueError(f"{T} is not weak Fano")
    d = T.dim
    s = T.weight_sum
    p = prod(T.weights)
    first = (s - 1) ** d < (d + 1) ** d * p
    all_ones = all(w == 1 for w in T.weights)
    second = d**d * p < s**d or (d**d * p == s**d and all_ones)
    return first and second
