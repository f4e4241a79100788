"""Symbolic layer for smooth characters of a local field's multiplicative group.

A character of k^x = O^x x (uniformizer)^Z is modeled exactly as a finite-level
character of the unit residues (Z/p^k)^x together with the value at the
uniformizer, recorded as a positive rational modulus and a root-of-unity
phase. The unitary/twist factorization splits the modulus from the rest.
"""

from fractions import Fraction
from math import gcd

from .algebra import Subalgebra, cached_decomposition
from .errors import SpecError
from .exact import Cyclotomic
from .groups import abelian_invariants


class ResidueUnits:
    """(Z/p^k)^x as a plain multiplicative group of integer residues."""

    def __init__(self, p, k):
        if k < 0:
            raise SpecError("level must be nonnegative")
        self.p = p
        self.k = k
        self.modulus = p ** k
        if k == 0:
            self.elements = (1,)
        else:
            self.elements = tuple(r for r in range(1, self.modulus) if gcd(r, p) == 1)
        self.index = {r: i for i, r in enumerate(self.elements)}

    @property
    def order(self):
        return len(self.elements)

    def mul(self, a, b):
        return (a * b) % self.modulus if self.k else 1

    def invariants(self):
        return abelian_invariants(list(self.elements), self.mul, 1 % max(self.modulus, 2))


class UnitChar:
    """Character of (Z/p^k)^x stored as an exponent table."""

    __slots__ = ("group", "m", "exps")

    def __init__(self, group: ResidueUnits, m, exps):
        self.group = group
        self.m = m
        self.exps = tuple(e % m for e in exps)

    def value(self, residue) -> Cyclotomic:
        return Cyclotomic.root(self.m, self.exps[self.group.index[residue]])

    def is_trivial(self):
        return all(e == 0 for e in self.exps)

    def mul(self, other):
        assert self.group.modulus == other.group.modulus
        L = self.m * other.m // gcd(self.m, other.m)
        exps = [e1 * (L // self.m) + e2 * (L // other.m)
                for e1, e2 in zip(self.exps, other.exps)]
        return UnitChar(self.group, L, exps)

    def __eq__(self, other):
        if not isinstance(other, UnitChar):
            return NotImplemented
        if self.group.modulus != other.group.modulus:
            return False
        L = self.m * other.m // gcd(self.m, other.m)
        return tuple(e * (L // self.m) for e in self.exps) == \
            tuple(e * (L // other.m) for e in other.exps)

    def __repr__(self):
        return f"UnitChar(p^k={self.group.modulus}, m={self.m})"


def unit_characters(p, k):
    """All characters of (Z/p^k)^x, ordered by exponent table."""
    group = ResidueUnits(p, k)
    divisors, gens, dlog = group.invariants()
    m = divisors[0] if divisors else 1
    from itertools import product
    out = []
    for c in product(*(range(d) for d in divisors)):
        exps = [sum(ci * a * (m // d) for ci, a, d in zip(c, dlog[r], divisors)) % m
                for r in group.elements]
        out.append(UnitChar(group, m, exps))
    out.sort(key=lambda ch: ch.exps)
    return out


class SmoothCharLocal:
    """Smooth character of k^x: unit part at level k, value at the uniformizer.

    The uniformizer value is (r, phase) with r a positive rational and phase a
    root of unity zeta_pm^pe; the character is unitary exactly when r = 1.
    """

    __slots__ = ("p", "k", "unit_part", "r", "phase_m", "phase_e")

    def __init__(self, p, k, unit_part: UnitChar, r, phase_m=1, phase_e=0):
        r = Fraction(r)
        if r <= 0:
            raise SpecError("uniformizer modulus must be positive")
        self.p = p
        self.k = k
        self.unit_part = unit_part
        self.r = r
        self.phase_m = phase_m
        self.phase_e = phase_e % phase_m

    @property
    def is_unitary(self):
        return self.r == 1

    def value(self, residue, val):
        """Value at u * pi^val: (modulus part, root-of-unity part)."""
        rad = self.r ** val
        phase = self.unit_part.value(residue) * Cyclotomic.root(self.phase_m, (self.phase_e * val) % self.phase_m)
        return rad, phase

    def mul(self, other):
        assert (self.p, self.k) == (other.p, other.k)
        m = self.phase_m * other.phase_m // gcd(self.phase_m, other.phase_m)
        e = self.phase_e * (m // self.phase_m) + other.phase_e * (m // other.phase_m)
        return SmoothCharLocal(self.p, self.k, self.unit_part.mul(other.unit_part),
                               self.r * other.r, m, e)

    def __eq__(self, other):
        if not isinstance(other, SmoothCharLocal):
            return NotImplemented
        if (self.p, self.k, self.r) != (other.p, other.k, other.r):
            return False
        if self.unit_part != other.unit_part:
            return False
        return Cyclotomic.root(self.phase_m, self.phase_e) == \
            Cyclotomic.root(other.phase_m, other.phase_e)

    def __repr__(self):
        return (f"SmoothCharLocal(p={self.p}, k={self.k}, r={self.r}, "
                f"phase=z{self.phase_m}^{self.phase_e})")


def trivial_unit_part(p, k) -> UnitChar:
    group = ResidueUnits(p, k)
    return UnitChar(group, 1, [0] * group.order)


def factor_unitary(chi: SmoothCharLocal):
    """chi = chi_unitary * twist with chi_unitary of modulus one and the twist
    an unramified positive character (trivial unit part, no phase)."""
    chi_unitary = SmoothCharLocal(chi.p, chi.k, chi.unit_part, 1, chi.phase_m, chi.phase_e)
    twist = SmoothCharLocal(chi.p, chi.k, trivial_unit_part(chi.p, chi.k), chi.r, 1, 0)
    return chi_unitary, twist


class LocalCharGroup:
    """Generators of the smooth characters of k^x at residue level k."""

    def __init__(self, p, k):
        if k < 1:
            raise SpecError("character group needs level k >= 1")
        self.p = p
        self.k = k
        group = ResidueUnits(p, k)
        self.divisors, gens, dlog = group.invariants()
        m = self.divisors[0] if self.divisors else 1
        self.unit_generators = []
        for i, d in enumerate(self.divisors):
            exps = [(dlog[r][i] * (m // d)) % m for r in group.elements]
            self.unit_generators.append(
                SmoothCharLocal(p, k, UnitChar(group, m, exps), 1, 1, 0))
        # the free direction: trivial on units, arbitrary at the uniformizer
        self.free_generator = SmoothCharLocal(p, k, trivial_unit_part(p, k), 1, 1, 0)

    @property
    def unit_group_order(self):
        out = 1
        for d in self.divisors:
            out *= d
        return out

    def summary(self):
        return {
            "p": self.p,
            "k": self.k,
            "unit_divisors": list(self.divisors),
            "unit_group_order": self.unit_group_order,
            "free_rank": 1,
        }


def smooth_char_group(p, k) -> LocalCharGroup:
    return LocalCharGroup(p, k)


class InductionDatum:
    """Shape data of an induced-character witness: does B contain the diagonal?"""

    def __init__(self, algebra, subalgebra: Subalgebra):
        self.algebra = algebra
        self.subalgebra = subalgebra
        self.diag_contained = is_admissible_shape(self)

    def __repr__(self):
        return f"InductionDatum(dim B={self.subalgebra.dim}, diag={self.diag_contained})"


def is_admissible_shape(d: InductionDatum) -> bool:
    """Condition (i) of the admissibility criterion: D is contained in B."""
    dec = cached_decomposition(d.algebra)
    return all(d.subalgebra.contains(row) for row in dec.diagonal.rows)
