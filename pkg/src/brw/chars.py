"""Exact character tables, induction/restriction and the Clifford correspondence.

Tables are computed by the class-sum eigenvector method: all class
multiplication matrices are simultaneously diagonalized over F_l for the
smallest prime l = 1 (mod exponent) with l > 2*sqrt(|G|), and the eigenvalue
data is lifted to cyclotomic integers through the discrete Fourier inversion
at a fixed root of unity mod l. Every table is re-verified against the
orthogonality relations before it is returned.
"""

from fractions import Fraction
from functools import lru_cache
from math import isqrt

from .errors import (CliffordFailure, GroupMismatch, LiftFailure, NotOverTheta,
                     NotSubgroup, TooLarge)
from .exact import Cyclotomic, kernel_basis, mod_inv, reduce_vector, rref
from .groups import (DEFAULT_ORDER_CAP, ConjData, FiniteGroup, LinearChar,
                     char_orbit, conjugacy_classes)


class Character:
    """Exact class function on a finite group; values are cyclotomic numbers."""

    __slots__ = ("group", "conj", "values")

    def __init__(self, group: FiniteGroup, conj: ConjData, values):
        self.group = group
        self.conj = conj
        self.values = tuple(values)
        assert len(self.values) == conj.k

    @property
    def degree(self):
        return self.values[0].rational()

    def value_on_class(self, k) -> Cyclotomic:
        return self.values[k]

    def value_of(self, coords) -> Cyclotomic:
        return self.values[self.conj.class_of[self.group.index[coords]]]

    def __add__(self, other):
        assert self.group is other.group
        return Character(self.group, self.conj,
                         [a + b for a, b in zip(self.values, other.values)])

    def __mul__(self, other):
        assert self.group is other.group
        return Character(self.group, self.conj,
                         [a * b for a, b in zip(self.values, other.values)])

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return (self.group is other.group
                and all(a == b for a, b in zip(self.values, other.values)))

    def __hash__(self):
        raise TypeError("characters are compared, not hashed")

    def transfer(self, other_group: FiniteGroup):
        """Rebuild on another FiniteGroup object with the same element set."""
        if other_group is self.group:
            return self
        if other_group.elements != self.group.elements:
            raise GroupMismatch("transfer requires identical element sets")
        conj = conjugacy_classes(other_group)
        return Character(other_group, conj, [self.value_of(other_group.elements[r])
                                             for r in conj.reps])

    def __repr__(self):
        return f"Character(deg={self.degree}, k={self.conj.k})"


def char_from_linear(theta: LinearChar) -> Character:
    """A linear character as a class function on its domain."""
    G = theta.domain
    conj = conjugacy_classes(G)
    return Character(G, conj, [theta.value(r) for r in conj.reps])


def trivial_character(G: FiniteGroup) -> Character:
    conj = conjugacy_classes(G)
    return Character(G, conj, [Cyclotomic.one() for _ in conj.reps])


def regular_character(G: FiniteGroup) -> Character:
    conj = conjugacy_classes(G)
    vals = [Cyclotomic.from_rational(G.order if G.elements[r] == G.algebra.one else 0)
            for r in conj.reps]
    return Character(G, conj, vals)


def inner_product(chi: Character, psi: Character) -> Fraction:
    """(1/|G|) sum chi(g) conj(psi(g)), computed class-wise; exact rational."""
    if chi.group is not psi.group:
        raise GroupMismatch("characters live on different groups")
    total = Cyclotomic.zero()
    for size, a, b in zip(chi.conj.sizes, chi.values, psi.values):
        total = total + a * b.conjugate() * size
    total = total / chi.group.order
    if not total.is_rational():
        raise LiftFailure("inner product is not rational")
    return total.rational()


# ---------------------------------------------------------------------------
# Dixon class-sum method
# ---------------------------------------------------------------------------

def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _dixon_prime(order, exponent):
    """Smallest prime l = 1 (mod exponent) with l*l > 4*order."""
    l = exponent + 1
    while True:
        if l * l > 4 * order and _is_prime(l):
            return l
        l += exponent


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _root_of_order(m, l):
    """Smallest z in [1, l) of multiplicative order exactly m mod l."""
    qs = _prime_factors(m)
    for z in range(1, l):
        if pow(z, m, l) == 1 and all(pow(z, m // q, l) != 1 for q in qs):
            return z
    raise LiftFailure(f"no element of order {m} mod {l}")


def _class_matrices(G: FiniteGroup, conj: ConjData):
    """M_r[j][k] = #{(x,y) in C_r x C_j : x y = rep_k}."""
    n = conj.k
    mats = [[[0] * n for _ in range(n)] for _ in range(n)]
    A = G.algebra
    inv_coords = {v: G.elements[G.inv_id(i)] for i, v in enumerate(G.elements)}
    reps = [G.elements[r] for r in conj.reps]
    for xid, x in enumerate(G.elements):
        r = conj.class_of[xid]
        xin = inv_coords[x]
        row = mats[r]
        for k, z in enumerate(reps):
            y = A.mul(xin, z)
            row[conj.class_of[G.index[y]]][k] += 1
    return mats


def _refine_spaces(mats, n, l):
    """Common one-dimensional eigenspaces of the class matrices over F_l."""
    spaces = [tuple(tuple(1 if j == i else 0 for j in range(n)) for i in range(n))]
    for M in mats[1:]:
        if all(len(S) == 1 for S in spaces):
            break
        new_spaces = []
        for S in spaces:
            d = len(S)
            if d == 1:
                new_spaces.append(S)
                continue
            rows, pivots = rref(S, l)
            assert len(rows) == d
            images = []
            for w in rows:
                u = tuple(sum(M[j][k] * w[k] for k in range(n)) % l for j in range(n))
                res, coeffs = reduce_vector(u, rows, pivots, l)
                if any(res):
                    raise LiftFailure("class-matrix action left the subspace")
                images.append(coeffs)
            # row eigenvectors a of B (a.B = lam.a): kernel of (B - lam I)^T
            found = 0
            for lam in range(l):
                bt = [[(images[i][j] - (lam if i == j else 0)) % l for i in range(d)]
                      for j in range(d)]
                ker = kernel_basis(bt, d, l)
                if not ker:
                    continue
                vecs = []
                for a in ker:
                    v = tuple(sum(a[i] * rows[i][k] for i in range(d)) % l
                              for k in range(n))
                    vecs.append(v)
                new_spaces.append(tuple(rref(vecs, l)[0]))
                found += len(ker)
                if found == d:
                    break
            if found != d:
                raise LiftFailure("class matrix is not diagonalizable mod l")
        spaces = new_spaces
    if not all(len(S) == 1 for S in spaces):
        raise LiftFailure("class matrices not simultaneously diagonalizable")
    return [S[0] for S in spaces]


class CharTable:
    """Complete list of irreducible characters, verified against orthogonality."""

    def __init__(self, group, conj, irreducibles, conductor):
        self.group = group
        self.conj = conj
        self.irreducibles = tuple(irreducibles)
        self.conductor = conductor

    @property
    def degrees(self):
        return [int(ch.degree) for ch in self.irreducibles]

    def verify(self):
        G = self.group
        k = self.conj.k
        if len(self.irreducibles) != k:
            return False
        if sum(int(ch.degree) ** 2 for ch in self.irreducibles) != G.order:
            return False
        for i, chi in enumerate(self.irreducibles):
            for j in range(i, k):
                expect = Fraction(1 if i == j else 0)
                if inner_product(chi, self.irreducibles[j]) != expect:
                    return False
        # column orthogonality
        for a in range(k):
            for b in range(a, k):
                tot = Cyclotomic.zero()
                for ch in self.irreducibles:
                    tot = tot + ch.values[a] * ch.values[b].conjugate()
                want = Fraction(G.order, self.conj.sizes[a]) if a == b else Fraction(0)
                if not tot == Cyclotomic.from_rational(want):
                    return False
        return True


@lru_cache(maxsize=None)
def _char_table(G: FiniteGroup) -> CharTable:
    conj = conjugacy_classes(G)
    n = conj.k
    order = G.order
    m = 1
    rep_orders = []
    for r in conj.reps:
        o = G.element_order(r)
        rep_orders.append(o)
        g = _gcd(m, o)
        m = m // g * o
    l = _dixon_prime(order, m)
    mats = _class_matrices(G, conj)
    eigvecs = _refine_spaces(mats, n, l)

    inv_class = [conj.class_of[G.inv_id(r)] for r in conj.reps]
    pm = []
    for r in conj.reps:
        powers = []
        y = G.algebra.one
        for _ in range(m):
            powers.append(conj.class_of[G.index[y]])
            y = G.algebra.mul(y, G.elements[r])
        pm.append(powers)

    z = _root_of_order(m, l)
    zpow = [pow(z, s, l) for s in range(m)]
    zinv = mod_inv(z, l)
    zinvpow = [pow(zinv, s, l) for s in range(m)]
    m_inv = mod_inv(m % l, l)

    rows = []
    for w in eigvecs:
        if w[0] == 0:
            raise LiftFailure("central character vanishes on the identity class")
        scale = mod_inv(w[0], l)
        w = [(x * scale) % l for x in w]
        ratios = [(w[k] * mod_inv(conj.sizes[k] % l, l)) % l for k in range(n)]
        den = sum(conj.sizes[k] * ratios[k] * ratios[inv_class[k]] for k in range(n)) % l
        chi1sq = (order % l) * mod_inv(den, l) % l
        deg = None
        for d in range(1, isqrt(order) + 1):
            if (d * d) % l == chi1sq:
                deg = d
                break
        if deg is None:
            raise LiftFailure("no integral degree matches the eigenvector")
        vals_mod = [(deg * ratios[k]) % l for k in range(n)]
        values = []
        for k in range(n):
            coeffs = []
            for j in range(m):
                c = sum(vals_mod[pm[k][s]] * zinvpow[(j * s) % m] for s in range(m))
                c = (c * m_inv) % l
                if c > 2 * isqrt(order):
                    raise LiftFailure("eigenvalue multiplicity out of range")
                coeffs.append(c)
            if sum(coeffs) != deg:
                raise LiftFailure("multiplicities do not sum to the degree")
            values.append(Cyclotomic(m, coeffs))
        rows.append(values)

    chars = [Character(G, conj, values) for values in rows]
    chars.sort(key=lambda ch: (ch.degree, [v.key(m) for v in ch.values]))
    table = CharTable(G, conj, chars, m)
    # construction gate: row orthonormality, degree equation, completeness
    # (column orthogonality follows and is re-checked by CharTable.verify)
    if len(chars) != n or sum(int(c.degree) ** 2 for c in chars) != order:
        raise LiftFailure("degree equation failed after lifting")
    for i, chi in enumerate(chars):
        for j in range(i, n):
            if inner_product(chi, chars[j]) != Fraction(1 if i == j else 0):
                raise LiftFailure("row orthogonality failed after lifting")
    return table


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def char_table(G: FiniteGroup, cap=DEFAULT_ORDER_CAP) -> CharTable:
    if G.order > cap:
        raise TooLarge(f"group order {G.order} exceeds cap {cap}")
    return _char_table(G)


# ---------------------------------------------------------------------------
# induction / restriction
# ---------------------------------------------------------------------------

def _check_subgroup(G: FiniteGroup, H: FiniteGroup):
    if H.algebra is not G.algebra or not G.contains_group(H):
        raise NotSubgroup("H is not a subgroup of G")


def induce(G: FiniteGroup, H: FiniteGroup, chi: Character) -> Character:
    """Frobenius induction of a class function from H up to G."""
    _check_subgroup(G, H)
    if chi.group is not H:
        chi = chi.transfer(H)
    conj = conjugacy_classes(G)
    values = []
    for k in range(conj.k):
        tot = Cyclotomic.zero()
        hit = False
        for xid in conj.classes[k]:
            v = G.elements[xid]
            if v in H.index:
                tot = tot + chi.value_of(v)
                hit = True
        if hit:
            tot = tot * Fraction(G.order, conj.sizes[k] * H.order)
        values.append(tot)
    return Character(G, conj, values)


def restrict(G: FiniteGroup, H: FiniteGroup, chi: Character) -> Character:
    """Restriction of a class function on G to the subgroup H."""
    _check_subgroup(G, H)
    if chi.group is not G:
        chi = chi.transfer(G)
    conj_h = conjugacy_classes(H)
    return Character(H, conj_h, [chi.value_of(H.elements[r]) for r in conj_h.reps])


def constituents(chi: Character, table: CharTable):
    """[(multiplicity, irreducible)] of a character against a table."""
    out = []
    for irr in table.irreducibles:
        mult = inner_product(chi, irr)
        if mult:
            assert mult.denominator == 1 and mult > 0
            out.append((int(mult), irr))
    return out


def clifford_correspondent(G: FiniteGroup, Q: FiniteGroup, theta: LinearChar,
                           chi: Character, cap=DEFAULT_ORDER_CAP, orbit=None):
    """The unique irreducible of the stabilizer G_theta over theta inducing chi.

    Returns (eta, stabilizer). Raises NotOverTheta when chi does not lie over
    theta, CliffordFailure if the uniqueness scan fails.
    """
    theta_char = char_from_linear(theta)
    res = restrict(G, Q, chi)
    if inner_product(res, theta_char) == 0:
        raise NotOverTheta("chi does not lie over theta")
    if orbit is None:
        orbit = char_orbit(G, Q, theta)
    S = orbit.stabilizer
    theta_s = char_from_linear(theta)
    matches = []
    for eta in char_table(S, cap=cap).irreducibles:
        if inner_product(restrict(S, Q, eta), theta_s) != 0:
            if induce(G, S, eta) == chi:
                matches.append(eta)
    if len(matches) != 1:
        raise CliffordFailure(f"expected a unique correspondent, found {len(matches)}")
    return matches[0], S
