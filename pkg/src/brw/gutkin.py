"""Constructive decomposition of irreducible characters of unit groups.

Implements the descent that writes every irreducible character of G = A^x as
the induction of a linear character of the unit group of a subalgebra:
diagonal centralisers, the commutator-kernel subalgebra of the radical with
its dual-valued homomorphism, character extension along one-dimensional ideal
steps, stabilizer-subalgebra certification, and the recursion tying it all
together. An exhaustive brute-force verifier over the subalgebra lattice
provides an independent check of the same statement.
"""

from functools import lru_cache

from .algebra import (Algebra, EmbeddedAlgebra, Subalgebra, Subspace,
                      bimodule_complement, bimodule_decompose,
                      cached_decomposition, enumerate_subalgebras, vec_add,
                      vec_sub)
from .chars import (Character, char_from_linear, char_table,
                    clifford_correspondent, induce, inner_product, restrict)
from .errors import (CertificationFailure, DecompositionFailure, NoExtension,
                     NotInvariant, PreconditionFailure, VerificationFailure)
from .exact import Cyclotomic, rref
from .groups import (DEFAULT_ORDER_CAP, FiniteGroup, LinearChar, char_orbit,
                     intern_group, linear_characters, units_of_subspace)


class Level:
    """A unital closed subspace of the ambient algebra with its group context.

    All groups live in ambient coordinates so characters can be moved between
    recursion levels; structural data (radical, idempotents) is computed on
    the rebased local algebra and mapped back.
    """

    def __init__(self, ambient: Algebra, rows):
        self.ambient = ambient
        emb = EmbeddedAlgebra(ambient, rows)
        self.emb = emb
        self.alg = emb.alg
        self.rows = emb.rows
        self.dim = emb.dim
        dec = cached_decomposition(self.alg)
        self.idempotents = tuple(emb.to_ambient(e) for e in dec.idempotents)
        self.diagonal = Subspace(ambient, [emb.to_ambient(r) for r in dec.diagonal.rows])
        self.radical = Subspace(ambient, [emb.to_ambient(r) for r in dec.radical.rows])
        self.units = units_of_subspace(ambient, self.rows)
        one = ambient.one
        self.P = intern_group(ambient, [vec_add(one, v, ambient.p) for v in self.radical.vectors()],
                              kind="radical")
        self._rad_powers = {1: self.radical}

    def radical_power(self, n):
        """Ambient image of J^n for the level algebra."""
        if n not in self._rad_powers:
            prev = self.radical_power(n - 1)
            A = self.ambient
            prods = [A.mul(u, v) for u in prev.rows for v in self.radical.rows]
            self._rad_powers[n] = Subspace(A, prods)
        return self._rad_powers[n]

    def one_plus(self, subspace: Subspace, kind="ideal") -> FiniteGroup:
        A = self.ambient
        return intern_group(A, [vec_add(A.one, v, A.p) for v in subspace.vectors()], kind=kind)

    def is_ideal_of_level(self, subspace: Subspace) -> bool:
        A = self.ambient
        for b in self.rows:
            for v in subspace.rows:
                if not (subspace.contains(A.mul(b, v)) and subspace.contains(A.mul(v, b))):
                    return False
        return True


@lru_cache(maxsize=None)
def get_level(ambient: Algebra, rows) -> Level:
    return Level(ambient, rows)


def top_level(A: Algebra) -> Level:
    return get_level(A, tuple(A.basis_vector(i) for i in range(A.dim)))


def linear_char_from_character(chi: Character) -> LinearChar:
    """Exponent table of a degree-one character (values must be roots of unity)."""
    assert chi.degree == 1
    G = chi.group
    m = max(v.m for v in chi.values)
    roots = {Cyclotomic.root(m, e).key(m): e for e in range(m)}
    class_exp = []
    for v in chi.values:
        k = v.key(m)
        if k not in roots:
            raise DecompositionFailure("degree-one character value is not a root of unity")
        class_exp.append(roots[k])
    exps = [class_exp[chi.conj.class_of[i]] for i in range(G.order)]
    return LinearChar(G, m, exps)


# ---------------------------------------------------------------------------
# diagonal centraliser  D_theta
# ---------------------------------------------------------------------------

def _ideal_rows_of_subgroup(A: Algebra, Q: FiniteGroup):
    """Recover I from the ideal subgroup Q = 1 + I."""
    rows = [vec_sub(q, A.one, A.p) for q in Q.elements]
    red, _ = rref(rows, A.p)
    return red


def diag_centraliser_level(level: Level, I: Subspace, theta: LinearChar) -> Subalgebra:
    """D_theta = {d in D : theta(1+ad) = theta(1+da) for all a in I}, certified.

    The returned subspace of the diagonal is checked to be a unital closed
    subalgebra whose unit group is exactly the stabilizer of theta in T.
    """
    A = level.ambient
    Q = theta.domain
    members = []
    ivecs = list(I.vectors())
    for d in level.diagonal.vectors():
        ok = True
        for a in ivecs:
            left = vec_add(A.one, A.mul(a, d), A.p)
            right = vec_add(A.one, A.mul(d, a), A.p)
            if theta.exps[Q.index[left]] != theta.exps[Q.index[right]]:
                ok = False
                break
        if ok:
            members.append(d)
    rows, _ = rref(members, A.p)
    if len(members) != A.p ** len(rows):
        raise CertificationFailure("diagonal centraliser set is not a subspace")
    try:
        sub = Subalgebra(A, rows)
    except Exception as exc:
        raise CertificationFailure(f"diagonal centraliser not a subalgebra: {exc}")
    # unit group must be the stabilizer of theta in T
    t_stab = set()
    for t in _torus_elements(level):
        if _conj_char(A, theta, t) == theta.exps:
            t_stab.add(t)
    units = set(units_of_subspace(A, rows).elements)
    if units != t_stab:
        raise CertificationFailure("unit group of D_theta differs from T_theta")
    return sub


def _torus_elements(level: Level):
    from itertools import product as iproduct
    A = level.ambient
    out = []
    for t in iproduct(range(1, A.p), repeat=len(level.idempotents)):
        d = tuple(0 for _ in range(A.dim))
        for c, e in zip(t, level.idempotents):
            d = vec_add(d, tuple((c * x) % A.p for x in e), A.p)
        out.append(d)
    return out


def _conj_char(A: Algebra, theta: LinearChar, g):
    """Exponent table of theta^g (x -> theta(g x g^-1)) for a unit g."""
    Q = theta.domain
    ginv = _unit_inverse(A, g)
    return tuple(theta.exps[Q.index[A.mul(A.mul(g, x), ginv)]] for x in Q.elements)


def _unit_inverse(A: Algebra, g):
    """Inverse of a unit: g has finite order r in A^x, so g^(r-1) inverts it."""
    y = g
    n = 1
    while y != A.one:
        y = A.mul(y, g)
        n += 1
    return A.power(g, n - 1)


def diag_centraliser(A: Algebra, Q: FiniteGroup, theta: LinearChar) -> Subalgebra:
    level = top_level(A)
    I = Subspace(A, _ideal_rows_of_subgroup(A, Q))
    return diag_centraliser_level(level, I, theta)


# ---------------------------------------------------------------------------
# sigma data: N = 1 + J^n, one-dimensional step ideal L, Q = 1 + L
# ---------------------------------------------------------------------------

class SigmaData:
    """The (n, sigma, L) setup: N = 1+J^n, a P-invariant sigma on N,
    an ideal L with J^n <= L <= J^(n-1) of codimension one over J^n, Q = 1+L."""

    def __init__(self, level: Level, n: int, L: Subspace, sigma: LinearChar):
        self.level = level
        self.n = n
        self.L = L
        Jn = level.radical_power(n)
        Jn1 = level.radical_power(n - 1)
        if not all(L.contains(v) for v in Jn.rows):
            raise PreconditionFailure("J^n is not contained in L")
        if not all(Jn1.contains(v) for v in L.rows):
            raise PreconditionFailure("L is not contained in J^(n-1)")
        if L.dim != Jn.dim + 1:
            raise PreconditionFailure("L must have dimension dim J^n + 1")
        if not level.is_ideal_of_level(L):
            raise PreconditionFailure("L is not an ideal of the algebra")
        self.N = level.one_plus(Jn, kind="ideal")
        self.Q = level.one_plus(L, kind="ideal")
        if sigma.domain is not self.N:
            sigma = LinearChar(self.N, sigma.m,
                               [sigma.exps[sigma.domain.index[v]] for v in self.N.elements])
        self.sigma = sigma
        self.Jn = Jn
        self._check_p_invariant()
        self._jsigma = None

    def _check_p_invariant(self):
        A = self.level.ambient
        sig = self.sigma
        for g in self.level.P.generators():
            if _conj_char(A, sig, g) != sig.exps:
                raise NotInvariant("sigma is not P-invariant")

    def is_g_invariant(self):
        A = self.level.ambient
        sig = self.sigma
        return all(_conj_char(A, sig, g) == sig.exps for g in self.level.units.generators())

    def commutator_value(self, x, u):
        """sigma([1+x, 1+u]) as an exponent mod sigma.m, for x in J, u in L."""
        A = self.level.ambient
        a = vec_add(A.one, x, A.p)
        b = vec_add(A.one, u, A.p)
        c = A.mul(A.mul(_unit_inverse(A, a), _unit_inverse(A, b)), A.mul(a, b))
        return self.sigma.exps[self.N.index[c]]


def j_sigma(S: SigmaData) -> Subspace:
    """J_sigma = {a in J : sigma([1+a, 1+u]) = 1 for all u in L}, certified.

    Certificates: the set is a subspace, multiplicatively closed, contains
    J^2, has codimension at most one in J, and 1 + J_sigma is exactly the
    kernel of phi_sigma.
    """
    if S._jsigma is not None:
        return S._jsigma
    level = S.level
    A = level.ambient
    lvecs = [v for v in S.L.vectors()]
    members = []
    for a in level.radical.vectors():
        if all(S.commutator_value(a, u) == 0 for u in lvecs):
            members.append(a)
    rows, _ = rref(members, A.p)
    if len(members) != A.p ** len(rows):
        raise CertificationFailure("J_sigma is not a subspace")
    js = Subspace(A, rows)
    Jsq = level.radical_power(2)
    if not all(js.contains(v) for v in Jsq.rows):
        raise CertificationFailure("J^2 is not contained in J_sigma")
    if level.radical.dim - js.dim > 1:
        raise CertificationFailure("J_sigma has codimension greater than one")
    for u in js.rows:
        for v in js.rows:
            if not js.contains(A.mul(u, v)):
                raise CertificationFailure("J_sigma is not multiplicatively closed")
    S._jsigma = js
    return js


def phi_sigma(S: SigmaData, g) -> LinearChar:
    """The character phi_sigma(g): h -> sigma([g,h]) on Q, for g in P (coords)."""
    A = S.level.ambient
    Q = S.Q
    gin = _unit_inverse(A, g)
    exps = []
    for h in Q.elements:
        hin = _unit_inverse(A, h)
        c = A.mul(A.mul(gin, hin), A.mul(g, h))
        exps.append(S.sigma.exps[S.N.index[c]])
    ch = LinearChar(Q, S.sigma.m, exps)
    # image lies in the annihilator of N
    assert all(ch.exps[Q.index[v]] == 0 for v in S.N.elements), "phi_sigma(g) not trivial on N"
    return ch


def ideal_intersection_test(A_or_level, I: Subspace, S: SigmaData) -> bool:
    """Whether I / J_sigma intersect to a two-sided ideal (requires G-invariant sigma)."""
    level = A_or_level if isinstance(A_or_level, Level) else top_level(A_or_level)
    if not S.is_g_invariant():
        raise PreconditionFailure("sigma is not G-invariant")
    Jsq = level.radical_power(2)
    if not all(I.contains(v) for v in Jsq.rows):
        raise PreconditionFailure("I does not contain J^2")
    if not all(level.radical.contains(v) for v in I.rows):
        raise PreconditionFailure("I is not contained in J")
    if not level.is_ideal_of_level(I):
        raise PreconditionFailure("I is not an ideal")
    X = I.intersect(j_sigma(S))
    return level.is_ideal_of_level(X)


class ExtensionResult:
    def __init__(self, sigma_data, extensions, jsig, stabilizer_identity, single_orbit):
        self.sigma_data = sigma_data
        self.extensions = tuple(extensions)
        self.j_sigma = jsig
        self.stabilizer_identity = stabilizer_identity
        self.single_orbit = single_orbit

    @property
    def theta(self):
        return self.extensions[0]


def extend_character(S: SigmaData) -> ExtensionResult:
    """All extensions of sigma from N to Q, with their P-stabilizers and orbit.

    Certifies: [Q,Q] <= ker sigma, there are exactly p = |Q/N| extensions,
    every extension has P-stabilizer 1 + J_sigma, and when that stabilizer is
    proper the extensions form a single P-orbit.
    """
    level = S.level
    A = level.ambient
    Q, N, sigma = S.Q, S.N, S.sigma
    # [Q,Q] <= ker sigma
    for q1 in Q.elements:
        for q2 in Q.elements:
            c = A.mul(A.mul(_unit_inverse(A, q1), _unit_inverse(A, q2)), A.mul(q1, q2))
            if sigma.exps[N.index[c]] != 0:
                raise NoExtension("sigma does not kill [Q,Q]")
    exts = []
    for ch in linear_characters(Q):
        if ch.restrict(N).same_values(sigma):
            exts.append(ch)
    if not exts:
        raise NoExtension("no extension of sigma to Q exists")
    if len(exts) != Q.order // N.order:
        raise NoExtension(f"expected {Q.order // N.order} extensions, found {len(exts)}")
    exts.sort(key=lambda ch: ch.exps)
    jsig = j_sigma(S)
    expected_stab = {vec_add(A.one, v, A.p) for v in jsig.vectors()}
    stab_ok = True
    proper = None
    for ch in exts:
        orb = char_orbit(level.P, Q, ch)
        if set(orb.stabilizer.elements) != expected_stab:
            stab_ok = False
        proper = orb.stabilizer.order != level.P.order
    if not stab_ok:
        raise CertificationFailure("P-stabilizer of an extension differs from 1 + J_sigma")
    single = None
    if proper:
        orbit_exps = {c.exps for c in char_orbit(level.P, Q, exts[0]).orbit}
        single = orbit_exps == {c.exps for c in exts}
        if not single:
            raise CertificationFailure("extensions do not form a single P-orbit")
    return ExtensionResult(S, exts, jsig, stab_ok, single)


# ---------------------------------------------------------------------------
# stabilizer subalgebra certification
# ---------------------------------------------------------------------------

def certify_stabilizer_subalgebra(A_or_level, G_theta: FiniteGroup):
    """A subalgebra whose unit group is exactly G_theta.

    Strategy: the linear span of G_theta is a unital closed subspace; certify
    that its unit group adds nothing. If it does, conjugates g G_theta g^-1
    are scanned the same way and the witness is transported back. Failure is
    reportable: it would contradict the finite-field theorem.
    """
    level = A_or_level if isinstance(A_or_level, Level) else top_level(A_or_level)
    A = level.ambient

    def try_set(elems):
        rows, _ = rref(list(elems), A.p)
        units = units_of_subspace(A, rows)
        if set(units.elements) == set(elems):
            return Subalgebra(A, rows)
        return None

    direct = try_set(G_theta.elements)
    if direct is not None:
        return direct, None
    for g in level.units.elements:
        gin = _unit_inverse(A, g)
        conj = [A.mul(A.mul(g, x), gin) for x in G_theta.elements]
        found = try_set(conj)
        if found is not None:
            back = [A.mul(A.mul(gin, r), g) for r in found.rows]
            return Subalgebra(A, rref(back, A.p)[0]), g
    raise CertificationFailure(
        "stabilizer is not the unit group of any conjugate of its span")


# ---------------------------------------------------------------------------
# the constructive decomposition
# ---------------------------------------------------------------------------

class GutkinWitness:
    """Chain of subalgebra descents ending in a linear character whose
    induction recovers the target irreducible."""

    def __init__(self, algebra, group, target, steps, subalgebra_rows, H, lam):
        self.algebra = algebra
        self.group = group
        self.target = target
        self.steps = steps
        self.subalgebra_rows = subalgebra_rows
        self.H = H
        self.lam = lam
        self.induced_matches = None

    def verify(self):
        ind = induce(self.group, self.H, char_from_linear(self.lam))
        self.induced_matches = (ind == self.target)
        return self.induced_matches

    @property
    def chain_dims(self):
        return [s["algebra_dim"] for s in self.steps]

    def summary(self):
        return {
            "degree": int(self.target.degree),
            "subalgebra_basis": [list(r) for r in self.subalgebra_rows],
            "subalgebra_dim": len(self.subalgebra_rows),
            "H_order": self.H.order,
            "lambda_conductor": self.lam.m,
            "lambda_exps": list(self.lam.exps),
            "chain_dims": self.chain_dims,
            "induced_matches": bool(self.induced_matches),
        }


def _scalar_restriction(level: Level, psi: Character, n):
    """LinearChar sigma with Res_{1+J^n} psi = deg(psi) * sigma, or None."""
    Jn = level.radical_power(n)
    N = level.one_plus(Jn, kind="ideal")
    deg = int(psi.degree)
    m = max(v.m for v in psi.values)
    roots = {Cyclotomic.root(m, e).key(m): e for e in range(m)}
    exps = []
    for x in N.elements:
        val = psi.value_of(x)
        k = (val / deg).key(m) if deg != 1 else val.key(m)
        if k not in roots:
            return None, N
        exps.append(roots[k])
    return LinearChar(N, m, exps), N


def _one_dim_ideal_steps(level: Level, n):
    """Ideals L_i with J^n <= L_i <= J^(n-1), dim(L_i/J^n) = 1, in the order
    induced by the homogeneous bimodule decomposition of a complement."""
    loc = level.alg
    dec = cached_decomposition(loc)
    Jn1_loc = _local_power(level, n - 1)
    Jn_loc = _local_power(level, n)
    comp = bimodule_complement(dec.diagonal, Jn1_loc, Jn_loc)
    pieces = []
    for i, j, comp_ij in bimodule_decompose(dec.diagonal, comp):
        for v in comp_ij.rows:
            pieces.append(v)
    out = []
    for v in pieces:
        rows = Jn_loc.rows + (v,)
        amb = Subspace(level.ambient, [level.emb.to_ambient(r) for r in rref(rows, loc.p)[0]])
        out.append(amb)
    return out


def _local_power(level: Level, n):
    loc = level.alg
    dec = cached_decomposition(loc)
    rows = dec.radical.rows
    cur = Subspace(loc, rows)
    for _ in range(n - 1):
        prods = [loc.mul(u, v) for u in cur.rows for v in dec.radical.rows]
        cur = Subspace(loc, prods)
    return cur


def _decompose(level: Level, chi: Character, steps, cap):
    H = level.units
    if chi.group is not H:
        chi = chi.transfer(H)
    if chi.degree == 1:
        lam = linear_char_from_character(chi)
        steps.append({"branch": "leaf", "algebra_dim": level.dim, "group_order": H.order})
        return level, lam
    P = level.P
    tabP = char_table(P, cap=cap)
    resP = restrict(H, P, chi)
    psi = None
    for irr in tabP.irreducibles:
        if inner_product(resP, irr) != 0:
            psi = irr
            break
    assert psi is not None

    if psi.degree == 1:
        theta = linear_char_from_character(psi)
        orbit = char_orbit(H, P, theta)
        if orbit.stabilizer.order == H.order:
            raise DecompositionFailure(
                "invariant linear constituent under a character of degree >= 2")
        G_theta = orbit.stabilizer
        D_theta = diag_centraliser_level(level, level.radical, theta)
        rows, _ = rref(D_theta.rows + level.radical.rows, level.ambient.p)
        sub = Subalgebra(level.ambient, rows)
        units = units_of_subspace(level.ambient, rows)
        if set(units.elements) != set(G_theta.elements):
            raise CertificationFailure("(D_theta + J)^x differs from the stabilizer")
        eta, S = clifford_correspondent(H, P, theta, chi, cap=cap, orbit=orbit)
        steps.append({
            "branch": "linear-constituent", "algebra_dim": level.dim,
            "group_order": H.order, "stabilizer_order": G_theta.order,
            "next_dim": len(rows),
        })
        new_level = get_level(level.ambient, rows)
        return _decompose(new_level, eta.transfer(new_level.units), steps, cap)

    # deg psi >= 2: find the minimal scalar level n (J^n != 0 is guaranteed
    # before the search bottoms out, since 1 + J^max is central in P)
    n = None
    sigma = None
    cand = 1
    while level.radical_power(cand).dim > 0:
        sig, N = _scalar_restriction(level, psi, cand)
        if sig is not None:
            n, sigma = cand, sig
            break
        cand += 1
    if n is None or n < 2:
        raise DecompositionFailure("no scalar level found for a nonlinear constituent")
    if sigma.is_trivial():
        raise DecompositionFailure("scalar character is trivial at the minimal level")
    if n == 2 and level.radical.dim == level.radical_power(2).dim + 1:
        raise DecompositionFailure("extreme case n = 2 with dim J = dim J^2 + 1")

    chosen = None
    for L in _one_dim_ideal_steps(level, n):
        S = SigmaData(level, n, L, sigma)
        nondeg = False
        for a in level.radical.vectors():
            if any(S.commutator_value(a, u) != 0 for u in L.vectors()):
                nondeg = True
                break
        if nondeg:
            chosen = S
            break
    if chosen is None:
        raise DecompositionFailure("sigma kills all commutators [1+J, 1+L_i]")

    ext = extend_character(chosen)
    theta = ext.theta
    theta_char = char_from_linear(theta)
    res = restrict(H, chosen.Q, chi)
    if inner_product(res, theta_char) == 0:
        raise DecompositionFailure("chosen extension does not occur under chi")
    orbit = char_orbit(H, chosen.Q, theta)
    G_theta = orbit.stabilizer
    if G_theta.order == H.order:
        raise DecompositionFailure("stabilizer did not decrease at a nonlinear step")
    sub, conjugator = certify_stabilizer_subalgebra(level, G_theta)
    eta, S2 = clifford_correspondent(H, chosen.Q, theta, chi, cap=cap, orbit=orbit)
    steps.append({
        "branch": "sigma-extension", "algebra_dim": level.dim,
        "group_order": H.order, "scalar_level": n,
        "stabilizer_order": G_theta.order, "next_dim": sub.dim,
        "conjugated": conjugator is not None,
    })
    new_level = get_level(level.ambient, sub.rows)
    return _decompose(new_level, eta.transfer(new_level.units), steps, cap)


def gutkin_decompose(A: Algebra, chi: Character, cap=DEFAULT_ORDER_CAP) -> GutkinWitness:
    """Write the irreducible chi as Ind_H^G(lambda) for H the unit group of a
    subalgebra and lambda linear; the witness is verified by exact induction."""
    level = top_level(A)
    G = level.units
    chi0 = chi.transfer(G)
    assert inner_product(chi0, chi0) == 1, "gutkin_decompose requires an irreducible"
    steps = []
    leaf, lam = _decompose(level, chi0, steps, cap)
    witness = GutkinWitness(A, G, chi0, steps, leaf.rows, leaf.units, lam)
    if not witness.verify():
        raise DecompositionFailure("induced character does not match the target")
    return witness


# ---------------------------------------------------------------------------
# brute-force verification
# ---------------------------------------------------------------------------

class BruteReport:
    def __init__(self, algebra, group, table, per_irr):
        self.algebra = algebra
        self.group = group
        self.table = table
        self.per_irr = per_irr

    @property
    def all_witnessed(self):
        return all(entry["witness_count"] > 0 for entry in self.per_irr)

    def summary(self):
        return {
            "group_order": self.group.order,
            "degrees": self.table.degrees,
            "per_irreducible": self.per_irr,
            "all_witnessed": self.all_witnessed,
        }


def verify_gutkin_brute(A: Algebra, max_dim=None, budget=None,
                        cap=DEFAULT_ORDER_CAP) -> BruteReport:
    """Exhaustive search: for every irreducible of A^x, find all pairs
    (subalgebra B, linear lambda of B^x) with Ind lambda equal to it."""
    level = top_level(A)
    G = level.units
    table = char_table(G, cap=cap)
    subs = enumerate_subalgebras(A, max_dim=max_dim, budget=budget)
    per_irr = [{"degree": int(irr.degree), "witness_count": 0, "first": None}
               for irr in table.irreducibles]
    for B in subs:
        H = units_of_subspace(A, B.rows)
        index = G.order // H.order
        targets = [(i, irr) for i, irr in enumerate(table.irreducibles)
                   if int(irr.degree) == index]
        if not targets:
            continue
        for lam in linear_characters(H, cap=cap):
            ind = induce(G, H, char_from_linear(lam))
            for i, irr in targets:
                if ind == irr:
                    entry = per_irr[i]
                    entry["witness_count"] += 1
                    if entry["first"] is None:
                        entry["first"] = {
                            "subalgebra_basis": [list(r) for r in B.rows],
                            "subalgebra_dim": B.dim,
                            "H_order": H.order,
                            "lambda_conductor": lam.m,
                            "lambda_exps": list(lam.exps),
                        }
                    break
    report = BruteReport(A, G, table, per_irr)
    if not report.all_witnessed:
        missing = [i for i, e in enumerate(per_irr) if e["witness_count"] == 0]
        raise VerificationFailure(f"irreducibles without witness: {missing}")
    return report
