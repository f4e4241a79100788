"""Split basic algebras presented by structure constants.

Everything here is exact over F_p: elements are coordinate tuples, subspaces
are reduced-echelon row matrices, and all certificates (associativity,
identity, ideal/subalgebra closure, idempotent orthogonality) are checked by
finite enumeration at construction time.
"""

from functools import lru_cache
from itertools import product

from .errors import NotBimodule, NotSplitBasic, SpecError, TooLarge
from .exact import SUPPORTED_PRIMES, kernel_basis, reduce_vector, rref

# subalgebra enumeration caps: max algebra dimension per field, and a budget
# on closure computations for the lattice walk
DEFAULT_DIM_BOUND = {2: 6, 3: 5, 5: 4, 7: 4}
DEFAULT_SCAN_BUDGET = 200_000


def vec_add(u, v, p):
    return tuple((a + b) % p for a, b in zip(u, v))


def vec_sub(u, v, p):
    return tuple((a - b) % p for a, b in zip(u, v))


def vec_scale(c, u, p):
    return tuple((c * a) % p for a in u)


def vec_is_zero(u):
    return all(a == 0 for a in u)


def all_vectors(p, dim):
    """All coordinate tuples of F_p^dim, lexicographic."""
    return product(range(p), repeat=dim)


class Algebra:
    """Finite-dimensional unital associative algebra over F_p by structure constants.

    sc[i][j][k] is the coefficient of basis vector k in the product b_i * b_j.
    Associativity and the two-sided identity are certified at construction.
    """

    def __init__(self, p, sc, one, labels=None):
        if p not in SUPPORTED_PRIMES:
            raise SpecError(f"unsupported prime {p}")
        dim = len(sc)
        if dim == 0:
            raise SpecError("zero-dimensional algebra rejected (identity required)")
        for i, plane in enumerate(sc):
            if len(plane) != dim or any(len(row) != dim for row in plane):
                raise SpecError(f"sc[{i}] is not a {dim}x{dim} table")
        self.p = p
        self.dim = dim
        self.sc = tuple(tuple(tuple(int(c) % p for c in row) for row in plane) for plane in sc)
        self.one = tuple(int(c) % p for c in one)
        if len(self.one) != dim:
            raise SpecError("identity vector has wrong length")
        self.labels = tuple(labels) if labels else tuple(f"b{i}" for i in range(dim))
        if len(self.labels) != dim:
            raise SpecError("labels length mismatch")
        self._nz = tuple(tuple(tuple((k, c) for k, c in enumerate(row) if c)
                               for row in plane) for plane in self.sc)
        self._check_identity()
        self._check_associativity()

    def _check_identity(self):
        for i in range(self.dim):
            b = tuple(1 if k == i else 0 for k in range(self.dim))
            if self.mul(self.one, b) != b or self.mul(b, self.one) != b:
                raise SpecError(f"'one' is not a two-sided identity (fails on basis {i})")

    def _check_associativity(self):
        for i in range(self.dim):
            for j in range(self.dim):
                bij = self.sc[i][j]
                for k in range(self.dim):
                    left = self.mul(bij, tuple(1 if t == k else 0 for t in range(self.dim)))
                    right = self.mul(
                        tuple(1 if t == i else 0 for t in range(self.dim)), self.sc[j][k]
                    )
                    if left != right:
                        raise SpecError(f"associativity fails at basis triple ({i},{j},{k})")

    # -- arithmetic on coordinate tuples --------------------------------------
    def mul(self, x, y):
        p = self.p
        out = [0] * self.dim
        nz = self._nz
        for i, xi in enumerate(x):
            if xi:
                nzi = nz[i]
                for j, yj in enumerate(y):
                    if yj:
                        f = xi * yj
                        for k, c in nzi[j]:
                            out[k] = (out[k] + f * c) % p
        return tuple(out)

    def power(self, x, n):
        out = self.one
        base = x
        while n:
            if n & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            n >>= 1
        return out

    def is_nilpotent(self, x):
        # repeated squaring: index of nilpotency is at most dim in a unital algebra
        t = (self.dim - 1).bit_length()
        y = x
        for _ in range(max(t, 1)):
            if vec_is_zero(y):
                return True
            y = self.mul(y, y)
        return vec_is_zero(y)

    def elem(self, coords):
        return AlgElem(self, coords)

    def basis_vector(self, i):
        return tuple(1 if k == i else 0 for k in range(self.dim))

    def elements(self):
        return all_vectors(self.p, self.dim)

    def __repr__(self):
        return f"Algebra(p={self.p}, dim={self.dim})"


class AlgElem:
    """Element of an Algebra, wrapping a coordinate tuple."""

    __slots__ = ("owner", "coords")

    def __init__(self, owner, coords):
        coords = tuple(int(c) % owner.p for c in coords)
        if len(coords) != owner.dim:
            raise SpecError("coordinate length mismatch")
        self.owner = owner
        self.coords = coords

    def __mul__(self, other):
        assert self.owner is other.owner
        return AlgElem(self.owner, self.owner.mul(self.coords, other.coords))

    def __add__(self, other):
        assert self.owner is other.owner
        return AlgElem(self.owner, vec_add(self.coords, other.coords, self.owner.p))

    def __sub__(self, other):
        assert self.owner is other.owner
        return AlgElem(self.owner, vec_sub(self.coords, other.coords, self.owner.p))

    def __neg__(self):
        return AlgElem(self.owner, vec_scale(-1, self.coords, self.owner.p))

    def __pow__(self, n):
        return AlgElem(self.owner, self.owner.power(self.coords, n))

    def __eq__(self, other):
        return isinstance(other, AlgElem) and self.owner is other.owner and self.coords == other.coords

    def __hash__(self):
        return hash((id(self.owner), self.coords))

    def __repr__(self):
        return f"AlgElem{self.coords}"


# ---------------------------------------------------------------------------
# subspaces, subalgebras, ideals
# ---------------------------------------------------------------------------

class Subspace:
    """Subspace of an Algebra, held as a reduced-echelon basis."""

    def __init__(self, owner, rows):
        self.owner = owner
        red, pivots = rref(rows, owner.p)
        self.rows = red
        self.pivots = pivots

    @property
    def dim(self):
        return len(self.rows)

    def contains(self, vec):
        res, _ = reduce_vector(vec, self.rows, self.pivots, self.owner.p)
        return vec_is_zero(res)

    def coords_of(self, vec):
        res, coeffs = reduce_vector(vec, self.rows, self.pivots, self.owner.p)
        if not vec_is_zero(res):
            raise ValueError("vector not in subspace")
        return coeffs

    def vectors(self):
        """All vectors of the subspace (p^dim of them)."""
        p = self.owner.p
        for coeffs in all_vectors(p, self.dim):
            v = tuple(0 for _ in range(self.owner.dim))
            for c, row in zip(coeffs, self.rows):
                if c:
                    v = vec_add(v, vec_scale(c, row, p), p)
            yield v

    def sum_with(self, other):
        return Subspace(self.owner, self.rows + other.rows)

    def intersect(self, other):
        p = self.owner.p
        k, l = self.dim, other.dim
        if k == 0 or l == 0:
            return Subspace(self.owner, ())
        # left kernel of [[U],[-W]]: rows y with y[:k] U = y[k:] W
        stacked = [list(r) for r in self.rows] + [[(-x) % p for x in r] for r in other.rows]
        transposed = [[stacked[i][j] for i in range(k + l)] for j in range(self.owner.dim)]
        ker = kernel_basis(transposed, k + l, p)
        rows = []
        for y in ker:
            v = tuple(0 for _ in range(self.owner.dim))
            for c, row in zip(y[:k], self.rows):
                if c:
                    v = vec_add(v, vec_scale(c, row, p), p)
            rows.append(v)
        return Subspace(self.owner, rows)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.owner is other.owner
                and self.rows == other.rows)

    def __hash__(self):
        return hash((id(self.owner), self.rows))

    def __repr__(self):
        return f"{type(self).__name__}(dim={self.dim})"


class Subalgebra(Subspace):
    """Unital multiplicatively closed subspace; closure certified at construction."""

    def __init__(self, owner, rows):
        super().__init__(owner, rows)
        self.contains_one = self.contains(owner.one)
        self.mult_closed = all(
            self.contains(owner.mul(u, v)) for u in self.rows for v in self.rows
        )
        if not self.contains_one:
            raise SpecError("subalgebra must contain the identity")
        if not self.mult_closed:
            raise SpecError("subspace is not multiplicatively closed")
        self.idempotents = None  # set by basic_decomposition for the diagonal


class Ideal(Subspace):
    """Two-sided ideal; closure under ambient multiplication certified."""

    def __init__(self, owner, rows):
        super().__init__(owner, rows)
        self.left_closed = True
        self.right_closed = True
        for i in range(owner.dim):
            b = owner.basis_vector(i)
            for v in self.rows:
                if not self.contains(owner.mul(b, v)):
                    self.left_closed = False
                if not self.contains(owner.mul(v, b)):
                    self.right_closed = False
        if not (self.left_closed and self.right_closed):
            raise SpecError("subspace is not a two-sided ideal")


class BasicDecomposition:
    """Orthogonal idempotents e_1..e_n, diagonal subalgebra D, radical J."""

    def __init__(self, algebra, idempotents, diagonal, radical):
        self.algebra = algebra
        self.idempotents = idempotents
        self.diagonal = diagonal
        self.radical = radical

    @property
    def n(self):
        return len(self.idempotents)


# ---------------------------------------------------------------------------
# radical / split-basic certification
# ---------------------------------------------------------------------------

def _nilpotent_span(A):
    """(rows of span of nilpotents, True iff the nilpotent set is a subspace)."""
    nil = [v for v in A.elements() if A.is_nilpotent(v)]
    red, _ = rref(nil, A.p)
    return red, len(nil) == A.p ** len(red)


def _quotient_algebra(A, ideal_rows, ideal_pivots):
    """Quotient A / I on the section spanned by the non-pivot coordinates.

    Returns (Q, section) where section maps Q-coordinates back to canonical
    representatives in A (zero at the pivot coordinates of I).
    """
    free = [c for c in range(A.dim) if c not in set(ideal_pivots)]
    qdim = len(free)

    def project(vec):
        res, _ = reduce_vector(vec, ideal_rows, ideal_pivots, A.p)
        return tuple(res[c] for c in free)

    def section(qvec):
        out = [0] * A.dim
        for c, x in zip(free, qvec):
            out[c] = x % A.p
        return tuple(out)

    sc = []
    for i in range(qdim):
        plane = []
        bi = section(tuple(1 if t == i else 0 for t in range(qdim)))
        for j in range(qdim):
            bj = section(tuple(1 if t == j else 0 for t in range(qdim)))
            plane.append(list(project(A.mul(bi, bj))))
        sc.append(plane)
    Q = Algebra(A.p, sc, project(A.one))
    return Q, section, project


def _primitive_idempotents(A):
    """All primitive idempotents of a (small) commutative algebra, by scan."""
    idems = [v for v in A.elements() if A.mul(v, v) == v]
    prims = []
    for e in idems:
        if vec_is_zero(e):
            continue
        below = [f for f in idems if A.mul(e, f) == f and A.mul(f, e) == f]
        if len(below) == 2:  # exactly 0 and e itself
            prims.append(e)
    prims.sort(reverse=True)
    return prims


def _split_basic_analysis(A):
    """Radical rows plus the split certificate, or a failure reason."""
    span, is_subspace = _nilpotent_span(A)
    if not is_subspace:
        return None, "nilpotent set is not a subspace"
    rows, pivots = span, tuple()
    rows, pivots = rref(span, A.p)
    for i in range(A.dim):
        b = A.basis_vector(i)
        for v in rows:
            lres, _ = reduce_vector(A.mul(b, v), rows, pivots, A.p)
            rres, _ = reduce_vector(A.mul(v, b), rows, pivots, A.p)
            if not (vec_is_zero(lres) and vec_is_zero(rres)):
                return None, "nilpotent subspace is not an ideal"
    Q, section, project = _quotient_algebra(A, rows, pivots)
    for i in range(Q.dim):
        for j in range(i + 1, Q.dim):
            bi, bj = Q.basis_vector(i), Q.basis_vector(j)
            if Q.mul(bi, bj) != Q.mul(bj, bi):
                return None, "semisimple quotient is not commutative"
    prims = _primitive_idempotents(Q)
    if len(prims) != Q.dim:
        return None, "semisimple quotient is not split (wrong idempotent count)"
    total = tuple(0 for _ in range(Q.dim))
    for e in prims:
        for f in prims:
            if e != f and not vec_is_zero(Q.mul(e, f)):
                return None, "quotient idempotents not orthogonal"
        total = vec_add(total, e, Q.p)
    if total != Q.one:
        return None, "quotient idempotents do not sum to 1"
    return {
        "radical_rows": rows,
        "radical_pivots": pivots,
        "quotient": Q,
        "section": section,
        "project": project,
        "quotient_idempotents": prims,
    }, None


def radical(A: Algebra) -> Ideal:
    """The Jacobson radical: the set of nilpotent elements, certified as an ideal.

    Raises NotSplitBasic when the nilpotent set is not a subspace or the
    semisimple quotient is not split.
    """
    data, reason = _split_basic_analysis(A)
    if data is None:
        raise NotSplitBasic(reason)
    return Ideal(A, data["radical_rows"])


def is_split_basic(A) -> tuple[bool, str]:
    """(verdict, reason). Accepts an Algebra or a certified Subalgebra."""
    if isinstance(A, Subalgebra):
        A = EmbeddedAlgebra(A.owner, A.rows).alg
    data, reason = _split_basic_analysis(A)
    return (data is not None), (reason or "split basic")


def _lift_idempotent(A, a, steps):
    # Newton iteration e -> 3e^2 - 2e^3 converges modulo nilpotents in any char
    e = a
    for _ in range(steps):
        e2 = A.mul(e, e)
        if e2 == e:
            return e
        e3 = A.mul(e2, e)
        e = vec_sub(vec_scale(3, e2, A.p), vec_scale(2, e3, A.p), A.p)
    if A.mul(e, e) != e:
        raise NotSplitBasic("idempotent lifting did not converge")
    return e


def basic_decomposition(A: Algebra) -> BasicDecomposition:
    """Orthogonal idempotents summing to 1, the diagonal D and radical J, certified."""
    data, reason = _split_basic_analysis(A)
    if data is None:
        raise NotSplitBasic(reason)
    section = data["section"]
    steps = (A.dim - 1).bit_length() + 2
    idems = []
    s = tuple(0 for _ in range(A.dim))
    for ebar in data["quotient_idempotents"]:
        a = section(ebar)
        one_minus_s = vec_sub(A.one, s, A.p)
        a = A.mul(A.mul(one_minus_s, a), one_minus_s)
        e = _lift_idempotent(A, a, steps)
        idems.append(e)
        s = vec_add(s, e, A.p)
    if s != A.one:
        raise NotSplitBasic("lifted idempotents do not sum to 1")
    for i, e in enumerate(idems):
        for j, f in enumerate(idems):
            expect = e if i == j else tuple(0 for _ in range(A.dim))
            if A.mul(e, f) != expect:
                raise NotSplitBasic("lifted idempotents not orthogonal")
    diagonal = Subalgebra(A, idems)
    diagonal.idempotents = tuple(idems)
    rad = Ideal(A, data["radical_rows"])
    if diagonal.dim + rad.dim != A.dim or diagonal.intersect(rad).dim != 0:
        raise NotSplitBasic("A is not the direct sum D + J")
    return BasicDecomposition(A, tuple(idems), diagonal, rad)


@lru_cache(maxsize=None)
def cached_decomposition(A: Algebra) -> BasicDecomposition:
    return basic_decomposition(A)


def radical_power(A: Algebra, n: int) -> Ideal:
    """Span of all n-fold products of radical elements (J^1 = J)."""
    assert n >= 1
    J = radical(A)
    rows = J.rows
    for _ in range(n - 1):
        prods = [A.mul(u, v) for u in rows for v in J.rows]
        rows, _ = rref(prods, A.p)
    return Ideal(A, rows)


# ---------------------------------------------------------------------------
# D-bimodule structure
# ---------------------------------------------------------------------------

def _diagonal_idempotents(D: Subalgebra):
    if D.idempotents is not None:
        return D.idempotents
    sub = EmbeddedAlgebra(D.owner, D.rows)
    prims = _primitive_idempotents(sub.alg)
    return tuple(sub.to_ambient(e) for e in prims)


def _check_bimodule(A, idems, V: Subspace):
    for e in idems:
        for v in V.rows:
            if not (V.contains(A.mul(e, v)) and V.contains(A.mul(v, e))):
                raise NotBimodule("subspace not closed under the idempotent action")


def bimodule_decompose(D: Subalgebra, V: Subspace):
    """Homogeneous components e_i V e_j of a D-bimodule V.

    Returns [(i, j, Subspace)] for the nonzero components, ordered by (i, j).
    Every subspace of a homogeneous component is itself a sub-bimodule, so the
    rows of each component give its refinement into one-dimensional pieces.
    """
    A = D.owner
    idems = _diagonal_idempotents(D)
    _check_bimodule(A, idems, V)
    comps = []
    total = 0
    for i, ei in enumerate(idems):
        for j, ej in enumerate(idems):
            rows = [A.mul(ei, A.mul(v, ej)) for v in V.rows]
            comp = Subspace(A, rows)
            if comp.dim:
                comps.append((i, j, comp))
                total += comp.dim
    assert total == V.dim, "homogeneous components do not exhaust V"
    return comps


def bimodule_complement(D: Subalgebra, V: Subspace, V1: Subspace) -> Subspace:
    """A sub-bimodule V2 with V = V1 (+) V2, built inside homogeneous components."""
    A = D.owner
    idems = _diagonal_idempotents(D)
    _check_bimodule(A, idems, V)
    _check_bimodule(A, idems, V1)
    for v in V1.rows:
        if not V.contains(v):
            raise NotBimodule("V1 is not contained in V")
    rows = list(V1.rows)
    comp_rows = []
    for _, _, comp in bimodule_decompose(D, V):
        for v in comp.rows:
            cur, _ = rref(rows, A.p)
            cur_s = Subspace(A, cur)
            if not cur_s.contains(v):
                rows.append(v)
                comp_rows.append(v)
    V2 = Subspace(A, comp_rows)
    assert V1.dim + V2.dim == V.dim and V1.intersect(V2).dim == 0
    return V2


def largest_ideal_inside(A: Algebra, X: Subspace) -> Subspace:
    """The unique maximal two-sided ideal of A contained in X.

    Equals the sum of all ideals contained in X; computed by shrinking X to
    the fixpoint of the linear conditions b*v, v*b in current for all basis b.
    """
    cur = X
    while True:
        keep = []
        for coeffs in _kernel_of_escape(A, cur):
            v = tuple(0 for _ in range(A.dim))
            for c, row in zip(coeffs, cur.rows):
                if c:
                    v = vec_add(v, vec_scale(c, row, A.p), A.p)
            keep.append(v)
        nxt = Subspace(A, keep)
        if nxt.dim == cur.dim:
            return nxt
        cur = nxt


def _kernel_of_escape(A, cur):
    """Coefficient vectors c with both b*(c.rows) and (c.rows)*b inside cur."""
    if cur.dim == 0:
        return []
    rows = []
    for b_idx in range(A.dim):
        b = A.basis_vector(b_idx)
        for prod in (lambda v: A.mul(b, v), lambda v: A.mul(v, b)):
            images = [prod(v) for v in cur.rows]
            residues = [reduce_vector(w, cur.rows, cur.pivots, A.p)[0] for w in images]
            for c in range(A.dim):
                rows.append([res[c] for res in residues])
    ker = kernel_basis(rows, cur.dim, A.p)
    return list(ker)


# ---------------------------------------------------------------------------
# subalgebra enumeration
# ---------------------------------------------------------------------------

def _closure_rows(A, rows):
    """Smallest unital multiplicatively closed subspace containing the rows."""
    cur, pivots = rref(tuple(rows) + (A.one,), A.p)
    while True:
        extra = []
        for u in cur:
            for v in cur:
                w = A.mul(u, v)
                res, _ = reduce_vector(w, cur, pivots, A.p)
                if not vec_is_zero(res):
                    extra.append(w)
        if not extra:
            return cur
        cur, pivots = rref(tuple(cur) + tuple(extra), A.p)


def _coset_directions(A, rows, pivots):
    """Canonical nonzero coset representatives of A / span(rows), leading coeff 1."""
    free = [c for c in range(A.dim) if c not in set(pivots)]
    for coeffs in all_vectors(A.p, len(free)):
        nz = next((x for x in coeffs if x), None)
        if nz != 1:
            continue
        v = [0] * A.dim
        for c, x in zip(free, coeffs):
            v[c] = x
        yield tuple(v)


def enumerate_subalgebras(A: Algebra, max_dim=None, budget=None):
    """All unital multiplicatively closed subspaces of A.

    Lattice walk: start at span{1}, repeatedly extend a known subalgebra by one
    coset direction and complete the multiplicative closure; dedupe by echelon
    normal form. Output sorted by dimension, then lexicographic echelon basis.
    """
    bound = max_dim if max_dim is not None else DEFAULT_DIM_BOUND[A.p]
    if A.dim > bound:
        raise TooLarge(f"dim {A.dim} exceeds subalgebra scan bound {bound} for p={A.p}")
    budget = budget if budget is not None else DEFAULT_SCAN_BUDGET
    start = _closure_rows(A, ())
    found = {start}
    queue = [start]
    spent = 0
    while queue:
        rows = queue.pop()
        pivots = tuple(next(c for c, x in enumerate(r) if x) for r in rows)
        for d in _coset_directions(A, rows, pivots):
            spent += 1
            if spent > budget:
                raise TooLarge(f"subalgebra scan budget {budget} exhausted")
            closed = _closure_rows(A, rows + (d,))
            if closed not in found:
                found.add(closed)
                if len(closed) < A.dim:
                    queue.append(closed)
    out = [Subalgebra(A, rows) for rows in found]
    out.sort(key=lambda s: (s.dim, s.rows))
    return out


# ---------------------------------------------------------------------------
# subalgebras as standalone algebras
# ---------------------------------------------------------------------------

class EmbeddedAlgebra:
    """A unital closed subspace of an ambient algebra, rebased on its own basis.

    Provides the standalone Algebra (for radical/idempotent work) together
    with the coordinate maps between local and ambient presentations.
    """

    def __init__(self, ambient: Algebra, rows):
        self.ambient = ambient
        red, pivots = rref(rows, ambient.p)
        self.rows = red
        self.pivots = pivots
        k = len(red)
        sc = []
        for u in red:
            plane = []
            for v in red:
                w = ambient.mul(u, v)
                res, coeffs = reduce_vector(w, red, pivots, ambient.p)
                if not vec_is_zero(res):
                    raise SpecError("subspace is not multiplicatively closed")
                plane.append(list(coeffs))
            sc.append(plane)
        res, one_coeffs = reduce_vector(ambient.one, red, pivots, ambient.p)
        if not vec_is_zero(res):
            raise SpecError("subspace does not contain the identity")
        self.alg = Algebra(ambient.p, sc, one_coeffs)
        self.dim = k

    def to_ambient(self, local):
        p = self.ambient.p
        v = tuple(0 for _ in range(self.ambient.dim))
        for c, row in zip(local, self.rows):
            if c:
                v = vec_add(v, vec_scale(c, row, p), p)
        return v

    def to_local(self, vec):
        res, coeffs = reduce_vector(vec, self.rows, self.pivots, self.ambient.p)
        if not vec_is_zero(res):
            raise ValueError("vector not in the subalgebra")
        return coeffs

    def subspace_to_ambient(self, sub: Subspace) -> Subspace:
        return Subspace(self.ambient, [self.to_ambient(r) for r in sub.rows])


# ---------------------------------------------------------------------------
# spec ingestion and named families
# ---------------------------------------------------------------------------

def pattern_algebra(p, n, closed_pairs) -> Algebra:
    """Pattern subalgebra of B_n(F_p): span of {e_ii} and {e_ij : (i,j) closed}.

    closed_pairs must satisfy i < j and be transitively closed.
    """
    if not isinstance(n, int) or n < 1:
        raise SpecError(f"pattern size must be a positive integer, got {n}")
    pairs = []
    for pair in closed_pairs:
        if len(pair) != 2:
            raise SpecError(f"closed pair {pair} must have two entries")
        i, j = int(pair[0]), int(pair[1])
        if not (1 <= i < j <= n):
            raise SpecError(f"closed pair ({i},{j}) must satisfy 1 <= i < j <= {n}")
        if (i, j) in pairs:
            raise SpecError(f"duplicate closed pair ({i},{j})")
        pairs.append((i, j))
    pair_set = set(pairs)
    for (i, j) in pairs:
        for (k, l) in pairs:
            if j == k and (i, l) not in pair_set:
                raise SpecError(f"closed_pairs not transitively closed: ({i},{j})*({k},{l}) needs ({i},{l})")
    basis = [(i, i) for i in range(1, n + 1)] + sorted(pairs)
    index = {b: t for t, b in enumerate(basis)}
    dim = len(basis)
    sc = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
    for t1, (a, b) in enumerate(basis):
        for t2, (c, d) in enumerate(basis):
            if b == c:
                sc[t1][t2][index[(a, d)]] = 1
    one = [0] * dim
    for i in range(1, n + 1):
        one[index[(i, i)]] = 1
    labels = [f"e{i}{j}" for (i, j) in basis]
    return Algebra(p, sc, one, labels)


def borel_algebra(p, n) -> Algebra:
    """Upper-triangular n x n matrices over F_p."""
    return pattern_algebra(p, n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def diagonal_algebra(p, n) -> Algebra:
    """Diagonal n x n matrices over F_p (semisimple split)."""
    return pattern_algebra(p, n, [])


def algebra_from_spec(spec: dict) -> Algebra:
    """Build an Algebra from the JSON ingestion format.

    Either {"p", "dim", "one", "sc", "labels"?} with explicit structure
    constants, or {"p", "pattern": {"n", "closed_pairs"}}.
    """
    if not isinstance(spec, dict):
        raise SpecError("algebra spec must be a JSON object")
    if "p" not in spec:
        raise SpecError("algebra spec missing field 'p'")
    p = spec["p"]
    if "pattern" in spec:
        pat = spec["pattern"]
        if not isinstance(pat, dict) or "n" not in pat or "closed_pairs" not in pat:
            raise SpecError("pattern spec needs fields 'n' and 'closed_pairs'")
        return pattern_algebra(p, pat["n"], pat["closed_pairs"])
    for field in ("dim", "one", "sc"):
        if field not in spec:
            raise SpecError(f"algebra spec missing field '{field}'")
    sc = spec["sc"]
    if len(sc) != spec["dim"]:
        raise SpecError("field 'dim' disagrees with the sc tensor")
    return Algebra(p, sc, spec["one"], spec.get("labels"))
