"""Independent oracles used by the tests: these deliberately avoid the code
paths they are checking (plain subspace enumeration instead of the lattice
walk, all-pairs conjugation instead of the generator BFS, and so on)."""

from itertools import combinations, product

from brw.algebra import vec_add, vec_scale
from brw.exact import rref


def echelon_subspaces(p, n, k):
    """All k-dimensional subspaces of F_p^n, one RREF basis each."""
    if k == 0:
        yield ()
        return
    for pivots in combinations(range(n), k):
        free_pos = []
        for i, c in enumerate(pivots):
            for j in range(c + 1, n):
                if j not in pivots:
                    free_pos.append((i, j))
        for vals in product(range(p), repeat=len(free_pos)):
            rows = [[0] * n for _ in range(k)]
            for i, c in enumerate(pivots):
                rows[i][c] = 1
            for (i, j), v in zip(free_pos, vals):
                rows[i][j] = v
            yield tuple(tuple(r) for r in rows)


def subspaces_containing_one(A):
    """All subspaces of A that contain the identity, via the quotient by <1>."""
    one_red, one_piv = rref([A.one], A.p)
    c0 = one_piv[0]
    free = [c for c in range(A.dim) if c != c0]
    q = A.dim - 1
    for k in range(q + 1):
        for qrows in echelon_subspaces(A.p, q, k):
            rows = [A.one]
            for r in qrows:
                v = [0] * A.dim
                for c, x in zip(free, r):
                    v[c] = x
                rows.append(tuple(v))
            red, _ = rref(rows, A.p)
            yield red


def is_closed_unital(A, rows):
    red, piv = rref(rows, A.p)
    from brw.exact import reduce_vector
    from brw.algebra import vec_is_zero
    res, _ = reduce_vector(A.one, red, piv, A.p)
    if not vec_is_zero(res):
        return False
    for u in red:
        for v in red:
            r, _ = reduce_vector(A.mul(u, v), red, piv, A.p)
            if not vec_is_zero(r):
                return False
    return True


def recount_subalgebras(A):
    """Order-agnostic recount of the unital closed subspaces of A."""
    return {rows for rows in subspaces_containing_one(A) if is_closed_unital(A, rows)}


def brute_conj_partition(G):
    """Conjugacy partition by all-pairs conjugation (no generator BFS)."""
    A = G.algebra
    inv = {v: G.elements[G.inv_id(i)] for i, v in enumerate(G.elements)}
    classes = []
    seen = set()
    for x in G.elements:
        if x in seen:
            continue
        orbit = {A.mul(A.mul(g, x), inv[g]) for g in G.elements}
        seen |= orbit
        classes.append(frozenset(orbit))
    return set(classes)


def subspace_vectors(A, rows):
    out = []
    for coeffs in product(range(A.p), repeat=len(rows)):
        v = tuple(0 for _ in range(A.dim))
        for c, r in zip(coeffs, rows):
            if c:
                v = vec_add(v, vec_scale(c, r, A.p), A.p)
        out.append(v)
    return out
