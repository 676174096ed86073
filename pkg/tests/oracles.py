"""Independent recomputations used to pin expected dimensions.

Everything here goes through sympy (symbolic expansion plus exact ranks over
the rationals) and never touches the package's own linear algebra, so the
numbers frozen into the tests are confirmed by a second, unrelated engine.
"""

from itertools import combinations_with_replacement
from math import comb

import sympy as sp


def _coeff_columns(exprs, syms):
    """Each expression as a dict {parameter monomial: coefficient}."""
    cols = []
    for e in exprs:
        e = sp.expand(e)
        if e == 0:
            cols.append({})
        else:
            cols.append(dict(sp.Poly(e, *syms).terms()))
    return cols


def _rank_of_columns(cols):
    monoms = sorted({m for c in cols for m in c})
    if not monoms:
        return 0
    mat = sp.Matrix([[c.get(m, 0) for c in cols] for m in monoms])
    return mat.rank()


def degree_d_products(coords, d):
    """Products of d coordinates, one per monomial of degree d (multisets)."""
    return [sp.prod([coords[i] for i in combo])
            for combo in combinations_with_replacement(range(len(coords)), d)]


def vanishing_ideal_dim(coords, syms, d):
    """Dimension of degree-d forms vanishing along the parametrization."""
    prods = degree_d_products(coords, d)
    return len(prods) - _rank_of_columns(_coeff_columns(prods, syms))


def preimage_dim(map_exprs, multiple_exprs, syms):
    """dim {v : (linear combination with coeffs v of map_exprs) lies in the
    span of multiple_exprs}, computed purely from two sympy ranks."""
    a_cols = _coeff_columns(map_exprs, syms)
    w_cols = _coeff_columns(multiple_exprs, syms)
    return (len(map_exprs) - _rank_of_columns(a_cols + w_cols)
            + _rank_of_columns(w_cols))


def canonical_ideal_dim(embedding, syms, d, curve=None, cofactors=()):
    """Degree-d forms on the embedding space vanishing on the curve model.

    ``embedding`` are the embedding monomials as sympy expressions,
    ``curve`` the curve equation and ``cofactors`` the monomials whose
    curve multiples land in the target degree (empty when none do).
    """
    prods = degree_d_products(embedding, d)
    multiples = [sp.expand(curve * c) for c in cofactors] if curve is not None else []
    return preimage_dim(prods, multiples, syms)


def span_intersection_dim(vectors_a, vectors_b):
    """dim(span A ∩ span B) via dim A + dim B - dim(A + B), exact ranks."""
    a = sp.Matrix(vectors_a) if vectors_a else None
    b = sp.Matrix(vectors_b) if vectors_b else None
    if a is None or b is None:
        return 0
    ra = a.rank()
    rb = b.rank()
    rs = sp.Matrix(vectors_a + vectors_b).rank()
    return ra + rb - rs


def quadric_nullspace_vectors(coords, syms):
    """Basis vectors (as coefficient rows over the degree-2 products) of the
    quadrics vanishing along the parametrization."""
    prods = degree_d_products(coords, 2)
    cols = _coeff_columns(prods, syms)
    monoms = sorted({m for c in cols for m in c})
    mat = sp.Matrix([[c.get(m, 0) for c in cols] for m in monoms])
    return [list(v) for v in mat.nullspace()]


def sign_split_base_count(coords, syms, signs):
    """Number of independent vanishing quadrics lying in the -1 eigenspace of
    the diagonal involution with the given coordinate signs."""
    null_vecs = quadric_nullspace_vectors(coords, syms)
    pairs = list(combinations_with_replacement(range(len(coords)), 2))
    minus = []
    for idx, (i, j) in enumerate(pairs):
        if signs[i] * signs[j] == -1:
            v = [0] * len(pairs)
            v[idx] = 1
            minus.append(v)
    flat_null = [[sp.nsimplify(x) for x in v] for v in null_vecs]
    return span_intersection_dim(flat_null, minus)


def binomial(n, k):
    return comb(n, k)
