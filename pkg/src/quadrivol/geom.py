"""Constructors for the classical varieties used throughout the package and
exact computation of the graded pieces of their homogeneous ideals.

A :class:`ParamVariety` is presented by a tuple of multihomogeneous
parametrizing polynomials; ``ideal_piece`` finds every degree-d form on the
ambient space that vanishes identically along the parametrization, by exact
linear algebra on the coefficients of the parameter monomials (no sampling).

Conventions
-----------
* Forms on an ambient P^n are written in one block ``("y", n+1)``.
* Canonical curve models carry their embedding monomials; forms on the
  embedding space P^(genus-1) are written in one block ``("z", genus)``.
* The scroll joining rational normal curves of degrees k <= l is parametrized
  with the shorter directrix block rescaled by u^(l-k) so that every
  coordinate has the same bidegree (l, 1); this reparametrizes the same
  surface away from one generator and leaves every ideal piece unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional, Sequence

from .forms import (FormSpace, Monomial, MultiPoly, VarBlocks, coeff_vector,
                    monomial_basis)
from .qfield import RatMatrix, Subspace, kernel, rat

AMBIENT_BLOCK = "y"
EMBEDDING_BLOCK = "z"


def ambient_form_space(ambient_dim: int, degree: int,
                       name: str = AMBIENT_BLOCK) -> FormSpace:
    """Degree-d forms on P^ambient_dim in one coordinate block."""
    return monomial_basis(VarBlocks.single(name, ambient_dim + 1), (degree,))


@dataclass(frozen=True)
class ParamVariety:
    """A projective variety presented by parametrizing polynomials.

    ``coords`` are ambient_dim + 1 polynomials in the parameter variables,
    all homogeneous of one shared multidegree (individual entries may be
    zero, but not all of them).
    """

    param_blocks: VarBlocks
    ambient_dim: int
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.ambient_dim + 1:
            raise ValueError("need ambient_dim + 1 coordinate polynomials")
        degs = set()
        for p in self.coords:
            if p.var_blocks != self.param_blocks:
                raise ValueError("coordinate over wrong parameter blocks")
            if not p.is_zero():
                d = p.multidegree()
                if d is None:
                    raise ValueError("coordinates must be homogeneous")
                degs.add(d)
        if not degs:
            raise ValueError("all coordinates are zero")
        if len(degs) > 1:
            raise ValueError("coordinates must share one multidegree")

    @property
    def coord_multidegree(self) -> tuple:
        for p in self.coords:
            if not p.is_zero():
                return p.multidegree()
        raise AssertionError("unreachable: validated nonzero")

    def to_descriptor(self) -> dict:
        return {
            "type": "custom",
            "params": {
                "param_blocks": [[n, c] for n, c in self.param_blocks.blocks],
                "ambient_dim": self.ambient_dim,
            },
            "coords": [p.to_string() for p in self.coords],
        }


@dataclass(frozen=True)
class CanonicalModel:
    """A canonical curve model on a plane or a quadric surface.

    The curve lives on the ambient surface as ``curve_equation``; the
    canonical embedding into P^(genus-1) is given by ``embedding_basis``,
    an ordered tuple of monomials of one multidegree on the surface.
    """

    curve_equation: MultiPoly
    embedding_basis: tuple
    embedding_multidegree: tuple
    genus: int

    @property
    def surface_blocks(self) -> VarBlocks:
        return self.curve_equation.var_blocks


@dataclass(frozen=True)
class CIVariety:
    """A variety cut out by explicit homogeneous generators in one block."""

    ambient_dim: int
    generators: tuple

    def __post_init__(self):
        if not self.generators:
            raise ValueError("need at least one generator")
        for g in self.generators:
            if g.is_zero() or g.multidegree() is None:
                raise ValueError("generators must be nonzero homogeneous")
            if g.var_blocks.n_blocks != 1:
                raise ValueError("generators must use a single coordinate block")
            if g.var_blocks.total_vars != self.ambient_dim + 1:
                raise ValueError("generator variable count does not match ambient")

    @property
    def block(self) -> VarBlocks:
        return self.generators[0].var_blocks


def rational_normal_curve(n: int) -> ParamVariety:
    """The degree-n embedding of the line, (t^n, t^(n-1)u, ..., u^n) in P^n."""
    if n < 2:
        raise ValueError("rational normal curve needs degree n >= 2")
    vb = VarBlocks.single("t", 2)
    coords = tuple(
        MultiPoly.from_monomial(vb, Monomial((((n - i), i),))) for i in range(n + 1))
    return ParamVariety(vb, n, coords)


def scroll(k: int, l: int) -> ParamVariety:
    """The rational normal scroll of degree k+l in P^(k+l+1).

    Joins directrix curves of degrees k and l lying in complementary
    subspaces; coordinates are listed directrix-by-directrix.  Requires
    1 <= k <= l and k + l >= 3.
    """
    if not (1 <= k <= l and k + l >= 3):
        raise ValueError("scroll needs 1 <= k <= l and k + l >= 3")
    vb = VarBlocks.make(("t", 2), ("a", 2))
    coords = []
    for i in range(k + 1):
        coords.append(MultiPoly.from_monomial(
            vb, Monomial(((k - i, i + l - k), (1, 0)))))
    for j in range(l + 1):
        coords.append(MultiPoly.from_monomial(
            vb, Monomial(((l - j, j), (0, 1)))))
    return ParamVariety(vb, k + l + 1, tuple(coords))


def veronese(n: int) -> ParamVariety:
    """The quadratic Veronese embedding of P^n, one coordinate per degree-2
    monomial in canonical order."""
    if n < 2:
        raise ValueError("veronese needs n >= 2")
    vb = VarBlocks.single("x", n + 1)
    fs = monomial_basis(vb, (2,))
    coords = tuple(fs.monomial_poly(i) for i in range(fs.dim))
    return ParamVariety(vb, fs.dim - 1, coords)


def _power_product(coords: Sequence[MultiPoly], exps: Sequence[int]) -> MultiPoly:
    vb = coords[0].var_blocks
    acc = MultiPoly.constant(vb, 1)
    for p, e in zip(coords, exps):
        if e:
            if p.is_zero():
                return MultiPoly.zero(vb)
            acc = acc * (p ** e)
    return acc


def ideal_piece(x: ParamVariety, d: int,
                name: str = AMBIENT_BLOCK) -> Subspace:
    """The degree-d piece of the homogeneous ideal of x, as a subspace of the
    coefficient space of degree-d forms on the ambient P^n.

    A form vanishes on x iff substituting the parametrization kills every
    parameter monomial, so the piece is the exact kernel of the coefficient
    matrix of those substitutions.
    """
    if d < 1:
        raise ValueError("degree must be >= 1")
    fs = ambient_form_space(x.ambient_dim, d, name)
    cmd = x.coord_multidegree
    target_md = tuple(d * m for m in cmd)
    fs_param = monomial_basis(x.param_blocks, target_md)
    # rows: parameter monomials, cols: ambient monomials
    columns = []
    for mon in fs.basis:
        pullback = _power_product(x.coords, mon.exps[0])
        columns.append(coeff_vector(pullback, fs_param))
    rows = [[columns[c][r] for c in range(fs.dim)] for r in range(fs_param.dim)]
    if not rows:
        return Subspace.full(fs.dim)
    return kernel(RatMatrix.from_rows(rows))


def canonical_model_quintic(f_coeffs: Sequence) -> CanonicalModel:
    """Canonical model of the plane quintic f(x0,x1) - x2^4 x0 = 0.

    ``f_coeffs`` are the six coefficients of the binary quintic f, ordered
    from x0^5 down to x1^5.  The canonical system of a smooth plane quintic
    is cut by the conics, so the embedding basis is the six degree-2
    monomials and the genus is 6.
    """
    coeffs = [rat(c) for c in f_coeffs]
    if len(coeffs) != 6:
        raise ValueError("need exactly 6 coefficients for a binary quintic")
    if not any(coeffs):
        raise ValueError("the binary quintic must be nonzero")
    vb = VarBlocks.single("x", 3)
    curve = MultiPoly.zero(vb)
    for i, c in enumerate(coeffs):
        curve = curve + MultiPoly.from_monomial(
            vb, Monomial(((5 - i, i, 0),)), c)
    curve = curve - MultiPoly.from_monomial(vb, Monomial(((1, 0, 4),)))
    fs = monomial_basis(vb, (2,))
    return CanonicalModel(curve, fs.basis, (2,), 6)


def plane_quintic_model(curve: MultiPoly) -> CanonicalModel:
    """Canonical model of an arbitrary plane quintic (embedding by conics)."""
    vb = curve.var_blocks
    if vb.n_blocks != 1 or vb.total_vars != 3:
        raise ValueError("plane quintic must use one block of 3 variables")
    if curve.is_zero() or curve.multidegree() != (5,):
        raise ValueError("curve must be a nonzero quintic")
    fs = monomial_basis(vb, (2,))
    return CanonicalModel(curve, fs.basis, (2,), 6)


def canonical_model_trigonal(n: int, curve: MultiPoly) -> CanonicalModel:
    """Canonical model of a trigonal curve on a product of two lines.

    The curve has bidegree (n, 3) in blocks ((x,2),(y,2)): it meets each
    fiber x = const in 3 points.  Adjunction makes the canonical system the
    bidegree (n-2, 1) monomials, so the genus is 2(n-1).  Requires n >= 5.
    """
    if n < 5:
        raise ValueError("trigonal model needs n >= 5")
    vb = curve.var_blocks
    if vb.blocks != (("x", 2), ("y", 2)):
        raise ValueError('curve must use blocks (("x",2), ("y",2))')
    if curve.is_zero() or curve.multidegree() != (n, 3):
        raise ValueError(f"curve must be bihomogeneous of bidegree ({n}, 3)")
    fs = monomial_basis(vb, (n - 2, 1))
    return CanonicalModel(curve, fs.basis, (n - 2, 1), 2 * (n - 1))


def canonical_embedding_variety(m: CanonicalModel) -> ParamVariety:
    """The image of the ambient surface under the canonical system, as a
    parametrized variety (the curve constraint is not imposed here)."""
    vb = m.surface_blocks
    coords = tuple(MultiPoly.from_monomial(vb, mon) for mon in m.embedding_basis)
    return ParamVariety(vb, m.genus - 1, coords)


def canonical_ideal_piece(m: CanonicalModel, d: int,
                          name: str = EMBEDDING_BLOCK) -> Subspace:
    """Degree-d forms on P^(genus-1) vanishing on the canonical model.

    A form belongs to the piece iff its pullback along the embedding
    monomials is a multiple of the curve equation (possibly zero).  This is
    the kernel of the multiplication map into forms on the surface, taken
    modulo curve multiples whenever the degrees allow any.
    """
    if d < 2:
        raise ValueError("degree must be >= 2")
    pi = m.genus
    vb = m.surface_blocks
    fs_src = monomial_basis(VarBlocks.single(name, pi), (d,))
    target_md = tuple(d * e for e in m.embedding_multidegree)
    fs_tgt = monomial_basis(vb, target_md)
    emb = [MultiPoly.from_monomial(vb, mon) for mon in m.embedding_basis]
    columns = [coeff_vector(_power_product(emb, mon.exps[0]), fs_tgt)
               for mon in fs_src.basis]
    map_rows = [[columns[c][r] for c in range(fs_src.dim)]
                for r in range(fs_tgt.dim)]
    map_matrix = RatMatrix.from_rows(map_rows)

    curve_md = m.curve_equation.multidegree()
    rem = tuple(t - c for t, c in zip(target_md, curve_md))
    if all(r >= 0 for r in rem):
        fs_rem = monomial_basis(vb, rem)
        w_rows = [coeff_vector(m.curve_equation * fs_rem.monomial_poly(i), fs_tgt)
                  for i in range(fs_rem.dim)]
        multiples = Subspace.from_rows(fs_tgt.dim, w_rows)
    else:
        multiples = Subspace.zero(fs_tgt.dim)
    if multiples.dim == 0:
        return kernel(map_matrix)
    # preimage of the space of curve multiples: functionals vanishing on it,
    # composed with the multiplication map
    ann = multiples.annihilator()
    cond = RatMatrix.from_rows(ann.basis_vectors()).mul(map_matrix)
    return kernel(cond)


def ci_ideal_piece(v: CIVariety, d: int) -> Subspace:
    """Degree-d piece of the ideal generated by the given generators:
    the span of g * (monomials of degree d - deg g)."""
    degs = [g.multidegree()[0] for g in v.generators]
    if d < min(degs):
        raise ValueError("degree below every generator degree")
    fs = monomial_basis(v.block, (d,))
    rows = []
    for g, gd in zip(v.generators, degs):
        if gd > d:
            continue
        fs_cof = monomial_basis(v.block, (d - gd,))
        for i in range(fs_cof.dim):
            rows.append(coeff_vector(g * fs_cof.monomial_poly(i), fs))
    return Subspace.from_rows(fs.dim, rows)


def variety_from_descriptor(desc: dict) -> ParamVariety:
    """Rebuild a parametrized variety from its JSON descriptor."""
    from .forms import poly_from_string

    vtype = desc.get("type")
    params = desc.get("params", {})
    if vtype == "rnc":
        return rational_normal_curve(int(params["n"]))
    if vtype == "scroll":
        return scroll(int(params["k"]), int(params["l"]))
    if vtype == "veronese":
        return veronese(int(params["n"]))
    if vtype == "custom":
        vb = VarBlocks.make(*[(n, c) for n, c in params["param_blocks"]])
        coords = tuple(poly_from_string(vb, s) for s in desc["coords"])
        return ParamVariety(vb, int(params["ambient_dim"]), coords)
    raise ValueError(f"unknown variety type {vtype!r}")


def expected_rnc_quadric_count(n: int) -> int:
    """Quadrics through the degree-n rational normal curve: C(n+2,2)-(2n+1)."""
    return comb(n + 2, 2) - (2 * n + 1)
