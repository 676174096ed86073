"""Projective-linear involutions of P^n and their action on spaces of forms.

A nontrivial involution of P^n fixes exactly two complementary linear
subspaces (its base spaces).  After scaling, its matrix M satisfies M^2 = I,
the +1 eigenspace is s1 and the -1 eigenspace is s2.  The induced map on
degree-2 forms splits the quadrics into two eigenspaces:

* eigenvalue -1, the *base* quadrics, those containing both base spaces;
* eigenvalue +1, the *harmonic* quadrics, those for which the base spaces
  are mutually polar.

A subspace of quadrics fixed by the induced involution therefore decomposes
as (base part) + (harmonic part); ``decompose_system`` computes that split
exactly and reports whether it is complete.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .forms import (MultiPoly, VarBlocks, apply_linear, coeff_vector,
                    monomial_basis, poly_from_coeff_vector,
                    proportionality_scalar)
from .geom import AMBIENT_BLOCK, ParamVariety, ambient_form_space
from .qfield import (RatMatrix, Subspace, intersect, inverse, kernel,
                     rational_square_root, subspace_sum)


@dataclass(frozen=True)
class Involution:
    """A projective involution with normalized matrix and its base spaces."""

    ambient_dim: int
    matrix: RatMatrix
    s1: Subspace
    s2: Subspace

    def base_spaces(self):
        return (self.s1, self.s2)

    def to_json(self) -> dict:
        return {
            "matrix": [[str(e) for e in self.matrix.row(i)]
                       for i in range(self.matrix.rows)],
            "s1_dim": self.s1.dim,
            "s2_dim": self.s2.dim,
        }


class QuadricClass(enum.Enum):
    BASE = "base"
    HARMONIC = "harmonic"
    NEITHER = "neither"


@dataclass(frozen=True)
class DecompReport:
    """Result of splitting a quadric system into base and harmonic parts."""

    sigma_dim: int
    base_part: Subspace
    harmonic_part: Subspace
    is_base_harmonic: bool
    base_count: int
    harmonic_count: int
    var_name: str = AMBIENT_BLOCK

    def basis_strings(self, part: Subspace) -> list:
        n_plus_1 = _quadric_space_vars(part.ambient_dim)
        fs = monomial_basis(VarBlocks.single(self.var_name, n_plus_1), (2,))
        return [poly_from_coeff_vector(fs, row).to_string()
                for row in part.basis_vectors()]

    def to_json(self) -> dict:
        return {
            "sigma_dim": self.sigma_dim,
            "base_count": self.base_count,
            "harmonic_count": self.harmonic_count,
            "is_base_harmonic": self.is_base_harmonic,
            "base_basis": self.basis_strings(self.base_part),
            "harmonic_basis": self.basis_strings(self.harmonic_part),
        }


def _quadric_space_vars(space_dim: int) -> int:
    """Recover n+1 from dim of the quadric space C(n+2, 2)."""
    n_plus_1 = 1
    while n_plus_1 * (n_plus_1 + 1) // 2 < space_dim:
        n_plus_1 += 1
    if n_plus_1 * (n_plus_1 + 1) // 2 != space_dim:
        raise ValueError(f"{space_dim} is not the dimension of a quadric space")
    return n_plus_1


def from_matrix(m: RatMatrix) -> Involution:
    """Build an involution from any matrix with m^2 a nonzero scalar.

    The matrix is rescaled so that it squares to the identity (this requires
    the scalar to be the square of a rational); scalar input matrices are
    rejected because they act trivially on P^n.
    """
    if not m.is_square or m.rows < 2:
        raise ValueError("involution matrix must be square of size >= 2")
    lam = m.mul(m).is_scalar_multiple_of_identity()
    if lam is None or lam == 0:
        raise ValueError("matrix squared is not a nonzero multiple of the identity")
    c = rational_square_root(lam)
    if c is None:
        raise ValueError(
            f"matrix squares to {lam} * identity, which is not a rational square")
    mm = m.scale(Fraction(1) / c)
    if mm.is_scalar_multiple_of_identity() is not None:
        raise ValueError("scalar matrix defines the trivial involution")
    n = m.rows - 1
    ident = RatMatrix.identity(n + 1)
    s1 = kernel(mm.sub(ident))
    s2 = kernel(mm.add(ident))
    return Involution(n, mm, s1, s2)


def from_base_spaces(s1: Subspace, s2: Subspace) -> Involution:
    """The involution fixing s1 pointwise with +1 and s2 with -1.

    The two spaces must be complementary (sum everything, intersection zero)
    and both nonzero; a zero space would make the involution trivial.
    """
    if s1.ambient_dim != s2.ambient_dim:
        raise ValueError("base spaces in different ambient spaces")
    n1 = s1.ambient_dim
    if s1.dim == 0 or s2.dim == 0:
        raise ValueError("base spaces must be nonzero (trivial involution)")
    if s1.dim + s2.dim != n1 or subspace_sum(s1, s2).dim != n1:
        raise ValueError("base spaces are not complementary")
    cols = s1.basis_vectors() + s2.basis_vectors()
    p = RatMatrix.from_rows(cols).transpose()
    d = RatMatrix.diagonal([1] * s1.dim + [-1] * s2.dim)
    m = p.mul(d).mul(inverse(p))
    return Involution(n1 - 1, m, s1, s2)


def induced_on_forms(inv: Involution, d: int,
                     name: str = AMBIENT_BLOCK) -> RatMatrix:
    """Matrix of the pullback on degree-d forms, in the canonical basis.

    Column j holds the coefficients of the image of the j-th basis monomial;
    the result squares to the identity.
    """
    if d < 1:
        raise ValueError("degree must be >= 1")
    fs = ambient_form_space(inv.ambient_dim, d, name)
    cols = []
    for i in range(fs.dim):
        image = apply_linear(fs.monomial_poly(i), inv.matrix, name)
        cols.append(coeff_vector(image, fs))
    rows = [[cols[j][i] for j in range(fs.dim)] for i in range(fs.dim)]
    return RatMatrix.from_rows(rows)


def classify_quadric(inv: Involution, q: MultiPoly) -> QuadricClass:
    """Classify a quadric as base, harmonic, or neither.

    With the matrix normalized to eigenvalues +-1, a base quadric pulls back
    to its negative and a harmonic quadric is literally fixed.
    """
    vb = q.var_blocks
    if vb.n_blocks != 1 or vb.total_vars != inv.ambient_dim + 1:
        raise ValueError("quadric is not written on the ambient coordinates")
    if q.is_zero() or q.multidegree() != (2,):
        raise ValueError("expected a nonzero quadric")
    image = apply_linear(q, inv.matrix, vb.blocks[0][0])
    if image == -q:
        return QuadricClass.BASE
    if image == q:
        return QuadricClass.HARMONIC
    return QuadricClass.NEITHER


def eigenspaces_on_forms(inv: Involution, d: int):
    """(+1 eigenspace, -1 eigenspace) of the induced map on degree-d forms."""
    phi = induced_on_forms(inv, d)
    ident = RatMatrix.identity(phi.rows)
    return kernel(phi.sub(ident)), kernel(phi.add(ident))


def decompose_system(inv: Involution, sigma: Subspace,
                     var_name: str = AMBIENT_BLOCK) -> DecompReport:
    """Split a system of quadrics into its base and harmonic parts.

    The system is base-harmonic exactly when the two parts together span it,
    i.e. when it is stable under the induced involution.
    """
    fs = ambient_form_space(inv.ambient_dim, 2, var_name)
    if sigma.ambient_dim != fs.dim:
        raise ValueError(
            f"system lives in a space of dimension {sigma.ambient_dim}, "
            f"expected the quadric space of dimension {fs.dim}")
    harmonic_eig, base_eig = eigenspaces_on_forms(inv, 2)
    base_part = intersect(sigma, base_eig)
    harmonic_part = intersect(sigma, harmonic_eig)
    return DecompReport(
        sigma_dim=sigma.dim,
        base_part=base_part,
        harmonic_part=harmonic_part,
        is_base_harmonic=base_part.dim + harmonic_part.dim == sigma.dim,
        base_count=base_part.dim,
        harmonic_count=harmonic_part.dim,
        var_name=var_name,
    )


def check_param_invariance(x: ParamVariety, inv: Involution,
                           eta: dict) -> bool:
    """Exact invariance of a parametrized variety under an involution.

    ``eta`` maps each parameter block name to the matrix of an involution of
    that block.  Returns True iff applying the ambient matrix to the
    coordinate tuple equals one nonzero rational scalar times the tuple
    composed with eta, as polynomials.
    """
    if inv.ambient_dim != x.ambient_dim:
        raise ValueError("involution ambient does not match variety ambient")
    names = set(x.param_blocks.block_names())
    if set(eta) != names:
        raise ValueError(f"eta must assign a matrix to each block in {sorted(names)}")
    for name, mat in eta.items():
        size = x.param_blocks.block_size(name)
        if not (mat.is_square and mat.rows == size):
            raise ValueError(f"eta matrix for block {name!r} has the wrong size")
        lam = mat.mul(mat).is_scalar_multiple_of_identity()
        if lam is None or lam == 0:
            raise ValueError(f"eta for block {name!r} is not an involution")
    transformed = []
    for p in x.coords:
        q = p
        for name in x.param_blocks.block_names():
            q = apply_linear(q, eta[name], name)
        transformed.append(q)
    m = inv.matrix
    scalar = None
    for i in range(len(x.coords)):
        lhs = MultiPoly.zero(x.param_blocks)
        for j, p in enumerate(x.coords):
            c = m.get(i, j)
            if c and not p.is_zero():
                lhs = lhs + p * c
        rhs = transformed[i]
        if lhs.is_zero() and rhs.is_zero():
            continue
        c = proportionality_scalar(lhs, rhs)
        if c is None or c == 0:
            return False
        if scalar is None:
            scalar = c
        elif scalar != c:
            return False
    return scalar is not None
