"""Sparse multihomogeneous polynomials over Q with named variable blocks.

A polynomial lives over a fixed :class:`VarBlocks` declaration, e.g. one block
``("x", 3)`` for forms on the plane, or two blocks ``("x", 2), ("y", 2)`` for
bihomogeneous forms on a product of two lines.  Variables are named by block
name plus index (``x0, x1, x2``).

Monomial order: within each block, exponent vectors are compared
lexicographically (descending); blocks are compared in declaration order.
Every graded piece gets a deterministic ordered monomial basis
(:class:`FormSpace`), and coefficient vectors of forms are always indexed by
that basis.  For one block of three variables in degree two the order is
``x0^2, x0 x1, x0 x2, x1^2, x1 x2, x2^2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product
from typing import Iterable, Optional, Sequence

from .qfield import RatMatrix, rat

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class VarBlocks:
    """Ordered, named blocks of projective coordinates."""

    blocks: tuple

    def __post_init__(self):
        names = [b[0] for b in self.blocks]
        if len(set(names)) != len(names):
            raise ValueError("duplicate block names")
        if any(n < 1 for _, n in self.blocks):
            raise ValueError("blocks need at least one variable")

    @staticmethod
    def make(*blocks) -> "VarBlocks":
        return VarBlocks(tuple((str(n), int(c)) for n, c in blocks))

    @staticmethod
    def single(name: str, count: int) -> "VarBlocks":
        return VarBlocks.make((name, count))

    @property
    def n_blocks(self) -> int:
        return len(self.blocks)

    @property
    def total_vars(self) -> int:
        return sum(c for _, c in self.blocks)

    def block_names(self) -> tuple:
        return tuple(n for n, _ in self.blocks)

    def block_size(self, name: str) -> int:
        for n, c in self.blocks:
            if n == name:
                return c
        raise KeyError(f"no block named {name!r}")

    def block_index(self, name: str) -> int:
        for i, (n, _) in enumerate(self.blocks):
            if n == name:
                return i
        raise KeyError(f"no block named {name!r}")

    def var_names(self) -> list:
        return [f"{n}{i}" for n, c in self.blocks for i in range(c)]


@dataclass(frozen=True)
class Monomial:
    """One exponent vector per block."""

    exps: tuple

    def __post_init__(self):
        for block in self.exps:
            if any(e < 0 for e in block):
                raise ValueError("negative exponent")

    def degrees(self) -> tuple:
        return tuple(sum(b) for b in self.exps)

    def mul(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(tuple(a + b for a, b in zip(x, y))
                              for x, y in zip(self.exps, other.exps)))

    def sort_key(self):
        flat = tuple(e for block in self.exps for e in block)
        return (self.degrees(), flat)

    def to_string(self, vb: VarBlocks) -> str:
        parts = []
        for (name, _), block in zip(vb.blocks, self.exps):
            factors = []
            for i, e in enumerate(block):
                if e == 1:
                    factors.append(f"{name}{i}")
                elif e > 1:
                    factors.append(f"{name}{i}^{e}")
            parts.append(" ".join(factors) if factors else "1")
        return " ; ".join(parts)


def _exponent_vectors(degree: int, nvars: int):
    """All exponent vectors of the given total degree, descending lex."""
    if nvars == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in _exponent_vectors(degree - first, nvars - 1):
            yield (first,) + rest


@dataclass(frozen=True)
class FormSpace:
    """The space of forms of one multidegree, with its ordered monomial basis."""

    var_blocks: VarBlocks
    multidegree: tuple
    basis: tuple

    @cached_property
    def index(self) -> dict:
        return {m: i for i, m in enumerate(self.basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def monomial_poly(self, i: int) -> "MultiPoly":
        return MultiPoly(self.var_blocks, {self.basis[i]: _ONE})


@lru_cache(maxsize=None)
def monomial_basis(vb: VarBlocks, multidegree: tuple) -> FormSpace:
    """All monomials of the given per-block degrees, in canonical order."""
    multidegree = tuple(int(d) for d in multidegree)
    if len(multidegree) != vb.n_blocks:
        raise ValueError("one degree per block required")
    if any(d < 0 for d in multidegree):
        raise ValueError("degrees must be nonnegative")
    per_block = [list(_exponent_vectors(d, c))
                 for d, (_, c) in zip(multidegree, vb.blocks)]
    basis = tuple(Monomial(combo) for combo in product(*per_block))
    return FormSpace(vb, multidegree, basis)


class MultiPoly:
    """Sparse polynomial over Q in the variables of a VarBlocks declaration.

    Immutable by convention; arithmetic returns new instances and zero
    coefficients are never stored.
    """

    __slots__ = ("var_blocks", "terms")

    def __init__(self, var_blocks: VarBlocks, terms: Optional[dict] = None):
        self.var_blocks = var_blocks
        clean = {}
        if terms:
            sizes = tuple(c for _, c in var_blocks.blocks)
            for mon, coeff in terms.items():
                coeff = rat(coeff)
                if not coeff:
                    continue
                if tuple(len(b) for b in mon.exps) != sizes:
                    raise ValueError("monomial shape does not match blocks")
                clean[mon] = coeff
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(vb: VarBlocks) -> "MultiPoly":
        return MultiPoly(vb)

    @staticmethod
    def constant(vb: VarBlocks, c) -> "MultiPoly":
        mon = Monomial(tuple((0,) * n for _, n in vb.blocks))
        return MultiPoly(vb, {mon: rat(c)})

    @staticmethod
    def variable(vb: VarBlocks, block_name: str, idx: int) -> "MultiPoly":
        bi = vb.block_index(block_name)
        exps = []
        for k, (_, n) in enumerate(vb.blocks):
            e = [0] * n
            if k == bi:
                if not 0 <= idx < n:
                    raise ValueError("variable index out of range")
                e[idx] = 1
            exps.append(tuple(e))
        return MultiPoly(vb, {Monomial(tuple(exps)): _ONE})

    @staticmethod
    def from_monomial(vb: VarBlocks, mon: Monomial, coeff=1) -> "MultiPoly":
        return MultiPoly(vb, {mon: rat(coeff)})

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key(), reverse=True)

    def leading(self):
        """(monomial, coefficient) of the leading term under the order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.sorted_terms()[0]

    def multidegree(self) -> Optional[tuple]:
        """The shared per-block degree tuple, or None if inhomogeneous/zero."""
        degs = {m.degrees() for m in self.terms}
        if len(degs) != 1:
            return None
        return degs.pop()

    def is_homogeneous(self) -> bool:
        return self.is_zero() or self.multidegree() is not None

    def _check_compatible(self, other: "MultiPoly"):
        if self.var_blocks != other.var_blocks:
            raise ValueError("polynomials over different variable blocks")

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.var_blocks, other)
        self._check_compatible(other)
        out = dict(self.terms)
        for mon, c in other.terms.items():
            s = out.get(mon, _ZERO) + c
            if s:
                out[mon] = s
            else:
                out.pop(mon, None)
        return MultiPoly(self.var_blocks, out)

    def __neg__(self):
        return MultiPoly(self.var_blocks, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.var_blocks, other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = rat(other)
            return MultiPoly(self.var_blocks, {m: v * c for m, v in self.terms.items()})
        self._check_compatible(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1.mul(m2)
                s = out.get(m, _ZERO) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return MultiPoly(self.var_blocks, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(self.var_blocks, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __eq__(self, other):
        return (isinstance(other, MultiPoly)
                and self.var_blocks == other.var_blocks
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.var_blocks, frozenset(self.terms.items())))

    def evaluate(self, point: dict) -> Fraction:
        """Evaluate at a point given as {block_name: sequence of rationals}."""
        vals = []
        for name, n in self.var_blocks.blocks:
            v = [rat(x) for x in point[name]]
            if len(v) != n:
                raise ValueError(f"wrong coordinate count for block {name!r}")
            vals.append(v)
        total = _ZERO
        for mon, coeff in self.terms.items():
            acc = coeff
            for bvals, bexps in zip(vals, mon.exps):
                for x, e in zip(bvals, bexps):
                    if e:
                        acc *= x ** e
            total += acc
        return total

    # -- text form -----------------------------------------------------------

    def to_string(self) -> str:
        if not self.terms:
            return "0"
        parts = [f"{c} * {m.to_string(self.var_blocks)}"
                 for m, c in self.sorted_terms()]
        return " + ".join(parts)

    def __repr__(self):
        return f"MultiPoly({self.to_string()})"


def poly_from_string(vb: VarBlocks, s: str) -> MultiPoly:
    """Parse the text form emitted by MultiPoly.to_string.

    Terms are separated by '+', each term is ``coeff * factors`` where the
    factors of successive blocks are separated by ';' and an empty block is
    written '1'.  A bare factor list without 'coeff *' means coefficient 1.
    """
    s = s.strip()
    if s == "0" or not s:
        return MultiPoly.zero(vb)
    var_lookup = []
    for name, n in vb.blocks:
        var_lookup.append({f"{name}{i}": i for i in range(n)})
    result = MultiPoly.zero(vb)
    for term in s.split("+"):
        term = term.strip()
        if not term:
            raise ValueError("empty term in polynomial string")
        if "*" in term:
            coeff_str, _, factors = term.partition("*")
            coeff = Fraction(coeff_str.strip())
        else:
            coeff, factors = _ONE, term
        blocks = [f.strip() for f in factors.split(";")]
        if len(blocks) != vb.n_blocks:
            raise ValueError(
                f"term {term!r} has {len(blocks)} block factor(s), "
                f"expected {vb.n_blocks}")
        exps = []
        for bi, ((name, n), text) in enumerate(zip(vb.blocks, blocks)):
            e = [0] * n
            for tok in text.split():
                if tok == "1":
                    continue
                var, _, pow_str = tok.partition("^")
                if var not in var_lookup[bi]:
                    raise ValueError(f"unknown variable {var!r} in block {name!r}")
                p = int(pow_str) if pow_str else 1
                if p < 0:
                    raise ValueError("negative exponent")
                e[var_lookup[bi][var]] += p
            exps.append(tuple(e))
        result = result + MultiPoly.from_monomial(vb, Monomial(tuple(exps)), coeff)
    return result


def substitute(target: MultiPoly, assignment: Sequence[MultiPoly]) -> MultiPoly:
    """Compose: replace the i-th variable of target by assignment[i].

    The assignment polynomials all live over one common VarBlocks; within each
    block of the target, the nonzero assigned forms must be homogeneous of one
    shared multidegree (so substitution into a form is again a form).
    """
    vb = target.var_blocks
    if len(assignment) != vb.total_vars:
        raise ValueError(
            f"assignment length {len(assignment)} != variable count {vb.total_vars}")
    out_vb = assignment[0].var_blocks
    for p in assignment:
        if p.var_blocks != out_vb:
            raise ValueError("assignment entries over different variable blocks")
    offset = 0
    for name, n in vb.blocks:
        degs = {p.multidegree() for p in assignment[offset:offset + n]
                if not p.is_zero()}
        if any(d is None for d in degs) or len(degs) > 1:
            raise ValueError(f"inhomogeneous assignment for block {name!r}")
        offset += n
    result = MultiPoly.zero(out_vb)
    pow_cache: dict = {}
    for mon, coeff in target.terms.items():
        acc = MultiPoly.constant(out_vb, coeff)
        vi = 0
        for block in mon.exps:
            for e in block:
                if e and not acc.is_zero():
                    key = (vi, e)
                    pw = pow_cache.get(key)
                    if pw is None:
                        pw = assignment[vi] ** e
                        pow_cache[key] = pw
                    acc = acc * pw
                vi += 1
        result = result + acc
    return result


def apply_linear(p: MultiPoly, m: RatMatrix, block_name: str) -> MultiPoly:
    """Substitute x_i -> sum_j m[i][j] x_j on one block; other blocks fixed.

    This is the pullback of forms along the projective map with matrix m.
    """
    vb = p.var_blocks
    n = vb.block_size(block_name)
    if not (m.is_square and m.rows == n):
        raise ValueError("matrix size does not match block variable count")
    assignment = []
    for name, count in vb.blocks:
        for i in range(count):
            if name == block_name:
                form = MultiPoly.zero(vb)
                for j in range(count):
                    c = m.get(i, j)
                    if c:
                        form = form + MultiPoly.variable(vb, name, j) * c
                assignment.append(form)
            else:
                assignment.append(MultiPoly.variable(vb, name, i))
    return substitute(p, assignment)


def coeff_vector(p: MultiPoly, fs: FormSpace) -> list:
    """Coordinates of p in the ordered monomial basis of fs."""
    if p.var_blocks != fs.var_blocks:
        raise ValueError("polynomial and form space over different blocks")
    if not p.is_zero() and p.multidegree() != fs.multidegree:
        raise ValueError(
            f"degree mismatch: polynomial has multidegree {p.multidegree()}, "
            f"form space expects {fs.multidegree}")
    vec = [_ZERO] * fs.dim
    for mon, c in p.terms.items():
        vec[fs.index[mon]] = c
    return vec


def poly_from_coeff_vector(fs: FormSpace, vec: Sequence) -> MultiPoly:
    if len(vec) != fs.dim:
        raise ValueError("vector length does not match form space dimension")
    return MultiPoly(fs.var_blocks,
                     {m: rat(c) for m, c in zip(fs.basis, vec) if rat(c)})


def proportionality_scalar(p: MultiPoly, q: MultiPoly) -> Optional[Fraction]:
    """Return c with p == c*q, or None if no such nonzero scalar exists.

    Two zero polynomials are proportional with c = 1.
    """
    p._check_compatible(q)
    if p.is_zero() and q.is_zero():
        return _ONE
    if p.is_zero() or q.is_zero():
        return None
    if set(p.terms) != set(q.terms):
        return None
    mon, qc = q.leading()
    c = p.terms[mon] / qc
    for m, v in q.terms.items():
        if p.terms[m] != c * v:
            return None
    return c
