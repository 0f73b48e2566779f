"""Schubert calculus on Grassmannians of projective k-planes in P^d.

Gr(k, P^d) carries Schubert varieties X_lam indexed by partitions fitting
in a box with k+1 rows and d-k columns; their classes form a basis of the
integral cohomology ring.  This module implements the indexing
combinatorics (the subset <-> partition bijection, dimensions, the
containment poset) and the cup product: the Pieri rule for one-row
factors and the Littlewood-Richardson rule in general.  The two product
routes are implemented independently so they can cross-check each other.

Conventions:

* partitions are plain tuples of weakly decreasing positive integers,
  trailing zeros trimmed; () is the class of the whole Grassmannian;
* products are truncated to the box, i.e. computed in the cohomology of
  the finite Grassmannian, not in the ring of symmetric functions;
* coefficients are exact Python integers (arbitrary precision).

The line Grassmannian Gr(1, P^3), available as the constant ``GR13``, is
what the rest of the package works over.  Its six Schubert classes are

    X_emptyset = all lines            X_1     = lines meeting a fixed line
    X_2  = lines through a point      X_{1,1} = lines in a plane
    X_{2,1} = lines through a point in a plane
    X_{2,2} = a single fixed line
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError

Partition = tuple


@dataclass(frozen=True)
class GrassCtx:
    """The Grassmannian Gr(k, P^d) of projective k-planes in P^d."""

    k: int
    d: int

    def __post_init__(self):
        if self.k < 0 or self.d <= self.k:
            raise DomainError(f"need 0 <= k < d, got k={self.k}, d={self.d}")

    @property
    def rows(self):
        """Number of rows of the partition box, k+1."""
        return self.k + 1

    @property
    def cols(self):
        """Number of columns of the partition box, d-k."""
        return self.d - self.k

    @property
    def dim(self):
        """Dimension (k+1)(d-k) of the Grassmannian."""
        return self.rows * self.cols

    def __repr__(self):
        return f"Gr({self.k},P{self.d})"


GR13 = GrassCtx(1, 3)

# The six Gr(1,P^3) Schubert indices, named for readability elsewhere.
EMPTY = ()
P1 = (1,)
P11 = (1, 1)
P2 = (2,)
P21 = (2, 1)
P22 = (2, 2)


def as_partition(parts) -> Partition:
    """Normalize to a trimmed weakly decreasing tuple, or raise DomainError."""
    lam = tuple(int(p) for p in parts)
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise DomainError(f"not weakly decreasing: {lam}")
    if lam and lam[-1] < 0:
        raise DomainError(f"negative part in {lam}")
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    return lam


def fits_box(lam, ctx: GrassCtx) -> bool:
    lam = as_partition(lam)
    return len(lam) <= ctx.rows and (not lam or lam[0] <= ctx.cols)


def require_box(lam, ctx: GrassCtx) -> Partition:
    lam = as_partition(lam)
    if len(lam) > ctx.rows or (lam and lam[0] > ctx.cols):
        raise DomainError(f"partition {lam} does not fit the {ctx.rows}x{ctx.cols} box of {ctx}")
    return lam


@lru_cache(maxsize=None)
def box_partitions(ctx: GrassCtx) -> tuple:
    """All partitions fitting the box of ctx, sorted by (codimension, lex)."""
    out = []

    def grow(prefix, row, maxpart):
        out.append(tuple(prefix))
        if row == ctx.rows:
            return
        for p in range(1, maxpart + 1):
            prefix.append(p)
            grow(prefix, row + 1, p)
            prefix.pop()

    grow([], 0, ctx.cols)
    return tuple(sorted(out, key=lambda lam: (sum(lam), lam)))


def subset_to_partition(j, ctx: GrassCtx) -> Partition:
    """Partition indexing the Schubert variety of the pivot subset j.

    j must be a set of k+1 distinct integers in 1..d+1; sorted ascending as
    (j_1, ..., j_{k+1}) it corresponds to lam_l = (d-k) + l - j_l.
    """
    js = sorted(set(int(x) for x in j))
    if len(js) != ctx.rows:
        raise DomainError(f"need {ctx.rows} distinct pivots for {ctx}, got {js}")
    if js[0] < 1 or js[-1] > ctx.d + 1:
        raise DomainError(f"pivots {js} out of range 1..{ctx.d + 1}")
    return as_partition(ctx.cols + l - jl for l, jl in enumerate(js, start=1))


def partition_to_subset(lam, ctx: GrassCtx) -> tuple:
    """Inverse of subset_to_partition; returns pivots sorted ascending."""
    lam = require_box(lam, ctx)
    padded = lam + (0,) * (ctx.rows - len(lam))
    return tuple(ctx.cols + l - lam_l for l, lam_l in enumerate(padded, start=1))


def dim_schubert(lam, ctx: GrassCtx) -> int:
    """dim X_lam = (k+1)(d-k) - |lam|; the codimension is |lam|."""
    lam = require_box(lam, ctx)
    return ctx.dim - sum(lam)


def partition_leq(lam, mu) -> bool:
    """Containment of Young diagrams: lam_i <= mu_i for all i."""
    lam, mu = as_partition(lam), as_partition(mu)
    if len(lam) > len(mu):
        return False
    return all(a <= b for a, b in zip(lam, mu))


def poset_contains(lam, mu) -> bool:
    """True iff X_lam contains X_mu, i.e. lam is contained in mu as a diagram."""
    return partition_leq(lam, mu)


def hasse_cover_edges(ctx: GrassCtx) -> tuple:
    """Cover relations (lam, mu) with X_lam > X_mu: mu = lam plus one box."""
    parts = box_partitions(ctx)
    return tuple(
        (lam, mu)
        for lam in parts
        for mu in parts
        if sum(mu) == sum(lam) + 1 and partition_leq(lam, mu)
    )


class CohClass:
    """Integer combination of Schubert classes in one Grassmannian.

    terms maps partitions to nonzero integer coefficients; instances are
    immutable by convention.  +, -, and integer scaling work as expected;
    ``a * b`` is the cup product.
    """

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: GrassCtx, terms=None):
        self.ctx = ctx
        clean = {}
        for lam, c in (terms or {}).items():
            lam = require_box(lam, ctx)
            clean[lam] = clean.get(lam, 0) + int(c)
        self.terms = {lam: c for lam, c in clean.items() if c}

    @classmethod
    def zero(cls, ctx):
        return cls(ctx)

    @classmethod
    def basis(cls, ctx, lam):
        return cls(ctx, {require_box(lam, ctx): 1})

    @classmethod
    def one(cls, ctx):
        """The fundamental class [X_emptyset]."""
        return cls(ctx, {(): 1})

    def is_zero(self):
        return not self.terms

    def coefficient(self, lam):
        return self.terms.get(as_partition(lam), 0)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def _check_ctx(self, other):
        if self.ctx != other.ctx:
            raise DomainError(f"mixed contexts {self.ctx} and {other.ctx}")

    def __add__(self, other):
        if not isinstance(other, CohClass):
            return NotImplemented
        self._check_ctx(other)
        merged = dict(self.terms)
        for lam, c in other.terms.items():
            merged[lam] = merged.get(lam, 0) + c
        return CohClass(self.ctx, merged)

    def __neg__(self):
        return CohClass(self.ctx, {lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, CohClass):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return CohClass(self.ctx, {lam: c * other for lam, c in self.terms.items()})
        if isinstance(other, CohClass):
            return cup(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, CohClass)
            and self.ctx == other.ctx
            and self.terms == other.terms
        )

    def __repr__(self):
        if not self.terms:
            return f"CohClass({self.ctx}, 0)"
        body = " + ".join(
            (f"{c}*" if c != 1 else "") + f"X{lam}" for lam, c in self.sorted_terms()
        )
        return f"CohClass({self.ctx}, {body})"


def pieri(r, mu, ctx: GrassCtx) -> CohClass:
    """Multiply [X_(r)] into [X_mu] by the Pieri rule.

    The result is the multiplicity-free sum of [X_nu] over nu in the box
    with |nu| = r + |mu| interlacing mu: mu_i <= nu_i <= mu_{i-1}.
    """
    r = int(r)
    if r < 1 or r > ctx.cols:
        raise DomainError(f"one-row class needs 1 <= r <= {ctx.cols}, got {r}")
    mu = require_box(mu, ctx)
    padded = mu + (0,) * (ctx.rows - len(mu))
    target = r + sum(mu)
    terms = {}
    for nu in box_partitions(ctx):
        if sum(nu) != target:
            continue
        nup = nu + (0,) * (ctx.rows - len(nu))
        if all(
            padded[i] <= nup[i] <= (ctx.cols if i == 0 else padded[i - 1])
            for i in range(ctx.rows)
        ):
            terms[nu] = 1
    return CohClass(ctx, terms)


def lr_coefficient(lam, mu, nu) -> int:
    """Littlewood-Richardson coefficient c^nu_{lam mu}.

    Counts semistandard skew tableaux of shape nu/lam and content mu whose
    reverse reading word (rows top to bottom, each read right to left) is a
    lattice word.  Pure partition combinatorics; no box is involved.
    """
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    if sum(lam) + sum(mu) != sum(nu) or not partition_leq(lam, nu):
        return 0
    if not mu:
        return 1
    lamp = lam + (0,) * (len(nu) - len(lam))
    cells = [(i, j) for i in range(len(nu)) for j in range(nu[i] - 1, lamp[i] - 1, -1)]
    nletters = len(mu)
    counts = [0] * (nletters + 1)
    grid = [[0] * nu[i] for i in range(len(nu))]

    def fill(idx):
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        hi = grid[i][j + 1] if j + 1 < nu[i] else nletters
        lo = 1
        if i > 0 and j >= lamp[i - 1]:
            lo = grid[i - 1][j] + 1
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            counts[v] += 1
            grid[i][j] = v
            total += fill(idx + 1)
            counts[v] -= 1
            grid[i][j] = 0
        return total

    return fill(0)


@lru_cache(maxsize=None)
def lr_terms(lam, mu, ctx: GrassCtx) -> tuple:
    """Expansion of [X_lam] cup [X_mu] as ((nu, coeff), ...), box-truncated."""
    target = sum(lam) + sum(mu)
    out = []
    for nu in box_partitions(ctx):
        if sum(nu) != target:
            continue
        c = lr_coefficient(lam, mu, nu)
        if c:
            out.append((nu, c))
    return tuple(out)


def lr_product(lam, mu, ctx: GrassCtx) -> CohClass:
    """[X_lam] cup [X_mu] by the Littlewood-Richardson rule."""
    lam, mu = require_box(lam, ctx), require_box(mu, ctx)
    return CohClass(ctx, dict(lr_terms(lam, mu, ctx)))


def cup(a: CohClass, b: CohClass) -> CohClass:
    """Bilinear extension of lr_product; [X_emptyset] is the identity."""
    if a.ctx != b.ctx:
        raise DomainError(f"mixed contexts {a.ctx} and {b.ctx}")
    terms = {}
    for lam, ca in a.terms.items():
        for mu, cb in b.terms.items():
            for nu, c in lr_terms(lam, mu, a.ctx):
                terms[nu] = terms.get(nu, 0) + ca * cb * c
    return CohClass(a.ctx, terms)


def gr13_basis() -> tuple:
    """The six Schubert indices of Gr(1,P^3) in (codimension, lex) order."""
    return box_partitions(GR13)


def gr13_table() -> dict:
    """Full 6x6 cup-product table of Gr(1,P^3), keyed by index pairs."""
    basis = gr13_basis()
    return {(lam, mu): lr_product(lam, mu, GR13) for lam in basis for mu in basis}
