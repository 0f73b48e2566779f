"""Tensor powers of the Schubert basis: classes in H*(Gr^n) via Kunneth.

A TensorClass is an integer combination of n-fold tensors of Schubert
classes over a common Grassmannian; keys are flat n-tuples of partitions.
Multiplication is the slotwise cup product, extended bilinearly.
"""

from __future__ import annotations

from itertools import product

from .errors import DomainError
from .schubert import CohClass, GrassCtx, lr_terms, require_box


def key_sort_key(key):
    """Graded order on tensor keys: total codim, slot codims, then slots."""
    codims = tuple(sum(lam) for lam in key)
    return (sum(codims), codims, key)


class TensorClass:
    """Integer combination of basis tensors [X_l1] x ... x [X_ln]."""

    __slots__ = ("n", "ctx", "terms")

    def __init__(self, n, ctx: GrassCtx, terms=None):
        self.n = int(n)
        if self.n < 1:
            raise DomainError(f"need at least one slot, got n={n}")
        self.ctx = ctx
        clean = {}
        for key, c in (terms or {}).items():
            key = tuple(require_box(lam, ctx) for lam in key)
            if len(key) != self.n:
                raise DomainError(f"key {key} has wrong slot count for n={self.n}")
            clean[key] = clean.get(key, 0) + int(c)
        self.terms = {k: c for k, c in clean.items() if c}

    @classmethod
    def identity(cls, n, ctx):
        return cls(n, ctx, {((),) * n: 1})

    @classmethod
    def zero(cls, n, ctx):
        return cls(n, ctx)

    def is_zero(self):
        return not self.terms

    def coefficient(self, key):
        return self.terms.get(tuple(tuple(lam) for lam in key), 0)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: key_sort_key(kv[0]))

    def codim_set(self):
        """Set of total codimensions over all terms."""
        return {sum(sum(lam) for lam in key) for key in self.terms}

    def _check_compat(self, other):
        if self.ctx != other.ctx:
            raise DomainError(f"mixed contexts {self.ctx} and {other.ctx}")
        if self.n != other.n:
            raise DomainError(f"slot-count mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, TensorClass):
            return NotImplemented
        self._check_compat(other)
        merged = dict(self.terms)
        for key, c in other.terms.items():
            merged[key] = merged.get(key, 0) + c
        return TensorClass(self.n, self.ctx, merged)

    def __neg__(self):
        return TensorClass(self.n, self.ctx, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, TensorClass):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return TensorClass(self.n, self.ctx, {k: c * other for k, c in self.terms.items()})
        if isinstance(other, TensorClass):
            return tensor_mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, TensorClass)
            and self.n == other.n
            and self.ctx == other.ctx
            and self.terms == other.terms
        )

    def __repr__(self):
        if not self.terms:
            return f"TensorClass(n={self.n}, {self.ctx}, 0)"
        bits = []
        for key, c in self.sorted_terms():
            mono = "(x)".join(f"X{lam}" for lam in key)
            bits.append((f"{c}*" if c != 1 else "") + mono)
        return f"TensorClass(n={self.n}, {self.ctx}, {' + '.join(bits)})"


def tensor_of(slots) -> TensorClass:
    """Outer product of single-Grassmannian classes, one per slot."""
    slots = list(slots)
    if not slots:
        raise DomainError("tensor_of needs at least one slot")
    ctx = slots[0].ctx
    for s in slots:
        if not isinstance(s, CohClass):
            raise DomainError(f"tensor_of takes CohClass slots, got {type(s).__name__}")
        if s.ctx != ctx:
            raise DomainError(f"mixed contexts {ctx} and {s.ctx}")
    terms = {}
    for combo in product(*(s.sorted_terms() for s in slots)):
        key = tuple(lam for lam, _ in combo)
        coeff = 1
        for _, c in combo:
            coeff *= c
        terms[key] = terms.get(key, 0) + coeff
    return TensorClass(len(slots), ctx, terms)


def tensor_mul(a: TensorClass, b: TensorClass) -> TensorClass:
    """Slotwise cup product, bilinear over the terms of a and b."""
    a._check_compat(b)
    out = {}
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            expansions = []
            for lam, mu in zip(ka, kb):
                tl = lr_terms(lam, mu, a.ctx)
                if not tl:
                    break
                expansions.append(tl)
            else:
                base = ca * cb
                for combo in product(*expansions):
                    key = tuple(nu for nu, _ in combo)
                    coeff = base
                    for _, c in combo:
                        coeff *= c
                    out[key] = out.get(key, 0) + coeff
    return TensorClass(a.n, a.ctx, out)
