"""Sparse multivariate polynomials with exact integer coefficients.

Used for multidegrees: a term q*z1^r1*...*zn^rn of the multidegree of a
subvariety of P^a1 x ... x P^an records q intersection points against a
product of general linear subspaces H_i with dim(H_i) = r_i; equivalently
the exponent r_i is the codimension contributed in the i-th factor, and
the total degree equals the codimension of the subvariety.

This is a plain polynomial ring: no ambient truncation happens here (the
pushforward that produces multidegrees never exceeds exponent 5 on its
own).  The zero polynomial has total degree -1.
"""

from __future__ import annotations

from .errors import DomainError


def term_sort_key(exps):
    """Canonical graded order: total degree, then exponents descending-lex."""
    return (sum(exps), tuple(-e for e in exps))


class MDegPoly:
    """Sparse polynomial in z1..zn; terms maps exponent tuples to nonzero ints."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = int(n)
        if self.n < 1:
            raise DomainError(f"need at least one variable, got n={n}")
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.n:
                raise DomainError(f"exponent vector {exps} has wrong length for n={self.n}")
            if any(e < 0 for e in exps):
                raise DomainError(f"negative exponent in {exps}")
            clean[exps] = clean.get(exps, 0) + int(c)
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def monomial(cls, n, exps, coeff=1):
        return cls(n, {tuple(exps): coeff})

    def is_zero(self):
        return not self.terms

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), 0)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: term_sort_key(kv[0]))

    def _check_n(self, other):
        if self.n != other.n:
            raise DomainError(f"variable-count mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, MDegPoly):
            return NotImplemented
        self._check_n(other)
        merged = dict(self.terms)
        for e, c in other.terms.items():
            merged[e] = merged.get(e, 0) + c
        return MDegPoly(self.n, merged)

    def __neg__(self):
        return MDegPoly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MDegPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return MDegPoly(self.n, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, MDegPoly):
            return NotImplemented
        self._check_n(other)
        out = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                out[key] = out.get(key, 0) + ca * cb
        return MDegPoly(self.n, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, MDegPoly) and self.n == other.n and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return f"MDegPoly(n={self.n}, 0)"
        bits = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"z{i + 1}" + (f"^{p}" if p > 1 else "")
                for i, p in enumerate(e)
                if p
            )
            bits.append(f"{c}" + (f"*{mono}" if mono else ""))
        return f"MDegPoly(n={self.n}, {' + '.join(bits)})"


def first_difference(p: MDegPoly, q: MDegPoly):
    """First monomial (canonical order) on which p and q disagree, or None.

    Returns (exps, p_coeff, q_coeff).
    """
    if p.n != q.n:
        raise DomainError(f"variable-count mismatch: {p.n} vs {q.n}")
    for exps in sorted(set(p.terms) | set(q.terms), key=term_sort_key):
        cp, cq = p.terms.get(exps, 0), q.terms.get(exps, 0)
        if cp != cq:
            return exps, cp, cq
    return None
