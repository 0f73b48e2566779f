"""Pushforward along the Pluecker embedding and closed-form multidegrees.

Gr(1,P^3) sits inside P^5 as the quadric p12*p34 - p13*p24 + p23*p14 = 0
of Pluecker coordinates.  Every Schubert variety of Gr(1,P^3) is a
complete intersection of coordinate hyperplanes with (for codimension
<= 2) that quadric, so its image class in H*(P^5) is deg * z^codim:

    class        cut out by                                image class
    X_emptyset   the quadric alone                         2*z
    X_1          p34 = 0 and the quadric                   2*z^2
    X_{1,1}      p14 = p24 = p34 = 0                       z^3
    X_2          p23 = p24 = p34 = 0                       z^3
    X_{2,1}      p14 = p23 = p24 = p34 = 0                 z^4
    X_{2,2}      p13 = p14 = p23 = p24 = p34 = 0           z^5

Applying this slotwise to a tensor class gives the multidegree in
(P^5)^n.  The closed forms below expand the same multidegrees directly
as pair/triple sums; they are division-free regroupings of the per-step
products, so they stay valid when some camera order alpha_i is zero
(the affected terms just drop out).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations

from .errors import DomainError
from .multiview import Congruence, _as_congruences, concurrent_class, multi_image_class
from .poly import MDegPoly, first_difference
from .schubert import EMPTY, GR13, P1, P2, P11, P21, P22
from .tensor import TensorClass

# partition -> (codimension in P^5, degree) under the Pluecker embedding
PUSH_TABLE = {
    EMPTY: (1, 2),
    P1: (2, 2),
    P11: (3, 1),
    P2: (3, 1),
    P21: (4, 1),
    P22: (5, 1),
}


def push_to_mdeg(t: TensorClass) -> MDegPoly:
    """Multidegree in (P^5)^n of a tensor class over Gr(1,P^3)."""
    if t.ctx != GR13:
        raise DomainError(f"pushforward table covers Gr(1,P3) only, got {t.ctx}")
    table = _self.PUSH_TABLE
    out = {}
    for key, c in t.terms.items():
        exps = []
        coeff = c
        for lam in key:
            if lam not in table:
                raise DomainError(f"no pushforward entry for partition {lam}")
            codim, deg = table[lam]
            exps.append(codim)
            coeff *= deg
        exps = tuple(exps)
        out[exps] = out.get(exps, 0) + coeff
    return MDegPoly(t.n, out)


def concurrent_mdeg(n) -> MDegPoly:
    """Closed-form multidegree of the concurrent-lines variety in (P^5)^n.

    4 * sum over ordered pairs (i,j) of z_i * z_j^2 * prod(z_l^3) plus
    8 * sum over triples {i,j,k} of z_i^2 z_j^2 z_k^2 * prod(z_l^3);
    homogeneous of total degree 3n-3.
    """
    n = int(n)
    if n < 2:
        raise DomainError(f"need n >= 2, got n={n}")
    terms = {}
    for i, j in permutations(range(n), 2):
        exps = [3] * n
        exps[i], exps[j] = 1, 2
        terms[tuple(exps)] = 4
    for trip in combinations(range(n), 3):
        exps = [3] * n
        for i in trip:
            exps[i] = 2
        terms[tuple(exps)] = 8
    return MDegPoly(n, terms)


def multi_image_mdeg(cams) -> MDegPoly:
    """Closed-form multidegree of the multi-image variety in (P^5)^n.

    Division-free pair/triple expansion: the ordered pair (i,j) carries
    (alpha_i+beta_i)(alpha_j+beta_j) * prod of the other alphas on the
    monomial z_i^3 z_j^4 prod(z_l^5), the triple {i,j,k} the analogous
    product on z_i^4 z_j^4 z_k^4 prod(z_l^5).  Total degree 5n-3 whenever
    the result is nonzero.
    """
    cams = _as_congruences(cams)
    n = len(cams)
    terms = {}
    for i, j in permutations(range(n), 2):
        coeff = (cams[i].alpha + cams[i].beta) * (cams[j].alpha + cams[j].beta)
        for l in range(n):
            if l != i and l != j:
                coeff *= cams[l].alpha
        if not coeff:
            continue
        exps = [5] * n
        exps[i], exps[j] = 3, 4
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + coeff
    for trip in combinations(range(n), 3):
        coeff = 1
        for l in range(n):
            coeff *= (cams[l].alpha + cams[l].beta) if l in trip else cams[l].alpha
        if not coeff:
            continue
        exps = [4 if l in trip else 5 for l in range(n)]
        terms[tuple(exps)] = terms.get(tuple(exps), 0) + coeff
    return MDegPoly(n, terms)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self):
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class PipelineReport:
    n: int
    bidegrees: list | None
    checks: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def to_dict(self):
        return {
            "n": self.n,
            "bidegrees": self.bidegrees,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }


def _mono_text(exps):
    return "*".join(f"z{i + 1}^{e}" if e > 1 else f"z{i + 1}" for i, e in enumerate(exps) if e)


def _compare(name, enumerated: MDegPoly, closed: MDegPoly) -> CheckResult:
    diff = first_difference(enumerated, closed)
    if diff is None:
        return CheckResult(name, True, f"{len(closed.terms)} monomials agree")
    exps, ce, cc = diff
    return CheckResult(
        name, False,
        f"first differing monomial {_mono_text(exps)}: enumerated {ce}, closed form {cc}",
    )


def verify_pipeline(n, cams=None) -> PipelineReport:
    """Check the enumerated pushforward against the closed forms.

    Always compares push_to_mdeg(concurrent_class(n)) with
    concurrent_mdeg(n); when camera bidegrees are supplied (len must be
    n) also compares the multi-image route.  Failures are reported, not
    raised.
    """
    n = int(n)
    if n < 2:
        raise DomainError(f"need n >= 2, got n={n}")
    bidegrees = None
    if cams is not None:
        cams = _as_congruences(cams)
        if len(cams) != n:
            raise DomainError(f"got n={n} but {len(cams)} cameras")
        bidegrees = [[c.alpha, c.beta] for c in cams]
    report = PipelineReport(n=n, bidegrees=bidegrees)
    report.checks.append(
        _compare("concurrent-lines multidegree", push_to_mdeg(concurrent_class(n)), concurrent_mdeg(n))
    )
    if cams is not None:
        report.checks.append(
            _compare("multi-image multidegree", push_to_mdeg(multi_image_class(cams)), multi_image_mdeg(cams))
        )
    return report
