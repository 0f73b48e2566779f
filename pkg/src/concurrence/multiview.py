"""Classes of the concurrent-lines variety and of multi-image varieties.

The concurrent-lines variety inside Gr(1,P^3)^n is the closure of the set
of n-tuples of lines through a common point.  Its class is a sum indexed
by step sequences: vectors (d_1, ..., d_n) with d_i in {0, 1, 2} summing
to 3, recording how fast the common point's coordinate span grows from
slot to slot.  Each step sequence contributes one basis tensor:

    step 0 -> [X_2]    step 1 -> [X_1]    step 2 -> [X_emptyset]

A camera is modelled by its congruence, a surface in Gr(1,P^3) with class
alpha*[X_2] + beta*[X_{1,1}] (order alpha = lines through a general
point, class beta = lines in a general plane; a pinhole camera is (1,0),
a two-slit camera (1,1)).  Cutting the product of n congruences with the
concurrent-lines variety gives the multi-image variety; its class is
computed two independent ways, by the per-step closed form and by an
honest cup product, and the two must agree exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .schubert import EMPTY, GR13, P1, P2, P11, P21, P22, CohClass
from .tensor import TensorClass, tensor_mul, tensor_of

# slot class contributed by each step size in the concurrent-lines sum
_STEP_SLOT = {0: P2, 1: P1, 2: EMPTY}


@dataclass(frozen=True)
class Congruence:
    """Bidegree (order, class) of a two-dimensional family of lines in P^3."""

    alpha: int
    beta: int

    def __post_init__(self):
        if self.alpha < 0 or self.beta < 0:
            raise DomainError(f"bidegree entries must be nonnegative, got {(self.alpha, self.beta)}")
        if self.alpha == 0 and self.beta == 0:
            raise DomainError("bidegree (0,0) does not define a two-dimensional family")


def _as_congruences(cams):
    out = tuple(c if isinstance(c, Congruence) else Congruence(*c) for c in cams)
    if len(out) < 2:
        raise DomainError(f"need at least 2 cameras, got {len(out)}")
    return out


def congruence_class(c: Congruence) -> CohClass:
    """Class alpha*[X_2] + beta*[X_{1,1}] of a congruence in Gr(1,P^3)."""
    if not isinstance(c, Congruence):
        c = Congruence(*c)
    return CohClass(GR13, {P2: c.alpha, P11: c.beta})


def step_sequences(n) -> list:
    """All step vectors (d_1..d_n), d_i in {0,1,2}, sum 3, in lex order.

    There are C(n,3) + n(n-1) of them: either three steps of 1, or one
    step of 2 and one of 1.  Empty for n < 2, which is rejected.
    """
    n = int(n)
    if n < 2:
        raise DomainError(f"step sequences need n >= 2, got n={n}")
    out = []

    def grow(prefix, remaining):
        i = len(prefix)
        if i == n:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        slack = 2 * (n - i - 1)
        for d in range(max(0, remaining - slack), min(2, remaining) + 1):
            prefix.append(d)
            grow(prefix, remaining - d)
            prefix.pop()

    grow([], 3)
    return out


def concurrent_class(n) -> TensorClass:
    """Class of the concurrent-lines variety in H*(Gr(1,P^3)^n).

    One basis tensor per step sequence, all coefficients 1; total
    codimension of every term is 3(n-1).  n=1 is rejected: the sum is
    empty there and the variety is all of Gr(1,P^3).
    """
    seqs = step_sequences(n)
    terms = {tuple(_STEP_SLOT[d] for d in seq): 1 for seq in seqs}
    return TensorClass(n, GR13, terms)


def multi_image_class(cams) -> TensorClass:
    """Class of the multi-image variety from camera bidegrees, closed form.

    Sum over step sequences of the tensor whose i-th slot is

        alpha_i*[X_{2,2}]               for step 0,
        (alpha_i+beta_i)*[X_{2,1}]      for step 1,
        alpha_i*[X_2] + beta_i*[X_{1,1}] for step 2,

    expanded and collected.  Slots with alpha_i = 0 simply kill the
    step-0 terms at that slot.
    """
    cams = _as_congruences(cams)
    n = len(cams)
    terms = {}
    for seq in step_sequences(n):
        options = []
        for cam, d in zip(cams, seq):
            if d == 0:
                opts = [(P22, cam.alpha)]
            elif d == 1:
                opts = [(P21, cam.alpha + cam.beta)]
            else:
                opts = [(P2, cam.alpha), (P11, cam.beta)]
            opts = [(lam, c) for lam, c in opts if c]
            if not opts:
                options = None
                break
            options.append(opts)
        if options is None:
            continue
        _expand(options, terms)
    return TensorClass(n, GR13, terms)


def _expand(options, terms, key=(), coeff=1):
    if not options:
        terms[key] = terms.get(key, 0) + coeff
        return
    for lam, c in options[0]:
        _expand(options[1:], terms, key + (lam,), coeff * c)


def multi_image_class_cup(cams) -> TensorClass:
    """Same class as multi_image_class, by cupping with the congruence tensor.

    Computes concurrent_class(n) * ([C_1] x ... x [C_n]) through the
    Littlewood-Richardson engine; must agree with the closed form exactly.
    """
    cams = _as_congruences(cams)
    camera_tensor = tensor_of([congruence_class(c) for c in cams])
    return tensor_mul(concurrent_class(len(cams)), camera_tensor)
