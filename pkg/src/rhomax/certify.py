"""The per-candidate elimination algorithm.

For each candidate T-subgraph we build the comparison polynomial against
each extremal family, locate its top roots exactly, and certify that the
near-clique family wins for every order below some bound while the
star-like family wins above it, with no integer order left uncovered.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

import numpy as np

from . import exactpoly as xp
from .errors import (
    Degenerate,
    InvalidRegime,
    OrderTooSmall,
    VerificationFailed,
)
from .exactpoly import X, AlgebraicReal, IntPoly, RationalInterval
from .graphs import (
    StepSequence,
    cone,
    d_step_sequence,
    edge_params,
    tsub_adjacency,
)
from .tsubenum import enumerate_S_star

# branch / coverage labels used in certificates
POSITIVE_LEADING = "PositiveLeading"
NEGATIVE_LEADING_WITH_BOUND = "NegativeLeadingWithBound"
D_SKIPPED = "Skipped"
V_SMALL_ROOT = "SmallRoot"
V_BOUND_AT_NL = "BoundAtNL"
V_UNUSED = "Unused"
COVER_ALL_N = "AllN"
COVER_SPLIT = "Split"


# -- characteristic polynomials of threshold graphs ----------------------


def charpoly_via_modules(a: np.ndarray) -> IntPoly:
    """Exact charpoly exploiting duplicate/coduplicate vertex classes.

    Vertices with identical rows (ignoring the two diagonal positions)
    form modules; each such class of size s contributes s-1 eigenvalues
    equal to 0 (independent class) or -1 (clique class), and the quotient
    matrix supplies the rest.  Falls back to the dense recurrence if the
    class structure is not clique-or-independent (never happens for
    stepwise matrices).
    """
    n = a.shape[0]
    rows = [tuple(int(v) for v in a[i]) for i in range(n)]
    classes: list[list[int]] = []
    for i in range(n):
        for cl in classes:
            j = cl[0]
            if all(rows[i][w] == rows[j][w] for w in range(n) if w not in (i, j)):
                cl.append(i)
                break
        else:
            classes.append([i])
    zero_mult = 0
    minus_one_mult = 0
    ok = True
    for cl in classes:
        if len(cl) == 1:
            continue
        adj = bool(a[cl[0], cl[1]])
        for u in cl:
            for v in cl:
                if u < v and bool(a[u, v]) != adj:
                    ok = False
        if adj:
            minus_one_mult += len(cl) - 1
        else:
            zero_mult += len(cl) - 1
    if not ok:
        return xp.charpoly(a.astype(int).tolist())
    q = len(classes)
    quot = [[0] * q for _ in range(q)]
    for bi, cl in enumerate(classes):
        rep = cl[0]
        for bj, cl2 in enumerate(classes):
            quot[bi][bj] = sum(int(a[rep, w]) for w in cl2)
    p = xp.charpoly(quot)
    if zero_mult:
        p = p * IntPoly([0] * zero_mult + [1])
    if minus_one_mult:
        for _ in range(minus_one_mult):
            p = p * IntPoly([1, 1])
    assert p.degree == n
    return p


@functools.lru_cache(maxsize=100_000)
def tsub_charpolys(steps: tuple[int, ...]) -> tuple[IntPoly, IntPoly]:
    """(charpoly of T, charpoly of T joined with one vertex)."""
    seq = StepSequence(steps)
    a = tsub_adjacency(seq)
    return charpoly_via_modules(a), charpoly_via_modules(cone(a))


def generic_r_poly(steps: StepSequence) -> tuple[IntPoly, IntPoly]:
    """Numerator and denominator of the order-to-spectral-radius link
    function built directly from exact characteristic polynomials."""
    p_t, p_t1 = tsub_charpolys(steps.steps)
    return X * p_t1, p_t


def rho_of_threshold(steps: StepSequence, n: int) -> AlgebraicReal:
    """Exact spectral radius of the threshold graph with the given
    T-subgraph and order n."""
    n_prime = steps[0] + 2
    if n < n_prime:
        raise OrderTooSmall(f"order {n} < {n_prime}")
    p_t, p_t1 = tsub_charpolys(steps.steps)
    poly = X * p_t1 - (n - n_prime) * p_t
    root = xp.kth_largest_root(poly, 1)
    assert root is not None
    return root


# -- comparison polynomial and closed forms ------------------------------


@dataclass(frozen=True)
class ComparisonPoly:
    q: IntPoly


def q_poly(g1_steps: StepSequence, g2_steps: StepSequence) -> ComparisonPoly:
    """Polynomial whose sign at the rival's spectral radius decides the
    comparison between two threshold graphs with equal surplus."""
    p1_t, p1_t1 = tsub_charpolys(g1_steps.steps)
    p2_t, p2_t1 = tsub_charpolys(g2_steps.steps)
    order1 = g1_steps[0] + 1
    order2 = g2_steps[0] + 1
    q = X * (p1_t1 * p2_t - p2_t1 * p1_t) + (order1 - order2) * (p1_t * p2_t)
    return ComparisonPoly(q)


def d_cubic(e: int) -> IntPoly:
    """Cubic whose largest root is the spectral radius of the cone over
    the near-clique T-subgraph."""
    p = edge_params(e)
    k, t = p.k, p.t
    return IntPoly([(t + 1) * (k - t - 1), -(k + t + 1), -(k - 1), 1])


def r_D_closed_form(e: int) -> tuple[IntPoly, IntPoly]:
    """Closed-form numerator/denominator of the link function for the
    near-clique family (valid for t >= 1)."""
    p = edge_params(e)
    if p.t == 0:
        raise InvalidRegime("closed form requires t >= 1")
    k, t = p.k, p.t
    num = X * (X + 1) * d_cubic(e)
    den = IntPoly([t * (k - t - 1), -(k + t - 1), -(k - 2), 1])
    return num, den


def v_quadratic(e: int) -> IntPoly:
    return IntPoly([-2 * e, -1, 1])


def r_V_closed_form(e: int) -> tuple[IntPoly, IntPoly]:
    """Closed-form link function for the star-like family."""
    if e < 1:
        raise ValueError("e must be >= 1")
    num = X * (X + 1) * v_quadratic(e)
    den = IntPoly([-e, 0, 1])
    return num, den


# -- certificates --------------------------------------------------------


@dataclass(frozen=True)
class Certificate:
    e: int
    steps: StepSequence
    d_branch: str
    v_branch: str
    n_U: Optional[RationalInterval]
    n_L: Optional[RationalInterval]
    coverage: str
    wall_ms: int = 0

    def to_dict(self) -> dict:
        return {
            "e": self.e,
            "steps": list(self.steps.steps),
            "d_branch": self.d_branch,
            "v_branch": self.v_branch,
            "n_U": self.n_U.to_dict() if self.n_U else None,
            "n_L": self.n_L.to_dict() if self.n_L else None,
            "coverage": self.coverage,
            "wall_ms": self.wall_ms,
        }


def _cmp_opt(a: Optional[AlgebraicReal], b: AlgebraicReal) -> int:
    """compare with None meaning -infinity."""
    if a is None:
        return -1
    return xp.compare(a, b)


def _no_integer_between(lo: Fraction, hi: Fraction) -> bool:
    """True if [lo, hi] contains no integer (or is empty)."""
    if lo > hi:
        return True
    first = -((-lo.numerator) // lo.denominator)  # ceil(lo)
    return first > hi


def certify_candidate(e: int, steps: StepSequence,
                      refine_budget: int = xp.DEFAULT_REFINE_BUDGET) -> Certificate:
    """Run the elimination procedure on one candidate T-subgraph.

    Raises VerificationFailed if any certified inequality does not hold,
    mirroring the failure semantics of the published search.
    """
    p = edge_params(e)
    if e < 4 or p.t == 0:
        raise InvalidRegime("certification requires e >= 4 and t >= 1")
    d_steps = d_step_sequence(e)
    if steps.steps in ((e,), d_steps.steps):
        raise Degenerate("candidate coincides with an extremal T-subgraph")
    if steps.e != e:
        raise ValueError("step sequence surplus mismatch")

    # D side -------------------------------------------------------------
    qd = q_poly(steps, d_steps).q
    if qd.is_zero:
        raise VerificationFailed(2, f"comparison polynomial vs D vanishes for {steps.steps}")
    rho_t1d = xp.kth_largest_root(d_cubic(e), 1)
    assert rho_t1d is not None

    n_u_root: Optional[AlgebraicReal] = None
    if qd.leading > 0:
        r1 = xp.kth_largest_root(qd, 1)
        if _cmp_opt(r1, rho_t1d) < 0:
            return Certificate(e, steps, POSITIVE_LEADING, V_UNUSED,
                               None, None, COVER_ALL_N)
        raise VerificationFailed(
            3, f"positive-leading comparison root not below the family bound for {steps.steps}")
    else:
        r1 = xp.kth_largest_root(qd, 1)
        r2 = xp.kth_largest_root(qd, 2)
        if r1 is None or xp.compare(rho_t1d, r1) >= 0:
            raise VerificationFailed(
                4, f"largest comparison root not above the family bound for {steps.steps}")
        if r2 is not None and xp.compare(r2, rho_t1d) >= 0:
            raise VerificationFailed(
                4, f"second comparison root not below the family bound for {steps.steps}")
        d_branch = NEGATIVE_LEADING_WITH_BOUND
        n_u_root = r1

    # V side -------------------------------------------------------------
    qv = q_poly(steps, StepSequence((e,))).q
    if qv.is_zero or qv.leading < 0:
        raise VerificationFailed(
            5, f"comparison polynomial vs V not positive-leading for {steps.steps}")
    rho_t1v = xp.kth_largest_root(v_quadratic(e), 1)
    assert rho_t1v is not None
    s1 = xp.kth_largest_root(qv, 1)
    if _cmp_opt(s1, rho_t1v) < 0:
        v_branch = V_SMALL_ROOT
        n_l_root: Optional[AlgebraicReal] = None
    else:
        v_branch = V_BOUND_AT_NL
        n_l_root = s1

    # step (7): no integer order escapes both certified regions ----------
    num_d, den_d = r_D_closed_form(e)
    num_v, den_v = r_V_closed_form(e)
    eps = Fraction(1, 16)
    for _ in range(refine_budget):
        ivu = xp.eval_ratfun(num_d, den_d, n_u_root, eps, refine_budget)
        n_u = RationalInterval(p.b + ivu.lo, p.b + ivu.hi)
        if n_l_root is None:
            # the star family wins for every order where it exists
            n_l = RationalInterval(Fraction(e + 1), Fraction(e + 1))
        else:
            ivl = xp.eval_ratfun(num_v, den_v, n_l_root, eps, refine_budget)
            n_l = RationalInterval(e + 2 + ivl.lo, e + 2 + ivl.hi)
        if _no_integer_between(n_u.lo, n_l.hi):
            return Certificate(e, steps, d_branch, v_branch, n_u, n_l, COVER_SPLIT)
        eps /= 16
    raise VerificationFailed(
        7, f"could not certify a gap between the two bounds for {steps.steps}")


def certify_all(e: int, refine_budget: int = xp.DEFAULT_REFINE_BUDGET,
                resume_after=None, jobs: int = 1) -> Iterator[Certificate]:
    """Certificates for every member of S*_e, in enumeration order."""
    p = edge_params(e)
    if e < 4 or p.t == 0:
        raise InvalidRegime("certification requires e >= 4 and t >= 1")
    candidates = enumerate_S_star(e, resume_after)
    if jobs <= 1:
        for steps in candidates:
            yield certify_candidate(e, steps, refine_budget)
    else:
        import concurrent.futures as cf

        with cf.ProcessPoolExecutor(max_workers=jobs) as pool:
            args = ((e, s, refine_budget) for s in candidates)
            for cert in pool.map(_certify_star, args, chunksize=8):
                yield cert


def _certify_star(args) -> Certificate:
    return certify_candidate(*args)
