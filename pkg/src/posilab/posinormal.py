"""Membership tests for the k-quasi n-power posinormal hierarchy.

An operator T belongs to the class at parameters (k, n, lambda) when the
Hermitian *gap matrix*

    T*^k (lambda^2 T*T - T^n T*^n) T^k

is positive semidefinite.  The k = 0, n = 1 case is posinormality in the
Rhaly sense (lambda^2 T*T >= TT*); k = 0 with general n is n-power
posinormality (T^n T*^n <= lambda^2 T*T).

The gap matrix has a second, numerically friendlier form as a difference
of Gram matrices,

    lambda^2 (T^{k+1})*(T^{k+1}) - (T*^n T^k)*(T*^n T^k),

and both forms are computed and required to agree.  The existential
question "is there any lambda > 0 that works" is answered exactly by
``min_lambda`` through a kernel-inclusion test plus one compressed
eigenproblem, no search involved.
"""

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import ValidationError
from .linalg import DEFAULT_TOL

# Fixed seed for the sampled-vector trials of check_norm_inequality;
# callers override per run for independent draws.
DEFAULT_TRIAL_SEED = 1729
DEFAULT_TRIALS = 64

# Agreement required between the two algebraic forms of the gap matrix.
_FORM_AGREEMENT_TOL = 1e-10


@dataclass(frozen=True)
class ClassQuery:
    """Membership parameters: quasi order k >= 0, power n >= 1, lam > 0."""

    k: int
    n: int
    lam: float

    def __post_init__(self):
        if not isinstance(self.k, (int, np.integer)) or self.k < 0:
            raise ValidationError(f"k must be a non-negative integer, got {self.k!r}")
        if not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise ValidationError(f"n must be a positive integer, got {self.n!r}")
        lam = float(self.lam)
        if not np.isfinite(lam) or lam <= 0.0:
            raise ValidationError(f"lambda must be a positive real, got {self.lam!r}")


@dataclass(frozen=True)
class ClassReport:
    """Outcome of one membership query."""

    holds: bool
    gap_min_eigenvalue: float
    gap_norm: float
    witness: np.ndarray | None  # unit vector certifying failure, else None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class LambdaResult:
    """Minimal feasible lambda for fixed (k, n), or an obstruction.

    Infeasible means no lambda > 0 works: some unit x has T^{k+1} x ~ 0
    while T*^n T^k x is not negligible; that x is the kernel_obstruction.
    """

    feasible: bool
    lambda_min: float | None
    kernel_obstruction: np.ndarray | None


def _gram_factors(t: np.ndarray, k: int, n: int) -> tuple[np.ndarray, np.ndarray]:
    """(T^{k+1}, T*^n T^k): the two maps whose Gram matrices form the gap."""
    tk = linalg.matpow(t, k)
    c = t @ tk
    d = linalg.adjoint(linalg.matpow(t, n)) @ tk
    return c, d


def gap_matrix(t, k: int, n: int, lam: float) -> np.ndarray:
    """Gap matrix T*^k (lam^2 T*T - T^n T*^n) T^k.

    Computed in definition form and cross-checked against the Gram form
    lam^2 (T^{k+1})*(T^{k+1}) - (T*^n T^k)*(T*^n T^k); the two must agree
    to 1e-10 relative or NumericalFailure-grade disagreement is raised as
    a validation problem with the measured deviation.
    """
    t = linalg.require_square(t)
    query = ClassQuery(k=k, n=n, lam=float(lam))
    lam2 = query.lam ** 2
    tk = linalg.matpow(t, k)
    tn = linalg.matpow(t, n)
    core = lam2 * (linalg.adjoint(t) @ t) - tn @ linalg.adjoint(tn)
    gap = linalg.adjoint(tk) @ core @ tk

    c, d = _gram_factors(t, k, n)
    gram = lam2 * (linalg.adjoint(c) @ c) - linalg.adjoint(d) @ d
    dev = linalg.operator_norm(gap - gram) / max(1.0, linalg.operator_norm(gap))
    if dev > _FORM_AGREEMENT_TOL:
        raise ValidationError(
            f"gap-matrix forms disagree: relative deviation {dev:.3e}"
        )
    # Symmetrize away rounding-level asymmetry; both forms are Hermitian
    # in exact arithmetic.
    return (gap + gap.conj().T) / 2.0


def membership_scale(t, k: int, n: int) -> float:
    """Tolerance scale for membership verdicts: norm of the subtracted
    Gram term (T*^n T^k)*(T*^n T^k).

    Unlike the full gap norm this does not grow with lambda, so a fixed
    negative direction stays detected for arbitrarily large lambda, and
    verdicts remain monotone in lambda and covariant under scaling of T.
    """
    _, d = _gram_factors(linalg.require_square(t), k, n)
    return linalg.operator_norm(d) ** 2


def is_member(t, query: ClassQuery, tol: float = DEFAULT_TOL) -> ClassReport:
    """Decide membership at ``query``; carries eigendata and a witness.

    The PSD threshold is -tol * max(1, s) with s = membership_scale, the
    lambda-independent part of the gap.
    """
    t = linalg.require_square(t)
    gap = gap_matrix(t, query.k, query.n, query.lam)
    scale = membership_scale(t, query.k, query.n)
    verdict = linalg.is_psd(gap, tol=tol, scale=scale)
    return ClassReport(
        holds=verdict.is_psd,
        gap_min_eigenvalue=verdict.min_eigenvalue,
        gap_norm=linalg.operator_norm(gap),
        witness=verdict.witness,
    )


def is_posinormal(t, lam: float, tol: float = DEFAULT_TOL) -> ClassReport:
    """Posinormality test: lam^2 T*T - TT* >= 0 (the k=0, n=1 case)."""
    return is_member(t, ClassQuery(k=0, n=1, lam=lam), tol=tol)


def is_n_power_posinormal(t, n: int, lam: float, tol: float = DEFAULT_TOL) -> ClassReport:
    """n-power posinormality: T^n T*^n <= lam^2 T*T (the k=0 case)."""
    return is_member(t, ClassQuery(k=0, n=n, lam=lam), tol=tol)


def min_lambda(t, k: int, n: int, tol: float = DEFAULT_TOL) -> LambdaResult:
    """Minimal lambda making T a member at (k, n), by pencil compression.

    With A = (T^{k+1})*(T^{k+1}) and B = (T*^n T^k)*(T*^n T^k), membership
    at lambda is lambda^2 A >= B.  Feasibility is the kernel inclusion
    ker A subset ker B (numerically: B-energy of A's null directions below
    tol relative).  When feasible, the minimal lambda is

        lambda_min = sqrt( max eigenvalue of R* B R ),

    where R maps onto A's positive eigenspace and scales it to identity.
    """
    t = linalg.require_square(t)
    ClassQuery(k=k, n=n, lam=1.0)  # validates k, n
    c, d = _gram_factors(t, k, n)
    a = linalg.adjoint(c) @ c
    b = linalg.adjoint(d) @ d
    b_scale = linalg.operator_norm(b)

    hermitian = linalg.hermitian_eigen(a, tol=1e-8)
    w, v = hermitian.eigenvalues, hermitian.eigenvectors
    a_max = float(w[-1]) if w.size else 0.0
    positive = w > tol * a_max if a_max > 0 else np.zeros_like(w, dtype=bool)

    v_ker = v[:, ~positive]
    if v_ker.shape[1] > 0 and b_scale > 0:
        compressed = v_ker.conj().T @ b @ v_ker
        kw, kv = np.linalg.eigh((compressed + compressed.conj().T) / 2.0)
        worst = float(kw[-1])
        if worst > tol * max(1.0, b_scale):
            direction = v_ker @ kv[:, -1]
            direction = direction / np.linalg.norm(direction)
            return LambdaResult(feasible=False, lambda_min=None,
                                kernel_obstruction=direction)

    if not positive.any():
        # A vanishes and B passed the kernel test, so B vanishes too:
        # every lambda works.
        return LambdaResult(feasible=True, lambda_min=0.0, kernel_obstruction=None)

    v_pos = v[:, positive]
    r = v_pos * (w[positive] ** -0.5)
    pencil = r.conj().T @ b @ r
    top = float(np.linalg.eigvalsh((pencil + pencil.conj().T) / 2.0)[-1])
    return LambdaResult(feasible=True, lambda_min=float(np.sqrt(max(top, 0.0))),
                        kernel_obstruction=None)


def check_norm_inequality(t, k: int, n: int, lam: float, m: int,
                          trials: int = DEFAULT_TRIALS, tol: float = 1e-9,
                          seed: int = DEFAULT_TRIAL_SEED) -> bool:
    """Verify the shifted-order consequence of membership.

    For a member at (k, n, lam) and any m >= k, both of these hold:

      (a) the m-gap T*^m (lam^2 T*T - T^n T*^n) T^m is PSD, and
      (b) ||T*^n T^m x|| <= lam ||T^{m+1} x|| + tol for every x.

    (b) is sampled on ``trials`` unit vectors drawn from a seeded complex
    Gaussian; a fixed seed makes the check deterministic.
    """
    t = linalg.require_square(t)
    query = ClassQuery(k=k, n=n, lam=float(lam))
    if not isinstance(m, (int, np.integer)) or m < k:
        raise ValidationError(f"m must be an integer >= k={k}, got {m!r}")
    if trials < 1:
        raise ValidationError(f"trials must be >= 1, got {trials!r}")

    if not is_member(t, ClassQuery(k=int(m), n=n, lam=query.lam), tol=tol).holds:
        return False

    dim = t.shape[0]
    lhs_op = linalg.adjoint(linalg.matpow(t, n)) @ linalg.matpow(t, int(m))
    rhs_op = linalg.matpow(t, int(m) + 1)
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        x = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        x = x / np.linalg.norm(x)
        if np.linalg.norm(lhs_op @ x) > query.lam * np.linalg.norm(rhs_op @ x) + tol:
            return False
    return True


@dataclass(frozen=True)
class NormCorollaryReport:
    """Operator-norm consequence ||T*^n T^m|| <= lam ||T^{m+1}||.

    ``holds`` asserts the first-power form, which follows from the vector
    inequality by taking suprema.  The squared-lambda variant is evaluated
    and reported but never asserted.
    """

    holds: bool
    lhs: float
    rhs_first_power: float
    rhs_squared: float
    holds_squared: bool


def operator_norm_corollary_check(t, k: int, n: int, lam: float, m: int,
                                  tol: float = 1e-9) -> NormCorollaryReport:
    """Check the operator-norm inequality for a member at (k, n, lam)."""
    t = linalg.require_square(t)
    query = ClassQuery(k=k, n=n, lam=float(lam))
    if not isinstance(m, (int, np.integer)) or m < k:
        raise ValidationError(f"m must be an integer >= k={k}, got {m!r}")
    member = is_member(t, query)
    if not member.holds:
        raise ValidationError(
            "operator is not a member at the given (k, n, lambda); "
            f"gap min eigenvalue {member.gap_min_eigenvalue:.3e}"
        )
    lhs = linalg.operator_norm(
        linalg.adjoint(linalg.matpow(t, n)) @ linalg.matpow(t, int(m))
    )
    base = linalg.operator_norm(linalg.matpow(t, int(m) + 1))
    rhs1 = query.lam * base
    rhs2 = query.lam ** 2 * base
    return NormCorollaryReport(
        holds=lhs <= rhs1 + tol,
        lhs=lhs,
        rhs_first_power=rhs1,
        rhs_squared=rhs2,
        holds_squared=lhs <= rhs2 + tol,
    )


@dataclass(frozen=True)
class NilpotencyReport:
    """Collapse of T^k for nilpotent members (T^{k+1} = 0).

    The collapse T^k = 0 is provable only when k >= n (the argument
    factors through T^{k-n}); ``asserted`` records whether this run was in
    the provable regime.  For k < n the measured norm is reported without
    a verdict being claimed.
    """

    asserted: bool
    norm_t_k: float
    bound: float
    passes: bool


def nilpotency_collapse_check(t, k: int, n: int,
                              tol: float = DEFAULT_TOL) -> NilpotencyReport:
    """Check that T^{k+1} = 0 plus membership forces T^k = 0 (for k >= n)."""
    t = linalg.require_square(t)
    ClassQuery(k=k, n=n, lam=1.0)
    t_norm = linalg.operator_norm(t)
    power_bound = tol * max(1.0, t_norm) ** (k + 1)
    if linalg.operator_norm(linalg.matpow(t, k + 1)) > power_bound:
        raise ValidationError(f"T^{k + 1} is not numerically zero")
    feasibility = min_lambda(t, k, n, tol=tol)
    if not feasibility.feasible:
        raise ValidationError(
            "operator is not a member at (k, n) for any lambda"
        )
    measured = linalg.operator_norm(linalg.matpow(t, k))
    bound = tol * max(1.0, t_norm) ** k
    return NilpotencyReport(
        asserted=k >= n,
        norm_t_k=measured,
        bound=bound,
        passes=measured <= bound,
    )


def classify_grid(t, k_max: int, n_max: int,
                  tol: float = DEFAULT_TOL) -> dict[tuple[int, int], LambdaResult]:
    """min_lambda over the parameter grid 0 <= k <= k_max, 1 <= n <= n_max."""
    t = linalg.require_square(t)
    if k_max < 0 or n_max < 1:
        raise ValidationError("grid requires k_max >= 0 and n_max >= 1")
    return {
        (k, n): min_lambda(t, k, n, tol=tol)
        for k in range(k_max + 1)
        for n in range(1, n_max + 1)
    }
