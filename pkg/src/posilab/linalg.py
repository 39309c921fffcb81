"""Dense complex linear algebra kernels.

Every operator in the package is a dense complex matrix (``numpy.ndarray``
of dtype complex128).  The functions here wrap the numpy/LAPACK routines
behind validated, tolerance-explicit interfaces; all tolerances are
parameters with the defaults documented below, nothing is hard-coded
inside the algorithms.

Target dimensions are small (tens, at most ~256), so robustness is
preferred over speed throughout.
"""

from dataclasses import dataclass

import numpy as np

from .errors import NumericalFailure, ValidationError

# Relative eigenvalue / singular-value cutoff used by the PSD and rank
# decisions when the caller does not override it.
DEFAULT_TOL = 1e-10

# Dimension up to which spectrum() cross-checks the eigenvalue product
# against the determinant.
_DET_CHECK_MAX_DIM = 12
_DET_CHECK_TOL = 1e-8


def as_matrix(values) -> np.ndarray:
    """Coerce to a validated complex matrix (2-D, finite, at least 1x1)."""
    m = np.asarray(values, dtype=complex)
    if m.ndim != 2:
        raise ValidationError(f"expected a 2-D matrix, got ndim={m.ndim}")
    if m.shape[0] < 1 or m.shape[1] < 1:
        raise ValidationError(f"matrix must be at least 1x1, got {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValidationError("matrix entries must be finite (no NaN/inf)")
    return m


def require_square(m: np.ndarray) -> np.ndarray:
    m = as_matrix(m)
    if m.shape[0] != m.shape[1]:
        raise ValidationError(f"expected a square matrix, got {m.shape}")
    return m


def adjoint(m) -> np.ndarray:
    """Conjugate transpose."""
    return as_matrix(m).conj().T


def matmul(a, b) -> np.ndarray:
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise ValidationError(
            f"dimension mismatch in product: {a.shape} x {b.shape}"
        )
    return a @ b


def matpow(m, p: int) -> np.ndarray:
    """p-th power of a square matrix; p = 0 gives the identity."""
    m = require_square(m)
    if not isinstance(p, (int, np.integer)) or p < 0:
        raise ValidationError(f"power must be a non-negative integer, got {p!r}")
    return np.linalg.matrix_power(m, int(p))


def operator_norm(m) -> float:
    """Largest singular value; empty blocks have norm 0."""
    m = np.asarray(m, dtype=complex)
    if m.size == 0:
        return 0.0
    return float(np.linalg.norm(as_matrix(m), 2))


def frobenius(m) -> float:
    m = np.asarray(m)
    if m.size == 0:
        return 0.0
    return float(np.linalg.norm(m))


@dataclass(frozen=True)
class HermitianEigen:
    """Eigendecomposition H = V diag(w) V* with w ascending, V unitary."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def hermitian_asymmetry(h: np.ndarray) -> float:
    """Relative deviation of h from its own adjoint."""
    h = require_square(h)
    return operator_norm(h - h.conj().T) / max(1.0, operator_norm(h))


def hermitian_eigen(h, tol: float = DEFAULT_TOL) -> HermitianEigen:
    """Eigendecomposition of a Hermitian matrix.

    Rejects inputs whose asymmetry exceeds ``tol`` relative to
    max(1, norm); the symmetrized (H + H*)/2 is what gets decomposed, so
    rounding-level asymmetry never leaks into the eigendata.
    """
    h = require_square(h)
    asym = hermitian_asymmetry(h)
    if asym > tol:
        raise ValidationError(
            f"matrix is not Hermitian: relative asymmetry {asym:.3e} > {tol:.3e}"
        )
    w, v = np.linalg.eigh((h + h.conj().T) / 2.0)
    return HermitianEigen(eigenvalues=w, eigenvectors=v)


@dataclass(frozen=True)
class PsdVerdict:
    """Outcome of a positive-semidefiniteness test."""

    is_psd: bool
    min_eigenvalue: float
    witness: np.ndarray | None  # unit vector with <Hx, x> < 0, when not PSD

    def __bool__(self) -> bool:
        return self.is_psd


def is_psd(h, tol: float = DEFAULT_TOL, scale: float | None = None) -> PsdVerdict:
    """Test H >= 0 up to a relative eigenvalue tolerance.

    Passes iff the smallest eigenvalue is >= -tol * max(1, scale), where
    ``scale`` defaults to the operator norm of H.  On failure the witness
    is the unit eigenvector of the most negative eigenvalue.
    """
    eig = hermitian_eigen(h, tol=max(tol, 1e-12))
    lo = float(eig.eigenvalues[0])
    if scale is None:
        scale = float(np.max(np.abs(eig.eigenvalues))) if eig.eigenvalues.size else 0.0
    ok = lo >= -tol * max(1.0, scale)
    witness = None if ok else eig.eigenvectors[:, 0].copy()
    return PsdVerdict(is_psd=ok, min_eigenvalue=lo, witness=witness)


@dataclass(frozen=True)
class SubspaceBasis:
    """Orthonormal columns spanning a subspace of C^ambient_dim."""

    basis: np.ndarray  # shape (ambient_dim, dim); dim may be 0
    ambient_dim: int

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    def projector(self) -> np.ndarray:
        return self.basis @ self.basis.conj().T


@dataclass(frozen=True)
class RankSpaces:
    """SVD-derived range, kernel and cokernel of a matrix."""

    range: SubspaceBasis     # column space
    kernel: SubspaceBasis    # null space
    cokernel: SubspaceBasis  # orthogonal complement of the range = ker(M*)
    rank: int
    singular_values: np.ndarray


def svd_rank_spaces(m, tol: float = DEFAULT_TOL) -> RankSpaces:
    """Numerical rank plus orthonormal bases for range/kernel/cokernel.

    Singular values <= tol * sigma_max count as zero.  The range and
    cokernel bases together form a unitary of the codomain; the kernel
    basis is annihilated by M up to the same threshold.
    """
    m = as_matrix(m)
    u, s, vh = np.linalg.svd(m)
    smax = float(s[0]) if s.size else 0.0
    rank = int(np.count_nonzero(s > tol * smax)) if smax > 0 else 0
    rows, cols = m.shape
    return RankSpaces(
        range=SubspaceBasis(basis=u[:, :rank], ambient_dim=rows),
        kernel=SubspaceBasis(basis=vh[rank:, :].conj().T, ambient_dim=cols),
        cokernel=SubspaceBasis(basis=u[:, rank:], ambient_dim=rows),
        rank=rank,
        singular_values=s,
    )


def kron(a, b) -> np.ndarray:
    """Kronecker product; realizes the tensor product of operators."""
    return np.kron(as_matrix(a), as_matrix(b))


def pinv(m, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Moore-Penrose pseudo-inverse with an explicit rank threshold."""
    m = as_matrix(m)
    u, s, vh = np.linalg.svd(m)
    smax = float(s[0]) if s.size else 0.0
    inv = np.zeros_like(s)
    keep = s > tol * smax
    inv[keep] = 1.0 / s[keep]
    k = s.shape[0]
    return vh.conj().T[:, :k] @ (inv[:, None] * u.conj().T[:k, :])


def spectrum(m, tol: float = _DET_CHECK_TOL) -> np.ndarray:
    """All eigenvalues with multiplicity, sorted by (real, imag).

    For dimensions <= 12 the product of the eigenvalues is cross-checked
    against the determinant; disagreement beyond ``tol`` (relative) raises
    NumericalFailure.
    """
    m = require_square(m)
    try:
        vals = np.linalg.eigvals(m)
    except np.linalg.LinAlgError as exc:  # QR iteration did not converge
        raise NumericalFailure(f"eigenvalue iteration failed: {exc}") from exc
    vals = np.sort_complex(vals)
    n = m.shape[0]
    if n <= _DET_CHECK_MAX_DIM:
        det = complex(np.linalg.det(m))
        prod = complex(np.prod(vals))
        scale = max(1.0, abs(det), abs(prod))
        if abs(det - prod) > tol * scale:
            raise NumericalFailure(
                f"eigenvalue product {prod:.6e} disagrees with determinant "
                f"{det:.6e} beyond relative {tol:.1e}"
            )
    return vals


def distinct_values(values, tol: float) -> list[complex]:
    """Collapse a multiset of complex numbers to representatives.

    Greedy clustering: a value joins an existing representative when it is
    within ``tol``; values are visited in sorted order so the result is
    deterministic.
    """
    reps: list[complex] = []
    for v in np.sort_complex(np.asarray(values, dtype=complex)):
        v = complex(v)
        if all(abs(v - r) > tol for r in reps):
            reps.append(v)
    return reps


def hausdorff_distance(a, b) -> float:
    """Hausdorff distance between two finite nonempty sets of complex numbers."""
    a = [complex(x) for x in a]
    b = [complex(x) for x in b]
    if not a or not b:
        raise ValidationError("hausdorff_distance requires nonempty sets")
    d_ab = max(min(abs(x - y) for y in b) for x in a)
    d_ba = max(min(abs(x - y) for y in a) for x in b)
    return max(d_ab, d_ba)
