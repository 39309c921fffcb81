"""Structural consequences of membership.

Centerpiece: the block upper-triangular splitting of an operator whose
k-th power has non-dense range.  With Q = [range | kernel] assembled from
orthonormal bases of closure(T^k H) and ker(T*^k),

    Q* T Q = [[A, B], [0, C]],

the compression A inherits the k = 0 (n-power posinormal) property at the
same lambda, C is nilpotent of order k, and the distinct spectra satisfy
spectrum(T) = spectrum(A) union {0}.

The remaining checks package the closure operations: restriction to an
invariant subspace, multiplication by a commuting isometry, unitary
conjugation, the dense-range upgrade to the k = 0 class, and Kronecker
products of members.
"""

from dataclasses import dataclass

import numpy as np

from . import linalg, posinormal
from .errors import ValidationError
from .linalg import DEFAULT_TOL, SubspaceBasis
from .posinormal import ClassQuery, ClassReport


@dataclass(frozen=True)
class Decomposition:
    """Block form of T on closure(T^k H) + ker(T*^k).

    ``residual_lower_left`` measures the lower-left block that the
    invariance of the range forces to vanish; ``nilpotency_residual`` is
    ||C^k||.  ``full_range`` flags the degenerate case rank(T^k) = dim,
    where the kernel part is empty and A is all of T (up to basis).
    """

    range_basis: SubspaceBasis
    kernel_basis: SubspaceBasis
    block_a: np.ndarray
    block_b: np.ndarray
    block_c: np.ndarray
    residual_lower_left: float
    nilpotency_residual: float
    full_range: bool

    def assembled_basis(self) -> np.ndarray:
        return np.hstack([self.range_basis.basis, self.kernel_basis.basis])

    def reconstruct(self) -> np.ndarray:
        q = self.assembled_basis()
        upper = np.hstack([self.block_a, self.block_b])
        dim_k = self.kernel_basis.dim
        lower = np.hstack([
            np.zeros((dim_k, self.block_a.shape[1]), dtype=complex),
            self.block_c,
        ])
        return q @ np.vstack([upper, lower]) @ q.conj().T


def decompose(t, k: int, n: int, tol: float = DEFAULT_TOL) -> Decomposition:
    """Split T along closure(T^k H) + ker(T*^k) and extract the blocks.

    Works for arbitrary square T; the membership-dependent facts (A in the
    k = 0 class, spectrum union) are contracts on the output checked by
    the caller or the test-suite, not preconditions here.  When T^k has
    full numerical rank the degenerate splitting is returned with
    ``full_range`` set instead of failing, so pipelines can branch.
    """
    t = linalg.require_square(t)
    ClassQuery(k=k, n=n, lam=1.0)  # validates k, n
    spaces = linalg.svd_rank_spaces(linalg.matpow(t, k), tol=tol)
    q_range = spaces.range.basis
    q_kernel = spaces.cokernel.basis  # ker(T*^k) = range(T^k) orthocomplement
    block_a = q_range.conj().T @ t @ q_range
    block_b = q_range.conj().T @ t @ q_kernel
    block_c = q_kernel.conj().T @ t @ q_kernel
    residual = linalg.operator_norm(q_kernel.conj().T @ t @ q_range)
    if block_c.shape[0] > 0:
        nilp = linalg.operator_norm(np.linalg.matrix_power(block_c, k))
    else:
        nilp = 0.0
    return Decomposition(
        range_basis=spaces.range,
        kernel_basis=spaces.cokernel,
        block_a=block_a,
        block_b=block_b,
        block_c=block_c,
        residual_lower_left=residual,
        nilpotency_residual=nilp,
        full_range=spaces.rank == t.shape[0],
    )


def spectrum_union_gap(decomp: Decomposition, t, cluster_tol: float = 1e-6) -> float:
    """Hausdorff distance between distinct(spec T) and distinct(spec A) + {0}.

    Distinct values on both sides are formed with ``cluster_tol``; the
    union side always contains 0 (the kernel block contributes it).
    """
    t = linalg.require_square(t)
    spec_t = linalg.distinct_values(linalg.spectrum(t), tol=cluster_tol)
    if decomp.range_basis.dim == 0:
        spec_a = []  # fully nilpotent: only the kernel block remains
    else:
        spec_a = linalg.distinct_values(linalg.spectrum(decomp.block_a),
                                        tol=cluster_tol)
    union = spec_a if decomp.full_range else linalg.distinct_values(
        spec_a + [0.0], tol=cluster_tol
    )
    return linalg.hausdorff_distance(spec_t, union)


def _as_basis_matrix(m) -> np.ndarray:
    if isinstance(m, SubspaceBasis):
        return m.basis
    return linalg.as_matrix(m)


def restrict_to_invariant(t, subspace, k: int, n: int, lam: float,
                          tol: float = 1e-9) -> tuple[np.ndarray, ClassReport]:
    """Compress T to an invariant subspace and test the compression.

    ``subspace`` is an orthonormal basis (matrix of columns or a
    SubspaceBasis).  Rejected unless the columns are orthonormal and the
    invariance residual ||(I - MM*)TM|| is below tol * max(1, ||T||).
    For a member T the compression is again a member at the same lambda.
    """
    t = linalg.require_square(t)
    m = _as_basis_matrix(subspace)
    if m.shape[0] != t.shape[0] or m.shape[1] < 1:
        raise ValidationError(
            f"subspace basis shape {m.shape} incompatible with operator {t.shape}"
        )
    ortho = linalg.operator_norm(m.conj().T @ m - np.eye(m.shape[1]))
    if ortho > tol:
        raise ValidationError(f"subspace basis not orthonormal: residual {ortho:.3e}")
    projector = m @ m.conj().T
    residual = linalg.operator_norm((np.eye(t.shape[0]) - projector) @ t @ m)
    if residual > tol * max(1.0, linalg.operator_norm(t)):
        raise ValidationError(
            f"subspace is not invariant under T: residual {residual:.3e}"
        )
    compressed = m.conj().T @ t @ m
    report = posinormal.is_member(compressed, ClassQuery(k=k, n=n, lam=lam))
    return compressed, report


def isometry_product_check(t, s, k: int, n: int, lam: float,
                           tol: float = 1e-9) -> ClassReport:
    """Membership of TS for a member T and a commuting isometry S."""
    t = linalg.require_square(t)
    s = linalg.require_square(s)
    if t.shape != s.shape:
        raise ValidationError(f"shape mismatch: T {t.shape} vs S {s.shape}")
    iso = linalg.operator_norm(s.conj().T @ s - np.eye(s.shape[0]))
    if iso > tol:
        raise ValidationError(f"S is not an isometry: ||S*S - I|| = {iso:.3e}")
    comm = linalg.operator_norm(t @ s - s @ t)
    comm_scale = max(1.0, linalg.operator_norm(t) * linalg.operator_norm(s))
    if comm > tol * comm_scale:
        raise ValidationError(f"T and S do not commute: residual {comm:.3e}")
    query = ClassQuery(k=k, n=n, lam=lam)
    base = posinormal.is_member(t, query)
    if not base.holds:
        raise ValidationError(
            "T is not a member at the given parameters; "
            f"gap min eigenvalue {base.gap_min_eigenvalue:.3e}"
        )
    return posinormal.is_member(t @ s, query)


def unitary_conjugate_check(t, u, k: int, n: int, lam: float,
                            tol: float = 1e-9) -> ClassReport:
    """Membership of U*TU for unitary U; the verdict matches T's."""
    t = linalg.require_square(t)
    u = linalg.require_square(u)
    if t.shape != u.shape:
        raise ValidationError(f"shape mismatch: T {t.shape} vs U {u.shape}")
    eye = np.eye(u.shape[0])
    left = linalg.operator_norm(u.conj().T @ u - eye)
    right = linalg.operator_norm(u @ u.conj().T - eye)
    if max(left, right) > tol:
        raise ValidationError(
            f"U is not unitary: ||U*U - I|| = {left:.3e}, ||UU* - I|| = {right:.3e}"
        )
    return posinormal.is_member(u.conj().T @ t @ u, ClassQuery(k=k, n=n, lam=lam))


def dense_range_upgrade(t, k: int, n: int, lam: float,
                        tol: float = DEFAULT_TOL) -> ClassReport:
    """Upgrade a member with full-rank T^k to the k = 0 class.

    When T^k has dense range the quasi layer carries no information and
    the bare inequality T^n T*^n <= lam^2 T*T holds outright.
    """
    t = linalg.require_square(t)
    query = ClassQuery(k=k, n=n, lam=lam)
    spaces = linalg.svd_rank_spaces(linalg.matpow(t, k), tol=tol)
    if spaces.rank < t.shape[0]:
        raise ValidationError(
            f"T^{k} is rank deficient (rank {spaces.rank} of {t.shape[0]}); "
            "dense-range upgrade does not apply"
        )
    base = posinormal.is_member(t, query, tol=tol)
    if not base.holds:
        raise ValidationError(
            "T is not a member at the given parameters; "
            f"gap min eigenvalue {base.gap_min_eigenvalue:.3e}"
        )
    return posinormal.is_n_power_posinormal(t, n, lam, tol=tol)


def tensor_check(t, s, t_query: ClassQuery, s_query: ClassQuery,
                 tol: float = 1e-9) -> ClassReport:
    """Membership of the Kronecker product at the product of the lambdas.

    Both factors must be members at a common (k, n); the product is then a
    member at lambda * mu.
    """
    if t_query.k != s_query.k or t_query.n != s_query.n:
        raise ValidationError(
            f"queries must share (k, n): got ({t_query.k}, {t_query.n}) "
            f"vs ({s_query.k}, {s_query.n})"
        )
    t = linalg.require_square(t)
    s = linalg.require_square(s)
    for name, mat, query in (("T", t, t_query), ("S", s, s_query)):
        rep = posinormal.is_member(mat, query, tol=tol)
        if not rep.holds:
            raise ValidationError(
                f"{name} is not a member at its query; "
                f"gap min eigenvalue {rep.gap_min_eigenvalue:.3e}"
            )
    product_query = ClassQuery(
        k=t_query.k, n=t_query.n, lam=t_query.lam * s_query.lam
    )
    return posinormal.is_member(linalg.kron(t, s), product_query, tol=tol)
