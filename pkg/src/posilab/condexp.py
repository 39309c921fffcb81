"""Conditional expectation on finite measure spaces, and the weighted
conditional type operators built from it.

A space is a finite list of atoms with positive masses; a sub-sigma-algebra
is a partition of the atoms into blocks.  The conditional expectation E
averages over each block with the masses as weights, which makes it the
orthogonal projection of L2 onto the blockwise-constant functions.  The
operator under study sends f to w * E(u f) for weight functions w, u; its
matrix is materialized in the orthonormal atom basis e_i / sqrt(mass_i),
so adjoints downstream are plain conjugate transposes.

The *_check functions re-derive the blockwise formulas for powers, norm,
polar factors and class criteria of that operator and compare them with
direct matrix computation.  Checks are reporting-first: each returns the
measured evidence, and only implications with an actual proof behind them
are asserted by callers.
"""

import numbers
from dataclasses import dataclass, field

import numpy as np

from . import linalg, posinormal
from .errors import ValidationError
from .linalg import DEFAULT_TOL
from .posinormal import ClassQuery

# Threshold defining the support of a function: entries with modulus
# below SUPPORT_RTOL * max modulus count as zero.
SUPPORT_RTOL = 1e-12


@dataclass(frozen=True)
class FiniteMeasureSpace:
    """Atoms with positive masses; labels are cosmetic identifiers."""

    masses: np.ndarray
    labels: tuple[str, ...]

    def __init__(self, masses, labels=None):
        m = np.asarray(masses, dtype=float)
        if m.ndim != 1 or m.size < 1:
            raise ValidationError("masses must be a nonempty 1-D array")
        if not np.all(np.isfinite(m)) or np.any(m <= 0.0):
            raise ValidationError("every atom mass must be finite and > 0")
        if labels is None:
            labels = tuple(f"a{i}" for i in range(m.size))
        labels = tuple(str(x) for x in labels)
        if len(labels) != m.size:
            raise ValidationError(
                f"got {len(labels)} labels for {m.size} atoms"
            )
        object.__setattr__(self, "masses", m)
        object.__setattr__(self, "labels", labels)

    @property
    def atom_count(self) -> int:
        return int(self.masses.size)

    @property
    def total_mass(self) -> float:
        return float(self.masses.sum())


@dataclass(frozen=True)
class BlockPartition:
    """Disjoint nonempty blocks of atom indices covering all atoms."""

    blocks: tuple[tuple[int, ...], ...]
    atom_count: int

    def __init__(self, blocks, atom_count: int):
        normalized = tuple(tuple(int(i) for i in b) for b in blocks)
        seen: set[int] = set()
        for bi, block in enumerate(normalized):
            if not block:
                raise ValidationError(f"partition[{bi}] is empty")
            for i in block:
                if i < 0 or i >= atom_count:
                    raise ValidationError(
                        f"partition[{bi}] references atom {i}, "
                        f"valid range is 0..{atom_count - 1}"
                    )
                if i in seen:
                    raise ValidationError(f"atom {i} appears in two blocks")
                seen.add(i)
        if len(seen) != atom_count:
            missing = sorted(set(range(atom_count)) - seen)
            raise ValidationError(f"partition does not cover atoms {missing}")
        object.__setattr__(self, "blocks", normalized)
        object.__setattr__(self, "atom_count", int(atom_count))

    @property
    def block_count(self) -> int:
        return len(self.blocks)


def trivial_partition(atom_count: int) -> BlockPartition:
    return BlockPartition([tuple(range(atom_count))], atom_count)


def singleton_partition(atom_count: int) -> BlockPartition:
    return BlockPartition([(i,) for i in range(atom_count)], atom_count)


def as_function(values, space: FiniteMeasureSpace) -> np.ndarray:
    """Coerce to a finite complex function on the atoms of ``space``."""
    f = np.asarray(values, dtype=complex)
    if f.shape != (space.atom_count,):
        raise ValidationError(
            f"function has shape {f.shape}, expected ({space.atom_count},)"
        )
    if not np.all(np.isfinite(f)):
        raise ValidationError("function values must be finite")
    return f


def _check_compatible(space: FiniteMeasureSpace, partition: BlockPartition):
    if partition.atom_count != space.atom_count:
        raise ValidationError(
            f"partition is over {partition.atom_count} atoms, "
            f"space has {space.atom_count}"
        )


def block_expectations(space: FiniteMeasureSpace, partition: BlockPartition,
                       f) -> np.ndarray:
    """Mass-weighted mean of f on each block, in block order."""
    _check_compatible(space, partition)
    f = as_function(f, space)
    out = np.empty(partition.block_count, dtype=complex)
    for bi, block in enumerate(partition.blocks):
        idx = list(block)
        mass = space.masses[idx].sum()
        out[bi] = np.dot(space.masses[idx], f[idx]) / mass
    return out


def expand_blockwise(partition: BlockPartition, block_values) -> np.ndarray:
    """Atomwise function taking block_values[b] on block b."""
    vals = np.asarray(block_values, dtype=complex)
    if vals.shape != (partition.block_count,):
        raise ValidationError(
            f"expected {partition.block_count} block values, got {vals.shape}"
        )
    out = np.empty(partition.atom_count, dtype=complex)
    for bi, block in enumerate(partition.blocks):
        out[list(block)] = vals[bi]
    return out


def conditional_expectation(space: FiniteMeasureSpace,
                            partition: BlockPartition, f) -> np.ndarray:
    """E(f): on each block the mass-weighted mean, constant across it."""
    return expand_blockwise(partition, block_expectations(space, partition, f))


def conditional_projector(space: FiniteMeasureSpace,
                          partition: BlockPartition) -> np.ndarray:
    """Matrix of E in the orthonormal basis e_i / sqrt(mass_i).

    Hermitian and idempotent: the orthogonal projector onto blockwise
    constants.
    """
    _check_compatible(space, partition)
    n = space.atom_count
    p = np.zeros((n, n), dtype=complex)
    root = np.sqrt(space.masses)
    for block in partition.blocks:
        idx = list(block)
        mass = space.masses[idx].sum()
        col = root[idx]
        p[np.ix_(idx, idx)] = np.outer(col, col) / mass
    return p


def support_mask(values, rtol: float = SUPPORT_RTOL) -> np.ndarray:
    """Entries counted as nonzero: |v| > rtol * max|v|."""
    v = np.abs(np.asarray(values, dtype=complex))
    top = v.max() if v.size else 0.0
    if top == 0.0:
        return np.zeros(v.shape, dtype=bool)
    return v > rtol * top


def _masked_ratio(num, den, mask) -> np.ndarray:
    """num / den where mask holds, 0 elsewhere (the chi convention)."""
    shape = np.broadcast_shapes(np.shape(num), np.shape(den), np.shape(mask))
    out = np.zeros(shape, dtype=np.result_type(num, den, float))
    np.divide(num, den, out=out, where=mask)
    return out


@dataclass(frozen=True)
class PropertyResult:
    name: str
    applicable: bool
    passed: bool
    max_violation: float


@dataclass(frozen=True)
class PropertyReport:
    results: tuple[PropertyResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.results if r.applicable)

    def __getitem__(self, name: str) -> PropertyResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)


def check_E_properties(space: FiniteMeasureSpace, partition: BlockPartition,
                       f, g, p: float = 2.0,
                       tol: float = 1e-12) -> PropertyReport:
    """Evaluate the textbook properties of E on concrete data.

    (module)   E(g f) = g E(f) for blockwise-constant g
    (positive) f >= 0 implies E(f) >= 0 (skipped when f is not real >= 0)
    (modulus)  |E(f)|^p <= E(|f|^p)
    (hoelder)  |E(f g)| <= E(|f|^p)^{1/p} E(|g|^q)^{1/q}, 1/p + 1/q = 1
    (jensen)   E(Re f)^2 <= E((Re f)^2)

    ``g`` must be blockwise constant (it stands in for the coarser
    algebra's functions).  Violations are measured atomwise; ``tol`` is
    absolute slack.
    """
    _check_compatible(space, partition)
    f = as_function(f, space)
    g = as_function(g, space)
    if not isinstance(p, numbers.Real) or p < 1:
        raise ValidationError(f"p must be a real >= 1, got {p!r}")
    p = float(p)
    g_proj = conditional_expectation(space, partition, g)
    if np.max(np.abs(g - g_proj)) > tol * max(1.0, float(np.max(np.abs(g)))):
        raise ValidationError("g must be blockwise constant for the module property")

    results = []

    e_f = conditional_expectation(space, partition, f)
    module_dev = float(np.max(np.abs(
        conditional_expectation(space, partition, g * f) - g * e_f
    )))
    results.append(PropertyResult("module", True, module_dev <= tol, module_dev))

    is_nonneg = bool(np.max(np.abs(f.imag)) <= tol and np.min(f.real) >= -tol)
    if is_nonneg:
        viol = float(max(0.0, -np.min(e_f.real)))
        results.append(PropertyResult("positive", True, viol <= tol, viol))
    else:
        results.append(PropertyResult("positive", False, True, 0.0))

    mod_dev = float(np.max(
        np.abs(e_f) ** p - conditional_expectation(space, partition,
                                                   np.abs(f) ** p).real
    ))
    results.append(PropertyResult("modulus", True, mod_dev <= tol, mod_dev))

    if p > 1:
        q = p / (p - 1.0)
        lhs = np.abs(conditional_expectation(space, partition, f * g))
        rhs = (
            conditional_expectation(space, partition, np.abs(f) ** p).real ** (1 / p)
            * conditional_expectation(space, partition, np.abs(g) ** q).real ** (1 / q)
        )
        hoelder_dev = float(np.max(lhs - rhs))
        results.append(PropertyResult("hoelder", True, hoelder_dev <= tol, hoelder_dev))
    else:
        results.append(PropertyResult("hoelder", False, True, 0.0))

    re_f = f.real.astype(complex)
    jensen_dev = float(np.max(
        conditional_expectation(space, partition, re_f).real ** 2
        - conditional_expectation(space, partition, re_f ** 2).real
    ))
    results.append(PropertyResult("jensen", True, jensen_dev <= tol, jensen_dev))

    return PropertyReport(results=tuple(results))


@dataclass(frozen=True)
class WeightedConditionalOperator:
    """The operator f -> w * E(u f) with its matrix representation.

    The matrix lives in the orthonormal basis e_i / sqrt(mass_i) and
    equals diag(w) P diag(u) with P the projector onto blockwise
    constants.
    """

    space: FiniteMeasureSpace
    partition: BlockPartition
    w: np.ndarray
    u: np.ndarray
    matrix: np.ndarray

    # blockwise expectations used by every criterion; precomputed once
    e_w2: np.ndarray = field(repr=False)
    e_u2: np.ndarray = field(repr=False)
    e_w: np.ndarray = field(repr=False)
    e_u: np.ndarray = field(repr=False)
    e_uw: np.ndarray = field(repr=False)


def build_operator(space: FiniteMeasureSpace, partition: BlockPartition,
                   w, u) -> WeightedConditionalOperator:
    """Materialize f -> w E(u f) as a matrix on the orthonormal atom basis."""
    _check_compatible(space, partition)
    w = as_function(w, space)
    u = as_function(u, space)
    p = conditional_projector(space, partition)
    matrix = (w[:, None] * p) * u[None, :]
    return WeightedConditionalOperator(
        space=space, partition=partition, w=w, u=u, matrix=matrix,
        e_w2=block_expectations(space, partition, np.abs(w) ** 2).real,
        e_u2=block_expectations(space, partition, np.abs(u) ** 2).real,
        e_w=block_expectations(space, partition, w),
        e_u=block_expectations(space, partition, u),
        e_uw=block_expectations(space, partition, u * w),
    )


def apply_operator(op: WeightedConditionalOperator, f) -> np.ndarray:
    """Atomwise action w * E(u f), bypassing the matrix."""
    return op.w * conditional_expectation(op.space, op.partition, op.u * f)


def to_coordinates(space: FiniteMeasureSpace, f) -> np.ndarray:
    """Coordinates of f in the orthonormal basis: f_i sqrt(mass_i)."""
    return as_function(f, space) * np.sqrt(space.masses)


def _weighted_conditional_matrix(space, partition, left, right) -> np.ndarray:
    """Matrix of f -> left * E(right f) in the orthonormal basis."""
    p = conditional_projector(space, partition)
    left = np.asarray(left, dtype=complex)
    right = np.asarray(right, dtype=complex)
    return (left[:, None] * p) * right[None, :]


@dataclass(frozen=True)
class NormFormulaReport:
    matrix_norm: float
    blockwise_norm: float
    deviation: float
    passed: bool


def norm_formula_check(op: WeightedConditionalOperator,
                       tol: float = DEFAULT_TOL) -> NormFormulaReport:
    """Compare ||T|| with max over blocks of sqrt(E|w|^2 * E|u|^2)."""
    matrix_norm = linalg.operator_norm(op.matrix)
    blockwise = float(np.sqrt(np.max(op.e_w2 * op.e_u2)))
    dev = abs(matrix_norm - blockwise)
    return NormFormulaReport(
        matrix_norm=matrix_norm,
        blockwise_norm=blockwise,
        deviation=dev,
        passed=dev <= tol * max(1.0, matrix_norm),
    )


def _hermitian_power(h: np.ndarray, m) -> np.ndarray:
    """H^m for Hermitian PSD H; integer m by repeated product, real m > 0
    through the eigendecomposition with negative rounding clipped."""
    if isinstance(m, numbers.Integral):
        return np.linalg.matrix_power(h, int(m))
    w, v = np.linalg.eigh((h + h.conj().T) / 2.0)
    powered = np.where(w > 0.0, w, 0.0) ** float(m)
    return (v * powered) @ v.conj().T


@dataclass(frozen=True)
class PowerIdentityReport:
    power: float
    deviation_t_star_t: float
    deviation_t_t_star: float
    passed: bool


def lemma31_check(op: WeightedConditionalOperator, m,
                  tol: float = DEFAULT_TOL) -> PowerIdentityReport:
    """Blockwise closed forms of (T*T)^m and (TT*)^m against matrix powers.

    (T*T)^m = M_{conj(u) (E|u|^2)^{m-1} chi_S (E|w|^2)^m} E M_u
    (TT*)^m = M_{w (E|w|^2)^{m-1} chi_G (E|u|^2)^m} E M_conj(w)

    with S, G the supports of E|u|^2 and E|w|^2.  Powers of the blockwise
    expectations follow the chi convention: off the support everything is
    0, so negative powers of vanishing blocks never occur.
    """
    if not isinstance(m, numbers.Real) or m <= 0:
        raise ValidationError(f"power m must be a real > 0, got {m!r}")
    space, partition = op.space, op.partition
    eu2 = expand_blockwise(partition, op.e_u2).real
    ew2 = expand_blockwise(partition, op.e_w2).real
    chi_s = support_mask(eu2)
    chi_g = support_mask(ew2)

    def masked_pow(base, expo, mask):
        out = np.zeros_like(base)
        np.power(base, expo, out=out, where=mask)
        return out

    left1 = (np.conj(op.u) * masked_pow(eu2, float(m) - 1.0, chi_s)
             * ew2 ** float(m))
    rhs1 = _weighted_conditional_matrix(space, partition, left1, op.u)
    lhs1 = _hermitian_power(op.matrix.conj().T @ op.matrix, m)
    dev1 = linalg.operator_norm(lhs1 - rhs1) / max(1.0, linalg.operator_norm(lhs1))

    left2 = (op.w * masked_pow(ew2, float(m) - 1.0, chi_g)
             * eu2 ** float(m))
    rhs2 = _weighted_conditional_matrix(space, partition, left2, np.conj(op.w))
    lhs2 = _hermitian_power(op.matrix @ op.matrix.conj().T, m)
    dev2 = linalg.operator_norm(lhs2 - rhs2) / max(1.0, linalg.operator_norm(lhs2))

    return PowerIdentityReport(
        power=float(m),
        deviation_t_star_t=dev1,
        deviation_t_t_star=dev2,
        passed=max(dev1, dev2) <= tol,
    )


@dataclass(frozen=True)
class PolarReport:
    factor_residual: float          # ||U |T| - T||
    modulus_min_eigenvalue: float   # smallest eigenvalue of |T|
    modulus_squared_residual: float  # || |T|^2 - T*T ||
    partial_isometry_residual: float  # ||U*U - projector onto range |T|}||
    passed: bool


def polar_decomposition_check(op: WeightedConditionalOperator,
                              tol: float = DEFAULT_TOL) -> PolarReport:
    """Verify the closed-form polar factors of the weighted operator.

    |T| f = (E|w|^2 / E|u|^2)^{1/2} chi_S conj(u) E(u f)
     U f  = (chi_{S and G} / (E|w|^2 E|u|^2))^{1/2} w E(u f)

    Checks: U |T| reassembles T; |T| is PSD and squares to T*T; U*U is the
    orthogonal projector onto the range of |T| (U is a partial isometry).
    """
    space, partition = op.space, op.partition
    eu2 = expand_blockwise(partition, op.e_u2).real
    ew2 = expand_blockwise(partition, op.e_w2).real
    chi_s = support_mask(eu2)
    chi_g = support_mask(ew2)

    modulus_weight = np.sqrt(_masked_ratio(ew2, eu2, chi_s).real)
    modulus = _weighted_conditional_matrix(
        space, partition, modulus_weight * np.conj(op.u), op.u
    )
    iso_weight = np.sqrt(_masked_ratio(1.0, ew2 * eu2, chi_s & chi_g).real)
    partial_iso = _weighted_conditional_matrix(
        space, partition, iso_weight * op.w, op.u
    )

    t_norm = linalg.operator_norm(op.matrix)
    factor_residual = linalg.operator_norm(partial_iso @ modulus - op.matrix)
    sq_residual = linalg.operator_norm(
        modulus @ modulus - op.matrix.conj().T @ op.matrix
    )
    psd = linalg.is_psd(modulus, tol=max(tol, 1e-10))
    range_proj = linalg.svd_rank_spaces(modulus, tol=1e-10).range.projector()
    iso_residual = linalg.operator_norm(
        partial_iso.conj().T @ partial_iso - range_proj
    )
    scale = max(1.0, t_norm)
    return PolarReport(
        factor_residual=factor_residual,
        modulus_min_eigenvalue=psd.min_eigenvalue,
        modulus_squared_residual=sq_residual,
        partial_isometry_residual=iso_residual,
        passed=bool(
            factor_residual <= tol * scale
            and psd.is_psd
            and sq_residual <= tol * max(1.0, t_norm ** 2)
            and iso_residual <= tol * scale
        ),
    )


def _blockwise_holds(margins: np.ndarray, mask: np.ndarray, scale: float,
                     tol: float) -> bool:
    """All masked blocks satisfy margin >= -tol * max(1, scale)."""
    if not mask.any():
        return True
    return bool(np.min(margins[mask]) >= -tol * max(1.0, scale))


@dataclass(frozen=True)
class PosinormalCriterionReport:
    """Blockwise posinormality criterion vs the direct matrix test.

    The equivalence is only claimed when the supports of E|u|^2 and E(u)
    coincide; otherwise ``applicable`` is False and only the necessary
    inequality (evaluated on the support of E(u)) is reported.
    """

    lam: float
    supports_match: bool
    applicable: bool
    blockwise_holds: bool
    matrix_holds: bool
    agree: bool | None
    block_margins: np.ndarray


def thm33_check(op: WeightedConditionalOperator, lam: float,
                tol: float = DEFAULT_TOL) -> PosinormalCriterionReport:
    """Blockwise lam^2 E|w|^2 |E u|^2 >= E|u|^2 |E w|^2 vs posinormality."""
    lam = float(lam)
    if not np.isfinite(lam) or lam <= 0:
        raise ValidationError(f"lambda must be a positive real, got {lam!r}")
    s_mask = support_mask(op.e_u2)
    s_prime = support_mask(op.e_u)
    supports_match = bool(np.array_equal(s_mask, s_prime))
    lhs = lam ** 2 * op.e_w2 * np.abs(op.e_u) ** 2
    rhs = op.e_u2 * np.abs(op.e_w) ** 2
    margins = lhs - rhs
    scale = float(max(np.max(np.abs(lhs), initial=0.0),
                      np.max(np.abs(rhs), initial=0.0)))
    blockwise = _blockwise_holds(margins, s_prime, scale, tol)
    matrix_holds = posinormal.is_posinormal(op.matrix, lam, tol=tol).holds
    return PosinormalCriterionReport(
        lam=lam,
        supports_match=supports_match,
        applicable=supports_match,
        blockwise_holds=blockwise,
        matrix_holds=matrix_holds,
        agree=(blockwise == matrix_holds) if supports_match else None,
        block_margins=margins,
    )


@dataclass(frozen=True)
class NPowerCriterionReport:
    """Blockwise n-power criterion vs the direct matrix test.

    Membership of the matrix implies the blockwise inequality (the
    necessity direction proved by plugging indicator functions in);
    ``necessity_ok`` records that implication on this data.
    """

    n: int
    lam: float
    blockwise_holds: bool
    matrix_holds: bool
    necessity_ok: bool
    block_margins: np.ndarray


def thm34_check(op: WeightedConditionalOperator, n: int, lam: float,
                tol: float = DEFAULT_TOL) -> NPowerCriterionReport:
    """lam^2 E|w|^2 |E u|^2 >= |E(uw)|^{2n} (E|u|^2 / (E|w|^2)^n) |E w|^2."""
    query = ClassQuery(k=0, n=n, lam=float(lam))
    chi_g = support_mask(op.e_w2)
    lhs = query.lam ** 2 * op.e_w2 * np.abs(op.e_u) ** 2
    rhs = (np.abs(op.e_uw) ** (2 * n)
           * _masked_ratio(op.e_u2, op.e_w2 ** n, chi_g).real
           * np.abs(op.e_w) ** 2)
    margins = lhs - rhs
    scale = float(max(np.max(np.abs(lhs), initial=0.0),
                      np.max(np.abs(rhs), initial=0.0)))
    blockwise = _blockwise_holds(margins, np.ones_like(chi_g), scale, tol)
    matrix_holds = posinormal.is_n_power_posinormal(
        op.matrix, n, query.lam, tol=tol
    ).holds
    return NPowerCriterionReport(
        n=n,
        lam=query.lam,
        blockwise_holds=blockwise,
        matrix_holds=matrix_holds,
        necessity_ok=(not matrix_holds) or blockwise,
        block_margins=margins,
    )


@dataclass(frozen=True)
class QuasiCriterionReport:
    """Three verdicts around the quasi-class criterion, none cross-asserted.

    ``stated_holds``: |E(uw)|^{2k+2} <= lam^2 (E|u|^2)^{2n-1} (E|w|^2)^{2kn-1}
    ``proof_form_holds``: the inequality actually displayed inside the
    source derivation, with exponent 2k+n-1 and a square-root factor
    ``matrix_holds``: the direct gap test on the materialized matrix

    Disagreements between the three are findings, not failures.
    """

    k: int
    n: int
    lam: float
    stated_holds: bool
    proof_form_holds: bool
    matrix_holds: bool
    stated_margins: np.ndarray
    proof_margins: np.ndarray

    @property
    def all_agree(self) -> bool:
        return self.stated_holds == self.proof_form_holds == self.matrix_holds


def thm35_check(op: WeightedConditionalOperator, k: int, n: int, lam: float,
                tol: float = DEFAULT_TOL) -> QuasiCriterionReport:
    """Evaluate both printed forms of the quasi-class criterion and the
    matrix gap test on the same data."""
    query = ClassQuery(k=k, n=n, lam=float(lam))
    chi_s = support_mask(op.e_u2)
    chi_g = support_mask(op.e_w2)

    def masked_pow(base, expo, mask):
        out = np.zeros_like(np.asarray(base, dtype=float))
        np.power(base, expo, out=out, where=mask)
        return out

    # Stated criterion; the 2kn-1 exponent goes negative for k = 0, where
    # the chi convention zeroes vanishing blocks instead of dividing.
    lhs_a = np.abs(op.e_uw) ** (2 * k + 2)
    rhs_a = (query.lam ** 2 * op.e_u2 ** (2 * n - 1)
             * masked_pow(op.e_w2, 2 * k * n - 1, chi_g))
    margins_a = rhs_a - lhs_a
    scale_a = float(max(np.max(np.abs(lhs_a), initial=0.0),
                        np.max(np.abs(rhs_a), initial=0.0)))
    stated = _blockwise_holds(margins_a, np.ones_like(chi_g), scale_a, tol)

    # Inner display of the derivation, as printed.
    lhs_b = query.lam ** 2 * op.e_u2 * op.e_w2 ** (2 * k) * np.abs(op.e_u) ** 2
    rhs_b = (np.abs(op.e_uw) ** (2 * k + n - 1)
             * np.sqrt(masked_pow(op.e_u2, 1.0, chi_s)
                       * _masked_ratio(1.0, op.e_w2 ** (n - 1), chi_g).real)
             * chi_g * np.abs(op.e_w) ** 2)
    margins_b = lhs_b - rhs_b
    scale_b = float(max(np.max(np.abs(lhs_b), initial=0.0),
                        np.max(np.abs(rhs_b), initial=0.0)))
    proof_form = _blockwise_holds(margins_b, np.ones_like(chi_g), scale_b, tol)

    matrix_holds = posinormal.is_member(op.matrix, query, tol=tol).holds
    return QuasiCriterionReport(
        k=k, n=n, lam=query.lam,
        stated_holds=stated,
        proof_form_holds=proof_form,
        matrix_holds=matrix_holds,
        stated_margins=margins_a,
        proof_margins=margins_b,
    )


def discretize_interval_example(n_atoms: int):
    """Midpoint discretization of the two-block interval example.

    The unit interval splits at 1/2 into two blocks; w is 2 on the left
    block and 1 on the right, u(x) = x on the left and 1 - x on the right,
    both sampled at the n_atoms midpoints of a uniform grid (masses
    1/n_atoms each).  Returns (space, partition, w, u).
    Requires n_atoms even so the split lands between atoms.
    """
    if not isinstance(n_atoms, (int, np.integer)) or n_atoms < 2 or n_atoms % 2:
        raise ValidationError(
            f"n_atoms must be an even integer >= 2, got {n_atoms!r}"
        )
    mid = (np.arange(n_atoms) + 0.5) / n_atoms
    space = FiniteMeasureSpace(
        np.full(n_atoms, 1.0 / n_atoms),
        labels=tuple(f"x={x:.6g}" for x in mid),
    )
    half = n_atoms // 2
    partition = BlockPartition([range(half), range(half, n_atoms)], n_atoms)
    left = mid < 0.5
    w = np.where(left, 2.0, 1.0).astype(complex)
    u = np.where(left, mid, 1.0 - mid).astype(complex)
    return space, partition, w, u
