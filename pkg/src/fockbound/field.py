"""Field operators ``W(x) = l(x) + l(x)^*`` on the truncated symmetric Fock space.

These are the only floating-point computations in the package: spectral norms
and the unitary groups ``exp(i t W(x))``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .actions import Action, BasePoint
from .fock import FockSpace, SparseOperator


class FieldError(ValueError):
    pass


def field_matrix(action: Action, x: BasePoint, letters: Sequence[BasePoint], N: int):
    """Dense matrix of ``P_N W(x) P_N`` on the symmetric basis over ``letters`` (which must contain ``x``)."""
    fock = FockSpace(action, "sym", N)
    letters = sorted(set(letters) | {x}, key=lambda p: p.key)
    basis = fock.basis(letters)
    mat = SparseOperator.from_operator(fock.field(x), basis).to_dense()
    degrees = np.array([fock.degree(w) for w in basis])
    return mat, degrees


def norm_bound(m: int) -> float:
    """``2 sqrt(m + 1)``, the bound on ``||W(x) P_{<=m}||``."""
    return 2.0 * math.sqrt(m + 1)


def truncated_field_norm(action: Action, x: BasePoint, letters: Sequence[BasePoint], m: int) -> float:
    """Spectral norm of ``W(x) P_{<=m}``, computed on level ``m + 1`` where nothing is cut off."""
    mat, degrees = field_matrix(action, x, letters, m + 1)
    block = mat[:, degrees <= m]
    return float(np.linalg.norm(block, 2))


def truncation_error_bound(t: float, m: int, N: int) -> float:
    """Bound on ``||(exp(itW) - exp(itW_N)) P_{<=m}||``.

    The two series agree up to order ``N - m``; beyond that each ``W^n P_{<=m}``
    has norm at most ``prod_{j=1..n} 2 sqrt(m + j)``, so the error is at most
    ``2 sum_{n > N - m} a_n`` with ``a_n = |t|^n prod_{j<=n} 2 sqrt(m + j) / n!``.
    The ratio ``a_{n+1}/a_n = 2|t| sqrt(m+n+1)/(n+1)`` decreases in ``n``, so once
    it is at most ``r < 1`` the remaining tail is at most ``a_n r/(1 - r)``.
    """
    if N < m:
        return math.inf
    t = abs(t)
    if t == 0:
        return 0.0
    total = 0.0
    log_a = 0.0
    n = 0
    while True:
        n += 1
        log_a += math.log(2 * t) + 0.5 * math.log(m + n) - math.log(n)
        if n <= N - m:
            continue
        a_n = math.exp(log_a)
        total += a_n
        r = 2 * t * math.sqrt(m + n + 1) / (n + 1)
        if r <= 0.5:
            return 2 * (total + a_n * r / (1 - r))


def expm_hermitian(h: np.ndarray, t: float, norm_hint: float | None = None) -> np.ndarray:
    """``exp(i t h)`` by scaling and squaring of the Taylor series.

    The scaling is chosen from ``norm_hint`` (an upper bound on ``||h||``) so
    that the scaled argument has norm at most 1/2; the series is summed until
    the remainder bound ``theta^(K+1)/(K+1)! * e^theta`` drops below 1e-18.
    """
    n = h.shape[0]
    bound = norm_hint if norm_hint is not None else float(np.linalg.norm(h, 2))
    theta_full = abs(t) * bound
    s = max(0, math.ceil(math.log2(theta_full / 0.5))) if theta_full > 0.5 else 0
    a = (1j * t / 2**s) * h
    theta = theta_full / 2**s
    result = np.eye(n, dtype=complex)
    term = np.eye(n, dtype=complex)
    k = 0
    while True:
        k += 1
        term = term @ a / k
        result = result + term
        if theta ** (k + 1) / math.factorial(k + 1) * math.exp(theta) < 1e-18 or k > 60:
            break
    for _ in range(s):
        result = result @ result
    return result


@dataclass
class ExpField:
    matrix: np.ndarray
    degrees: np.ndarray
    safe_degree: int
    error_bound: float
    t: float
    truncation: int

    def block(self) -> np.ndarray:
        """Columns of the degree-safe block."""
        return self.matrix[:, self.degrees <= self.safe_degree]


def exp_field(
    t: float,
    action: Action,
    x: BasePoint,
    N: int,
    letters: Sequence[BasePoint] | None = None,
    tol: float = 1e-9,
    safe_degree: int | None = None,
) -> ExpField:
    """``exp(i t W(x))`` on truncation level ``N`` with a certified degree-safe block.

    The block is the largest ``m`` (or the requested ``safe_degree``) whose
    truncation error bound is at most ``tol``; raises :class:`FieldError` if no
    block qualifies.
    """
    letters = list(letters) if letters is not None else [x]
    mat, degrees = field_matrix(action, x, letters, N)
    if safe_degree is None:
        candidates = [m for m in range(N + 1) if truncation_error_bound(t, m, N) <= tol]
        if not candidates:
            raise FieldError(
                f"tolerance {tol} not attainable at truncation {N} for t={t}; raise the truncation"
            )
        m = max(candidates)
    else:
        m = safe_degree
        if truncation_error_bound(t, m, N) > tol:
            raise FieldError(
                f"degree-safe block {m} misses tolerance {tol} at truncation {N} for t={t}"
            )
    E = expm_hermitian(mat, t, norm_hint=norm_bound(N))
    return ExpField(E, degrees, m, truncation_error_bound(t, m, N), t, N)


def unitarity_defect(ef_plus: ExpField, ef_minus: ExpField) -> float:
    """``max(||(E(t)E(-t) - 1)P||, ||(E(t)^* E(t) - 1)P||)`` on the degree-safe block."""
    cols = ef_plus.degrees <= ef_plus.safe_degree
    n = ef_plus.matrix.shape[0]
    eye = np.eye(n)[:, cols]
    group_law = (ef_plus.matrix @ ef_minus.matrix)[:, cols] - eye
    isometry = (ef_plus.matrix.conj().T @ ef_plus.matrix)[:, cols] - eye
    return float(max(np.linalg.norm(group_law, 2), np.linalg.norm(isometry, 2)))
