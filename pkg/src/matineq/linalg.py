"""Dense complex small-matrix kernel.

Arithmetic, Hermitian eigendecomposition, singular values, fractional powers
and scalar functions of positive (semi)definite matrices, Hadamard product.
Everything is a pure function of validated ``complex128`` arrays; nothing here
mutates its inputs. Decompositions are LAPACK-backed (``numpy.linalg``), which
is both faster and more accurate than anything hand-rolled at n <= 8.

Conventions (documented because floating point forces them):

* eigenvalues of nominally PSD matrices in ``[-TAU_PSD * scale, 0)`` are
  clamped to 0 before powers/functions are applied;
* ``0**0 = 1`` inside :func:`psd_power`, so ``A**0 = I`` holds even for
  singular PSD ``A``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    InvalidMatrix,
    NoConvergence,
    NotHermitian,
    NotPSD,
    SingularForNegativePower,
)
from .scalarfn import ScalarFn

__all__ = [
    "TAU_EIG",
    "TAU_PSD",
    "TAU_PD",
    "HermEig",
    "as_matrix",
    "herm_eig",
    "singular_values",
    "psd_power",
    "matrix_fn",
    "hadamard",
    "mul",
    "adjoint",
    "add",
    "sub",
    "scale",
]

TAU_EIG = 1e-10   # Hermitian symmetry tolerance (relative)
TAU_PSD = 1e-10   # eigenvalue clamping threshold (relative to spectral scale)
TAU_PD = 1e-10    # strict positivity floor for negative powers (relative)


def as_matrix(a) -> np.ndarray:
    """Validate and return a finite square complex128 matrix (copy not forced)."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim == 0:
        m = m.reshape(1, 1)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise InvalidMatrix(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] == 0:
        raise InvalidMatrix("empty matrix")
    if not np.all(np.isfinite(m.view(np.float64))):
        raise InvalidMatrix("matrix has non-finite entries")
    return m


@dataclass(frozen=True)
class HermEig:
    """Spectral decomposition ``A = V diag(lam) V*`` with descending real ``lam``."""

    eigenvalues: np.ndarray   # (n,) real, descending
    eigenvectors: np.ndarray  # (n, n) complex, orthonormal columns


def herm_eig(a, sym_tol: float = TAU_EIG) -> HermEig:
    """Eigendecomposition of a numerically Hermitian matrix.

    Raises NotHermitian when ``||A - A*||_F > sym_tol * ||A||_F`` and
    NoConvergence if the underlying iteration fails. The decomposition is of
    the Hermitian part ``(A + A*)/2``, which is what the tolerance licenses.
    """
    m = as_matrix(a)
    scale = np.linalg.norm(m)
    if np.linalg.norm(m - m.conj().T) > sym_tol * max(1.0, scale):
        raise NotHermitian(f"asymmetry exceeds {sym_tol} * scale")
    herm = 0.5 * (m + m.conj().T)
    try:
        lam, vec = np.linalg.eigh(herm)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    return HermEig(eigenvalues=lam[::-1].copy(), eigenvectors=vec[:, ::-1].copy())


def singular_values(m) -> np.ndarray:
    """Descending singular values of ``M`` (the eigenvalues of ``|M|``)."""
    m = as_matrix(m)
    try:
        return np.linalg.svd(m, compute_uv=False)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc


def _clamped_psd_spectrum(a, *, context: str) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition with small negative eigenvalues clamped to zero."""
    eig = herm_eig(a)
    lam = eig.eigenvalues.copy()
    spec_scale = float(np.max(np.abs(lam))) if lam.size else 0.0
    if np.min(lam) < -TAU_PSD * spec_scale:
        raise NotPSD(f"{context}: min eigenvalue {np.min(lam):.3e} below -{TAU_PSD} * scale")
    lam[lam < 0.0] = 0.0
    return lam, eig.eigenvectors


def _power_with_convention(lam: np.ndarray, t: float) -> np.ndarray:
    # 0**0 = 1 so that A**0 = I even for singular PSD A.
    if t == 0.0:
        return np.ones_like(lam)
    return np.power(lam, t)


def psd_power(a, t: float) -> np.ndarray:
    """Fractional power ``A**t`` of a PSD matrix via its spectral decomposition.

    Negative ``t`` additionally requires ``A`` positive definite
    (min eigenvalue >= TAU_PD * scale).
    """
    t = float(t)
    lam, vec = _clamped_psd_spectrum(a, context="psd_power")
    if t < 0.0:
        spec_scale = float(np.max(lam)) if lam.size else 0.0
        if spec_scale == 0.0 or np.min(lam) < TAU_PD * spec_scale:
            raise SingularForNegativePower(
                f"negative power {t} of a singular (or near-singular) matrix"
            )
    powered = _power_with_convention(lam, t)
    out = (vec * powered) @ vec.conj().T
    return 0.5 * (out + out.conj().T)


def matrix_fn(a, f: ScalarFn) -> np.ndarray:
    """``V diag(f(lam)) V*`` for numerically Hermitian ``A``.

    Eigenvalues within the PSD clamping band are snapped to 0 first; a spectrum
    point outside ``f``'s domain raises DomainViolation.
    """
    eig = herm_eig(a)
    lam = eig.eigenvalues.copy()
    spec_scale = float(np.max(np.abs(lam))) if lam.size else 0.0
    lam[(lam < 0.0) & (lam >= -TAU_PSD * spec_scale)] = 0.0
    vals = f(lam)
    out = (eig.eigenvectors * vals) @ eig.eigenvectors.conj().T
    return 0.5 * (out + out.conj().T)


def hadamard(a, b) -> np.ndarray:
    """Entrywise (Schur) product ``A o B``."""
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"shapes {a.shape} and {b.shape}")
    return a * b


def mul(a, b) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"shapes {a.shape} and {b.shape}")
    return a @ b


def adjoint(a) -> np.ndarray:
    return as_matrix(a).conj().T.copy()


def add(a, b) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"shapes {a.shape} and {b.shape}")
    return a + b


def sub(a, b) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"shapes {a.shape} and {b.shape}")
    return a - b


def scale(c: complex, a) -> np.ndarray:
    return complex(c) * as_matrix(a)
