"""
Seeded random unitaries and the factorisation U = O1 diag(e^{i theta}) O2
with real orthogonal O1, O2.

The factorisation diagonalises the symmetric unitary S = U^T U in a real
orthonormal eigenbasis Q. Then V = U Q diag(e^{-i theta}) satisfies
V^T V = I and V* V = I, so V is real, and U = V diag(e^{i theta}) Q^T.
"""

import cmath
import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from config.settings import settings
from config.logging_config import get_logger
from groups.errors import CapExceededError, DecompositionError, InvalidElementError, ResidueCheckError

logger = get_logger(__name__)


def principal_half_angle(angle: float) -> float:
    """Half of an argument, folded into (-pi/2, pi/2]."""
    theta = angle / 2.0
    while theta <= -math.pi / 2:
        theta += math.pi
    while theta > math.pi / 2:
        theta -= math.pi
    return theta


def semipolar(z: complex) -> Tuple[float, float]:
    """z = kappa * e^{i theta} with real kappa and theta in [0, pi)."""
    if z == 0:
        return 0.0, 0.0
    radius, angle = cmath.polar(z)
    if angle < 0:
        angle += 2 * math.pi
    if angle >= math.pi:
        return -radius, angle - math.pi
    return radius, angle


def random_unitary(n: int, seed: int) -> np.ndarray:
    """QR of a complex Gaussian matrix from a Philox stream, phases fixed by diag(R)."""
    if n < 1:
        raise InvalidElementError(f"n must be positive, got {n}")
    if n > settings.unitary_max_n:
        raise CapExceededError("random unitary size", settings.unitary_max_n, n)
    rng = np.random.Generator(np.random.Philox(seed))
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / math.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    phases = d / np.abs(d)
    u = q * phases[np.newaxis, :]
    residual = unitarity_residual(u)
    if residual > settings.random_unitary_tol:
        raise ResidueCheckError(f"Generated matrix is unitary only to {residual:.3e}")
    return u


def unitarity_residual(u: np.ndarray) -> float:
    return float(np.linalg.norm(u.conj().T @ u - np.eye(u.shape[0])))


def orthogonality_residual(o: np.ndarray) -> float:
    return float(np.linalg.norm(o.T @ o - np.eye(o.shape[0])))


def cluster_by_argument(eigenvalues: np.ndarray, gap: float) -> List[List[int]]:
    """Index groups of unit-circle eigenvalues whose arguments are within ``gap``."""
    args = np.angle(eigenvalues)
    order = [int(i) for i in np.argsort(args)]
    clusters: List[List[int]] = [[order[0]]]
    for prev, cur in zip(order, order[1:]):
        if args[cur] - args[prev] > gap:
            clusters.append([cur])
        else:
            clusters[-1].append(cur)
    # arguments near -pi and pi describe the same point
    if len(clusters) > 1 and args[order[0]] + 2 * math.pi - args[order[-1]] <= gap:
        clusters[0] = clusters.pop() + clusters[0]
    return clusters


def _real_eigenbasis(s: np.ndarray, gap: float) -> np.ndarray:
    n = s.shape[0]
    eigenvalues = np.linalg.eigvals(s)
    clusters = cluster_by_argument(eigenvalues, gap)
    if len(clusters) == 1:
        # scalar S: every real basis diagonalises it
        return np.eye(n)
    blocks = []
    for members in clusters:
        k = len(members)
        lam = np.mean(eigenvalues[members])
        lam /= abs(lam)
        _, _, vh = np.linalg.svd(s - lam * np.eye(n))
        null = vh[-k:].conj().T
        # the eigenspace is closed under conjugation, so its real and
        # imaginary parts span a real k-dimensional subspace
        left, _, _ = np.linalg.svd(np.hstack([null.real, null.imag]))
        blocks.append(left[:, :k])
    q, _ = np.linalg.qr(np.hstack(blocks))
    return q


@dataclass
class DecompositionResult:
    """U = o1 @ diag(exp(i thetas)) @ o2."""
    o1: np.ndarray
    o2: np.ndarray
    thetas: np.ndarray
    reconstruction_error: float
    orthogonality_error: float
    imaginary_residue: float

    def reconstruct(self) -> np.ndarray:
        return self.o1 @ np.diag(np.exp(1j * self.thetas)) @ self.o2

    def to_json(self) -> dict:
        return {
            "o1": self.o1.tolist(),
            "o2": self.o2.tolist(),
            "thetas": self.thetas.tolist(),
            "reconstruction_error": self.reconstruction_error,
            "orthogonality_error": self.orthogonality_error,
            "imaginary_residue": self.imaginary_residue,
        }


def odo_decompose(u: np.ndarray, tol: Optional[float] = None) -> DecompositionResult:
    """
    Factor a unitary as O1 diag(e^{i theta}) O2.

    Raises DecompositionError for non-square or non-unitary input and
    ResidueCheckError when a residue check fails; ``tol`` overrides the
    reconstruction tolerance.
    """
    u = np.asarray(u, dtype=complex)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise DecompositionError(f"Expected a square matrix, got shape {u.shape}")
    n = u.shape[0]
    tol = settings.reconstruction_tol if tol is None else tol
    residual = unitarity_residual(u)
    if residual > settings.unitarity_tol:
        raise DecompositionError(f"Input is not unitary: |U*U - I| = {residual:.3e}")

    s = u.T @ u
    s = (s + s.T) / 2.0
    q = _real_eigenbasis(s, settings.eigen_cluster_gap)
    d = np.diag(q.T @ s @ q)
    thetas = np.array([principal_half_angle(float(np.angle(x))) for x in d])

    v = u @ q @ np.diag(np.exp(-1j * thetas))
    imaginary = float(np.max(np.abs(v.imag)))
    if imaginary > tol:
        raise ResidueCheckError(f"O1 has imaginary residue {imaginary:.3e} above {tol:.1e}")
    o1 = v.real
    o2 = q.T.copy()

    result = DecompositionResult(
        o1=o1,
        o2=o2,
        thetas=thetas,
        reconstruction_error=0.0,
        orthogonality_error=max(orthogonality_residual(o1), orthogonality_residual(o2)),
        imaginary_residue=imaginary,
    )
    result.reconstruction_error = float(np.linalg.norm(u - result.reconstruct()))
    if result.reconstruction_error > tol:
        raise ResidueCheckError(f"Reconstruction error {result.reconstruction_error:.3e} above {tol:.1e}")
    if result.orthogonality_error > settings.orthogonality_tol:
        raise ResidueCheckError(f"Orthogonality error {result.orthogonality_error:.3e}")
    logger.debug("decomposed %dx%d unitary: reconstruction %.2e", n, n, result.reconstruction_error)
    return result
