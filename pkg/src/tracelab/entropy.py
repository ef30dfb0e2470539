"""Von Neumann entropy functionals and completely positive trace maps.

Conventions: entropy uses the natural logarithm.  A channel is stored as
Kraus blocks a_1, ..., a_k of common shape n x m with sum_i a_i a_i* = I_n,
acting as Phi(A) = sum_i a_i* A a_i; this transposed normalization keeps
Phi trace preserving.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ArgumentError, DomainError
from .linalg import (
    POSITIVITY_FLOOR,
    as_positive,
    hermitian_part,
    random_unitary,
    spectrum,
)
from .linalg import apply_fn
from .scalarfn import Log, XLogX

__all__ = [
    "entropy",
    "entropy_on_support",
    "entropy_gap",
    "residual_entropy",
    "relative_entropy",
    "KrausChannel",
    "apply_channel",
    "entropy_gain",
    "multi_channel_gain",
    "random_channel",
    "residual_block_embedding",
    "channel_block_embedding",
]

_KRAUS_TOL = 1e-10


def entropy(a) -> float:
    """Von Neumann entropy -Tr a log a of a positive definite matrix."""
    lam = spectrum(a)
    if float(lam[0]) <= POSITIVITY_FLOOR:
        raise DomainError(
            f"entropy needs a positive definite matrix; min eigenvalue {float(lam[0]):.3e}"
        )
    return float(-np.sum(lam * np.log(lam)))


def entropy_on_support(a, cut: float | None = None) -> float:
    """Entropy of a positive semidefinite matrix restricted to its support.

    Eigenvalues at or below ``cut`` (default 1e-12 relative to the largest)
    contribute 0, the continuous extension of -t log t at 0.  Negative
    eigenvalues beyond the cut are rejected.
    """
    lam = spectrum(a)
    top = float(lam[-1]) if lam.size else 0.0
    if cut is None:
        cut = POSITIVITY_FLOOR * (1.0 + max(top, 0.0))
    if float(lam[0]) < -cut:
        raise DomainError(
            f"entropy_on_support needs a positive semidefinite matrix; "
            f"min eigenvalue {float(lam[0]):.3e}"
        )
    live = lam[lam > cut]
    return float(-np.sum(live * np.log(live)))


def entropy_gap(a, k) -> float:
    """S(K*AK) + Tr K*(A log A)K: entropy produced by observing A through K.

    Convex in A for an arbitrary window matrix K.  Requires K*AK to be
    positive definite, so K must have full column rank on the support of A.
    """
    a = as_positive(a)
    k = np.asarray(k, dtype=np.complex128)
    if k.ndim != 2 or k.shape[0] != a.shape[0]:
        raise ArgumentError(
            f"window matrix must have {a.shape[0]} rows, got shape {k.shape}"
        )
    compressed = hermitian_part(k.conj().T @ a @ k)
    lam = spectrum(compressed)
    if float(lam[0]) <= POSITIVITY_FLOOR:
        raise DomainError(
            f"K*AK is rank deficient: min eigenvalue {float(lam[0]):.3e}"
        )
    flow = float(np.real(np.trace(k.conj().T @ apply_fn(XLogX(), a) @ k)))
    return float(-np.sum(lam * np.log(lam))) + flow


def residual_entropy(blocks) -> float:
    """S(sum_i A_i) - sum_i S(A_i) for positive definite blocks.

    Nonpositive: pooling positive matrices never carries more entropy than
    the blocks held separately.
    """
    blocks = [as_positive(b) for b in blocks]
    if not blocks:
        raise ArgumentError("residual_entropy needs at least one block")
    n = blocks[0].shape[0]
    if any(b.shape[0] != n for b in blocks):
        raise ArgumentError("all blocks must share one dimension")
    total = blocks[0].copy()
    for b in blocks[1:]:
        total += b
    return entropy(total) - sum(entropy(b) for b in blocks)


def relative_entropy(x, y) -> float:
    """Tr x (log x - log y) for positive definite x, y of equal size."""
    x = as_positive(x)
    y = as_positive(y)
    if x.shape != y.shape:
        raise ArgumentError(f"shape mismatch: {x.shape} vs {y.shape}")
    log_y = apply_fn(Log(), y)
    lam = spectrum(x)
    return float(np.sum(lam * np.log(lam)) - np.real(np.trace(x @ log_y)))


@dataclass(frozen=True)
class KrausChannel:
    """Completely positive trace preserving map in Kraus form.

    Blocks a_i are n x m with sum_i a_i a_i* = I_n (checked to 1e-10), and
    the channel acts on n x n matrices as Phi(A) = sum_i a_i* A a_i,
    producing an m x m matrix.
    """

    kraus: tuple[np.ndarray, ...]

    def __post_init__(self):
        if not self.kraus:
            raise ArgumentError("a channel needs at least one Kraus block")
        blocks = tuple(np.asarray(b, dtype=np.complex128) for b in self.kraus)
        shape = blocks[0].shape
        if len(shape) != 2:
            raise ArgumentError("Kraus blocks must be matrices")
        if any(b.shape != shape for b in blocks):
            raise ArgumentError("Kraus blocks must share one shape")
        total = sum(b @ b.conj().T for b in blocks)
        residual = float(np.max(np.abs(total - np.eye(shape[0]))))
        if residual > _KRAUS_TOL:
            raise ArgumentError(
                f"Kraus normalization sum a_i a_i* = I violated by {residual:.3e}"
            )
        object.__setattr__(self, "kraus", blocks)

    @property
    def input_dim(self) -> int:
        return self.kraus[0].shape[0]

    @property
    def output_dim(self) -> int:
        return self.kraus[0].shape[1]


def apply_channel(channel: KrausChannel, a) -> np.ndarray:
    """Phi(A) = sum_i a_i* A a_i; trace preserving and positivity preserving."""
    a = as_positive(a)
    if a.shape[0] != channel.input_dim:
        raise ArgumentError(
            f"channel expects input dimension {channel.input_dim}, got {a.shape[0]}"
        )
    out = sum(b.conj().T @ a @ b for b in channel.kraus)
    out = hermitian_part(out)
    smallest = float(spectrum(out)[0])
    if smallest <= POSITIVITY_FLOOR:
        raise DomainError(
            f"channel output is not positive definite: min eigenvalue {smallest:.3e}"
        )
    return out


def entropy_gain(channel: KrausChannel, a) -> float:
    """S(Phi(A)) - S(A), convex in A and zero for unitary channels."""
    return entropy(apply_channel(channel, a)) - entropy(a)


def multi_channel_gain(channels, blocks) -> float:
    """S(sum_i Phi_i(A_i)) - sum_i S(A_i) for channels with one output space."""
    channels = list(channels)
    blocks = list(blocks)
    if len(channels) != len(blocks) or not channels:
        raise ArgumentError("need equally many channels and blocks, at least one each")
    m = channels[0].output_dim
    if any(c.output_dim != m for c in channels):
        raise ArgumentError("all channels must share one output dimension")
    outputs = [apply_channel(c, b) for c, b in zip(channels, blocks)]
    total = outputs[0].copy()
    for o in outputs[1:]:
        total += o
    return entropy(total) - sum(entropy(b) for b in blocks)


def random_channel(n: int, m: int, k: int, rng: np.random.Generator) -> KrausChannel:
    """Random channel with k Kraus blocks of shape n x m, needing k m >= n.

    The blocks are carved out of the first n columns of a Haar-style
    unitary on the dilated k m dimensional space, which enforces the
    normalization exactly up to rounding.
    """
    if n < 1 or m < 1 or k < 1:
        raise ArgumentError(f"dimensions must be >= 1, got (n={n}, m={m}, k={k})")
    if k * m < n:
        raise ArgumentError(f"dilated dimension k*m = {k * m} must be >= n = {n}")
    u = random_unitary(k * m, rng)
    rows = u[:, :n].conj().T
    return KrausChannel(tuple(rows[:, i * m : (i + 1) * m] for i in range(k)))


def residual_block_embedding(blocks):
    """Block-diagonal embedding and the window of stacked identities.

    Returns (A, K) with A = diag(A_1, ..., A_k) and K carrying the identity
    in every block row of its first block column, so that K*AK has the
    pooled sum as its leading block and zeros elsewhere.
    """
    blocks = [as_positive(b) for b in blocks]
    if not blocks:
        raise ArgumentError("need at least one block")
    n = blocks[0].shape[0]
    if any(b.shape[0] != n for b in blocks):
        raise ArgumentError("all blocks must share one dimension")
    k = len(blocks)
    big_a = np.zeros((k * n, k * n), dtype=np.complex128)
    big_k = np.zeros((k * n, k * n), dtype=np.complex128)
    for i, b in enumerate(blocks):
        big_a[i * n : (i + 1) * n, i * n : (i + 1) * n] = b
        big_k[i * n : (i + 1) * n, 0:n] = np.eye(n)
    return big_a, big_k


def channel_block_embedding(channel: KrausChannel, a):
    """Embedding that reduces the observation gap to the channel gain.

    Returns (A, K) with A = diag(a, ..., a) (one copy per Kraus block) and
    K stacking the Kraus blocks in its first block column, so K*AK has
    Phi(a) as its leading block and zeros elsewhere.
    """
    a = as_positive(a)
    if a.shape[0] != channel.input_dim:
        raise ArgumentError(
            f"channel expects input dimension {channel.input_dim}, got {a.shape[0]}"
        )
    k = len(channel.kraus)
    n, m = channel.input_dim, channel.output_dim
    big_a = np.zeros((k * n, k * n), dtype=np.complex128)
    big_k = np.zeros((k * n, k * m), dtype=np.complex128)
    for i, block in enumerate(channel.kraus):
        big_a[i * n : (i + 1) * n, i * n : (i + 1) * n] = a
        big_k[i * n : (i + 1) * n, 0:m] = block
    return big_a, big_k
