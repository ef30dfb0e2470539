import numpy as np
import pytest
from numpy.testing import assert_allclose

from tracelab import (
    KrausChannel,
    XLogX,
    apply_channel,
    apply_fn,
    entropy,
    entropy_gain,
    entropy_gap,
    entropy_on_support,
    make_rng,
    multi_channel_gain,
    random_channel,
    relative_entropy,
    residual_entropy,
)
from tracelab.entropy import channel_block_embedding, residual_block_embedding
from tracelab.errors import ArgumentError, DomainError
from tracelab.linalg import random_contraction, random_pd, random_unitary

LOG2 = np.log(2.0)


def test_entropy_known_values():
    assert_allclose(entropy(np.eye(2) / 2.0), LOG2, rtol=1e-14)
    assert_allclose(entropy(np.array([[1.0]])), 0.0, atol=1e-15)
    assert_allclose(entropy(np.array([[2.0]])), -2.0 * LOG2, rtol=1e-14)


def test_entropy_rejects_singular():
    with pytest.raises(DomainError):
        entropy(np.diag([1.0, 0.0]))


def test_entropy_on_support_skips_null_space():
    a = np.diag([0.5, 0.5, 0.0])
    assert_allclose(entropy_on_support(a), LOG2, rtol=1e-13)
    with pytest.raises(DomainError):
        entropy_on_support(np.diag([1.0, -1e-3]))


def test_entropy_gap_identity_window_is_zero():
    a = random_pd(4, make_rng(0))
    assert abs(entropy_gap(a, np.eye(4))) <= 1e-12


def test_entropy_gap_scalar_closed_form():
    alpha, kappa = 1.7, 0.6
    got = entropy_gap(np.array([[alpha]]), np.array([[kappa]]))
    assert_allclose(got, -(kappa**2) * alpha * np.log(kappa**2), rtol=1e-12)


def test_entropy_gap_window_shape_checked():
    a = random_pd(3, make_rng(1))
    with pytest.raises(ArgumentError):
        entropy_gap(a, np.eye(4))


def test_entropy_gap_rank_deficient_window_rejected():
    a = random_pd(3, make_rng(2))
    with pytest.raises(DomainError):
        entropy_gap(a, np.zeros((3, 2)))


def test_residual_entropy_single_block_is_zero():
    a = random_pd(5, make_rng(3))
    assert abs(residual_entropy([a])) <= 1e-12


def test_residual_entropy_scalar_halves():
    got = residual_entropy([np.array([[0.5]]), np.array([[0.5]])])
    assert_allclose(got, -LOG2, rtol=1e-13)


@pytest.mark.parametrize("seed", range(20))
def test_residual_entropy_nonpositive(seed):
    rng = make_rng(seed, stream=1)
    blocks = [random_pd(4, rng) for _ in range(3)]
    assert residual_entropy(blocks) <= 1e-10


@pytest.mark.parametrize("seed", range(10))
def test_residual_entropy_equals_relative_entropy_sum(seed):
    rng = make_rng(seed, stream=2)
    blocks = [random_pd(3, rng) for _ in range(4)]
    total = sum(blocks)
    rel = sum(relative_entropy(b, total) for b in blocks)
    assert_allclose(residual_entropy(blocks), rel, atol=1e-10)


def test_relative_entropy_values():
    x = random_pd(4, make_rng(4))
    assert abs(relative_entropy(x, x)) <= 1e-12
    got = relative_entropy(np.array([[0.5]]), np.array([[1.0]]))
    assert_allclose(got, -0.5 * LOG2, rtol=1e-13)


def test_residual_block_embedding_reproduces_residual_entropy():
    """The pooled entropy defect survives the block-diagonal dilation."""
    rng = make_rng(5)
    blocks = [random_pd(3, rng) for _ in range(3)]
    big_a, big_k = residual_block_embedding(blocks)
    compressed = big_k.conj().T @ big_a @ big_k
    flow = float(np.real(np.trace(big_k.conj().T @ apply_fn(XLogX(), big_a) @ big_k)))
    got = entropy_on_support(compressed) + flow
    assert_allclose(got, residual_entropy(blocks), atol=1e-9)


def test_kraus_channel_validation():
    with pytest.raises(ArgumentError):
        KrausChannel(())
    with pytest.raises(ArgumentError, match="normalization"):
        KrausChannel((np.eye(2) * 0.5,))
    u = random_unitary(3, make_rng(6))
    chan = KrausChannel((u,))
    assert chan.input_dim == 3
    assert chan.output_dim == 3


def test_apply_channel_preserves_trace():
    rng = make_rng(7)
    chan = random_channel(3, 2, 3, rng)
    a = random_pd(3, rng)
    out = apply_channel(chan, a)
    assert_allclose(np.trace(out).real, np.trace(a).real, rtol=1e-10)
    assert out.shape == (2, 2)


def test_unitary_channel_gain_is_zero():
    rng = make_rng(8)
    u = random_unitary(4, rng)
    a = random_pd(4, rng)
    assert abs(entropy_gain(KrausChannel((u,)), a)) <= 1e-10


def test_random_channel_dimension_guard():
    with pytest.raises(ArgumentError):
        random_channel(5, 2, 2, make_rng(9))


def test_multi_channel_gain_single_channel_matches_gain():
    rng = make_rng(10)
    chan = random_channel(3, 3, 2, rng)
    a = random_pd(3, rng)
    assert_allclose(multi_channel_gain([chan], [a]), entropy_gain(chan, a), atol=1e-12)


def test_multi_channel_gain_requires_shared_output():
    rng = make_rng(11)
    c1 = random_channel(3, 2, 2, rng)
    c2 = random_channel(3, 3, 1, rng)
    a = random_pd(3, rng)
    with pytest.raises(ArgumentError):
        multi_channel_gain([c1, c2], [a, a])


def test_channel_block_embedding_reproduces_gain():
    rng = make_rng(12)
    chan = random_channel(3, 2, 3, rng)
    a = random_pd(3, rng)
    big_a, big_k = channel_block_embedding(chan, a)
    compressed = big_k.conj().T @ big_a @ big_k
    flow = float(np.real(np.trace(big_k.conj().T @ apply_fn(XLogX(), big_a) @ big_k)))
    got = entropy_on_support(compressed) + flow
    assert_allclose(got, entropy_gain(chan, a), atol=1e-9)


def test_entropy_gap_matches_gain_through_embedding_window():
    """Observation through the stacked-Kraus window is the channel gain."""
    rng = make_rng(13)
    chan = random_channel(2, 2, 2, rng)
    a = random_pd(2, rng)
    big_a, big_k = channel_block_embedding(chan, a)
    # keep only the live first block column so the compression has full rank
    k_live = big_k[:, : chan.output_dim]
    assert_allclose(entropy_gap(big_a, k_live), entropy_gain(chan, a), atol=1e-9)
