import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from polycrit.rng import Xoshiro256StarStar, random_matrix, random_zeros

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture
def rng():
    return Xoshiro256StarStar(0x5EED)


def make_rng(seed: int) -> Xoshiro256StarStar:
    return Xoshiro256StarStar(seed)


def random_hermitian(rng: Xoshiro256StarStar, n: int) -> np.ndarray:
    m = random_matrix(rng, n)
    return (m + m.conj().T) / 2.0


def random_unitary(rng: Xoshiro256StarStar, n: int) -> np.ndarray:
    q, r = np.linalg.qr(random_matrix(rng, n))
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_normal_matrix(rng: Xoshiro256StarStar, n: int) -> np.ndarray:
    u = random_unitary(rng, n)
    lam = random_zeros(rng, n)
    return (u * lam[None, :]) @ u.conj().T
