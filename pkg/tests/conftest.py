import numpy as np
import pytest

from ncteleport import kernels


def random_density(rng, dim=4, rank=None):
    rank = dim if rank is None else rank
    g = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_hermitian(rng, dim):
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return (a + a.conj().T) / 2


def householder_unitary(rng, dim, reflections=3):
    u = np.diag(np.exp(1j * rng.uniform(0, 2 * np.pi, dim)))
    for _ in range(reflections):
        v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
        v /= np.linalg.norm(v)
        u = (np.eye(dim) - 2 * np.outer(v, v.conj())) @ u
    return u


def random_unitary(rng, dim):
    q, r = np.linalg.qr(rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim)))
    return q * (np.diag(r) / np.abs(np.diag(r)))


def assert_valid_state(m, herm=1e-12, trace=1e-12, psd=1e-10):
    m = np.asarray(m)
    assert np.abs(m - m.conj().T).max() <= herm
    assert abs(np.trace(m) - 1) <= trace
    assert np.linalg.eigvalsh(m).min() >= -psd


@pytest.fixture
def rng():
    return np.random.default_rng(20261019)


@pytest.fixture(params=kernels.available_backends())
def backend(request):
    return kernels.get_backend(request.param)


_CRITERIA = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    name = report.nodeid.split("::test_criterion_", 1)[1]
    if report.when == "call" or report.outcome != "passed":
        status = "PASS" if report.passed else ("SKIP" if report.skipped else "FAIL")
        _CRITERIA[name] = (status, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_CRITERIA, key=lambda n: int(n.split("_", 1)[0])):
        status, duration = _CRITERIA[name]
        number, label = name.split("_", 1)
        terminalreporter.write_line(f"criterion {number:>2} {status}  {label.replace('_', ' ')} ({duration:.2f}s)")
