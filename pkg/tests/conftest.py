import numpy as np
import pytest


def _entropy(m):
    w = np.linalg.eigvalsh(m)
    w = w[w > 0]
    return float(-np.sum(w * np.log2(w)))


def dense_number_measures(q, n_max):
    """Number-entangled state as a dense A x R x L array, traced with einsum.

    Shares no code with the package: returns (log_negativity, S_A, S_B, S_AB).
    """
    x = q * q
    psi = np.zeros((2, n_max + 2, n_max + 1))
    for n in range(n_max + 1):
        psi[0, n, n] = np.sqrt(1 - x) * q**n / np.sqrt(2)
        psi[1, n + 1, n] = (1 - x) * q**n * np.sqrt(n + 1) / np.sqrt(2)
    rho = np.einsum("arl,bsl->arbs", psi, psi)
    d = 2 * (n_max + 2)
    pt = rho.transpose(2, 1, 0, 3).reshape(d, d)
    log_neg = float(np.log2(np.abs(np.linalg.eigvalsh(pt)).sum()))
    rho_a = np.einsum("arbr->ab", rho)
    rho_b = np.einsum("aras->rs", rho)
    return log_neg, _entropy(rho_a), _entropy(rho_b), _entropy(rho.reshape(d, d))


@pytest.fixture
def dense_number():
    return dense_number_measures


ACCEPTANCE_LINES = []


@pytest.fixture
def record_criterion():
    """Log one pass/fail line per acceptance criterion, printed in the terminal summary."""

    def record(label, ok, detail):
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {label}: {detail}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
