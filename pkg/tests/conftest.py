import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from groupgraphs.groups import cyclic, dicyclic, dihedral  # noqa: E402


def catalog():
    """{C_k : k <= 24} plus {D_4m, Q_4m : m <= 16}."""
    return (
        [cyclic(k) for k in range(1, 25)]
        + [dihedral(m) for m in range(1, 17)]
        + [dicyclic(m) for m in range(1, 17)]
    )


def small_groups(max_order=64):
    out = [cyclic(n) for n in (1, 2, 3, 4, 6, 8, 12, 30, 64)]
    out += [dihedral(m) for m in range(1, max_order // 4 + 1)]
    out += [dicyclic(m) for m in range(1, max_order // 4 + 1)]
    return out


@pytest.fixture(params=catalog(), ids=str)
def catalog_group(request):
    return request.param


ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        ok, text = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {text}")
