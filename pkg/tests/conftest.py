from functools import lru_cache

import pytest

from goodgroups.classifier import builtin_catalog
from goodgroups.groups import todd_coxeter
from goodgroups.presentation import builtin


@lru_cache(maxsize=None)
def group(name: str, *params: int):
    return todd_coxeter(builtin(name, params))


@lru_cache(maxsize=None)
def catalog_group(name: str):
    for e in builtin_catalog():
        if e.name == name:
            return e.build()
    raise KeyError(name)


@pytest.fixture
def q8():
    return group("Q8")


@pytest.fixture
def d8():
    return group("DihedralPow", 3)


ACCEPTANCE_LINES: list[str] = []


def record(criterion: int, title: str, passed: bool, detail: str) -> None:
    ACCEPTANCE_LINES.append(f"[{'PASS' if passed else 'FAIL'}] criterion {criterion}: {title} :: {detail}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
