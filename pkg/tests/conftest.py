import random

import pytest
from hypothesis import settings

from bifixgroup import automata as au
from bifixgroup.examples import load_code, load_set
from bifixgroup.fgroup import intersect_code

settings.register_profile("repro", derandomize=True, deadline=None, max_examples=100)
settings.load_profile("repro")

ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=20240601, help="seed for randomized suites")


@pytest.fixture
def seed(request):
    return request.config.getoption("--seed")


@pytest.fixture
def rng(seed):
    return random.Random(seed)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")


# ---- bundled data -----------------------------------------------------------

@pytest.fixture(scope="session")
def fib():
    return load_set("fibonacci.json")


@pytest.fixture(scope="session")
def tm():
    return load_set("thue_morse.json")


@pytest.fixture(scope="session")
def even():
    return load_set("even.json")


@pytest.fixture(scope="session")
def phi():
    return load_set("phi.json")


@pytest.fixture(scope="session")
def trib():
    return load_set("tribonacci_ac.json")


@pytest.fixture(scope="session")
def a2():
    return load_code("a2.json")


@pytest.fixture(scope="session")
def fib_x():
    return load_code("fibonacci_x.json")


@pytest.fixture(scope="session")
def even_z():
    return load_code("evenZ.json")


@pytest.fixture(scope="session")
def tm_z():
    return load_code("thue_morse_z.json")


@pytest.fixture(scope="session")
def s4_z():
    return load_code("s4_z.json")


@pytest.fixture(scope="session")
def even_x(even_z, even):
    return intersect_code(even_z, even)


@pytest.fixture(scope="session")
def tm_x(tm_z, tm):
    return intersect_code(tm_z, tm)
