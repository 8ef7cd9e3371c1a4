import pytest

from fockbound.config import load_config
from fockbound.words import Semigroup

_criteria: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        status = "PASS" if report.outcome == "passed" else "FAIL"
        _criteria[number] = (status, title)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        status, title = _criteria[number]
        terminalreporter.write_line(f"[{status}] criterion {number:2d}: {title}")


@pytest.fixture(scope="session")
def zz():
    return load_config("z_on_z")


@pytest.fixture(scope="session")
def flip():
    return load_config("flip_z")


@pytest.fixture(scope="session")
def free2():
    return load_config("free2")


@pytest.fixture(scope="session")
def cyclic():
    return load_config("cyclic_flip")


@pytest.fixture(scope="session")
def dihedral():
    return load_config("dihedral3")


@pytest.fixture(params=["full", "sym", "anti"])
def variant(request):
    return request.param


@pytest.fixture
def sg_zz(zz, variant):
    return Semigroup(zz.action, variant)
