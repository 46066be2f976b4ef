import os

import pytest
from hypothesis import HealthCheck, settings

from superchevalley.roots import restricted_roots
from superchevalley.superpoly import adapted_basis
from superchevalley.sympair import build_c_special, build_gl_block, build_group_gl, build_group_osp

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("ci", max_examples=15, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


SHIPPED_BUILDERS = {
    "group-gl(1|1)": lambda: build_group_gl(1, 1),
    "group-osp(1|2)": lambda: build_group_osp(1, 2),
    "gl-block(1,1,1,1)": lambda: build_gl_block(1, 1, 1, 1),
    "c-special q=1": lambda: build_c_special(1),
    "c-special q=2": lambda: build_c_special(2),
}


@pytest.fixture(scope="session")
def c2():
    return build_c_special(1)


@pytest.fixture(scope="session")
def c3():
    return build_c_special(2)


@pytest.fixture(scope="session")
def gl11():
    return build_group_gl(1, 1)


@pytest.fixture(scope="session")
def osp12():
    return build_group_osp(1, 2)


@pytest.fixture(scope="session")
def c2_ab(c2):
    return adapted_basis(c2, restricted_roots(c2))


@pytest.fixture(scope="session")
def gl11_ab(gl11):
    return adapted_basis(gl11, restricted_roots(gl11))


@pytest.fixture(scope="session", params=list(SHIPPED_BUILDERS))
def shipped(request):
    return request.param, SHIPPED_BUILDERS[request.param]()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
