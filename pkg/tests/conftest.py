import pytest

from ramlab.systems import DIRICHLET, MIX, UNITARY, system_from_dict

# unitary-default with one non-trivial table entry: types at 5 are
# 1, 2, 3, 2, 5, 6, ... (exponent 4 demoted to type 2)
CUSTOM_OK = {
    "kind": "custom",
    "default": "unitary-default",
    "a_max": 16,
    "types": [{"p": 5, "a": 4, "t": 2}],
}


@pytest.fixture(scope="session")
def custom_system():
    return system_from_dict(CUSTOM_OK, name="T")


@pytest.fixture(scope="session", params=["D", "U", "MIX"])
def any_system(request):
    return {"D": DIRICHLET, "U": UNITARY, "MIX": MIX}[request.param]
