import pytest

from crystalmonoid.crystal import parse_type

SMALL = ("A:2", "A:3", "B:2", "C:2", "D:2", "D:3", "G2")


@pytest.fixture(params=SMALL)
def small_type(request):
    return parse_type(request.param)
