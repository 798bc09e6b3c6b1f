from io import StringIO

import pytest
from django.core.management import call_command

from localization.charalg import EquivParams
from localization.vertex import ChartWeights


@pytest.fixture
def make_params():
    def make(s=(1, 2, 3), v=()):
        return EquivParams(tuple(s), tuple(v))
    return make


@pytest.fixture
def make_chart():
    def make(r=1, characters=None, tangent=((1, 0, 0), (0, 1, 0), (0, 0, 1))):
        if characters is None:
            characters = [(0, 0, 0)] * r
        return ChartWeights.for_bundle(tangent, characters)
    return make


@pytest.fixture
def run_engine():
    def run(command, **options):
        out = StringIO()
        call_command(command, stdout=out, **options)
        return out.getvalue()
    return run
