import json

import pytest
from click.testing import CliRunner

from cellres import worked_examples
from cellres.config import get_settings
from cellres.monomials import RingDescriptor


@pytest.fixture
def ring():
    return RingDescriptor(("x", "y", "z", "w"))


@pytest.fixture
def ideal_i():
    return worked_examples.ideal_i()


@pytest.fixture
def delta():
    return worked_examples.delta()


@pytest.fixture
def taylor_i():
    return worked_examples.taylor_i()


@pytest.fixture
def scarf2():
    return worked_examples.scarf2()


@pytest.fixture
def fresh_settings():
    """Re-read CELLRES_* variables around a test that patches them"""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def runner():
    try:
        return CliRunner(mix_stderr=False)
    except TypeError:
        return CliRunner()


@pytest.fixture
def invoke(runner):
    """Run a CLI command and return (exit code, stdout)"""
    from cellres.cli import cli

    def _invoke(args, input=None):
        result = runner.invoke(cli, args, input=input)
        return result.exit_code, result.stdout

    return _invoke


@pytest.fixture
def invoke_json(invoke):
    def _invoke(args, input=None):
        code, out = invoke(args, input)
        assert code == 0, out
        return json.loads(out)

    return _invoke
