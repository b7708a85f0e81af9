import doctest
import importlib
import pkgutil

import pytest

import padichg

MODULES = sorted(m.name for m in pkgutil.walk_packages(padichg.__path__, "padichg."))


@pytest.mark.parametrize("name", MODULES)
def test_examples_in_docstrings(name):
    mod = importlib.import_module(name)
    result = doctest.testmod(mod, optionflags=doctest.ELLIPSIS)
    assert result.failed == 0
