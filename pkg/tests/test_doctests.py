"""Run the doctests embedded in the library modules."""

import doctest

import qkostant.multiplicity
import qkostant.partition
import qkostant.qpoly
import qkostant.rootsys
import qkostant.weyl
import pytest


@pytest.mark.parametrize(
    "module",
    [
        qkostant.qpoly,
        qkostant.rootsys,
        qkostant.weyl,
        qkostant.partition,
        qkostant.multiplicity,
    ],
    ids=lambda m: m.__name__,
)
def test_module_doctests(module):
    failures, _ = doctest.testmod(module)
    assert failures == 0
