import doctest

import pytest

import nrquot.betti
import nrquot.exactnum
import nrquot.localize
import nrquot.polyring

MODULES = [nrquot.exactnum, nrquot.polyring, nrquot.localize, nrquot.betti]


@pytest.mark.parametrize("module", MODULES, ids=lambda m: m.__name__)
def test_module_doctests(module):
    extraglobs = {}
    if module in (nrquot.polyring, nrquot.localize):
        from fractions import Fraction

        from nrquot.polyring import MultiPoly

        extraglobs = {"MultiPoly": MultiPoly, "Fraction": Fraction}
    if module is nrquot.betti:
        from nrquot.betti import QuotientDims, poincare_uhat
        from nrquot.exactnum import TruncSeries

        extraglobs = {
            "QuotientDims": QuotientDims,
            "poincare_uhat": poincare_uhat,
            "TruncSeries": TruncSeries,
        }
    result = doctest.testmod(module, extraglobs=extraglobs, verbose=False)
    assert result.failed == 0
    assert result.attempted > 0
