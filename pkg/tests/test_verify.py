import pytest

from liebounds.errors import UnsupportedInputError
from liebounds.verify import CHECKS, closed_form_s, run_check


@pytest.mark.parametrize("name,bound", [("table1", 6), ("s-formulas", 6), ("sandwich", 5), ("ideals", 5),
                                        ("rootspan", 3), ("weyl-oracle", 3)])
def test_named_checks_pass_on_small_bounds(name, bound):
    res = run_check(name, bound)
    assert res.passed and res.checked > 0


def test_check_names():
    assert set(CHECKS) == {"table1", "s-formulas", "theorem1", "theoremSp", "sandwich", "ideals", "rootspan", "weyl-oracle"}
    with pytest.raises(UnsupportedInputError):
        run_check("bogus")


def test_closed_form_side_conditions():
    assert closed_form_s("SU", (2, 2)) == 4
    assert closed_form_s("SOplus", (4, 3)) is None
    assert closed_form_s("SOplus", (6, 2)) == 4
    assert closed_form_s("Sp_C", (3,)) is None
    assert closed_form_s("E6", ()) is None
