import pyqps


def test_bracket_table():
    assert pyqps.bracket("x", "px") == "-q"
    assert pyqps.bracket("px", "x") == "-1 - q"
    assert pyqps.bracket("y", "py") == "-q"
    assert pyqps.bracket("x", "y") == "0"


def test_normalize():
    assert pyqps.normalize("px*y", "Q") == "(-2 - q)*x*py + q*y*px"
    assert pyqps.normalize("x^3") == "1"
    assert pyqps.normalize("a*d - q*b*c", "F") == "1"


def test_calculus():
    assert pyqps.d("x*px") == "dx*px + q*dpx*x"
    assert pyqps.partial("x", "x^2") == "-q*x"
    assert pyqps.pair("dx*y", "Dx") == "y"


def test_symplectic():
    assert pyqps.xfield("px") == "-q*Dx"
    assert pyqps.evolve("x^2", "px") == "(-1 - q)*x"


def test_hopf():
    assert pyqps.act("a", "x") == "(-1 - q)*x"
    assert pyqps.rform("c", "b") == "-2 - q"
    assert "(x)" in pyqps.coact("M", "x")


def test_dims():
    d = pyqps.dims("OmegaQ")
    assert d["dimension"] == 1296
    assert d["by_grade"] == {0: 81, 1: 324, 2: 486, 3: 324, 4: 81}


def test_checks():
    for report in pyqps.check("field") + pyqps.check("spaces"):
        assert report["failed"] == 0
    assert "symplectic" in pyqps.suites()
