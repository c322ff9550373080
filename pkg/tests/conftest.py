from fractions import Fraction

import pytest

from halfangle.arith import Interval

# 50-digit references computed independently with mpmath (mp.dps = 50)
REFERENCE = {
    "sin(1/8)": "0.12467473338522768995744270871210846758783490564168",
    "cos(1/8)": "0.9921976672293290531490969077882508695433273047366",
    "sin(1)": "0.84147098480789650665250232163029899962256306079837",
    "cos(1)": "0.54030230586813971740093660744297660373231042061792",
    "sin(1/2)": "0.4794255386042030002732879352155713880818033679406",
    "2sin(1/2)": "0.9588510772084060005465758704311427761636067358812",
    "4sin^2(1/2)": "0.91939538826372056519812678511404679253537915876416",
    "pi": "3.1415926535897932384626433832795028841971693993751",
    "product(1,10)*2^90": "0.89416661087306132477298501487079036975884127497339",
}
REFERENCE_ERROR = Fraction(1, 10**48)


def reference(name: str) -> Fraction:
    return Fraction(REFERENCE[name])


def meets_reference(iv: Interval, name: str, scale: Fraction = Fraction(1)) -> bool:
    """True when iv overlaps the 50-digit reference value's error ball."""
    r = reference(name) * scale
    err = REFERENCE_ERROR * scale
    return iv.lo.to_rational() <= r + err and r - err <= iv.hi.to_rational()


@pytest.fixture
def ref():
    return reference


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
