from importlib import resources

import pytest

from aspectscore.aspect_tree import load_tree
from aspectscore.lexicon import load_lexicon

REMARK_1 = ("(1) i) He is an obedient student. ii) He scored good marks in DBMS. "
            "iii) He is regular when it comes to attendance. "
            "iv) He should be more participative in co-curricular activities.")
REMARK_2 = ("(2) i) She is a very punctual student. ii) Actively participates in "
            "co-curricular activities. iii) She is good in academics. "
            "iv) She is an elegant dancer but she is very talkative.")

# (g, s, c, f) per sentence, as printed in the case-study table; c is implied by f.
TABLE_REMARK_1 = [(216, 7, 3, "15.12"), (120, 6, 3, "7.2"), (216, 9, 3, "19.44"), (8, 4, 2, "3.2")]
TABLE_REMARK_2 = [(288, 7, 3, "20.16"), (8, 8, 2, "6.4"), (4, 7, 1, "28"), (48, 5, 2, "24")]
AVERAGE_1, AVERAGE_2 = "11.24", "19.64"


def fixture_text(name: str) -> str:
    return resources.files("aspectscore").joinpath("fixtures", name).read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def tree():
    return load_tree(fixture_text("aspect_tree.tsv"))


@pytest.fixture(scope="session")
def lexicon():
    return load_lexicon(fixture_text("lexicon.tsv"))


_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _acceptance[report.nodeid] = report
    elif "test_acceptance.py" in report.nodeid and report.failed:
        _acceptance[report.nodeid] = report


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, rep in sorted(_acceptance.items()):
        status = "PASS" if rep.passed else "FAIL"
        terminalreporter.write_line(f"{status}  {nodeid.split('::', 1)[1]}")
