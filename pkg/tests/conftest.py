import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from infiota.cli import default_manifest, load_manifest  # noqa: E402
from infiota.kernel import check_proof, parse_proof_file  # noqa: E402
from infiota.systems import builtin_system  # noqa: E402

ROOT = Path(__file__).resolve().parent.parent


def corpus_entries():
    return load_manifest(default_manifest())


def positive_entries():
    return [e for e in corpus_entries() if e.expect == "ACCEPT"]


def negative_entries():
    return [e for e in corpus_entries() if e.expect != "ACCEPT"]


def load_proof(entry):
    text = (default_manifest().parent / entry.path).read_text(encoding="utf-8")
    return parse_proof_file(text)


def judgment_of(entry):
    return check_proof(load_proof(entry).proof, builtin_system(entry.system))


@pytest.fixture(scope="session")
def positives():
    return positive_entries()


@pytest.fixture(scope="session")
def judgments():
    return {e.id: judgment_of(e) for e in positive_entries()}


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
