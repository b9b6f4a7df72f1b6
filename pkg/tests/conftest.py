import json

import pytest

from quatstar import cli, verify


@pytest.fixture(scope="session")
def full_report():
    """One full verifier run shared by every test that needs it."""
    return verify.run_all()


@pytest.fixture(scope="session")
def verify_cli_json(tmp_path_factory):
    """Exit code and parsed JSON of one full `verify --format json` CLI run."""
    out = tmp_path_factory.mktemp("reports") / "report.json"
    code = cli.main(["verify", "--format", "json", "--out", str(out)])
    text = out.read_text(encoding="utf-8")
    return code, text, json.loads(text)
