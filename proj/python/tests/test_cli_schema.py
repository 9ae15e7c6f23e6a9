import json
import os
import pathlib
import subprocess

import pytest

jsonschema = pytest.importorskip("jsonschema")

DOCS = pathlib.Path(__file__).resolve().parents[2] / "docs"
CLI = os.environ.get("RIMHOOK_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="RIMHOOK_CLI not set")


def run(*args):
    result = subprocess.run([CLI, *args], capture_output=True, text=True, check=False)
    return result.returncode, json.loads(result.stdout)


def schema(name):
    return json.loads((DOCS / name).read_text())


def test_haar_moment_matches_schema():
    code, doc = run("haar-moment", "-k", "2", "-m", "2", "-n", "2", "--samples", "2000", "--seed", "5")
    assert code == 0
    jsonschema.validate(doc, schema("haar_moment.schema.json"))


def test_verify_matches_schema():
    code, doc = run("verify", "--max-n", "3", "--max-m", "2", "--format", "json")
    assert code == 0
    jsonschema.validate(doc, schema("verify.schema.json"))
    assert doc["passed"] and all(row["status"] == "PASS" for row in doc["rows"])
