import json

import pytest

from src.catalog import (
    embedded_point,
    load_certificate,
    load_certificates,
    save_certificate,
    save_certificates,
)
from src.filtrations import Filtration
from src.models.certificate import Certificate, CheckResult, Verdict


def _certificate() -> Certificate:
    R = embedded_point()
    return Certificate(
        ring=R.describe(),
        filtration=Filtration.adic(R.maximal_ideal).describe(),
        d=1,
        r=1,
        checks=[CheckResult(name="intersection_2", n=3, holds=True)],
        verdict=Verdict.G_BUCHSBAUM,
    )


def test_save_and_load(tmp_path):
    """Test that a stored certificate loads back unchanged."""
    certificate = _certificate()
    path = save_certificate(certificate, tmp_path / "nested" / "cert.json")
    assert path.exists()
    assert load_certificate(path) == certificate


def test_save_many(tmp_path):
    """Test that several certificates are written as one array."""
    path = save_certificates([_certificate(), _certificate()], tmp_path / "all.json")
    data = json.loads(path.read_text(encoding="utf-8"))
    assert len(data) == 2
    assert data[0]["verdict"] == "G_BUCHSBAUM"
    assert load_certificates(path) == [_certificate(), _certificate()]


def test_save_many_empty(tmp_path):
    """Test that an empty batch is still a valid JSON array."""
    path = save_certificates([], tmp_path / "empty.json")
    assert json.loads(path.read_text(encoding="utf-8")) == []


def test_load_missing_file(tmp_path):
    """Test that loading a missing file raises FileNotFoundError."""
    with pytest.raises(FileNotFoundError, match="Certificate file not found"):
        load_certificate(tmp_path / "missing.json")
    with pytest.raises(FileNotFoundError, match="Certificate file not found"):
        load_certificates(tmp_path / "missing.json")


def test_verdict_is_stored_as_plain_string():
    """Test that defaulted and assigned verdicts both hold the string value."""
    certificate = Certificate(
        ring=embedded_point().describe(),
        filtration=_certificate().filtration,
        d=1,
    )
    assert type(certificate.verdict) is str
    assert certificate.verdict == "INCONCLUSIVE"
    certificate.verdict = Verdict.EQUALITY_FAILS
    assert type(certificate.verdict) is str
    assert f"{certificate.verdict}" == "EQUALITY_FAILS"
