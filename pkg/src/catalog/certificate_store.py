from pathlib import Path

from loguru import logger
from pydantic import TypeAdapter

from ..models.certificate import Certificate

_CERTIFICATE_LIST = TypeAdapter(list[Certificate])


def save_certificate(certificate: Certificate, file_path: str | Path) -> Path:
    """
    Write a certificate as indented JSON.

    Args:
        certificate: Certificate to store
        file_path: Destination path; parent directories are created

    Returns:
        The path written
    """
    path = Path(file_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(certificate.model_dump_json(indent=2))
    logger.debug(f"Certificate written to {path}")
    return path


def save_certificates(certificates: list[Certificate], file_path: str | Path) -> Path:
    """Write several certificates as one JSON array."""
    path = Path(file_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(_CERTIFICATE_LIST.dump_json(certificates, indent=2))
    logger.debug(f"{len(certificates)} certificates written to {path}")
    return path


def load_certificate(file_path: str | Path) -> Certificate:
    """
    Load a certificate from a JSON file.

    Args:
        file_path: Path to the JSON file

    Returns:
        The validated certificate
    """
    path = Path(file_path)
    if not path.exists():
        raise FileNotFoundError(f"Certificate file not found: {file_path}")
    with open(path, "r", encoding="utf-8") as f:
        return Certificate.model_validate_json(f.read())


def load_certificates(file_path: str | Path) -> list[Certificate]:
    """Load a JSON array written by save_certificates."""
    path = Path(file_path)
    if not path.exists():
        raise FileNotFoundError(f"Certificate file not found: {file_path}")
    return _CERTIFICATE_LIST.validate_json(path.read_bytes())
