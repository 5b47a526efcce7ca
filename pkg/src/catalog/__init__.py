from .battery import (
    buchsbaum_rings,
    cohen_macaulay_rings,
    default_battery,
    embedded_point,
    parameter_filtration,
    plane,
    plane_and_line,
    quadric,
    space,
    two_planes,
)
from .certificate_store import (
    load_certificate,
    load_certificates,
    save_certificate,
    save_certificates,
)

__all__ = [
    "buchsbaum_rings",
    "cohen_macaulay_rings",
    "default_battery",
    "embedded_point",
    "parameter_filtration",
    "plane",
    "plane_and_line",
    "quadric",
    "space",
    "two_planes",
    "load_certificate",
    "load_certificates",
    "save_certificate",
    "save_certificates",
]
