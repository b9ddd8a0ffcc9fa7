"""Entanglement of photon states seen by an inertial and a uniformly accelerated observer."""
from .bogoliubov import SqueezeParams, omega_from_energy, squeeze_from_omega
from .measures import EntanglementReport, entanglement_report, log_negativity, von_neumann_entropy
from .states import StateFamily, build_rho, helicity_bell_rho, number_bell_rho

__all__ = [
    "EntanglementReport",
    "SqueezeParams",
    "StateFamily",
    "build_rho",
    "entanglement_report",
    "helicity_bell_rho",
    "log_negativity",
    "number_bell_rho",
    "omega_from_energy",
    "squeeze_from_omega",
    "von_neumann_entropy",
]

__version__ = "0.1.0"
