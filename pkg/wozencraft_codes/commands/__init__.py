"""Expose command interfaces."""

from . import distance_cmd, encode_cmd, ensemble_cmd, genmat_cmd, params_cmd, sidon_cmd, verify_cmd

__all__ = [
    "distance_cmd",
    "encode_cmd",
    "ensemble_cmd",
    "genmat_cmd",
    "params_cmd",
    "sidon_cmd",
    "verify_cmd",
]
