"""Verifiers, one module per area; importing the package registers every claim."""

from . import base, fock_laws, measure_laws, word_laws, wreath_laws  # noqa: F401
