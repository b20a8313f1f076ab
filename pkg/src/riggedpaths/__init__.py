"""Exact combinatorics of ABF vacuum paths, standard tableaux and rigged configurations."""

from .errors import DomainError, MalformedInputError
from .identity import (
    fermionic_polynomial,
    kr_identity_check,
    statistic_transport_check,
    verify_bose_fermi,
)
from .kkr import kkr_insert, kkr_ramify, minimal_word
from .paths import (
    bosonic_polynomial,
    energy_E,
    energy_H,
    enumerate_paths,
    ground_word,
    heights_from_word,
    word_from_heights,
)
from .qseries import QPolynomial, gaussian_binomial, poly_add, poly_mul
from .rigged import (
    RiggedConfiguration,
    enumerate_rcs,
    is_admissible,
    maximal_rc,
    minimal_rc,
    momentum,
    rc_charge,
    sigma,
    takahashi,
    vacancy,
)
from .tableaux import (
    StandardTableau,
    charge,
    evacuation,
    tableau_from_word,
    thomas_p,
    word_from_tableau,
)

__version__ = "0.1.0"
