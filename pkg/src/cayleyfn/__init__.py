"""Cayley functions of finite sets, idempotent centralizers and symbolic
infinite functional digraphs."""

from .cayley import CayleyVerdict, Status, digraph_cayley_finite, is_cayley, zupnik_finite
from .centralizer import (build_phi, check_centralizer, idempotent_structure,
                          main_theorem_finite, random_commuting, verify_lemmas)
from .digraph import decompose, omega, stabilizer, stable_image, sup_b, twigs
from .oracle import all_cayley_functions, is_cayley_bruteforce
from .transformation import (Transformation, commutes, compose, format_two_row, image_chain,
                             is_idempotent, parse, power)

__version__ = "0.1.0"

__all__ = [
    "CayleyVerdict", "Status", "Transformation",
    "all_cayley_functions", "build_phi", "check_centralizer", "commutes", "compose",
    "decompose", "digraph_cayley_finite", "format_two_row", "idempotent_structure",
    "image_chain", "is_cayley", "is_cayley_bruteforce", "is_idempotent",
    "main_theorem_finite", "omega", "parse", "power", "random_commuting", "stabilizer",
    "stable_image", "sup_b", "twigs", "verify_lemmas", "zupnik_finite",
]
