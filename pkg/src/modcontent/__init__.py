"""Modular dessins from Farey symbols, their monodromy groups and modular content,
plus exact cyclotomic and Habiro-ring arithmetic."""

__version__ = "0.1.0"

from .errors import *  # noqa: F401,F403
from .farey import FareySymbol, iguanodon_symbol, parse_symbol, format_symbol, triangulate
from .dessin import Dessin, build_dessin, surface_invariants, export_dessin
from .permgroup import Permutation, PermutationGroup, group_from_dessin
from .cyclotomic import CyclotomicInteger, IntPolynomial, cyclotomic, resultant
from .reptheory import character_table, decompose_permutation, permutation_character
from .quiver import DimensionVector5, euler_form, modular_content, one_quiver_modular
from .habiro import HabiroElement, kontsevich, evaluate_at_root, zagier_radial_check


def load_schema(name: str) -> dict:
    """JSON schema shipped with the package: farey, dessin, quiver, character_table or content_report."""
    import json
    from importlib import resources
    return json.loads(resources.files(__name__).joinpath("schemas", f"{name}.json").read_text())
