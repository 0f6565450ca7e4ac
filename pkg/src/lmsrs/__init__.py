"""lm-srs: analysis and decision procedures for string rewriting systems."""

__version__ = "0.3.0"

from .analyzer import Analyzer  # noqa: E402
from .core.models import Alphabet, RewriteSystem, Rule  # noqa: E402
from .core.rewriting import normalize  # noqa: E402
from .decide.api import causes_collapse, is_subterm_collapsing, solve_cap, verify_lm_system  # noqa: E402
from .evidence.providers import BaseEvidenceProvider, EvidenceProviderChain  # noqa: E402

__all__ = [
    "Alphabet",
    "Analyzer",
    "BaseEvidenceProvider",
    "EvidenceProviderChain",
    "RewriteSystem",
    "Rule",
    "__version__",
    "causes_collapse",
    "is_subterm_collapsing",
    "normalize",
    "solve_cap",
    "verify_lm_system",
]
