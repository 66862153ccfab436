"""Directed normalizing graphs of finite groups.

The central object is the digraph on the elements of a finite group G
with an arrow x -> y whenever y normalizes the cyclic subgroup <x>.
The package computes that graph, its universal vertices, the reduced
graph left after removing them, and the group-theoretic classifications
(Dedekind, nilpotent, Frobenius, 2-Frobenius, ...) that drive its
strong-connectivity and diameter behaviour, plus a registry of
mechanical checks exercising all of it over a built-in catalog.
"""

from ._core import BACKEND
from .analysis import GroupFacts, analysis_payload, facts_for
from .builders import (
    build,
    catalog,
    catalog_group,
    catalog_names,
    cyclic,
    dihedral,
    export_cayley,
    ingest_cayley,
    ingest_permutations,
    mod16,
    product,
    quaternion,
    semidirect,
    symmetric,
)
from .checks import REGISTRY, CheckResult, SuiteConfig, coverage_rows, run_check, run_suite, summarize
from .classify import Classification, is_dedekind
from .digraph import Digraph, NotStronglyConnectedError, SccDecomposition, dot_payload
from .graphs import (
    GRAPH_KINDS,
    UnivReport,
    delta_norm,
    element_digraph,
    gamma_norm,
    univ_sets,
)
from .group import Group, GroupError, Subgroup

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Classification",
    "CheckResult",
    "Digraph",
    "GRAPH_KINDS",
    "Group",
    "GroupError",
    "GroupFacts",
    "NotStronglyConnectedError",
    "REGISTRY",
    "SccDecomposition",
    "Subgroup",
    "SuiteConfig",
    "UnivReport",
    "analysis_payload",
    "build",
    "catalog",
    "catalog_group",
    "catalog_names",
    "coverage_rows",
    "cyclic",
    "delta_norm",
    "dihedral",
    "dot_payload",
    "element_digraph",
    "export_cayley",
    "facts_for",
    "gamma_norm",
    "ingest_cayley",
    "ingest_permutations",
    "is_dedekind",
    "mod16",
    "product",
    "quaternion",
    "run_check",
    "run_suite",
    "semidirect",
    "summarize",
    "symmetric",
    "univ_sets",
    "__version__",
]
