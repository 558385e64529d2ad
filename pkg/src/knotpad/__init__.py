"""knotpad: knot diagram reductions with exact invariant bookkeeping.

Two pipelines transform arbitrary knot diagrams into certified shapes while
tracking the framed invariant exactly: one produces reduced prime alternating
diagrams (with a framing exponent r), the other highly twisted standard plats
with bridge-distance certificates.  Invariants are evaluated in two
independent ways (Kauffman bracket over cyclotomic integers, and counting
knot-group homomorphisms into a finite group) so each pipeline can be
oracle-checked end to end.
"""

from .alternating import (
    AltReductionReport,
    make_alternating,
    nugatory_crossings,
    prime_decompose,
    reduce_alternating,
    theory_exponent,
    torus_fallback,
)
from .bracket import (
    bracket_pd,
    bracket_plat,
    framed_invariant,
    framed_invariant_plat,
    jones_value,
    tl_vafa_exponent,
    tl_vafa_is_exact,
    twist_power,
)
from .cyclotomic import CyclotomicInt
from .groups import FiniteGroupWithClass, load_preset, parse_group, preset_names
from .homcount import (
    dw_vafa_exponent,
    dw_vafa_exponent_full,
    homcount_pd,
    homcount_plat,
)
from .pd import (
    BudgetError,
    DiagramBuilder,
    DiagramError,
    NotAKnotError,
    OrientedPDDiagram,
    connect_sum,
    kinked_unknot,
    mirror,
    parse_pd,
    switch_crossing,
    unknot_diagram,
)
from .plat import PlatDiagram, parse_plat, plat_component_count, plat_to_pd, random_plat
from .platreduce import (
    BraidWord,
    PlatReductionReport,
    bridge_distance,
    braid_to_plat,
    certificates_for,
    reduce_plat,
    standardize,
    to_braid,
    vafa_pad,
    volume_bounds,
)

__version__ = "0.1.0"

__all__ = [
    "AltReductionReport",
    "BraidWord",
    "BudgetError",
    "CyclotomicInt",
    "DiagramBuilder",
    "DiagramError",
    "FiniteGroupWithClass",
    "NotAKnotError",
    "OrientedPDDiagram",
    "PlatDiagram",
    "PlatReductionReport",
    "bracket_pd",
    "bracket_plat",
    "braid_to_plat",
    "bridge_distance",
    "certificates_for",
    "connect_sum",
    "dw_vafa_exponent",
    "dw_vafa_exponent_full",
    "framed_invariant",
    "framed_invariant_plat",
    "homcount_pd",
    "homcount_plat",
    "jones_value",
    "kinked_unknot",
    "load_preset",
    "make_alternating",
    "mirror",
    "nugatory_crossings",
    "parse_group",
    "parse_pd",
    "parse_plat",
    "plat_component_count",
    "plat_to_pd",
    "preset_names",
    "prime_decompose",
    "random_plat",
    "reduce_alternating",
    "reduce_plat",
    "standardize",
    "switch_crossing",
    "theory_exponent",
    "tl_vafa_exponent",
    "tl_vafa_is_exact",
    "to_braid",
    "torus_fallback",
    "twist_power",
    "unknot_diagram",
    "vafa_pad",
    "volume_bounds",
]
