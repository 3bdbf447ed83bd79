"""Committee auditing for proportionality of solid coalitions (PSC).

Thin Python layer over the C++ core: parse ranked-ballot profiles, check
committees for q-PSC, run the Minimal Demand rule under pluggable
tie-breaking, enumerate every PSC committee via Dummett-tree search, and
generate reproducible test electorates.
"""

from ._core import (
    Error,
    Profile,
    Quota,
    active_coalitions,
    borda_scores,
    check_equivalence,
    choice_set,
    demand_cap,
    enumerate_outcomes,
    gen_blocs,
    gen_impartial,
    make_quota,
    maximal_support,
    prefix_classes,
    psc_committees,
    reconstruct_path,
    run_md,
    unmet_demands,
    verify,
    verify_definitional,
)

__version__ = "0.1.0"

__all__ = [
    "Error",
    "Profile",
    "Quota",
    "active_coalitions",
    "borda_scores",
    "check_equivalence",
    "choice_set",
    "demand_cap",
    "enumerate_outcomes",
    "gen_blocs",
    "gen_impartial",
    "make_quota",
    "maximal_support",
    "prefix_classes",
    "psc_committees",
    "reconstruct_path",
    "run_md",
    "unmet_demands",
    "verify",
    "verify_definitional",
]
