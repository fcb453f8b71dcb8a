"""Meanders, Sturm attractors, Temperley-Lieb traces, Bianchi dynamics and Kasner maps."""

from ._globdyn import (
    GlobdynError,
    bianchi_integrate,
    bianchi_rhs,
    birainbow_formula,
    billiard_components,
    canonical_form,
    cli,
    enumerate_sturm,
    find_equilibria,
    ifs_iterate,
    ifs_steps_to_cover,
    is_sturm,
    kasner_images,
    kasner_iterate,
    meander_components,
    morse_vector,
    seaweed_components,
    shoot_sigma,
    termination_stats,
    tl_trace,
)

__all__ = [
    "GlobdynError",
    "bianchi_integrate",
    "bianchi_rhs",
    "birainbow_formula",
    "billiard_components",
    "canonical_form",
    "cli",
    "enumerate_sturm",
    "find_equilibria",
    "ifs_iterate",
    "ifs_steps_to_cover",
    "is_sturm",
    "kasner_images",
    "kasner_iterate",
    "meander_components",
    "morse_vector",
    "seaweed_components",
    "shoot_sigma",
    "termination_stats",
    "tl_trace",
]
