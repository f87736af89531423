"""Compact Lie groups: catalog, enumeration, recognition thresholds and an
embedding checker over stored subgroup tables."""

from .catalog import (
    Threshold,
    WolfMatch,
    dims_mod,
    enumerate_groups,
    exceptional_max_dim,
    identify_wolf,
    isometry_group,
    max_dim_per_rank,
    recognition_threshold,
    survivors_above_threshold,
    threshold_detail,
    wolf_congruences,
    wolf_isom_dims,
)
from .embedding import CHAIN_FOUND, INCONCLUSIVE, OBSTRUCTED, Verdict, embedding_obstructed, maximal_subgroups
from .groups import GroupTerm, SimpleType, classical, parse_group, simple_types

__all__ = [
    "CHAIN_FOUND",
    "GroupTerm",
    "INCONCLUSIVE",
    "OBSTRUCTED",
    "SimpleType",
    "Threshold",
    "Verdict",
    "WolfMatch",
    "classical",
    "dims_mod",
    "embedding_obstructed",
    "enumerate_groups",
    "exceptional_max_dim",
    "identify_wolf",
    "isometry_group",
    "max_dim_per_rank",
    "maximal_subgroups",
    "parse_group",
    "recognition_threshold",
    "simple_types",
    "survivors_above_threshold",
    "threshold_detail",
    "wolf_congruences",
    "wolf_isom_dims",
]
