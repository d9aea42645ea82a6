"""MP2 graphs: the minimum-degree-4 catalog and its coloring procedures."""

from .registry import (
    CatalogEntry,
    case_procedure,
    catalog,
    color_mp2,
    entries_of_size,
    identify_all,
    identify_catalog,
    names,
    reduce_degree3,
    smallest_params,
)
from .trace import ColoringTrace, replay

__all__ = [
    "CatalogEntry", "ColoringTrace", "case_procedure", "catalog", "color_mp2",
    "entries_of_size", "identify_all", "identify_catalog", "names",
    "reduce_degree3", "replay", "smallest_params",
]
