"""Chain complexes, embedded homology, and the obstruction ladders."""

from .chains import (
    ChainComplex,
    ChainMap,
    SubmoduleChainComplex,
    chain_complex,
    inclusion_chain_map,
    inf_complex,
    projection_chain_map,
    sup_complex,
    trivial_presentation,
    vertex_chain_map,
)
from .homology import (
    EmbeddedHomology,
    EmbeddedHomologyMismatch,
    SigmaComparisonReport,
    embedded_homology,
    homology_groups_of,
    induced_map_on_homology,
    sigma_invariant_comparison,
    underlying_projection,
)
from .ladders import (
    KunnethLadderReport,
    KunnethRow,
    LadderConstructionError,
    LadderReport,
    LongExactSequence,
    kunneth,
    kunneth_row_for_pair,
    kunneth_row_for_pair_embedded,
    mayer_vietoris,
    mayer_vietoris_row,
    mv_hypotheses,
    mv_ladder,
    mv_row_for_pair,
    mv_row_for_pair_embedded,
)

__all__ = [
    "ChainComplex", "ChainMap", "SubmoduleChainComplex", "chain_complex",
    "inclusion_chain_map", "inf_complex", "projection_chain_map", "sup_complex",
    "trivial_presentation", "vertex_chain_map",
    "EmbeddedHomology", "EmbeddedHomologyMismatch", "SigmaComparisonReport",
    "embedded_homology", "homology_groups_of", "induced_map_on_homology",
    "sigma_invariant_comparison",
    "underlying_projection",
    "KunnethLadderReport", "KunnethRow", "LadderConstructionError",
    "LadderReport", "LongExactSequence", "kunneth", "kunneth_row_for_pair",
    "kunneth_row_for_pair_embedded", "mayer_vietoris", "mayer_vietoris_row",
    "mv_hypotheses",
    "mv_ladder", "mv_row_for_pair", "mv_row_for_pair_embedded",
]
