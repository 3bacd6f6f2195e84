"""Complex intuitionistic fuzzy sets over finite Lie superalgebras."""

from ._core import (
    CIFSet,
    CiflieError,
    GradedMap,
    ParseError,
    Workspace,
    __version__,
    bracket_graded_parts,
    bracket_product,
    bracket_product_oracle,
    cif_sum,
    component_extension,
    image,
    intersection,
    is_cif_ideal,
    is_cif_subspace,
    is_direct_sum,
    is_homogeneous,
    is_z2_graded,
    load,
    pair_homogeneous,
    preimage,
    scalar_action,
    subset_of,
    theorem_ids,
    verify,
)


def load_file(path):
    with open(path, encoding="utf-8") as f:
        return load(f.read())
