"""seytight: build, compose, verify and classify Seymour/Sullivan-tight orientations."""

from .constructions import (
    FamilySpec,
    add_source_by_neighbourhood_copy,
    build_family,
    circulant_tournament,
    cycle_power,
    deficiency_of_product,
    directed_cycle,
    embed_in_seymour_tight,
    empty_orientation,
    family_catalogue,
    gen_lex_product,
    hom_bijective_attach,
    hom_source_attach,
    is_uniform_on,
    lex_product,
    pendant_triangle,
    replace_uniform_subset,
)
from .digraph import Digraph, DigraphBuilder, EmbeddingMap, Orientation, disjoint_union
from .errors import (
    InputError,
    SeytightError,
    SizeCapError,
    TheoremViolationError,
    ValidationError,
)
from .fileio import parse_edge_text, read_edge_file, to_dot, to_edge_text, write_edge_file
from .groups import (
    AbelianGroup,
    ConnectionSet,
    LexDecomposition,
    all_abelian_groups,
    cayley_digraph,
    classify_abelian_seymour,
    enumerate_seymour_connection_sets,
    quotient,
    seymour_set_criterion,
    subgroups,
)
from .intkernel import (
    KernelBasis,
    chi_vectors,
    in_kernel,
    integer_kernel_basis,
    nonnegative_kernel_vectors,
)
from .isomorphism import canonical_arcs, find_isomorphism, is_isomorphic
from .tightness import (
    NeighbourhoodProfile,
    SignMatrix,
    check_report,
    is_seymour_counterexample,
    is_seymour_orientation,
    is_seymour_tight,
    is_sullivan_tight,
    profile,
    seymour_matrix,
    sullivan_matrix,
)

__version__ = "0.1.0"
