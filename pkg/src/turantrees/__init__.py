"""Exact extremal edge counts for forbidden star, broom, spider, and path
subgraphs, with constructive witnesses and a brute-force certifier."""

from .graphs import (
    Graph,
    Graph6Error,
    GraphBuilder,
    GraphSizeError,
    complete,
    complete_bipartite,
    complete_join,
    cycle,
    degree_sequence,
    disjoint_union,
    empty,
    from_edge_list_text,
    from_edges,
    from_graph6,
    max_degree,
    to_edge_list_text,
    to_graph6,
)
from .recipes import Recipe, RecipeError
from .patterns import (
    ForbiddenFamily,
    TreePattern,
    broom,
    contains,
    contains_fast,
    family_free,
    path,
    realize,
    spider,
    star,
)
from .formulas import (
    CaseTag,
    ConsistencyError,
    CorollaryReport,
    ExValue,
    check_corollaries,
    ex_broom,
    ex_for_pattern,
    ex_mixed,
    ex_path,
    ex_spider,
    ex_star,
)
from .constructors import (
    AuditError,
    CirculantSpec,
    broom_extremal,
    extremal_witness,
    mixed_extremal,
    path_extremal,
    regular_graph,
    spider_extremal,
    star_free_extremal,
)
from .oracle import (
    OracleResult,
    SearchConfig,
    SweepReport,
    oracle_ex,
    oracle_mixed,
    verify_sweep,
)

__version__ = "0.1.0"
