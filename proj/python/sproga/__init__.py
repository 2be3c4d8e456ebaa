"""Sparse convex clustering.

Arrays hold one sample per row. A typical session::

    import sproga
    X, y, informative = sproga.make_setting(1, seed=3, scale=0.25)
    G = sproga.build_graph(X, k=10, filter_pct=0.0)
    r = sproga.param_range(X, G)
    fit = sproga.fit(X, G, lam=r["lambda_max"] * 0.8**6, gamma=0.5 * r["gamma_max"])
    sproga.adjusted_rand_index(fit["labels"], y)
"""

from ._sproga import (
    DataError,
    DimensionError,
    DomainError,
    Graph,
    NumericalDivergence,
    ParameterError,
    __version__,
    adaptive_weights,
    adjusted_rand_index,
    build_graph,
    extract_clusters,
    feature_pd_fdr,
    fit,
    geometric_grid,
    make_setting,
    normalized_mutual_info,
    objective,
    param_range,
    project_l1_ball,
    project_l2_ball,
    project_linf_ball,
)

__all__ = [
    "DataError",
    "DimensionError",
    "DomainError",
    "Graph",
    "NumericalDivergence",
    "ParameterError",
    "__version__",
    "adaptive_weights",
    "adjusted_rand_index",
    "build_graph",
    "extract_clusters",
    "feature_pd_fdr",
    "fit",
    "geometric_grid",
    "make_setting",
    "normalized_mutual_info",
    "objective",
    "param_range",
    "project_l1_ball",
    "project_l2_ball",
    "project_linf_ball",
]
