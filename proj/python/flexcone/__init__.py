from ._flexcone import (
    GluingSchema,
    Polyhedron,
    Truncated,
    assemble,
    blaschke_liebmann,
    builtin_schema,
    collision_search,
    cone_angle_triple,
    deaverage,
    flex_analysis,
    gluck_octahedron,
    hyperbolic_schonhardt,
    hyperideal_schonhardt,
    ideal_twisted_octahedron_angles,
    manifold_flex_check,
    meridian_cover_search,
    min_tube_distance,
    polyhedron_from_json,
    random_concurrent_octahedron,
    random_octahedron,
    regular_octahedron,
    schonhardt,
    truncate,
    truncated_flex_analysis,
    truncated_metrics,
    twisted_antiprism,
)

__all__ = [
    "GluingSchema",
    "Polyhedron",
    "Truncated",
    "assemble",
    "blaschke_liebmann",
    "builtin_schema",
    "collision_search",
    "cone_angle_triple",
    "deaverage",
    "flex_analysis",
    "gluck_octahedron",
    "hyperbolic_schonhardt",
    "hyperideal_schonhardt",
    "ideal_twisted_octahedron_angles",
    "manifold_flex_check",
    "meridian_cover_search",
    "min_tube_distance",
    "polyhedron_from_json",
    "random_concurrent_octahedron",
    "random_octahedron",
    "regular_octahedron",
    "schonhardt",
    "truncate",
    "truncated_flex_analysis",
    "truncated_metrics",
    "twisted_antiprism",
]
