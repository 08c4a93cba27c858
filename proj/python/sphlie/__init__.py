"""Exact structure theory of real spherical pairs at the Lie algebra level.

The heavy lifting lives in the compiled extension; this package re-exports
its surface: analyze / analyze_catalog return an Analysis handle with the
local-structure data, spherical roots, wave-front test, degenerations,
Levi induction and the tempered/discrete-series layer as JSON reports.
"""

try:
    from ._core import (  # type: ignore[attr-defined]
        Analysis,
        SphlieError,
        analyze,
        analyze_catalog,
        catalog,
        catalog_pair_file,
        selftest,
    )
except ImportError:  # running against a build tree where _core is top-level
    from _core import (  # type: ignore[no-redef]
        Analysis,
        SphlieError,
        analyze,
        analyze_catalog,
        catalog,
        catalog_pair_file,
        selftest,
    )

__all__ = [
    "Analysis",
    "SphlieError",
    "analyze",
    "analyze_catalog",
    "catalog",
    "catalog_pair_file",
    "selftest",
]
