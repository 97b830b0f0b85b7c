"""GARMA-family time series on (0,1): simulation, partial maximum likelihood,
and multiple-imputation estimation under missing data.

The heavy lifting lives in the compiled ``_garma`` extension; this package
adds a small NaN-based convenience layer for missing values.
"""

import math

from ._garma import (
    __version__,
    cdf,
    estimate,
    filter_path,
    impute,
    link_eval,
    link_inv,
    log_density,
    mcar_mask,
    partial_loglik,
    quantile,
    simulate,
)

__all__ = [
    "__version__",
    "cdf",
    "estimate",
    "filter_path",
    "impute",
    "impute_nan",
    "link_eval",
    "link_inv",
    "log_density",
    "mcar_mask",
    "partial_loglik",
    "quantile",
    "simulate",
]


def impute_nan(values, family, **kwargs):
    """Like :func:`impute`, but missing values are NaN entries in ``values``
    instead of a separate observed mask."""
    observed = [not (isinstance(v, float) and math.isnan(v)) for v in values]
    cleaned = [0.0 if not o else float(v) for v, o in zip(values, observed)]
    return impute(cleaned, observed, family, **kwargs)
