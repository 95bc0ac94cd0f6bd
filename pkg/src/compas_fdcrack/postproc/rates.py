import logging

import numpy as np


__all__ = ["fit_rate", "rate_table"]


logger = logging.getLogger(__name__)


def fit_rate(h_list, err_list):
    """Convergence rate as the least-squares slope of ``log(err)`` against ``log(h)``.

    Parameters
    ----------
    h_list : sequence of float
    err_list : sequence of float

    Returns
    -------
    float

    Raises
    ------
    ValueError
        If there are fewer than two points, the lengths differ, or a value is not positive.

    Examples
    --------
    >>> round(fit_rate([0.1, 0.05], [1e-2, 2.5e-3]), 12)
    2.0
    >>> round(fit_rate([0.1, 0.05, 0.025], [1e-1, 5e-2, 2.5e-2]), 12)
    1.0

    """
    h = np.asarray(h_list, dtype=float)
    err = np.asarray(err_list, dtype=float)
    if h.shape != err.shape or h.ndim != 1:
        raise ValueError("Mesh sizes and errors should be two sequences of the same length.")
    if len(h) < 2:
        raise ValueError("At least two points are needed to fit a rate.")
    if np.any(h <= 0) or np.any(err <= 0) or not np.all(np.isfinite(err)):
        raise ValueError("Mesh sizes and errors should be positive.")
    if np.all(err == err[0]):
        return 0.0
    return float(np.polyfit(np.log(h), np.log(err), 1)[0])


def rate_table(rows, keys, value):
    """Rates of one column of result rows, grouped by the given keys.

    Parameters
    ----------
    rows : list of dict
        Result rows carrying ``h`` and ``value``.
    keys : sequence of str
        Columns identifying a group, e.g. ``('elem_u', 'elem_lambda', 'gamma0')``.
    value : str
        The error column.

    Returns
    -------
    dict
        Rate per group key tuple. Groups with fewer than two positive
        errors are skipped.
    """
    groups = {}
    for row in rows:
        groups.setdefault(tuple(row[key] for key in keys), []).append(row)
    rates = {}
    for group, members in sorted(groups.items(), key=lambda item: str(item[0])):
        points = [(row["h"], row[value]) for row in members if row[value] is not None and row[value] > 0]
        if len(points) < 2:
            continue
        h, err = zip(*points)
        rates[group] = fit_rate(h, err)
        logger.info("Rate of %s for %s: %.3f", value, "/".join(str(g) for g in group), rates[group])
    return rates
