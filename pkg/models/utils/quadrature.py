from functools import lru_cache

import numpy as np
from scipy.integrate import quad_vec

from .errors import NumericError


@lru_cache(maxsize=None)
def gauss_legendre(order):
    """Gauss-Legendre nodes and weights on [-1, 1]."""
    nodes, weights = np.polynomial.legendre.leggauss(order)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def panel_rule(a, b, panels, order=20):
    """Composite Gauss-Legendre rule on ``[a, b]``.

    ``a`` and ``b`` may be arrays of equal shape, in which case the rule is
    built for every interval at once and the returned nodes and weights
    carry a trailing axis of length ``panels * order``.
    """
    x0, w0 = gauss_legendre(order)
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    frac = np.linspace(0.0, 1.0, panels + 1)
    left = a[..., None] + (b - a)[..., None] * frac[:-1]
    half = 0.5 * (b - a)[..., None] / panels
    mid = left + half
    nodes = mid[..., None] + half[..., None] * x0
    weights = np.broadcast_to(half[..., None] * w0, nodes.shape)
    new_shape = nodes.shape[:-2] + (panels * order, )
    return nodes.reshape(new_shape), weights.reshape(new_shape)


def integrate_vec(func, a, b, abs_tol=1e-9, rel_tol=0.0, limit=4000,
                  points=None, name='integral'):
    """Adaptive integration of a vector-valued integrand.

    Thin wrapper of :func:`scipy.integrate.quad_vec` that turns an unmet
    tolerance into a :class:`NumericError` carrying the diagnostics.

    Args:
        func (callable): ``x -> array``, evaluated at scalar ``x``.
        a, b (float): Integration bounds.
        abs_tol (float): Absolute tolerance on the max-norm of the error.
        rel_tol (float): Relative tolerance on the max-norm of the result.
        limit (int): Maximum number of subintervals.
        points (list, optional): Break points inside ``[a, b]``.
        name (str): Used in error messages.

    Returns:
        np.ndarray | float: The integral.
    """
    res, err, info = quad_vec(
        func, a, b, epsabs=abs_tol, epsrel=rel_tol, norm='max', limit=limit,
        points=points, full_output=True)
    scale = np.max(np.abs(res)) if np.size(res) else 0.0
    tol = max(abs_tol, rel_tol * scale)
    if info.status == 1 or err > tol:
        raise NumericError(
            f'{name} did not converge', error=float(err), tol=float(tol),
            status=int(info.status), intervals=int(info.intervals.shape[0]))
    return res
