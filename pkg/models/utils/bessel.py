"""Bessel functions of the first kind by Miller's backward recurrence.

All orders ``0..n`` are produced in one sweep, which is what the polar
sampler and the Hankel transforms need.
"""
import numpy as np

_RESCALE = 1e200


def _start_order(n_max, x_max):
    # even start index comfortably past both the order and the argument
    m = max(n_max, int(np.ceil(x_max))) + 20 + int(np.sqrt(40 * max(n_max, x_max, 1.0)))
    return m + (m % 2)


def bessel_jn_all(n_max, x):
    """Return ``J_0(x) .. J_{n_max}(x)`` stacked along a new first axis.

    Args:
        n_max (int): Highest order, ``n_max >= 0``.
        x (array_like): Real arguments of any shape.

    Returns:
        np.ndarray: Array of shape ``(n_max + 1,) + x.shape``.
    """
    n_max = int(n_max)
    assert n_max >= 0
    x = np.asarray(x, dtype=float)
    shape = x.shape
    flat = x.ravel()
    ax = np.abs(flat)
    zero = ax < 1e-100
    ax = np.where(zero, 1.0, ax)

    out = np.zeros((n_max + 1, flat.size))
    if flat.size == 0:
        return out.reshape((n_max + 1, ) + shape)

    m = _start_order(n_max, ax.max())
    j_next = np.zeros_like(ax)
    j_cur = np.full_like(ax, 1e-30)
    norm = np.zeros_like(ax)
    for k in range(m, 0, -1):
        if k <= n_max:
            out[k] = j_cur
        if k % 2 == 0:
            norm += 2.0 * j_cur
        j_prev = (2.0 * k / ax) * j_cur - j_next
        j_next, j_cur = j_cur, j_prev
        big = np.abs(j_cur) > _RESCALE
        if big.any():
            j_cur[big] /= _RESCALE
            j_next[big] /= _RESCALE
            norm[big] /= _RESCALE
            out[:, big] /= _RESCALE
    out[0] = j_cur
    norm += j_cur
    out /= norm

    out[:, zero] = 0.0
    out[0, zero] = 1.0
    if np.any(flat < 0):
        odd = np.arange(n_max + 1) % 2 == 1
        neg = flat < 0
        out[np.ix_(odd, neg)] *= -1.0
    return out.reshape((n_max + 1, ) + shape)


def bessel_jn(n, x):
    return bessel_jn_all(n, x)[n]


def bessel_j0(x):
    return bessel_jn_all(0, x)[0]


def bessel_j1(x):
    return bessel_jn_all(1, x)[1]
