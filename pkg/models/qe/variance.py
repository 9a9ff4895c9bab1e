import logging
import math

import numpy as np
from mmcv.utils import print_log

from ..spectral.radial import hankel
from .operators import _check_pair, amplitude_mean, matrix_elements

CSV_FIELDS = ('lambda_j', 'matrix_element', 'expected_lambda_j',
              'expected_lambda0', 'deviation')


class QEReport:
    """Matrix elements of a test kernel over a window and their variances.

    Attributes:
        window (SpectralWindow): The window of the basis.
        lambda_j, matrix_element, expected_lambda_j (np.ndarray): One entry
            per eigenfunction.
        expected_lambda0 (float): ``<A>`` at the window center.
        variance_center0 (float): Mean of ``|<phi_j, A phi_j> - <A>_lambda0|^2``.
        variance_centerj (float): Mean of ``|<phi_j, A phi_j> - <A>_lambda_j|^2``.
        drift (float): Mean of ``|<A>_lambda_j - <A>_lambda0|^2``.
    """

    def __init__(self, window, lambda_j, matrix_element, expected_lambda_j,
                 expected_lambda0):
        self.window = window
        self.lambda_j = np.asarray(lambda_j, dtype=float)
        self.matrix_element = np.asarray(matrix_element, dtype=float)
        self.expected_lambda_j = np.asarray(expected_lambda_j, dtype=float)
        self.expected_lambda0 = float(expected_lambda0)
        self.deviation = self.matrix_element - self.expected_lambda_j

    @property
    def count(self):
        return int(self.lambda_j.size)

    @property
    def defined(self):
        return self.count > 0

    def _mean_square(self, values):
        if not self.defined:
            return math.nan
        return float(np.mean(np.square(values)))

    @property
    def variance_center0(self):
        return self._mean_square(self.matrix_element - self.expected_lambda0)

    @property
    def variance_centerj(self):
        return self._mean_square(self.deviation)

    @property
    def variance(self):
        return self.variance_center0

    @property
    def drift(self):
        return self._mean_square(self.expected_lambda_j - self.expected_lambda0)

    def centering_bound_holds(self, rtol=1e-12):
        """``sqrt(V_j) <= sqrt(V_0) + sqrt(drift)``, the triangle inequality."""
        if not self.defined:
            return True
        lhs = math.sqrt(self.variance_centerj)
        rhs = math.sqrt(self.variance_center0) + math.sqrt(self.drift)
        return lhs <= rhs * (1 + rtol)

    def rows(self):
        return [
            dict(zip(CSV_FIELDS, (float(l), float(m), float(e),
                                  self.expected_lambda0, float(d))))
            for l, m, e, d in zip(self.lambda_j, self.matrix_element,
                                  self.expected_lambda_j, self.deviation)
        ]

    def summary(self):
        return dict(lambda0=self.window.lambda0, delta=self.window.delta,
                    count=self.count, defined=self.defined,
                    variance_center0=self.variance_center0,
                    variance_centerj=self.variance_centerj, drift=self.drift,
                    centering_bound=self.centering_bound_holds())


def variance_statistic(basis, kernel, exact=True):
    """QE variance of ``kernel`` over the functions of ``basis``.

    Both centerings are reported, at the window center and at each
    eigenvalue. An empty basis yields a report with ``count == 0`` and NaN
    variances.

    Returns:
        QEReport
    """
    _check_pair(basis, kernel)
    window = basis.window
    mean = amplitude_mean(kernel)
    if not len(basis):
        print_log(f'empty window [{window.lower}, {window.upper}]: '
                  'QE variance undefined', logger='bswaves',
                  level=logging.WARNING)
        return QEReport(window, [], [], [], 0.0)
    elements = matrix_elements(basis, kernel, exact=exact)
    # one transform per distinct eigenvalue, shared with the matrix elements
    rho = np.sqrt(basis.mode_eigenvalues)
    expected_j = np.repeat(mean * hankel(kernel.profile, rho), 2)
    expected_0 = mean * hankel(kernel.profile, math.sqrt(window.lambda0))
    report = QEReport(window, basis.eigenvalues, elements, expected_j,
                      expected_0)
    print_log(
        f'QE window lambda0={window.lambda0:g} delta={window.delta:g}: '
        f'N={report.count} V0={report.variance_center0:.4e} '
        f'Vj={report.variance_centerj:.4e}', logger='bswaves',
        level=logging.INFO)
    return report
