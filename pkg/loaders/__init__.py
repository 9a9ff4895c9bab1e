from .builder import DATASETS, build_dataloader, build_dataset, resolve_workers
from .distributions import (ValueDistribution, SquareMeasure,
                            distribution_rows, eigenfunction_values,
                            gaussianity_report, point_values, square_measure)
from .field_dataset import WaveSampleDataset
from .metrics import (COVARIANCE_FIELDS, CovarianceEstimate, Metric_Covariance,
                      empirical_covariance, radial_probe)
from .nodal import (NODAL_FIELDS, NodalReport, UnionFind, count_sign_domains,
                    nodal_count, nodal_statistics, sign_pattern,
                    union_find_domains)
from .superposition import (KernelDistance, ModeComparison,
                            SuperpositionDataset, SuperpositionSpec,
                            compare_modes, draw_coefficients,
                            mode_ks_threshold, sample_superposition,
                            superposition_covariance,
                            superposition_point_values, superposition_values,
                            window_kernel, window_kernel_distance)

__all__ = [
    'DATASETS', 'build_dataset', 'build_dataloader', 'resolve_workers',
    'WaveSampleDataset', 'SuperpositionDataset', 'ValueDistribution',
    'SquareMeasure', 'gaussianity_report', 'square_measure',
    'distribution_rows', 'point_values', 'eigenfunction_values',
    'COVARIANCE_FIELDS', 'CovarianceEstimate', 'Metric_Covariance',
    'empirical_covariance', 'radial_probe', 'NODAL_FIELDS', 'NodalReport',
    'sign_pattern', 'count_sign_domains', 'UnionFind',
    'union_find_domains', 'nodal_count', 'nodal_statistics',
    'SuperpositionSpec', 'KernelDistance', 'ModeComparison',
    'draw_coefficients', 'sample_superposition', 'superposition_values',
    'superposition_covariance', 'superposition_point_values', 'window_kernel',
    'window_kernel_distance', 'compare_modes', 'mode_ks_threshold'
]
