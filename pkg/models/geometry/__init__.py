from .bs_sampling import (bs_lift, bs_point_values, lift_points, rotations,
                          sample_base, sample_bases)
from .frames import PatchGrid, PointFrame, RadialProbe
from .hyperbolic import (as_disc_point, boundary_point, check_in_disc,
                         disc_distance, from_normal_coordinates,
                         horocycle_bracket, mobius)
from .spaces import (Euclidean, FlatTorus, HyperbolicDisc, build_space,
                     distance, rescale_metric)

__all__ = [
    'Euclidean', 'HyperbolicDisc', 'FlatTorus', 'distance', 'rescale_metric',
    'build_space', 'PointFrame', 'PatchGrid', 'RadialProbe', 'sample_base',
    'sample_bases', 'bs_lift', 'bs_point_values', 'lift_points', 'rotations',
    'as_disc_point', 'check_in_disc', 'disc_distance', 'mobius',
    'from_normal_coordinates', 'boundary_point', 'horocycle_bracket'
]
