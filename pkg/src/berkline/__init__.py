"""Exact computations on the nonarchimedean unit disc.

Valued-field arithmetic, Gauss valuations and Newton polygons, the finite
tree model of the Berkovich disc, cellular sheaf cohomology on those trees,
reduced-unit divisor calculus, and the annulus splitting construction.
"""

from .cancel import (AnnulusSpec, Divisor, SectionComponent, SectionData,
                     UNIT_ANNULUS, splitting_delta, y1_divisor, y2_divisor)
from .field import INF, PadicElem, PadicField, PuiseuxElem, PuiseuxField, valuation
from .gauss import (NewtonPolygon, gauss_valuation, log2_naive_norm, naive_norm,
                    newton_polygon, root_count_annulus, roots_in_disc,
                    spectral_limit, spectral_profile, sym_annulus_membership)
from .kernel import BACKEND as KERNEL_BACKEND
from .logvalue import INFINITY, ZERO, LogValue, as_logvalue
from .points import (ChainPoint, CoordVector, DiscPoint, PointClassification,
                     classify, coords, eval_point, meet, restrict_coords)
from .poly import Polynomial, RationalFunction, rat_normalize
from .sheaf import (CohomologyResult, HostTree, TreeSheaf, cohomology,
                    constant_sheaf, kummer_sheaf, make_cellular_sheaf,
                    shriek_extend, zero_sheaf)
from .skeleton import Skeleton, build_skeleton
from .units import (Domain, ExcludedDisc, LeadingClass, ReducedUnit, UnitClass,
                    boundary_degrees, char_poly_point, direction_slopes,
                    exterior_degree, homotopy_check, leading_class,
                    reduced_unit, unit_class)

__version__ = "0.1.0"
