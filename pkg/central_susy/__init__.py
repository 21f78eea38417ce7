from .config import PhysicsConfig, Tolerances, load_config
from .ddim import (DimensionalContext,
                   classify_ddim,
                   ddim_broken_check,
                   full_W_ddim,
                   map_ell,
                   partners_ddim,
                   shape_invariance_check_ddim)
from .ell_maps import ConstantMap, EllMap, TabulatedMap, as_ell_map
from .exceptions import (CentralSusyError,
                         ConfigurationError,
                         DomainError,
                         GridTooCoarseError,
                         NormalizationError,
                         PoleError,
                         RegimeError,
                         SpecialFunctionOverflow)
from .families import (FAMILIES,
                        CentralPoschlTeller,
                        CoulombRIndep,
                        Family,
                        GeneralBessel,
                        HarmonicG1,
                        UpsideDownGm1)
from .grid import RadialGrid, make_grid
from .model import Model
from .partners import (InvarianceReport,
                       PartnerPair,
                       erratum_report,
                       partners_closed_form,
                       partners_from_W,
                       remainder_profile,
                       shape_invariance_check)
from .superpotential import (BesselCoefficients,
                             SuperpotentialSample,
                             central_potential,
                             central_w_family,
                             central_w_general,
                             centrifugal_potential,
                             coefficients,
                             full_W,
                             remainder_of)
from .wavefunction import (GroundState,
                           Status,
                           SusyStatus,
                           classify,
                           energy_ladder,
                           f2_roots,
                           ground_state,
                           localization_constant,
                           residual_order,
                           schrodinger_residual,
                           w_tilde)

__version__ = "0.1.0"
__docs__ = "Shape-invariant central potentials from a unified superpotential."
