"""Real pencils of quadrics attached to real hyperelliptic curves.

From the Weierstrass points of a real hyperelliptic curve and a real divisor
the package builds the diagonal pencil of quadrics, its real normal form,
the Gutierrez-Lopez de Medrano invariant of the real intersection (with
diffeomorphism types for genus two), mod-2 Stiefel-Whitney data, and a
numerical sampler that checks the intersection is smooth.
"""

from .curve import (CurveTopology, IntervalProfile, Mobius, RealDivisor, WeierstrassSet,
                    classify_topology, interval_parities, normalize_chart, partition_weierstrass,
                    real_locus_intervals)
from .glreduce import (DiffeoType, GLInvariant, LambdaConfig, check_generic, genus2_lookup,
                       lambda_config, reduce, reduce_greedy)
from .pencil import (BasisChange, DiagonalPencil, RealNormalForm, basis_change, build_pencil,
                     epsilon_signs, genericity_check, real_normal_form, verify_normal_form)
from .qqi import QQi

__version__ = "0.1.0"
