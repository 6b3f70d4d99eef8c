"""Exact invariants of isolated hypersurface singularities over the rationals.

Standard bases over the local ring (Mora's algorithm), matrix
factorizations, the Theta pairing with certified PSD verdicts, the
Grothendieck residue pairing on the Milnor algebra, Chern-character
forms, and the quasi-homogeneous spectrum.
"""

from .chern import (ChernClasses, DiffForm, chern_forms, chern_top_class,
                    free_factorization, theta_vs_residue)
from .errors import (FreeModuleError, InfiniteLengthError, NonIsolatedError,
                     NotAFactorizationError, NotInModuleError, NotProperError,
                     NotQuasiHomogeneousError, ParityError, PolyParseError,
                     RankMismatchError, ThetaLabError)
from .localstd import (LengthResult, StdBasis, VecPoly, length_of_quotient,
                       lift, normal_form, preimage, std_basis, syzygies)
from .mf import (MatrixFactorization, ModulePresentation, mf_direct_sum,
                 mf_from_module, mf_shift, mf_validate)
from .milnor import (MilnorAlgebra, ResidueData, milnor_algebra, residue,
                     residue_functional, residue_pairing_matrix)
from .poly import (LocalOrder, Poly, jacobian_ideal, parse_poly,
                   unit_inverse_series)
from .psd import PSDCertificate, ldlt_psd, psd_rank
from .spectrum import (SpectrumEntry, ctilde_twisted_pairing,
                       graded_orthogonality_check, spectrum)
from .theta import (GramVerdict, ThetaReport, gram, homogeneous_theta_formula,
                    intersection_multiplicity, periodic_tor_lengths, theta)

__version__ = "1.0.0"
