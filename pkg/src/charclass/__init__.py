"""charclass: Segre classes, Chern-Schwartz-MacPherson classes and Euler
characteristics of projective schemes over prime fields, computed through the
projective degrees of rational maps on top of a self-contained Groebner
engine.
"""

from .chow import (
    ChowClass,
    ProjectiveDegrees,
    csm_from_polar_degrees,
    csm_from_singularity_segre,
    g_from_segre,
    involute,
    section_euler_characteristics,
    segre_from_degrees,
    segre_from_degrees_recurrence,
    smooth_complete_intersection_csm,
)
from .classes import (
    CsmResult,
    HypersurfaceCsm,
    SegreResult,
    csm_class,
    csm_class_details,
    csm_hypersurface,
    csm_hypersurface_details,
    euler_characteristic,
    euler_sections,
    segre_class,
    segre_class_details,
)
from .errors import (
    CharclassError,
    DimensionError,
    GenericityError,
    InternalError,
    PolyParseError,
    ProblemFileError,
    UnsupportedInputError,
)
from .groebner import (
    GroebnerBasis,
    buchberger,
    divide_exact,
    eliminate,
    gcd_poly,
    is_zero_dimensional,
    lcm_poly,
    normal_form,
    quotient_dimension,
    squarefree_part,
)
from .ideals import IdealSpec, equalize_degrees, monomials_of_degree
from .parser import parse_polynomial
from .problem_file import ProblemFile, build_ideal, load_ideal, load_problem
from .projdeg import (
    DegreeSystem,
    build_degree_system,
    projective_degree_i,
    projective_degrees,
    shadow_class,
    system_dimension,
)
from .randomness import RandomScalarSource, random_combination, random_form
from .ring import (
    DEFAULT_PRIME,
    Polynomial,
    PolyRing,
    PrimeField,
    field_inverse,
    poly_to_string,
)

__version__ = "0.1.0"

__all__ = [
    "ChowClass",
    "CharclassError",
    "CsmResult",
    "DEFAULT_PRIME",
    "DegreeSystem",
    "DimensionError",
    "GenericityError",
    "GroebnerBasis",
    "HypersurfaceCsm",
    "IdealSpec",
    "InternalError",
    "PolyParseError",
    "PolyRing",
    "Polynomial",
    "PrimeField",
    "ProblemFile",
    "ProblemFileError",
    "ProjectiveDegrees",
    "RandomScalarSource",
    "SegreResult",
    "UnsupportedInputError",
    "buchberger",
    "build_degree_system",
    "build_ideal",
    "csm_class",
    "csm_class_details",
    "csm_from_polar_degrees",
    "csm_from_singularity_segre",
    "csm_hypersurface",
    "csm_hypersurface_details",
    "divide_exact",
    "eliminate",
    "equalize_degrees",
    "euler_characteristic",
    "euler_sections",
    "field_inverse",
    "g_from_segre",
    "gcd_poly",
    "involute",
    "is_zero_dimensional",
    "lcm_poly",
    "load_ideal",
    "load_problem",
    "monomials_of_degree",
    "normal_form",
    "parse_polynomial",
    "poly_to_string",
    "projective_degree_i",
    "projective_degrees",
    "quotient_dimension",
    "random_combination",
    "random_form",
    "section_euler_characteristics",
    "segre_class",
    "segre_class_details",
    "segre_from_degrees",
    "segre_from_degrees_recurrence",
    "shadow_class",
    "smooth_complete_intersection_csm",
    "squarefree_part",
    "system_dimension",
]
