"""Skew-closed and skew-monoidal categories, their enrichments and promonoidal
structures, checked exhaustively on finite instances."""
from .bridge import (Bridge, cartesian_bridge, check_bridge, check_correspondence,
                     closed_from_monoidal, find_left_adjoints, find_right_adjoints,
                     monoidal_from_closed)
from .config import BOUNDS
from .enriched import (Presheaf, VCategory, VFunctor, VModule, check_presheaf, check_vcategory,
                       check_vfunctor, check_vmodule, representable_vfunctor, self_enrichment,
                       unit_vcategory, yoneda_presheaf)
from .errors import (CompositionError, NotLeftNormal, SearchOverflow, SkewcatError,
                     StructuralError)
from .fincat import FinCat, chain, cyclic_group, discrete, poset, terminal
from .menriched import (MCategory, check_mcategory, transport_to_closed,
                        transport_to_monoidal)
from .promonoidal import (DayContext, PromonoidalStruct, RightContext, check_promonoidal,
                          extract_closed, extract_monoidal, from_object_Z, from_skew_monoidal)
from .skewcore import (AxiomReport, SkewClosed, SkewMonoidal, check_comonad, check_skew_closed,
                       check_skew_monoidal, induced_skew_closed)
from .yoneda import external_yoneda, strong_yoneda, yoneda_colimit_check

__version__ = "0.1.0"
