"""Fractional-repetition analysis of binary words.

Detection of fractional powers with exact rational exponents, binary
morphisms and their fixed points, factorization of power-free words around
the doubling morphism, exhaustive enumeration, and a verification suite
covering every desk-checkable claim about 7/3-power-free fixed points.
"""

from .words import Word, WordError, parse_word, EMPTY
from .repetitions import (
    Threshold,
    PowerOccurrence,
    FreenessChecker,
    max_exponent,
    max_exponent_occurrence,
    max_exponent_oracle,
    is_power_free,
    is_overlap_free,
    find_occurrences,
    freeness_step,
    SEVEN_THIRDS,
    SEVEN_THIRDS_PLUS,
    OVERLAP_THRESHOLD,
)
from .morphisms import (
    Morphism,
    MorphismForm,
    classify_form,
    thue_morse_direct,
    parse_morphism,
    MU,
    E,
    IDENTITY,
    H19,
)
from .factorization import (
    ADMISSIBLE_AFFIXES,
    MuFactorization,
    DecompositionTower,
    inverse_mu,
    factorize,
    decomposition_tower,
)
from .enumeration import (
    EnumerationQuery,
    enumerate_words,
    count_words,
    all_words_with_property,
    DEFAULT_EXHAUSTIVE_CEILING,
)

__version__ = "0.1.0"
