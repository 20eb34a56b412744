"""Published values the CLI compares its computations against.

Nothing in the computation path reads these; they only decide whether a
report is marked reproduced or refuted.
"""
from fractions import Fraction

EXTREMAL_K3_BASKET = "2,1x8;3,1x6;7,1;7,2;7,3"
EXTREMAL_K3_CHI = 2

LAMBDA_MAX = {"k3": Fraction(42), "enriques": Fraction(20)}

DEGA = {
    "abelian": {
        "overall": Fraction(1, 360),
        "witness": {"b": 1, "u": 3, "denoms": (12, 10, 8), "alpha": 4, "beta": 1, "gamma": 1},
        "cases": {"|I|=0": Fraction(1, 120), "|I|=1, u>=13": Fraction(1, 156),
                  "|I|>=3 or some u>=3": Fraction(1, 6)},
    },
    "bielliptic": {
        "overall": Fraction(1, 2160),
        "witness": {"b": 6, "u": 3, "denoms": (12, 10, 8), "alpha": 19, "beta": 6, "gamma": 7},
        "cases": {"|I|=0": Fraction(1, 720)},
    },
}

HURWITZ = {"delta": Fraction(1, 42), "orders": (2, 3, 7)}

# fiber tag -> (m_min, divisibility)
THEOREM = {
    "K3": (86, 1),
    "Enriques": (42, 2),
    "AbelianNonIsotrivial": (722, 1),
    "AbelianIsotrivial": (86, 1),
    "BiellipticIsotrivial": (96, 12),
    "BiellipticNonIsotrivial": (4332, 12),
    "NonRationalBase": (24, 12),
}
