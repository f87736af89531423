"""Printed reference values, transcribed as plain-text formulas.

Formulas use the syntax of :mod:`pqkverify.exact.parse`.  ``A`` stands for
the A-hat genus i^{0,0}.  Nothing here is used as an input to a computation;
these are only compared against computed results.
"""

from __future__ import annotations

from fractions import Fraction

CH_H = "2 + u + u^2/12 + u^3/360 + u^4/20160 + u^5/1814400"

CH_E = (
    "10 - c2 + (c2^2 - 2 c4)/12 + (-c2^3 + 3 c2 c4 - 3 c6)/360 "
    "+ (c2^4 - 4 c2^2 c4 + 2 c4^2 + 4 c2 c6 - 4 c8)/20160 "
    "+ (-5 c10 - c2^5 + 5 c2^3 c4 - 5 c2 c4^2 - 5 c2^2 c6 + 5 c4 c6 + 5 c2 c8)/1814400"
)

AHAT = (
    "1 + (c2 - 5 u)/12 + (3 c2^2 - c4 - 28 c2 u + 65 u^2)/720 "
    "+ (10 c2^3 - 9 c2 c4 + 2 c6 - 136 c2^2 u + 55 c4 u + 570 c2 u^2 - 820 u^3)/60480 "
    "+ (21 c2^4 - 34 c2^2 c4 + 5 c4^2 + 13 c2 c6 - 3 c8 - 384 c2^3 u + 409 c2 c4 u "
    "- 113 c6 u + 2274 c2^2 u^2 - 1060 c4 u^2 - 5736 c2 u^3 + 5760 u^4)/3628800 "
    "+ (90 c2^5 - 219 c2^3 c4 + 87 c2 c4^2 + 109 c2^2 c6 - 32 c4 c6 - 43 c2 c8 + 10 c10 "
    "- 2136 c2^4 u + 3990 c2^2 c4 u - 675 c4^2 u - 1834 c2 c6 u + 525 c8 u "
    "+ 16524 c2^3 u^2 - 19740 c2 c4 u^2 + 6155 c6 u^2 - 57576 c2^2 u^3 + 29935 c4 u^3 "
    "+ 98815 c2 u^4 - 73985 u^5)/479001600"
)

# (p, q) -> (denominator, bracketed numerator) for the twisted indices in dimension 20.
# The (0, 0) entry keeps its printed "u^4" in the pure u-power term; weight forces u^5.
# The (0, 1) entry gets one closing parenthesis that the printed display lacks.
INDEX_DISPLAYS: dict[tuple[int, int], tuple[int, str]] = {
    (0, 0): (
        479001600,
        "( 10c10+90 c2^5-32 c4 c6 -2136 c2^4 u -675 c4^2 u +525 c8 u +6155 c6 u^2 +29935 c4 "
        "u^3 -73985 u^4- 3 c2^3(73c4 -5508 u^2)+ c2^2(109 c6 +3990 c4 u - 57576 u^3) +c2(87 "
        "c4^2-43 c8-1834 c6 u -19740 c4 u^2 +98815 u^4) )",
    ),
    (0, 1): (
        239500800,
        "(10 c10 + 90 c2^5 -32 c4 c6 -750 c2^4 u -345 c4^2 u +327 c8 u -643 c6 u^2 -22799 c4 "
        "u^3+90817 u^5- 3c2^3(73 c4+1840 u^2) +c2^2(109c6+1746 c4 u +50400 u^3) + c2(87 "
        "c4^2-43 c8 -976 c6 u +4284 c4 u^2 -116543 u^4))",
    ),
    (0, 3): (
        119750400,
        "( 10 c10 + 90 c2^5-32 c4c6+4794 c2^4 u + 975 c4^2 u - 465 c8 u - 4075 c6 u^2 +87025 "
        "c4 u^3 + 310465 u^5 - 3 c2^3(73 c4 - 8368 u^2) + c2^2(109 c6 -7230 c4 u -135456 u^3) "
        "+ c2(87 c4^2-43 c8+ 2456 c6 u-6540 c4 u^2 -277055 u^4))",
    ),
    (0, 5): (
        79833600,
        "(10 c10+90 c2^5-32 c4 c6 +14034 c2^4 u +3175 c4^2 u -1785 c8 u +74685 c6 u^2 "
        "-1546255 c4 u^3 +44944065 u^5+c2^3(-219 c4+498544 u^2)+c2^2(109 c6-22190 c4 u "
        "+6228704 u^3)+c2( 87 c4^2-43 c8+8176 c6 u - 404740 c4 u^2 +30037185 u^4))",
    ),
    (0, 7): (
        59875200,
        "(10 c10 + 90 c2^5-32 c4 c6+26970 c2^4 u +6255 c4^2 u - 3633 c8 u + 362357 c6 u^2 "
        "-18291599 c4 u^3 + 3830160577 u^5 -3 c2^3(73 c4 -682800 u^2)+c2^2(109 c6-43134 c4 u "
        "+ 61087200 u^3)+c2(87 c4^2-43 c8 +16184 c6 u-1760556 c4 u^2 +796656577 u^4))",
    ),
    (1, 0): (
        239500800,
        "(-610 c10 +450 c2^5 +1952 c4 c6 -9294 c2^4 u - 49575 c4^2 u + 22425 c8 u-149405 c6 "
        "u^2 +690875 c4 u^3 -369925 u^5 + c2^3(-2481 c4+60576 u^2)+c2^2(-4669 c6 +43050 c4 u "
        "-179904 u^3)+c2(4593 c4^2-3317 c8 +56104 c6 u-224760 c4 u^2 +113915 u^4))",
    ),
    (1, 2): (
        79833600,
        "(-610 c10+450 c2^5+1952 c4 c6 +9186 c2^4 u + 60425 c4^2 u- 43575 c8 u + 8115 c6 u^2 "
        "+750715 c4 u^3 -693765 u^5-c2^3(2481 c4+48544 u^2)-c2^2(4669 c6+39670 c4 u +144704 "
        "u^3) +c2(4593 c4^2-3317 c8-101416 c6 u+203800 c4 u^2 +43515 u^4))",
    ),
    (1, 4): (
        47900160,
        "(-610 c10+450 c2^5+1952 c4c6 +46146 c2^4 u + 280425 c4^2 u- 175575 c8 u -5810093 c6 "
        "u^2 -31189765 c4 u^3 -6917125 u^5 - 3 c2^3(827 c4-333472 u^2)-c2(-4593 c4^2+3317 c8 "
        "+416456 c6 u +3272904 c4 u^2 +8410117 u^4)- c2^2(4669 c6+4770(43 c4 u -1504 u^3)))",
    ),
    (2, 1): (
        5443200,
        "(15070 c10+90 c2^5 - 2864 c4 c6 -246 c2^4u +855 c4^2 u + 21567 c8 u -153103 c6 "
        "u^2-79439 c4 u^3 +90817 u^5 -3 c2^3(241 c4 +2112 u^2)+c2^2(13 c6+1146 c4 u +21984 "
        "u^3) +c2(1599 c4^2+8369 c8 - 7840 c6 u +32784 c4 u^2 +56257 u^4))",
    ),
    (2, 3): (
        2721600,
        "(15070 c10+90 c2^5 -2864 c4 c6 +5298 c2^4 u + 59775 c4^2 u+530535 c8 u + 1506665 c6 "
        "u^2 +60625 c4 u^3 +310465 u^5 +c2^3(-723 c4 +53088 u^2)+c2^2(13 c6-36630 c4 u "
        "+109728 u^3)+c2(1599 c4^2+8369 c8 -5848 c6 u-307800 c4 u^2 +414145 u^4))",
    ),
    (3, 0): (
        21772800,
        "(-876370 c10+450 c2^5-38176 c4c6-7278 c2^4 u -73575 c4^2 u +1714425 c8 u + 571315 c6 "
        "u^2-293125 c4 u^3- 369925 u^5+c2^3(-4497 c4+28512 u^2)+c2^2(9347 c6 + 55050 c4 u "
        "-22848 u^3)+ c2(10641 c4^2+15931 c8-121112 c6 u-159720 c4 u^2-439045 u^4))",
    ),
    (3, 2): (
        7257600,
        "(-876370 c10+450 c2^5-38176 c4c6+11202 c2^4 u +190025 c4^2 u - 3765975 c8 u -158205 "
        "c6 u^2 -636485 c4 u^3 -693765 u^5-c2^3(4497 c4 +3808 u^2)+c2^2(9347 c6-104470 c4 "
        "u-225728 u^3)+c2(10641 c4^2+15931 c8+201368 c6 u-126680 c4 u^2-1062405 u^4))",
    ),
    (4, 1): (
        7257600,
        "(3509330 c10+450 c2^5-61216 c4 c6 + 282 c2^4 u + 46275 c4^2 u +10275 c8 u + 994705 "
        "c6 u^2 +1245365 c4 u^3+454085 u^5 - 3 c2^3(1709 c4+11376 u^2) +c2^2(18977 c6-15270 "
        "c4 u +24672 u^3) +c2(12531 c4^2-73079 c8 +101488 c6 u +228300 c4 u^2 +799685 u^4))",
    ),
    (5, 0): (
        3628800,
        "(-1415810 c10+90 c2^5-15488 c4 c6 -1254 c2^4 u - 13275 c4^2 u - 1020075 c8 u - "
        "599905 c6 u^2-314465 c4 u^3 - 73985 u^5-3 c2^3(367 c4-832 u^2)+c2^2(5191 c6+10290 c4 "
        "u + 11136 u^3)-c2(-2733 c4^2+33097 c8 +25816 c6 u+3360 c4 u^2+143105 u^4))",
    ),
}

INDEX_TYPOS = {(0, 0): "u^4 written where weight requires u^5 (coefficient -73985)"}

# Hilbert polynomial values in dimension 20, in the parameters d, v, A.
HILBERT_VALUES: dict[int, str] = {
    0: "A",
    1: "0",
    2: "(-2816 + 128 d - 360448 A - 7 v)/229376",
    3: "0",
    4: "(269568 - 7040 d + 4685824 A + 273 v)/1146880",
    5: "1",
    6: "(228096 + 18304 d - 2342912 A - 273 v)/114688",
    7: "d",
    8: "13 (-143616 + 35200 d + 3063808 A + 595 v)/114688",
    9: "(-10692 + 1760 d + 262144 A + 63 v)/140",
    10: "13 (-4333824 + 598400 d + 116424704 A + 33915 v)/229376",
    11: "(-9152 + 1144 d + 262144 A + 91 v)/14",
}

# solved characteristic number and the c2^2 u^3 positivity inequality (u5 = u^5, I16 = i^{1,6})
C2U4 = "-81/70 + 3 d/28 + 1536 A/35 - 31 u5/5"
C2SQ_U3_NUMERATOR = "495392 - 14240 d - 35651584 A - 1120 I16 + 707 v"
C2SQ_U3_DENOMINATOR = 35840
PREP05 = "-81/70 + 3 d/28 - 36 u5/5 + 1536 A/35"
AHAT_LOWER_COMBINATION = "(-1053 + 136 d + 32768 A)/448"

AHAT_BOUNDS_DECIMAL = ("0.0321350097", "0.6955146790")

# Euler characteristic estimate: float combination and its printed result
EULER_COMBINATION_INPUT = {"n": -0.168, "m": 4.99}
EULER_COMBINATION_RESULT = {"1": 19.9668, "b4": 0.254016, "b6": -0.063504, "A": -9835.62, "v": 0.0801763}

# i^{1,6} estimate with the parabola in m
PARABOLA_APEX = "(41472 - 1572864 A + 217 v)/(35 v)"
PARABOLA_MAX = -549.348
PARABOLA_ARGMAX = (0.695514790, 61)

# dimension 16 with c2 = x u
DIM16 = {
    "d_from_v": "7 + v/6 + v x/48",
    "b4_from_v": "783/2 - 7 v/8 - 9 v x/16 - 11 v x^2/128 - v x^3/512",
    "d_num": "7 (304 + 56 x + 3 x^2)",
    "b4_num": "-27 (1280 - 304 x - 40 x^2 + 7 x^3)",
    "b4_den_factor": 8,
    "den": "16 + 20 x + 3 x^2",
}
DIM16_HIT = {"x": 4, "d": 28, "v": 84, "b4": 3}
DIM16_BRANCHES = {(3, 0, 4): {"c4u2": Fraction(27, 32)}, (3, 2, 3): {"c4sq": Fraction(-75, 16)}}
DIM16_DATUM = (28, 84, 3, 0, 4)

DIM20 = {"b4": 1, "b6": 0, "b8": 1, "b10": 0, "u5": 1, "d": 78}
DIM16_ALL_MULTIPLES = {"d": 55, "b4": 1, "b6": 0, "b8": 1, "u4": 1}

DIM24_SEPTIC = (
    "29223 x^7 - 358275 x^6 - 6960405 x^5 + 67759961 x^4 + 579930789 x^3 "
    "- 4142432537 x^2 - 9711667063 x + 33284884867"
)
DIM24_ROOTS = [
    complex(2.156753156),
    complex(7.720829360),
    complex(11.12408307),
    complex(15.23992325),
    complex(-10.15093795, 2.570319306),
    complex(-3.679678028),
    complex(-10.15093795, -2.570319306),
]
# d on the septic branch: power k of the root -> coefficient
DIM24_D_COEFFS = {
    0: Fraction(457452279096536909, 2417248821903360),
    1: Fraction(7937019926774969, 402874803650560),
    2: Fraction(-19592196959405797, 2417248821903360),
    3: Fraction(-282904843313851, 604312205475840),
    4: Fraction(14142811929437, 161149921460224),
    5: Fraction(1176648936457, 402874803650560),
    6: Fraction(-263256496233, 805749607301120),
}
DIM24_RATIONAL_D = (Fraction(244724, 2891), Fraction(105))

BETTI_EXTREMAL = {"b4": 3382, "b6": 0, "b8": 3383, "b10": 2704, "chi": 16236}
LEMMA_PAIRS = [(1, 1), (2, 3), (3, 5), (4, 7), (5, 9)]

ADMISSIBLE_PAIRS = {
    15: [4, 24, 44, 64],
    22: list(range(24, 165, 20)),
    29: list(range(24, 265, 20)),
    36: list(range(24, 385, 20)),
}

# -- compact Lie groups ---------------------------------------------------------

# possible isometry groups in dimension 20 (rank <= 5, dim = 1 mod 7, 15..36)
ISOMETRY_GROUPS_20 = {
    15: ["SO(6)", "G2 x S^1", "SO(4) x SO(4) x SO(3)", "Sp(2) x Sp(1) x S^1 x S^1", "SU(3) x SO(4) x S^1"],
    22: ["Sp(3) x S^1", "SO(7) x S^1", "G2 x SU(3)"],
    29: ["SO(8) x S^1", "SO(6) x G2", "G2 x G2 x S^1", "SO(7) x SU(3)", "Sp(3) x SU(3)"],
    36: ["SO(9)", "Sp(4)"],
}

# dimensions mod 7, index n = 1..5 (raw formulas, so D1 and D2 included)
DIMS_MOD_7 = {
    "A": [3, 1, 1, 3, 0],
    "B": [3, 3, 0, 1, 6],
    "C": [3, 3, 0, 1, 6],
    "D": [1, 6, 1, 0, 3],
    "G2": 0,
    "F4": 3,
}

# largest groups of fixed rank: rank -> (dimension, printed groups)
MAX_DIM_PER_RANK = {
    1: (3, ["Sp(1)"]),
    2: (14, ["G2"]),
    3: (21, ["Sp(3)", "SO(7)"]),
    4: (52, ["F4"]),
    5: (55, ["Sp(5)", "F4 x Sp(1)", "SO(11)"]),
    6: (78, ["E6", "Sp(6)"]),
    7: (133, ["E7"]),
    8: (248, ["E8"]),
    9: (251, ["E8 x Sp(1)"]),
    10: (262, ["E8 x G2"]),
    11: (269, ["E8 x Sp(3)", "E8 x SO(7)"]),
    12: (300, ["Sp(12)", "SO(25)", "E8 x F4"]),
}

RECOGNITION_THRESHOLD = {
    3: 28, 4: 52, 5: 55, 6: 55, 7: 78, 8: 78, 9: 133, 10: 133, 11: 248, 12: 248,
    13: 251, 14: 251, 15: 262, 16: 262, 17: 269, 18: 269, 19: 300, 20: 300, 21: 303,
    22: 303, 23: 328, 24: 354, 25: 381, 26: 409, 27: 496, 28: 496,
}
RECOGNITION_THRESHOLD_GENERAL = "(n^2 + 5 n + 12)/2"  # n >= 29
# printed label of the n = 21 value; its dimension is 78 + 52 + 3 = 133
THRESHOLD_21_LABEL = "E6 x F4 x Sp(1)"
THRESHOLD_21_GROUP = "E8 x F4 x Sp(1)"

# groups above (n^2+5n+12)/2 of rank <= ceil(n/2)+2, written in n
SURVIVORS_EVEN = ["SO(n+4)", "SO(n+5)", "Sp(n/2+2)"]
SURVIVORS_ODD = [
    "SO(n+4)", "SO(n+4) x SO(2)", "SO(n+4) x SO(3)", "SO(n+5)", "SO(n+6)",
    "Sp((n+1)/2+2)", "Sp((n+1)/2+1)", "Sp((n+1)/2+1) x SO(2)", "Sp((n+1)/2+1) x Sp(1)",
]

# candidates for a subgroup of dimension 18..36 and rank <= 4 in dimension 20
STABILIZER_CANDIDATES = [
    "SU(5)", "SO(9)", "SO(8)", "Sp(4)", "Sp(3) x Sp(1)", "Sp(3) x S^1", "SO(7) x Sp(1)",
    "SO(7) x S^1", "SO(6) x Sp(1)", "Sp(2) x Sp(2)", "Sp(2) x SU(3)", "Sp(2) x G2",
    "G2 x G2", "G2 x SU(3)", "G2 x Sp(1) x Sp(1)", "G2 x Sp(1) x S^1",
]

OBSTRUCTED_PAIRS = [
    ("SO(7)", "Sp(5)"), ("SU(5)", "SO(9)"), ("SU(5)", "Sp(4)"),
    ("Sp(2) x SU(3)", "SO(9)"), ("Sp(2) x SU(3)", "Sp(4)"),
] + [(f"SO({n + 1})", f"Sp({n})") for n in range(6, 11)]
CHAIN_PAIRS = [("Sp(4)", "Sp(5)"), ("Sp(3)", "Sp(5)"), ("SU(4)", "Sp(5)")]

WOLF_DIMS_5 = {"HP^n": 78, "Gr2(C^(n+2))": 48, "Gr4(R^(n+4))": 36}
