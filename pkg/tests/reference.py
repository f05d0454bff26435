"""Reference values frozen from ``oracles.py`` (mpmath, 50 digits).

``test_oracles.py`` re-derives them, so a drift in either place is caught.
"""

from decimal import Decimal

FROZEN = {
    "4f1_min": "31.403420301308574264",
    "4f1_max": "52",
    "f2_min": "0.51572947158925714026",
    "2f3_min": "8.8709642597289215317",
    "f4_min": "0.10022758515055112048",
    "g2_min": "0.1715728752538099024",
    "g3_min": "296.19918150144658943",
    "g4_max": "-0.99978162850512696747",
    "g5_min": "0.20614057499955064977",
    "ineq_4_2": "4.6038754716096765049",
    "inline_31": "8.8116264148290295148",
    "inline_35": "-169.81333293569341056",
    "x1": "-0.46812948525691696213",
    "cos_pi_14": "0.97492791218182360702",
    "cos_pi_9": "0.93969262078590838405",
    "t_wa_444": "0.3535533905932737622",
    "onset_wb_444": "0.57452425971406986358",
    "t_max_444": "0.7071067811865475244",
    "t_wa_14": "0.96156921074586263683",
    "onset_wb_14": "0.94239633886078622514",
    "x0_14": "-1.4009688679024191262",
    "t_x0_14": "0.94491118252306806804",
    "circle_center_14": "-8.4058132074145147574",
    "circle_radius_14": "7.4132304380270012595",
}


def ref(key: str) -> float:
    return float(Decimal(FROZEN[key]))


# certified bound of each claim side, keyed by (claim, side), against the frozen value
CLAIM_TARGETS = {
    ("L41_1", "lower"): "4f1_min",
    ("L41_1", "upper"): "4f1_max",
    ("L41_3", "lower"): "f2_min",
    ("L41_4", "lower"): "2f3_min",
    ("L41_5", "lower"): "f4_min",
    ("L43_2", "lower"): "g2_min",
    ("L43_3", "lower"): "g3_min",
    ("L43_4", "upper"): "g4_max",
    ("L43_5", "lower"): "g5_min",
    ("ineq_4_2", "lower"): "ineq_4_2",
    ("inline_31", "lower"): "inline_31",
    ("inline_35", "upper"): "inline_35",
}
