"""Reference data: class representatives, the trace-27 table, chains.

Representatives are stored as (c, d) pairs per trace, in colex order.
"""
from __future__ import annotations

REPRESENTATIVES = {
    3: [(1, 1)],
    4: [(1, 1)],
    5: [(1, 1)],
    6: [(1, 1)],
    7: [(1, 1)],
    8: [(1, 1)],
    9: [(1, 1)],
    10: [(1, 1), (2, 3)],
    11: [(1, 1)],
    12: [(1, 1), (4, 5)],
    13: [(1, 1), (2, 3), (3, 5)],
    14: [(1, 1), (5, 7)],
    15: [(1, 1), (2, 5)],
    16: [(1, 1), (2, 3), (4, 7)],
    17: [(1, 1), (4, 5), (6, 7)],
    18: [(1, 1), (3, 5)],
    19: [(1, 1), (2, 3), (3, 7), (5, 9), (8, 11), (9, 11)],
    20: [(1, 1), (2, 5), (2, 7)],
    21: [(1, 1), (5, 7), (9, 13)],
    22: [(1, 1), (2, 3), (4, 5), (8, 9), (6, 11), (14, 17)],
    23: [(1, 1), (3, 5), (4, 7), (5, 11), (6, 13)],
    24: [(1, 1), (6, 7), (3, 11), (17, 23)],
    25: [(1, 1), (2, 3), (2, 5), (2, 9), (7, 11), (7, 13), (8, 13), (10, 13), (13, 17)],
    26: [(1, 1), (3, 7), (4, 11), (12, 17)],
    27: [(1, 1), (4, 5), (2, 7), (10, 11), (11, 13), (7, 17), (14, 19)],
    28: [
        (1, 1), (2, 3), (3, 5), (5, 7), (5, 9), (8, 15), (13, 19), (16, 19), (19, 23),
        (23, 27),
    ],
    29: [(1, 1), (4, 17), (8, 19), (27, 37)],
    30: [(1, 1), (2, 5), (4, 7), (2, 11), (8, 11), (9, 11), (5, 13), (15, 17)],
    31: [(1, 1), (2, 3), (6, 7), (8, 9), (9, 17), (11, 17), (15, 23)],
    32: [(1, 1), (4, 5), (3, 13), (4, 13), (12, 13), (18, 23)],
    33: [(1, 1), (3, 5), (3, 7), (6, 11), (12, 19), (16, 23), (35, 43)],
    34: [
        (1, 1), (2, 3), (2, 7), (2, 9), (5, 11), (9, 13), (5, 17), (9, 19), (10, 19),
        (15, 19), (20, 27), (26, 41),
    ],
    35: [
        (1, 1), (2, 5), (5, 7), (3, 11), (2, 13), (3, 17), (4, 19), (17, 25), (13, 29),
        (17, 37),
    ],
    36: [(1, 1), (7, 11), (6, 13), (8, 17), (11, 19)],
    37: [
        (1, 1), (2, 3), (4, 5), (4, 7), (5, 9), (4, 11), (14, 15), (6, 17), (11, 21),
        (5, 23), (7, 23), (5, 27), (26, 33), (14, 45), (23, 51),
    ],
    38: [
        (1, 1), (3, 5), (6, 7), (10, 11), (7, 13), (8, 13), (10, 13), (10, 17), (6, 19),
        (8, 25), (22, 29), (43, 55),
    ],
    39: [(1, 1), (14, 17), (17, 29), (25, 29), (26, 29), (21, 37)],
    40: [
        (1, 1), (2, 3), (2, 5), (3, 7), (8, 9), (11, 13), (2, 15), (17, 19), (17, 21),
        (12, 23), (20, 29), (12, 31), (25, 31), (14, 37), (30, 41), (17, 57),
    ],
    41: [
        (1, 1), (2, 7), (2, 11), (8, 11), (9, 11), (7, 19), (21, 23), (9, 29), (28, 43),
    ],
    42: [
        (1, 1), (4, 5), (5, 7), (13, 17), (16, 17), (20, 23), (19, 25), (21, 31),
        (19, 43), (31, 71),
    ],
    43: [
        (1, 1), (2, 3), (3, 5), (2, 9), (5, 13), (8, 15), (12, 17), (5, 19), (6, 23),
        (13, 25), (10, 43), (38, 45), (29, 51), (15, 53), (54, 61), (10, 67),
    ],
    44: [
        (1, 1), (4, 7), (6, 11), (7, 17), (23, 29), (9, 31), (13, 31), (22, 31), (8, 37),
    ],
    45: [
        (1, 1), (2, 5), (6, 7), (5, 11), (3, 13), (4, 13), (12, 13), (2, 17), (3, 19),
        (12, 25), (27, 31), (27, 35), (42, 53), (24, 61),
    ],
    46: [
        (1, 1), (2, 3), (5, 9), (3, 11), (4, 17), (14, 19), (3, 23), (10, 23), (14, 27),
        (4, 29), (11, 29), (14, 33),
    ],
    47: [
        (1, 1), (4, 5), (3, 7), (7, 11), (9, 13), (15, 17), (13, 19), (16, 19),
        (18, 19), (17, 23), (14, 25), (28, 31), (24, 35), (18, 41), (32, 43), (39, 83),
    ],
    48: [
        (1, 1), (3, 5), (2, 7), (4, 11), (2, 13), (9, 17), (11, 17), (8, 19), (8, 23),
        (9, 23), (18, 25), (5, 29), (20, 31), (23, 35), (25, 43), (15, 47), (54, 67),
        (39, 71),
    ],
    49: [
        (1, 1), (2, 3), (5, 7), (8, 9), (10, 11), (6, 13), (5, 21), (4, 23), (11, 23),
        (8, 27), (15, 29), (25, 37), (29, 37), (32, 37), (32, 39), (13, 43), (38, 43),
        (50, 69), (33, 73), (41, 89),
    ],
    50: [
        (1, 1), (2, 5), (2, 19), (14, 23), (22, 25), (19, 31), (11, 37), (15, 37),
        (24, 37), (13, 41), (9, 43), (48, 61),
    ],
    51: [
        (1, 1), (4, 7), (7, 13), (8, 13), (10, 13), (5, 17), (13, 23), (19, 23),
        (12, 29), (24, 31), (31, 41), (38, 47), (43, 47),
    ],
    52: [
        (1, 1), (2, 3), (4, 5), (6, 7), (2, 9), (2, 11), (8, 11), (9, 11), (14, 15),
        (3, 17), (12, 19), (20, 21), (9, 25), (11, 27), (27, 29), (16, 31), (8, 33),
        (20, 33), (36, 41), (29, 45), (20, 51), (24, 55), (20, 63), (41, 71), (59, 73),
        (59, 75), (56, 87), (32, 103),
    ],
    53: [
        (1, 1), (3, 5), (11, 13), (8, 17), (9, 19), (10, 19), (15, 19), (23, 25),
        (8, 29), (21, 29), (24, 29), (7, 31), (24, 41), (37, 53), (45, 83),
    ],
    54: [
        (1, 1), (3, 7), (6, 17), (4, 19), (15, 23), (19, 29), (4, 31), (5, 31),
        (14, 31), (31, 37), (28, 41), (25, 53),
    ],
    55: [
        (1, 1), (2, 3), (2, 5), (2, 7), (5, 9), (6, 11), (2, 15), (10, 17), (11, 19),
        (2, 21), (18, 23), (7, 25), (23, 27), (17, 33), (39, 43), (32, 45), (39, 47),
        (44, 51), (44, 53), (17, 55), (11, 57), (17, 61), (29, 67), (41, 69), (20, 73),
        (32, 75), (27, 85),
    ],
    56: [
        (1, 1), (5, 7), (5, 11), (5, 13), (14, 17), (16, 23), (15, 31), (16, 37),
        (38, 41), (29, 43), (11, 47), (20, 47), (73, 89), (75, 101), (78, 107),
    ],
    57: [
        (1, 1), (4, 5), (3, 11), (6, 19), (22, 23), (4, 25), (3, 29), (7, 29), (18, 29),
        (12, 37), (10, 41), (43, 53), (41, 73), (15, 79), (25, 89), (15, 109),
    ],
    58: [
        (1, 1), (2, 3), (3, 5), (4, 7), (8, 9), (7, 11), (3, 13), (4, 13), (12, 13),
        (8, 15), (11, 21), (3, 25), (17, 27), (17, 31), (18, 31), (23, 31), (29, 33),
        (18, 35), (23, 37), (33, 37), (17, 39), (29, 39), (19, 41), (20, 43), (8, 45),
        (36, 47), (29, 53), (8, 61), (53, 63), (53, 75), (56, 79), (25, 91), (20, 109),
        (107, 117), (101, 123), (83, 141),
    ],
    59: [
        (1, 1), (6, 7), (4, 11), (13, 17), (16, 17), (17, 19), (10, 29), (26, 31),
        (28, 37), (41, 49), (42, 59), (26, 61), (38, 61), (55, 67),
    ],
    60: [
        (1, 1), (2, 5), (10, 11), (9, 13), (12, 17), (7, 19), (2, 23), (5, 23), (7, 23),
        (17, 25), (6, 37), (6, 43), (5, 47), (41, 53), (32, 55), (48, 83),
    ],
    61: [
        (1, 1), (2, 3), (3, 7), (2, 9), (2, 13), (7, 17), (17, 21), (20, 27), (19, 37),
        (30, 43), (32, 47), (35, 47), (41, 47), (41, 51), (51, 59), (53, 59), (46, 73),
        (23, 79), (80, 91), (85, 103), (26, 139),
    ],
    62: [
        (1, 1), (4, 5), (2, 7), (6, 13), (2, 17), (5, 19), (24, 25), (14, 29), (9, 35),
        (22, 37), (23, 41), (24, 43), (21, 53), (14, 59), (28, 61), (19, 65), (55, 71),
        (63, 73),
    ],
    63: [
        (1, 1), (3, 5), (5, 7), (2, 11), (8, 11), (9, 11), (4, 17), (12, 23), (8, 25),
        (10, 31), (11, 31), (33, 35), (4, 41), (6, 41), (12, 41), (33, 49), (13, 55),
        (60, 73), (68, 77), (74, 83), (28, 97), (60, 97), (72, 97), (79, 107),
    ],
    64: [
        (1, 1), (2, 3), (5, 9), (7, 13), (8, 13), (10, 13), (15, 17), (3, 19), (21, 23),
        (5, 27), (6, 29), (13, 29), (16, 29), (8, 39), (20, 39), (23, 39), (5, 43),
        (17, 43), (18, 47), (28, 47), (32, 51), (40, 53), (41, 57), (37, 59), (32, 67),
        (51, 71), (74, 87), (62, 97), (75, 109), (146, 159),
    ],
    65: [
        (1, 1), (2, 5), (4, 7), (9, 17), (11, 17), (14, 19), (20, 23), (2, 25),
        (32, 35), (15, 41), (16, 41), (34, 41), (31, 47), (11, 49), (53, 61), (39, 67),
        (52, 67), (61, 79), (58, 83), (62, 89), (90, 113),
    ],
    66: [
        (1, 1), (6, 7), (6, 11), (11, 13), (13, 19), (16, 19), (18, 19), (6, 23),
        (8, 31), (29, 31), (9, 37), (27, 37), (30, 37), (29, 41), (40, 43), (33, 47),
        (20, 49), (23, 53), (68, 79), (64, 109),
    ],
    67: [
        (1, 1), (2, 3), (4, 5), (8, 9), (5, 11), (14, 15), (8, 19), (19, 25), (26, 27),
        (22, 29), (5, 33), (5, 37), (7, 37), (18, 37), (21, 41), (31, 43), (34, 43),
        (40, 47), (39, 53), (49, 55), (44, 75), (26, 81), (78, 97), (71, 99), (44, 111),
        (92, 111), (41, 173), (50, 179),
    ],
    68: [
        (1, 1), (3, 5), (3, 7), (3, 11), (5, 17), (13, 25), (17, 29), (25, 29),
        (26, 29), (3, 35), (33, 43), (45, 49), (12, 53), (20, 53), (36, 53), (23, 61),
        (34, 61), (15, 67), (36, 67), (23, 73), (25, 79), (37, 89), (80, 97), (126, 197),
    ],
    69: [
        (1, 1), (2, 7), (7, 11), (5, 13), (3, 17), (2, 19), (3, 23), (10, 23), (20, 29),
        (20, 37), (22, 53), (36, 61), (49, 67), (32, 71), (57, 73), (24, 107),
        (60, 127), (80, 181),
    ],
}

# Labels of the trace-27 classes and their multiplication table.
# I_0 is absorbing; I_1..I_6 form a cyclic group with I_6 the identity.
TRACE27_LABELS = {
    0: (2, 7),
    1: (7, 17),
    2: (4, 5),
    3: (11, 13),
    4: (10, 11),
    5: (14, 19),
    6: (1, 1),
}

TRACE27_TABLE = [
    [0, 0, 0, 0, 0, 0, 0],
    [0, 2, 3, 4, 5, 6, 1],
    [0, 3, 4, 5, 6, 1, 2],
    [0, 4, 5, 6, 1, 2, 3],
    [0, 5, 6, 1, 2, 3, 4],
    [0, 6, 1, 2, 3, 4, 5],
    [0, 1, 2, 3, 4, 5, 6],
]

# Trace-27 equivalences and principal ideals used in the table argument.
TRACE27_EQUIVALENT = [((7, 17), (44, 49))]
TRACE27_PRINCIPAL = [(2, 49)]

# Chains of moves: a start triple followed by (kind, triple) steps, where
# kind "G" is a trace shift and "S" a jump within a similarity class.
# Each chain ends at a triple whose trace is handled separately.
BAND_CHAINS = [
    ((32, 103, 52), [("G", (32, 103, -51)), ("S", (87, 101, -51)), ("G", (87, 101, 50))]),
    ((15, 109, 57), [("G", (15, 109, -52)), ("S", (18, 79, -52)), ("G", (18, 79, 27))]),
    ((107, 117, 58), [("G", (107, 117, -59)), ("S", (29, 109, -59)), ("G", (29, 109, 50))]),
    ((101, 123, 58), [("G", (101, 123, -65)), ("S", (30, 47, -65)), ("G", (30, 47, 18))]),
    ((83, 141, 58), [
        ("S", (128, 165, 58)), ("G", (128, 165, -107)), ("S", (38, 119, -107)),
        ("G", (38, 119, 12)),
    ]),
    ((26, 139, 61), [
        ("S", (119, 291, 61)), ("G", (119, 291, -230)), ("S", (302, 391, -230)),
        ("G", (302, 391, 161)), ("S", (114, 149, 161)), ("G", (114, 149, -15)),
    ]),
    ((146, 159, 64), [("G", (146, 159, -95)), ("S", (26, 89, -95)), ("G", (26, 89, -6))]),
    ((41, 173, 67), [
        ("G", (41, 173, -106)), ("S", (210, 233, -106)), ("G", (210, 233, 127)),
        ("S", (158, 267, 127)), ("G", (158, 267, -140)), ("S", (153, 179, -140)),
        ("G", (153, 179, 39)),
    ]),
    ((50, 179, 67), [
        ("S", (272, 291, 67)), ("G", (272, 291, -224)), ("S", (142, 397, -224)),
        ("G", (142, 397, 173)), ("S", (14, 149, 173)), ("G", (14, 149, 24)),
    ]),
    ((126, 197, 68), [
        ("S", (248, 265, 68)), ("G", (248, 265, -197)), ("S", (170, 407, -197)),
        ("G", (170, 407, 210)), ("S", (18, 277, 210)), ("G", (18, 277, -67)),
        ("S", (38, 205, -67)), ("G", (38, 205, 138)), ("S", (139, 227, 138)),
        ("G", (139, 227, -89)), ("S", (70, 97, -89)), ("G", (70, 97, 8)),
    ]),
    ((80, 181, 69), [
        ("S", (167, 211, 69)), ("G", (167, 211, -142)), ("S", (218, 269, -142)),
        ("G", (218, 269, 127)), ("S", (36, 151, 127)), ("G", (36, 151, -24)),
    ]),
]

# Earle family (c, d, c + 2): entry a = (c^2 - c + 1)/d of X_{c,d,c+2}.
EARLE_A19 = [
    (8, 3, 10), (12, 7, 14), (27, 37, 29), (31, 49, 33), (46, 109, 48), (50, 129, 52),
    (65, 219, 67), (69, 247, 71), (84, 367, 86), (88, 403, 90),
]
EARLE_A37 = [(11, 3, 13), (27, 19, 29), (48, 61, 50), (64, 109, 66), (85, 193, 87)]

EARLE_CHAINS = [
    ((69, 247, 71), [("S", (83, 103, 71))]),
    ((84, 367, 86), [("S", (102, 127, 86))]),
    ((88, 403, 90), [("S", (107, 133, 90))]),
    ((85, 193, 87), [
        ("S", (198, 283, 87)), ("G", (198, 283, -196)), ("S", (155, 229, -196)),
        ("G", (155, 229, 33)),
    ]),
]

# Traces whose class monoid is trivial.
TRIVIAL_TRACES = frozenset([-6, *range(-4, 10), 11])

# Two-class example at trace -5 and its image at trace 10.
EXAMPLE_TEN = [((1, 1, -5), (1, 1, 10)), ((2, 3, -5), (2, 3, 10))]


def reps_for(n: int) -> list[tuple[int, int, int]]:
    return [(c, d, n) for c, d in REPRESENTATIVES[n]]

# Printed chain entries that are not valid shifts, with the consistent reading.
# -65 + 47 = -18; the printed trace 18 is not congruent to -65 mod 47.
# f_{-15} has no root mod 149; 161 - 149 = 12 is the nearest valid shift.
CHAIN_CORRECTIONS = {(30, 47, 18): (30, 47, -18), (114, 149, -15): (114, 149, 12)}


def corrected_steps(steps):
    return [(kind, CHAIN_CORRECTIONS.get(t, t)) for kind, t in steps]
