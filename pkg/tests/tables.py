"""Reference listings for two worked instances, kept exactly as given.

Coordinates are 1-based ``(message, coordinate)`` pairs and code symbols
are 0-based, as listed. ``SYMBOLS_K18[4]`` keeps its misprinted last
term ``(15, 3)``; the construction gives ``(14, 3)``.
"""

# 18 x 12 AIR matrix used for K=18, D=7, U=1, m=2 with (a, b) = (0, 1)
AIR_18_12 = """
1 0 0 0 0 0 0 0 0 0 0 0
0 1 0 0 0 0 0 0 0 0 0 0
0 0 1 0 0 0 0 0 0 0 0 0
0 0 0 1 0 0 0 0 0 0 0 0
0 0 0 0 1 0 0 0 0 0 0 0
0 0 0 0 0 1 0 0 0 0 0 0
0 0 0 0 0 0 1 0 0 0 0 0
0 0 0 0 0 0 0 1 0 0 0 0
0 0 0 0 0 0 0 0 1 0 0 0
0 0 0 0 0 0 0 0 0 1 0 0
0 0 0 0 0 0 0 0 0 0 1 0
0 0 0 0 0 0 0 0 0 0 0 1
1 0 0 0 0 0 1 0 0 0 0 0
0 1 0 0 0 0 0 1 0 0 0 0
0 0 1 0 0 0 0 0 1 0 0 0
0 0 0 1 0 0 0 0 0 1 0 0
0 0 0 0 1 0 0 0 0 0 1 0
0 0 0 0 0 1 0 0 0 0 0 1
"""

# code symbol -> message coordinates, K=18, D=7, U=1, m=2, (a, b) = (0, 1)
SYMBOLS_K18 = {
    0: [(0, 1), (17, 2), (16, 3), (12, 1), (11, 2), (10, 3)],
    1: [(1, 1), (0, 2), (17, 3), (13, 1), (12, 2), (11, 3)],
    2: [(2, 1), (1, 2), (0, 3), (14, 1), (13, 2), (12, 3)],
    3: [(3, 1), (2, 2), (1, 3), (15, 1), (14, 2), (13, 3)],
    4: [(4, 1), (3, 2), (2, 3), (16, 1), (15, 2), (15, 3)],
    5: [(5, 1), (4, 2), (3, 3), (17, 1), (16, 2), (15, 3)],
    6: [(6, 1), (5, 2), (4, 3), (12, 1), (11, 2), (10, 3)],
    7: [(7, 1), (6, 2), (5, 3), (13, 1), (12, 2), (11, 3)],
    8: [(8, 1), (7, 2), (6, 3), (14, 1), (13, 2), (12, 3)],
    9: [(9, 1), (8, 2), (7, 3), (15, 1), (14, 2), (13, 3)],
    10: [(10, 1), (9, 2), (8, 3), (16, 1), (15, 2), (14, 3)],
    11: [(11, 1), (10, 2), (9, 3), (17, 1), (16, 2), (15, 3)],
}
# code symbol -> message coordinates, K=13, D=5, U=1, m=1, (a, b) = (2, 3)
SYMBOLS_K13 = {
    0: [(0, 1), (12, 2), (8, 5), (7, 6)],
    1: [(0, 3), (12, 4), (9, 1), (8, 2)],
    2: [(0, 5), (12, 6), (9, 3), (8, 4)],
    3: [(1, 1), (0, 2), (9, 5), (8, 6)],
    4: [(1, 3), (0, 4), (10, 1), (9, 2)],
    5: [(1, 5), (0, 6), (10, 3), (9, 4)],
    6: [(2, 1), (1, 2), (10, 5), (9, 6)],
    7: [(2, 3), (1, 4), (11, 1), (10, 2)],
    8: [(2, 5), (1, 6), (11, 3), (10, 4)],
    9: [(3, 1), (2, 2), (11, 5), (10, 6)],
    10: [(3, 3), (2, 4), (12, 1), (11, 2)],
    11: [(3, 5), (2, 6), (12, 3), (11, 4)],
    12: [(4, 1), (3, 2), (12, 5), (11, 6)],
    13: [(4, 3), (3, 4), (8, 5), (7, 6)],
    14: [(4, 5), (3, 6), (9, 1), (8, 2)],
    15: [(5, 1), (4, 2), (9, 3), (8, 4)],
    16: [(5, 3), (4, 4), (9, 5), (8, 6)],
    17: [(5, 5), (4, 6), (10, 1), (9, 2)],
    18: [(6, 1), (5, 2), (10, 3), (9, 4)],
    19: [(6, 3), (5, 4), (10, 5), (9, 6)],
    20: [(6, 5), (5, 6), (11, 1), (10, 2)],
    21: [(7, 1), (6, 2), (11, 3), (10, 4)],
    22: [(7, 3), (6, 4), (11, 5), (10, 6)],
    23: [(7, 5), (6, 6), (12, 1), (11, 2)],
    24: [(8, 1), (7, 2), (12, 3), (11, 4)],
    25: [(8, 3), (7, 4), (12, 5), (11, 6)],
}
# DECODE_K18[k][c]: code symbols receiver k combines for coordinate c
DECODE_K18 = [
    [[0], [1], [2]],
    [[1], [2], [3]],
    [[2], [3], [4]],
    [[3], [4], [5]],
    [[4], [5], [0, 6]],
    [[5], [0, 6], [1, 7]],
    [[0, 6], [1, 7], [2, 8]],
    [[1, 7], [2, 8], [3, 9]],
    [[2, 8], [3, 9], [4, 10]],
    [[3, 9], [4, 10], [5, 11]],
    [[4, 10], [5, 11], [6]],
    [[5, 11], [6], [7]],
    [[6], [7], [8]],
    [[7], [8], [9]],
    [[8], [9], [10]],
    [[9], [10], [11]],
    [[10], [11], [0]],
    [[11], [0], [1]],
]
# same layout for K=13, D=5, U=1, m=1
DECODE_K13 = [
    [[0], [3], [1], [4], [2], [5]],
    [[3], [6], [4], [7], [5], [8]],
    [[6], [9], [7], [10], [8], [11]],
    [[9], [12], [10], [0, 13], [11], [1, 14]],
    [[12], [2, 15], [0, 13], [3, 16], [1, 14], [4, 17]],
    [[2, 15], [5, 18], [3, 16], [6, 19], [4, 17], [7, 20]],
    [[5, 18], [8, 21], [6, 19], [9, 22], [7, 20], [10, 23]],
    [[8, 21], [11, 24], [9, 22], [12, 25], [10, 23], [13]],
    [[11, 24], [14], [12, 25], [15], [13], [16]],
    [[14], [17], [15], [18], [16], [19]],
    [[17], [20], [18], [21], [19], [22]],
    [[20], [23], [21], [24], [22], [25]],
    [[23], [0], [24], [1], [25], [2]],
]
