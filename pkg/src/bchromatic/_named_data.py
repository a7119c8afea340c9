# Literal edge lists for the named graphs; signatures are checked in the test suite.

EDGES = {
    'petersen': (
        (0, 1), (0, 4), (0, 5), (1, 2), (1, 6), (2, 3), (2, 7), (3, 4), (3, 8), (4, 9),
        (5, 7), (5, 8), (6, 8), (6, 9), (7, 9),
    ),
    'heawood': (
        (0, 1), (0, 5), (0, 13), (1, 2), (1, 10), (2, 3), (2, 7), (3, 4), (3, 12),
        (4, 5), (4, 9), (5, 6), (6, 7), (6, 11), (7, 8), (8, 9), (8, 13), (9, 10),
        (10, 11), (11, 12), (12, 13),
    ),
    'mcgee': (
        (0, 1), (0, 12), (0, 23), (1, 2), (1, 8), (2, 3), (2, 19), (3, 4), (3, 15),
        (4, 5), (4, 11), (5, 6), (5, 22), (6, 7), (6, 18), (7, 8), (7, 14), (8, 9),
        (9, 10), (9, 21), (10, 11), (10, 17), (11, 12), (12, 13), (13, 14), (13, 20),
        (14, 15), (15, 16), (16, 17), (16, 23), (17, 18), (18, 19), (19, 20), (20, 21),
        (21, 22), (22, 23),
    ),
    'robertson': (
        (0, 1), (0, 8), (0, 12), (0, 18), (1, 2), (1, 5), (1, 16), (2, 3), (2, 9),
        (2, 13), (3, 4), (3, 7), (3, 18), (4, 5), (4, 12), (4, 15), (5, 6), (5, 10),
        (6, 7), (6, 13), (6, 17), (7, 8), (7, 11), (8, 9), (8, 15), (9, 10), (9, 17),
        (10, 11), (10, 14), (11, 12), (11, 16), (12, 13), (13, 14), (14, 15), (14, 18),
        (15, 16), (16, 17), (17, 18),
    ),
    'hoffman_singleton': (
        (0, 1), (0, 2), (0, 3), (0, 6), (0, 7), (0, 8), (0, 9), (1, 12), (1, 17),
        (1, 26), (1, 27), (1, 28), (1, 29), (2, 10), (2, 11), (2, 13), (2, 14),
        (2, 15), (2, 16), (3, 4), (3, 5), (3, 30), (3, 35), (3, 40), (3, 45), (4, 11),
        (4, 17), (4, 34), (4, 39), (4, 44), (4, 49), (5, 10), (5, 12), (5, 33),
        (5, 38), (5, 43), (5, 48), (6, 18), (6, 22), (6, 31), (6, 39), (6, 43),
        (6, 47), (7, 19), (7, 23), (7, 34), (7, 37), (7, 41), (7, 48), (8, 20),
        (8, 24), (8, 33), (8, 36), (8, 42), (8, 49), (9, 21), (9, 25), (9, 32),
        (9, 38), (9, 44), (9, 46), (10, 17), (10, 18), (10, 19), (10, 20), (10, 21),
        (11, 12), (11, 32), (11, 37), (11, 42), (11, 47), (12, 31), (12, 36), (12, 41),
        (12, 46), (13, 22), (13, 26), (13, 30), (13, 36), (13, 44), (13, 48), (14, 23),
        (14, 27), (14, 31), (14, 38), (14, 40), (14, 49), (15, 24), (15, 28), (15, 34),
        (15, 35), (15, 43), (15, 46), (16, 25), (16, 29), (16, 33), (16, 39), (16, 41),
        (16, 45), (17, 22), (17, 23), (17, 24), (17, 25), (18, 26), (18, 32), (18, 35),
        (18, 41), (18, 49), (19, 27), (19, 30), (19, 39), (19, 42), (19, 46), (20, 28),
        (20, 31), (20, 37), (20, 44), (20, 45), (21, 29), (21, 34), (21, 36), (21, 40),
        (21, 47), (22, 33), (22, 37), (22, 40), (22, 46), (23, 32), (23, 36), (23, 43),
        (23, 45), (24, 30), (24, 38), (24, 41), (24, 47), (25, 31), (25, 35), (25, 42),
        (25, 48), (26, 34), (26, 38), (26, 42), (26, 45), (27, 33), (27, 35), (27, 44),
        (27, 47), (28, 32), (28, 39), (28, 40), (28, 48), (29, 30), (29, 37), (29, 43),
        (29, 49), (30, 31), (30, 32), (31, 34), (32, 33), (33, 34), (35, 36), (35, 37),
        (36, 39), (37, 38), (38, 39), (40, 41), (40, 42), (41, 44), (42, 43), (43, 44),
        (45, 46), (45, 47), (46, 49), (47, 48), (48, 49),
    ),
}
