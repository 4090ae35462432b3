"""Published semi-canonical counts, indexed by (n, k).

OEIS A229161 (k=2), A229162 (k=3), A229163 (k=4), A229164 (k=5).
"""

NU_BY_K = {
    2: (2, [1, 1, 2, 5, 13, 42, 155, 636, 2889, 14321, 76834, 443157]),
    3: (3, [1, 1, 3, 25, 272, 4070, 79221, 1906501]),
    4: (4, [1, 1, 5, 161, 7776, 626649]),
    5: (5, [1, 1, 8, 1112, 287311]),
}

PUBLISHED_NU = {
    (first + i, k): value
    for k, (first, values) in NU_BY_K.items()
    for i, value in enumerate(values)
}

# largest n per k that the default sweep runs; anything above is a stretch target
DEFAULT_MAX_N = {2: 11, 3: 8, 4: 8, 5: 8}
