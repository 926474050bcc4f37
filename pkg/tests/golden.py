"""Literal seeds and mutation words (0-based, as printed for SAGE)."""
from __future__ import annotations

E6_MATRIX = [[0,0,-1,-1,-1,1,1,1],[0,0,-1,-1,-1,1,1,1],
             [1,1,0,0,0,-1,-1,-1],[1,1,0,0,0,-1,-1,-1],[1,1,0,0,0,-1,-1,-1],
             [-1,-1,1,1,1,0,0,0],[-1,-1,1,1,1,0,0,0],[-1,-1,1,1,1,0,0,0]]

E6_LONG_LINES = [[0,2,5,3,6,0,1,2,5,3,6,1], [0,2,5,4,7,0,1,2,5,4,7,1], [0,3,6,4,7,0,1,3,6,4,7,1]]
E6_LONG_TAIL = [0, 1]
E6_SHORT = [0,2,5,3,6,4,7,0,1,2,5,3,6,4,7,1,0,2,5,3,6,4,7,1]

E7_MATRIX = [[0,0,-1,-1,-1,1,1,1,1],[0,0,-1,-1,-1,1,1,1,1],
             [1,1,0,0,0,-1,-1,-1,-1],[1,1,0,0,0,-1,-1,-1,-1],[1,1,0,0,0,-1,-1,-1,-1],
             [-1,-1,1,1,1,0,0,0,0],[-1,-1,1,1,1,0,0,0,0],[-1,-1,1,1,1,0,0,0,0],
             [-1,-1,1,1,1,0,0,0,0]]

E7_LINES = [[0,2,3,5,6,0,1,2,3,5,6,1], [0,2,4,5,7,0,1,2,4,5,7,1], [0,3,4,5,8,0,1,3,4,5,8,1],
            [0,2,3,7,8,0,1,2,3,7,8,1], [0,2,4,6,8,0,1,2,4,6,8,1], [0,3,4,6,7,0,1,3,4,6,7,1]]

E8_MATRIX = [[0,0,-1,-1,-1,1,1,1,1,1],[0,0,-1,-1,-1,1,1,1,1,1],
             [1,1,0,0,0,-1,-1,-1,-1,-1],[1,1,0,0,0,-1,-1,-1,-1,-1],[1,1,0,0,0,-1,-1,-1,-1,-1],
             [-1,-1,1,1,1,0,0,0,0,0],[-1,-1,1,1,1,0,0,0,0,0],[-1,-1,1,1,1,0,0,0,0,0],
             [-1,-1,1,1,1,0,0,0,0,0],[-1,-1,1,1,1,0,0,0,0,0]]

E8_LINES = [
    [0,4,7,0], [0,2,3,5,6,0,1,2,3,5,6,1], [1,4,7,1],
    [1,4,9,1], [0,2,3,5,8,0,1,2,3,5,8,1], [0,4,9,0],
    [1,4,7,1], [0,2,3,5,6,0,1,2,3,5,6,1], [0,4,7,0],
    [0,4,9,0], [0,2,3,5,8,0,1,2,3,5,8,1], [1,4,9,1],
    [0,2,3,6,7,0,1,2,3,6,7,1],
    [0,3,4,6,8,0,1,3,4,6,8,1],
    [0,2,4,6,9,0,1,2,4,6,9,1],
    [0,2,3,8,9,0,1,2,3,8,9,1],
    [0,3,4,7,9,0,1,3,4,7,9,1],
    [0,2,4,7,8,0,1,2,4,7,8,1],
]


def one_based(word):
    return tuple(k + 1 for k in word)


def flatten(lines):
    return [k for line in lines for k in line]
