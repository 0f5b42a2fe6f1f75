"""Frozen reference matrices and sequences, typed in by hand from the printed tables."""

STEANE_GENERATORS = [
    "IIIZZZZ",
    "IZZIIZZ",
    "ZIZIZIZ",
    "IIIXXXX",
    "IXXIIXX",
    "XIXIXIX",
]

STEANE_A = """
000 000 000 101 101 101 101
000 101 101 000 000 101 101
101 000 101 000 101 000 101
000 000 000 011 011 011 011
000 011 011 000 000 011 011
011 000 011 000 011 000 011
"""

C4 = """
10000101
11000010
01100001
10110000
01011000
00101100
00010110
00001011
10000101
"""

HAMMING15_GENERATORS = [
    "IIIIIIIZZZZZZZZ",
    "IIIZZZZIIIIZZZZ",
    "IZZIIZZIIZZIIZZ",
    "ZIZIZIZIZIZIZIZ",
    "IIIIIIIXXXXXXXX",
    "IIIXXXXIIIIXXXX",
    "IXXIIXXIIXXIIXX",
    "XIXIXIXIXIXIXIX",
]

HAMMING15_A = """
000 000 000 000 000 000 000 101 101 101 101 101 101 101 101
000 000 000 101 101 101 101 000 000 000 000 101 101 101 101
000 101 101 000 000 101 101 000 000 101 101 000 000 101 101
101 000 101 000 101 000 101 000 101 000 101 000 101 000 101
000 000 000 000 000 000 000 011 011 011 011 011 011 011 011
000 000 000 011 011 011 011 000 000 000 000 011 011 011 011
000 011 011 000 000 011 011 000 000 011 011 000 000 011 011
011 000 011 000 011 000 011 000 011 000 011 000 011 000 011
"""

HAMMING15_B = """
011 000 011 011 000 011 000 101 110 101 110 110 101 110 101
000 011 011 101 101 110 110 101 101 110 110 000 000 011 011
011 101 110 101 110 000 011 000 011 101 110 101 110 000 011
101 101 000 000 101 101 000 101 000 000 101 101 000 000 101
101 000 101 101 000 101 000 011 110 011 110 110 011 110 011
000 101 101 011 011 110 110 011 011 110 110 000 000 101 101
101 011 110 011 110 000 101 000 101 011 110 011 110 000 101
011 011 000 000 011 011 000 011 000 000 011 011 000 000 011
011 000 011 011 000 011 000 101 110 101 110 110 101 110 101
"""

HAMMING15_SEQUENCE = [
    "XIXXIXIZYZYYZYZ",
    "IXXZZYYZZYYIIXX",
    "XZYZYIXIXZYZYIX",
    "ZZIIZZIZIIZZIIZ",
    "ZIZZIZIXYXYYXYX",
    "IZZXXYYXXYYIIZZ",
    "ZXYXYIZIZXYXYIZ",
    "XXIIXXIXIIXXIIX",
    "XIXXIXIZYZYYZYZ",
]

FIVE_QUBIT_SEQUENCE = [
    "XZZXI",
    "ZYYZI",
    "IXZZX",
    "XIXZZ",
    "ZYYZI",
    "XZZXI",
]

FIVE_QUBIT_B = """
011 101 101 011 000
101 110 110 101 000
000 011 101 101 011
011 000 011 101 101
101 110 110 101 000
011 101 101 011 000
"""


def bits(text: str) -> list[list[int]]:
    """Rows of a whitespace-grouped 0/1 table."""
    out = []
    for line in text.strip().splitlines():
        out.append([int(ch) for ch in line if ch in "01"])
    return out
