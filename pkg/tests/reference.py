"""Reference matrices used by the tests.

Displays are kept in the compact ``-[ ... ]`` form: rows of ``&``-separated
entries, blanks meaning zero, and the whole matrix negated.
"""

EXAMPLE_STRING = "0011000101"
EXAMPLE_DEGREES = (10, 9, 6, 6, 4, 4, 4, 2, 2, 2, 1)
EXAMPLE_CONJUGATE = (11, 10, 7, 7, 4, 4, 2, 2, 2, 1, 0)
EXAMPLE_SUBSTRINGS = ("001", "0011", "00110001", "0011000101")
EXAMPLE_B = [[3, 5, 8], [9], [7]]
EXAMPLE_TERMINAL = [[3], [5], [7], [8], [9]]

L11 = r"""
-10 &1  &1  &1  &1  &1  &1  &1  &1  &1  &1
1   &-9 &1  &1  &1  &1  &1  &1  &1  &1  &
1   &1  &-6 &1  &1  &1  &1  &   &   &   &
1   &1  &1  &-6 &1  &1  &1  &   &   &   &
1   &1  &1  &1  &-4 &   &   &   &   &   &
1   &1  &1  &1  &   &-4 &   &   &   &   &
1   &1  &1  &1  &   &   &-4 &   &   &   &
1   &1  &   &   &   &   &   &-2 &   &   &
1   &1  &   &   &   &   &   &   &-2 &   &
1   &1  &   &   &   &   &   &   &   &-2 &
1   &   &   &   &   &   &   &   &   &   &-1
"""

# before the zero column is dropped
V11_RAW = r"""
-10 &   &   &   &   &   &   &   &   &   &
1   &-8 &   &   &   &   &   &   &   &   &1
1   &1  &-4 &   &   &   &   &1  &1  &1  &1
1   &1  &1  &-3 &   &   &   &1  &1  &1  &1
1   &1  &1  &1  &   &1  &1  &1  &1  &1  &1
1   &1  &1  &1  &   &-1 &1  &1  &1  &1  &1
1   &1  &1  &1  &   &   &-2 &1  &1  &1  &1
1   &1  &   &   &   &   &   &-5 &1  &1  &1
1   &1  &   &   &   &   &   &   &-6 &1  &1
1   &1  &   &   &   &   &   &   &   &-7 &1
1   &   &   &   &   &   &   &   &   &   &-9
"""

V11 = r"""
-10 &   &   &   &   &   &   &   &   &   &1
1   &-8 &   &   &   &   &   &   &   &1  &1
1   &1  &-4 &   &   &   &1  &1  &1  &1  &1
1   &1  &1  &-3 &   &   &1  &1  &1  &1  &1
1   &1  &1  &1  &1  &1  &1  &1  &1  &1  &1
1   &1  &1  &1  &-1 &1  &1  &1  &1  &1  &1
1   &1  &1  &1  &   &-2 &1  &1  &1  &1  &1
1   &1  &   &   &   &   &-5 &1  &1  &1  &1
1   &1  &   &   &   &   &   &-6 &1  &1  &1
1   &1  &   &   &   &   &   &   &-7 &1  &1
1   &   &   &   &   &   &   &   &   &-9 &1
"""

V4 = r"""
-3 &   &   &1
1  &1  &1  &1
1  &-1 &1  &1
1  &   &-2 &1
"""

V5 = r"""
-4 &   &   &   &1
1  &-3 &   &   &1
1  &1  &1  &1  &1
1  &1  &-1 &1  &1
1  &1  &   &-2 &1
"""

V9 = r"""
-8 &   &   &   &   &   &   &   &1
1  &-4 &   &   &   &1  &1  &1  &1
1  &1  &-3 &   &   &1  &1  &1  &1
1  &1  &1  &1  &1  &1  &1  &1  &1
1  &1  &1  &-1 &1  &1  &1  &1  &1
1  &1  &1  &   &-2 &1  &1  &1  &1
1  &   &   &   &   &-5 &1  &1  &1
1  &   &   &   &   &   &-6 &1  &1
1  &   &   &   &   &   &   &-7 &1
"""

COMBINED_8 = r"""
-4 &1  &1  &1  &   &1  &   &
1  &-2 &1  &   &   &   &   &
1  &1  &-2 &   &   &   &   &
1  &   &   &-1 &   &   &   &
   &   &   &   &-3 &1  &1  &1
1  &   &   &   &1  &-3 &1  &
   &   &   &   &1  &1  &-2 &
   &   &   &   &1  &   &   &-1
"""


def parse_negated(display: str) -> list[list[int]]:
    rows = []
    for line in display.strip().splitlines():
        rows.append([-int(x) if x.strip() else 0 for x in line.split("&")])
    if len({len(r) for r in rows}) != 1:
        raise ValueError("ragged display")
    return rows


def columns(M):
    return [list(c) for c in zip(*M)]
