"""Published reference values used by the verification suites and the tests.

Coefficients are written as sympy-parsable strings in q and x. Two printed
values are replaced by the values forced by the other tables: the S[1,3]
coefficient of g_4 is 1 (printed 3) and the S[1,1,1,1] coefficient of P_4 is
x(x+1)(x+2)(x+3)/24 (printed /6).
"""
from typing import Dict, List, Mapping, Tuple

from .algebra.coeff import Coefficient
from .algebra.ncsf import Basis, NcsfElement

Table = Mapping[Tuple[int, ...], str]


def element(terms: Table, basis: Basis = Basis.S) -> NcsfElement:
    """Build an NcsfElement from {key: 'coefficient expression'}."""
    return NcsfElement({key: Coefficient.from_sympy(text) for key, text in terms.items()}, basis)


CHAR_Q_CLASSIC: List[Dict[Tuple[int, ...], str]] = [
    {(): "1"},
    {(1,): "1"},
    {(2,): "1", (1, 1): "q"},
    {(3,): "1", (2, 1): "q + q**2", (1, 2): "q**2", (1, 1, 1): "q**3"},
    {
        (4,): "1",
        (3, 1): "q + q**2 + q**3",
        (2, 2): "q**2 + q**4",
        (1, 3): "q**3",
        (2, 1, 1): "q**3 + q**4 + q**5",
        (1, 2, 1): "q**4 + q**5",
        (1, 1, 2): "q**5",
        (1, 1, 1, 1): "q**6",
    },
]

G_SERIES: List[Dict[Tuple[int, ...], str]] = [
    {(): "1"},
    {(1,): "1"},
    {(2,): "1", (1, 1): "1"},
    {(3,): "1", (2, 1): "2", (1, 2): "1", (1, 1, 1): "1"},
    {
        (4,): "1",
        (3, 1): "3",
        (2, 2): "2",
        (1, 3): "1",
        (2, 1, 1): "3",
        (1, 2, 1): "2",
        (1, 1, 2): "1",
        (1, 1, 1, 1): "1",
    },
]

# partitions (parts decreasing) -> coefficient of h_λ
COMMUTATIVE_IMAGE: List[Dict[Tuple[int, ...], int]] = [
    {(): 1},
    {(1,): 1},
    {(2,): 1, (1, 1): 1},
    {(3,): 1, (2, 1): 3, (1, 1, 1): 1},
    {(4,): 1, (3, 1): 4, (2, 2): 2, (2, 1, 1): 6, (1, 1, 1, 1): 1},
]

# x^m coefficients of K, m = 0..5
K_SERIES: List[Dict[Tuple[int, ...], str]] = [
    {},
    {(): "q"},
    {(1,): "q**2"},
    {(2,): "q**4", (1, 1): "q**3"},
    {(3,): "q**7", (2, 1): "q**5 + q**6", (1, 2): "q**5", (1, 1, 1): "q**4"},
    {
        (4,): "q**11",
        (3, 1): "q**8 + q**9 + q**10",
        (2, 2): "q**7 + q**9",
        (1, 3): "q**8",
        (2, 1, 1): "q**6 + q**7 + q**8",
        (1, 2, 1): "q**6 + q**7",
        (1, 1, 2): "q**6",
        (1, 1, 1, 1): "q**5",
    },
]

F0_SERIES: List[Dict[Tuple[int, ...], str]] = [
    {(0,): "1"},
    {(1, 0): "1"},
    {(1, 1, 0): "1", (2, 0, 0): "1"},
    {(1, 1, 1, 0): "1", (1, 2, 0, 0): "1", (2, 0, 1, 0): "1", (2, 1, 0, 0): "1", (3, 0, 0, 0): "1"},
]

RIBBON_G3: Dict[Tuple[int, ...], str] = {
    (3,): "1 + q + 2*q**2 + q**3",
    (2, 1): "q + q**2 + q**3",
    (1, 2): "q**2 + q**3",
    (1, 1, 1): "q**3",
}

LAMBDA_G3: Dict[Tuple[int, ...], str] = {
    (3,): "1", (2, 1): "-3", (1, 2): "-2", (1, 1, 1): "5",
}

LAMBDA_G4: Dict[Tuple[int, ...], str] = {
    (4,): "-1",
    (3, 1): "4",
    (2, 2): "3",
    (1, 3): "2",
    (2, 1, 1): "-9",
    (1, 2, 1): "-7",
    (1, 1, 2): "-5",
    (1, 1, 1, 1): "14",
}

ABEL_POLYNOMIALS: List[Dict[Tuple[int, ...], str]] = [
    {(): "1"},
    {(1,): "x"},
    {(2,): "x", (1, 1): "x*(x+1)/2"},
    {(3,): "x", (2, 1): "x*(x+3)/2", (1, 2): "x*(x+1)/2", (1, 1, 1): "x*(x+1)*(x+2)/6"},
    {
        (4,): "x",
        (3, 1): "x*(x+5)/2",
        (2, 2): "x*(x+3)/2",
        (1, 3): "x*(x+1)/2",
        (2, 1, 1): "(x**3 + 6*x**2 + 11*x)/6",
        (1, 2, 1): "(x**3 + 6*x**2 + 5*x)/6",
        (1, 1, 2): "(x**3 + 3*x**2 + 2*x)/6",
        (1, 1, 1, 1): "x*(x+1)*(x+2)*(x+3)/24",
    },
]

# A = 1 image of ch_q PF^(3,2)_n
KL_32_Q_POLYNOMIALS: List[str] = [
    "1",
    "q + 1",
    "q**5 + 2*q**4 + 2*q**3 + 2*q**2 + q + 1",
    "q**12 + 3*q**11 + 5*q**10 + 7*q**9 + 7*q**8 + 7*q**7 + 6*q**6 + 5*q**5 + 4*q**4 + 3*q**3 + 2*q**2 + q + 1",
]
KL_32_PRINTED_PREFACTORS: List[int] = [0, -3, -9, -18]
KL_32_VALUES: List[int] = [1, 2, 9, 52, 340, 2394, 17710]

CATALAN_TRIANGLE: List[List[int]] = [
    [1],
    [1, 1],
    [2, 2, 1],
    [5, 5, 3, 1],
    [14, 14, 9, 4, 1],
    [42, 42, 28, 14, 5, 1],
    [132, 132, 90, 48, 20, 6, 1],
]

SCHRODER_TRIANGLE: List[List[int]] = [
    [1],
    [2, 1],
    [7, 3, 1],
    [28, 12, 4, 1],
    [121, 52, 18, 5, 1],
    [550, 237, 84, 25, 6, 1],
    [2591, 1119, 403, 125, 33, 7, 1],
]

B2_TRIANGLE: List[List[int]] = [
    [1],
    [3, 1],
    [15, 4, 1],
    [85, 22, 5, 1],
    [519, 132, 30, 6, 1],
    [3330, 837, 190, 39, 7, 1],
    [22135, 5516, 1250, 260, 49, 8, 1],
]

B3_TRIANGLE: List[List[int]] = [
    [1],
    [4, 1],
    [26, 5, 1],
    [192, 35, 6, 1],
    [1531, 270, 45, 7, 1],
    [12848, 2215, 362, 56, 8, 1],
    [111818, 18961, 3054, 469, 68, 9, 1],
]

GAMMA_TRIANGLES: Dict[int, List[List[int]]] = {
    0: CATALAN_TRIANGLE,
    1: SCHRODER_TRIANGLE,
    2: B2_TRIANGLE,
    3: B3_TRIANGLE,
}

MOTZKIN_TRIANGLE: List[List[int]] = [
    [1],
    [1],
    [1, 1],
    [1, 2, 1],
    [2, 3, 3, 1],
    [4, 6, 6, 4, 1],
    [9, 13, 13, 10, 5, 1],
    [21, 30, 30, 24, 15, 6, 1],
]

ROW_SUMS: Dict[int, List[int]] = {
    0: [1, 1, 2, 5, 14, 42, 132],
    1: [1, 1, 3, 11, 45, 197],
    -1: [1, 1, 1, 2, 4, 9, 21, 51],
}

MOTZKIN_NUMBERS: List[int] = [1, 1, 2, 4, 9, 21, 51, 127]

TREE_COEFFICIENTS: List[Tuple[Tuple[int, ...], int, int]] = [
    ((3, 1, 2, 1), 0, 16),
    ((1, 3, 1, 1), 1, 34),
]

IOTA_EXAMPLE: Tuple[Tuple[int, ...], Tuple[int, ...]] = (
    (2, 1, 1, 0, 1, 2, 0, 2, 0, 0),
    (1, 2, 0, 5, 0, 0, 1, 0, 0, 0),
)
