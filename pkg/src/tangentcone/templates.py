"""Resolution templates for the fourteen supported (case, variant) pairs.

Entries are strings over x1..x4 with exponents that are linear forms in
the structure exponents (a2, a13, 2*a2+a32, ...). ``phi1`` doubles as the
generator list of the tangent cone ideal for that variant.

Witnesses list the minors used in the exactness argument. ``delete`` is
(rows, cols), 1-based, removed from phi2; φ3 witnesses have no stated
position and are located by search. Each witness carries one or more
readings of the predicted value (sign, monomial, binomial factors).
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Reading:
    sign: int
    monomial: str = "1"
    binomials: tuple = ()
    note: str = ""


def R(sign, monomial="1", *binomials, note=""):
    return Reading(-1 if sign == "-" else 1, monomial, tuple(binomials), note)


@dataclass(frozen=True)
class Witness:
    matrix: str                  # "phi2" or "phi3"
    size: int
    readings: tuple              # first entry is the literal reading
    delete: tuple | None = None  # ((rows...), (cols...)), 1-based


@dataclass(frozen=True)
class Template:
    case: str
    variant: int
    phi1: tuple
    phi2: tuple
    phi3: tuple
    phi2_witnesses: tuple = ()
    phi3_witnesses: tuple = ()
    corrections: tuple = field(default_factory=tuple)   # (matrix, row, col, printed, used)

    @property
    def betti(self):
        return (1, len(self.phi1), len(self.phi2[0]), len(self.phi3[0]))


F2_1A = "x2^a2 - x1^a21*x4^a24"
F2_13 = "x2^a2 - x1^a21*x3^a23"
F3_1B = "x3^a3 - x2^a32*x4^a34"
F5_1B = "x2^a42*x3^a13 - x1^a21*x4^a34"
F2_2B = "x2^a2 - x1^a21*x4^a24"
F3_3A = "x3^a3 - x1^a31*x4^a34"


TEMPLATES = [
    # ------------------------------------------------------------ case 1(a)
    Template(
        "1a", 1,
        phi1=("x3^a13*x4^a14", "x2^a2", "x3^a3", "x4^a4", "x2^a32*x4^a14"),
        phi2=(
            ("x3^a43", "0", "x4^a24", "x2^a32", "0", "0"),
            ("0", "x3^a3", "0", "0", "0", "x4^a14"),
            ("-x4^a14", "-x2^a2", "0", "0", "0", "0"),
            ("0", "0", "-x3^a13", "0", "x2^a32", "0"),
            ("0", "0", "0", "-x3^a13", "-x4^a24", "-x2^a42"),
        ),
        phi3=(
            ("x2^a2", "0"),
            ("-x4^a14", "0"),
            ("0", "x2^a32"),
            ("-x2^a42*x3^a43", "-x4^a24"),
            ("0", "x3^a13"),
            ("x3^a3", "0"),
        ),
        phi2_witnesses=(
            Witness("phi2", 4, (R("-", "x2^(2*a2+a32)"),), delete=((2,), (1, 3))),
            Witness("phi2", 4, (R("+", "x3^(a3+2*a13)*x4^a14"),), delete=((1,), (5, 6))),
        ),
        phi3_witnesses=(
            Witness("phi3", 2, (R("+", "x2^(a2+a32)"),)),
            Witness("phi3", 2, (R("+", "x3^(a3+a13)"),)),
            Witness("phi3", 2, (R("+", "x4^a4"),)),
        ),
    ),
    Template(
        "1a", 2,
        phi1=("x3^a13*x4^a14", F2_1A, "x3^a3", "x4^a4", "x2^a32*x4^a14"),
        phi2=(
            ("x4^a24", "x2^a32", "x3^a43", "0", "0", "0"),
            ("0", "0", "0", "x4^a14", "0", "x3^a3"),
            ("0", "0", "-x4^a14", "0", "0", "-x2^a2 + x1^a21*x4^a24"),
            ("-x3^a13", "0", "0", "x1^a21", "x2^a32", "0"),
            ("0", "-x3^a13", "0", "-x2^a42", "-x4^a24", "0"),
        ),
        phi3=(
            ("x2^a32", "x1^a21*x3^a43"),
            ("-x4^a24", "-x2^a42*x3^a43"),
            ("0", F2_1A),
            ("0", "x3^a3"),
            ("x3^a13", "0"),
            ("0", "-x4^a14"),
        ),
        phi2_witnesses=(
            Witness("phi2", 4, (R("-", "x3^(2*a13)*x4^(2*a14)"),), delete=((1,), (5, 6))),
            Witness("phi2", 4, (
                R("-", "x2^(2*a32)", F2_1A, F2_1A, note="as printed"),
                R("-", "x2^a32", F2_1A, F2_1A, note="cofactor expansion along row 1"),
            ), delete=((2,), (1, 3))),
        ),
        phi3_witnesses=(
            Witness("phi3", 2, (
                R("+", "x2^a2", F2_1A, note="regular-sequence triple as printed"),
                R("+", "x2^a32", F2_1A, note="as in the printed list of 2-minors"),
            )),
            Witness("phi3", 2, (R("+", "x3^(a3+a13)"),)),
            Witness("phi3", 2, (R("+", "x4^a4"),)),
        ),
    ),
    # ------------------------------------------------------------ case 1(b)
    Template(
        "1b", 1,
        phi1=("x3^a13*x4^a14", "x2^a2", "x3^a3", "x4^a4", "x2^a42*x3^a13"),
        phi2=(
            ("-x4^a34", "0", "-x3^a23", "0", "x2^a42", "0"),
            ("0", "-x4^a4", "0", "0", "0", "-x3^a13"),
            ("0", "0", "x4^a14", "x2^a42", "0", "0"),
            ("x3^a13", "x2^a2", "0", "0", "0", "0"),
            ("0", "0", "0", "-x3^a23", "-x4^a14", "x2^a32"),
        ),
        phi3=(
            ("x2^a2", "0"),
            ("-x3^a13", "0"),
            ("0", "x2^a42"),
            ("0", "-x4^a14"),
            ("x2^a32*x4^a34", "x3^a23"),
            ("x4^a4", "0"),
        ),
        phi2_witnesses=(
            Witness("phi2", 4, (R("+", "x3^(2*a3)"),), delete=((3,), (2, 5))),
            Witness("phi2", 4, (R("+", "x2^(2*a2+a42)"),), delete=((2,), (1, 3))),
        ),
        phi3_witnesses=(
            Witness("phi3", 2, (R("+", "x2^(a2+a42)"),)),
            Witness("phi3", 2, (R("+", "x3^a3"),)),
            Witness("phi3", 2, (R("+", "x4^(a4+a14)"),)),
        ),
    ),
    Template(
        "1b", 2,
        phi1=("x3^a13*x4^a14", F2_13, "x3^a3", "x4^a4", "x2^a42*x3^a13"),
        phi2=(
            ("-x4^a34", "0", "-x3^a23", "0", "0", "x2^a42"),
            ("0", "-x4^a4", "0", "0", "x3^a13", "0"),
            ("0", "0", "x4^a14", "x2^a42", "x1^a21", "0"),
            ("x3^a13", F2_13, "0", "0", "0", "0"),
            ("0", "0", "0", "-x3^a23", "-x2^a32", "-x4^a14"),
        ),
        phi3=(
            (F2_13, "0"),
            ("-x3^a13", "0"),
            ("x1^a21*x4^a34", "x2^a42"),
            ("0", "-x4^a14"),
            ("-x4^a4", "0"),
            ("x2^a32*x4^a34", "x3^a23"),
        ),
        phi2_witnesses=(
            Witness("phi2", 4, (R("+", "x3^(2*a3)"),), delete=((3,), (2, 6))),
            Witness("phi2", 4, (R("-", "x2^a32*x4^(2*a4)"),), delete=((4,), (4, 6))),
        ),
        corrections=(("phi2", 3, 6, "-x4^a14", "0"), ("phi2", 5, 6, "0", "-x4^a14")),
        phi3_witnesses=(
            Witness("phi3", 2, (R("-", "x3^a3"),)),
            Witness("phi3", 2, (R("+", "x1^a21*x4^a4"),)),
            Witness("phi3", 2, (R("+", "x2^a42", F2_13),)),
        ),
    ),
    Template(
        "1b", 3,
        phi1=("x3^a13*x4^a14", "x2^a2", F3_1B, "x4^a4", "x2^a42*x3^a13"),
        phi2=(
            ("-x3^a23", "0", "x4^a34", "x2^a42", "0"),
            ("0", "x4^a34", "0", "0", "x3^a13"),
            ("x4^a14", "x2^a42", "0", "0", "0"),
            ("x2^a32", "0", "-x3^a13", "0", "0"),
            ("0", "-x3^a23", "0", "-x4^a14", "-x2^a32"),
        ),
        phi3=(
            ("x2^a42*x3^a13",),
            ("-x3^a13*x4^a14",),
            ("x2^a2",),
            (F3_1B,),
            ("x4^a4",),
        ),
        phi2_witnesses=(
            Witness("phi2", 4, (R("+", "1", F3_1B, F3_1B),), delete=((3,), (4,))),
            Witness("phi2", 4, (R("+", "x4^(2*a4)"),), delete=((4,), (5,))),
        ),
    ),
    Template(
        "1b", 4,
        phi1=("x3^a13*x4^a14", F2_13, F3_1B, "x4^a4", F5_1B),
        phi2=(
            ("-x4^a34", "x3^a23", "-x2^a42", "0", "0"),
            ("0", "0", "0", "x4^a34", "-x3^a13"),
            ("0", "-x4^a14", "0", "x2^a42", "-x1^a21"),
            ("x3^a13", "-x2^a32", "x1^a21", "0", "0"),
            ("0", "0", "x4^a14", "-x3^a23", "x2^a32"),
        ),
        phi3=(
            (F2_13,),
            (F5_1B,),
            (F3_1B,),
            ("x3^a13*x4^a14",),
            ("x4^a4",),
        ),
        phi2_witnesses=(
            Witness("phi2", 4, (R("+", "1", F2_13, F2_13),), delete=((2,), (1,))),
            Witness("phi2", 4, (R("+", "x4^(2*a4)"),), delete=((4,), (5,))),
        ),
    ),
    # ------------------------------------------------------------ case 2(b)
    Template(
        "2b", 1,
        phi1=("x2^a12*x3^a13", "x2^a2", "x3^a3", "x4^a4", "x3^a13*x4^a24"),
        phi2=(
            ("x4^a24", "x3^a43", "x2^a32", "0", "0", "0"),
            ("0", "0", "-x3^a13", "0", "0", "-x4^a4"),
            ("0", "-x2^a12", "0", "0", "-x4^a24", "0"),
            ("0", "0", "0", "-x3^a13", "0", "x2^a2"),
            ("-x2^a12", "0", "0", "x4^a34", "x3^a43", "0"),
        ),
        phi3=(
            ("x3^a43", "x2^a32*x4^a34"),
            ("-x4^a24", "0"),
            ("0", "-x4^a4"),
            ("0", "x2^a2"),
            ("x2^a12", "0"),
            ("0", "x3^a13"),
        ),
        phi2_witnesses=(
            Witness("phi2", 4, (R("+", "x3^(2*a3)"),), delete=((3,), (1, 6))),
            Witness("phi2", 4, (R("+", "x2^(2*a2+a12)"),), delete=((2,), (4, 5))),
        ),
        phi3_witnesses=(
            Witness("phi3", 2, (R("-", "x2^(a2+a12)"),)),
            Witness("phi3", 2, (
                R("+", "1", "x3^a3 - x2^a32*x4^a34", note="binomial f3 as printed"),
                R("+", "x3^a3", note="lowest-degree form of f3"),
            )),
            Witness("phi3", 2, (R("+", "x4^(a4+a24)"),)),
        ),
    ),
    Template(
        "2b", 2,
        phi1=("x2^a12*x3^a13", F2_2B, "x3^a3", "x4^a4", "x3^a13*x4^a24"),
        phi2=(
            ("x4^a24", "x3^a43", "x2^a32", "0", "0", "0"),
            ("0", "0", "-x3^a13", "0", "0", "-x4^a4"),
            ("0", "-x2^a12", "0", "0", "-x4^a24", "0"),
            ("0", "0", "0", "-x3^a13", "0", F2_2B),
            ("-x2^a12", "0", "-x1^a21", "x4^a34", "x3^a43", "0"),
        ),
        phi3=(
            ("x3^a43", "x2^a32*x4^a34"),
            ("-x4^a24", "0"),
            ("0", "-x4^a4"),
            ("0", F2_2B),
            ("x2^a12", "0"),
            ("0", "x3^a13"),
        ),
        phi2_witnesses=(
            Witness("phi2", 4, (R("+", "x3^(2*a3)"),), delete=((3,), (1, 6))),
            Witness("phi2", 4, (R("-", "x4^(a24+2*a4)"),), delete=((4,), (2, 3))),
        ),
        phi3_witnesses=(
            Witness("phi3", 2, (R("-", "x2^a12", F2_2B),)),
            Witness("phi3", 2, (
                R("+", "1", "x3^a3 - x2^a32*x4^a34", note="binomial f3 as printed"),
                R("+", "x3^a3", note="lowest-degree form of f3"),
            )),
            Witness("phi3", 2, (R("+", "x4^(a24+a4)"),)),
        ),
    ),
    Template(
        "2b", 3,
        phi1=("x2^a12*x3^a13", "x2^a2", "x3^a3 - x2^a32*x4^a34", "x4^a4", "x3^a13*x4^a24"),
        phi2=(
            ("-x4^a24", "0", "0", "-x2^a32", "-x3^a43"),
            ("0", "0", "0", "x3^a13", "x4^a34"),
            ("0", "-x4^a24", "0", "0", "x2^a12"),
            ("0", "-x2^a32", "-x3^a13", "0", "0"),
            ("x2^a12", "x3^a43", "x4^a34", "0", "0"),
        ),
        phi3=(
            ("x3^a3 - x2^a32*x4^a34",),
            ("-x2^a12*x3^a13",),
            ("x2^a2",),
            ("x4^a4",),
            ("-x3^a13*x4^a24",),
        ),
        phi2_witnesses=(
            Witness("phi2", 4, (R("-", "x2^(2*a2)"),), delete=((2,), (3,))),
            Witness("phi2", 4, (R("+", "x4^(2*a4)"),), delete=((4,), (4,))),
        ),
    ),
    Template(
        "2b", 4,
        phi1=("x2^a12*x3^a13", F2_2B, "x3^a3 - x2^a32*x4^a34", "x4^a4", "x3^a13*x4^a24"),
        phi2=(
            ("x4^a24", "x2^a32", "x3^a43", "0", "0"),
            ("0", "-x3^a13", "-x4^a34", "0", "0"),
            ("0", "0", "-x2^a12", "0", "-x4^a24"),
            ("0", "0", "-x1^a21", "-x3^a13", "-x2^a32"),
            ("-x2^a12", "-x1^a21", "0", "x4^a34", "x3^a43"),
        ),
        phi3=(
            ("x3^a3 - x2^a32*x4^a34",),
            ("x4^a4",),
            ("-x3^a13*x4^a24",),
            ("-x2^a2 + x1^a21*x4^a24",),
            ("x2^a12*x3^a13",),
        ),
        phi2_witnesses=(
            Witness("phi2", 4, (
                R("-", "1", "x1^a1 - x2^a12*x3^a13", "x1^a1 - x2^a12*x3^a13", note="binomial f1 as printed"),
                R("-", "x2^(2*a12)*x3^(2*a13)", note="f1 read as its lowest-degree form"),
            ), delete=((1,), (5,))),
            Witness("phi2", 4, (R("-", "x4^(2*a4)"),), delete=((4,), (2,))),
        ),
    ),
    # ------------------------------------------------------------ case 3(a)
    Template(
        "3a", 1,
        phi1=("x2^a12*x4^a14", "x2^a2", "x3^a3", "x4^a4", "x3^a23*x4^a14"),
        phi2=(
            ("0", "0", "x3^a23", "x4^a34", "x2^a42", "0"),
            ("0", "-x3^a3", "0", "0", "-x4^a14", "0"),
            ("x4^a14", "x2^a2", "0", "0", "0", "0"),
            ("0", "0", "0", "-x2^a12", "0", "-x3^a23"),
            ("-x3^a43", "0", "-x2^a12", "0", "0", "x4^a34"),
        ),
        phi3=(
            ("x2^a2", "0"),
            ("-x4^a14", "0"),
            ("-x2^a42*x3^a43", "x4^a34"),
            ("0", "-x3^a23"),
            ("x3^a3", "0"),
            ("0", "x2^a12"),
        ),
        phi2_witnesses=(
            Witness("phi2", 4, (R("-", "x2^a12*x3^(2*a3)"),), delete=((3,), (5, 6))),
            Witness("phi2", 4, (R("-", "x4^(2*a4)"),), delete=((4,), (2, 3))),
        ),
        phi3_witnesses=(
            Witness("phi3", 2, (R("+", "x2^(a12+a2)"),)),
            Witness("phi3", 2, (R("+", "x3^(a23+a3)"),)),
            Witness("phi3", 2, (
                R("-", "1", "x4^a4 - x2^a42*x3^a43", note="binomial f4 as printed"),
                R("-", "x4^a4", note="lowest-degree form of f4"),
            )),
        ),
    ),
    Template(
        "3a", 2,
        phi1=("x2^a12*x4^a14", F2_13, "x3^a3", "x4^a4", "x3^a23*x4^a14"),
        phi2=(
            ("0", "0", "x3^a23", "x4^a34", "x2^a42", "0"),
            ("0", "-x3^a3", "0", "0", "-x4^a14", "0"),
            ("x4^a14", F2_13, "0", "0", "0", "0"),
            ("0", "0", "0", "-x2^a12", "0", "-x3^a23"),
            ("-x3^a43", "0", "-x2^a12", "0", "-x1^a21", "x4^a34"),
        ),
        phi3=(
            (F2_13, "0"),
            ("-x4^a14", "0"),
            ("-x2^a42*x3^a43", "x4^a34"),
            ("0", "-x3^a23"),
            ("x3^a3", "0"),
            ("0", "x2^a12"),
        ),
        phi2_witnesses=(
            Witness("phi2", 4, (R("-", "x3^(2*a3+a23)"),), delete=((3,), (4, 5))),
            Witness("phi2", 4, (R("-", "x4^(2*a4)"),), delete=((4,), (2, 3))),
        ),
        phi3_witnesses=(
            Witness("phi3", 2, (R("+", "x2^a12", F2_13),)),
            Witness("phi3", 2, (R("+", "x3^(a23+a3)"),)),
            Witness("phi3", 2, (
                R("-", "1", "x4^a4 - x2^a42*x3^a43", note="binomial f4 as printed"),
                R("-", "x4^a4", note="lowest-degree form of f4"),
            )),
        ),
    ),
    Template(
        "3a", 3,
        phi1=("x2^a12*x4^a14", "x2^a2", F3_3A, "x4^a4", "x3^a23*x4^a14"),
        phi2=(
            ("0", "0", "x3^a23", "x4^a34", "x2^a42", "0"),
            ("0", "-x3^a3 + x1^a31*x4^a34", "0", "0", "-x4^a14", "0"),
            ("x4^a14", "x2^a2", "0", "0", "0", "0"),
            ("x1^a31", "0", "0", "-x2^a12", "0", "-x3^a23"),
            ("-x3^a43", "0", "-x2^a12", "0", "0", "x4^a34"),
        ),
        phi3=(
            ("x2^a2", "0"),
            ("-x4^a14", "0"),
            ("-x2^a42*x3^a43", "x4^a34"),
            ("x1^a31*x2^a42", "-x3^a23"),
            (F3_3A, "0"),
            ("0", "x2^a12"),
        ),
        phi2_witnesses=(
            Witness("phi2", 4, (
                R("+", "x2^(a12+2*a2)", note="left-hand side as printed"),
                R("-", "x2^(2*a2)", note="right-hand side as printed"),
            ), delete=((2,), (1, 6))),
            Witness("phi2", 4, (R("-", "x4^(2*a4)"),), delete=((4,), (2, 3))),
        ),
        phi3_witnesses=(
            Witness("phi3", 2, (R("+", "x2^(a12+a2)"),)),
            Witness("phi3", 2, (R("+", "x3^a23", F3_3A),)),
            Witness("phi3", 2, (
                R("-", "1", "x4^a4 - x2^a42*x3^a43", note="binomial f4 as printed"),
                R("-", "x4^a4", note="lowest-degree form of f4"),
            )),
        ),
    ),
    Template(
        "3a", 4,
        phi1=("x2^a12*x4^a14", F2_13, F3_3A, "x4^a4", "x3^a23*x4^a14"),
        phi2=(
            ("x3^a23", "x2^a42", "x4^a34", "0", "0", "0"),
            ("0", "-x4^a14", "0", "0", "0", F3_3A),
            ("0", "0", "0", "-x4^a14", "0", "-x2^a2 + x1^a21*x3^a23"),
            ("0", "0", "-x2^a12", "-x1^a31", "-x3^a23", "0"),
            ("-x2^a12", "-x1^a21", "0", "x3^a43", "x4^a34", "0"),
        ),
        phi3=(
            ("x4^a34", "x2^a42*x3^a43"),
            ("0", "-x3^a3 + x1^a31*x4^a34"),
            ("-x3^a23", "-x1^a31*x2^a42"),
            ("0", F2_13),
            ("x2^a12", "x1^a1"),
            ("0", "-x4^a14"),
        ),
        phi2_witnesses=(
            Witness("phi2", 4, (R("+", "x2^(2*a12)*x4^(2*a14)"),), delete=((1,), (5, 6))),
            Witness("phi2", 4, (
                R("-", "x3^(2*a23)", F3_3A, F3_3A, note="as printed"),
                R("-", "x3^a23", F3_3A, F3_3A, note="cofactor expansion"),
            ), delete=((3,), (2, 3))),
        ),
        phi3_witnesses=(
            Witness("phi3", 2, (
                R("-", "1", "x1^a1 - x2^a12*x4^a14", note="binomial f1 as printed"),
                R("-", "x2^a12*x4^a14", note="f1 read as its lowest-degree form"),
            )),
            Witness("phi3", 2, (
                R("-", "1", "x4^a4 - x2^a42*x3^a43", note="binomial f4 as printed"),
                R("-", "x4^a4", note="lowest-degree form of f4"),
            )),
            Witness("phi3", 2, (
                R("+", "1", "x1^a31*x2^a42 - x3^a23*x4^a14", note="binomial f5 as printed"),
                R("+", "x3^a23*x4^a14", note="f5 read as its lowest-degree form"),
            )),
        ),
    ),
]

TEMPLATE_INDEX = {(t.case, t.variant): t for t in TEMPLATES}

VARIANT_COUNT = {"1a": 2, "1b": 4, "2b": 4, "3a": 4}


def get_template(case, variant):
    try:
        return TEMPLATE_INDEX[(case, variant)]
    except KeyError:
        raise KeyError(f"no template for case {case} variant {variant}") from None
