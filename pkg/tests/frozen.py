"""Expected values for the small test maps; subset column order (), a, b, ab, c, ac, bc, abc."""

SUBSETS = [0b000, 0b001, 0b010, 0b011, 0b100, 0b101, 0b110, 0b111]

THETA_TABLE = {
    "c": [2, 1, 1, 1, 1, 1, 1, 1],
    "k": [0, 0, 0, 0, 0, 0, 0, 0],
    "s": [0, 0, 0, 0, 0, 0, 0, 2],
    "s_perp": [2, 2, 2, 0, 2, 0, 0, 0],
    "r_M": [0, 1, 1, 2, 1, 2, 2, 3],
    "r_Mp": [0, 1, 1, 1, 1, 1, 1, 1],
    "n_M": [0, 0, 0, 0, 0, 0, 0, 0],
    "n": [0, 0, 0, 1, 0, 1, 1, 2],
    "bc": [2, 1, 1, 2, 1, 2, 2, 1],
}

THETA_KRUSHKAL = "3+3*B+X*B+A"
THETA_LV = "3*z+3*z^2+(x-1)*z^2+1"
THETA_BR = "3+3*Y+(X-1)+Y^2*Z^2"

BOUQUET_KRUSHKAL = "B+2+A"
BOUQUET_LV = "z^2+2*z+1"
BOUQUET_BR = "1+2*Y+Y^2*Z^2"

THETA_DELETED_EMBEDDED = "X*B+2*B+1"
THETA_DELETED_SPHERE_KRUSHKAL = "X+2+Y"
THETA_DELETED_SPHERE_LV = "(x-1)+2+(y-1)"
THETA_DELETED_SPHERE_BR = "(X-1)+2+Y"

# hold, hold, fail, fail
DELETION_PATTERN = (True, True, False, False)

NOTE_LV = "(1+z)^4"
NOTE_KRUSHKAL_PAIR = {
    "A^2+4*A+2*A*B+4+4*B+B^2",
    "A^2+4*A+4*A*B+2+4*B+B^2",
}
NOTE_SHARED_KRUSHKAL = "Y*A+4*Y+A+2*Y*B+3+2*B+X*Y*B+X+X*B^2"
