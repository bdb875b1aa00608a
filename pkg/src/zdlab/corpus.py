"""Built-in corpus of (ring ; ideal generators) instances."""

DEFAULT_CORPUS = """\
# ring ; ideal generators
# integral domains: girth 4 or infinite
Z2 ; 1
Z3 ; 1
Z5 ; 1
Z7 ; 1
Z3 ; 0
# residue rings
Z4 ; 2
Z4 ; 1
Z6 ; 2
Z6 ; 3
Z8 ; 4
Z8 ; 2
Z9 ; 3
Z10 ; 5
Z12 ; 2
Z12 ; 6
Z16 ; 4
Z18 ; 6
Z24 ; 12
Z25 ; 5
Z27 ; 9
Z27 ; 3
# products
Z2 x Z2 ; (0, 1)
Z2 x Z2 ; (1, 1)
Z2 x Z3 ; (1, 0)
Z3 x Z5 ; (0, 1)
Z4 x Z2 ; (2, 0)
Z2 x Z4 ; (0, 2)
Z2 x Z2 x Z2 ; (1, 0, 0)
Z2 x Z2 x Z2 ; (1, 1, 0)
Z2 x Z2 x Z3 ; (0, 0, 1)
Z4 x Z3 ; (2, 0)
# monomial quotients
Z2[X]/(X^2) ; 1
Z2[X]/(X^3) ; X
Z2[X]/(X^4) ; X^2
Z3[X]/(X^2) ; X
Z4[X]/(X^2) ; 2
Z2[X,Y]/(X^3, X^2*Y, Y^2) ; X, Y
Z2[X,Y]/(X^2, Y^2) ; X, Y
Z2[X,Y]/(X^2, X*Y, Y^2) ; X, Y
Z2[X,Y]/(X^2, X*Y, Y^3) ; X
Z2[X,Y,Z]/(X*Y, X*Z, Y*Z, X^3, Y^2, Z^2) ; X, Y, Z
Z2[X,Y,Z]/(X^3, X*Y, Y^2, Z^2) ; Z
"""
