# Normal-ordered differential operators on an m x n grid of variables.

from capelli import WeylAlgebra, weyl_apply

alg = WeylAlgebra(1, 1)
x, d = alg.x(1, 1), alg.d(1, 1)

# The defining relation, D x = x D + 1, in normal order:
print("D x =", d * x)

# Higher powers contract with factorial-binomial coefficients:
print("D^2 x^2 =", (d * d) * (x * x))
print("D^3 x^3 =", (d ** 3) * (x ** 3))

# Distinct variables commute.
grid = WeylAlgebra(2, 2)
print("D[1,1] x[2,2] =", grid.d(1, 1) * grid.x(2, 2))
print("D[1,1] x[1,1] =", grid.d(1, 1) * grid.x(1, 1))

# Operators act on polynomials; the Euler operator reads off the degree.
euler = x * d
f = x ** 5
print("x D applied to x^5 =", weyl_apply(euler, f))

# The whole calculus is exact; nothing here is numeric.
laplacian_piece = grid.d(1, 1) * grid.d(1, 1)
g = grid.x(1, 1) ** 4
print("D[1,1]^2 applied to x[1,1]^4 =", weyl_apply(laplacian_piece, g))
