# Permutations, the rational group algebra, and Jucys-Murphy elements.

from fractions import Fraction

from capelli import GroupAlgebraElement, Permutation, compose, jm_element

# Permutations parse from cycle notation or one-line notation.
s = Permutation.parse("(1 2)(3 4)")
t = Permutation.parse("[2,3,1,4]")
print("s =", s, " t =", t)

# Composition applies the right factor first.
print("s t =", compose(s, t))
print("t s =", compose(t, s))
print("s^-1 =", s.inverse(), " sign(t) =", t.sign())

# Group algebra elements are sparse rational combinations.
e = GroupAlgebraElement.one(2)
swap = GroupAlgebraElement.from_permutation(Permutation.parse("(1 2)"))
sym = Fraction(1, 2) * (e + swap)
alt = Fraction(1, 2) * (e - swap)
print("symmetrizer:", sym)
print("antisymmetrizer:", alt)
print("product (orthogonal idempotents):", sym * alt)
print("sym is idempotent:", sym * sym == sym)

# The Jucys-Murphy element X_r = (1 r) + ... + (r-1 r).
for r in range(1, 5):
    print(f"X_{r} in S_4:", jm_element(4, r))

# They commute with each other.
x3, x4 = jm_element(4, 3), jm_element(4, 4)
print("X_3 X_4 == X_4 X_3:", x3 * x4 == x4 * x3)
