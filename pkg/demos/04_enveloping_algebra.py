# PBW straightening in U(gl(m)), the Weyl realization, and central elements.

from capelli import EnvelopingAlgebra, hc_eigenvalue, is_central, ugl_to_weyl

alg = EnvelopingAlgebra(2)
E12, E21 = alg.gen(1, 2), alg.gen(2, 1)

# Products are straightened onto the lowering < Cartan < raising basis.
print("E[1,2] E[2,1] =", E12 * E21)

# The homomorphism E[a,b] -> sum_i x[a,i] D[b,i] realizes everything as
# differential operators; it is multiplicative.
print("image of E[1,2]:", ugl_to_weyl(E12, 2))
product = E12 * E21
assert ugl_to_weyl(product, 2) == ugl_to_weyl(E12, 2) * ugl_to_weyl(E21, 2)

# The trace is central; a single off-diagonal generator is not.
trace = alg.gen(1, 1) + alg.gen(2, 2)
print("trace central:", bool(is_central(trace)))
witness = is_central(E12)
print("E[1,2] central:", bool(witness), "- offending generator:", witness.generator)

# The quadratic Gelfand invariant and its highest-weight eigenvalues.
c2 = alg.zero()
for a in (1, 2):
    for b in (1, 2):
        c2 = c2 + alg.gen(a, b) * alg.gen(b, a)
print("C2 =", c2)
for weights in [(3, 1), (5, 2)]:
    print(f"eigenvalue of C2 at weight {weights}:", hc_eigenvalue(c2, weights))
