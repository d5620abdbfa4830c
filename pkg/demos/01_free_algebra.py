"""
Words, polynomials and division in GF(p)<x1..xn>
=================================================

Monomials are words, multiplied by concatenation.  Polynomials keep their
terms in descending deglex order, so the first term is the tip.
"""

from freepc import Alphabet, FieldSpec, divide, normal_form
from freepc.wire.text import parse_poly

F, A = FieldSpec(7), Alphabet(2)

f = parse_poly("3*x1 + 1", F, A)
g = parse_poly("2*x2", F, A)
print("f*g =", f * g)
print("g*f =", g * f)          # noncommutative

tv = parse_poly("5*x1.x2 + 3*x2 + 1*x1 + 2", F, A).tip_view()
print("tip:", tv.tip, " ctip:", tv.ctip, " tail:", tv.tail)

###############################################################################
# Division writes g = sum c * u * f * v + r with a certificate of steps.
F2 = FieldSpec(2)
g = parse_poly("1*x1.x2.x1", F2, A)
f = parse_poly("1*x1.x2 + 1*x2", F2, A)
res = divide(g, [f])
for st in res.steps:
    print(f"step: divisor {st.divisor_index}, coeff {st.coeff}, left {st.left}, right {st.right}")
print("remainder:", res.remainder)
print("certificate holds:", res.check(g, [f]))
print("normal form:", normal_form(g, [f]))
