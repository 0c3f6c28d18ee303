# %% [markdown]
# # Exact arithmetic in Q(sqrt 5)
# Every coordinate is a + b*sqrt(d) with rational a, b. Order and floor are
# decided by integer comparisons, so counts never depend on rounding.

# %%
from fractions import Fraction

from periodcollapse import base_pair, field, parse_number
from periodcollapse.field import floor

Q5 = field(5)
s5 = Q5.sqrt
x = Q5(Fraction(5, 2), Fraction(1, 2))
print(x, "~", float(x))
print("x * conjugate =", x * x.conjugate())

# %%
# the two legs of the base triangle are roots of x^2 - 5x + 5
h0, k0 = base_pair(5)
print("h0 =", h0, " k0 =", k0)
print("h0 + k0 =", h0 + k0, " h0 * k0 =", h0 * k0)

# %%
# floor of multiples of h0: this is the sequence that breaks periodicity later
print([floor(h0 * t) for t in range(1, 16)])

# %%
# literals round-trip through the scene grammar
print(parse_number("5/2-1/2*s5") == k0)
