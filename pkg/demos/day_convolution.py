"""Convolution of presheaves on the right-projection 2-chain."""
from skewcat.corpus import right_projection
from skewcat.promonoidal import (DayContext, convolution_adjunction_check, convolution_axioms,
                                 sample_presheaves, yoneda_strong_monoidal)
from skewcat.skewcore import summarize

ctx = DayContext(right_projection(2))
y0, y1 = ctx.representable(0), ctx.representable(1)
for M, N in ((y0, y0), (y0, y1), (y1, y0), (y1, y1)):
    P = ctx.product(M, N)
    print(f"{P.name}: sizes", {c: len(P.ob[c]) for c in ctx.T.objects})

rep = yoneda_strong_monoidal(ctx)
print("y(A)*y(B) ~ y(A(x)B):", rep.ok)

sample = sample_presheaves(ctx, seed=1)
adj = convolution_adjunction_check(ctx, sample[0], sample[-1], sample[1])
print(f"Hom(M*N,K) = {adj.left}, Hom(M,[N,K]) = {adj.right}, ok={adj.ok}")
print("axioms on a sample:", summarize(convolution_axioms(ctx, seed=1)))
