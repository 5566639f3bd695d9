"""Standard small instances used by the tests, demos and the CLI."""
from __future__ import annotations

from .fincat import chain, terminal
from .skewcore import thin_closed, thin_monoidal, thin_comonad


def heyting_hom(n):
    top = n - 1
    return lambda B, C: top if B <= C else C


def heyting_chain(n):
    """The n-chain with [B,C] = top if B <= C else C and I = top."""
    return thin_closed(chain(n), heyting_hom(n), n - 1, name=f"heyting{n}")


def meet_monoidal(n):
    """The n-chain with A (x) B = min(A, B) and I = top."""
    return thin_monoidal(chain(n), min, n - 1, name=f"meet{n}")


def right_projection(n=2, unit=None):
    """A (x) B = B on the n-chain; unit defaults to the top element."""
    unit = n - 1 if unit is None else unit
    return thin_monoidal(chain(n), lambda A, B: B, unit, name=f"rightproj{n}")


def terminal_closed():
    C = terminal()
    return thin_closed(C, lambda A, B: 0, 0, name="terminal")


def terminal_monoidal():
    return thin_monoidal(terminal(), lambda A, B: 0, 0, name="terminal")


def chain_comonad(S, values):
    """Thin closed comonad on a chain structure from the object map A -> values[A]."""
    values = tuple(values)
    return thin_comonad(S, lambda A: values[A])


def idempotent_interior_maps(n):
    """Monotone G on the n-chain with G <= id, GG = G and G(top) = top."""
    import itertools

    out = []
    for vals in itertools.product(range(n), repeat=n):
        if any(vals[k] > k for k in range(n)):
            continue
        if any(vals[k] > vals[k + 1] for k in range(n - 1)):
            continue
        if any(vals[vals[k]] != vals[k] for k in range(n)):
            continue
        if vals[n - 1] != n - 1:
            continue
        out.append(vals)
    return out


def example_workspace():
    """A small workspace: the Heyting 3-chain with a comonad and its self-enrichment,
    the right-projection and meet tensors, and an object-Z promonoidal structure."""
    from .enriched import self_enrichment
    from .io import Workspace
    from .skewcore import identity_comonad

    ws = Workspace()
    H, R, M = heyting_chain(3), right_projection(2), meet_monoidal(3)
    ws.add_category("chain3", H.base)
    ws.add_category("chain2", R.base)
    ws.add_structure("heyting3", H, "chain3")
    ws.add_structure("rightproj2", R, "chain2")
    ws.add_structure("meet3", M, "chain3")
    ws.add_comonad("interior", chain_comonad(H, (0, 0, 2)), "heyting3")
    ws.add_comonad("identity", identity_comonad(H), "heyting3")
    ws.add_enriched("heyting3.self", self_enrichment(H), "heyting3")
    ws.add_promonoidal("Z1", {"kind": "object-Z", "category": "chain2", "Z": "1"})
    return ws


def small_categories():
    """Finite categories with at most three objects."""
    from .fincat import cyclic_group, discrete, parallel_pair

    return [terminal(), chain(2), chain(3), discrete((0, 1)), cyclic_group(2), parallel_pair()]


def enriched_corpus():
    """Named V-categories over poset bases and over Set (sets of size at most 2)."""
    from .enriched import self_enrichment, set_enriched, unit_vcategory
    from .fincat import cyclic_group
    from .setcalc import standard_fragment, virtual_set_closed

    H2, H3 = heyting_chain(2), heyting_chain(3)
    Set = virtual_set_closed(standard_fragment(2))
    return [
        ("heyting2.self", self_enrichment(H2)),
        ("heyting3.self", self_enrichment(H3)),
        ("heyting3.unit", unit_vcategory(H3)),
        ("set2.self", self_enrichment(Set)),
        ("chain2.set", set_enriched(chain(2))),
        ("c2.set", set_enriched(cyclic_group(2))),
    ]


def yoneda_corpus():
    """(name, A, K, T) with T representable or the identity into the self-enrichment.

    Over Set the representable at the two-element set is left out: its presheaf
    homs involve function sets of size 2^16.
    """
    from .enriched import identity_vfunctor, representable_vfunctor

    out = []
    for name, A in enriched_corpus():
        small = [X for X in A.objects if getattr(X, "size", 0) < 2]
        Ts = [(f"A({X!r},-)", representable_vfunctor(A, X)) for X in small]
        if A.name.endswith("(self)"):
            Ts.append(("id", identity_vfunctor(A)))
        for K in A.objects:
            for tname, T in Ts:
                out.append((f"{name} K={K!r} T={tname}", A, K, T))
    return out
