from hypothesis import strategies as st

from qellip import FiberDatum, SurfaceConfig, min_chi


def cfg(p, g, chi, t, tame=0, wild=()):
    fibers = [FiberDatum.tame(p)] * tame + [FiberDatum.wild(a) for a in wild]
    return SurfaceConfig(p, g, chi, t, tuple(fibers))


@st.composite
def valid_configs(draw, max_fibers=6):
    p = draw(st.sampled_from([2, 3]))
    g = draw(st.integers(0, 8))
    chi = draw(st.integers(min_chi(g), min_chi(g) + 6))
    t = draw(st.integers(0, 4))
    n_tame = draw(st.integers(0, max_fibers))
    wild = draw(st.lists(st.integers(0, p - 1), max_size=t))
    return cfg(p, g, chi, t, tame=n_tame, wild=wild)
