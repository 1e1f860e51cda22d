from hypothesis import strategies as st

from quantum_schubert.grassmannian.schubert_index import GrContext


@st.composite
def contexts(draw, max_n=6):
    n = draw(st.integers(min_value=2, max_value=max_n))
    r = draw(st.integers(min_value=1, max_value=n - 1))
    return GrContext(n, r)


@st.composite
def indices_in(draw, ctx):
    return draw(st.sampled_from(ctx.indices()))


@st.composite
def index_tuples(draw, size, max_n=6):
    """A context together with `size` indices from it"""
    ctx = draw(contexts(max_n=max_n))
    return ctx, tuple(draw(indices_in(ctx)) for _ in range(size))
