import os
import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from metricbasis.graph import from_edge_list  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def graphs(draw, min_n=1, max_n=9, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    if connected:
        # a random spanning tree keeps the draw connected
        order = draw(st.permutations(range(n)))
        for i in range(1, n):
            parent = order[draw(st.integers(0, i - 1))]
            e = tuple(sorted((order[i], parent)))
            if e not in chosen:
                chosen.append(e)
    return from_edge_list(n, chosen)


def connected_graphs(min_n=2, max_n=9):
    return graphs(min_n=min_n, max_n=max_n, connected=True)
