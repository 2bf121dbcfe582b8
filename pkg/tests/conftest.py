import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import netcurv as nc

# 8-vertex worked example: deg(1)=4, deg(2)=5, edge (1,2) lies in the
# cycles 1-2-3-4 and 1-2-5 only
APPENDIX_EDGE_LIST = "1 2\n1 4\n1 5\n1 6\n2 3\n2 5\n2 7\n2 8\n3 4\n7 8\n"


@pytest.fixture(scope="session")
def appendix_graph():
    return nc.parse_edge_list(APPENDIX_EDGE_LIST)


@pytest.fixture(scope="session", autouse=True)
def _warm_transport_kernel():
    # first call JIT-compiles the min-cost-flow kernel; keep that out of
    # timed tests
    g = nc.Graph([(0, 1), (1, 2), (0, 2)])
    nc.orc(g, (0, 1))
