# -- Fixture registration
from .fixtures.graph_fixture import (
    c5,  # noqa: F401
    cli_runner,  # noqa: F401
    forked_path,  # noqa: F401
    p4,  # noqa: F401
    starfish3,  # noqa: F401
    three_k2_bar,  # noqa: F401
)
