from __future__ import annotations

from pydantic import BaseModel, NonNegativeInt

from ..graph import Graph, from_edge_list
from .edge import Edge


class GraphModel(BaseModel):
    """
    JSON representation of a graph: `{"n": <vertex count>, "edges": [[u, v], ...]}`.
    """

    n: NonNegativeInt
    edges: list[Edge]

    @classmethod
    def from_graph(cls, graph: Graph) -> GraphModel:
        return cls(n=graph.n, edges=list(graph.edges()))

    def to_graph(self) -> Graph:
        """
        Creates the graph the model describes.

        Raises:
            GraphError: If an edge endpoint is out of range.
        """
        return from_edge_list(self.n, self.edges)
