"""Graphic matroids."""

import networkx as nx

from .source import MatroidSource


class GraphSource(MatroidSource):
    """
    The cycle matroid of a multigraph.

    ``data`` holds ``vertices`` (a count or a list of names) and ``edges``, one
    pair of endpoints per element, in ground-set order.
    """

    kind = 'graph'

    def graph(self) -> nx.MultiGraph:
        """
        The multigraph, with the element index as edge key.

        Returns
        -------
        nx.MultiGraph
            The graph.
        """
        vertices = self.data['vertices']
        if isinstance(vertices, int):
            vertices = range(vertices)
        edges = self.data['edges']
        if len(edges) != self.size:
            raise ValueError(f'{len(edges)} edges given for {self.size} elements')
        graph = nx.MultiGraph()
        graph.add_nodes_from(vertices)
        for key, (u, v) in enumerate(edges):
            if u not in graph or v not in graph:
                raise ValueError(f'Edge {self.elements[key]} uses an unknown vertex')
            graph.add_edge(u, v, key=key)
        return graph

    def ranks(self) -> list[int]:
        graph = self.graph()
        edges = list(graph.edges(keys=True))
        order = graph.number_of_nodes()
        ranks = []
        for mask in range(1 << self.size):
            spanning = nx.MultiGraph()
            spanning.add_nodes_from(graph)
            spanning.add_edges_from(e for e in edges if mask >> e[2] & 1)
            ranks.append(order - nx.number_connected_components(spanning))
        return ranks
