"""The LowDegreeReport class summarises the structure of the subgraph
induced by the low degree vertices L(C) = {v : d(v) < C}

"""

from dataclasses import asdict, dataclass


@dataclass(frozen=True)
class LowDegreeReport:
    """The result of low_degree_structure_report

    Attributes
    ----------
    threshold: int
        The degree threshold C
    ell: int
        The structural bound checked by ``within_bounds``
    low_count: int
        |L(C)|
    max_low_covertex_group: int
        The largest number of low vertices sharing one common neighbour
    max_low_component_size: int
        The size of the largest connected set of low vertices
    all_low_components_trees: bool
        Whether every connected set of low vertices induces a tree

    """
    threshold: int
    ell: int
    low_count: int
    max_low_covertex_group: int
    max_low_component_size: int
    all_low_components_trees: bool

    def within_bounds(self):
        """Checks that no ell + 2 low vertices share a neighbour, that
        connected low sets have at most ell + 1 vertices and that they
        are trees"""
        return (self.max_low_covertex_group <= self.ell + 1
                and self.max_low_component_size <= self.ell + 1
                and self.all_low_components_trees)

    def to_dict(self):
        """Collects the fields and the within_bounds verdict in a dict"""
        document = asdict(self)
        document["within_bounds"] = self.within_bounds()
        return document
