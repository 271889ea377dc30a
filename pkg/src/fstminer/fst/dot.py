import graphviz

from fstminer.data import Dictionary

from .cfst import CFst


def to_dot(cfst: CFst, dictionary: Dictionary, name: str = "cfst") -> str:
    """Graphviz source; the initial state gets an arrow, finals a double circle."""
    graph = graphviz.Digraph(name=name)
    graph.attr(rankdir="LR")
    graph.attr("node", shape="circle")
    graph.node("start", shape="point")
    for state in cfst.states:
        shape = "doublecircle" if cfst.is_final(state) else "circle"
        graph.node(f"q{state}", shape=shape)
    graph.edge("start", f"q{cfst.initial}")
    for t in sorted(cfst.transitions):
        label = f"{t.input.to_text(dictionary)}:{t.output.to_text(dictionary)}"
        graph.edge(f"q{t.source}", f"q{t.target}", label=label)
    for source, target in sorted(cfst.epsilons):
        graph.edge(f"q{source}", f"q{target}", label="eps", style="dashed")
    return graph.source
