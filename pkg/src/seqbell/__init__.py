"""Sequential tripartite Bell-test simulator on GHZ-class states.

Density-matrix simulation of two Charlies measuring the third qubit in
sequence, evaluation of the Mermin and Svetlichny inequalities for each
Alice-Bob-Charlie pair, classical bounds certified by enumerating
deterministic local models, and closed-form feasibility windows for the
double-violation region.
"""

__version__ = "0.1.0"
