"""schucoder: a compiler and verification suite for Schumacher-coding circuits.

The package turns the reversible pseudocode of a constant-weight ranking
coder into explicit Toffoli-level gate arrays, simulates them classically
(bit vector + sign) and quantum mechanically (dense statevector, small
scale), counts their resources against the claimed asymptotics, and runs
the end-to-end compression-fidelity experiment at desk scale.

Modules
-------
combinatorics   exact rank/unrank bijection on (weight, value)-ordered strings
programs        high-level reversible register programs and their interpreter
ir              gate-level intermediate representation and circuit text format
compiler        lowering of the in-place coder programs to gate arrays
simclassical    exact basis-state simulator with phase-sign tracking
simstate        dense statevector simulator for small qubit counts
resources       gate/qubit counting and leading-coefficient fits
fidelity        ensembles, entropies, and the compression-fidelity experiment
cli             command-line entry point
"""

__version__ = "0.1.0"
